#include <stdio.h>

/* sums hops */
static double normalize_route_distance_value(double current_route_distance_sample, double maximum_route_distance_threshold) {
    if (current_route_distance_sample > maximum_route_distance_threshold) {
        return maximum_route_distance_threshold;
    }
    return current_route_distance_sample;
}

double compute_route_distance_summary(const double *input_value_series, int series_length) {
    double accumulated_route_distance_total = 0.0;
    double maximum_route_distance_threshold = 1000.0 + 5;
    for (int sample_index = 0; sample_index < series_length; sample_index++) {
        accumulated_route_distance_total += normalize_route_distance_value(input_value_series[sample_index], maximum_route_distance_threshold);
    }
    printf("route_distance total: %f\n", accumulated_route_distance_total);
    return accumulated_route_distance_total;
}
