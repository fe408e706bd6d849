#include <iostream>
#include <vector>

// sums hops
double normalize_route_distance_value(double current_route_distance_sample, double maximum_route_distance_threshold) {
    return current_route_distance_sample > maximum_route_distance_threshold ? maximum_route_distance_threshold : current_route_distance_sample;
}

double compute_route_distance_summary(const std::vector<double> &input_value_series) {
    double accumulated_route_distance_total = 0.0;
    double maximum_route_distance_threshold = 1000.0 + 5;
    for (double measured_sample_value : input_value_series) {
        accumulated_route_distance_total += normalize_route_distance_value(measured_sample_value, maximum_route_distance_threshold);
    }
    std::cout << "route_distance total: " << accumulated_route_distance_total << std::endl;
    return accumulated_route_distance_total;
}
