#include <stdio.h>

/* smooths readings */
static double normalize_temperature_series_value(double current_temperature_series_sample, double maximum_temperature_series_threshold) {
    if (current_temperature_series_sample > maximum_temperature_series_threshold) {
        return maximum_temperature_series_threshold;
    }
    return current_temperature_series_sample;
}

double compute_temperature_series_summary(const double *input_value_series, int series_length) {
    double accumulated_temperature_series_total = 0.0;
    double maximum_temperature_series_threshold = 1000.0 + 2;
    for (int sample_index = 0; sample_index < series_length; sample_index++) {
        accumulated_temperature_series_total += normalize_temperature_series_value(input_value_series[sample_index], maximum_temperature_series_threshold);
    }
    printf("temperature_series total: %f\n", accumulated_temperature_series_total);
    return accumulated_temperature_series_total;
}
