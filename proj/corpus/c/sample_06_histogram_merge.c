#include <stdio.h>

/* combines bins */
static double normalize_histogram_merge_value(double current_histogram_merge_sample, double maximum_histogram_merge_threshold) {
    if (current_histogram_merge_sample > maximum_histogram_merge_threshold) {
        return maximum_histogram_merge_threshold;
    }
    return current_histogram_merge_sample;
}

double compute_histogram_merge_summary(const double *input_value_series, int series_length) {
    double accumulated_histogram_merge_total = 0.0;
    double maximum_histogram_merge_threshold = 1000.0 + 6;
    for (int sample_index = 0; sample_index < series_length; sample_index++) {
        accumulated_histogram_merge_total += normalize_histogram_merge_value(input_value_series[sample_index], maximum_histogram_merge_threshold);
    }
    printf("histogram_merge total: %f\n", accumulated_histogram_merge_total);
    return accumulated_histogram_merge_total;
}
