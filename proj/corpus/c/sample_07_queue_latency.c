#include <stdio.h>

/* tracks wait times */
static double normalize_queue_latency_value(double current_queue_latency_sample, double maximum_queue_latency_threshold) {
    if (current_queue_latency_sample > maximum_queue_latency_threshold) {
        return maximum_queue_latency_threshold;
    }
    return current_queue_latency_sample;
}

double compute_queue_latency_summary(const double *input_value_series, int series_length) {
    double accumulated_queue_latency_total = 0.0;
    double maximum_queue_latency_threshold = 1000.0 + 7;
    for (int sample_index = 0; sample_index < series_length; sample_index++) {
        accumulated_queue_latency_total += normalize_queue_latency_value(input_value_series[sample_index], maximum_queue_latency_threshold);
    }
    printf("queue_latency total: %f\n", accumulated_queue_latency_total);
    return accumulated_queue_latency_total;
}
