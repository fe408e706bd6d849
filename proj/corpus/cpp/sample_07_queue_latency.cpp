#include <iostream>
#include <vector>

// tracks wait times
double normalize_queue_latency_value(double current_queue_latency_sample, double maximum_queue_latency_threshold) {
    return current_queue_latency_sample > maximum_queue_latency_threshold ? maximum_queue_latency_threshold : current_queue_latency_sample;
}

double compute_queue_latency_summary(const std::vector<double> &input_value_series) {
    double accumulated_queue_latency_total = 0.0;
    double maximum_queue_latency_threshold = 1000.0 + 7;
    for (double measured_sample_value : input_value_series) {
        accumulated_queue_latency_total += normalize_queue_latency_value(measured_sample_value, maximum_queue_latency_threshold);
    }
    std::cout << "queue_latency total: " << accumulated_queue_latency_total << std::endl;
    return accumulated_queue_latency_total;
}
