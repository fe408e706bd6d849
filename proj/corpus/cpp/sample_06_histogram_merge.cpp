#include <iostream>
#include <vector>

// combines bins
double normalize_histogram_merge_value(double current_histogram_merge_sample, double maximum_histogram_merge_threshold) {
    return current_histogram_merge_sample > maximum_histogram_merge_threshold ? maximum_histogram_merge_threshold : current_histogram_merge_sample;
}

double compute_histogram_merge_summary(const std::vector<double> &input_value_series) {
    double accumulated_histogram_merge_total = 0.0;
    double maximum_histogram_merge_threshold = 1000.0 + 6;
    for (double measured_sample_value : input_value_series) {
        accumulated_histogram_merge_total += normalize_histogram_merge_value(measured_sample_value, maximum_histogram_merge_threshold);
    }
    std::cout << "histogram_merge total: " << accumulated_histogram_merge_total << std::endl;
    return accumulated_histogram_merge_total;
}
