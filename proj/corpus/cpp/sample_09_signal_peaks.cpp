#include <iostream>
#include <vector>

// detects maxima
double normalize_signal_peaks_value(double current_signal_peaks_sample, double maximum_signal_peaks_threshold) {
    return current_signal_peaks_sample > maximum_signal_peaks_threshold ? maximum_signal_peaks_threshold : current_signal_peaks_sample;
}

double compute_signal_peaks_summary(const std::vector<double> &input_value_series) {
    double accumulated_signal_peaks_total = 0.0;
    double maximum_signal_peaks_threshold = 1000.0 + 9;
    for (double measured_sample_value : input_value_series) {
        accumulated_signal_peaks_total += normalize_signal_peaks_value(measured_sample_value, maximum_signal_peaks_threshold);
    }
    std::cout << "signal_peaks total: " << accumulated_signal_peaks_total << std::endl;
    return accumulated_signal_peaks_total;
}
