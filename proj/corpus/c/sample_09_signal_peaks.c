#include <stdio.h>

/* detects maxima */
static double normalize_signal_peaks_value(double current_signal_peaks_sample, double maximum_signal_peaks_threshold) {
    if (current_signal_peaks_sample > maximum_signal_peaks_threshold) {
        return maximum_signal_peaks_threshold;
    }
    return current_signal_peaks_sample;
}

double compute_signal_peaks_summary(const double *input_value_series, int series_length) {
    double accumulated_signal_peaks_total = 0.0;
    double maximum_signal_peaks_threshold = 1000.0 + 9;
    for (int sample_index = 0; sample_index < series_length; sample_index++) {
        accumulated_signal_peaks_total += normalize_signal_peaks_value(input_value_series[sample_index], maximum_signal_peaks_threshold);
    }
    printf("signal_peaks total: %f\n", accumulated_signal_peaks_total);
    return accumulated_signal_peaks_total;
}
