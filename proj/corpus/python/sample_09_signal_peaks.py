"""detects maxima"""


def normalize_signal_peaks_value(current_signal_peaks_sample, maximum_signal_peaks_threshold):
    if current_signal_peaks_sample > maximum_signal_peaks_threshold:
        return maximum_signal_peaks_threshold
    return current_signal_peaks_sample


def compute_signal_peaks_summary(input_value_series):
    accumulated_signal_peaks_total = 0.0
    maximum_signal_peaks_threshold = 1000.0 + 9
    for measured_sample_value in input_value_series:
        accumulated_signal_peaks_total = accumulated_signal_peaks_total + normalize_signal_peaks_value(measured_sample_value, maximum_signal_peaks_threshold)
    print("signal_peaks total:", accumulated_signal_peaks_total)
    return accumulated_signal_peaks_total
