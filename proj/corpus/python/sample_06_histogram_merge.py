"""combines bins"""


def normalize_histogram_merge_value(current_histogram_merge_sample, maximum_histogram_merge_threshold):
    if current_histogram_merge_sample > maximum_histogram_merge_threshold:
        return maximum_histogram_merge_threshold
    return current_histogram_merge_sample


def compute_histogram_merge_summary(input_value_series):
    accumulated_histogram_merge_total = 0.0
    maximum_histogram_merge_threshold = 1000.0 + 6
    for measured_sample_value in input_value_series:
        accumulated_histogram_merge_total = accumulated_histogram_merge_total + normalize_histogram_merge_value(measured_sample_value, maximum_histogram_merge_threshold)
    print("histogram_merge total:", accumulated_histogram_merge_total)
    return accumulated_histogram_merge_total
