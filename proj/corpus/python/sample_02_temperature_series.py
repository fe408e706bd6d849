"""smooths readings"""


def normalize_temperature_series_value(current_temperature_series_sample, maximum_temperature_series_threshold):
    if current_temperature_series_sample > maximum_temperature_series_threshold:
        return maximum_temperature_series_threshold
    return current_temperature_series_sample


def compute_temperature_series_summary(input_value_series):
    accumulated_temperature_series_total = 0.0
    maximum_temperature_series_threshold = 1000.0 + 2
    for measured_sample_value in input_value_series:
        accumulated_temperature_series_total = accumulated_temperature_series_total + normalize_temperature_series_value(measured_sample_value, maximum_temperature_series_threshold)
    print("temperature_series total:", accumulated_temperature_series_total)
    return accumulated_temperature_series_total
