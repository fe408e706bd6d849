"""tracks wait times"""


def normalize_queue_latency_value(current_queue_latency_sample, maximum_queue_latency_threshold):
    if current_queue_latency_sample > maximum_queue_latency_threshold:
        return maximum_queue_latency_threshold
    return current_queue_latency_sample


def compute_queue_latency_summary(input_value_series):
    accumulated_queue_latency_total = 0.0
    maximum_queue_latency_threshold = 1000.0 + 7
    for measured_sample_value in input_value_series:
        accumulated_queue_latency_total = accumulated_queue_latency_total + normalize_queue_latency_value(measured_sample_value, maximum_queue_latency_threshold)
    print("queue_latency total:", accumulated_queue_latency_total)
    return accumulated_queue_latency_total
