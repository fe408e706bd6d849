"""sums hops"""


def normalize_route_distance_value(current_route_distance_sample, maximum_route_distance_threshold):
    if current_route_distance_sample > maximum_route_distance_threshold:
        return maximum_route_distance_threshold
    return current_route_distance_sample


def compute_route_distance_summary(input_value_series):
    accumulated_route_distance_total = 0.0
    maximum_route_distance_threshold = 1000.0 + 5
    for measured_sample_value in input_value_series:
        accumulated_route_distance_total = accumulated_route_distance_total + normalize_route_distance_value(measured_sample_value, maximum_route_distance_threshold)
    print("route_distance total:", accumulated_route_distance_total)
    return accumulated_route_distance_total
