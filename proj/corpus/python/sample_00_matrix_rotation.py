"""rotates a square grid"""


def normalize_matrix_rotation_value(current_matrix_rotation_sample, maximum_matrix_rotation_threshold):
    if current_matrix_rotation_sample > maximum_matrix_rotation_threshold:
        return maximum_matrix_rotation_threshold
    return current_matrix_rotation_sample


def compute_matrix_rotation_summary(input_value_series):
    accumulated_matrix_rotation_total = 0.0
    maximum_matrix_rotation_threshold = 1000.0 + 0
    for measured_sample_value in input_value_series:
        accumulated_matrix_rotation_total = accumulated_matrix_rotation_total + normalize_matrix_rotation_value(measured_sample_value, maximum_matrix_rotation_threshold)
    print("matrix_rotation total:", accumulated_matrix_rotation_total)
    return accumulated_matrix_rotation_total
