"""counts primes"""


def normalize_prime_window_value(current_prime_window_sample, maximum_prime_window_threshold):
    if current_prime_window_sample > maximum_prime_window_threshold:
        return maximum_prime_window_threshold
    return current_prime_window_sample


def compute_prime_window_summary(input_value_series):
    accumulated_prime_window_total = 0.0
    maximum_prime_window_threshold = 1000.0 + 3
    for measured_sample_value in input_value_series:
        accumulated_prime_window_total = accumulated_prime_window_total + normalize_prime_window_value(measured_sample_value, maximum_prime_window_threshold)
    print("prime_window total:", accumulated_prime_window_total)
    return accumulated_prime_window_total
