#include <stdio.h>

/* counts primes */
static double normalize_prime_window_value(double current_prime_window_sample, double maximum_prime_window_threshold) {
    if (current_prime_window_sample > maximum_prime_window_threshold) {
        return maximum_prime_window_threshold;
    }
    return current_prime_window_sample;
}

double compute_prime_window_summary(const double *input_value_series, int series_length) {
    double accumulated_prime_window_total = 0.0;
    double maximum_prime_window_threshold = 1000.0 + 3;
    for (int sample_index = 0; sample_index < series_length; sample_index++) {
        accumulated_prime_window_total += normalize_prime_window_value(input_value_series[sample_index], maximum_prime_window_threshold);
    }
    printf("prime_window total: %f\n", accumulated_prime_window_total);
    return accumulated_prime_window_total;
}
