#include <iostream>
#include <vector>

// counts primes
double normalize_prime_window_value(double current_prime_window_sample, double maximum_prime_window_threshold) {
    return current_prime_window_sample > maximum_prime_window_threshold ? maximum_prime_window_threshold : current_prime_window_sample;
}

double compute_prime_window_summary(const std::vector<double> &input_value_series) {
    double accumulated_prime_window_total = 0.0;
    double maximum_prime_window_threshold = 1000.0 + 3;
    for (double measured_sample_value : input_value_series) {
        accumulated_prime_window_total += normalize_prime_window_value(measured_sample_value, maximum_prime_window_threshold);
    }
    std::cout << "prime_window total: " << accumulated_prime_window_total << std::endl;
    return accumulated_prime_window_total;
}
