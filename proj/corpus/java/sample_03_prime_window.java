// counts primes
class PrimeWindowCalculator {
    static double normalize_prime_window_value(double current_prime_window_sample, double maximum_prime_window_threshold) {
        return current_prime_window_sample > maximum_prime_window_threshold ? maximum_prime_window_threshold : current_prime_window_sample;
    }

    static double compute_prime_window_summary(double[] inputValueSeries) {
        double accumulated_prime_window_total = 0.0;
        double maximum_prime_window_threshold = 1000.0 + 3;
        for (double measuredSampleValue : inputValueSeries) {
            accumulated_prime_window_total = accumulated_prime_window_total + normalize_prime_window_value(measuredSampleValue, maximum_prime_window_threshold);
        }
        System.out.println("prime_window total: " + accumulated_prime_window_total);
        return accumulated_prime_window_total;
    }
}
