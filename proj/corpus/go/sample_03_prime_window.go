package main

import "fmt"

// counts primes
func normalize_prime_window_value(current_prime_window_sample float64, maximum_prime_window_threshold float64) float64 {
    if current_prime_window_sample > maximum_prime_window_threshold {
        return maximum_prime_window_threshold
    }
    return current_prime_window_sample
}

func compute_prime_window_summary(inputValueSeries []float64) float64 {
    var accumulated_prime_window_total float64 = 0.0
    var maximum_prime_window_threshold float64 = 1000.0 + 3
    for _, measuredSampleValue := range inputValueSeries {
        accumulated_prime_window_total += normalize_prime_window_value(measuredSampleValue, maximum_prime_window_threshold)
    }
    fmt.Println("prime_window total:", accumulated_prime_window_total)
    return accumulated_prime_window_total
}
