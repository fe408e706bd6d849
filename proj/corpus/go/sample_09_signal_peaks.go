package main

import "fmt"

// detects maxima
func normalize_signal_peaks_value(current_signal_peaks_sample float64, maximum_signal_peaks_threshold float64) float64 {
    if current_signal_peaks_sample > maximum_signal_peaks_threshold {
        return maximum_signal_peaks_threshold
    }
    return current_signal_peaks_sample
}

func compute_signal_peaks_summary(inputValueSeries []float64) float64 {
    var accumulated_signal_peaks_total float64 = 0.0
    var maximum_signal_peaks_threshold float64 = 1000.0 + 9
    for _, measuredSampleValue := range inputValueSeries {
        accumulated_signal_peaks_total += normalize_signal_peaks_value(measuredSampleValue, maximum_signal_peaks_threshold)
    }
    fmt.Println("signal_peaks total:", accumulated_signal_peaks_total)
    return accumulated_signal_peaks_total
}
