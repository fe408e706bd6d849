package main

import "fmt"

// combines bins
func normalize_histogram_merge_value(current_histogram_merge_sample float64, maximum_histogram_merge_threshold float64) float64 {
    if current_histogram_merge_sample > maximum_histogram_merge_threshold {
        return maximum_histogram_merge_threshold
    }
    return current_histogram_merge_sample
}

func compute_histogram_merge_summary(inputValueSeries []float64) float64 {
    var accumulated_histogram_merge_total float64 = 0.0
    var maximum_histogram_merge_threshold float64 = 1000.0 + 6
    for _, measuredSampleValue := range inputValueSeries {
        accumulated_histogram_merge_total += normalize_histogram_merge_value(measuredSampleValue, maximum_histogram_merge_threshold)
    }
    fmt.Println("histogram_merge total:", accumulated_histogram_merge_total)
    return accumulated_histogram_merge_total
}
