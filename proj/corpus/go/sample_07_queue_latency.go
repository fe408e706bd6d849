package main

import "fmt"

// tracks wait times
func normalize_queue_latency_value(current_queue_latency_sample float64, maximum_queue_latency_threshold float64) float64 {
    if current_queue_latency_sample > maximum_queue_latency_threshold {
        return maximum_queue_latency_threshold
    }
    return current_queue_latency_sample
}

func compute_queue_latency_summary(inputValueSeries []float64) float64 {
    var accumulated_queue_latency_total float64 = 0.0
    var maximum_queue_latency_threshold float64 = 1000.0 + 7
    for _, measuredSampleValue := range inputValueSeries {
        accumulated_queue_latency_total += normalize_queue_latency_value(measuredSampleValue, maximum_queue_latency_threshold)
    }
    fmt.Println("queue_latency total:", accumulated_queue_latency_total)
    return accumulated_queue_latency_total
}
