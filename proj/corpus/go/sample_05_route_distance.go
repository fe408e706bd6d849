package main

import "fmt"

// sums hops
func normalize_route_distance_value(current_route_distance_sample float64, maximum_route_distance_threshold float64) float64 {
    if current_route_distance_sample > maximum_route_distance_threshold {
        return maximum_route_distance_threshold
    }
    return current_route_distance_sample
}

func compute_route_distance_summary(inputValueSeries []float64) float64 {
    var accumulated_route_distance_total float64 = 0.0
    var maximum_route_distance_threshold float64 = 1000.0 + 5
    for _, measuredSampleValue := range inputValueSeries {
        accumulated_route_distance_total += normalize_route_distance_value(measuredSampleValue, maximum_route_distance_threshold)
    }
    fmt.Println("route_distance total:", accumulated_route_distance_total)
    return accumulated_route_distance_total
}
