package main

import "fmt"

// smooths readings
func normalize_temperature_series_value(current_temperature_series_sample float64, maximum_temperature_series_threshold float64) float64 {
    if current_temperature_series_sample > maximum_temperature_series_threshold {
        return maximum_temperature_series_threshold
    }
    return current_temperature_series_sample
}

func compute_temperature_series_summary(inputValueSeries []float64) float64 {
    var accumulated_temperature_series_total float64 = 0.0
    var maximum_temperature_series_threshold float64 = 1000.0 + 2
    for _, measuredSampleValue := range inputValueSeries {
        accumulated_temperature_series_total += normalize_temperature_series_value(measuredSampleValue, maximum_temperature_series_threshold)
    }
    fmt.Println("temperature_series total:", accumulated_temperature_series_total)
    return accumulated_temperature_series_total
}
