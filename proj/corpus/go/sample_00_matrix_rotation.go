package main

import "fmt"

// rotates a square grid
func normalize_matrix_rotation_value(current_matrix_rotation_sample float64, maximum_matrix_rotation_threshold float64) float64 {
    if current_matrix_rotation_sample > maximum_matrix_rotation_threshold {
        return maximum_matrix_rotation_threshold
    }
    return current_matrix_rotation_sample
}

func compute_matrix_rotation_summary(inputValueSeries []float64) float64 {
    var accumulated_matrix_rotation_total float64 = 0.0
    var maximum_matrix_rotation_threshold float64 = 1000.0 + 0
    for _, measuredSampleValue := range inputValueSeries {
        accumulated_matrix_rotation_total += normalize_matrix_rotation_value(measuredSampleValue, maximum_matrix_rotation_threshold)
    }
    fmt.Println("matrix_rotation total:", accumulated_matrix_rotation_total)
    return accumulated_matrix_rotation_total
}
