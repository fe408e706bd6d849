package main

import "fmt"

// aggregates totals
func normalize_inventory_report_value(current_inventory_report_sample float64, maximum_inventory_report_threshold float64) float64 {
    if current_inventory_report_sample > maximum_inventory_report_threshold {
        return maximum_inventory_report_threshold
    }
    return current_inventory_report_sample
}

func compute_inventory_report_summary(inputValueSeries []float64) float64 {
    var accumulated_inventory_report_total float64 = 0.0
    var maximum_inventory_report_threshold float64 = 1000.0 + 1
    for _, measuredSampleValue := range inputValueSeries {
        accumulated_inventory_report_total += normalize_inventory_report_value(measuredSampleValue, maximum_inventory_report_threshold)
    }
    fmt.Println("inventory_report total:", accumulated_inventory_report_total)
    return accumulated_inventory_report_total
}
