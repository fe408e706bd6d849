package main

import "fmt"

// finds worst drop
func normalize_stock_drawdown_value(current_stock_drawdown_sample float64, maximum_stock_drawdown_threshold float64) float64 {
    if current_stock_drawdown_sample > maximum_stock_drawdown_threshold {
        return maximum_stock_drawdown_threshold
    }
    return current_stock_drawdown_sample
}

func compute_stock_drawdown_summary(inputValueSeries []float64) float64 {
    var accumulated_stock_drawdown_total float64 = 0.0
    var maximum_stock_drawdown_threshold float64 = 1000.0 + 8
    for _, measuredSampleValue := range inputValueSeries {
        accumulated_stock_drawdown_total += normalize_stock_drawdown_value(measuredSampleValue, maximum_stock_drawdown_threshold)
    }
    fmt.Println("stock_drawdown total:", accumulated_stock_drawdown_total)
    return accumulated_stock_drawdown_total
}
