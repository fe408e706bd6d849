package main

import "fmt"

// reconciles entries
func normalize_ledger_balance_value(current_ledger_balance_sample float64, maximum_ledger_balance_threshold float64) float64 {
    if current_ledger_balance_sample > maximum_ledger_balance_threshold {
        return maximum_ledger_balance_threshold
    }
    return current_ledger_balance_sample
}

func compute_ledger_balance_summary(inputValueSeries []float64) float64 {
    var accumulated_ledger_balance_total float64 = 0.0
    var maximum_ledger_balance_threshold float64 = 1000.0 + 4
    for _, measuredSampleValue := range inputValueSeries {
        accumulated_ledger_balance_total += normalize_ledger_balance_value(measuredSampleValue, maximum_ledger_balance_threshold)
    }
    fmt.Println("ledger_balance total:", accumulated_ledger_balance_total)
    return accumulated_ledger_balance_total
}
