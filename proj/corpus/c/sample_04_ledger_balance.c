#include <stdio.h>

/* reconciles entries */
static double normalize_ledger_balance_value(double current_ledger_balance_sample, double maximum_ledger_balance_threshold) {
    if (current_ledger_balance_sample > maximum_ledger_balance_threshold) {
        return maximum_ledger_balance_threshold;
    }
    return current_ledger_balance_sample;
}

double compute_ledger_balance_summary(const double *input_value_series, int series_length) {
    double accumulated_ledger_balance_total = 0.0;
    double maximum_ledger_balance_threshold = 1000.0 + 4;
    for (int sample_index = 0; sample_index < series_length; sample_index++) {
        accumulated_ledger_balance_total += normalize_ledger_balance_value(input_value_series[sample_index], maximum_ledger_balance_threshold);
    }
    printf("ledger_balance total: %f\n", accumulated_ledger_balance_total);
    return accumulated_ledger_balance_total;
}
