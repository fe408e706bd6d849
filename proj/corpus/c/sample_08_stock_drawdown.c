#include <stdio.h>

/* finds worst drop */
static double normalize_stock_drawdown_value(double current_stock_drawdown_sample, double maximum_stock_drawdown_threshold) {
    if (current_stock_drawdown_sample > maximum_stock_drawdown_threshold) {
        return maximum_stock_drawdown_threshold;
    }
    return current_stock_drawdown_sample;
}

double compute_stock_drawdown_summary(const double *input_value_series, int series_length) {
    double accumulated_stock_drawdown_total = 0.0;
    double maximum_stock_drawdown_threshold = 1000.0 + 8;
    for (int sample_index = 0; sample_index < series_length; sample_index++) {
        accumulated_stock_drawdown_total += normalize_stock_drawdown_value(input_value_series[sample_index], maximum_stock_drawdown_threshold);
    }
    printf("stock_drawdown total: %f\n", accumulated_stock_drawdown_total);
    return accumulated_stock_drawdown_total;
}
