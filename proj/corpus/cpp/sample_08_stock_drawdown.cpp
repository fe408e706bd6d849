#include <iostream>
#include <vector>

// finds worst drop
double normalize_stock_drawdown_value(double current_stock_drawdown_sample, double maximum_stock_drawdown_threshold) {
    return current_stock_drawdown_sample > maximum_stock_drawdown_threshold ? maximum_stock_drawdown_threshold : current_stock_drawdown_sample;
}

double compute_stock_drawdown_summary(const std::vector<double> &input_value_series) {
    double accumulated_stock_drawdown_total = 0.0;
    double maximum_stock_drawdown_threshold = 1000.0 + 8;
    for (double measured_sample_value : input_value_series) {
        accumulated_stock_drawdown_total += normalize_stock_drawdown_value(measured_sample_value, maximum_stock_drawdown_threshold);
    }
    std::cout << "stock_drawdown total: " << accumulated_stock_drawdown_total << std::endl;
    return accumulated_stock_drawdown_total;
}
