#include <iostream>
#include <vector>

// reconciles entries
double normalize_ledger_balance_value(double current_ledger_balance_sample, double maximum_ledger_balance_threshold) {
    return current_ledger_balance_sample > maximum_ledger_balance_threshold ? maximum_ledger_balance_threshold : current_ledger_balance_sample;
}

double compute_ledger_balance_summary(const std::vector<double> &input_value_series) {
    double accumulated_ledger_balance_total = 0.0;
    double maximum_ledger_balance_threshold = 1000.0 + 4;
    for (double measured_sample_value : input_value_series) {
        accumulated_ledger_balance_total += normalize_ledger_balance_value(measured_sample_value, maximum_ledger_balance_threshold);
    }
    std::cout << "ledger_balance total: " << accumulated_ledger_balance_total << std::endl;
    return accumulated_ledger_balance_total;
}
