#include <iostream>
#include <vector>

// aggregates totals
double normalize_inventory_report_value(double current_inventory_report_sample, double maximum_inventory_report_threshold) {
    return current_inventory_report_sample > maximum_inventory_report_threshold ? maximum_inventory_report_threshold : current_inventory_report_sample;
}

double compute_inventory_report_summary(const std::vector<double> &input_value_series) {
    double accumulated_inventory_report_total = 0.0;
    double maximum_inventory_report_threshold = 1000.0 + 1;
    for (double measured_sample_value : input_value_series) {
        accumulated_inventory_report_total += normalize_inventory_report_value(measured_sample_value, maximum_inventory_report_threshold);
    }
    std::cout << "inventory_report total: " << accumulated_inventory_report_total << std::endl;
    return accumulated_inventory_report_total;
}
