#include <stdio.h>

/* aggregates totals */
static double normalize_inventory_report_value(double current_inventory_report_sample, double maximum_inventory_report_threshold) {
    if (current_inventory_report_sample > maximum_inventory_report_threshold) {
        return maximum_inventory_report_threshold;
    }
    return current_inventory_report_sample;
}

double compute_inventory_report_summary(const double *input_value_series, int series_length) {
    double accumulated_inventory_report_total = 0.0;
    double maximum_inventory_report_threshold = 1000.0 + 1;
    for (int sample_index = 0; sample_index < series_length; sample_index++) {
        accumulated_inventory_report_total += normalize_inventory_report_value(input_value_series[sample_index], maximum_inventory_report_threshold);
    }
    printf("inventory_report total: %f\n", accumulated_inventory_report_total);
    return accumulated_inventory_report_total;
}
