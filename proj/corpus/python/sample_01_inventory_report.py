"""aggregates totals"""


def normalize_inventory_report_value(current_inventory_report_sample, maximum_inventory_report_threshold):
    if current_inventory_report_sample > maximum_inventory_report_threshold:
        return maximum_inventory_report_threshold
    return current_inventory_report_sample


def compute_inventory_report_summary(input_value_series):
    accumulated_inventory_report_total = 0.0
    maximum_inventory_report_threshold = 1000.0 + 1
    for measured_sample_value in input_value_series:
        accumulated_inventory_report_total = accumulated_inventory_report_total + normalize_inventory_report_value(measured_sample_value, maximum_inventory_report_threshold)
    print("inventory_report total:", accumulated_inventory_report_total)
    return accumulated_inventory_report_total
