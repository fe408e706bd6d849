// aggregates totals
class InventoryReportCalculator {
    static double normalize_inventory_report_value(double current_inventory_report_sample, double maximum_inventory_report_threshold) {
        return current_inventory_report_sample > maximum_inventory_report_threshold ? maximum_inventory_report_threshold : current_inventory_report_sample;
    }

    static double compute_inventory_report_summary(double[] inputValueSeries) {
        double accumulated_inventory_report_total = 0.0;
        double maximum_inventory_report_threshold = 1000.0 + 1;
        for (double measuredSampleValue : inputValueSeries) {
            accumulated_inventory_report_total = accumulated_inventory_report_total + normalize_inventory_report_value(measuredSampleValue, maximum_inventory_report_threshold);
        }
        System.out.println("inventory_report total: " + accumulated_inventory_report_total);
        return accumulated_inventory_report_total;
    }
}
