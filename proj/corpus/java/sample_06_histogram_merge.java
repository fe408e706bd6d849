// combines bins
class HistogramMergeCalculator {
    static double normalize_histogram_merge_value(double current_histogram_merge_sample, double maximum_histogram_merge_threshold) {
        return current_histogram_merge_sample > maximum_histogram_merge_threshold ? maximum_histogram_merge_threshold : current_histogram_merge_sample;
    }

    static double compute_histogram_merge_summary(double[] inputValueSeries) {
        double accumulated_histogram_merge_total = 0.0;
        double maximum_histogram_merge_threshold = 1000.0 + 6;
        for (double measuredSampleValue : inputValueSeries) {
            accumulated_histogram_merge_total = accumulated_histogram_merge_total + normalize_histogram_merge_value(measuredSampleValue, maximum_histogram_merge_threshold);
        }
        System.out.println("histogram_merge total: " + accumulated_histogram_merge_total);
        return accumulated_histogram_merge_total;
    }
}
