// tracks wait times
class QueueLatencyCalculator {
    static double normalize_queue_latency_value(double current_queue_latency_sample, double maximum_queue_latency_threshold) {
        return current_queue_latency_sample > maximum_queue_latency_threshold ? maximum_queue_latency_threshold : current_queue_latency_sample;
    }

    static double compute_queue_latency_summary(double[] inputValueSeries) {
        double accumulated_queue_latency_total = 0.0;
        double maximum_queue_latency_threshold = 1000.0 + 7;
        for (double measuredSampleValue : inputValueSeries) {
            accumulated_queue_latency_total = accumulated_queue_latency_total + normalize_queue_latency_value(measuredSampleValue, maximum_queue_latency_threshold);
        }
        System.out.println("queue_latency total: " + accumulated_queue_latency_total);
        return accumulated_queue_latency_total;
    }
}
