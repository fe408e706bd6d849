// detects maxima
class SignalPeaksCalculator {
    static double normalize_signal_peaks_value(double current_signal_peaks_sample, double maximum_signal_peaks_threshold) {
        return current_signal_peaks_sample > maximum_signal_peaks_threshold ? maximum_signal_peaks_threshold : current_signal_peaks_sample;
    }

    static double compute_signal_peaks_summary(double[] inputValueSeries) {
        double accumulated_signal_peaks_total = 0.0;
        double maximum_signal_peaks_threshold = 1000.0 + 9;
        for (double measuredSampleValue : inputValueSeries) {
            accumulated_signal_peaks_total = accumulated_signal_peaks_total + normalize_signal_peaks_value(measuredSampleValue, maximum_signal_peaks_threshold);
        }
        System.out.println("signal_peaks total: " + accumulated_signal_peaks_total);
        return accumulated_signal_peaks_total;
    }
}
