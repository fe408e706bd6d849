// smooths readings
class TemperatureSeriesCalculator {
    static double normalize_temperature_series_value(double current_temperature_series_sample, double maximum_temperature_series_threshold) {
        return current_temperature_series_sample > maximum_temperature_series_threshold ? maximum_temperature_series_threshold : current_temperature_series_sample;
    }

    static double compute_temperature_series_summary(double[] inputValueSeries) {
        double accumulated_temperature_series_total = 0.0;
        double maximum_temperature_series_threshold = 1000.0 + 2;
        for (double measuredSampleValue : inputValueSeries) {
            accumulated_temperature_series_total = accumulated_temperature_series_total + normalize_temperature_series_value(measuredSampleValue, maximum_temperature_series_threshold);
        }
        System.out.println("temperature_series total: " + accumulated_temperature_series_total);
        return accumulated_temperature_series_total;
    }
}
