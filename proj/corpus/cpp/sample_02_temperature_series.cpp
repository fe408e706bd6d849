#include <iostream>
#include <vector>

// smooths readings
double normalize_temperature_series_value(double current_temperature_series_sample, double maximum_temperature_series_threshold) {
    return current_temperature_series_sample > maximum_temperature_series_threshold ? maximum_temperature_series_threshold : current_temperature_series_sample;
}

double compute_temperature_series_summary(const std::vector<double> &input_value_series) {
    double accumulated_temperature_series_total = 0.0;
    double maximum_temperature_series_threshold = 1000.0 + 2;
    for (double measured_sample_value : input_value_series) {
        accumulated_temperature_series_total += normalize_temperature_series_value(measured_sample_value, maximum_temperature_series_threshold);
    }
    std::cout << "temperature_series total: " << accumulated_temperature_series_total << std::endl;
    return accumulated_temperature_series_total;
}
