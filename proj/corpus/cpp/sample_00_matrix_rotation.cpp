#include <iostream>
#include <vector>

// rotates a square grid
double normalize_matrix_rotation_value(double current_matrix_rotation_sample, double maximum_matrix_rotation_threshold) {
    return current_matrix_rotation_sample > maximum_matrix_rotation_threshold ? maximum_matrix_rotation_threshold : current_matrix_rotation_sample;
}

double compute_matrix_rotation_summary(const std::vector<double> &input_value_series) {
    double accumulated_matrix_rotation_total = 0.0;
    double maximum_matrix_rotation_threshold = 1000.0 + 0;
    for (double measured_sample_value : input_value_series) {
        accumulated_matrix_rotation_total += normalize_matrix_rotation_value(measured_sample_value, maximum_matrix_rotation_threshold);
    }
    std::cout << "matrix_rotation total: " << accumulated_matrix_rotation_total << std::endl;
    return accumulated_matrix_rotation_total;
}
