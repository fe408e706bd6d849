#include <stdio.h>

/* rotates a square grid */
static double normalize_matrix_rotation_value(double current_matrix_rotation_sample, double maximum_matrix_rotation_threshold) {
    if (current_matrix_rotation_sample > maximum_matrix_rotation_threshold) {
        return maximum_matrix_rotation_threshold;
    }
    return current_matrix_rotation_sample;
}

double compute_matrix_rotation_summary(const double *input_value_series, int series_length) {
    double accumulated_matrix_rotation_total = 0.0;
    double maximum_matrix_rotation_threshold = 1000.0 + 0;
    for (int sample_index = 0; sample_index < series_length; sample_index++) {
        accumulated_matrix_rotation_total += normalize_matrix_rotation_value(input_value_series[sample_index], maximum_matrix_rotation_threshold);
    }
    printf("matrix_rotation total: %f\n", accumulated_matrix_rotation_total);
    return accumulated_matrix_rotation_total;
}
