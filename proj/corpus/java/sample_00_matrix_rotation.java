// rotates a square grid
class MatrixRotationCalculator {
    static double normalize_matrix_rotation_value(double current_matrix_rotation_sample, double maximum_matrix_rotation_threshold) {
        return current_matrix_rotation_sample > maximum_matrix_rotation_threshold ? maximum_matrix_rotation_threshold : current_matrix_rotation_sample;
    }

    static double compute_matrix_rotation_summary(double[] inputValueSeries) {
        double accumulated_matrix_rotation_total = 0.0;
        double maximum_matrix_rotation_threshold = 1000.0 + 0;
        for (double measuredSampleValue : inputValueSeries) {
            accumulated_matrix_rotation_total = accumulated_matrix_rotation_total + normalize_matrix_rotation_value(measuredSampleValue, maximum_matrix_rotation_threshold);
        }
        System.out.println("matrix_rotation total: " + accumulated_matrix_rotation_total);
        return accumulated_matrix_rotation_total;
    }
}
