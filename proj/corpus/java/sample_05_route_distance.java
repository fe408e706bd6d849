// sums hops
class RouteDistanceCalculator {
    static double normalize_route_distance_value(double current_route_distance_sample, double maximum_route_distance_threshold) {
        return current_route_distance_sample > maximum_route_distance_threshold ? maximum_route_distance_threshold : current_route_distance_sample;
    }

    static double compute_route_distance_summary(double[] inputValueSeries) {
        double accumulated_route_distance_total = 0.0;
        double maximum_route_distance_threshold = 1000.0 + 5;
        for (double measuredSampleValue : inputValueSeries) {
            accumulated_route_distance_total = accumulated_route_distance_total + normalize_route_distance_value(measuredSampleValue, maximum_route_distance_threshold);
        }
        System.out.println("route_distance total: " + accumulated_route_distance_total);
        return accumulated_route_distance_total;
    }
}
