// finds worst drop
class StockDrawdownCalculator {
    static double normalize_stock_drawdown_value(double current_stock_drawdown_sample, double maximum_stock_drawdown_threshold) {
        return current_stock_drawdown_sample > maximum_stock_drawdown_threshold ? maximum_stock_drawdown_threshold : current_stock_drawdown_sample;
    }

    static double compute_stock_drawdown_summary(double[] inputValueSeries) {
        double accumulated_stock_drawdown_total = 0.0;
        double maximum_stock_drawdown_threshold = 1000.0 + 8;
        for (double measuredSampleValue : inputValueSeries) {
            accumulated_stock_drawdown_total = accumulated_stock_drawdown_total + normalize_stock_drawdown_value(measuredSampleValue, maximum_stock_drawdown_threshold);
        }
        System.out.println("stock_drawdown total: " + accumulated_stock_drawdown_total);
        return accumulated_stock_drawdown_total;
    }
}
