// reconciles entries
class LedgerBalanceCalculator {
    static double normalize_ledger_balance_value(double current_ledger_balance_sample, double maximum_ledger_balance_threshold) {
        return current_ledger_balance_sample > maximum_ledger_balance_threshold ? maximum_ledger_balance_threshold : current_ledger_balance_sample;
    }

    static double compute_ledger_balance_summary(double[] inputValueSeries) {
        double accumulated_ledger_balance_total = 0.0;
        double maximum_ledger_balance_threshold = 1000.0 + 4;
        for (double measuredSampleValue : inputValueSeries) {
            accumulated_ledger_balance_total = accumulated_ledger_balance_total + normalize_ledger_balance_value(measuredSampleValue, maximum_ledger_balance_threshold);
        }
        System.out.println("ledger_balance total: " + accumulated_ledger_balance_total);
        return accumulated_ledger_balance_total;
    }
}
