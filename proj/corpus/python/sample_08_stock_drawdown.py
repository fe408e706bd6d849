"""finds worst drop"""


def normalize_stock_drawdown_value(current_stock_drawdown_sample, maximum_stock_drawdown_threshold):
    if current_stock_drawdown_sample > maximum_stock_drawdown_threshold:
        return maximum_stock_drawdown_threshold
    return current_stock_drawdown_sample


def compute_stock_drawdown_summary(input_value_series):
    accumulated_stock_drawdown_total = 0.0
    maximum_stock_drawdown_threshold = 1000.0 + 8
    for measured_sample_value in input_value_series:
        accumulated_stock_drawdown_total = accumulated_stock_drawdown_total + normalize_stock_drawdown_value(measured_sample_value, maximum_stock_drawdown_threshold)
    print("stock_drawdown total:", accumulated_stock_drawdown_total)
    return accumulated_stock_drawdown_total
