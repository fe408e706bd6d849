"""reconciles entries"""


def normalize_ledger_balance_value(current_ledger_balance_sample, maximum_ledger_balance_threshold):
    if current_ledger_balance_sample > maximum_ledger_balance_threshold:
        return maximum_ledger_balance_threshold
    return current_ledger_balance_sample


def compute_ledger_balance_summary(input_value_series):
    accumulated_ledger_balance_total = 0.0
    maximum_ledger_balance_threshold = 1000.0 + 4
    for measured_sample_value in input_value_series:
        accumulated_ledger_balance_total = accumulated_ledger_balance_total + normalize_ledger_balance_value(measured_sample_value, maximum_ledger_balance_threshold)
    print("ledger_balance total:", accumulated_ledger_balance_total)
    return accumulated_ledger_balance_total
