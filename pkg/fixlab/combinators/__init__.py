"""A combinatory-logic engine over the constants S, K, I, B, C and W."""
