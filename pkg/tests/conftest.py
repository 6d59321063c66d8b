import sys

# Some oracle comparisons convert multi-thousand-digit values through str/int.
sys.set_int_max_str_digits(2_000_000)
