import sys

# Engine outputs exceed CPython's default 4300-digit str() cap well within
# the tested range; tests print and parse full decimals.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)
