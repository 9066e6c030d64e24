# Exit statuses shared by every command
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_LOW_SUCCESS = 3

# Benchmarks below this share of successful method runs exit with EXIT_LOW_SUCCESS
MIN_SUCCESS_RATE = 0.9
