# 17 significant digits round-trip any 64-bit float
WEIGHT_SIGNIFICANT_DIGITS = 17

# Tolerances for comparing floating weights
WEIGHT_TOLERANCE = 1e-9
ADDITIVITY_RELATIVE_TOLERANCE = 1e-12

# Instance file tokens
INSTANCE_HEADER_TOKEN = 'hgr'
INSTANCE_EDGE_TOKEN = 'e'
INSTANCE_WEIGHT_TOKEN = 'w'
INSTANCE_COMMENT_CHAR = '#'

BENCH_CSV_HEADER = ('q', 'vertices', 'edges', 'accepted', 'matching_calls', 'wall_ms')
VERIFY_CSV_HEADER = ('instance', 'seed', 'q', 'vertices', 'edges', 'ok', 'failures')

# Used as bench vertices = edges // ratio, the same density as the 1000 vertices / 5000 edges smoke instance
BENCH_EDGES_PER_VERTEX = 5
