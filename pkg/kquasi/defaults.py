"""Default bounds used by sweeps and searches.

All of them can be overridden per call or with the matching ``qg`` flag.
"""

# Bound for invariant sweeps over odd n (classification, closed forms)
INVARIANT_MAX_N = 101

# Bound for class-pair uniqueness surveys
SURVEY_MAX_N = 500

# Bound for the translatability tables sweeps
TABLES_MAX_N = 200

# Bound for the six-case equality sweep
EQUALITY_MAX_N = 51

# Checks that enumerate all n^4 quadruples are capped at this order
QUADRUPLE_MAX_N = 31

# Brute-force enumeration and isomorphism search
ORACLE_MAX_N = 9
ENUMERATION_HARD_MAX_N = 11
ISOMORPHISM_MAX_N = 9

# Quadratical orders listing
ORDERS_LIMIT = 200
