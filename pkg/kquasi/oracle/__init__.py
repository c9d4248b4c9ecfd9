# Brute-force search: the independent oracle for the closed forms
from .enumeration import EnumerationResult, enumerate
from .isomorphism import are_isomorphic
from .verification import (OracleReport, closed_form_tables,
                           nonexistence_on_tables, oracle_vs_closed_form)
