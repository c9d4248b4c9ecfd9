# Check that the installed numpy version is compatible
from .version import check_compatibility, __version__
check_compatibility()

# Import all the subpackages of kquasi
from .errors import *
from .tables import *
from .linear import *
from .parastrophes import *
from .qq import *
from .oracle import EnumerationResult, OracleReport, are_isomorphic, \
    closed_form_tables, nonexistence_on_tables, oracle_vs_closed_form
from . import oracle

from .log import Log, LogLevel, set_log_level
from .utils import set_worker_count, worker_count
from .catalogue import NAMED_EXAMPLES, report_named_examples
from . import visualization as vis
