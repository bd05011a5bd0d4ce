from ._slicecheck import *  # noqa: F401,F403
from ._slicecheck import Certificate, KnotRecord, certify, load_knot_table
