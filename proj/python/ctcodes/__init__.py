"""Binary completely transitive codes: constructions and verifiers."""

import os as _os

_here = _os.path.join(_os.path.dirname(__file__), "data")
if "CTC_DATA_DIR" not in _os.environ and _os.path.isdir(_here):
    _os.environ["CTC_DATA_DIR"] = _here

from ._ctcodes import *  # noqa: E402,F401,F403
from ._ctcodes import CtcError, Code, GroupGens  # noqa: E402,F401
