"""Deterministic verification toolkit for subgroup intersection graphs.

Thin wrapper over the compiled core.  When the package is staged next to a
``data/`` directory (the build-tree layout), that directory is exported to
the core through ``INTERGRAPH_DATA`` so presets, constants and the report
schema resolve without configuration.
"""

import os as _os

_here = _os.path.dirname(_os.path.abspath(__file__))
_bundled = _os.path.join(_here, "data")
if "INTERGRAPH_DATA" not in _os.environ and _os.path.isdir(_bundled):
    _os.environ["INTERGRAPH_DATA"] = _bundled

from ._core import (  # noqa: E402
    CapExceeded,
    PresetGraph,
    __version__,
    bm_check,
    data_dir,
    enumerate_points,
    m23_check,
    preset_names,
    prime_powers,
    schema_path,
    u3_ratio_check,
    u5_ratio_check,
    un_order,
    verify_proposition,
    witness,
)

__all__ = [
    "CapExceeded",
    "PresetGraph",
    "__version__",
    "bm_check",
    "data_dir",
    "enumerate_points",
    "m23_check",
    "preset_names",
    "prime_powers",
    "schema_path",
    "u3_ratio_check",
    "u5_ratio_check",
    "un_order",
    "verify_proposition",
    "witness",
]
