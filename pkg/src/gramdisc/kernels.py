"""Backend selection for the section-sum kernel.

The compiled extension is used when it was built and
``GRAMDISC_PURE_PYTHON`` is unset; otherwise the numpy fallback.
"""

import os

from . import _pykernels

python_section_sums = _pykernels.section_sums

try:
    from ._ckernels import section_sums as compiled_section_sums
except ImportError:  # extension not built
    compiled_section_sums = None

if compiled_section_sums is not None and not os.environ.get("GRAMDISC_PURE_PYTHON"):
    section_sums = compiled_section_sums
    BACKEND = "cython"
else:
    section_sums = python_section_sums
    BACKEND = "python"

__all__ = ["BACKEND", "section_sums", "python_section_sums", "compiled_section_sums"]
