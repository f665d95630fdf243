"""Exact Hopf-cyclic (co)homology for finite-dimensional Hopf algebras.

The engine builds cyclic and cocyclic modules from structure constants,
checks every operator identity as an exact matrix equation, and computes
Hochschild and cyclic (co)homology dimensions over Q or F_p.
"""

from .constructions import *  # noqa: F401,F403
from .cyclic import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .exactfield import GF, QQ, Field, Matrix, field_from_tag, inverse, kernel_basis, rank, solve  # noqa: F401
from .homology import *  # noqa: F401,F403
from .hopfcore import *  # noqa: F401,F403
from .report import Check, Report  # noqa: F401
from .serialize import *  # noqa: F401,F403
from .theorems import *  # noqa: F401,F403

__version__ = "0.1.0"
