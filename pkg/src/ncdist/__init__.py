"""Exact computations with joint distributions of noncommutative random variables.

Distributions are truncated moment series with rational coefficients.  The
free and Boolean cumulant views, the convolutions and powers they linearize,
the transformations B_t, the map Phi and a finite operator model are all
computed by exact sums over non-crossing partitions.
"""

from .distributions import (
    Distribution,
    bbp_transform,
    boolean_convolve,
    boolean_power,
    delta0,
    delta1,
    dilate_dist,
    free_convolve,
    free_power,
    from_eta,
    from_moments,
    from_r,
    mult_convolve,
    phi_map,
    semicircular_family,
)
from .errors import (
    AlphabetMismatchError,
    DegreeExceededError,
    DomainError,
    EmptyWordError,
    GroundSetError,
    NCDistError,
    PreconditionError,
)
from .partitions import SetPartition, enumerate_interval, enumerate_nc, enumerate_nc_le2, parse_partition
from .reports import IdentityReport
from .series import TruncatedSeries
from .transforms import reta, reta_inverse

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatchError",
    "DegreeExceededError",
    "Distribution",
    "DomainError",
    "EmptyWordError",
    "GroundSetError",
    "IdentityReport",
    "NCDistError",
    "PreconditionError",
    "SetPartition",
    "TruncatedSeries",
    "bbp_transform",
    "boolean_convolve",
    "boolean_power",
    "delta0",
    "delta1",
    "dilate_dist",
    "enumerate_interval",
    "enumerate_nc",
    "enumerate_nc_le2",
    "free_convolve",
    "free_power",
    "from_eta",
    "from_moments",
    "from_r",
    "mult_convolve",
    "parse_partition",
    "phi_map",
    "reta",
    "reta_inverse",
    "semicircular_family",
]
