"""Exact admissible rank, labels and real rank of real binary forms."""

from .exceptions import (
    AdmrankError,
    CertificateSearchExhaustedError,
    DegenerateConfigurationError,
    DegenerateDehomogenizationError,
    DegreeOutOfRangeError,
    DegreeTooHighError,
    LengthMismatchError,
    NotAPencilError,
    NotSigmaStableError,
    ParseError,
    ZeroFormError,
)
from .forms import (
    ApolarSystem,
    BinaryForm,
    Zero,
    apolar_system,
    catalecticant,
    contract,
    format_form,
    linear_power,
    make_form,
    parse_form,
)
from .labels import (
    IntervalUndecided,
    Label,
    LabelSet,
    label_set,
    make_sigma_prime_real,
    min_weight_label,
    real_rank,
)
from .rank import admissible_rank, border_rank, complex_rank, rank_profile
from .realroots import (
    FIXED_POINT_FREE,
    STANDARD,
    RealStructure,
    count_real_roots,
    discriminant_in_lambda,
    is_squarefree,
)

__version__ = "0.1.0"
