"""Shape resonances of one-dimensional rising potentials.

Poles of the reflection amplitude, Wigner time delay and Gamow states for
a delta barrier next to a rigid wall and for one- and two-piece rising
exponential potentials, with a direct-integration oracle for checking the
closed forms.
"""

__version__ = "0.1.0"

from .delay import (  # noqa: E402
    TimeDelayProfile,
    breit_wigner_amplitude,
    breit_wigner_delay,
    delay_profile,
    wigner_delay,
)
from .gamow import DecayLaw, GamowProfile, gamow_wavefunction, survival_probability  # noqa: E402
from .models import (  # noqa: E402
    ModelKind,
    ModelSpec,
    pole_denominator,
    potential_value,
    reflection,
    reflection_at_energy,
)
from .oracle import IntegrationConfig, oracle_reflection, oracle_reflection_grid  # noqa: E402
from .poles import Resonance, SearchConfig, find_poles, refine_pole, search_poles  # noqa: E402
from .special import bessel_i, bessel_k, complex_gamma  # noqa: E402

__all__ = [
    "__version__",
    "ModelKind",
    "ModelSpec",
    "potential_value",
    "reflection",
    "reflection_at_energy",
    "pole_denominator",
    "Resonance",
    "SearchConfig",
    "refine_pole",
    "find_poles",
    "search_poles",
    "TimeDelayProfile",
    "wigner_delay",
    "delay_profile",
    "breit_wigner_delay",
    "breit_wigner_amplitude",
    "GamowProfile",
    "DecayLaw",
    "gamow_wavefunction",
    "survival_probability",
    "IntegrationConfig",
    "oracle_reflection",
    "oracle_reflection_grid",
    "complex_gamma",
    "bessel_i",
    "bessel_k",
]
