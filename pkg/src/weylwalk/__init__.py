"""weylwalk: one-dimensional quantum walks and their momentum-space orbits.

The package simulates discrete-time walks driven by a 2x2 unitary coin,
maps each wave number onto a planar orbit in three-dimensional momentum
space, and evaluates the closed-form limit density of the rescaled walker
position, with an extensive cross-checking suite (``weylwalk.verify``,
or the ``weylwalk verify`` command).
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .coin import (
    CayleyKlein,
    Qubit,
    SpecialCoin,
    UnitaryCoin,
    from_cayley_klein,
    parse_coin,
    preset_coin,
    strip_phase,
    to_cayley_klein,
)
from .errors import (
    DegenerateCoinError,
    DegenerateDirectionError,
    GridTooSmallError,
    NonPositiveTimeError,
    NonUnitaryError,
    NotUnitError,
    OutOfSupportError,
    UnknownPresetError,
    UnsupportedOrderError,
    WeylWalkError,
)
from .limitlaw import (
    KonnoLaw,
    asymmetry_factor,
    convergence_report,
    konno_mu,
    konno_nu,
    limit_moment,
    limit_moment_k,
)
from .spectral import (
    SpectralWeights,
    SpinorPair,
    coeff_weights,
    decompose_qubit,
    evolve_spectral,
    helicity_eigenstates,
    pauli_exp,
    reconstruct_Uk,
)
from .walk import (
    ClassicalTurnParams,
    Distribution,
    KSpectrum,
    WaveField,
    build_Uk,
    classical_evolve,
    distribution,
    evolve_kspace,
    evolve_position,
    heat_kernel,
    kspectrum_to_position,
    moment_kspace,
    moment_position,
    position_to_kspectrum,
    step_position,
)
from .weylmap import (
    OrbitFrame,
    OrbitPoint,
    dq_dk,
    gamma_of_k,
    integrate_over_orbit,
    jacobian,
    k_of_gamma,
    orbit_frame,
    orbit_point_polar,
    orbit_radius_polar,
    q_hat_of_k,
    q_norm,
    q_vec_of_k,
)

__version__ = "0.1.0"
