"""flagdom: exact combinatorics and cohomology bookkeeping for flag domains.

Given a supported real form (su(p,q) or sl(n,R)) acting on a flag manifold of
its complexification, the package computes open-orbit models and base cycles,
Schubert classes with the homology pairing, restricted roots and the
universal-domain polytope, Bott-Borel-Weil cohomology of homogeneous line
bundles, and assembles machine-checked injectivity certificates for the
double fibration transform on cohomology.
"""

from .bbw import (
    BBWResult,
    DerivedFiber,
    KFlagManifold,
    VanishingStatus,
    WeightMultiset,
    bbw_line,
    canonical_character,
    derived_fiber,
    exterior_power_weights,
    k_flag,
    simple_flag,
    vanishing_check,
    weyl_dim,
)
from .cert import (
    FibrationDims,
    InjectivityCertificate,
    MuFiberModule,
    ScanReport,
    Verdict,
    certify,
    fibration_dims,
    from_json_dict,
    mu_fiber_module,
    parse_text,
    render_text,
    threshold_scan,
    to_json_dict,
)
from .errors import (
    CapExceededError,
    ConsistencyError,
    DegreeMismatchError,
    DominanceError,
    ExceptionalOrbitError,
    FlagdomError,
    InvalidTypeError,
    RankMismatchError,
    TableFormatError,
    UnsupportedFamilyError,
)
from .orbits import (
    BaseCycle,
    OpenOrbitModel,
    OrbitClass,
    SchubertSliceData,
    base_cycle,
    classify_exception,
    enumerate_open_orbits,
    grassmannian,
    partial_flag,
    projective_space,
    schubert_slice_data,
)
from .realform import (
    InvolutionData,
    KGroupData,
    KWeight,
    PolytopeU,
    RealFormSpec,
    RestrictedRoot,
    RestrictedRootSystem,
    involution_data,
    iwasawa_dims,
    membership,
    parse_form,
    polytope_U,
    real_form,
    restrict_weight,
    restricted_roots,
)
from .rootsys import (
    RootSystem,
    Weight,
    WeylElement,
    WeylGroup,
    act,
    build_root_system,
    dominant_normalize,
    enumerate_weyl_group,
    longest_element,
    rho,
    weyl_order,
)
from .schubert import (
    CycleClass,
    FlagManifold,
    Parabolic,
    SchubertVariety,
    bruhat_leq,
    flag_manifold,
    intersection_number,
    minimal_coset_reps,
    poincare_dual,
    poincare_pairing,
)

__version__ = "0.1.0"
