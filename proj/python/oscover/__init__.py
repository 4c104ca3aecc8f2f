"""Exact divisor-lattice engine for hyperelliptic d-osculating covers of an
elliptic curve: intersection theory on the blown-up ruled surface, type
admissibility, constructive families and their verification."""

from ._core import (
    AdmissibleType,
    CoefficientOverflow,
    CoverReport,
    CoverSpec,
    CurveCertificate,
    CurveKind,
    DataError,
    DegreeGenus,
    DomainError,
    EpsilonChoice,
    FamilyRow,
    GapReport,
    FamilySpec,
    FaultInjection,
    HalfPeriod,
    InconsistencyError,
    IrreducibilityReport,
    MembershipReport,
    MuVector,
    OracleReport,
    PicClass,
    SweepConfig,
    TypeVector,
    VerifyReport,
    WeierstrassReport,
    __version__,
    adjunction_genus,
    build_family,
    canonical_class,
    check_cover,
    closed_form_degree,
    construction_gap,
    degree_genus_of,
    enumerate_admissible,
    enumerate_families,
    epsilon_vector,
    families_csv,
    gamma_of,
    hyperelliptic_weierstrass_certificate,
    intersect,
    irreducibility_certificate,
    lambda_class,
    lin_equiv,
    membership_report,
    oracle_crosscheck,
    osculating_gap_order,
    relabel,
    theorem_certificate_for,
    torsion_of_fibers,
    verify_paper,
    z_class,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
