"""Separation certificates for path components of moduli spaces of metrics.

Given two bundles with the same Euler coefficient, glue the two disk bundles
along a metric cylinder over their common boundary sphere bundle to form a
closed spin 8-manifold X.  If the two nonnegatively curved metrics sat in the
same path component of the moduli space, X would carry a metric of nonnegative
scalar curvature that is positive somewhere, so the Dirac operator would be
invertible and the A-hat genus of X would vanish; the signature vanishes
unconditionally by additivity.  Both dimension-8 index forms vanishing forces
<p1(X)^2, [X]> = 0, so a nonzero computed value of

    p1^2[W_k0] - p1^2[W_k1] = 4*(k0^2 - k1^2)/n

certifies that the two metric classes lie in distinct path components.  The
certificate records exactly this contradiction.  No geometry is ever
computed: metrics enter only as the opaque labels GZ(k).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundle import BundleClass
from .classify import gz_family
from .exactnum import Rational
from .space import p1_squared_W

FORCED_ZERO = "ForcedZero"
UNCONSTRAINED = "Unconstrained"

DISTINCT_COMPONENTS = "DistinctComponents"
INCONCLUSIVE = "Inconclusive"

CURVATURE_SEC = "sec>=0"
CURVATURE_RIC = "Ric>0"
CURVATURE_SCAL = "scal>0"

BANNER = "infinitely many path components certified"

# The analytic steps of the separation argument carry no finite data; they are
# recorded verbatim so a certificate doubles as a proof transcript.
PROVENANCE_STEPS = (
    "path lift: a path joining the two metric classes in the moduli space lifts to "
    "the space of nonnegatively curved metrics (Ebin slice theorem), with endpoints "
    "isometric to the two Grove-Ziller metrics by orientation-preserving diffeomorphisms",
    "curvature improvement: under Ricci flow the lifted path evolves instantly to "
    "positive Ricci curvature (Bohm-Wilking); concatenating with the endpoint "
    "trajectories gives a path of positive-scalar-curvature metrics, constant near "
    "its endpoints",
    "cylinder stretching: rescaling the path parameter over M x [0,a], a >> 0, "
    "produces a metric of positive scalar curvature on the cylinder (Gromov-Lawson)",
    "gluing: capping the cylinder with the two nonnegatively curved disk bundles "
    "yields a closed spin 8-manifold X with scal >= 0 everywhere and scal > 0 "
    "somewhere; by Lichnerowicz the Dirac operator of X is invertible and its index, "
    "the A-hat genus, vanishes",
    "signature additivity: sign(X) = sign(W_k0) - sign(W_k1) = 1 - 1 = 0, "
    "independent of the gluing map",
    "index forms: A-hat(X) = 0 and sign(X) = 0 force <p1(X)^2, [X]> = 0",
    "contradiction: <p1(X)^2, [X]> = p1^2[W_k0] - p1^2[W_k1] is nonzero, so no such "
    "path exists and the two classes lie in distinct path components",
)

# Finitely many certificates stand in for the infinitude claim; the note says how.
INFINITUDE_NOTE = (
    "The family k = l + 112n*j consists of pairwise distinct positive parameters, so "
    "k0^2 != k1^2 and every pair of members separates, not only the pairs sampled "
    "here; the enumerator is unbounded, so the certified components are infinite in "
    "number."
)

# For n > 1 the p1^2 difference has no classical closed form on record; every
# such certificate carries this flag.
GENERAL_N_DERIVATION = (
    "p1sq_X uses the Thom-lift formula 4*(k0^2 - k1^2)/n; the unit-Euler "
    "specialization (2*k0)^2 - (2*k1)^2 is the classical value"
)


def index_forms_dim8(p1sq: Rational, p2: Rational) -> tuple[Rational, Rational]:
    """Evaluate the two dimension-8 characteristic-number forms exactly.

    A-hat = (7*p1^2 - 4*p2)/5760 and sign = (7*p2 - p1^2)/45.  On the
    quaternionic projective plane, (p1^2, p2) = (4, 7) gives (0, 1).
    """
    ahat = (Rational(7) * p1sq - Rational(4) * p2) / Rational(5760)
    sign = (Rational(7) * p2 - p1sq) / Rational(45)
    return ahat, sign


def deduce_p1sq_zero(ahat: Rational, sign: Rational) -> tuple[Rational, Rational]:
    """Recover (p1^2, p2) from (A-hat, sign) by inverting the index forms.

    Solves the linear system {7*p2 - p1^2 = 45*sign, 7*p1^2 - 4*p2 = 5760*ahat}
    by Cramer's rule; the determinant is -45 != 0, so the solution is unique
    and (0, 0) forces (p1^2, p2) = (0, 0).
    """
    # rows: [-1  7 | 45*sign], [7 -4 | 5760*ahat]
    a11, a12, b1 = Rational(-1), Rational(7), Rational(45) * sign
    a21, a22, b2 = Rational(7), Rational(-4), Rational(5760) * ahat
    det = a11 * a22 - a12 * a21
    p1sq = (b1 * a22 - a12 * b2) / det
    p2 = (a11 * b2 - b1 * a21) / det
    return p1sq, p2


def _curvature_classes(include_scal: bool) -> tuple[str, ...]:
    tags = (CURVATURE_SEC, CURVATURE_RIC)
    if include_scal:
        tags = tags + (CURVATURE_SCAL,)
    return tags


@dataclass(frozen=True)
class GluedManifoldInvariants:
    """Index data of the closed 8-manifold glued from two disk bundles."""

    sign_X: int
    p1sq_X: Rational
    ahat_constraint: str

    def __post_init__(self) -> None:
        if self.ahat_constraint not in (FORCED_ZERO, UNCONSTRAINED):
            raise ValueError("ahat_constraint must be ForcedZero or Unconstrained")


@dataclass(frozen=True)
class SeparationCertificate:
    """Record of the gluing argument for one pair of bundles.

    verdict is DistinctComponents exactly when sign(X) = 0, the A-hat genus is
    forced to vanish, and the computed p1^2 number contradicts the forced zero.
    """

    pair: tuple[BundleClass, BundleClass]
    metric_labels: tuple[str, str]
    glued: GluedManifoldInvariants
    verdict: str
    contradiction_value: Rational
    curvature_classes: tuple[str, ...]
    derivation_note: str | None = None

    def to_dict(self, quote_provenance: bool = False) -> dict:
        b0, b1 = self.pair
        payload = {
            "n": b0.euler,
            "k0": b0.pont,
            "k1": b1.pont,
            "metric_labels": list(self.metric_labels),
            "sign_X": self.glued.sign_X,
            "p1sq_X": str(self.glued.p1sq_X),
            "ahat": "forced-zero" if self.glued.ahat_constraint == FORCED_ZERO else "unconstrained",
            "verdict": self.verdict,
            "curvature_classes": list(self.curvature_classes),
        }
        if self.derivation_note is not None:
            payload["derivation_note"] = self.derivation_note
        if quote_provenance:
            payload["provenance"] = list(PROVENANCE_STEPS)
        return payload


def separation_certificate(
    b0: BundleClass, b1: BundleClass, include_scal: bool = True
) -> SeparationCertificate:
    """Run the gluing argument for (b0, b1) and record the outcome.

    Both disk bundles have signature +1 in the fixed convention, so
    sign(X) = 0 always; the A-hat genus is forced to zero under the
    same-component hypothesis rather than computed.  The verdict follows from
    comparing the computed p1^2 difference with the value the vanishing index
    forms would force.
    """
    if b0.euler != b1.euler:
        raise ValueError("gluing requires equal Euler coefficients")
    if b0.euler <= 0:
        raise ValueError("separation requires euler > 0")

    sign_x = 1 - 1
    p1sq_x = p1_squared_W(b0) - p1_squared_W(b1)
    glued = GluedManifoldInvariants(sign_X=sign_x, p1sq_X=p1sq_x, ahat_constraint=FORCED_ZERO)

    forced_p1sq, _forced_p2 = deduce_p1sq_zero(Rational(0), Rational(sign_x))
    contradicts = (
        glued.sign_X == 0
        and glued.ahat_constraint == FORCED_ZERO
        and glued.p1sq_X != forced_p1sq
    )

    return SeparationCertificate(
        pair=(b0, b1),
        metric_labels=(f"GZ({b0.pont})", f"GZ({b1.pont})"),
        glued=glued,
        verdict=DISTINCT_COMPONENTS if contradicts else INCONCLUSIVE,
        contradiction_value=p1sq_x,
        curvature_classes=_curvature_classes(include_scal),
        derivation_note=None if b0.euler == 1 else GENERAL_N_DERIVATION,
    )


@dataclass(frozen=True)
class ComponentsReport:
    """Pairwise certificates over an initial segment of an arithmetic family."""

    base: BundleClass
    pairs: int
    family: tuple[BundleClass, ...]
    certificates: tuple[SeparationCertificate, ...]
    certified: bool | None
    banner: str | None
    curvature_classes: tuple[str, ...]
    note: str

    def to_dict(self, quote_provenance: bool = False) -> dict:
        return {
            "n": self.base.euler,
            "l": self.base.pont,
            "pairs": self.pairs,
            "family": [b.pont for b in self.family],
            "certificates": [c.to_dict(quote_provenance) for c in self.certificates],
            "certified": self.certified,
            "banner": self.banner,
            "curvature_classes": list(self.curvature_classes),
            "note": self.note,
        }


def infinite_components_report(
    b: BundleClass, pairs: int, include_scal: bool = True
) -> ComponentsReport:
    """Certify pairwise separation across the first pairs+1 family members.

    Certificates are emitted for every pair in lexicographic (k0, k1) order.
    The verdict "certified" requires every pair to separate; with pairs = 0
    there is nothing to check and the verdict is withheld.
    """
    if pairs < 0:
        raise ValueError("pairs must be nonnegative")
    family = gz_family(b, pairs + 1)
    certificates = tuple(
        separation_certificate(family[i], family[j], include_scal)
        for i in range(len(family))
        for j in range(i + 1, len(family))
    )
    if pairs == 0:
        certified: bool | None = None
    else:
        certified = all(c.verdict == DISTINCT_COMPONENTS for c in certificates)
    return ComponentsReport(
        base=b,
        pairs=pairs,
        family=tuple(family),
        certificates=certificates,
        certified=certified,
        banner=BANNER if certified else None,
        curvature_classes=_curvature_classes(include_scal),
        note=INFINITUDE_NOTE,
    )
