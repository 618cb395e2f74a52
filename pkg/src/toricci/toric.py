"""Column configurations, binomials, and the reduction algorithm.

A configuration is an ordered list of nonzero vectors in N^m; the lattice
ideal it spans is encoded implicitly and binomials are kept as pairs of
exponent vectors.  The reduction sweep repeatedly removes vectors that
fall outside the rational span of the rest, eliminates vectors whose
minimal integer multiple is representable over the rest, and otherwise
replaces them by that multiple.  Eliminations are turned into binomial
generators via per-column multiplier bookkeeping, so a successful run to
the empty set yields a generating set of the ideal for free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import diophantine, exactlin
from .errors import InternalInvariantError, ValidationError

Vector = tuple[int, ...]

_MAX_SWEEPS = 10_000


@dataclass(frozen=True)
class Configuration:
    """Ordered nonzero vectors in N^m with stable column labels."""

    vectors: tuple[Vector, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        if not self.vectors:
            raise ValidationError("configuration needs at least one vector")
        m = len(self.vectors[0])
        if m < 1:
            raise ValidationError("ambient dimension must be at least 1")
        for v in self.vectors:
            if len(v) != m:
                raise ValidationError("vectors of mixed dimension")
            if any(x < 0 for x in v):
                raise ValidationError("vectors must be componentwise nonnegative")
            if not any(v):
                raise ValidationError("zero vector in configuration")
        if len(self.labels) != len(self.vectors):
            raise ValidationError("label count does not match vector count")
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("labels must be unique")

    @classmethod
    def from_columns(cls, columns) -> "Configuration":
        vectors = tuple(tuple(int(x) for x in col) for col in columns)
        return cls(vectors, tuple(range(1, len(vectors) + 1)))

    @property
    def m(self) -> int:
        return len(self.vectors[0])

    @property
    def n(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class SimplicialConfig:
    """Configuration containing a scaled unit vector for every axis."""

    config: Configuration
    d: tuple[int, ...]
    projective: bool

    @classmethod
    def detect(cls, config: Configuration) -> "SimplicialConfig":
        """Classify a configuration as simplicial, or raise ValidationError."""
        m = config.m
        d = [0] * m
        for v in config.vectors:
            support = [i for i, x in enumerate(v) if x]
            if len(support) == 1:
                axis = support[0]
                if d[axis] == 0 or v[axis] < d[axis]:
                    d[axis] = v[axis]
        missing = [i + 1 for i, x in enumerate(d) if x == 0]
        if missing:
            raise ValidationError(f"not simplicial: no axis vector for coordinates {missing}")
        projective = len(set(d)) == 1 and all(sum(v) == d[0] for v in config.vectors)
        return cls(config, tuple(d), projective)


@dataclass(frozen=True)
class Binomial:
    """x^alpha - x^beta as a pair of exponent vectors over the columns."""

    alpha: Vector
    beta: Vector

    def __post_init__(self):
        if len(self.alpha) != len(self.beta):
            raise ValidationError("exponent vectors of different length")
        if any(x < 0 for x in self.alpha) or any(x < 0 for x in self.beta):
            raise ValidationError("exponents must be nonnegative")

    def normalized(self) -> "Binomial":
        """Divide out the common monomial so the two sides are coprime."""
        common = tuple(min(a, b) for a, b in zip(self.alpha, self.beta))
        if not any(common):
            return self
        return Binomial(
            tuple(a - c for a, c in zip(self.alpha, common)),
            tuple(b - c for b, c in zip(self.beta, common)),
        )

    def coprime_sides(self) -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.alpha, self.beta))


def a_degree(config: Configuration, exponents: Vector) -> Vector:
    """Multidegree of a monomial: the weighted column sum."""
    if len(exponents) != config.n:
        raise ValidationError("exponent vector length does not match configuration")
    deg = [0] * config.m
    for e, v in zip(exponents, config.vectors):
        if e:
            for r in range(config.m):
                deg[r] += e * v[r]
    return tuple(deg)


def is_homogeneous(config: Configuration, binomial: Binomial) -> bool:
    """Whether both monomials share the same multidegree (ideal membership)."""
    return a_degree(config, binomial.alpha) == a_degree(config, binomial.beta)


def gcd_vec(a: Vector, b: Vector) -> Vector:
    """Coordinatewise gcd of two proportional vectors.

    Generates the joint integer span coordinatewise: Z a + Z b = Z gcd_vec(a, b).
    """
    if not diophantine.proportional(a, b):
        raise ValidationError("gcd vector is only defined for proportional vectors")
    return tuple(gcd(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class Dropped:
    """Vector left out permanently: it was not in the rational span of the rest."""

    label: int


@dataclass(frozen=True)
class Scaled:
    """Vector replaced by its minimal integer multiple over the rest."""

    label: int
    factor: int


@dataclass(frozen=True)
class Eliminated:
    """Vector removed because factor * vector is representable over the rest."""

    label: int
    factor: int
    certificate: tuple[tuple[int, int], ...]  # (label, coefficient), nonzero only


@dataclass(frozen=True)
class ReductionResult:
    a_red: tuple[Vector, ...]
    a_red_labels: tuple[int, ...]
    generators: tuple[Binomial, ...]
    trace: tuple = field(default=())

    @property
    def is_empty(self) -> bool:
        return not self.a_red


def height(config: Configuration) -> int:
    """n minus the rank of the column lattice."""
    return config.n - exactlin.rank_of_columns(config.vectors)


def reduce(config: Configuration) -> ReductionResult:
    """Run the reduction sweep to its fixed point.

    Vectors are processed in ascending label order.  Each surviving label
    carries the product of all scalings applied to it; an elimination of
    label i with factor B and certificate gamma over the current vectors
    emits the generator x_i^(c_i B) - prod_j x_j^(c_j gamma_j), which is
    homogeneous for the original configuration by construction.
    """
    pos = {label: idx for idx, label in enumerate(config.labels)}
    state: dict[int, tuple[Vector, int]] = {
        label: (vec, 1) for label, vec in zip(config.labels, config.vectors)
    }
    generators: list[Binomial] = []
    trace: list = []

    for _ in range(_MAX_SWEEPS):
        snapshot = sorted(state)
        before = dict(state)
        for label in snapshot:
            vec, mult = state.pop(label)
            rest = sorted(state)
            rest_vectors = [state[l][0] for l in rest]
            if not exactlin.in_q_span(vec, rest_vectors):
                trace.append(Dropped(label))
                continue
            factor = exactlin.min_multiple_in_zspan(vec, rest_vectors, assume_in_span=True)
            scaled = tuple(factor * x for x in vec)
            cert = diophantine.semigroup_member(scaled, rest_vectors)
            if cert is None:
                state[label] = (scaled, mult * factor)
                if factor > 1:
                    trace.append(Scaled(label, factor))
                continue
            alpha = [0] * config.n
            alpha[pos[label]] = mult * factor
            beta = [0] * config.n
            for other, coeff in zip(rest, cert):
                if coeff:
                    beta[pos[other]] = coeff * state[other][1]
            binomial = Binomial(tuple(alpha), tuple(beta))
            if not is_homogeneous(config, binomial):
                raise InternalInvariantError("recovered generator is not homogeneous")
            generators.append(binomial)
            trace.append(
                Eliminated(label, factor, tuple((l, c) for l, c in zip(rest, cert) if c))
            )
        if not state or state == before:
            break
    else:
        raise InternalInvariantError("reduction sweep did not stabilize")

    labels = tuple(sorted(state))
    result = ReductionResult(
        a_red=tuple(state[l][0] for l in labels),
        a_red_labels=labels,
        generators=tuple(generators),
        trace=tuple(trace),
    )
    if result.is_empty and len(result.generators) != height(config):
        raise InternalInvariantError("generator count does not match the ideal height")
    return result
