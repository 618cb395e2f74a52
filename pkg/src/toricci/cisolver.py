"""Complete-intersection decision for simplicial configurations.

The decision runs in two phases.  The merge phase repeatedly looks for a
pair of columns whose critical multiples agree as vectors, records the
corresponding binomial, and replaces the pair by its coordinatewise gcd
while remembering which original columns the new vector absorbs.  The
elimination phase then sweeps the surviving set, removing vectors that
leave the rational span and vectors whose minimal integer multiple is
representable both over their own absorbed columns and over everybody
else's.  The ideal is a complete intersection exactly when the set
empties, and in that case the recorded binomials form a minimal
generating set of the right cardinality.

Critical multiples are never computed exactly: a scalar proxy inside the
proportionality class is used instead, and an auxiliary feasibility
system certifies when the proxy is exact.  Columns whose proxy cannot be
certified can never take part in an equal-multiple pair, so they are
simply skipped during the merge phase.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from . import diophantine, exactlin
from .errors import InternalInvariantError, ValidationError
from .toric import (
    Binomial,
    Configuration,
    SimplicialConfig,
    Vector,
    gcd_vec,
    height,
    is_homogeneous,
    reduce as reduce_configuration,
)

_MAX_SWEEPS = 10_000


@dataclass(frozen=True)
class Match:
    """Equal critical multiples m_i a_i = m_j a_j, merged into a new column."""

    i: int
    j: int
    m_i: int
    m_j: int
    merged_label: int


@dataclass(frozen=True)
class MergeFail:
    """A matched multiple was not representable over both absorbed sets."""

    i: int
    j: int
    m_i: int
    m_j: int


@dataclass(frozen=True)
class RepeatElim:
    """Elimination-phase removal of a column with its minimal multiple."""

    label: int
    multiplier: int


@dataclass(frozen=True)
class Residual:
    """The elimination phase stabilized on a nonempty set."""

    labels: tuple[int, ...]


@dataclass(frozen=True)
class CIResult:
    is_ci: bool
    generators: tuple[Binomial, ...]
    events: tuple
    reason: Optional[str] = None


def _evaluate_m(label: int, current: dict[int, Vector]) -> Optional[int]:
    """Certified critical multiple of a live column, or None when unusable."""
    vec = current[label]
    order = sorted(current)
    others = [current[l] for l in order if l != label]
    if not any(diophantine.proportional(w, vec) for w in others):
        return None
    if not exactlin.in_cone(vec, others):
        return None
    live = [current[l] for l in order]
    res = diophantine.m_bar(order.index(label), live)
    if res.unmatchable:
        return None
    return res.value


def ci_simplicial(sconfig: SimplicialConfig) -> CIResult:
    """Decide whether the simplicial configuration spans a complete intersection."""
    config = sconfig.config
    pos = {label: idx for idx, label in enumerate(config.labels)}
    current: dict[int, Vector] = dict(zip(config.labels, config.vectors))
    absorbed: dict[int, frozenset[int]] = {l: frozenset([l]) for l in config.labels}
    m_value: dict[int, int] = {}
    events: list = []
    generators: list[Binomial] = []

    for label in sorted(current):
        m = _evaluate_m(label, current)
        if m is not None:
            m_value[label] = m

    next_label = max(config.labels) + 1
    while True:
        pair = None
        live = sorted(l for l in current if l in m_value)
        for a in range(len(live)):
            i = live[a]
            ti = tuple(m_value[i] * x for x in current[i])
            for b in range(a + 1, len(live)):
                j = live[b]
                if all(m_value[j] * x == t for x, t in zip(current[j], ti)):
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            break
        i, j = pair
        mi, mj = m_value[i], m_value[j]
        if gcd(mi, mj) != 1:
            raise InternalInvariantError("matched multiples are not coprime")
        target = tuple(mi * x for x in current[i])
        cert_i = diophantine.semigroup_member_restricted(
            target, config.vectors, [pos[l] for l in absorbed[i]]
        )
        cert_j = diophantine.semigroup_member_restricted(
            target, config.vectors, [pos[l] for l in absorbed[j]]
        )
        if cert_i is None or cert_j is None:
            events.append(MergeFail(i, j, mi, mj))
            return CIResult(False, (), tuple(events), reason="match-not-representable")
        binomial = Binomial(cert_i, cert_j)
        if not is_homogeneous(config, binomial):
            raise InternalInvariantError("merge binomial is not homogeneous")
        generators.append(binomial)
        merged = next_label
        next_label += 1
        merged_vec = gcd_vec(current[i], current[j])
        del current[i], current[j], m_value[i], m_value[j]
        current[merged] = merged_vec
        absorbed[merged] = absorbed[i] | absorbed[j]
        events.append(Match(i, j, mi, mj, merged))
        m = _evaluate_m(merged, current)
        if m is not None:
            m_value[merged] = m

    for _ in range(_MAX_SWEEPS):
        snapshot = sorted(current)
        changed = False
        for label in snapshot:
            vec = current[label]
            rest = [l for l in sorted(current) if l != label]
            rest_vectors = [current[l] for l in rest]
            if not exactlin.in_q_span(vec, rest_vectors):
                del current[label]
                changed = True
                continue
            multiplier = exactlin.min_multiple_in_zspan(vec, rest_vectors, assume_in_span=True)
            target = tuple(multiplier * x for x in vec)
            cert_self = diophantine.semigroup_member_restricted(
                target, config.vectors, [pos[l] for l in absorbed[label]]
            )
            if cert_self is None:
                continue
            union = set()
            for l in rest:
                union |= absorbed[l]
            cert_rest = diophantine.semigroup_member_restricted(
                target, config.vectors, [pos[l] for l in union]
            )
            if cert_rest is None:
                continue
            binomial = Binomial(cert_self, cert_rest)
            if not is_homogeneous(config, binomial):
                raise InternalInvariantError("elimination binomial is not homogeneous")
            generators.append(binomial)
            events.append(RepeatElim(label, multiplier))
            del current[label]
            changed = True
        if not current:
            break
        if not changed:
            events.append(Residual(tuple(sorted(current))))
            return CIResult(False, (), tuple(events), reason="nonempty-residual")
    else:
        raise InternalInvariantError("elimination sweep did not stabilize")

    if len(generators) != height(config):
        raise InternalInvariantError("generator count does not match the ideal height")
    return CIResult(True, tuple(generators), tuple(events))


def ci_projective(sconfig: SimplicialConfig) -> CIResult:
    """Projective fast path: a complete intersection iff the reduction empties."""
    if not sconfig.projective:
        raise ValidationError("configuration is not projective")
    red = reduce_configuration(sconfig.config)
    if red.is_empty:
        return CIResult(True, red.generators, ())
    return CIResult(
        False,
        (),
        (Residual(red.a_red_labels),),
        reason="nonempty-reduction",
    )


def gen_family_curve(d: int, ds: Sequence[int]) -> SimplicialConfig:
    """Plane monomial curve family of degree d with inner exponents ds.

    Columns: d e1, d e2, (d-1) e1 + e2, then (d-k) e1 + k e2 for each k in
    ds, which must satisfy 1 < d_4 < ... < d_n < d.
    """
    if d < 2:
        raise ValidationError("degree must be at least 2")
    steps = [int(k) for k in ds]
    if any(k <= 1 for k in steps) or any(k >= d for k in steps):
        raise ValidationError("inner exponents must lie strictly between 1 and d")
    if any(a >= b for a, b in zip(steps, steps[1:])):
        raise ValidationError("inner exponents must be strictly increasing")
    columns = [(d, 0), (0, d), (d - 1, 1)] + [(d - k, k) for k in steps]
    return SimplicialConfig.detect(Configuration.from_columns(columns))


def curve_family_expected(d: int, ds: Sequence[int]) -> bool:
    """Ground truth for the curve family: the divisibility chain d_4 | ... | d."""
    steps = list(ds)
    chain = all(b % a == 0 for a, b in zip(steps, steps[1:]))
    return chain and (not steps or d % steps[-1] == 0)


def gen_family_surface(m: int, i: int, j: int) -> SimplicialConfig:
    """Quadric family: 2 e1, ..., 2 em plus the single mixed column e_i + e_j."""
    if m < 2:
        raise ValidationError("need at least two axes")
    if i == j or not (1 <= i <= m) or not (1 <= j <= m):
        raise ValidationError("the mixed column needs two distinct axes")
    columns = [tuple(2 if r == k else 0 for r in range(m)) for k in range(m)]
    mixed = tuple(1 if r in (i - 1, j - 1) else 0 for r in range(m))
    columns.append(mixed)
    return SimplicialConfig.detect(Configuration.from_columns(columns))
