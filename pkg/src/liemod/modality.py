"""Orbit dimensions and modality of linear Lie algebra actions.

The modality of an action is the largest number of parameters a family of
orbits depends on.  For visible linear actions it equals
``dim V - max orbit dimension``, which reduces everything here to exact
stabilizer computations: the stabilizer of a point v is the kernel of the
map sending an algebra element to its action on v, and orbit dimension is
the complementary rank.  Genericity is handled by seeded integer sampling
with a max-over-trials protocol, so results are deterministic per seed and
false lows are detectable by rerunning with another seed.

Also houses the rank-2 family aggregator (max of closure dim minus orbit
dim over a finite constructible cover), the closed form for special linear
rank one, and the shipped classification tables of modality 0, 1 and 2.
"""

import json
import random
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import linalg
from .hwmod import (
    DEFAULT_BUILD_CEILING, IrrepSpec, build_hw_module, extend_to_full_algebra,
    weyl_dim,
)
from .rootsys import RootSystemType, build_root_system

__all__ = [
    "ActionSpec", "OrbitDimReport", "CoverPiece", "TableEntry", "VerifyResult",
    "ExmoReport", "stabilizer_dim_at", "orbit_dim_at", "generic_orbit_dim",
    "modality_visible", "sl2_action", "sl2_modality", "modality_from_cover",
    "action_from_module", "load_raw_tables", "table_entries",
    "lookup_expected_modality", "verify_table_entry", "sum_of_copies_check",
    "DEFAULT_TRIALS", "DEFAULT_SEED", "DEFAULT_RANK_CUTOFF", "SAMPLE_BOX",
]

DEFAULT_TRIALS = 5
DEFAULT_SEED = 2024
DEFAULT_RANK_CUTOFF = 8
SAMPLE_BOX = 10


@dataclass(frozen=True)
class ActionSpec:
    """A Lie algebra basis acting on a vector space by square matrices."""

    matrices: tuple
    algebra_dim: int
    space_dim: int

    def __post_init__(self):
        object.__setattr__(self, "matrices", tuple(self.matrices))
        if len(self.matrices) != self.algebra_dim:
            raise ValueError("need one matrix per algebra basis element")
        for m in self.matrices:
            if m.shape != (self.space_dim, self.space_dim):
                raise ValueError("action matrix has wrong shape")


@dataclass(frozen=True)
class OrbitDimReport:
    generic_orbit_dim: int
    stabilizer_dim: int
    trials_used: int
    seed: int

    def __post_init__(self):
        assert self.generic_orbit_dim + self.stabilizer_dim >= 0


def stabilizer_dim_at(action, v):
    """Dimension of the subalgebra annihilating the point v."""
    if len(v) != action.space_dim:
        raise ValueError("point has wrong length")
    vv = linalg.rvec([x for x in v])
    if action.algebra_dim == 0:
        return 0
    cols = [np.dot(m, vv) for m in action.matrices]
    mat = np.empty((action.space_dim, action.algebra_dim), dtype=object)
    for j, c in enumerate(cols):
        for i in range(action.space_dim):
            mat[i, j] = c[i]
    return action.algebra_dim - linalg.rank(mat)


def orbit_dim_at(action, v):
    return action.algebra_dim - stabilizer_dim_at(action, v)


def generic_orbit_dim(action, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED):
    """Max orbit dimension over seeded integer sample points.

    Orbit dimension is maximal on a dense open set, so the max over trials
    can only understate the true value, never overstate it; box sampling
    misses the non-generic locus with overwhelming probability.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        v = [rng.randint(-SAMPLE_BOX, SAMPLE_BOX) for _ in range(action.space_dim)]
        best = max(best, orbit_dim_at(action, v))
    return OrbitDimReport(generic_orbit_dim=best,
                          stabilizer_dim=action.algebra_dim - best,
                          trials_used=trials, seed=seed)


def modality_visible(action, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED):
    """space_dim minus generic orbit dimension.

    Valid as the modality when the action is visible (finitely many orbits
    in each quotient fiber); visibility itself is a trusted premise here.
    """
    return action.space_dim - generic_orbit_dim(action, trials, seed).generic_orbit_dim


# ---------------------------------------------------------------------------
# rank-1 special linear group: explicit sums and the closed form

def sl2_action(summands):
    """Block action of e, f, h on a direct sum of irreducibles.

    ``summands`` are highest weights (0 means a trivial line).
    """
    a1 = RootSystemType("A", 1)
    dims = [n + 1 for n in summands]
    total = sum(dims)
    mats = [linalg.zeros(total) for _ in range(3)]
    off = 0
    for n in summands:
        mod = build_hw_module(IrrepSpec(a1, (n,)), ceiling=max(total, n + 1))
        for tgt, src in zip(mats, (mod.e[0], mod.f[0], mod.h[0])):
            d = mod.dimension
            for i in range(d):
                for j in range(d):
                    if src[i, j]:
                        tgt[off + i, off + j] = src[i, j]
        off += n + 1
    return ActionSpec(matrices=tuple(mats), algebra_dim=3, space_dim=total)


def sl2_modality(summands):
    """Closed-form modality of a direct sum of rank-1 irreducibles.

    dim V in the all-trivial case; dim V - 2 when the nontrivial part is a
    single 2- or 3-dimensional summand; dim V - 3 otherwise.
    """
    dims = [n + 1 for n in summands]
    total = sum(dims)
    nonzero = sorted(n for n in summands if n > 0)
    if not nonzero:
        return total
    if nonzero == [1] or nonzero == [2]:
        return total - 2
    return total - 3


# ---------------------------------------------------------------------------
# finite constructible covers with constant orbit dimension per piece

@dataclass(frozen=True)
class CoverPiece:
    closure_dim: int
    orbit_dim: int

    def __post_init__(self):
        if not 0 <= self.orbit_dim <= self.closure_dim:
            raise ValueError("need 0 <= orbit_dim <= closure_dim")


def modality_from_cover(pieces):
    """Modality of an action covered by finitely many constant-orbit-dim
    families: the max over pieces of closure_dim - orbit_dim."""
    pieces = list(pieces)
    if not pieces:
        raise ValueError("cover must be nonempty")
    return max(p.closure_dim - p.orbit_dim for p in pieces)


# ---------------------------------------------------------------------------
# representation actions and the shipped classification tables

def action_from_module(spec, ceiling=DEFAULT_BUILD_CEILING):
    """Action of a full algebra basis on the irreducible module of spec."""
    build_hw_module(spec, ceiling=ceiling)  # ceiling enforcement
    full = extend_to_full_algebra(spec)
    return ActionSpec(matrices=full.full_basis,
                      algebra_dim=len(full.full_basis),
                      space_dim=full.dimension)


@dataclass(frozen=True)
class TableEntry:
    rstype: RootSystemType
    weight: tuple
    expected_modality: int
    table: str

    @property
    def entry_id(self):
        return (f"{self.table}:{self.rstype.name}:"
                f"{','.join(map(str, self.weight))}")


_RAW_TABLES = None


def load_raw_tables():
    global _RAW_TABLES
    if _RAW_TABLES is None:
        text = (resources.files("liemod") / "data" / "modality_tables.json").read_text()
        _RAW_TABLES = json.loads(text)
    return _RAW_TABLES


def _record_weight(record, rank):
    w = [0] * rank
    for idx, coeff in record["weight"]:
        w[idx - 1] = coeff
    return tuple(w)


def _record_ranks(record, rank_cutoff):
    if "rank" in record:
        return [record["rank"]]
    lo = record["rank_min"]
    parity = record.get("rank_parity")
    step = 2 if parity else 1
    if parity == "even" and lo % 2 != 0:
        lo += 1
    if parity == "odd" and lo % 2 != 1:
        lo += 1
    return list(range(lo, rank_cutoff + 1, step))


def _record_matches(record, family, rank):
    if record["family"] != family:
        return False
    if "rank" in record:
        return record["rank"] == rank
    if rank < record["rank_min"]:
        return False
    parity = record.get("rank_parity")
    if parity == "even" and rank % 2 != 0:
        return False
    if parity == "odd" and rank % 2 != 1:
        return False
    return True


def table_entries(which="all", rank_cutoff=DEFAULT_RANK_CUTOFF):
    """Expand the shipped tables into concrete entries.

    Families are truncated at rank_cutoff; single entries are kept whatever
    the cutoff.  ``which`` is one of m1, m2, m3, all.
    """
    raw = load_raw_tables()
    names = ["m1", "m2", "m3"] if which == "all" else [which]
    out = []
    for name in names:
        if name not in raw:
            raise ValueError(f"unknown table {name!r}")
        for record in raw[name]:
            for rank in _record_ranks(record, rank_cutoff):
                out.append(TableEntry(
                    rstype=RootSystemType(record["family"], rank),
                    weight=_record_weight(record, rank),
                    expected_modality=record["modality"],
                    table=name))
    return out


def lookup_expected_modality(rstype, weight):
    """Table entry matching the weight or its dual, or None.

    The tables list one member of each contragredient pair, so lookups are
    normalized through the dual dominant weight.
    """
    rs = build_root_system(rstype)
    weight = tuple(int(c) for c in weight)
    candidates = {weight, rs.dominant_dual(weight)}
    raw = load_raw_tables()
    for name in ("m1", "m2", "m3"):
        for record in raw[name]:
            if not _record_matches(record, rstype.family, rstype.rank):
                continue
            if _record_weight(record, rstype.rank) in candidates:
                return TableEntry(rstype=rstype, weight=weight,
                                  expected_modality=record["modality"],
                                  table=name)
    return None


@dataclass(frozen=True)
class VerifyResult:
    entry: TableEntry
    dim_v: int
    computed: int
    matches: bool
    orbit_dim: int
    skipped: bool
    reason: str
    seed: int
    trials: int


def verify_table_entry(entry, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED,
                       ceiling=DEFAULT_BUILD_CEILING):
    """Build the entry's module, compute its modality, compare to the table."""
    spec = IrrepSpec(entry.rstype, entry.weight)
    dim_v = weyl_dim(spec)
    if dim_v > ceiling:
        return VerifyResult(entry=entry, dim_v=dim_v, computed=-1,
                            matches=False, orbit_dim=-1, skipped=True,
                            reason=f"dimension {dim_v} exceeds ceiling {ceiling}",
                            seed=seed, trials=trials)
    action = action_from_module(spec, ceiling=ceiling)
    report = generic_orbit_dim(action, trials=trials, seed=seed)
    computed = action.space_dim - report.generic_orbit_dim
    return VerifyResult(entry=entry, dim_v=dim_v, computed=computed,
                        matches=computed == entry.expected_modality,
                        orbit_dim=report.generic_orbit_dim, skipped=False,
                        reason="", seed=seed, trials=trials)


# ---------------------------------------------------------------------------
# copies of the natural module: the standard counterexample family

@dataclass(frozen=True)
class ExmoReport:
    n: int
    d: int
    space_dim: int
    regular_sheet_modality: int
    open_orbit_found: bool
    family_dim: int
    family_orbit_dim: int
    family_lower_bound: int
    modality_regular: bool
    seed: int


def sum_of_copies_check(n, d, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED):
    """Modality anatomy of d copies of the natural rank n-1 module.

    The generic orbit is open (regular-sheet modality 0), yet the points
    (v, c_1 v, ..., c_{d-1} v) form an (n+d-1)-parameter family of orbits of
    dimension n, forcing total modality >= d-1.  For d >= 2 the action is
    therefore not modality-regular.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if not 2 <= d <= n - 1:
        raise ValueError("need 2 <= d <= n-1")
    rstype = RootSystemType("A", n - 1)
    natural = tuple(1 if i == 0 else 0 for i in range(n - 1))
    full = extend_to_full_algebra(IrrepSpec(rstype, natural))
    algebra_dim = len(full.full_basis)
    space_dim = n * d
    mats = []
    for m in full.full_basis:
        big = linalg.zeros(space_dim)
        for blk in range(d):
            for i in range(n):
                for j in range(n):
                    if m[i, j]:
                        big[blk * n + i, blk * n + j] = m[i, j]
        mats.append(big)
    action = ActionSpec(matrices=tuple(mats), algebra_dim=algebra_dim,
                        space_dim=space_dim)

    report = generic_orbit_dim(action, trials=trials, seed=seed)
    regular_sheet_modality = space_dim - report.generic_orbit_dim

    rng = random.Random(seed)
    family_orbit = 0
    for _ in range(trials):
        v = [rng.randint(-SAMPLE_BOX, SAMPLE_BOX) for _ in range(n)]
        if not any(v):
            v[0] = 1
        point = list(v)
        for _ in range(d - 1):
            c = rng.randint(-SAMPLE_BOX, SAMPLE_BOX)
            point.extend(c * x for x in v)
        family_orbit = max(family_orbit, orbit_dim_at(action, point))
    family_dim = n + d - 1
    lower = family_dim - family_orbit
    return ExmoReport(n=n, d=d, space_dim=space_dim,
                      regular_sheet_modality=regular_sheet_modality,
                      open_orbit_found=report.generic_orbit_dim == space_dim,
                      family_dim=family_dim, family_orbit_dim=family_orbit,
                      family_lower_bound=lower,
                      modality_regular=lower <= regular_sheet_modality,
                      seed=seed)
