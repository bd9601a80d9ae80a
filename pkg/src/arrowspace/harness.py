"""Seeded randomized verification of the axioms and theorems.

Each check pairs a generator with a predicate. The generator draws a named
instance, a dict of Points and Fractions. The predicate decides whether the
statement holds on that instance. If the instance's preconditions do not
hold, the predicate returns True, so shrinking a counterexample can only
stop at real failures.

Every trial gets its own ``random.Random``, seeded from
``(seed, check name, trial index)``. Reports are therefore reproducible
byte for byte and do not depend on the order in which checks run.
"""

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import affine, arrow_ops, equivalence, line, vector_space
from .arrow_ops import add_arrows, scalar_mul
from .core import (
    EUCLIDEAN,
    Arrow,
    Point,
    displacement,
    format_rational,
    is_degenerate,
    negate,
    translate,
    zero_point,
)
from .equivalence import related
from .errors import ArrowSpaceError, UndefinedAddition
from .vector_space import to_vector, vec_add, vec_add_at, vec_inner, vec_neg, vec_scalar_mul

__all__ = [
    "AXIOM_CHECKS",
    "THEOREM_CHECKS",
    "Check",
    "CheckResult",
    "Failure",
    "Report",
    "Sampler",
    "TrialConfig",
    "run_axiom_suite",
    "run_checks",
    "run_theorem_suite",
    "shrink",
]

# inner-loop sizes used by several theorem checks
LINE_EQ_PAIRS = 100
TRANSPORT_PAIRS = 100
PROJECTION_GRID = tuple(Fraction(k, 4) for k in range(-25, 25))  # 50 parameters
PARALLEL_GRID = tuple(Fraction(k, 4) for k in range(-16, 17))
BARYCENTER_ORIGINS = 20
MAX_BARYCENTER_POINTS = 6

MAX_REPORTED = 3
SHRINK_BUDGET = 500


@dataclass(frozen=True)
class TrialConfig:
    trials: int
    dim: int
    seed: int
    coord_bound: int = 10
    denom_bound: int = 4

    def __post_init__(self):
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        if self.dim < 1:
            raise ValueError("dim must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.coord_bound < 1 or self.denom_bound < 1:
            raise ValueError("coordinate bounds must be positive")


class Sampler:
    """Random rationals, points and arrows inside the configured bounds."""

    def __init__(self, rng, cfg):
        self.rng = rng
        self.dim = cfg.dim
        self.coord_bound = cfg.coord_bound
        self.denom_bound = cfg.denom_bound

    def rational(self):
        rng = self.rng
        return Fraction(
            rng.randint(-self.coord_bound, self.coord_bound),
            rng.randint(1, self.denom_bound),
        )

    def nonzero_rational(self):
        while True:
            q = self.rational()
            if q:
                return q

    def scalar(self):
        # special values are where arrow and vector behaviour diverge
        if self.rng.random() < 0.15:
            return Fraction(self.rng.choice((0, 1, -1)))
        return self.rational()

    def coin(self, p=0.5):
        return self.rng.random() < p

    def point(self):
        return Point._from_fractions(tuple(self.rational() for _ in range(self.dim)))

    def distinct_point(self, *avoid):
        while True:
            p = self.point()
            if p not in avoid:
                return p

    def distinct_scalars(self, n):
        out = []
        while len(out) < n:
            q = self.rational()
            if q not in out:
                out.append(q)
        return out

    def offset(self):
        """A nonzero displacement, stored as a Point."""
        while True:
            p = self.point()
            if any(p.coords):
                return p


@dataclass(frozen=True)
class Check:
    name: str
    statement: str
    generate: Callable[[Sampler], Dict[str, object]]
    holds: Callable[[Dict[str, object], object], bool]


@dataclass
class Failure:
    trial: int
    instance: Dict[str, object]
    error: Optional[str] = None

    def lines(self):
        parts = []
        for key in sorted(self.instance):
            value = self.instance[key]
            if isinstance(value, Point):
                parts.append("%s=%s" % (key, value))
            else:
                parts.append("%s=%s" % (key, format_rational(value)))
        out = ["trial %d:" % self.trial]
        out += ["  " + p for p in parts]
        if self.error:
            out.append("  error: %s" % self.error)
        return out


@dataclass
class CheckResult:
    name: str
    trials: int
    failures: int = 0
    examples: List[Failure] = field(default_factory=list)

    @property
    def ok(self):
        return self.failures == 0


@dataclass
class Report:
    config: TrialConfig
    results: List[CheckResult]
    wall_time: float = 0.0

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    @property
    def total_failures(self):
        return sum(r.failures for r in self.results)

    def result(self, name):
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_text(self):
        """One ``CHECK`` line per check, then indented counterexamples.

        Wall time is left out so that the text is reproducible.
        """
        out = []
        for r in self.results:
            out.append("CHECK %s trials=%d failures=%d" % (r.name, r.trials, r.failures))
            for failure in r.examples:
                out.extend("    " + s for s in failure.lines())
        return "\n".join(out) + ("\n" if out else "")

    def to_dict(self):
        return {
            "config": {
                "trials": self.config.trials,
                "dim": self.config.dim,
                "seed": self.config.seed,
                "coord_bound": self.config.coord_bound,
                "denom_bound": self.config.denom_bound,
            },
            "wall_time": self.wall_time,
            "checks": [
                {
                    "name": r.name,
                    "trials": r.trials,
                    "failures": r.failures,
                    "examples": [
                        {
                            "trial": f.trial,
                            "error": f.error,
                            "instance": {k: str(v) if isinstance(v, Point) else format_rational(v)
                                         for k, v in sorted(f.instance.items())},
                        }
                        for f in r.examples
                    ],
                }
                for r in self.results
            ],
        }


def _evaluate(check, instance, model):
    """Return None on success, else an error string ('' for a plain False)."""
    try:
        return None if check.holds(instance, model) else ""
    except Exception as exc:  # noqa: BLE001 - any crash is a finding
        return "%s: %s" % (type(exc).__name__, exc)


def _still_fails(check, instance, model):
    try:
        return not check.holds(instance, model)
    except ArrowSpaceError:
        # candidate broke a precondition; not a counterexample
        return False
    except Exception:  # noqa: BLE001
        return True


def _shrink_candidates(value):
    """Smaller variants of one instance value, most aggressive first."""
    if isinstance(value, Point):
        coords = value.coords
        for i, c in enumerate(coords):
            if c != 0:
                yield Point._from_fractions(coords[:i] + (Fraction(0),) + coords[i + 1:])
        for i, c in enumerate(coords):
            for smaller in _smaller_rationals(c):
                yield Point._from_fractions(coords[:i] + (smaller,) + coords[i + 1:])
    else:
        if value != 0:
            yield Fraction(0)
        yield from _smaller_rationals(value)


def _smaller_rationals(q):
    if q.denominator != 1:
        yield Fraction(int(q))
        if q.denominator > 2:
            yield q.limit_denominator(q.denominator // 2)
    elif abs(q) > 1:
        sign = 1 if q > 0 else -1
        yield Fraction(sign)
        yield Fraction(sign * (abs(q.numerator) // 2))


def shrink(check, instance, model=EUCLIDEAN, budget=SHRINK_BUDGET):
    """Greedily simplify a failing instance.

    First tries zeroing coordinates and scalars, then reducing denominators
    and integer magnitudes.
    Each step is kept only if the check still fails.
    """
    current = dict(instance)
    evaluations = 0
    improved = True
    while improved and evaluations < budget:
        improved = False
        for key in sorted(current):
            for candidate in _shrink_candidates(current[key]):
                if evaluations >= budget:
                    break
                evaluations += 1
                trial = dict(current)
                trial[key] = candidate
                if _still_fails(check, trial, model):
                    current = trial
                    improved = True
                    break
    return current


def run_checks(checks, cfg, model=EUCLIDEAN, only=None):
    start = time.perf_counter()
    results = []
    if cfg.trials > 0:
        for check in sorted(checks, key=lambda c: c.name):
            if only is not None and not any(check.name.startswith(p) for p in only):
                continue
            result = CheckResult(check.name, cfg.trials)
            for i in range(cfg.trials):
                rng = random.Random("%d/%s/%d" % (cfg.seed, check.name, i))
                instance = check.generate(Sampler(rng, cfg))
                error = _evaluate(check, instance, model)
                if error is None:
                    continue
                result.failures += 1
                if len(result.examples) < MAX_REPORTED:
                    small = shrink(check, instance, model) if not error else instance
                    result.examples.append(Failure(i, small, error or None))
            results.append(result)
    return Report(cfg, results, time.perf_counter() - start)


def run_axiom_suite(cfg, model=EUCLIDEAN, only=None):
    """Check each axiom ``cfg.trials`` times against ``model``."""
    return run_checks(AXIOM_CHECKS, cfg, model, only)


def run_theorem_suite(cfg, model=EUCLIDEAN, only=None):
    """One named check per derived statement, all on fresh random instances."""
    return run_checks(THEOREM_CHECKS, cfg, model, only)


AXIOM_CHECKS: List[Check] = []
THEOREM_CHECKS: List[Check] = []


def _register(registry, name, statement, generate):
    def deco(holds):
        registry.append(Check(name, statement, generate, holds))
        return holds
    return deco


def axiom(name, statement, generate):
    return _register(AXIOM_CHECKS, name, statement, generate)


def theorem(name, statement, generate):
    return _register(THEOREM_CHECKS, name, statement, generate)


# ---------------------------------------------------------------- generators


def _points(*names):
    def gen(s):
        return {n: s.point() for n in names}
    return gen


def _maybe_degenerate_pair(s):
    a = s.point()
    return {"A": a, "B": a if s.coin(0.2) else s.point()}


def _scalar_and_points(*names, scalars=("t",)):
    def gen(s):
        inst = {n: s.point() for n in names}
        inst.update({k: s.scalar() for k in scalars})
        return inst
    return gen


def _distinct(*names, scalars=()):
    def gen(s):
        inst = {}
        for n in names:
            inst[n] = s.distinct_point(*inst.values())
        inst.update({k: s.scalar() for k in scalars})
        return inst
    return gen


def _transported(s, a):
    """A random arrow related to ``a``: transported to a random point."""
    tr = equivalence.parallel_transport(a, s.point())
    return tr.tail_anchored if s.coin() else tr.head_anchored


def _related_pair_gen(s):
    a = Arrow(s.point(), s.point())
    c = Arrow(s.point(), s.point())
    b = _transported(s, a)
    d = _transported(s, c)
    return {"A": a.tail, "B": a.head, "C": b.tail, "D": b.head,
            "E": c.tail, "F": c.head, "G": d.tail, "H": d.head}


# -------------------------------------------------------------------- axioms


@axiom("axiom1.positive_definiteness",
       "<AB,AB> >= 0, with equality exactly when A == B",
       _maybe_degenerate_pair)
def _(i, m):
    ms = m.measure_sq(Arrow(i["A"], i["B"]))
    return ms >= 0 and (ms == 0) == (i["A"] == i["B"])


@axiom("axiom1.symmetry", "<AB,CD> == <CD,AB>", _points("A", "B", "C", "D"))
def _(i, m):
    ab, cd = Arrow(i["A"], i["B"]), Arrow(i["C"], i["D"])
    return m.pre_inner(ab, cd) == m.pre_inner(cd, ab)


@axiom("axiom1.addition_linearity", "<AB + BC, LM> == <AB,LM> + <BC,LM>",
       _points("A", "B", "C", "L", "M"))
def _(i, m):
    ab, bc = Arrow(i["A"], i["B"]), Arrow(i["B"], i["C"])
    lm = Arrow(i["L"], i["M"])
    return m.pre_inner(add_arrows(ab, bc), lm) == m.pre_inner(ab, lm) + m.pre_inner(bc, lm)


@axiom("axiom1.bilinear_composite",
       "<AB + BC, LM + MR> expands into four head-to-tail terms",
       _points("A", "B", "C", "L", "M", "R"))
def _(i, m):
    ab, bc = Arrow(i["A"], i["B"]), Arrow(i["B"], i["C"])
    lm, mr = Arrow(i["L"], i["M"]), Arrow(i["M"], i["R"])
    ip = m.pre_inner
    lhs = ip(add_arrows(ab, bc), add_arrows(lm, mr))
    return lhs == ip(ab, lm) + ip(ab, mr) + ip(bc, lm) + ip(bc, mr)


@axiom("axiom1.negation", "<-AB,CD> == -<AB,CD> == <AB,-CD>", _points("A", "B", "C", "D"))
def _(i, m):
    ab, cd = Arrow(i["A"], i["B"]), Arrow(i["C"], i["D"])
    ip = m.pre_inner(ab, cd)
    return m.pre_inner(negate(ab), cd) == -ip == m.pre_inner(ab, negate(cd))


@axiom("axiom2.scalar_linearity", "<(t)AB,CD> == t<AB,CD> and <(t)AB,(s)CD> == ts<AB,CD>",
       _scalar_and_points("A", "B", "C", "D", scalars=("s", "t")))
def _(i, m):
    ab, cd = Arrow(i["A"], i["B"]), Arrow(i["C"], i["D"])
    s, t = i["s"], i["t"]
    ip = m.pre_inner(ab, cd)
    return (m.pre_inner(scalar_mul(t, ab), cd) == t * ip
            and m.pre_inner(scalar_mul(t, ab), scalar_mul(s, cd)) == t * s * ip)


@axiom("axiom4.related_products", "AB ~ CD and EF ~ GH imply <AB,EF> == <CD,GH>",
       _related_pair_gen)
def _(i, m):
    ab, cd = Arrow(i["A"], i["B"]), Arrow(i["C"], i["D"])
    ef, gh = Arrow(i["E"], i["F"]), Arrow(i["G"], i["H"])
    if not (related(ab, cd, m) and related(ef, gh, m)):
        return True
    return equivalence.check_axiom4(ab, cd, ef, gh, m)


def _transport_gen(s):
    a = s.point()
    inst = {"A": a, "B": s.distinct_point(a), "P": s.point()}
    for k in range(4):
        inst["E%d" % k] = s.offset()
    return inst


@axiom("axiom5.parallel_transport",
       "for AB with A != B and any P there are unique K, K' with AB ~ PK and AB ~ K'P",
       _transport_gen)
def _(i, m):
    ab, p = Arrow(i["A"], i["B"]), i["P"]
    if is_degenerate(ab):
        return True
    pk, kp = equivalence.parallel_transport(ab, p)
    if pk.tail != p or kp.head != p:
        return False
    if not (related(ab, pk, m) and related(ab, kp, m)):
        return False
    for k in range(4):
        e = i["E%d" % k].coords
        if not any(e):
            continue
        if related(ab, Arrow(p, translate(pk.head, e)), m):
            return False
        if related(ab, Arrow(translate(kp.tail, e), p), m):
            return False
    return True


# ------------------------------------------------------- arrow algebra theorems


@theorem("arrow.associativity", "(AB + BC) + CD == AB + (BC + CD) == AD",
         _points("A", "B", "C", "D"))
def _(i, m):
    ab, bc, cd = Arrow(i["A"], i["B"]), Arrow(i["B"], i["C"]), Arrow(i["C"], i["D"])
    left = add_arrows(add_arrows(ab, bc), cd)
    right = add_arrows(ab, add_arrows(bc, cd))
    return left == right == Arrow(i["A"], i["D"])


@theorem("arrow.triangle_closure", "AB + BC + CA == AA", _points("A", "B", "C"))
def _(i, m):
    a, b, c = i["A"], i["B"], i["C"]
    return add_arrows(add_arrows(Arrow(a, b), Arrow(b, c)), Arrow(c, a)) == Arrow(a, a)


def _identity_gen(s):
    a, b = s.point(), s.point()
    return {"A": a, "B": b, "C": a if s.coin() else s.point(), "D": a if s.coin() else s.point()}


@theorem("arrow.identity",
         "AA + AB == AB == AB + BB, and AA is the only left identity for AB",
         _identity_gen)
def _(i, m):
    a, b, c, d = i["A"], i["B"], i["C"], i["D"]
    ab = Arrow(a, b)
    if add_arrows(Arrow(a, a), ab) != ab or add_arrows(ab, Arrow(b, b)) != ab:
        return False
    try:
        is_identity = add_arrows(Arrow(c, d), ab) == ab
    except UndefinedAddition:
        return d != a
    return is_identity == (Arrow(c, d) == Arrow(a, a))


def _inverse_gen(s):
    a, b = s.point(), s.point()
    return {"A": a, "B": b, "C": a if s.coin() else s.point()}


@theorem("arrow.inverse", "AB + BA == AA, and BA is the only arrow that does this",
         _inverse_gen)
def _(i, m):
    a, b, c = i["A"], i["B"], i["C"]
    if add_arrows(Arrow(a, b), Arrow(b, a)) != Arrow(a, a):
        return False
    return (add_arrows(Arrow(a, b), Arrow(b, c)) == Arrow(a, a)) == (c == a)


@theorem("arrow.noncommutative", "AB + BA == AA differs from BA + AB == BB when A != B",
         _distinct("A", "B"))
def _(i, m):
    a, b = i["A"], i["B"]
    if a == b:
        return True
    ab, ba = Arrow(a, b), Arrow(b, a)
    return add_arrows(ab, ba) == Arrow(a, a) and add_arrows(ba, ab) == Arrow(b, b) \
        and add_arrows(ab, ba) != add_arrows(ba, ab)


def _partial_gen(s):
    a, b = s.point(), s.point()
    return {"A": a, "B": b, "C": b if s.coin() else s.point(), "D": s.point()}


@theorem("arrow.partial_addition", "AB + CD is defined exactly when B == C",
         _partial_gen)
def _(i, m):
    ab, cd = Arrow(i["A"], i["B"]), Arrow(i["C"], i["D"])
    try:
        total = add_arrows(ab, cd)
    except UndefinedAddition:
        return i["B"] != i["C"]
    return i["B"] == i["C"] and total == Arrow(i["A"], i["D"])


@theorem("arrow.zero_arrow_product", "<AA,CD> == 0", _points("A", "C", "D"))
def _(i, m):
    return m.pre_inner(Arrow(i["A"], i["A"]), Arrow(i["C"], i["D"])) == 0


@theorem("arrow.measure_negation", "|BA|^2 == |AB|^2", _points("A", "B"))
def _(i, m):
    ab = Arrow(i["A"], i["B"])
    return m.measure_sq(negate(ab)) == m.measure_sq(ab)


@theorem("scalar.special_values", "(0)AB == AA, (1)AB == AB, (s)AA == AA",
         _scalar_and_points("A", "B", scalars=("s",)))
def _(i, m):
    a, b, s = i["A"], i["B"], i["s"]
    ab, aa = Arrow(a, b), Arrow(a, a)
    return scalar_mul(0, ab) == aa and scalar_mul(1, ab) == ab and scalar_mul(s, aa) == aa


@theorem("scalar.definition",
         "(t)AB = AD with |AD|^2 == t^2 |AB|^2 and <AB,AD> carrying the sign of t",
         _scalar_and_points("A", "B"))
def _(i, m):
    a, b, t = i["A"], i["B"], i["t"]
    ab = Arrow(a, b)
    ad = scalar_mul(t, ab)
    if t == 0 or a == b:
        return ad == Arrow(a, a)
    if ad.tail != a:
        return False
    mab, mad = m.measure_sq(ab), m.measure_sq(ad)
    ip = m.pre_inner(ab, ad)
    return mad == t * t * mab and ip * ip == mab * mad and (ip > 0) == (t > 0)


@theorem("scalar.associativity", "(st)AB == (s)((t)AB)",
         _scalar_and_points("A", "B", scalars=("s", "t")))
def _(i, m):
    ab, s, t = Arrow(i["A"], i["B"]), i["s"], i["t"]
    return scalar_mul(s * t, ab) == scalar_mul(s, scalar_mul(t, ab))


def _injectivity_gen(s):
    a = s.point()
    x = s.scalar()
    return {"A": a, "B": s.distinct_point(a), "a": x, "b": x if s.coin(0.3) else s.scalar()}


@theorem("scalar.injectivity", "for A != B, (a)AB == (b)AB only if a == b",
         _injectivity_gen)
def _(i, m):
    if i["A"] == i["B"]:
        return True
    ab = Arrow(i["A"], i["B"])
    return (scalar_mul(i["a"], ab) == scalar_mul(i["b"], ab)) == (i["a"] == i["b"])


@theorem("scalar.length_scaling", "|(t)AB|^2 == t^2 |AB|^2", _scalar_and_points("A", "B"))
def _(i, m):
    ab, t = Arrow(i["A"], i["B"]), i["t"]
    return m.measure_sq(scalar_mul(t, ab)) == t * t * m.measure_sq(ab)


@theorem("scalar.neg_one_not_negation", "(-1)AB != -AB when A != B", _distinct("A", "B"))
def _(i, m):
    ab = Arrow(i["A"], i["B"])
    if is_degenerate(ab):
        return True
    return scalar_mul(-1, ab) != negate(ab)


@theorem("scalar.distributed_sum_undefined",
         "for distinct A, B, C and s != 1, (s)AB + (s)BC is undefined",
         _distinct("A", "B", "C", scalars=("s",)))
def _(i, m):
    a, b, c, s = i["A"], i["B"], i["C"], i["s"]
    if len({a, b, c}) < 3:
        return True
    ab, bc = Arrow(a, b), Arrow(b, c)
    if arrow_ops.checked_mixed_sum(s, ab, bc) != scalar_mul(s, Arrow(a, c)):
        return False
    try:
        dist = arrow_ops.checked_mixed_sum(s, ab, bc, distribute=True)
    except UndefinedAddition:
        return s != 1
    return s == 1 and dist == Arrow(a, c)


@theorem("scalar.split_sum",
         "(s)AB + (t)AB is defined (and equals (s+t)AB) only when s == 0",
         _distinct("A", "B", scalars=("s", "t")))
def _(i, m):
    ab, s, t = Arrow(i["A"], i["B"]), i["s"], i["t"]
    if is_degenerate(ab):
        return True
    try:
        total = arrow_ops.split_scalar_sum(s, t, ab)
    except UndefinedAddition:
        return s != 0
    return s == 0 and total == scalar_mul(s + t, ab)


# --------------------------------------------------------------- line theorems


def _line_gen(extra_params=0, extra_points=()):
    def gen(s):
        a = s.point()
        inst = {"A": a, "B": s.distinct_point(a)}
        for k, u in enumerate(s.distinct_scalars(extra_params)):
            inst["u%d" % k] = u
        for n in extra_points:
            inst[n] = s.point()
        return inst
    return gen


def _line_of(i):
    return line.line_through(i["A"], i["B"])


@theorem("line.pm_one_law",
         "for M, L on line AB, <ML,AB>^2 == |ML|^2 |AB|^2",
         _line_gen(2))
def _(i, m):
    l = _line_of(i)
    mm, ll = line.point_at(l, i["u0"]), line.point_at(l, i["u1"])
    ml, ab = Arrow(mm, ll), l.gen
    ip = m.pre_inner(ml, ab)
    return ip * ip == m.measure_sq(ml) * m.measure_sq(ab)


def _membership_gen(s):
    inst = _line_gen(1)(s)
    if s.coin():
        inst["D"] = line.point_at(line.line_through(inst["A"], inst["B"]), inst["u0"])
    else:
        inst["D"] = s.point()
    return inst


@theorem("line.membership",
         "D is on line AB iff D == A or <AB,AD>^2 == |AB|^2 |AD|^2; the parameter has the sign of <AB,AD>",
         _membership_gen)
def _(i, m):
    l = _line_of(i)
    d = i["D"]
    ad = Arrow(i["A"], d)
    ip = m.pre_inner(l.gen, ad)
    t = line.contains(l, d)
    criterion = d == i["A"] or ip * ip == m.measure_sq(l.gen) * m.measure_sq(ad)
    if (t is not None) != criterion:
        return False
    if t is None:
        return True
    return line.point_at(l, t) == d and (t > 0) == (ip > 0) and (t < 0) == (ip < 0)


@theorem("line.segment_split",
         "parameter t of D on line AB: t > 1 puts B between A and D, 0 < t < 1 puts D between A and B, t < 0 puts A between D and B",
         _line_gen(1))
def _(i, m):
    l = _line_of(i)
    a, b = i["A"], i["B"]
    d = line.point_at(l, i["u0"])
    t = line.contains(l, d)
    if t != i["u0"]:
        return False
    if t > 1:
        return line.between(a, b, d, m) and not line.between(b, a, d, m)
    if 0 < t < 1:
        return line.between(a, d, b, m) and not line.between(d, a, b, m)
    if t < 0:
        return line.between(d, a, b, m) and not line.between(a, b, d, m)
    return True


@theorem("line.betweenness_trichotomy",
         "for three distinct points on a line exactly one lies between the other two",
         _line_gen(3))
def _(i, m):
    l = _line_of(i)
    p, q, r = (line.point_at(l, i["u%d" % k]) for k in range(3))
    if len({p, q, r}) < 3:
        return True
    flags = [line.between(q, p, r, m), line.between(p, q, r, m), line.between(p, r, q, m)]
    return sum(flags) == 1


def _uniqueness_gen(s):
    inst = _line_gen(0, ("X",))(s)
    for k in range(LINE_EQ_PAIRS):
        u, v = s.distinct_scalars(2)
        inst["m%03d" % k] = u
        inst["n%03d" % k] = v
    return inst


@theorem("line.uniqueness",
         "the line through any two distinct points of line AB is line AB",
         _uniqueness_gen)
def _(i, m):
    l = _line_of(i)
    for k in range(LINE_EQ_PAIRS):
        u, v = i["m%03d" % k], i["n%03d" % k]
        if u == v:
            continue
        other = line.line_through(line.point_at(l, u), line.point_at(l, v))
        if not (line.line_eq(l, other) and line.line_eq(other, l)):
            return False
    x = i["X"]
    if line.contains(l, x) is None and line.line_eq(l, line.line_through(i["A"], x)):
        return False
    return True


@theorem("line.parallel_on_line",
         "for P = (t)AB on the line, K = (t+1)AB and K' = (t-1)AB are the only points with AB ~ PK and AB ~ K'P",
         _line_gen(1))
def _(i, m):
    l = _line_of(i)
    ab, u = l.gen, i["u0"]
    p = line.point_at(l, u)
    k, k_prime = line.parallel_on_line(l, ab, p)
    if line.contains(l, k) != u + 1 or line.contains(l, k_prime) != u - 1:
        return False
    for s in PARALLEL_GRID + (u + 1, u - 1):
        x = line.point_at(l, s)
        if related(ab, Arrow(p, x), m) != (s == u + 1):
            return False
        if related(ab, Arrow(x, p), m) != (s == u - 1):
            return False
    return True


@theorem("line.related_products",
         "related arrows on one line have equal pre-inner products",
         _line_gen(4))
def _(i, m):
    l = _line_of(i)
    p0, p1, p2, p3 = (line.point_at(l, i["u%d" % k]) for k in range(4))
    a, c = Arrow(p0, p1), Arrow(p2, p3)
    b = Arrow(p2, line.parallel_on_line(l, a, p2)[0])
    d = Arrow(line.parallel_on_line(l, c, p0)[1], p0)
    return equivalence.check_axiom4(a, b, c, d, m)


# -------------------------------------------------------- equivalence theorems


def _chain_gen(s):
    a = Arrow(s.point(), s.point())
    b = _transported(s, a) if s.coin(0.7) else Arrow(s.point(), s.point())
    c = _transported(s, b) if s.coin(0.7) else Arrow(s.point(), s.point())
    return {"A1": a.tail, "A2": a.head, "B1": b.tail, "B2": b.head, "C1": c.tail, "C2": c.head}


@theorem("relation.equivalence_laws", "~ is reflexive, symmetric and transitive", _chain_gen)
def _(i, m):
    a, b, c = (Arrow(i[n + "1"], i[n + "2"]) for n in "ABC")
    if not related(a, a, m):
        return False
    if related(a, b, m) != related(b, a, m):
        return False
    if related(a, b, m) and related(b, c, m) and not related(a, c, m):
        return False
    return True


def _degenerate_gen(s):
    c = s.point()
    return {"A": s.point(), "C": c, "D": c if s.coin() else s.point()}


@theorem("relation.degeneracy_propagation", "AA ~ CD implies C == D", _degenerate_gen)
def _(i, m):
    aa, cd = Arrow(i["A"], i["A"]), Arrow(i["C"], i["D"])
    return related(aa, cd, m) == is_degenerate(cd)


def _scaling_gen(s):
    a = Arrow(s.point(), s.point())
    b = _transported(s, a)
    return {"A": a.tail, "B": a.head, "C": b.tail, "D": b.head, "t": s.scalar()}


@theorem("relation.scaling_compatibility", "AB ~ CD implies (t)AB ~ (t)CD", _scaling_gen)
def _(i, m):
    ab, cd = Arrow(i["A"], i["B"]), Arrow(i["C"], i["D"])
    if not related(ab, cd, m):
        return True
    return related(scalar_mul(i["t"], ab), scalar_mul(i["t"], cd), m)


@theorem("relation.transport_uniqueness",
         "K from transport is the only point on a unit grid around it with AB ~ PK",
         _distinct("A", "B", "P"))
def _(i, m):
    ab, p = Arrow(i["A"], i["B"]), i["P"]
    if is_degenerate(ab):
        return True
    pk, kp = equivalence.parallel_transport(ab, p)
    for offset in _unit_grid(ab.dim):
        if related(ab, Arrow(p, translate(pk.head, offset)), m) != (not any(offset)):
            return False
        if related(ab, Arrow(translate(kp.tail, offset), p), m) != (not any(offset)):
            return False
    return True


def _unit_grid(dim):
    grid = [()]
    for _ in range(dim):
        grid = [g + (Fraction(k),) for g in grid for k in (-1, 0, 1)]
    return grid


def _composite_gen(s):
    k1, p1, l1, p2 = s.point(), s.point(), s.point(), s.point()
    k2 = translate(p2, displacement(Arrow(p1, k1)))
    l2 = translate(p2, displacement(Arrow(p1, l1)))
    return {"K1": k1, "P1": p1, "L1": l1, "K2": k2, "P2": p2, "L2": l2}


@theorem("relation.composite",
         "K1P1 ~ K2P2 and P1L1 ~ P2L2 imply K1L1 ~ K2L2 with equal measures",
         _composite_gen)
def _(i, m):
    if not (related(Arrow(i["K1"], i["P1"]), Arrow(i["K2"], i["P2"]), m)
            and related(Arrow(i["P1"], i["L1"]), Arrow(i["P2"], i["L2"]), m)):
        return True
    k1l1, k2l2 = Arrow(i["K1"], i["L1"]), Arrow(i["K2"], i["L2"])
    return related(k1l1, k2l2, m) and m.measure_sq(k1l1) == m.measure_sq(k2l2)


@theorem("relation.canonical_rep",
         "the canonical representative starts at the origin, is related to the arrow and is idempotent",
         _points("A", "B"))
def _(i, m):
    ab = Arrow(i["A"], i["B"])
    c = equivalence.canonical_rep(ab)
    return c.tail == zero_point(ab.dim) and related(ab, c, m) and equivalence.canonical_rep(c) == c


# ------------------------------------------------------------ vector theorems


def _vector_gen(nvec, nscalar=0, npoints=1):
    def gen(s):
        inst = {}
        for k in range(nvec):
            inst["T%d" % k] = s.point()
            inst["H%d" % k] = s.point()
        for k in range(npoints):
            inst["P%d" % k] = s.point()
        for k in range(nscalar):
            inst["s%d" % k] = s.scalar()
        return inst
    return gen


def _vecs(i, n):
    return [to_vector(Arrow(i["T%d" % k], i["H%d" % k])) for k in range(n)]


def _well_defined_gen(s):
    a = Arrow(s.point(), s.point())
    b = _transported(s, a) if s.coin(0.7) else Arrow(s.point(), s.point())
    return {"A": a.tail, "B": a.head, "C": b.tail, "D": b.head}


@theorem("vector.well_defined",
         "[AB] == [CD] iff AB ~ CD; [-AB] == -[AB]", _well_defined_gen)
def _(i, m):
    ab, cd = Arrow(i["A"], i["B"]), Arrow(i["C"], i["D"])
    if (to_vector(ab) == to_vector(cd)) != related(ab, cd, m):
        return False
    return to_vector(negate(ab)) == vec_neg(to_vector(ab))


@theorem("vector.add_commutative", "u + v == v + u", _vector_gen(2))
def _(i, m):
    u, v = _vecs(i, 2)
    p = i["P0"]
    return vec_add(u, v) == vec_add(v, u) and vec_add_at(u, v, p) == vec_add_at(v, u, p)


@theorem("vector.add_associative", "(u + v) + w == u + (v + w)", _vector_gen(3, npoints=2))
def _(i, m):
    u, v, w = _vecs(i, 3)
    p, q = i["P0"], i["P1"]
    return (vec_add(vec_add(u, v), w) == vec_add(u, vec_add(v, w))
            and vec_add_at(vec_add_at(u, v, p), w, q) == vec_add_at(u, vec_add_at(v, w, q), p))


@theorem("vector.add_identity", "u + [PP] == u == [PP] + u", _vector_gen(1, npoints=2))
def _(i, m):
    (u,) = _vecs(i, 1)
    p, q = i["P0"], i["P1"]
    zero = to_vector(Arrow(p, p))
    return (zero.is_zero() and vec_add_at(u, zero, q) == u and vec_add_at(zero, u, q) == u
            and vec_add(u, zero) == u)


@theorem("vector.add_inverse", "[AB] + [-AB] == [AA]", _vector_gen(1))
def _(i, m):
    ab = Arrow(i["T0"], i["H0"])
    u = to_vector(ab)
    zero = to_vector(Arrow(ab.tail, ab.tail))
    return vec_add_at(u, to_vector(negate(ab)), i["P0"]) == zero and vec_add(u, vec_neg(u)) == zero


@theorem("vector.scalar_associative", "(ts)u == t(su)", _vector_gen(1, 2))
def _(i, m):
    (u,) = _vecs(i, 1)
    t, s = i["s0"], i["s1"]
    ab = Arrow(i["T0"], i["H0"])
    return (vec_scalar_mul(t * s, u) == vec_scalar_mul(t, vec_scalar_mul(s, u))
            == to_vector(scalar_mul(t, scalar_mul(s, ab))))


@theorem("vector.distributes_over_scalars", "(t+s)u == tu + su", _vector_gen(1, 2))
def _(i, m):
    (u,) = _vecs(i, 1)
    t, s, p = i["s0"], i["s1"], i["P0"]
    lhs = vec_scalar_mul(t + s, u)
    return (lhs == vec_add(vec_scalar_mul(t, u), vec_scalar_mul(s, u))
            == vec_add_at(vec_scalar_mul(t, u), vec_scalar_mul(s, u), p))


@theorem("vector.distributes_over_vectors", "t(u + v) == tu + tv", _vector_gen(2, 1))
def _(i, m):
    u, v = _vecs(i, 2)
    t, p = i["s0"], i["P0"]
    lhs = vec_scalar_mul(t, vec_add_at(u, v, p))
    return lhs == vec_add(vec_scalar_mul(t, u), vec_scalar_mul(t, v)) \
        == vec_add_at(vec_scalar_mul(t, u), vec_scalar_mul(t, v), p)


@theorem("vector.scalar_unit", "1u == u", _vector_gen(1))
def _(i, m):
    (u,) = _vecs(i, 1)
    return vec_scalar_mul(1, u) == u == vector_space.vec_scalar_mul_at(1, u, i["P0"])


def _independence_gen(s):
    inst = _vector_gen(2, npoints=0)(s)
    for k in range(TRANSPORT_PAIRS):
        inst["P%03d" % k] = s.point()
        inst["Q%03d" % k] = s.distinct_point(inst["P%03d" % k])
    return inst


@theorem("vector.transport_independence",
         "u + v computed by transport at P does not depend on P", _independence_gen)
def _(i, m):
    u, v = _vecs(i, 2)
    expected = vec_add(u, v)
    for k in range(TRANSPORT_PAIRS):
        if vec_add_at(u, v, i["P%03d" % k]) != expected:
            return False
        if vec_add_at(u, v, i["Q%03d" % k]) != expected:
            return False
    return True


@theorem("vector.paths_agree",
         "coordinate arithmetic and transport-plus-arrow-addition give the same vectors",
         _vector_gen(2, 1, 2))
def _(i, m):
    u, v = _vecs(i, 2)
    t, p, q = i["s0"], i["P0"], i["P1"]
    if vec_add(u, v) != vec_add_at(u, v, p):
        return False
    if vec_scalar_mul(t, u) != vector_space.vec_scalar_mul_at(t, u, q):
        return False
    # representatives anchored anywhere give the same class under scaling
    ab = Arrow(i["T0"], i["H0"])
    return to_vector(scalar_mul(t, ab)) == vec_scalar_mul(t, u)


@theorem("vector.inner_product",
         "<u,v> is well defined, symmetric, bilinear and positive definite",
         _vector_gen(3, 1))
def _(i, m):
    u, v, w = _vecs(i, 3)
    t = i["s0"]
    ab, cd = Arrow(i["T0"], i["H0"]), Arrow(i["T1"], i["H1"])
    ip = vec_inner
    if ip(u, v, m) != m.pre_inner(ab, cd):
        return False
    if ip(u, v, m) != ip(v, u, m):
        return False
    if ip(vec_add(u, v), w, m) != ip(u, w, m) + ip(v, w, m):
        return False
    if ip(vec_scalar_mul(t, u), w, m) != t * ip(u, w, m):
        return False
    uu = ip(u, u, m)
    return uu >= 0 and (uu == 0) == u.is_zero() and ip(vec_scalar_mul(0, u), v, m) == 0


# ------------------------------------------------------------ affine theorems


def _projection_gen(s):
    o = s.point()
    g = s.distinct_point(o)
    if s.coin(0.2):
        p = line.point_at(line.line_through(o, g), s.rational())
    else:
        p = s.point()
    return {"O": o, "G": g, "P": p}


@theorem("affine.projection_orthogonal",
         "W = O + t OG with t = <OG,OP>/<OG,OG> is on the line and <WO,WP> == 0",
         _projection_gen)
def _(i, m):
    o, g, p = i["O"], i["G"], i["P"]
    if o == g:
        return True
    res = affine.project_point(o, g, p, m)
    l = line.line_through(o, g)
    if line.contains(l, res.foot) != res.parameter:
        return False
    if m.pre_inner(Arrow(res.foot, o), Arrow(res.foot, p)) != 0:
        return False
    if line.contains(l, p) is not None:
        return res.foot == p and res.residual_sq == 0
    return res.residual_sq > 0


@theorem("affine.projection_optimal",
         "every other grid point X on the line has |XP|^2 > |WP|^2 and, unless X == O, <XO,XP> != 0",
         _projection_gen)
def _(i, m):
    o, g, p = i["O"], i["G"], i["P"]
    if o == g:
        return True
    res = affine.project_point(o, g, p, m)
    l = line.line_through(o, g)
    for s in PROJECTION_GRID:
        x = line.point_at(l, s)
        if x == res.foot:
            continue
        if m.measure_sq(Arrow(x, p)) <= res.residual_sq:
            return False
        if x != o and m.pre_inner(Arrow(x, o), Arrow(x, p)) == 0:
            return False
    return True


def _cs_gen(s):
    a = Arrow(s.point(), s.point())
    r = s.rng.random()
    if r < 0.3:
        b = _transported(s, scalar_mul(s.scalar(), a))
    elif r < 0.4:
        c = s.point()
        b = Arrow(c, c)
    else:
        b = Arrow(s.point(), s.point())
    return {"O": a.tail, "G": a.head, "A": b.tail, "B": b.head}


@theorem("affine.cauchy_schwarz",
         "<OG,AB>^2 <= |OG|^2 |AB|^2 with equality iff the displacements are parallel",
         _cs_gen)
def _(i, m):
    og, ab = Arrow(i["O"], i["G"]), Arrow(i["A"], i["B"])
    cs = affine.cauchy_schwarz(og, ab, m)
    return cs.lhs <= cs.rhs and cs.tight == affine.displacements_parallel(og, ab)


def _barycenter_gen(s):
    n = s.rng.randint(1, MAX_BARYCENTER_POINTS)
    inst = {}
    for k in range(n):
        inst["P%d" % k] = s.distinct_point(*inst.values())
    weights = [s.rational() for _ in range(n - 1)]
    weights.append(1 - sum(weights, Fraction(0)))
    for k, w in enumerate(weights):
        inst["w%d" % k] = w
    for k in range(BARYCENTER_ORIGINS + 1):
        inst["O%02d" % k] = s.point()
    return inst


def _bary_spec(i):
    n = sum(1 for k in i if k.startswith("P"))
    return affine.BarycenterSpec([i["P%d" % k] for k in range(n)],
                                 [i["w%d" % k] for k in range(n)])


@theorem("affine.barycenter_origin_independence",
         "the barycenter is the same point from every origin", _barycenter_gen)
def _(i, m):
    spec = _bary_spec(i)
    base = affine.barycenter_direct(spec, i["O00"])
    return all(affine.barycenter(spec, i["O%02d" % k]) == base
               for k in range(BARYCENTER_ORIGINS + 1))


@theorem("affine.barycenter_paths_agree",
         "chained transport sums, the coordinate formula and sum w_i[OP_i] all give [OM]",
         _barycenter_gen)
def _(i, m):
    spec = _bary_spec(i)
    o = i["O00"]
    mpt = affine.barycenter(spec, o)
    if mpt != affine.barycenter_direct(spec, o):
        return False
    total = vector_space.zero_vector(spec.dim)
    for p, w in zip(spec.points, spec.weights):
        total = vec_add(total, vec_scalar_mul(w, to_vector(Arrow(o, p))))
    return total == to_vector(Arrow(o, mpt))
