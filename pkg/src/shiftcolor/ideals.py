"""Declarative pattern ideals: shift-invariant, restriction-closed families
of finite partial colorings, given by kind-specific pairwise/local rules.

Shipped kinds:

* ProperColoring(k) — adjacent elements (distance exactly 1) get distinct
  colors, all colors < k. This is the hereditary pairwise ideal; it agrees
  with the family of patterns extendable to total proper colorings exactly
  when k >= |S| + 1 (greedy extension always succeeds then). For smaller k
  the two differ — see the extension oracle, which witnesses the gap.
* DistanceConstrained(d, h) — two occurrences of color c must be at distance
  >= max(2*d_c + 1, h_c); an infinite h_c means the color is used at most
  once per pattern. Colors at or beyond len(h) are a palette error.
* NotUniversal(d, D) — around a point of color c, closer points (distance
  <= 2*d_c) must avoid c and mid-range points (distance in (2*d_c, D_c])
  must carry a strictly larger color. Local with radius D_c per color.

Reduced (product-coded) ideals live in the reduction module; they subclass
IdealSpec and plug into everything here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, List, Optional, Sequence

from .groups import Group, parse_group
from .patterns import PartialColoring, shift
from .radii import INF, Infinity, Radius, as_radius, radius_to_json


class PaletteExhausted(ValueError):
    """A pattern uses a color outside the ideal's declared palette."""


class IdealSpec:
    """Base class for pattern ideals. Membership must be closed under
    restriction and under the shift action (the axioms checker samples for
    exactly that)."""

    kind: str
    group: Group

    def contains(self, phi: PartialColoring) -> bool:
        raise NotImplementedError

    def locality_radius(self, color) -> Radius:
        """The window radius r(color) under which membership is local."""
        raise NotImplementedError

    def palette(self) -> Optional[Sequence[int]]:
        """The colors a simulation may schedule (None when unbounded)."""
        return None

    def max_color(self) -> Optional[int]:
        """Largest color the ideal can ever accept (None when unbounded)."""
        return None

    def empty(self) -> PartialColoring:
        return PartialColoring(self.group, {})

    def extend_at(self, phi: PartialColoring, gamma, c_max: Optional[int] = None):
        """Least color c <= c_max with phi + (gamma, c) a member, or None.
        Preconditions are the caller's business; see is_extendable_at."""
        if c_max is None:
            c_max = _default_c_max(self, phi, gamma)
        bound = self.max_color()
        if bound is not None:
            c_max = min(c_max, bound)
        for c in range(c_max + 1):
            if self.contains(phi.with_entry(gamma, c)):
                return c
        return None

    def to_json(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.to_json()!r})"

    def __eq__(self, other):
        return isinstance(other, IdealSpec) and self.to_json() == other.to_json()

    def __hash__(self):
        import json

        return hash(json.dumps(self.to_json(), sort_keys=True))


def _plain_colors(phi: PartialColoring):
    for e, c in phi.entries.items():
        if not isinstance(c, int):
            raise ValueError(f"expected plain natural colors, got {c!r} at {e!r}")
    return phi.entries


class ProperColoring(IdealSpec):
    kind = "ProperColoring"

    def __init__(self, group, k: int):
        group = parse_group(group)
        if k < 1:
            raise ValueError(f"need at least one color, got k={k}")
        self.group = group
        self.k = k

    def contains(self, phi: PartialColoring) -> bool:
        entries = _plain_colors(phi)
        if any(c >= self.k for c in entries.values()):
            return False
        g = self.group
        items = list(entries.items())
        for i, (x, cx) in enumerate(items):
            for y, cy in items[i + 1 :]:
                if cx == cy and g.dist(x, y) == 1:
                    return False
        return True

    def locality_radius(self, color) -> Radius:
        return 1

    def palette(self):
        return range(self.k)

    def max_color(self):
        return self.k - 1

    def to_json(self):
        return {"kind": self.kind, "group": self.group.spec_string(), "k": self.k}


def _check_h_sequence(h):
    out = []
    for value in h:
        v = as_radius(value)
        if not isinstance(v, (int, Infinity)):
            raise ValueError(f"h entries must be naturals or 'inf', got {value!r}")
        out.append(v)
    for a, b in zip(out, out[1:]):
        if not a <= b:
            raise ValueError(f"h sequence must be nondecreasing, got {out!r}")
    return tuple(out)


def _check_d_sequence(d):
    out = tuple(int(v) for v in d)
    if any(v < 0 for v in out):
        raise ValueError(f"d entries must be nonnegative, got {out!r}")
    for a, b in zip(out, out[1:]):
        if not a < b:
            raise ValueError(f"d sequence must be strictly increasing, got {out!r}")
    return out


class DistanceConstrained(IdealSpec):
    kind = "DistanceConstrained"

    def __init__(self, group, d: Sequence[int], h: Sequence):
        group = parse_group(group)
        self.group = group
        self.d = _check_d_sequence(d)
        self.h = _check_h_sequence(h)
        if len(self.h) > len(self.d):
            raise ValueError("h sequence may not be longer than the d sequence")

    def _min_gap(self, c: int) -> Radius:
        return max(2 * self.d[c] + 1, self.h[c])

    def contains(self, phi: PartialColoring) -> bool:
        entries = _plain_colors(phi)
        for c in entries.values():
            if c >= len(self.h):
                raise PaletteExhausted(
                    f"color {c} is outside the palette of {len(self.h)} colors"
                )
        g = self.group
        items = list(entries.items())
        for i, (x, cx) in enumerate(items):
            for y, cy in items[i + 1 :]:
                if cx == cy and not g.dist(x, y) >= self._min_gap(cx):
                    return False
        return True

    def locality_radius(self, color) -> Radius:
        gap = self._min_gap(color)
        if isinstance(gap, Infinity):
            return INF
        return gap - 1

    def palette(self):
        return range(len(self.h))

    def max_color(self):
        return len(self.h) - 1

    def to_json(self):
        return {
            "kind": self.kind,
            "group": self.group.spec_string(),
            "d": list(self.d),
            "h": [radius_to_json(v) for v in self.h],
        }


class NotUniversal(IdealSpec):
    kind = "NotUniversal"

    def __init__(self, group, d: Sequence[int], D: Sequence[int]):
        group = parse_group(group)
        self.group = group
        self.d = _check_d_sequence(d)
        self.D = tuple(int(v) for v in D)
        if len(self.D) != len(self.d):
            raise ValueError("d and D must have the same length")
        for c, (dc, Dc) in enumerate(zip(self.d, self.D)):
            if Dc < 2 * dc + 1:
                raise ValueError(f"need D_c >= 2*d_c + 1, violated at color {c}")

    def contains(self, phi: PartialColoring) -> bool:
        entries = _plain_colors(phi)
        for c in entries.values():
            if c >= len(self.d):
                raise PaletteExhausted(
                    f"color {c} is outside the palette of {len(self.d)} colors"
                )
        g = self.group
        items = list(entries.items())
        for x, cx in items:
            near, far = 2 * self.d[cx], self.D[cx]
            for y, cy in items:
                if y == x:
                    continue
                t = g.dist(x, y)
                if t <= near:
                    if cy == cx:
                        return False
                elif t <= far:
                    if cy <= cx:
                        return False
        return True

    def locality_radius(self, color) -> Radius:
        return self.D[color]

    def palette(self):
        return range(len(self.d))

    def max_color(self):
        return len(self.d) - 1

    def to_json(self):
        return {
            "kind": self.kind,
            "group": self.group.spec_string(),
            "d": list(self.d),
            "D": list(self.D),
        }


def ideal_from_json(obj: dict) -> IdealSpec:
    kind = obj.get("kind")
    if kind == "ProperColoring":
        return ProperColoring(obj["group"], int(obj["k"]))
    if kind == "DistanceConstrained":
        return DistanceConstrained(obj["group"], obj["d"], obj["h"])
    if kind == "NotUniversal":
        return NotUniversal(obj["group"], obj["d"], obj["D"])
    if kind == "Reduced":
        from .reduction import ReducedIdeal, join_fn_from_json

        base = ideal_from_json(obj["base"])
        return ReducedIdeal(base, join_fn_from_json(obj["R"], base))
    raise ValueError(f"unknown ideal kind {kind!r}")


# -- join functions ----------------------------------------------------------


class JoinFn:
    """An invariant map from patterns to radii, used to decide when two
    patterns are far enough apart for their union to stay in an ideal.
    Every shipped form sends the empty pattern to 0 and is monotone
    (larger pattern, no smaller value)."""

    monotone: bool = False

    def value(self, phi: PartialColoring) -> Radius:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


class ConstantJoin(JoinFn):
    monotone = True

    def __init__(self, value):
        v = as_radius(value)
        if isinstance(v, Infinity):
            raise ValueError("a constant join radius must be finite")
        self._value = v

    def value(self, phi: PartialColoring) -> Radius:
        return 0 if len(phi) == 0 else self._value

    def to_json(self):
        return {"form": "Constant", "value": radius_to_json(self._value)}


class SupRadiiJoin(JoinFn):
    """R(phi) = sup of r(color) over the colors phi uses (0 for empty)."""

    monotone = True

    def __init__(self, r: Callable[[int], Radius], description=None):
        self.r = r
        self.description = description

    def value(self, phi: PartialColoring) -> Radius:
        best: Radius = 0
        for c in phi.entries.values():
            v = self.r(c)
            if v > best:
                best = v
        return best

    def to_json(self):
        if self.description is None:
            return {"form": "SupOfRadii", "r": "derived"}
        if isinstance(self.description, (list, tuple)):
            return {"form": "SupOfRadii", "r": list(self.description)}
        raise ValueError(
            "only table-backed or derived radius joins have a JSON form; "
            f"got description {self.description!r}"
        )


# -- extendability and sampling ----------------------------------------------


def is_extendable_at(
    P: IdealSpec,
    phi: PartialColoring,
    gamma,
    c_max: Optional[int] = None,
) -> Optional[int]:
    """Least color c <= c_max with phi + (gamma, c) in P, or None if no color
    within the bound works. Preconditions (phi in P, gamma uncolored) are
    enforced."""
    if gamma in phi:
        raise ValueError(f"{gamma!r} is already colored")
    if not P.contains(phi):
        raise ValueError("the pattern is not a member of the ideal")
    return P.extend_at(phi, gamma, c_max)


def _default_c_max(P: IdealSpec, phi: PartialColoring, gamma) -> int:
    used = [c for c in phi.entries.values() if isinstance(c, int)]
    radii = []
    bound = P.max_color()
    if bound is not None:
        return bound
    for c in set(used) | {0}:
        r = P.locality_radius(c)
        if not isinstance(r, Infinity):
            radii.append(r)
    from .radii import radius_ceil

    reach = radius_ceil(max(radii)) if radii else 1
    return (max(used) if used else 0) + len(P.group.ball(gamma, reach)) + 1


def grow_random_member(
    P: IdealSpec,
    rng: random.Random,
    size: int,
    radius: int = 8,
    c_max: Optional[int] = None,
) -> PartialColoring:
    """A random member of P, grown greedily: repeatedly pick an uncolored
    point in Ball(1, radius) and give it the least color that keeps the
    pattern in P. Growth that cannot proceed is simply skipped, so the
    result is always a member (possibly smaller than ``size``)."""
    ballpts = P.group.ball(P.group.identity(), radius)
    phi = P.empty()
    for _ in range(size * 3):
        if len(phi) >= size:
            break
        gamma = ballpts[rng.randrange(len(ballpts))]
        if gamma in phi:
            continue
        c = P.extend_at(phi, gamma, c_max)
        if c is not None:
            phi = phi.with_entry(gamma, c)
    return phi


# -- report-producing checks ---------------------------------------------------


@dataclass
class AxiomsReport:
    samples: int = 0
    restriction_violations: List[dict] = field(default_factory=list)
    shift_violations: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.restriction_violations and not self.shift_violations

    def to_jsonable(self):
        return {
            "samples": self.samples,
            "restriction_violations": self.restriction_violations,
            "shift_violations": self.shift_violations,
            "ok": self.ok,
        }


def ideal_axioms_check(
    P: IdealSpec,
    sample_budget: int,
    seed: int,
    radius: int = 6,
    shift_radius: int = 5,
    max_size: int = 5,
) -> AxiomsReport:
    """Sample members of P by randomized greedy growth and verify the two
    ideal axioms on each: every restriction stays in P (exhaustive over
    subsets for small domains, sampled otherwise) and every shift by a
    nearby element stays in P."""
    rng = random.Random(seed)
    g = P.group
    shifts = g.ball(g.identity(), shift_radius)
    report = AxiomsReport()
    for _ in range(sample_budget):
        phi = grow_random_member(P, rng, rng.randint(0, max_size), radius)
        report.samples += 1
        dom = list(phi.domain())
        if len(dom) <= 8:
            subsets = [
                list(sub) for k in range(len(dom) + 1) for sub in combinations(dom, k)
            ]
        else:
            subsets = [
                rng.sample(dom, rng.randint(0, len(dom))) for _ in range(40)
            ]
        for sub in subsets:
            if not P.contains(phi.restrict(sub)):
                report.restriction_violations.append(
                    {"pattern": phi.to_json(), "subset": [g.element_to_json(e) for e in sub]}
                )
        for gamma in shifts:
            if not P.contains(shift(phi, gamma)):
                report.shift_violations.append(
                    {"pattern": phi.to_json(), "shift": g.element_to_json(gamma)}
                )
    return report


def col_window_check(omega: PartialColoring, P: IdealSpec) -> bool:
    """Is every restriction of the window coloring a member of P?

    For kinds whose used colors all have finite locality radius this is
    evaluated through the local criterion — the window of radius r(color)
    around every colored point must be a member — which coincides with plain
    membership for these restriction-closed ideals. Kinds with non-local
    colors are checked by direct membership.
    """
    local_radii = {}
    for c in omega.colors_used():
        r = P.locality_radius(c)
        if isinstance(r, Infinity):
            return P.contains(omega)
        local_radii[c] = r
    for gamma, c in omega.entries.items():
        if not P.contains(omega.window(gamma, local_radii[c])):
            return False
    return True
