"""Degree descent for 0-cycles on del Pezzo surfaces of degree 1, 2, 3.

A `CycleState` records the identity  z = sign * z' + sum(coeff_b * b)  in the
Chow group of 0-cycles, where z' is an unknown effective cycle of the stated
degree and b runs over the basis cycles (h, the degree-d_S class cut by the
anticanonical geometry, and optionally x4 of degree 4 on cubic surfaces).
Moves rewrite the right-hand side; each move is guarded by exact inequality
side conditions on the section counts h0(l) = 1 + d_S*(l^2+l)/2 and is
treated as a sound axiom (the geometry backing the moves is not finitely
checkable and is not re-derived here).

Certificates are replayable chains of moves carrying their inequality
witnesses; the verifier recomputes every count through a separate code path
(a recurrence instead of the closed form) so that search and verification
cannot share an arithmetic bug.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

BASIS_H = "h"
BASIS_X4 = "x4"

#: Smallest m with O(m) very ample, per surface degree.
VERY_AMPLE_MIN = {3: 1, 2: 2, 1: 3}
#: Smallest l with O(l) globally generated, per surface degree.
GLOBALLY_GENERATED_MIN = {3: 1, 2: 1, 1: 2}


class DescentError(Exception):
    pass


class PreconditionFailed(DescentError):
    """A move's guarding inequality does not hold; names the failed condition."""

    def __init__(self, move_kind: str, condition: str):
        super().__init__(f"{move_kind}: {condition}")
        self.move_kind = move_kind
        self.condition = condition


class CertificateNotFound(DescentError):
    def __init__(self, surface, start_degree, goal, explored):
        super().__init__(
            f"no certificate from degree {start_degree} to goal {goal.name} "
            f"on dP{surface.degree} (explored {explored} states)"
        )
        self.explored = explored


def h0(d_S: int, l: int) -> int:
    """Sections of O(l) on a del Pezzo surface of degree d_S: 1 + d_S(l^2+l)/2."""
    if d_S not in (1, 2, 3):
        raise ValueError(f"surface degree must be 1, 2 or 3, got {d_S}")
    if l < 0:
        raise ValueError("l must be nonnegative")
    return 1 + d_S * (l * l + l) // 2


def h0_by_recurrence(d_S: int, l: int) -> int:
    """Independent route to h0 for the verifier: h0(l) = h0(l-1) + d_S*l."""
    if d_S not in (1, 2, 3):
        raise ValueError(f"surface degree must be 1, 2 or 3, got {d_S}")
    value = 1
    for k in range(1, l + 1):
        value += d_S * k
    return value


def genus(d_S: int, l: int) -> int:
    """Genus of a smooth curve in |O(l)|: 1 + d_S*l*(l-1)/2."""
    if l < 1:
        raise ValueError("l must be >= 1")
    return 1 + d_S * l * (l - 1) // 2


def genus_by_recurrence(d_S: int, l: int) -> int:
    if l < 1:
        raise ValueError("l must be >= 1")
    value = 1
    for k in range(1, l):
        value += d_S * k
    return value


@dataclass(frozen=True)
class DelPezzo:
    """Surface degree plus the available basis of 0-cycle classes."""

    degree: int
    with_x4: bool = False

    def __post_init__(self):
        if self.degree not in (1, 2, 3):
            raise ValueError("surface degree must be 1, 2 or 3")
        if self.with_x4 and self.degree != 3:
            raise ValueError("a degree-4 basis cycle is only tracked on cubic surfaces")

    @property
    def basis(self) -> Dict[str, int]:
        out = {BASIS_H: self.degree}
        if self.with_x4:
            out[BASIS_X4] = 4
        return out

    def combo_degree(self, combo: Dict[str, int]) -> int:
        basis = self.basis
        for name in combo:
            if name not in basis:
                raise ValueError(f"unknown basis cycle {name!r}")
        return sum(basis[name] * mult for name, mult in combo.items())

    def to_json(self) -> dict:
        return {"dS": self.degree, "basis": sorted(self.basis)}

    @classmethod
    def from_json(cls, obj: dict) -> "DelPezzo":
        return cls(degree=obj["dS"], with_x4=BASIS_X4 in obj.get("basis", []))


@dataclass(frozen=True)
class CycleState:
    """z = sign * z' + sum(coeffs[b] * b), with z' effective of unknown_degree."""

    sign: int
    unknown_degree: int
    coeffs: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.unknown_degree < 0:
            raise ValueError("unknown degree must be nonnegative")

    @classmethod
    def entry(cls, degree: int) -> "CycleState":
        return cls(sign=1, unknown_degree=degree)

    @classmethod
    def make(cls, sign: int, unknown_degree: int, coeffs: Dict[str, int]) -> "CycleState":
        if unknown_degree == 0:
            sign = 1  # the sign of an empty cycle carries no content
        items = tuple(sorted((k, v) for k, v in coeffs.items() if v != 0))
        return cls(sign=sign, unknown_degree=unknown_degree, coeffs=items)

    def coeff_dict(self) -> Dict[str, int]:
        return dict(self.coeffs)

    def total_degree(self, surface: DelPezzo) -> int:
        basis = surface.basis
        return self.sign * self.unknown_degree + sum(
            basis[name] * mult for name, mult in self.coeffs
        )

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "unknown_degree": self.unknown_degree,
            "coeffs": self.coeff_dict(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CycleState":
        return cls.make(obj["sign"], obj["unknown_degree"], obj.get("coeffs", {}))


def _shift_coeffs(state: CycleState, delta: Dict[str, int], factor: int) -> Dict[str, int]:
    out = state.coeff_dict()
    for name, mult in delta.items():
        out[name] = out.get(name, 0) + factor * mult
    return out


@dataclass(frozen=True)
class Move:
    """One rewrite step; `kind` selects the rule, parameters are rule-specific.

    kinds and their data:
      Complement(l)           -- replace z' by c1(O(l+1))^2 - z'
      VariantComplement(l)    -- replace z' by l(l+1)*c1(O(1))^2 - z'
      VBSubtract(l, target)   -- replace z' by z' - (effective basis combo)
      InvolutionFlip          -- degree-2 only: z' + iota(z') = (deg z')*h
      CurveRR(l, combo)       -- replace z' by combo - z' via Riemann-Roch on
                                 a curve in |O(l)| supporting the pieces
      AddBasis(combo)         -- absorb a nonnegative basis combo into z'
      EntryRR(gamma)          -- entry only: an abstract class z of degree d
                                 satisfies z + gamma*h effective for some
                                 gamma; records one concrete choice
    """

    kind: str
    l: Optional[int] = None
    gamma: Optional[int] = None
    combo: Tuple[Tuple[str, int], ...] = ()

    @classmethod
    def complement(cls, l: int) -> "Move":
        return cls(kind="Complement", l=l)

    @classmethod
    def variant_complement(cls, l: int) -> "Move":
        return cls(kind="VariantComplement", l=l)

    @classmethod
    def vb_subtract(cls, l: int, target: Dict[str, int]) -> "Move":
        return cls(kind="VBSubtract", l=l, combo=tuple(sorted(target.items())))

    @classmethod
    def involution_flip(cls) -> "Move":
        return cls(kind="InvolutionFlip")

    @classmethod
    def curve_rr(cls, l: int, combo: Dict[str, int]) -> "Move":
        return cls(kind="CurveRR", l=l, combo=tuple(sorted(combo.items())))

    @classmethod
    def add_basis(cls, combo: Dict[str, int]) -> "Move":
        return cls(kind="AddBasis", combo=tuple(sorted(combo.items())))

    @classmethod
    def entry_rr(cls, gamma: int) -> "Move":
        return cls(kind="EntryRR", gamma=gamma)

    def combo_dict(self) -> Dict[str, int]:
        return dict(self.combo)

    def to_json(self, witness: Optional[dict] = None) -> dict:
        out = {"kind": self.kind}
        if self.l is not None:
            out["l"] = self.l
        if self.gamma is not None:
            out["gamma"] = self.gamma
        if self.combo:
            key = "target" if self.kind == "VBSubtract" else "combo"
            out[key] = self.combo_dict()
        if witness is not None:
            out["witness"] = witness
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Move":
        combo = obj.get("target", obj.get("combo", {}))
        return cls(
            kind=obj["kind"],
            l=obj.get("l"),
            gamma=obj.get("gamma"),
            combo=tuple(sorted(combo.items())),
        )


def apply_move(
    surface: DelPezzo,
    state: CycleState,
    move: Move,
    h0_fn=h0,
    genus_fn=genus,
    is_entry: bool = False,
) -> Tuple[CycleState, dict]:
    """Apply one move, checking its side conditions exactly.

    Returns (new state, witness dict of the section counts used).  Raises
    PreconditionFailed naming the violated inequality.
    """
    d_S = surface.degree
    d = state.unknown_degree
    sign = state.sign
    kind = move.kind

    def fail(condition: str):
        raise PreconditionFailed(kind, condition)

    if kind == "Complement":
        m = move.l + 1
        if m < VERY_AMPLE_MIN[d_S]:
            fail(f"O({m}) is not very ample on dP{d_S}")
        count = h0_fn(d_S, m)
        if not d <= count - 2:
            fail(f"d={d} <= h0({d_S},{m})-2={count - 2} fails")
        new_degree = d_S * m * m - d
        coeffs = _shift_coeffs(state, {BASIS_H: m * m}, sign)
        return CycleState.make(-sign, new_degree, coeffs), {"h0_m": count}

    if kind == "VariantComplement":
        l = move.l
        if l < GLOBALLY_GENERATED_MIN[d_S]:
            fail(f"O({l}) is not globally generated on dP{d_S}")
        count_l = h0_fn(d_S, l)
        count_l1 = h0_fn(d_S, l + 1)
        count_1 = h0_fn(d_S, 1)
        if not count_l >= d + 1:
            fail(f"h0({d_S},{l})={count_l} >= d+1={d + 1} fails")
        if not count_l1 - d > count_1:
            fail(f"h0({d_S},{l + 1})-d={count_l1 - d} > h0({d_S},1)={count_1} fails")
        new_degree = d_S * l * (l + 1) - d
        coeffs = _shift_coeffs(state, {BASIS_H: l * (l + 1)}, sign)
        witness = {"h0_l": count_l, "h0_l1": count_l1, "h0_1": count_1}
        return CycleState.make(-sign, new_degree, coeffs), witness

    def checked_degree(combo: Dict[str, int]) -> int:
        for name in combo:
            if name not in surface.basis:
                fail(f"basis cycle {name!r} is not available on this surface")
        return surface.combo_degree(combo)

    if kind == "VBSubtract":
        l = move.l
        target = move.combo_dict()
        if not target or any(v <= 0 for v in target.values()):
            fail("subtraction target must be a nonzero nonnegative basis combo")
        if d_S in (1, 2) and set(target) != {BASIS_H}:
            fail(f"on dP{d_S} only multiples of h may be subtracted")
        s = checked_degree(target)
        if d_S == 3 and l < 0 or d_S in (1, 2) and l < 1:
            fail(f"l={l} out of range for dP{d_S}")
        count_l = h0_fn(d_S, l)
        count_l1 = h0_fn(d_S, l + 1)
        if not count_l < d:
            fail(f"h0({d_S},{l})={count_l} < d={d} fails")
        if not count_l1 - d >= 2 * s:
            fail(f"h0({d_S},{l + 1})-d={count_l1 - d} >= 2s={2 * s} fails")
        if d - s < 0:
            fail("subtracted degree exceeds the unknown degree")
        coeffs = _shift_coeffs(state, target, sign)
        witness = {"h0_l": count_l, "h0_l1": count_l1}
        return CycleState.make(sign, d - s, coeffs), witness

    if kind == "InvolutionFlip":
        if d_S != 2:
            fail("the anticanonical involution exists only on dP2")
        coeffs = _shift_coeffs(state, {BASIS_H: d}, sign)
        return CycleState.make(-sign, d, coeffs), {}

    if kind == "CurveRR":
        l = move.l
        combo = move.combo_dict()
        if l < 1:
            fail("CurveRR needs l >= 1")
        checked_degree(combo)
        positive = {n: v for n, v in combo.items() if v > 0}
        negative = {n: -v for n, v in combo.items() if v < 0}
        if set(positive) != {BASIS_H} or positive.get(BASIS_H, 0) % l != 0:
            fail("the intrinsic part of the combo must be a multiple of l times h")
        support = d + sum(surface.basis[n] * v for n, v in negative.items())
        count_l = h0_fn(d_S, l)
        if not support <= count_l - 2:
            fail(
                f"support degree {support} <= h0({d_S},{l})-2={count_l - 2} fails"
            )
        combo_degree = checked_degree(combo)
        g = genus_fn(d_S, l)
        new_degree = combo_degree - d
        if not new_degree >= g:
            fail(f"rewritten degree {new_degree} >= genus {g} fails")
        coeffs = _shift_coeffs(state, combo, sign)
        witness = {"h0_l": count_l, "genus_l": g}
        return CycleState.make(-sign, new_degree, coeffs), witness

    if kind == "AddBasis":
        combo = move.combo_dict()
        if not combo or any(v <= 0 for v in combo.values()):
            fail("absorbed combo must be nonzero and nonnegative")
        s = checked_degree(combo)
        coeffs = _shift_coeffs(state, combo, -sign)
        return CycleState.make(sign, d + s, coeffs), {}

    if kind == "EntryRR":
        if not is_entry:
            fail("EntryRR is only valid as the first move of a certificate")
        if sign != 1 or state.coeffs:
            fail("EntryRR applies to a bare class state")
        if move.gamma is None or move.gamma < 1:
            fail("gamma must be a positive integer")
        coeffs = {BASIS_H: -move.gamma}
        return CycleState.make(1, d + move.gamma * d_S, coeffs), {}

    fail(f"unknown move kind {kind!r}")


@dataclass(frozen=True)
class Goal:
    """Target condition on the final state of a descent."""

    name: str
    max_degree: Optional[int] = None
    degrees: Tuple[int, ...] = ()
    sign: Optional[int] = None

    def satisfied(self, state: CycleState) -> bool:
        ok = False
        if self.max_degree is not None and state.unknown_degree <= self.max_degree:
            ok = True
        if state.unknown_degree in self.degrees:
            ok = True
        if not ok:
            return False
        if self.sign is not None and state.unknown_degree > 0:
            return state.sign == self.sign
        return True

    def describe(self) -> dict:
        out = {"name": self.name}
        if self.max_degree is not None:
            out["max_degree"] = self.max_degree
        if self.degrees:
            out["degrees"] = sorted(self.degrees)
        if self.sign is not None:
            out["sign"] = self.sign
        return out


GOALS = {
    "cubic": Goal("cubic", max_degree=18),
    "cubic-pos": Goal("cubic-pos", max_degree=18, sign=1),
    "cubic-neg": Goal("cubic-neg", max_degree=18, sign=-1),
    "cubic-x4": Goal("cubic-x4", max_degree=4),
    "cubic-x4-pos": Goal("cubic-x4-pos", max_degree=4, sign=1),
    "coray": Goal("coray", degrees=(1, 4)),
    "dp2": Goal("dp2", max_degree=13, sign=1),
    "dp2-refined": Goal("dp2-refined", max_degree=7, degrees=(12, 13), sign=1),
    "dp1": Goal("dp1", max_degree=15, sign=1),
    "dp1-refined": Goal("dp1-refined", max_degree=4, degrees=(7, 15)),
}


def default_goal(surface: DelPezzo, refined: bool = False) -> Goal:
    if surface.degree == 3:
        return GOALS["cubic-x4"] if surface.with_x4 else GOALS["cubic"]
    if surface.degree == 2:
        return GOALS["dp2-refined"] if refined else GOALS["dp2"]
    return GOALS["dp1-refined"] if refined else GOALS["dp1"]


@dataclass
class Certificate:
    """Replayable descent: initial state, moves with witnesses, final state."""

    surface: DelPezzo
    initial: CycleState
    moves: List[Move]
    witnesses: List[dict]
    final: CycleState
    abstract_entry: bool = False

    def to_json(self) -> dict:
        return {
            "surface": self.surface.to_json(),
            "abstract_entry": self.abstract_entry,
            "initial": self.initial.to_json(),
            "moves": [m.to_json(w) for m, w in zip(self.moves, self.witnesses)],
            "final": self.final.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        return cls(
            surface=DelPezzo.from_json(obj["surface"]),
            initial=CycleState.from_json(obj["initial"]),
            moves=[Move.from_json(m) for m in obj["moves"]],
            witnesses=[m.get("witness", {}) for m in obj["moves"]],
            final=CycleState.from_json(obj["final"]),
            abstract_entry=obj.get("abstract_entry", False),
        )


@dataclass
class VerificationReport:
    ok: bool
    failure: Optional[str] = None
    states: List[CycleState] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"ok": self.ok, "failure": self.failure, "steps": len(self.states) - 1}


def verify_certificate(cert: Certificate) -> VerificationReport:
    """Replay a certificate, rechecking every inequality independently.

    Recomputes section counts by recurrence (not the closed form the search
    uses), compares them against the recorded witnesses, and checks degree
    conservation of the tracked class at every step.
    """
    state = cert.initial
    states = [state]
    surface = cert.surface
    invariant = state.total_degree(surface)
    for idx, (move, recorded) in enumerate(zip(cert.moves, cert.witnesses)):
        try:
            state, witness = apply_move(
                surface,
                state,
                move,
                h0_fn=h0_by_recurrence,
                genus_fn=genus_by_recurrence,
                is_entry=(idx == 0),
            )
        except PreconditionFailed as exc:
            return VerificationReport(False, f"move {idx}: {exc}", states)
        except (TypeError, ValueError) as exc:
            return VerificationReport(False, f"move {idx}: malformed move ({exc})", states)
        if recorded and recorded != witness:
            return VerificationReport(
                False,
                f"move {idx}: recorded witness {recorded} != recomputed {witness}",
                states,
            )
        if state.total_degree(surface) != invariant:
            return VerificationReport(
                False,
                f"move {idx}: degree conservation broken "
                f"({state.total_degree(surface)} != {invariant})",
                states,
            )
        states.append(state)
    if state != cert.final:
        return VerificationReport(
            False, f"final state mismatch: replay ended at {state}", states
        )
    return VerificationReport(True, None, states)


#: How far past the first admissible parameter the complement moves reach.
_COMPLEMENT_WINDOW = 3
_transition_cache: Dict[Tuple[int, bool, int], tuple] = {}


def _transitions(surface: DelPezzo, degree: int) -> tuple:
    """Deterministically ordered move menu at a given unknown degree.

    Returns (flips_sign, new_degree, move) triples; move guards depend only
    on the unknown degree, so the table is cached.  Order mirrors the
    proofs' preference: subtract while the strict section inequality holds,
    fall back to complements, then bookkeeping additions and the involution
    flip.
    """
    key = (surface.degree, surface.with_x4, degree)
    cached = _transition_cache.get(key)
    if cached is not None:
        return cached
    d_S = surface.degree
    out = []
    targets = [{BASIS_H: 1}, {BASIS_H: 2}]
    if d_S == 1:
        targets.append({BASIS_H: 3})
    if surface.with_x4:
        targets.append({BASIS_X4: 1})
    l_lo = 0 if d_S == 3 else 1
    l = l_lo
    while h0(d_S, l) < degree:
        for target in targets:
            s = surface.combo_degree(target)
            if h0(d_S, l + 1) - degree >= 2 * s and degree - s >= 0:
                out.append((False, degree - s, Move.vb_subtract(l, target)))
        l += 1
    m = VERY_AMPLE_MIN[d_S]
    while degree > h0(d_S, m) - 2:
        m += 1
    for mm in range(m, m + _COMPLEMENT_WINDOW + 1):
        out.append((True, d_S * mm * mm - degree, Move.complement(mm - 1)))
    l = GLOBALLY_GENERATED_MIN[d_S]
    while h0(d_S, l) < degree + 1:
        l += 1
    for ll in range(l, l + _COMPLEMENT_WINDOW + 1):
        if h0(d_S, ll + 1) - degree > h0(d_S, 1):
            out.append((True, d_S * ll * (ll + 1) - degree, Move.variant_complement(ll)))
    for k in (1, 2, 3):
        out.append((False, degree + k * d_S, Move.add_basis({BASIS_H: k})))
    if surface.with_x4:
        out.append((False, degree + 4, Move.add_basis({BASIS_X4: 1})))
        out.append((False, degree + 8, Move.add_basis({BASIS_X4: 2})))
    if d_S == 2:
        out.append((True, degree, Move.involution_flip()))
    cached = tuple(out)
    _transition_cache[key] = cached
    return cached


def find_certificate(
    surface: DelPezzo,
    start_degree: int,
    goal: Goal,
    degree_cap: Optional[int] = None,
) -> Certificate:
    """Shortest verified descent from an effective cycle of the start degree.

    Breadth-first search over (sign, unknown degree) states -- move guards
    depend on nothing else -- with deterministic move ordering, so the
    returned chain is reproducible.  Move parameters are capped at
    start_degree + 4 and explored degrees at start_degree + 20.
    """
    if start_degree < 0:
        raise ValueError("start degree must be nonnegative")
    cap = degree_cap if degree_cap is not None else start_degree + 20
    l_max = start_degree + 4

    def node_of(sign: int, degree: int):
        return (1 if degree == 0 else sign, degree)

    def is_goal(node) -> bool:
        return goal.satisfied(CycleState.make(node[0], node[1], {}))

    start = (1, start_degree)
    parents = {start: None}
    queue = deque([start])
    goal_node = start if is_goal(start) else None
    while queue and goal_node is None:
        node = queue.popleft()
        sign, degree = node
        for flips, new_degree, move in _transitions(surface, degree):
            if new_degree > cap or (move.l is not None and move.l > l_max):
                continue
            child = node_of(-sign if flips else sign, new_degree)
            if child in parents:
                continue
            parents[child] = (node, move)
            if is_goal(child):
                goal_node = child
                break
            queue.append(child)

    if goal_node is None:
        raise CertificateNotFound(surface, start_degree, goal, len(parents))

    chain: List[Move] = []
    node = goal_node
    while parents[node] is not None:
        node, move = parents[node]
        chain.append(move)
    chain.reverse()

    initial = CycleState.entry(start_degree)
    state = initial
    witnesses = []
    for idx, move in enumerate(chain):
        state, witness = apply_move(surface, state, move, is_entry=(idx == 0))
        witnesses.append(witness)
    return Certificate(
        surface=surface,
        initial=initial,
        moves=chain,
        witnesses=witnesses,
        final=state,
    )


def entry_certificate(surface: DelPezzo, class_degree: int, gamma: int, goal: Goal) -> Certificate:
    """Certificate for an abstract class: EntryRR first, then a found descent."""
    entry_move = Move.entry_rr(gamma)
    initial = CycleState.entry(class_degree)
    after_entry, entry_witness = apply_move(surface, initial, entry_move, is_entry=True)
    tail = find_certificate(surface, after_entry.unknown_degree, goal)
    moves = [entry_move] + tail.moves
    witnesses = [entry_witness] + tail.witnesses
    state = after_entry
    # Replay the tail from the EntryRR state to thread the coefficients.
    for move in tail.moves:
        state, _ = apply_move(surface, state, move)
    return Certificate(
        surface=surface,
        initial=initial,
        moves=moves,
        witnesses=witnesses,
        final=state,
        abstract_entry=True,
    )


@dataclass
class SuiteRow:
    start_degree: int
    final_degree: int
    final_sign: int
    moves: int
    verified: bool


@dataclass
class SuiteReport:
    surface: DelPezzo
    goal: Goal
    rows: List[SuiteRow]

    @property
    def all_verified(self) -> bool:
        return all(r.verified for r in self.rows)

    @property
    def max_final_degree(self) -> int:
        return max(r.final_degree for r in self.rows)

    def to_json(self) -> dict:
        return {
            "surface": self.surface.to_json(),
            "goal": self.goal.describe(),
            "all_verified": self.all_verified,
            "max_final_degree": self.max_final_degree,
            "rows": [
                {
                    "start": r.start_degree,
                    "final": r.final_degree,
                    "sign": r.final_sign,
                    "moves": r.moves,
                    "verified": r.verified,
                }
                for r in self.rows
            ],
        }


def prove_bound_suite(
    surface: DelPezzo,
    goal: Optional[Goal] = None,
    ceiling: int = 200,
    start: int = 1,
) -> SuiteReport:
    """Find and verify a descent certificate for every start degree in range.

    Raises CertificateNotFound if any degree fails; a sound suite is the
    machine-checked content of the effectivity bounds.
    """
    goal = goal or default_goal(surface)
    rows = []
    for degree in range(start, ceiling + 1):
        cert = find_certificate(surface, degree, goal)
        report = verify_certificate(cert)
        rows.append(
            SuiteRow(
                start_degree=degree,
                final_degree=cert.final.unknown_degree,
                final_sign=cert.final.sign,
                moves=len(cert.moves),
                verified=report.ok,
            )
        )
    return SuiteReport(surface=surface, goal=goal, rows=rows)


def effectivity_threshold_report(
    surface: DelPezzo,
    threshold: int,
    ceiling: int = 200,
    even_only: bool = False,
    gamma: int = 1,
) -> dict:
    """Replay the sign-resolution argument behind an effectivity threshold.

    For every class degree D >= threshold (even degrees only, if requested),
    wrap an abstract class via EntryRR, descend to the positive-sign goal,
    and check that the leftover basis coefficient is nonnegative -- which is
    what makes the original class effective.  With a mixed (h, x4) basis the
    leftover combo is effective as soon as its degree is at least the genus
    of a supporting quadric section, and that rule is reported instead.
    """
    goal = default_goal(surface)
    if surface.degree == 3:
        goal = GOALS["cubic-x4-pos"] if surface.with_x4 else GOALS["cubic-pos"]
    basis_genus = genus(surface.degree, 2) if surface.with_x4 else None
    if surface.with_x4:
        rule = f"leftover degree >= genus {basis_genus}"
    else:
        rule = "h coefficient >= 0"
    rows = []
    ok = True
    for degree in range(threshold, ceiling + 1):
        if even_only and degree % 2 != 0:
            continue
        cert = entry_certificate(surface, degree, gamma, goal)
        verified = verify_certificate(cert).ok
        final = cert.final
        coeffs = final.coeff_dict()
        leftover_degree = degree - final.unknown_degree
        if surface.with_x4:
            effective = final.sign == 1 and leftover_degree >= basis_genus
        else:
            effective = final.sign == 1 and coeffs.get(BASIS_H, 0) >= 0
        row_ok = verified and effective
        ok = ok and row_ok
        rows.append(
            {
                "degree": degree,
                "final": final.unknown_degree,
                "sign": final.sign,
                "coeffs": coeffs,
                "verified": verified,
                "effective": effective,
            }
        )
    return {
        "surface": surface.to_json(),
        "threshold": threshold,
        "even_only": even_only,
        "rule": rule,
        "all_effective": ok,
        "rows": rows,
    }


def induction_step_moves(degree: int) -> List[Move]:
    """The proof-mirroring descent step on a cubic surface for degree >= 20.

    Returns at most 3 moves that strictly decrease the unknown degree:
    handle the two exceptional degrees below h0(l+1) by adding h and
    subtracting with doubled target, complement when the degree sits in the
    upper half of its window, and subtract h otherwise.
    """
    if degree < 20:
        raise ValueError("the induction step starts at degree 20")
    l = 1
    while h0(3, l + 1) < degree:
        l += 1
    # now h0(3, l) < degree <= h0(3, l + 1)
    if degree in (h0(3, l + 1), h0(3, l + 1) - 1):
        return [Move.add_basis({BASIS_H: 1}), Move.vb_subtract(l + 1, {BASIS_H: 2})]
    if 2 * degree > 3 * (l + 1) ** 2:
        return [Move.complement(l)]
    return [Move.vb_subtract(l, {BASIS_H: 1})]
