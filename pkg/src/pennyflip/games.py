"""Coin games between the classical and the quantum player.

Covers game specifications, play-out, exhaustive winning-strategy
enumeration and classification for the three-round game, intermediate-state
synthesis, and the decision procedure for arbitrary alternating games,
together with a finite brute-force cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import dihedral
from .dihedral import FLIP, HADAMARD, IDENTITY, PlanarIsometry
from .errors import (EmptyFixedSet, FNotInGroup, LengthMismatch,
                     SearchBudgetExceeded)
from .orbits import fixed_set
from .states import BASIS, CoinState, act, win_probability

#: The classical player's repertoire: leave the coin alone or flip it.
PICARD_POOL: tuple[PlanarIsometry, ...] = (IDENTITY, FLIP)

DEFAULT_MAX_ROUNDS = 9


@dataclass(frozen=True)
class GameSpec:
    """An alternating turn sequence with initial and target basis states."""

    turns: tuple[str, ...]
    initial: CoinState
    target_q: CoinState
    target_p: CoinState

    def __post_init__(self) -> None:
        if len(self.turns) < 2:
            raise ValueError("a game needs at least 2 rounds")
        if any(t not in ("P", "Q") for t in self.turns):
            raise ValueError(f"turns must be over {{P, Q}}, got {self.turns}")
        for a, b in itertools.pairwise(self.turns):
            if a == b:
                raise ValueError("players may not make consecutive moves")
        for s in (self.initial, self.target_q, self.target_p):
            if s not in BASIS:
                raise ValueError(f"{s} is not a basis state")
        if self.target_q == self.target_p:
            raise ValueError("the two target states must differ")

    @classmethod
    def from_string(cls, turns: str, initial: CoinState = BASIS[0],
                    target_q: CoinState | None = None) -> "GameSpec":
        if target_q is None:
            target_q = initial
        target_p = BASIS[1] if target_q == BASIS[0] else BASIS[0]
        return cls(tuple(turns.upper()), initial, target_q, target_p)

    def turn_count(self, owner: str) -> int:
        return sum(1 for t in self.turns if t == owner)


#: The canonical three-round game: Q moves, the classical player replies, Q moves.
PQG = GameSpec.from_string("QPQ")


@dataclass(frozen=True)
class Strategy:
    """A fixed move sequence for one player, one move per owned turn."""

    owner: str
    moves: tuple[PlanarIsometry, ...]

    def __str__(self) -> str:
        return "(" + ", ".join(str(m) for m in self.moves) + ")"


@dataclass(frozen=True)
class StrategyClass:
    """An equivalence class of strategies sharing one state path."""

    representative: Strategy
    members: frozenset[Strategy]
    path: tuple[CoinState, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Decision:
    """Outcome of the extended-game analysis.

    ``q_wins`` with a witness strategy, or no winning strategy for either
    player; the classical player never has one.
    """

    q_wins: bool
    strategy: Strategy | None = None
    picard_wins: bool = False

    @property
    def summary(self) -> str:
        if self.q_wins:
            return "Q wins"
        if self.picard_wins:
            return "P wins"
        return "no winning strategy for either player"


def _check_lengths(spec: GameSpec, sigma: Strategy) -> None:
    expected = spec.turn_count(sigma.owner)
    if len(sigma.moves) != expected:
        raise LengthMismatch(
            f"{sigma.owner} has {expected} turns but strategy has "
            f"{len(sigma.moves)} moves")


def play_out(spec: GameSpec, sigma_q: Strategy, sigma_p: Strategy) -> CoinState:
    """Final coin state after both players apply their moves in turn order."""
    _check_lengths(spec, sigma_q)
    _check_lengths(spec, sigma_p)
    its = {"Q": iter(sigma_q.moves), "P": iter(sigma_p.moves)}
    state = spec.initial
    for t in spec.turns:
        state = act(next(its[t]), state)
    return state


def picard_strategies(spec: GameSpec) -> Iterable[Strategy]:
    m = spec.turn_count("P")
    for moves in itertools.product(PICARD_POOL, repeat=m):
        yield Strategy("P", moves)


def is_winning_strategy(spec: GameSpec, sigma_q: Strategy) -> bool:
    """True iff the final state is exactly Q's target for every classical reply."""
    return all(play_out(spec, sigma_q, sp) == spec.target_q
               for sp in picard_strategies(spec))


def verify_characteristic_properties(spec: GameSpec, sigma_q: Strategy) -> bool:
    """The two conditions every winning pair (A1, A2) of the three-round
    game satisfies: A2*I*A1 and A2*F*A1 both send the initial state to Q's
    target, and A1 sends it into the fixed set of the flip."""
    if spec.turns != ("Q", "P", "Q"):
        raise ValueError("characteristic properties apply to the QPQ game only")
    a1, a2 = sigma_q.moves
    mid = act(a1, spec.initial)
    for reply in PICARD_POOL:
        if act(a2, act(reply, mid)) != spec.target_q:
            return False
    return act(FLIP, mid) == mid


def state_path(sigma: Strategy, initial: CoinState) -> tuple[CoinState, ...]:
    """The states produced by composing the owner's moves alone."""
    path = [initial]
    for move in sigma.moves:
        path.append(act(move, path[-1]))
    return tuple(path)


def q_pool(n: int) -> list[PlanarIsometry]:
    """The distinct isometries of D_n in canonical order."""
    return sorted(set(dihedral.isometries(n)), key=dihedral.isometry_sort_key)


def enumerate_winning_strategies(spec: GameSpec, n: int) -> list[Strategy]:
    """Exhaustive scan of Q move tuples drawn from D_n, deterministic order.

    Strategies are counted as tuples of isometries (matrix values), so
    distinct symbolic elements with the same representation coincide.
    """
    if n % 4 != 0:
        raise FNotInGroup(f"the classical flip is not in D_{n}")
    pool = q_pool(n)
    qc = spec.turn_count("Q")
    winners = []
    for moves in itertools.product(pool, repeat=qc):
        sigma = Strategy("Q", moves)
        if is_winning_strategy(spec, sigma):
            winners.append(sigma)
    return winners


def classify_strategies(strategies: Iterable[Strategy],
                        initial: CoinState) -> list[StrategyClass]:
    """Partition by equality of state paths; deterministic path order."""
    groups: dict[tuple[CoinState, ...], list[Strategy]] = {}
    for sigma in strategies:
        groups.setdefault(state_path(sigma, initial), []).append(sigma)
    classes = []
    for path in sorted(groups, key=lambda p: tuple(s.phi.fraction for s in p)):
        members = groups[path]
        classes.append(StrategyClass(members[0], frozenset(members), path))
    return classes


def is_dominant(spec: GameSpec, sigma: Strategy,
                own_pool: Sequence[PlanarIsometry],
                opp_pool: Sequence[PlanarIsometry] = PICARD_POOL) -> bool:
    """Whether *sigma* does at least as well as every alternative against
    every opponent strategy, by win probability over the full cross product."""
    owner = sigma.owner
    opponent = "P" if owner == "Q" else "Q"
    target = spec.target_q if owner == "Q" else spec.target_p
    own_count = spec.turn_count(owner)
    opp_count = spec.turn_count(opponent)

    def prob(own: Strategy, opp: Strategy) -> float:
        sq, sp = (own, opp) if owner == "Q" else (opp, own)
        return win_probability(play_out(spec, sq, sp), target)

    alternatives = [Strategy(owner, moves)
                    for moves in itertools.product(own_pool, repeat=own_count)]
    for opp_moves in itertools.product(opp_pool, repeat=opp_count):
        opp = Strategy(opponent, opp_moves)
        p_sigma = prob(sigma, opp)
        if any(prob(alt, opp) > p_sigma for alt in alternatives):
            return False
    return True


def synthesize_by_intermediate_states(spec: GameSpec, n: int) -> list[Strategy]:
    """Winning pairs (A1, A2) built from intermediate states the classical
    player cannot move: A1 sends the initial state to such a state, A2 sends
    it on to Q's target."""
    if spec.turns != ("Q", "P", "Q"):
        raise ValueError("synthesis applies to the QPQ game only")
    if n % 4 != 0:
        raise FNotInGroup(f"the classical flip is not in D_{n}")
    safe = fixed_set(n, [IDENTITY, FLIP])
    if not safe:
        raise EmptyFixedSet(
            f"no state in the basis orbit of D_{n} is fixed by the flip")
    pool = q_pool(n)
    strategies = []
    for mid in safe:
        firsts = [p for p in pool if act(p, spec.initial) == mid]
        seconds = [p for p in pool if act(p, mid) == spec.target_q]
        strategies.extend(Strategy("Q", (a1, a2))
                          for a1 in firsts for a2 in seconds)
    return strategies


def decide_extended_game(spec: GameSpec) -> Decision:
    """Closed-form decision: Q has a winning strategy iff Q makes both the
    first and the last move; the classical player never has one.

    The witness opens with the Hadamard move, idles in the flip-fixed
    intermediate state, and closes with the Hadamard move (same initial and
    target) or the flipped Hadamard move (different)."""
    if spec.turns[0] == "Q" and spec.turns[-1] == "Q":
        closing = (HADAMARD if spec.initial == spec.target_q
                   else FLIP.compose(HADAMARD))
        idle = (IDENTITY,) * (spec.turn_count("Q") - 2)
        return Decision(True, Strategy("Q", (HADAMARD, *idle, closing)))
    return Decision(False)


def brute_force_extended_check(spec: GameSpec, n: int = 8,
                               max_rounds: int = DEFAULT_MAX_ROUNDS) -> Decision:
    """Exhaustive search over the finite pool D_n for both players' winning
    strategies.

    The scan over Q move tuples is pruned by merging branches that produce
    the same set of states reachable under the opponent's choices; this is
    exact because that set is a function of Q's own prefix alone.
    """
    if len(spec.turns) > max_rounds:
        raise SearchBudgetExceeded(
            f"{len(spec.turns)} rounds exceeds the bound of {max_rounds}")
    if n % 8 != 0:
        raise FNotInGroup(f"brute force needs both flip and Hadamard, 8 | n; got {n}")
    pool = q_pool(n)

    memo_q: dict[tuple[int, frozenset], tuple[PlanarIsometry, ...] | None] = {}

    def q_can_force(i: int, states: frozenset[CoinState]):
        # Returns Q's remaining moves if some continuation pins every
        # reachable final state to Q's target, else None.
        if i == len(spec.turns):
            return () if states == frozenset({spec.target_q}) else None
        key = (i, states)
        if key not in memo_q:
            if spec.turns[i] == "Q":
                result = None
                for m in pool:
                    rest = q_can_force(
                        i + 1, frozenset(act(m, s) for s in states))
                    if rest is not None:
                        result = (m, *rest)
                        break
            else:
                result = q_can_force(
                    i + 1, states | {act(FLIP, s) for s in states})
            memo_q[key] = result
        return memo_q[key]

    memo_p: dict[tuple[int, frozenset], bool] = {}

    def p_can_force(i: int, states: frozenset[CoinState]) -> bool:
        if i == len(spec.turns):
            return states == frozenset({spec.target_p})
        key = (i, states)
        if key not in memo_p:
            if spec.turns[i] == "P":
                memo_p[key] = any(
                    p_can_force(i + 1, frozenset(act(m, s) for s in states))
                    for m in PICARD_POOL)
            else:
                memo_p[key] = p_can_force(
                    i + 1, frozenset(act(m, s) for m in pool for s in states))
        return memo_p[key]

    start = frozenset({spec.initial})
    q_moves = q_can_force(0, start)
    picard_wins = p_can_force(0, start)
    strategy = Strategy("Q", q_moves) if q_moves is not None else None
    return Decision(q_moves is not None, strategy, picard_wins)


def alternating_turn_sequences(min_rounds: int = 2,
                               max_rounds: int = DEFAULT_MAX_ROUNDS
                               ) -> list[tuple[str, ...]]:
    """Both alternating sequences for every length in the range."""
    out = []
    for length in range(min_rounds, max_rounds + 1):
        for first in ("P", "Q"):
            second = "Q" if first == "P" else "P"
            out.append(tuple((first, second)[i % 2] for i in range(length)))
    return out
