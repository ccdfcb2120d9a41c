"""The verification suite behind ``verify-all``.

Each check re-derives one of the library's headline claims by enumeration
and reports pass/fail with structured details.  Checks run in canonical
order and are deterministic for a fixed configuration and seed.
"""

from __future__ import annotations

import math
import time
from typing import Callable

from . import dihedral, games, orbits, unitary
from .config import Config
from .dihedral import (FLIP, HADAMARD, IDENTITY, DihedralElement,
                       closure, isometries, represent)
from .errors import FNotInGroup
from .games import GameSpec, decide_extended_game
from .states import (BASIS, KET_MINUS, KET_ONE, KET_PLUS, KET_ZERO,
                     win_probability)

EXPECTED_PATHS = (
    (KET_ZERO, KET_PLUS, KET_ZERO),
    (KET_ZERO, KET_MINUS, KET_ZERO),
)


def _d8_winning_classes():
    winners = games.enumerate_winning_strategies(games.PQG, 8)
    classes = games.classify_strategies(winners, games.PQG.initial)
    return winners, classes


def check_winning_classes_d8(cfg: Config):
    winners, classes = _d8_winning_classes()
    paths = tuple(c.path for c in classes)
    ok = (len(winners) == 32 and len(classes) == 2
          and all(c.size == 16 for c in classes)
          and paths == EXPECTED_PATHS)
    return ok, {"strategies": len(winners),
                "classSizes": [c.size for c in classes],
                "paths": [[str(s) for s in c.path] for c in classes]}


def check_winning_classes_stable(cfg: Config):
    base = {s.moves for s in games.enumerate_winning_strategies(games.PQG, 8)}
    details = {}
    ok = True
    for n in (16, 24, 32):
        winners = games.enumerate_winning_strategies(games.PQG, n)
        classes = games.classify_strategies(winners, games.PQG.initial)
        same = ({s.moves for s in winners} == base
                and tuple(c.path for c in classes) == EXPECTED_PATHS
                and all(c.size == 16 for c in classes))
        details[f"D_{n}"] = {"strategies": len(winners), "identical": same}
        ok = ok and same
    return ok, details


def small_group_rows() -> list[tuple[int, bool, int]]:
    """(n, flip present, Q winning strategy count) for n = 3..7."""
    rows = []
    for n in range(3, 8):
        has_flip = dihedral.contains_isometry(n, FLIP)
        count = (len(games.enumerate_winning_strategies(games.PQG, n))
                 if has_flip else 0)
        rows.append((n, has_flip, count))
    return rows


def check_small_groups(cfg: Config):
    rows = small_group_rows()
    expected = {3: False, 4: True, 5: False, 6: False, 7: False}
    ok = all(has_flip == expected[n] and count == 0
             for n, has_flip, count in rows)
    return ok, {f"D_{n}": {"flipPresent": has_flip, "qWinning": count}
                for n, has_flip, count in rows}


def check_fixed_set_dichotomy(cfg: Config):
    failures = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        if n % 4 != 0:
            try:
                orbits.fixed_set(n, [IDENTITY, FLIP])
            except FNotInGroup:
                continue
            failures.append(n)
            continue
        fix = orbits.fixed_set(n, [IDENTITY, FLIP])
        expected = (KET_PLUS, KET_MINUS) if n % 8 == 0 else ()
        if tuple(sorted(fix)) != tuple(sorted(expected)):
            failures.append(n)
    return not failures, {"nRange": [cfg.n_min, cfg.n_max],
                          "failures": failures}


def check_orbit_structure(cfg: Config):
    failures = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        orb0 = orbits.orbit(n, KET_ZERO)
        orb1 = orbits.orbit(n, KET_ONE)
        basis_orbit = orbits.orbit_of_basis(n)
        if n % 4 == 0:
            shape_ok = (set(orb0) == set(orb1) and len(orb0) == n // 2)
        elif n % 2 == 0:
            shape_ok = (len(orb0) == n // 2 and len(orb1) == n // 2
                        and not set(orb0) & set(orb1))
        else:
            shape_ok = (len(orb0) == n and len(orb1) == n
                        and not set(orb0) & set(orb1))
        counting_ok = all(
            len(orbits.orbit(n, x)) * len(orbits.stabilizer(n, x)) == 2 * n
            for x in basis_orbit)
        if not (shape_ok and counting_ok):
            failures.append(n)
    return not failures, {"nRange": [cfg.n_min, cfg.n_max],
                          "failures": failures}


def check_stabilizers_d8(cfg: Config):
    rot = DihedralElement.rotation
    ref = DihedralElement.reflection
    # {I, R_pi, S_0, S_{4pi/8}} and {I, R_pi, F, S_{6pi/8}} as elements of D_8
    expected_basis = {rot(8, 0), rot(8, 4), ref(8, 0), ref(8, 4)}
    expected_diag = {rot(8, 0), rot(8, 4), ref(8, 2), ref(8, 6)}
    got = {str(x): set(orbits.stabilizer(8, x))
           for x in (KET_ZERO, KET_ONE, KET_PLUS, KET_MINUS)}
    ok = (got["|0⟩"] == expected_basis and got["|1⟩"] == expected_basis
          and got["|+⟩"] == expected_diag and got["|−⟩"] == expected_diag)
    return ok, {name: sorted(str(g) for g in elems)
                for name, elems in got.items()}


def check_extended_games(cfg: Config):
    failures = []
    n_games = 0
    for turns in games.alternating_turn_sequences(2, cfg.max_rounds):
        for initial in BASIS:
            for target_q in BASIS:
                spec = GameSpec.from_string("".join(turns), initial, target_q)
                n_games += 1
                decided = decide_extended_game(spec)
                brute = games.brute_force_extended_check(
                    spec, 8, cfg.max_rounds)
                label = f"{''.join(turns)}/{initial}->{target_q}"
                if decided.q_wins != brute.q_wins or brute.picard_wins:
                    failures.append(label)
                    continue
                if decided.q_wins and not games.is_winning_strategy(
                        spec, decided.strategy):
                    failures.append(label + " (witness)")
    return not failures, {"games": n_games, "failures": failures}


def check_flip_eigensystem(cfg: Config):
    f = unitary.matrix(FLIP)
    max_residual = 0.0
    pairs = unitary.eigensystem_flip()
    for lam, vec in pairs:
        residual = float(max(abs(c) for c in (f @ vec - lam * vec)))
        max_residual = max(max_residual, residual)
    ok = ([lam for lam, _ in pairs] == [1.0, -1.0]
          and max_residual <= unitary.TOL_RESIDUAL)
    return ok, {"eigenvalues": [lam for lam, _ in pairs],
                "maxResidual": max_residual}


def check_phase_families(cfg: Config):
    failures = 0
    worst = 0.0
    for i in range(100):
        base = unitary.FIRST_MOVE_BASES[i % 8]
        theta = (i * 2.0 * math.pi / 100.0 + 0.05) % (2.0 * math.pi)
        tag = unitary.classify_winning_first_move(
            unitary.phase_family(base, theta), cfg.tolerance)
        if tag is None:
            failures += 1
            continue
        if tag.base == base:
            expected_theta = theta
        elif tag.base == unitary.antipode(base):
            # antipodal base carries the same family, phase shifted by pi
            expected_theta = (theta + math.pi) % (2.0 * math.pi)
        else:
            failures += 1
            continue
        err = abs((tag.theta - expected_theta + math.pi)
                  % (2.0 * math.pi) - math.pi)
        worst = max(worst, err)
        if err > cfg.tolerance:
            failures += 1
    return failures == 0, {"gridPoints": 100, "failures": failures,
                           "maxThetaError": worst}


def check_u2_sampling(cfg: Config):
    if cfg.samples == 0:
        return None, {"skipped": "samples = 0"}
    state_mismatches = 0
    unitary_hits = 0
    classifier_mismatches = 0
    max_residual = 0.0
    for i in range(cfg.samples):
        psi = unitary.sample_state(cfg.seed + i)
        near_eigen = (unitary.proportional(psi, unitary.PLUS, cfg.tolerance)
                      or unitary.proportional(psi, unitary.MINUS, cfg.tolerance))
        if unitary.fixed_by_flip_projective(psi, cfg.tolerance) != near_eigen:
            state_mismatches += 1
        u = unitary.sample_unitary(cfg.seed + i)
        max_residual = max(max_residual, unitary.unitarity_residual(u))
        tag = unitary.classify_winning_first_move(u, cfg.tolerance)
        if tag is not None:
            unitary_hits += 1
            if not unitary.fixed_by_flip_projective(u @ unitary.KET0,
                                                    cfg.tolerance):
                classifier_mismatches += 1
    ok = state_mismatches == 0 and classifier_mismatches == 0
    return ok, {"samples": cfg.samples, "hits": unitary_hits,
                "stateMismatches": state_mismatches,
                "maxResidual": max_residual}


def check_representation(cfg: Config):
    failures = []
    for n in (8, 12, 16):
        elems = list(dihedral.elements(n))
        for g in elems:
            for h in elems:
                lhs = represent(g.compose(h))
                rhs = represent(g).compose(represent(h))
                if lhs != rhs:
                    failures.append(f"D_{n}: {g} * {h}")
    generated = closure({FLIP, HADAMARD})
    closure_ok = (len(generated) == 16 and generated == set(isometries(8)))
    ok = not failures and closure_ok
    return ok, {"pairFailures": failures[:5], "closureSize": len(generated),
                "closureMatchesD8": closure_ok}


def check_probability_identities(cfg: Config):
    if win_probability(KET_PLUS, KET_ZERO) != 0.5:
        return False, {"halfExact": False}
    worst = 0.0
    for n in range(cfg.n_min, min(cfg.n_max, 64) + 1):
        for x in orbits.orbit_of_basis(n):
            total = (win_probability(x, KET_ZERO)
                     + win_probability(x, KET_ONE))
            worst = max(worst, abs(total - 1.0))
    return worst <= 1e-12, {"halfExact": True, "maxSumError": worst}


CHECKS: list[tuple[str, str, Callable]] = [
    ("winning-classes-d8",
     "three-round game in D_8: 32 winning strategies, 2 classes of 16",
     check_winning_classes_d8),
    ("winning-classes-stable",
     "D_16/D_24/D_32 add no winning strategies beyond the D_8 set",
     check_winning_classes_stable),
    ("small-groups",
     "flip absent from D_3/D_5/D_6/D_7; D_4 playable but Q cannot win",
     check_small_groups),
    ("fixed-set-dichotomy",
     "Fix({I, F}) over the basis orbit is {|+⟩, |−⟩} iff 8 | n, else empty",
     check_fixed_set_dichotomy),
    ("orbit-structure",
     "basis orbit sizes per n mod 4 and |orbit|·|stabilizer| = 2n",
     check_orbit_structure),
    ("stabilizers-d8",
     "D_8 stabilizers of |0⟩, |1⟩, |+⟩, |−⟩",
     check_stabilizers_d8),
    ("extended-games",
     "Q wins iff first and last mover; classical player never wins",
     check_extended_games),
    ("flip-eigensystem",
     "flip eigenpairs (+1, |+⟩) and (−1, |−⟩)",
     check_flip_eigensystem),
    ("phase-families",
     "phase-family members classify back to their base and phase",
     check_phase_families),
    ("u2-sampling",
     "sampled states/unitaries confirm the flip-fixed characterization",
     check_u2_sampling),
    ("representation-homomorphism",
     "standard representation is a homomorphism; {F, H} closure is D_8",
     check_representation),
    ("probability-identities",
     "exact 0.5 at |+⟩ vs |0⟩ and complementary probabilities sum to 1",
     check_probability_identities),
]


def run_all(cfg: Config, timings: bool = False) -> list[dict]:
    """Run every check; reports in canonical checkId order."""
    reports = []
    for check_id, claim, fn in CHECKS:
        start = time.perf_counter()
        ok, details = fn(cfg)
        elapsed = int((time.perf_counter() - start) * 1000)
        status = "skipped" if ok is None else ("pass" if ok else "fail")
        reports.append({
            "checkId": check_id,
            "claimRef": claim,
            "status": status,
            "details": details,
            "elapsedMs": elapsed if timings else 0,
        })
    return reports


def all_passed(reports: list[dict]) -> bool:
    return all(r["status"] != "fail" for r in reports)
