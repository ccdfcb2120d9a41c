import itertools

import pytest

from pennyflip.angles import Angle
from pennyflip.dihedral import FLIP, HADAMARD, IDENTITY, PlanarIsometry
from pennyflip.errors import (EmptyFixedSet, FNotInGroup, LengthMismatch,
                              SearchBudgetExceeded)
from pennyflip.games import (PICARD_POOL, PQG, GameSpec, Strategy,
                             alternating_turn_sequences,
                             brute_force_extended_check, classify_strategies,
                             decide_extended_game,
                             enumerate_winning_strategies, is_dominant,
                             is_winning_strategy, play_out, q_pool,
                             state_path, synthesize_by_intermediate_states,
                             verify_characteristic_properties)
from pennyflip.states import BASIS, KET_MINUS, KET_ONE, KET_PLUS, KET_ZERO

S7 = PlanarIsometry.reflector(Angle(7, 8))
R2 = PlanarIsometry.rotor(Angle(1, 4))
R14 = PlanarIsometry.rotor(Angle(7, 4))


def q_strategy(*moves):
    return Strategy("Q", moves)


def p_strategy(*moves):
    return Strategy("P", moves)


class TestGameSpec:
    def test_alternation_enforced(self):
        with pytest.raises(ValueError):
            GameSpec.from_string("QQP")

    def test_minimum_length(self):
        with pytest.raises(ValueError):
            GameSpec.from_string("Q")

    def test_targets_must_differ(self):
        with pytest.raises(ValueError):
            GameSpec(("Q", "P"), KET_ZERO, KET_ZERO, KET_ZERO)

    def test_basis_states_only(self):
        with pytest.raises(ValueError):
            GameSpec(("Q", "P"), KET_PLUS, KET_ZERO, KET_ONE)


class TestPlayOut:
    def test_original_game_with_hadamards(self):
        assert play_out(PQG, q_strategy(HADAMARD, HADAMARD),
                        p_strategy(FLIP)) == KET_ZERO
        assert play_out(PQG, q_strategy(HADAMARD, HADAMARD),
                        p_strategy(IDENTITY)) == KET_ZERO

    def test_all_identities_leave_initial(self):
        assert play_out(PQG, q_strategy(IDENTITY, IDENTITY),
                        p_strategy(IDENTITY)) == PQG.initial

    def test_minus_route(self):
        sigma = q_strategy(S7, S7)
        assert play_out(PQG, sigma, p_strategy(FLIP)) == KET_ZERO
        assert state_path(sigma, KET_ZERO) == (KET_ZERO, KET_MINUS, KET_ZERO)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            play_out(PQG, q_strategy(HADAMARD), p_strategy(FLIP))


class TestWinningStrategies:
    def test_hadamard_pair_wins(self):
        assert is_winning_strategy(PQG, q_strategy(HADAMARD, HADAMARD))

    def test_identity_pair_loses(self):
        assert not is_winning_strategy(PQG, q_strategy(IDENTITY, IDENTITY))

    def test_rotor_pair_equivalent_to_hadamards(self):
        assert is_winning_strategy(PQG, q_strategy(R2, R14))

    def test_characteristic_properties(self):
        assert verify_characteristic_properties(PQG, q_strategy(HADAMARD, HADAMARD))
        assert verify_characteristic_properties(PQG, q_strategy(S7, S7))
        assert not verify_characteristic_properties(PQG, q_strategy(FLIP, FLIP))

    def test_every_winner_has_characteristic_properties(self):
        for sigma in enumerate_winning_strategies(PQG, 8):
            assert verify_characteristic_properties(PQG, sigma)


class TestEnumeration:
    def test_d8_has_32_winners(self):
        assert len(enumerate_winning_strategies(PQG, 8)) == 32

    def test_d4_has_none(self):
        assert enumerate_winning_strategies(PQG, 4) == []

    def test_d16_adds_nothing(self):
        w8 = {s.moves for s in enumerate_winning_strategies(PQG, 8)}
        w16 = {s.moves for s in enumerate_winning_strategies(PQG, 16)}
        assert w8 == w16

    def test_odd_n_rejected(self):
        with pytest.raises(FNotInGroup):
            enumerate_winning_strategies(PQG, 7)


class TestClassification:
    def test_two_classes_of_16(self):
        classes = classify_strategies(
            enumerate_winning_strategies(PQG, 8), KET_ZERO)
        assert [c.size for c in classes] == [16, 16]
        assert classes[0].path == (KET_ZERO, KET_PLUS, KET_ZERO)
        assert classes[1].path == (KET_ZERO, KET_MINUS, KET_ZERO)

    def test_singleton(self):
        sigma = q_strategy(HADAMARD, HADAMARD)
        classes = classify_strategies([sigma], KET_ZERO)
        assert len(classes) == 1 and classes[0].members == frozenset({sigma})

    def test_equivalent_pair_merges(self):
        classes = classify_strategies(
            [q_strategy(HADAMARD, HADAMARD), q_strategy(R2, R14)], KET_ZERO)
        assert len(classes) == 1 and classes[0].size == 2


class TestDominance:
    def test_hadamard_pair_is_dominant(self):
        assert is_dominant(PQG, q_strategy(HADAMARD, HADAMARD), q_pool(8))

    def test_identity_pair_is_not(self):
        assert not is_dominant(PQG, q_strategy(IDENTITY, IDENTITY), q_pool(8))

    def test_no_dominant_picard_strategy_in_d4(self):
        for moves in itertools.product(PICARD_POOL, repeat=1):
            sigma = Strategy("P", moves)
            assert not is_dominant(PQG, sigma, PICARD_POOL,
                                   opp_pool=q_pool(4))


class TestSynthesis:
    def test_d8_builds_the_32_winners(self):
        synthesized = {s.moves for s in synthesize_by_intermediate_states(PQG, 8)}
        enumerated = {s.moves for s in enumerate_winning_strategies(PQG, 8)}
        assert synthesized == enumerated

    def test_first_moves_to_plus(self):
        firsts = {s.moves[0] for s in synthesize_by_intermediate_states(PQG, 8)
                  if state_path(s, KET_ZERO)[1] == KET_PLUS}
        assert firsts == {HADAMARD, R2,
                          PlanarIsometry.reflector(Angle(5, 8)),
                          PlanarIsometry.rotor(Angle(5, 4))}

    def test_d12_has_no_safe_intermediate(self):
        with pytest.raises(EmptyFixedSet):
            synthesize_by_intermediate_states(PQG, 12)

    def test_agrees_with_enumeration_in_larger_groups(self):
        for n in (16, 24, 32):
            synthesized = {s.moves
                           for s in synthesize_by_intermediate_states(PQG, n)}
            enumerated = {s.moves
                          for s in enumerate_winning_strategies(PQG, n)}
            assert synthesized == enumerated


def literal_brute_force(spec, n=8):
    """Independent oracle: scan the full strategy cross product."""
    pool = q_pool(n)
    qc, pc = spec.turn_count("Q"), spec.turn_count("P")
    q_wins = any(
        all(play_out(spec, Strategy("Q", qm), Strategy("P", pm)) == spec.target_q
            for pm in itertools.product(PICARD_POOL, repeat=pc))
        for qm in itertools.product(pool, repeat=qc))
    p_wins = any(
        all(play_out(spec, Strategy("Q", qm), Strategy("P", pm)) == spec.target_p
            for qm in itertools.product(pool, repeat=qc))
        for pm in itertools.product(PICARD_POOL, repeat=pc))
    return q_wins, p_wins


class TestExtendedGames:
    def test_original_game_decision(self):
        decision = decide_extended_game(PQG)
        assert decision.q_wins
        assert decision.strategy == q_strategy(HADAMARD, HADAMARD)

    def test_flipped_target_strategy(self):
        spec = GameSpec.from_string("QPQPQ", KET_ONE, KET_ZERO)
        decision = decide_extended_game(spec)
        assert decision.q_wins
        assert decision.strategy == q_strategy(HADAMARD, IDENTITY,
                                               FLIP.compose(HADAMARD))
        assert is_winning_strategy(spec, decision.strategy)

    def test_picard_last_or_first_blocks_q(self):
        for turns in ("PQP", "QP", "PQ"):
            decision = decide_extended_game(GameSpec.from_string(turns))
            assert not decision.q_wins and not decision.picard_wins

    def test_brute_force_agrees_with_literal_scan(self):
        for turns in ("QP", "PQ", "QPQ", "PQP", "QPQP"):
            spec = GameSpec.from_string(turns)
            brute = brute_force_extended_check(spec)
            q_wins, p_wins = literal_brute_force(spec)
            assert brute.q_wins == q_wins
            assert brute.picard_wins == p_wins

    def test_brute_force_matches_decision_up_to_nine_rounds(self):
        for turns in alternating_turn_sequences(2, 9):
            for initial in BASIS:
                for target in BASIS:
                    spec = GameSpec.from_string("".join(turns), initial, target)
                    brute = brute_force_extended_check(spec)
                    assert brute.q_wins == decide_extended_game(spec).q_wins
                    assert not brute.picard_wins

    def test_q_first_and_last_always_wins(self):
        # every combination of initial and target admits a winning strategy
        for turns in alternating_turn_sequences(2, 9):
            if turns[0] != "Q" or turns[-1] != "Q":
                continue
            for initial in BASIS:
                for target in BASIS:
                    spec = GameSpec.from_string("".join(turns), initial, target)
                    decision = decide_extended_game(spec)
                    assert decision.q_wins
                    assert is_winning_strategy(spec, decision.strategy)

    def test_round_budget(self):
        spec = GameSpec.from_string("QP" * 5)
        with pytest.raises(SearchBudgetExceeded):
            brute_force_extended_check(spec, max_rounds=9)

    def test_pool_requires_eighth_roots(self):
        with pytest.raises(FNotInGroup):
            brute_force_extended_check(PQG, n=4)
