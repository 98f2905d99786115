import random

import pytest

from nearvec import (
    NfMatrix,
    VectorSet,
    Witness,
    build_nearfield,
    column_pair_dependent,
    distributivity_trick,
    ege,
    gen_closure,
    is_one_column_independent,
    replay,
    replay_states,
    rref,
    trace_from_text,
    trace_to_text,
)
from nearvec.nearfield import Nearfield

X = 3
W32 = Witness(1, X, X)


def _random_matrix(rng, nf, max_rows=3, max_cols=3):
    k = rng.randint(1, max_rows)
    m = rng.randint(1, max_cols)
    rows = tuple(tuple(rng.randrange(nf.order) for _ in range(m)) for _ in range(k))
    return NfMatrix(nf, rows, m)


class TestRref:
    def test_example(self, dn32):
        M = NfMatrix.from_rows(dn32, [(1, 0, 1), (1, 1, 0)])
        R, steps = rref(M)
        assert R.rows == ((1, 0, 1), (0, 1, 2))
        assert steps

    def test_identity_fixed(self, dn32):
        M = NfMatrix.from_rows(dn32, [(1, 0), (0, 1)])
        R, steps = rref(M)
        assert R == M
        assert steps == ()

    def test_scaling(self, dn32):
        # 2 o 2 = 1, so the row (2, 0) normalizes by right-scaling with 2
        R, steps = rref(NfMatrix.from_rows(dn32, [(2, 0)]))
        assert R.rows == ((1, 0),)
        assert [s.kind for s in steps] == ["scale"]
        assert steps[0].c == 2

    def test_zero_rows_dropped(self, dn32):
        R, _ = rref(NfMatrix.from_rows(dn32, [(1, 1), (2, 2), (0, 0)]))
        assert R.rows == ((1, 1),)


class TestDistributivityTrick:
    def test_example(self, dn32):
        M = NfMatrix.from_rows(dn32, [(1, 0, 1), (0, 1, 2)])
        out = distributivity_trick(M, 2, W32)
        assert set(out.rows) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}

    def test_theta_shape(self, dn32):
        # theta vanishes left of the conflict column and not on it
        M = NfMatrix.from_rows(dn32, [(1, 0, 1), (0, 1, 2)])
        D = ege(M)
        trick = next(s for s in D.trace if s.kind == "trick")
        assert trick.col == 2
        assert trick.theta[:2] == (0, 0)
        assert trick.theta[2] != 0
        assert trick.phi[2] == 1

    def test_rejects_non_conflict_column(self, dn32):
        M = NfMatrix.from_rows(dn32, [(1, 0, 1), (0, 1, 2)])
        with pytest.raises(ValueError, match="not a conflict column"):
            distributivity_trick(M, 1, W32)

    def test_rejects_earlier_conflict(self, dn32):
        M = NfMatrix.from_rows(dn32, [(1, 1, 1), (2, 1, 2)])
        with pytest.raises(ValueError, match="two nonzero entries before"):
            distributivity_trick(M, 2, W32)

    def test_rejects_bad_witness(self, dn32):
        M = NfMatrix.from_rows(dn32, [(1, 0, 1), (0, 1, 2)])
        with pytest.raises(ValueError, match="witness"):
            distributivity_trick(M, 2, Witness(1, 1, 1))


class TestEge:
    def test_two_rows_span_r3(self, dn32):
        D = ege(NfMatrix.from_rows(dn32, [(1, 0, 1), (1, 1, 0)]))
        assert D.dimension == 3
        assert D.canonical
        assert D.basis.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_identity(self, dn32):
        for m in (1, 2, 4):
            rows = tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))
            D = ege(NfMatrix(dn32, rows, m))
            assert D.dimension == m
            assert D.basis.rows == rows
            assert D.trace == ()

    def test_single_row(self, dn32):
        D = ege(NfMatrix.from_rows(dn32, [(1, X)]))
        assert D.dimension == 1
        assert D.basis.rows == ((1, X),)

    def test_zero_matrix(self, dn32):
        D = ege(NfMatrix.from_rows(dn32, [(0, 0), (0, 0)]))
        assert D.dimension == 0
        assert D.basis.rows == ()

    def test_field_fallback_not_canonical(self):
        gf = build_nearfield(5, 1)
        D = ege(NfMatrix.from_rows(gf, [(1, 0, 1), (0, 1, 2)]))
        assert not D.canonical
        assert D.dimension == 2
        assert D.basis.rows == ((1, 0, 1), (0, 1, 2))

    def test_field_without_conflicts_canonical(self):
        gf = build_nearfield(5, 1)
        D = ege(NfMatrix.from_rows(gf, [(2, 0), (0, 3)]))
        assert D.canonical
        assert D.basis.rows == ((1, 0), (0, 1))

    def test_dimension_can_exceed_row_count(self, dn32):
        M = NfMatrix.from_rows(dn32, [(1, 0, 1), (1, 1, 0)])
        assert ege(M).dimension > rref(M)[0].n_rows

    def test_conflict_column_with_three_entries(self, dn32):
        # one trick plus the following reduction must clear all three
        M = NfMatrix.from_rows(dn32, [(1, 0, 0, 2), (0, 1, 0, X), (0, 0, 1, 4)])
        D = ege(M)
        assert D.canonical
        _well_formed(D)
        tricks = [s for s in D.trace if s.kind == "trick"]
        assert tricks and tricks[0].col == 3
        assert sum(1 for row in M.rows if row[3]) == 3
        before = gen_closure(VectorSet.from_vectors(dn32, 4, M.rows))
        after = gen_closure(VectorSet.from_vectors(dn32, 4, D.basis.rows))
        assert before.codes == after.codes
        assert replay(M, D.trace) == D.basis


def _well_formed(D):
    basis = D.basis
    for j in range(basis.width):
        assert sum(1 for row in basis.rows if row[j]) <= 1
    leads = []
    for row in basis.rows:
        lead = next(i for i, a in enumerate(row) if a)
        assert row[lead] == 1
        leads.append(lead)
    assert leads == sorted(leads)


class TestEgeRandom:
    SEED = 1387

    def test_gen_preserved_and_well_formed(self, dn32):
        rng = random.Random(self.SEED)
        for _ in range(60):
            M = _random_matrix(rng, dn32)
            D = ege(M)
            assert D.canonical
            _well_formed(D)
            assert D.dimension >= rref(M)[0].n_rows
            before = gen_closure(VectorSet.from_vectors(dn32, M.width, M.rows))
            after = gen_closure(VectorSet.from_vectors(dn32, M.width, D.basis.rows))
            assert before.codes == after.codes

    def test_trick_columns_strictly_increase(self, dn32):
        rng = random.Random(self.SEED + 1)
        for _ in range(80):
            D = ege(_random_matrix(rng, dn32))
            cols = [s.col for s in D.trace if s.kind == "trick"]
            assert cols == sorted(set(cols))

    def test_replay_bit_exact(self, dn32):
        rng = random.Random(self.SEED + 2)
        for _ in range(60):
            M = _random_matrix(rng, dn32)
            D = ege(M)
            assert replay(M, D.trace) == D.basis
            text = trace_to_text(dn32, D.trace)
            assert replay(M, trace_from_text(dn32, text)) == D.basis

    def test_column_pair_status_preserved(self, dn32):
        rng = random.Random(self.SEED + 3)
        for _ in range(40):
            M = _random_matrix(rng, dn32, max_rows=3, max_cols=3)
            if M.width < 2:
                continue
            D = ege(M)
            pairs = [(i, j) for i in range(M.width) for j in range(i + 1, M.width)]
            status = {p: column_pair_dependent(M, *p) for p in pairs}
            for state in replay_states(M, D.trace):
                for p in pairs:
                    assert column_pair_dependent(state, *p) == status[p]


class TestTraceCodec:
    def test_text_roundtrip(self, dn32):
        M = NfMatrix.from_rows(dn32, [(1, 0, 1), (1, 1, 0)])
        D = ege(M)
        text = trace_to_text(dn32, D.trace)
        assert text == "ELIM 1 2 1\nTRICK 3 1 x x\n"
        steps = trace_from_text(dn32, text)
        assert trace_to_text(dn32, steps) == text

    def test_malformed(self, dn32):
        with pytest.raises(ValueError, match="malformed trace"):
            trace_from_text(dn32, "NUDGE 1 2\n")


class TestOneColumnIndependence:
    def test_identity_true(self, dn32):
        assert is_one_column_independent(NfMatrix.from_rows(dn32, [(1, 0), (0, 1)]))

    def test_scaled_columns_false(self, dn32):
        # columns (1,0) and (2,0): the first is 2 o the second
        M = NfMatrix.from_rows(dn32, [(1, 2), (0, 0)])
        assert not is_one_column_independent(M)

    def test_example_matrix_true(self, dn32):
        assert is_one_column_independent(NfMatrix.from_rows(dn32, [(1, 0, 1), (0, 1, 2)]))

    def test_single_column_rejected(self, dn32):
        with pytest.raises(ValueError, match="2 columns"):
            is_one_column_independent(NfMatrix.from_rows(dn32, [(1,), (2,)]))


class TestWitnessChoiceIndependence:
    def test_final_basis_stable_across_witnesses(self, dn32):
        """Empirical check: distinct valid witnesses yield the same decomposition."""
        alt_witnesses = [Witness(1, X, X), Witness(1, X, 4), Witness(X, 1, X)]
        for w in alt_witnesses:
            lhs = dn32.mul(dn32.add(w.alpha, w.beta), w.lam)
            rhs = dn32.add(dn32.mul(w.alpha, w.lam), dn32.mul(w.beta, w.lam))
            assert lhs != rhs
        rng = random.Random(99)
        cases = [NfMatrix.from_rows(dn32, [(1, 0, 1), (1, 1, 0)])]
        cases += [_random_matrix(rng, dn32) for _ in range(20)]
        for M in cases:
            results = set()
            for w in alt_witnesses:
                nf = Nearfield(3, 2)  # fresh instance so the cached witness can be forced
                nf._witness = w
                Mw = NfMatrix(nf, M.rows, M.width)
                results.add(ege(Mw).basis.rows)
            assert len(results) == 1
