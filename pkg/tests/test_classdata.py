"""Ideal class representatives and congruence admissibility.

The rep tables are retyped here as an independent second entry; a typo in
either copy shows up as a mismatch.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from normsums.classdata import (
    class_number_fields,
    class_reps,
    condition_display,
    congruence_for,
    odd_sqrt_of_minus_d,
    predicate_holds,
    rep_for,
    reps_as_rows,
    simplify_condition,
    validate_tables,
)
from normsums.quadfield import RingElement, make_field, norm

# second transcription of the nonprincipal rep data: d -> (k, s) with t = 1
CLASS2_ROWS = {
    5: (2, 1), 6: (2, 0), 10: (2, 0), 13: (2, 1), 15: (2, 1), 22: (2, 0),
    35: (5, 2), 37: (2, 1), 51: (5, 1), 58: (2, 0), 91: (7, 3), 115: (5, -3),
    123: (3, 1), 187: (7, -2), 235: (5, 2), 267: (3, 1), 403: (11, 6), 427: (7, 3),
}

# d -> (k, s_class2, s_class3) with t = 1 throughout
CLASS3_ROWS = {
    23: (2, 0, -1), 31: (2, 0, -1), 59: (3, 0, -1), 83: (3, 0, -1),
    107: (3, 0, -1), 139: (5, 0, -1), 211: (5, 1, -2), 283: (7, 2, -3),
    307: (7, 0, -1), 331: (5, 1, -2), 379: (5, 0, -1), 499: (5, 0, -1),
    547: (11, 2, -3), 643: (7, 0, -1), 883: (13, 0, -1), 907: (13, 4, -5),
}


def test_validate_tables_clean():
    assert validate_tables() == []


def test_class_number_fields():
    assert class_number_fields(2) == tuple(sorted(CLASS2_ROWS))
    assert class_number_fields(3) == tuple(sorted(CLASS3_ROWS))


def test_class_reps_match_second_transcription():
    for d, (k, s) in CLASS2_ROWS.items():
        reps = class_reps(make_field(d))
        assert [r.class_index for r in reps] == [1, 2]
        assert reps[0].is_principal and reps[0].k == 1
        assert (reps[1].k, reps[1].s, reps[1].t) == (k, s, 1)
    for d, (k, s2, s3) in CLASS3_ROWS.items():
        reps = class_reps(make_field(d))
        assert [r.class_index for r in reps] == [1, 2, 3]
        assert (reps[1].k, reps[1].s, reps[1].t) == (k, s2, 1)
        assert (reps[2].k, reps[2].s, reps[2].t) == (k, s3, 1)


def test_class_reps_principal_only_for_class_number_one():
    reps = class_reps(make_field(43))
    assert len(reps) == 1 and reps[0].is_principal


def test_rep_norm_divisibility():
    # k must divide N(s + t*omega) for the congruence to cut out an ideal
    for d in sorted(CLASS2_ROWS) + sorted(CLASS3_ROWS):
        f = make_field(d)
        for rep in class_reps(f)[1:]:
            assert norm(f, RingElement(rep.s, rep.t)) % rep.k == 0


def test_rep_for_and_h_scale():
    f = make_field(35)
    rep = rep_for(f, 2)
    assert (rep.k, rep.s, rep.t) == (5, 2, 1)
    assert str(rep.h_scale) == "1/5"
    assert rep_for(f, 1).h_scale == 1
    with pytest.raises(ValueError):
        rep_for(f, 3)


def test_predicate_examples():
    f5 = make_field(5)
    c = congruence_for(f5, rep_for(f5, 2))
    assert predicate_holds(c, 1, 1)
    assert not predicate_holds(c, 1, 0)
    f35 = make_field(35)
    c35 = congruence_for(f35, rep_for(f35, 2))
    assert predicate_holds(c35, 2, 1)
    assert not predicate_holds(c35, 1, 0)


def test_principal_predicate_always_true():
    f = make_field(187)
    c = congruence_for(f, rep_for(f, 1))
    assert all(predicate_holds(c, a, b) for a in range(-3, 4) for b in range(-3, 4))


def _admissible_grid(c, k):
    return {(a, b) for a in range(k) for b in range(k) if predicate_holds(c, a, b)}


def test_known_single_constraint_equivalents():
    # spot equivalences, each checked over a full residue period
    cases = {
        5: lambda a, b: (a + b) % 2 == 0,
        6: lambda a, b: a % 2 == 0,
        15: lambda a, b: a % 2 == 0,
        91: lambda a, b: (a + 4 * b) % 7 == 0,
        115: lambda a, b: (a - 2 * b) % 5 == 0,
        187: lambda a, b: (a - b) % 7 == 0,
        403: lambda a, b: (a + 7 * b) % 11 == 0,
    }
    for d, pred in cases.items():
        f = make_field(d)
        rep = rep_for(f, 2)
        c = congruence_for(f, rep)
        for a in range(2 * rep.k):
            for b in range(2 * rep.k):
                assert predicate_holds(c, a, b) == pred(a, b), (d, a, b)


def test_simplify_condition_equivalent_everywhere():
    for d in sorted(CLASS2_ROWS) + sorted(CLASS3_ROWS):
        f = make_field(d)
        for rep in class_reps(f)[1:]:
            c = congruence_for(f, rep)
            simplified = simplify_condition(c)
            assert simplified is not None, d
            alpha, beta = simplified
            for a in range(rep.k):
                for b in range(rep.k):
                    assert ((alpha * a + beta * b) % rep.k == 0) == predicate_holds(c, a, b)


def test_condition_display_strings():
    def disp(d, idx):
        f = make_field(d)
        return condition_display(congruence_for(f, rep_for(f, idx)))

    assert disp(5, 1) == "always"
    assert disp(5, 2) == "2|(a+b)"
    assert disp(15, 2) == "2|a"
    assert disp(35, 2) == "5|(a+3b)"
    assert disp(23, 2) == "2|(a+b)"
    assert disp(23, 3) == "2|a"
    assert disp(907, 2) == "13|(a+5b)"
    assert disp(907, 3) == "13|(a+9b)"


@given(
    st.sampled_from(sorted(CLASS2_ROWS) + sorted(CLASS3_ROWS)),
    st.integers(min_value=-200, max_value=200),
    st.integers(min_value=-200, max_value=200),
)
def test_predicate_is_k_periodic_and_symmetric(d, a, b):
    f = make_field(d)
    for rep in class_reps(f)[1:]:
        c = congruence_for(f, rep)
        v = predicate_holds(c, a, b)
        assert predicate_holds(c, a + rep.k, b) == v
        assert predicate_holds(c, a, b + rep.k) == v
        assert predicate_holds(c, -a, -b) == v
        # scaling by k lands every element in the admissible set
        assert predicate_holds(c, rep.k * a, rep.k * b)


def test_paired_class_predicates_swap_under_conjugation():
    # the a -> a+b, b -> -b involution exchanges the two nonprincipal classes
    for d in sorted(CLASS3_ROWS):
        f = make_field(d)
        c2 = congruence_for(f, rep_for(f, 2))
        c3 = congruence_for(f, rep_for(f, 3))
        k = rep_for(f, 2).k
        for a in range(-k, 2 * k):
            for b in range(-k, 2 * k):
                assert predicate_holds(c2, a, b) == predicate_holds(c3, a + b, -b), (d, a, b)


def test_odd_sqrt_of_minus_d():
    assert odd_sqrt_of_minus_d(make_field(23)) == 1
    assert odd_sqrt_of_minus_d(make_field(211)) == 3
    assert odd_sqrt_of_minus_d(make_field(283)) == 5
    assert odd_sqrt_of_minus_d(make_field(547)) == 5
    assert odd_sqrt_of_minus_d(make_field(907)) == 9
    with pytest.raises(ValueError):
        odd_sqrt_of_minus_d(make_field(35))


def test_odd_sqrt_is_minimal_odd_square_root():
    for d in sorted(CLASS3_ROWS):
        f = make_field(d)
        k = rep_for(f, 2).k
        n = odd_sqrt_of_minus_d(f)
        assert n % 2 == 1 and 1 <= n < 2 * k
        assert (n * n + d) % k == 0
        # nothing odd and smaller works
        for m in range(1, n, 2):
            assert (m * m + d) % k != 0, (d, m)


def test_odd_sqrt_determines_both_conditions():
    # with n the odd square root of -d mod k, the two nonprincipal conditions
    # collapse to k|(a + (n+1)/2 b) and k|(a - (n-1)/2 b)
    for d in sorted(CLASS3_ROWS):
        f = make_field(d)
        k = rep_for(f, 2).k
        n = odd_sqrt_of_minus_d(f)
        c2 = congruence_for(f, rep_for(f, 2))
        c3 = congruence_for(f, rep_for(f, 3))
        for a in range(k):
            for b in range(k):
                assert predicate_holds(c2, a, b) == ((a + (n + 1) // 2 * b) % k == 0)
                assert predicate_holds(c3, a, b) == ((a - (n - 1) // 2 * b) % k == 0)


def test_reps_as_rows_shape():
    rows = reps_as_rows()
    assert len(rows) == 9 + 2 * 18 + 3 * 16
    assert list(rows[0].keys()) == ["d", "class_index", "k", "s", "t"]
    by_key = {(r["d"], r["class_index"]): r for r in rows}
    assert by_key[(35, 2)] == {"d": 35, "class_index": 2, "k": 5, "s": 2, "t": 1}
    assert by_key[(907, 3)] == {"d": 907, "class_index": 3, "k": 13, "s": -5, "t": 1}
