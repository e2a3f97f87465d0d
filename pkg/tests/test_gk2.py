import pytest

from gk2codes.errors import InternalConsistencyError
from gk2codes.gk2 import (
    CurveParams,
    canonical_triple,
    curve_params,
    frobenius_dimension_gk1,
    frobenius_dimension_gk2,
    frobenius_dimensions_differ,
    holomorphic_gap_set,
    k_max,
    o1_generators,
    o2_generators,
    prime_power_decompose,
    semigroup_o1,
    semigroup_o2,
    verify_partition,
)
from gk2codes.semigroup import NumericalSemigroup

SWEEP = [(2, 3), (2, 5), (2, 7), (3, 3), (3, 5), (4, 3)]


def test_prime_power_decompose():
    assert prime_power_decompose(2) == (2, 1)
    assert prime_power_decompose(4) == (2, 2)
    assert prime_power_decompose(5) == (5, 1)
    assert prime_power_decompose(27) == (3, 3)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            prime_power_decompose(bad)


def test_params_q2_n5():
    p = curve_params(2, 5)
    assert (p.m, p.s, p.genus) == (11, 5, 46)
    assert p.rational_point_count == 3969
    assert p.differential_pole_bound == 30


def test_params_rejections():
    with pytest.raises(ValueError):
        curve_params(2, 4)
    with pytest.raises(ValueError):
        curve_params(2, 1)
    with pytest.raises(ValueError):
        curve_params(6, 3)


def test_o1_generators_and_genus():
    p25 = curve_params(2, 5)
    assert o1_generators(p25) == (22, 24, 26, 28, 30, 32, 33)
    assert semigroup_o1(p25).genus == 46
    p23 = curve_params(2, 3)
    assert o1_generators(p23) == (6, 8, 9)
    assert semigroup_o1(p23).genus == 10


def test_o2_generators_and_nongaps():
    p25 = curve_params(2, 5)
    assert o2_generators(p25) == (22, 28, 29, 30, 31, 32, 33)
    s = semigroup_o2(p25)
    assert [s.nth_nongap(i) for i in range(1, 11)] == [0, 22, 28, 29, 30, 31, 32, 33, 44, 50]
    assert s.contains(59)  # 28 + 31


@pytest.mark.parametrize("q,n", SWEEP)
def test_genus_identities_sweep(q, n):
    params = curve_params(q, n)
    s1 = semigroup_o1(params)
    s2 = semigroup_o2(params)
    assert s1.genus == s2.genus == params.genus
    top = q**n + 1
    assert s1.contains(top) and s2.contains(top)
    # at n = 3 both orbit semigroups are telescopic (s = 1), hence symmetric:
    # 2g-1 is a gap there and a nongap for n >= 5
    symmetric = n == 3
    for sg in (s1, s2):
        assert sg.contains(2 * params.genus - 1) == (not symmetric)
        assert sg.is_symmetric() == symmetric


@pytest.mark.parametrize("q,n", SWEEP)
def test_gap_set_equals_complement(q, n):
    params = curve_params(q, n)
    gaps = holomorphic_gap_set(params)
    assert len(gaps) == params.genus
    assert gaps == semigroup_o2(params).gaps


def test_gap_set_small_examples():
    p25 = curve_params(2, 5)
    gaps25 = holomorphic_gap_set(p25)
    assert len(gaps25) == 46
    assert gaps25[0] == 1  # k = l = j = 0
    p23 = curve_params(2, 3)
    gaps23 = holomorphic_gap_set(p23)
    assert gaps23 == (1, 2, 3, 4, 5, 7, 10, 11, 13, 19)


def test_genus_mismatch_raises():
    # corrupt parameters: genus off by one must trip the identity check
    good = curve_params(2, 5)
    bad = CurveParams(
        q=good.q,
        n=good.n,
        p=good.p,
        m=good.m,
        s=good.s,
        genus=good.genus + 1,
        rational_point_count=good.rational_point_count,
        differential_pole_bound=good.differential_pole_bound,
    )
    with pytest.raises(InternalConsistencyError):
        semigroup_o1(bad)


def test_k_max_values():
    p25 = curve_params(2, 5)
    assert k_max(p25, 0) == 10
    assert k_max(p25, 1) == 9
    assert k_max(p25, 2) == 4
    with pytest.raises(ValueError):
        k_max(p25, 3)  # j+l >= q^2 - 1


@pytest.mark.parametrize("q,n", SWEEP)
def test_k_max_matches_inequality_scan(q, n):
    params = curve_params(q, n)
    budget = params.differential_pole_bound
    step = q * q - q
    for t in range(q * q - 1):
        best = max(
            (k for k in range(params.m) if k * step + t * params.m <= budget),
            default=None,
        )
        assert best is not None
        assert k_max(params, t) == best


def test_canonical_triple_examples():
    p25 = curve_params(2, 5)
    assert canonical_triple(p25, 0) == (0, 0, 0)
    assert canonical_triple(p25, 24) == (1, 1, 0)
    assert canonical_triple(p25, 33) == (0, 0, 1)


def test_canonical_triple_membership_criterion():
    # member of the telescopic semigroup <mq, mq+q^2-q, q^n+1> iff a >= b
    p25 = curve_params(2, 5)
    seq = (22, 24, 33)
    s = NumericalSemigroup.from_generators(seq)
    for x in range(0, 300):
        a, b, c = canonical_triple(p25, x)
        assert 0 <= b <= p25.m - 1 and 0 <= c <= p25.q - 1
        assert (a >= b) == s.contains(x)


def test_partition_q2_n5():
    rep = verify_partition(curve_params(2, 5))
    assert rep.telescopic_genus == 126
    assert rep.partition_total == 80
    assert rep.telescopic_genus - rep.partition_total == 46 == rep.curve_genus
    assert rep.all_ok


@pytest.mark.parametrize("q,n", SWEEP)
def test_partition_sweep(q, n):
    rep = verify_partition(curve_params(q, n))
    assert rep.sets_inside_h1_minus_s
    assert rep.sets_pairwise_disjoint
    assert rep.set_sizes_match_formula
    assert rep.genus_count_matches
    assert rep.all_ok


def test_partition_q2_n3():
    rep = verify_partition(curve_params(2, 3))
    assert rep.telescopic_genus - rep.partition_total == 10


def test_frobenius_dimensions():
    p25 = curve_params(2, 5)
    assert frobenius_dimension_gk2(p25) == 7
    assert frobenius_dimension_gk1(p25) == 9
    with pytest.raises(ValueError):
        frobenius_dimension_gk2(curve_params(2, 3))


@pytest.mark.parametrize("q,n", [(2, 5), (2, 7), (3, 5)])
def test_frobenius_dimension_counts_nongaps(q, n):
    # r equals 1 + the number of nontrivial nongaps <= q^n (the +1 being
    # q^n + 1 itself, always a nongap); same count at both orbits
    params = curve_params(q, n)
    r = frobenius_dimension_gk2(params)
    for sg in (semigroup_o1(params), semigroup_o2(params)):
        count = sg.count_nongaps_upto(q**n) - 1  # drop the trivial nongap 0
        assert r == count + 1
    if (q, n) == (2, 5):
        s1 = semigroup_o1(params)
        assert [x for x in s1.nongaps_upto(32) if x > 0] == [22, 24, 26, 28, 30, 32]


def test_non_isomorphism_sweep():
    for q in (2, 3, 4, 5):
        for n in (5, 7, 9, 11):
            assert frobenius_dimensions_differ(q, n) is True
    assert frobenius_dimensions_differ(2, 3) is None
    assert frobenius_dimensions_differ(3, 3) is None
