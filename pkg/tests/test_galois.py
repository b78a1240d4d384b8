import pytest

from cycloclass.errors import NotADivisor, NotOddPrime, RamifiedPrime
from cycloclass.galois import CyclotomicModulus

from conftest import odd_primes_below


def brute_force_order(p: int, ell: int) -> int:
    x = p % ell
    f = 1
    while x != 1:
        x = x * (p % ell) % ell
        f += 1
    return f


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15, 21, 100, 0, -7])
def test_rejects_non_odd_primes(bad):
    with pytest.raises(NotOddPrime):
        CyclotomicModulus(bad)


@pytest.mark.parametrize("ell", [3, 5, 23, 97, 101])
def test_accepts_odd_primes(ell):
    assert CyclotomicModulus(ell).ell == ell


def test_multiply_examples():
    m = CyclotomicModulus(23)
    assert m.multiply(1, 7) == 7
    assert m.multiply(22, 22) == 1
    # 13 * 16 = 208 = 9*23 + 1
    assert m.multiply(13, 16) == 1


def test_multiply_matches_modular_product():
    for ell in (5, 23):
        m = CyclotomicModulus(ell)
        for a in m.units():
            for b in m.units():
                assert m.multiply(a, b) == a * b % ell


def test_multiply_rejects_out_of_range():
    m = CyclotomicModulus(23)
    with pytest.raises(ValueError):
        m.multiply(0, 5)
    with pytest.raises(ValueError):
        m.multiply(5, 23)


def test_inverse_examples():
    m = CyclotomicModulus(23)
    assert m.inverse(1) == 1
    assert m.inverse(22) == 22
    assert m.inverse(12) == 2  # 12 * 2 = 24 = 23 + 1


def test_inverse_property():
    for ell in odd_primes_below(50):
        m = CyclotomicModulus(ell)
        for a in m.units():
            assert m.multiply(a, m.inverse(a)) == 1


def test_multiplicative_order_examples():
    m = CyclotomicModulus(23)
    assert m.multiplicative_order(2) == 11
    assert m.multiplicative_order(47) == 1  # 47 = 2*23 + 1
    assert m.multiplicative_order(5) == 22  # brute force: 5 generates


def test_multiplicative_order_brute_force():
    for ell in (23, 29):
        m = CyclotomicModulus(ell)
        for p in range(1, 3 * ell):
            if p % ell == 0:
                continue
            f = m.multiplicative_order(p)
            assert f == brute_force_order(p, ell)
            assert (ell - 1) % f == 0
            assert pow(p, f, ell) == 1


def test_multiplicative_order_ramified():
    m = CyclotomicModulus(23)
    for p in (23, 46, 0):
        with pytest.raises(RamifiedPrime):
            m.multiplicative_order(p)


def test_subgroup_published_values():
    m = CyclotomicModulus(23)
    assert m.subgroup_of_order(11).members == (1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18)
    assert m.subgroup_of_order(2).members == (1, 22)
    assert m.subgroup_of_order(1).members == (1,)


def test_subgroup_rejects_non_divisor():
    with pytest.raises(NotADivisor):
        CyclotomicModulus(23).subgroup_of_order(5)


def test_subgroups_exhaustive_below_100():
    # The order-f subgroup of a cyclic group is exactly the set of
    # solutions of x^f = 1; check size, closure, identity for every case.
    for ell in odd_primes_below(100):
        m = CyclotomicModulus(ell)
        for f in range(1, ell):
            if (ell - 1) % f:
                continue
            sub = m.subgroup_of_order(f)
            expected = tuple(x for x in m.units() if pow(x, f, ell) == 1)
            assert sub.members == expected
            assert len(sub.members) == f == sub.order
            assert 1 in sub
            members = set(sub.members)
            assert all(a * b % ell in members for a in members for b in members)


def test_coset_representatives_published_values():
    m = CyclotomicModulus(23)
    assert m.coset_representatives(m.subgroup_of_order(11)) == [1, 5]
    assert m.coset_representatives(m.subgroup_of_order(2)) == list(range(1, 12))
    assert m.coset_representatives(m.subgroup_of_order(22)) == [1]


def test_cosets_partition_units():
    for ell in odd_primes_below(50):
        m = CyclotomicModulus(ell)
        for f in range(1, ell):
            if (ell - 1) % f:
                continue
            sub = m.subgroup_of_order(f)
            reps = m.coset_representatives(sub)
            assert len(reps) == (ell - 1) // f
            assert reps == sorted(reps)
            seen: set[int] = set()
            for r in reps:
                coset = {r * s % ell for s in sub.members}
                assert r == min(coset)  # canonical: smallest member
                assert not coset & seen
                seen |= coset
            assert seen == set(m.units())


def test_primitive_root_is_smallest():
    for ell in odd_primes_below(60):
        m = CyclotomicModulus(ell)
        g = m.primitive_root()
        assert brute_force_order(g, ell) == ell - 1
        assert all(brute_force_order(c, ell) < ell - 1 for c in range(1, g))
