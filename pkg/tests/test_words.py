import pytest

from hlfib.words import commutator, concat, conjugate, exponent_sum, free_reduce, inverse, power


def test_free_reduce_cancellation():
    assert free_reduce((1, -1)) == ()
    assert free_reduce(()) == ()
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)


def test_free_reduce_rejects_zero():
    with pytest.raises(ValueError):
        free_reduce((0,))


def test_inverse_and_conjugate():
    assert inverse((1, -2, 3)) == (-3, 2, -1)
    assert free_reduce(conjugate((2,), (1,))) == (2, 1, -2)
    assert free_reduce(concat((1, 2), inverse((1, 2)))) == ()


def test_commutator_and_power():
    assert commutator((1,), (2,)) == (1, 2, -1, -2)
    assert power((1, 2), -2) == (-2, -1, -2, -1)
    assert exponent_sum((1, -2, 3, -4)) == 0
