import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import kquasi as kq
from kquasi.utils import valid_a


def test00_catalogue_is_complete():
    assert set(kq.IDENTITIES) == set(kq.IdentityId)
    for tag, law in kq.IDENTITIES.items():
        assert law.tag == tag
        assert law.description
    assert not kq.IDENTITIES[kq.IdentityId.Alterable].is_equational
    assert kq.IDENTITIES[kq.IdentityId.Medial].arity == 4


def test01_accepts_values_and_members(quad13):
    assert kq.check_identity(quad13, 'medial')
    assert kq.check_identity(quad13, kq.IdentityId.Medial)
    with pytest.raises(ValueError):
        kq.check_identity(quad13, 'no_such_law')


def test02_quadratical_laws(quad5, quad13):
    for t in (quad5, quad13):
        assert all(kq.quadratical_laws(t).values())
    laws = kq.quadratical_laws(kq.build(7, 4, 4))
    assert list(laws) == list(kq.QUADRATICAL_LAWS)
    assert laws[kq.IdentityId.Idempotent]
    assert not laws[kq.IdentityId.Bookend]


def test03_alterable_is_an_implication():
    with pytest.raises(TypeError):
        kq.holds_linear(kq.IDENTITIES[kq.IdentityId.Alterable], 5, 2, 4)


def test04_schroeder_fails_on_linear_quasigroups(quad13):
    assert not kq.check_identity(quad13, kq.IdentityId.Schroeder)
    assert not kq.holds_linear(kq.IDENTITIES[kq.IdentityId.Schroeder], 13, 3, 11)


@settings(max_examples=30, deadline=None)
@given(n=st.sampled_from([3, 5, 7, 9, 11, 13]), a=st.integers(0, 12))
def test05_linear_evaluation_agrees_with_tables(n, a):
    a = a % n
    assume(valid_a(n)[a])
    b = (1 - a) % n
    table = kq.build(n, a, b)
    for law in kq.IDENTITIES.values():
        if law.is_equational:
            assert kq.holds_linear(law, n, a, b) == kq.check_law(table, law), law.tag
