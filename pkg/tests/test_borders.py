import pytest

from src.borders.checks import border_check, border_check_family, borders, left_of_shifted, right_of_shifted
from src.borders.discovery import check_border_report, find_border
from src.borders.transforms import (bordante_factorizations, border_from_dual, canonical_coprime_border,
                                    cbc_from_factorization, scale_border, translate_border)
from src.cbc.core import dual, is_cbc, make_cbc
from src.cyclic.factorizations import is_factorization
from src.errors import PreconditionError
from src.models.borders import Border
from src.models.cbc import CbcFamily
from src.models.cyclic import FactorizationPair


def test_borders_of_eight_cbc(eight_cbc):
    assert border_check([2, 4], [0, 2, 4, 6], eight_cbc)
    assert border_check([4, 5, 6, 7], [1, 5], eight_cbc)
    assert border_check([0, 1, 2, 3], [0, 4], eight_cbc)
    assert not border_check([0, 1], [0, 4], eight_cbc)
    assert not border_check([0, 1, 2, 3], [0, 1], eight_cbc)


def test_border_transforms_keep_bordering(eight_cbc):
    bd = Border.of(8, [0, 1, 2, 3], [0, 4])
    assert borders(translate_border(bd, 3, 5), eight_cbc)
    assert borders(border_from_dual(bd), dual(eight_cbc))
    with pytest.raises(PreconditionError):
        scale_border(bd, 2, 1)
    assert scale_border(bd, 3, 1) == Border.of(8, [0, 3, 6, 9], [0, 4])


def test_shifted_sets(eight_cbc):
    assert right_of_shifted(eight_cbc, [0], 0).elements == (0, 1)
    assert left_of_shifted(eight_cbc, [0], 2).elements == (1, 5)


def test_cbc_from_factorization():
    f = FactorizationPair.of(4, [0, 1], [0, 2])
    X = cbc_from_factorization(f)
    assert X.pairs == ((0, 0), (0, 1), (2, 0), (2, 1))
    assert is_cbc(4, X).holds
    assert borders(f, X)
    with pytest.raises(PreconditionError):
        cbc_from_factorization(FactorizationPair.of(4, [0, 1], [0, 1]))


def test_canonical_coprime_border():
    X = make_cbc(2, [(0, 0), (1, 0)])
    pair = canonical_coprime_border(X, Border.of(2, [0], [0, 1]))
    assert pair == FactorizationPair.of(2, [0], [0, 1])


def test_find_border_on_eight_cbc(eight_family):
    report = find_border(eight_family)
    assert report.factorizations
    for pair in report.factorizations:
        assert is_factorization(pair.P, pair.Q, 8)
        assert border_check_family(pair.P, pair.Q, eight_family)
    assert check_border_report(eight_family, report)


def test_find_border_rejects_bad_seed(eight_family):
    with pytest.raises(ValueError):
        find_border(eight_family, seed=3)


def test_bordante_factorizations(four_cbc):
    family = CbcFamily.of([four_cbc])
    bd = Border.of(4, [0, 1, 2, 3], [0])
    candidates = bordante_factorizations(family, bd, four_cbc, four_cbc, 0, 0)
    assert [candidate.label for candidate in candidates] == ["P,L", "R,L", "R,Q"]
    assert all(candidate.is_factorization and candidate.borders_family for candidate in candidates)


def test_borders_of_finite_maximal_code_closure():
    closure = CbcFamily.of([
        make_cbc(4, [(0, 0), (1, 0), (2, 1), (3, 0)]),
        make_cbc(4, [(0, 0), (1, 0), (2, 0), (3, 0)]),
        make_cbc(4, [(0, 1), (1, 1), (2, 0), (3, 1)]),
        make_cbc(4, [(0, 1), (1, 1), (2, 1), (3, 1)]),
    ])
    assert border_check_family([0], [0, 1, 2, 3], closure)
    report = find_border(closure)
    assert FactorizationPair.of(4, [0], [0, 1, 2, 3]) in report.factorizations
    for pair in report.factorizations:
        assert is_factorization(pair.P, pair.Q, 4)
        assert border_check_family(pair.P, pair.Q, closure)
