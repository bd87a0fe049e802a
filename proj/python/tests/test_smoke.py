import pytest

import momentangle as ma


def ranks(groups):
    return [g["rank"] for g in groups]


def test_complex_roundtrip():
    sigma = ma.SimplicialComplex.from_json('{"m": 4, "facets": [[1, 2], [2, 3], [3, 4], [1, 4]]}')
    assert sigma.m == 4
    assert sigma.dimension == 1
    assert sigma.facets() == [[1, 2], [1, 4], [2, 3], [3, 4]]
    assert ma.SimplicialComplex.from_json(sigma.to_json()) == sigma


def test_sphere_ring():
    sigma = ma.SimplicialComplex(2, [[1], [2]])
    r = ma.ring(sigma)
    assert [d["rank"] for d in r["degrees"]] == [1, 0, 0, 1]


def test_disk3_betti():
    sigma = ma.SimplicialComplex(2, [[1], [2]])
    assert ranks(ma.betti(sigma, arena="disk:3")) == [1, 0, 0, 0, 0, 1]


def test_models_agree():
    sigma = ma.random_complex(4, 5)
    b = ranks(ma.betti(sigma, model="b", maxdeg=8))
    assert ranks(ma.betti(sigma, model="a", maxdeg=8)) == b
    assert ranks(ma.betti(sigma, model="l", maxdeg=8)) == b


def test_torsion_in_hochster():
    rp2 = ma.SimplicialComplex(6, [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
                                   [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6]])
    table = ma.hochster(rp2, alphas=[[1, 2, 3, 4, 5, 6]])
    rows = {(tuple(r["alpha"]), r["degree"]): r for r in table["rows"]}
    assert rows[((1, 2, 3, 4, 5, 6), 3)]["torsion"] == [2]


def test_glm_square():
    square = ma.SimplicialComplex(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
    r = ma.glm(square)
    assert [d["rank"] for d in r["degrees"]][:3] == [1, 2, 1]


def test_verify_passes():
    assert all(c["passed"] for c in ma.verify(ma.random_complex(3, 2)))


def test_errors():
    sigma = ma.SimplicialComplex(2, [[1], [2]])
    with pytest.raises(ValueError):
        ma.SimplicialComplex.from_json('{"m": 2, "facets": [[3]]}')
    with pytest.raises(ValueError):
        ma.betti(sigma, model="a")
    with pytest.raises(ValueError):
        ma.betti(sigma, arena="disk:0")
