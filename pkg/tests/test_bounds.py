import json
import math

import pytest

from chibound.bounds import (ASYMPTOTIC_ONLY, bull_diamond_nm, delta_over_log, dumps_fixed, eval_bounds,
                             harris, path_binding, poljak_tuza, table_bound)
from chibound.graph import build_graph, complete, grotzsch, path


def test_harris_examples():
    assert eval_bounds(grotzsch()).values["harris"] == pytest.approx(6.6332, abs=1e-4)
    assert eval_bounds(complete(4)).values["harris"] == pytest.approx(4 + 24 ** (1 / 3))
    assert harris(11, 0) == pytest.approx(2 * math.sqrt(11))


def test_single_vertex_log_entries_undefined():
    v = eval_bounds(build_graph(1, [])).values
    for key in ("poljak_tuza_n", "poljak_tuza_m", "poljak_tuza", "bull_diamond_n_log", "bull_diamond_m",
                "molloy_triangle_free", "delta_bull_diamond"):
        assert v[key] is None, key
    assert v["harris"] == 2.0


@pytest.mark.parametrize("family, omega, param, expected", [
    ("pt(7)", 3, None, 7), ("pt", 2, 6, 4), ("pt(6)", 5, None, 5), ("pt(5)", 2, None, 3),
    ("pt(5)", 6, None, 6), ("pt(9)", 3, None, 14), ("k1r(4)", 3, None, 8), ("k1r", 9, 2, 9),
    ("pk2(3)", 2, None, 8), ("chair", 4, None, 6), ("chair", 9, None, 9),
])
def test_table_rows(family, omega, param, expected):
    assert table_bound(family, omega, param) == expected


@pytest.mark.parametrize("family", ["pt(4)", "k1r(0)", "pk2(0)", "star(3)", "pt"])
def test_table_rejects_out_of_range(family):
    with pytest.raises(ValueError):
        table_bound(family, 3)


def test_applicability_flags():
    tri_free = eval_bounds(grotzsch())
    assert tri_free.applicable["poljak_tuza"] and tri_free.applicable["harris"]
    assert tri_free.applicable["path_table"] and tri_free.values["path_table"] == 4.0
    k4 = eval_bounds(complete(4))
    assert not k4.applicable["poljak_tuza"]
    for key in ASYMPTOTIC_ONLY:
        assert not k4.applicable[key]
        assert key in k4.to_dict()["asymptotic_only"]
    assert not k4.applicable["bull_diamond_nm"] and k4.applicable["bull_diamond_nm_or_omega"]


def test_path_probe_drives_t():
    b = eval_bounds(path(4))
    assert b.inputs["pt_free_t"] == 5 and b.values["path_linear"] == 6.0


def test_asserted_drops_undefined_and_inapplicable():
    asserted = eval_bounds(complete(4)).asserted()
    assert "harris" in asserted and "poljak_tuza" not in asserted and "molloy_triangle_free" not in asserted


def test_formulas_monotone():
    # n / ln n grows from n = 3 on; m / (ln m)^2 only from m = e^2, so m-forms start at 8
    for start, f in ((3, lambda x: poljak_tuza(x, x)[0]), (8, lambda x: poljak_tuza(x, x)[1]),
                     (1, lambda x: harris(x, x)), (1, lambda x: bull_diamond_nm(x, x)[0]),
                     (3, lambda x: bull_diamond_nm(x, x)[1]), (8, lambda x: bull_diamond_nm(x, x)[2])):
        vals = [f(x) for x in range(start, 300)]
        assert all(a <= b + 1e-12 for a, b in zip(vals, vals[1:]))
    vals = [delta_over_log(d) for d in range(3, 300)]
    assert all(a <= b for a, b in zip(vals, vals[1:]))
    assert poljak_tuza(6, 6)[1] > poljak_tuza(7, 7)[1]
    assert path_binding(6, 3) == (25, 16)


def test_fixed_decimal_json():
    text = eval_bounds(grotzsch()).to_json()
    assert '"harris": 6.633250' in text
    assert json.loads(text)["values"]["harris"] == pytest.approx(6.63325)
    assert dumps_fixed({"a": [1.0, None, 2]}, indent=None) == '{"a": [1.000000, null, 2]}'
