import pytest

import dihedra


def test_classify_condition_holds():
    rec = dihedra.classify(2, 3, 6)
    assert rec["C1"] and rec["C2"] and rec["D"]
    c1, c2, c3 = rec["solution"]
    assert 3 * c1 + 2 * c2 + 1 * c3 == 6


def test_classify_condition_fails():
    rec = dihedra.classify(2, 2, 2)
    assert rec["C"] is False
    assert rec["solution"] is None


def test_count_with_oracle():
    rec = dihedra.count(4, 4, 2, oracle=True)
    assert rec["count_formula"] == 2
    assert rec["count_oracle"] == 2
    assert rec["count_simplified"] == 4


def test_snf_and_involutions():
    assert dihedra.snf(4, 4, 2)["invariant_factors"] == [2, 4]
    inv = dihedra.involutions(2, 3, 6)
    assert inv["non_central_involutions"]
    assert inv["product_orders"] == {"s1s2": 3, "s1s3": 6, "s2s3": 2}


def test_repr_inventory():
    rec = dihedra.repr_(6, inventory=True)
    assert rec["G"] == [[0, -1], [1, 1]]
    assert rec["inventory_count"] == rec["cyclic_subgroup_classes"] == 6


def test_identity():
    rec = dihedra.identity("1/3", "1/3", "1/3")
    assert rec["angle_sum_condition"] and rec["product_condition"]
    assert dihedra.identity("1/3", "1/3", "1/2")["discriminant"]["coeffs"] == [4, 0]


def test_witnesses_and_verify():
    rec = dihedra.witnesses(6, 15, 10)
    assert rec["all_hold"]
    assert dihedra.verify(6, 15, 10)["verdict"] == "generated"


def test_order_law():
    assert dihedra.order(12, 4, vec=[1, -2, 3, 5])["order"] == 3
    assert dihedra.order(12, 0, vec=[1, 0, 0, 0])["order"] == "infinite"


def test_sweep_small_box():
    rep = dihedra.sweep(dihedra.box(8), jobs=2)
    assert rep["triples"] == 7 ** 3
    assert rep["equivalence_mismatches"] == 0
    assert rep["count_mismatches"] == 0


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        dihedra.classify(1, 3, 6)
    with pytest.raises(ValueError):
        dihedra.involutions(2, 2, 2)
    with pytest.raises(ValueError):
        dihedra.witnesses(2, 3, 6)


def test_cli_round_trip():
    code, out, err = dihedra.run_cli("--json", "classify", "2", "3", "6")
    assert code == 0 and err == ""
    assert out.count("\n") == 1
    code, _, err = dihedra.run_cli("classify", "2", "x", "6")
    assert code == 1 and err.startswith("error:")
