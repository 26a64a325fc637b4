import io
import json

from univhopf import documents as docs
from univhopf.cli import run
from univhopf.coact import group_algebra, tensor_valued_map
from univhopf.finmonoid import full_transformation_monoid
from univhopf.hopf import group_algebra_hopf
from univhopf.lio import identity_functor
from univhopf.setsuniversal import SetComodFrame

from helpers import (
    chain_monoid_a3_eq_a,
    cyclic_monoid,
    cyclic_set_magma,
    dual_numbers,
    dual_numbers_grading,
    klein_set_magma,
    pauli_grading,
    thin_chain_category,
    two_incomparable_lio_category,
)


def invoke(argv):
    out = io.StringIO()
    err = io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(docs.document_to_json(doc), encoding="utf-8")
    return str(path)


def test_universal_group_pauli(tmp_path):
    path = write(tmp_path, "pauli.json", docs.serialize_grading(pauli_grading()))
    code, out, err = invoke(["universal-group", path])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["kind"] == "presentation"
    assert doc["summary"]["abelian_invariants"] == [2, 2]
    assert doc["summary"]["coset_enumeration_order"] == 4


def test_universal_group_infinite_group_hits_bound(tmp_path):
    path = write(tmp_path, "dual.json", docs.serialize_grading(dual_numbers_grading()))
    code, out, err = invoke(["universal-group", path])
    assert code == 4
    doc = json.loads(out)
    assert doc["summary"]["coset_enumeration_order"] == "unknown"
    assert "did not close" in err


def test_grothendieck(tmp_path):
    path = write(
        tmp_path, "m3.json", docs.serialize_monoid_table(chain_monoid_a3_eq_a())
    )
    code, out, _ = invoke(["grothendieck", path])
    assert code == 0
    assert json.loads(out)["summary"]["coset_enumeration_order"] == 2


def test_unit_group(tmp_path):
    path = write(
        tmp_path, "t2.json", docs.serialize_monoid_table(full_transformation_monoid(2))
    )
    code, out, _ = invoke(["unit-group", path])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["table"]) == 2


def test_tambara_and_manin_pipeline(tmp_path):
    alg = write(tmp_path, "alg.json", docs.serialize_vect_magma(dual_numbers()))
    code, out, _ = invoke(["tambara", alg, alg])
    assert code == 0
    doc = json.loads(out)
    assert doc["presentation_type"] == "algebra"
    assert len(doc["generators"]) == 4
    assert "matrix_index" in doc

    grad = write(tmp_path, "grad.json", docs.serialize_grading(dual_numbers_grading()))
    code, out, _ = invoke(["manin-end", grad])
    assert code == 0
    me = json.loads(out)
    assert me["kind"] == "bialgebra_presentation"
    assert len(me["generators"]) == 2

    # feed the manin-end output to hopf-envelope
    me_path = tmp_path / "me.json"
    me_path.write_text(out, encoding="utf-8")
    code, out2, _ = invoke(
        ["hopf-envelope", str(me_path), "--antipode-levels", "1", "--degree-bound", "4"]
    )
    assert code == 0
    env = json.loads(out2)
    assert env["truncation"] == {"levels": 1, "degree_bound": 4}
    assert len(env["generators"]) == 4

    code, out3, _ = invoke(
        ["manin-aut", grad, "--antipode-levels", "1", "--degree-bound", "4"]
    )
    assert code == 0
    aut = json.loads(out3)
    assert aut["generators"] == env["generators"]
    assert aut["relations"] == env["relations"]


def test_support_command(tmp_path):
    tm = docs.serialize_tensor_map(
        docs.TensorMapDoc(
            tensor_valued_map(2, 2, 3, [[[1, 0, 0], [0, 0, 0]], [[0, 0, 0], [2, 0, 0]]])
        )
    )
    path = write(tmp_path, "tm.json", tm)
    code, out, _ = invoke(["support", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["support_dim"] == 1
    assert doc["dim_coeff"] == 1


def test_cosupport_command(tmp_path):
    fam = {
        "kind": "family_map",
        "dim_p": 2,
        "dim_in": 2,
        "dim_out": 2,
        "matrices": [
            [["1", "0"], ["0", "1"]],
            [["0", "0"], ["1", "0"]],
        ],
    }
    path = write(tmp_path, "fam.json", fam)
    code, out, _ = invoke(["cosupport", path])
    assert code == 0
    assert json.loads(out)["summary"]["cosupport_dim"] == 2


def test_check_comeasuring_command(tmp_path):
    from helpers import grading_coaction

    rho = grading_coaction(dual_numbers_grading(), (0, 1))
    tm = docs.serialize_tensor_map(
        docs.TensorMapDoc(
            rho,
            source=dual_numbers(),
            target=dual_numbers(),
            coeff_algebra=group_algebra(cyclic_monoid(2)),
        )
    )
    path = write(tmp_path, "tm.json", tm)
    code, out, _ = invoke(["check-comeasuring", path])
    assert code == 0
    assert json.loads(out)["summary"]["comeasuring"] is True


def test_check_comeasuring_needs_embedded_structures(tmp_path):
    tm = docs.serialize_tensor_map(
        docs.TensorMapDoc(tensor_valued_map(1, 1, 1, [[[1]]]))
    )
    path = write(tmp_path, "tm.json", tm)
    code, _, err = invoke(["check-comeasuring", path])
    assert code == 3 and "coeff_algebra" in err


def test_check_hopf_command(tmp_path):
    path = write(
        tmp_path, "h.json", docs.serialize_hopf_fd(group_algebra_hopf(cyclic_monoid(2)))
    )
    code, out, _ = invoke(["check-hopf", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["all_pass"] is True


def test_coact_sets_command(tmp_path):
    frame = SetComodFrame(cyclic_set_magma(4), (0, 1, 0, 1))
    path = write(tmp_path, "frame.json", docs.serialize_frame_sets(frame))
    code, out, _ = invoke(["coact-sets", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["size"] == 2
    assert doc["summary"]["projection"] == [0, 1, 0, 1]


def test_meas_sets_command(tmp_path):
    magma = write(tmp_path, "z2.json", docs.serialize_set_magma(cyclic_set_magma(2)))
    code, out, _ = invoke(["meas-sets", magma, magma])
    assert code == 0
    assert json.loads(out)["maps"] == [[0, 0], [0, 1]]


def test_meas_sets_cap(tmp_path):
    magma = write(tmp_path, "k4.json", docs.serialize_set_magma(klein_set_magma()))
    code, _, err = invoke(["meas-sets", magma, magma, "--enum-cap", "10"])
    assert code == 4 and "cap" in err


def test_act_group_sets_command(tmp_path):
    magma = write(tmp_path, "k4.json", docs.serialize_set_magma(klein_set_magma()))
    code, out, _ = invoke(["act-group-sets", magma])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["table"]) == 6


def test_lio_command_category(tmp_path):
    path = write(
        tmp_path,
        "cat.json",
        docs.serialize_category(two_incomparable_lio_category()),
    )
    code, out, _ = invoke(["lio", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["locally_initial"] == [0, 1]
    assert doc["summary"]["absolute_values"] == [0, 1, None]


def test_lio_command_functor(tmp_path):
    functor = identity_functor(thin_chain_category(3))
    path = write(tmp_path, "f.json", docs.serialize_functor(functor))
    code, out, _ = invoke(["lio", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["lifted_initial"] == {"0": 0, "1": 1, "2": 2}
    assert doc["summary"]["universal_objects"] == [0, 1, 2]


def test_usage_errors():
    code, _, _ = invoke(["frobnicate"])
    assert code == 1
    code, _, err = invoke(["support"])
    assert code == 1 and "input document" in err


def test_schema_error_exit_code(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{\"kind\": \"monoid_table\"}", encoding="utf-8")
    code, _, err = invoke(["grothendieck", str(path)])
    assert code == 2 and "missing field" in err


def test_precondition_exit_code(tmp_path):
    doc = {
        "kind": "monoid_table",
        "table": [[0, 1, 2], [1, 0, 0], [2, 0, 1]],
        "unit": 0,
    }
    path = write(tmp_path, "bad.json", doc)
    code, _, err = invoke(["grothendieck", path])
    assert code == 3 and "associative" in err


def test_malformed_json_exit_code(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{oops", encoding="utf-8")
    code, _, _ = invoke(["grothendieck", str(path)])
    assert code == 2


def test_outputs_reparse(tmp_path):
    path = write(tmp_path, "pauli.json", docs.serialize_grading(pauli_grading()))
    _, out, _ = invoke(["universal-group", path])
    kind, value = docs.parse_input_document(out)
    assert kind == "presentation" and value.num_gens == 4


def test_determinism_byte_identical(tmp_path):
    fixtures = [
        (["universal-group", write(tmp_path, "p.json", docs.serialize_grading(pauli_grading()))], 0),
        (["grothendieck", write(tmp_path, "m.json", docs.serialize_monoid_table(chain_monoid_a3_eq_a()))], 0),
        (["unit-group", write(tmp_path, "t.json", docs.serialize_monoid_table(full_transformation_monoid(2)))], 0),
        (["manin-end", write(tmp_path, "g.json", docs.serialize_grading(dual_numbers_grading()))], 0),
    ]
    for argv, want in fixtures:
        code1, out1, _ = invoke(argv)
        code2, out2, _ = invoke(argv)
        assert code1 == code2 == want
        assert out1 == out2


def test_text_format(tmp_path):
    path = write(
        tmp_path, "m.json", docs.serialize_monoid_table(chain_monoid_a3_eq_a())
    )
    code, out, _ = invoke(["grothendieck", path, "--format", "text"])
    assert code == 0
    assert out.startswith("kind:")
    code2, out2, _ = invoke(["grothendieck", path, "--format", "text"])
    assert out == out2


def test_stdin_input(monkeypatch, tmp_path):
    import io as _io
    import sys

    doc = docs.document_to_json(docs.serialize_monoid_table(cyclic_monoid(3)))
    monkeypatch.setattr(sys, "stdin", _io.StringIO(doc))
    code, out, _ = invoke(["grothendieck", "-"])
    assert code == 0
    assert json.loads(out)["summary"]["coset_enumeration_order"] == 3


def test_hopf_envelope_rejects_hopf_input(tmp_path):
    from univhopf.coact import manin_end_presentation
    from univhopf.hopf import hopf_envelope_presentation, universal_bialgebra_structure

    env = hopf_envelope_presentation(
        universal_bialgebra_structure(manin_end_presentation(dual_numbers_grading())),
        1,
        4,
    )
    path = write(tmp_path, "env.json", docs.serialize_bialgebra_presentation(env))
    code, _, err = invoke(["hopf-envelope", str(path)])
    assert code == 2 and "antipode" in err


def test_check_comeasuring_rejects_non_algebra_coefficients(tmp_path):
    doc = docs.serialize_tensor_map(
        docs.TensorMapDoc(
            tensor_valued_map(1, 1, 1, [[[1]]]),
            source=dual_numbers(),
            target=dual_numbers(),
        )
    )
    # coefficient structure claims to be an algebra but lacks the unit op
    doc["coeff_algebra"] = {
        "kind": "vect_magma",
        "signature": {"kind": "signature", "ops": [{"name": "mu", "in": 2, "out": 1}]},
        "dim": 1,
        "basis": ["e0"],
        "tensors": {"mu": [{"out": [0], "in": [0, 0], "coeff": "1"}]},
    }
    path = tmp_path / "tm.json"
    path.write_text(docs.document_to_json(doc), encoding="utf-8")
    code, _, err = invoke(["check-comeasuring", str(path)])
    assert code == 2 and "unit" in err
