"""The command-line surface: parsing, exit codes, JSON round trips, determinism."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qell import jsonio
from qell import qell_core as qc
from qell.charmod import ScalarContext
from qell.cli import main
from qell.errors import ParseError, SchemaError
from qell.groups import cyclic, symmetric
from qell.groupspec import parse_group_spec
from qell.gsets import point_set, regular_gset


# -- group-spec parser ---------------------------------------------------------

def test_parse_builtins():
    assert parse_group_spec("S3").order == 6
    assert parse_group_spec("C1").order == 1
    assert parse_group_spec("D4").order == 8
    assert parse_group_spec("A4").order == 12
    assert parse_group_spec("C2xC3").order == 6
    assert parse_group_spec(" C2 x C3 ").order == 6      # whitespace-insensitive
    assert parse_group_spec("C2xC2xC2").order == 8


def test_parse_perm_specs():
    G = parse_group_spec("perm:3:(0,1);(0,1,2)")
    assert G.order == 6
    H = parse_group_spec("perm:4:(0,1)(2,3)")
    assert H.order == 2
    assert parse_group_spec("perm:5:(0,1,2,3,4)").order == 5


def test_parse_error_positions():
    for text, pos in [("", 0), ("Q3", 0), ("C", 1), ("C2x", 3),
                      ("perm:3:", 7), ("perm:3:(0,3)", 11), ("S3yC2", 2)]:
        with pytest.raises(ParseError) as err:
            parse_group_spec(text)
        assert f"position" in str(err.value)


valid_specs = st.recursive(
    st.one_of(
        st.tuples(st.sampled_from("SACD"), st.integers(1, 5)).map(
            lambda t: f"{t[0]}{t[1]}"),
        st.just("perm:3:(0,1)"),
        st.just("perm:4:(0,1,2,3);(0,1)"),
    ),
    lambda inner: st.tuples(inner, inner).map(lambda t: f"{t[0]}x{t[1]}"),
    max_leaves=3,
)


@given(valid_specs)
@settings(max_examples=60, deadline=None)
def test_parser_totality_on_grammar(spec):
    from qell.errors import GroupTooLargeError
    try:
        G = parse_group_spec(spec)
    except GroupTooLargeError:
        return   # over the order cap is a cap error (exit 3), never a parse error
    assert G.order >= 1


@given(valid_specs, st.sampled_from(["@", "!", "xx", "(", ")", "x"]),
       st.integers(0, 6))
@settings(max_examples=60, deadline=None)
def test_parser_rejects_mutations(spec, junk, cut):
    mutated = spec[:min(cut, len(spec))] + junk + spec[min(cut, len(spec)):] + "x"
    try:
        parse_group_spec(mutated)
    except ParseError as exc:
        assert exc.position >= 0


# -- exit codes ------------------------------------------------------------------

def test_exit_codes(tmp_path):
    assert main(["point", "--group", "S3"]) == 0
    assert main(["point", "--group", "C1"]) == 0
    assert main(["point", "--group", "Z9"]) == 2
    assert main(["point", "--group", "S8"]) == 3
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema_version": "1", "group": {}}')
    assert main(["op", "mu", "--n", "2", "--input", str(bad)]) == 4
    u = tmp_path / "u.json"
    assert main(["unit", "--group", "C2", "--json", str(u)]) == 0
    assert main(["op", "transfer", "--group", "C3", "--input", str(u)]) == 5


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("QELL_ORDER_CAP", "5")
    assert main(["point", "--group", "S3"]) == 3


def test_verify_exit_zero(capsys):
    assert main(["verify", "--suite", "paper"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_verify_determinism(capsys):
    assert main(["verify", "--suite", "props", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--suite", "props", "--seed", "7"]) == 0
    second = capsys.readouterr().out
    assert first == second


# -- JSON round trips ---------------------------------------------------------------

def _round_trip(elt, sctx):
    payload = jsonio.element_payload(elt)
    text = jsonio.dumps(payload)
    parsed = jsonio.element_from_payload(jsonio.loads(text), sctx)
    assert parsed == elt
    assert jsonio.dumps(jsonio.element_payload(parsed)) == text
    return payload


def test_element_round_trip_pt():
    import random
    G = symmetric(3)
    sctx = ScalarContext.for_groups([G])
    st = qc.structure(G, point_set(G), sctx)
    rng = random.Random(0)
    for _ in range(5):
        _round_trip(qc.random_element(st, rng), sctx)


def test_element_round_trip_regular_and_cosets():
    import random
    G = symmetric(3)
    sctx = ScalarContext.for_groups([G])
    rng = random.Random(1)
    _round_trip(qc.random_element(
        qc.structure(G, regular_gset(G), sctx), rng), sctx)
    from qell.groups import Permutation
    H = G.subgroup([Permutation([1, 2, 0])], name="C3<S3")
    Z = jsonio.cosets_space(G, H)
    _round_trip(qc.random_element(qc.structure(G, Z, sctx), rng), sctx)


def test_structure_payload_schema():
    G = cyclic(2)
    sctx = ScalarContext.for_groups([G])
    st = qc.structure(G, point_set(G), sctx)
    payload = jsonio.structure_payload(st, tables=True)
    assert payload["schema_version"] == "1"
    assert payload["group"]["order"] == 2
    assert payload["space"] == {"kind": "pt"}
    assert len(payload["classes"]) == 2
    orb = payload["classes"][1]["orbits"][0]
    assert orb["rank"] == 2
    assert orb["basis"][1]["c"] == "1/2"
    assert "table" in orb


def test_schema_rejects_bad_payloads():
    G = cyclic(2)
    sctx = ScalarContext.for_groups([G])
    with pytest.raises(SchemaError):
        jsonio.element_from_payload({"schema_version": "0"}, sctx)
    with pytest.raises(SchemaError):
        jsonio.element_from_payload(
            {"schema_version": "1", "group": {"degree": 2}}, sctx)


# -- end-to-end through the console entry point -------------------------------------

def test_cli_pipeline(tmp_path):
    u = tmp_path / "u.json"
    assert main(["unit", "--group", "C3", "--json", str(u)]) == 0
    t = tmp_path / "t.json"
    assert main(["op", "transfer", "--group", "S3", "--subgroup", "C3",
                 "--input", str(u), "--json", str(t)]) == 0
    data = json.loads(t.read_text())
    assert data["group"]["spec"] == "S3"
    z = tmp_path / "z.json"
    assert main(["op", "cog", "--group", "S3", "--subgroup", "C3",
                 "--input", str(u), "--inverse", "--json", str(z)]) == 0
    back = tmp_path / "back.json"
    assert main(["op", "cog", "--group", "S3", "--subgroup", "C3",
                 "--input", str(z), "--json", str(back)]) == 0
    assert json.loads(back.read_text()) == json.loads(u.read_text())
    m = tmp_path / "m.json"
    assert main(["op", "mu", "--n", "2", "--input", str(u), "--json", str(m)]) == 0
    k = tmp_path / "k.json"
    u2 = tmp_path / "u2.json"
    assert main(["unit", "--group", "C2", "--json", str(u2)]) == 0
    assert main(["op", "kunneth", "--left", str(u2), "--right", str(u),
                 "--json", str(k)]) == 0
    kdata = json.loads(k.read_text())
    assert kdata["group"]["degree"] == 5


def test_mu_degree_one_is_byte_identical(tmp_path):
    u = tmp_path / "u.json"
    out = tmp_path / "out.json"
    assert main(["unit", "--group", "S3", "--json", str(u)]) == 0
    assert main(["op", "mu", "--n", "1", "--input", str(u),
                 "--json", str(out)]) == 0
    assert out.read_text() == u.read_text()


def test_verify_failure_exit_code(monkeypatch):
    from qell import verify as verify_mod

    monkeypatch.setattr(verify_mod, "run_suite",
                        lambda which, seed=0: [("forced failure", False, "x")])
    assert main(["verify", "--suite", "paper"]) == 1


def test_product_of_cyclics_components():
    G = parse_group_spec("C2xC3")
    sctx = ScalarContext.for_groups([G])
    st = qc.structure(G, point_set(G), sctx)
    assert st.n_classes == 6
    for cb in st.classes:
        assert cb.centralizer.order == 6
        assert cb.ctxs[0].rank == 6


def test_point_json_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["point", "--group", "D4", "--json", str(a)]) == 0
    assert main(["point", "--group", "D4", "--json", str(b)]) == 0
    assert a.read_text() == b.read_text()
