import json
import random

import pytest

from bicyclic import oracle, verify
from bicyclic.core import mul
from bicyclic.order import down_set, idempotents, updown_set
from bicyclic.product import left_shift_image, product_image
from bicyclic.region import Region
from bicyclic.topology import basic, closure, interior


def test_report_json_shape():
    r = verify.verify_trace_injectivity(5)
    obj = json.loads(json.dumps(r.to_json()))
    assert {"claim_id", "verdict", "parameters", "witnesses", "elapsed_ms"} <= set(obj)
    assert obj["verdict"] in verify.VERDICTS
    assert "lemma3_trace" in r.render_text()


def test_reports_are_deterministic():
    for make in (lambda: verify.verify_prop1(2, 2), lambda: verify.verify_lemma2(3),
                 lambda: verify.verify_prop3(2, covers=5),
                 lambda: verify.joint_continuity_search("tauc", 1)):
        assert make().to_json(timing=False) == make().to_json(timing=False)


def test_tau1_product_small_instance():
    # n = 1, a = b = (0,0), m = 2
    assert product_image(basic("tau1", (0, 0), 2), basic("tau1", (0, 0), 2)) <= basic("tau1", (0, 0), 1)
    assert basic("tau1", (2, 5), 3).inverse() == basic("tau1", (5, 2), 3)


def test_tau1_stated_m_is_too_small():
    # (0,2) . (2,3) = (0,3) although (2,3) is in U_2((0,0))
    assert (2, 3) in basic("tau1", (0, 0), 2)
    assert oracle.oracle_mul((0, 2), (2, 3)) == (0, 3)
    assert (0, 3) not in basic("tau1", (0, 2), 1)
    r = verify.verify_prop1(3, 3)
    assert r.verdict == verify.COUNTEREXAMPLE
    assert r.parameters["product_failures"] == r.failures
    for w in r.witnesses:
        f = w["witness"]["factors"]
        inp = w["input"]
        assert oracle.oracle_mul(f["left"], f["right"]) == tuple(f["product"])
        assert tuple(f["left"]) in basic("tau1", inp["a"], inp["m"])
        assert tuple(f["right"]) in basic("tau1", inp["b"], inp["m"])
        assert tuple(f["product"]) not in basic("tau1", mul(inp["a"], inp["b"]), inp["n"])
        assert w["witness"]["minimal_working_m"] <= inp["n"] + max(*inp["a"], *inp["b"])
    assert any("works in all of them" in n for n in r.notes)


def test_tau2_sweep_parts():
    assert closure("tau2", basic("tau2", (1, 2), 1)) == updown_set((1, 2))
    assert (updown_set((0, 0)) - basic("tau2", (0, 0), 3)).enumerate(5) == [(1, 1), (2, 2), (3, 3)]
    r = verify.verify_prop2(3, 3)
    # only the product inclusion fails; closure and remainder checks pass
    assert r.failures == r.parameters["product_failures"] > 0
    assert oracle.oracle_mul((3, 3), (2, 0)) == (3, 1)
    assert (3, 1) not in basic("tau2", (2, 0), 1)


def test_tauc_shift_inclusions():
    r = verify.verify_prop3(4, covers=20)
    assert r.verdict == verify.VERIFIED, r.witnesses
    assert left_shift_image((0, 0), basic("tauc", (3, 2), 6)) == basic("tauc", (3, 2), 6)
    assert left_shift_image((2, 3), basic("tauc", (1, 0), 6)) <= basic("tauc", (2, 2), 3)


def test_updown_product_report():
    r = verify.verify_lemma2(3)
    assert r.verdict == verify.COUNTEREXAMPLE
    assert any(w["input"] == {"a": [1, 0], "b": [0, 1]} for w in r.witnesses) or r.failures > len(r.witnesses)
    assert product_image(updown_set((0, 0)), updown_set((0, 0))) == idempotents()
    assert verify.exact_updown_product((1, 0), (0, 1)) == Region.diagonal_tail((1, 1), 0)
    assert not r.crosscheck["disagreements"]
    # the identity does hold when both factors sit on the same side of the main diagonal
    assert product_image(updown_set((0, 1)), updown_set((0, 2))) == updown_set((0, 3))


def test_trace_and_translations():
    assert verify.verify_trace_injectivity(50).verdict == verify.VERIFIED
    assert verify.verify_lemma4(3, 10).verdict == verify.VERIFIED


def test_isolation_propagation_examples():
    r = verify.thm1_propagate((0, 0), (0, 0))
    assert r.verdict == verify.VERIFIED
    r = verify.thm1_propagate((1, 1), (3, 4))
    assert r.verdict == verify.VERIFIED
    sols = {tuple(x) for x in r.witnesses[0]["witness"]["solutions"]}
    assert (3, 4) in sols
    assert sols == oracle.brute_solve_two_sided_fast((1, 3), (4, 1), (1, 1), 60)
    assert verify.thm1_sweep(3).verdict == verify.VERIFIED


def test_isolated_points_and_inversion():
    assert verify.verify_isolated_points(6).verdict == verify.VERIFIED
    assert verify.verify_inv_continuity(4, 4).verdict == verify.VERIFIED


@pytest.mark.parametrize("top, kind, x", [("tau2", "down", (1, 2)), ("tau1", "idempotents", (0, 0)),
                                          ("tauc", "down", (2, 0)), ("tauc", "idempotents", (3, 3))])
def test_quasireg_fails_for_non_discrete(top, kind, x):
    r = verify.quasireg_fail(top, kind, x)
    assert r.verdict == verify.VERIFIED
    assert r.parameters["quasi_regular"] is False


def test_quasireg_holds_for_discrete():
    r = verify.quasireg_fail("discrete", "down", (1, 2))
    assert r.verdict == verify.COUNTEREXAMPLE
    assert r.parameters["quasi_regular"] is True
    with pytest.raises(ValueError):
        verify.quasireg_fail("tau1", "idempotents", (1, 2))


def test_semireg():
    r = verify.semireg_fail("tau1", (0, 0), 10)
    assert r.verdict == verify.VERIFIED
    full = Region.full().to_json()
    assert all(w["witness"]["int_cl"] == full for w in r.witnesses)
    r = verify.semireg_fail("tauc", (1, 1), 8)
    assert r.verdict == verify.VERIFIED and r.parameters["all_basic_nonregular"]
    r = verify.semireg_fail("discrete", (2, 2), 5)
    assert r.verdict == verify.COUNTEREXAMPLE
    assert all(w["witness"]["regular_open"] for w in r.witnesses)


def test_semireg_at_n0_can_be_regular():
    # U_0(x) in tau1 is the whole space, which is regular open
    assert interior("tau1", closure("tau1", basic("tau1", (0, 0), 0))) == basic("tau1", (0, 0), 0)
    assert verify.semireg_fail("tau1", (2, 3), 6).parameters["all_basic_nonregular"] is False


def test_sweeps():
    assert verify.quasireg_sweep(2, 4).verdict == verify.VERIFIED
    assert verify.semireg_sweep(2, 4).verdict == verify.VERIFIED


def test_subcover_tauc():
    c5 = Region.square(5).enumerate(5)
    cover = [((0, 0), 3)] + [(x, 5) for x in c5]
    picked = verify.subcover_tauc(cover)
    assert len(picked) <= 1 + len((Region.square(5) - basic("tauc", (0, 0), 3)).enumerate(5))
    union = Region.empty()
    for p in picked:
        union |= basic("tauc", *cover[p])
    assert union == Region.full()
    assert verify.subcover_tauc([((3, 3), 2), ((0, 0), 0)]) == [1]
    with pytest.raises(verify.NotACover) as e:
        verify.subcover_tauc([((0, 0), 3)])
    assert e.value.witness not in basic("tauc", (0, 0), 3)
    assert (1, 1) not in basic("tauc", (0, 0), 3)


def test_subcover_updown():
    x = (1, 2)
    tail = down_set(x).enumerate(8)[1:4]
    cover = [(x, 1)] + [(y, 0) for y in list(updown_set(x).enumerate(3)) + tail]
    picked = verify.subcover_updown(x, cover)
    union = Region.empty()
    for p in picked:
        union |= basic("tau2", *cover[p])
    assert updown_set(x) <= union
    assert verify.subcover_updown((0, 0), [((0, 0), 0), ((1, 1), 0)]) == [0]
    with pytest.raises(verify.NotACover):
        verify.subcover_updown((0, 0), [((0, 0), 2)])


def test_random_covers():
    assert verify.verify_subcover_tauc(30, 6).verdict == verify.VERIFIED
    assert verify.verify_subcover_updown(30, 6).verdict == verify.VERIFIED


def test_continuity_witness():
    k = verify.continuity_witness("tauc", (2, 3), (1, 0), 3, "left")
    assert k == 4 and k <= 6
    for top in ("tau1", "tau2", "tauc"):
        assert verify.continuity_witness(top, (0, 0), (3, 1), 4, "left") == 4
        assert verify.continuity_witness(top, (0, 0), (3, 1), 4, "right") == 4
    k = verify.continuity_witness("tau1", (1, 2), (0, 0), 2, "left")
    assert k == 3
    assert left_shift_image((1, 2), basic("tau1", (0, 0), k)) <= basic("tau1", (1, 2), 2)
    assert not left_shift_image((1, 2), basic("tau1", (0, 0), k - 1)) <= basic("tau1", (1, 2), 2)
    assert verify.continuity_witness("tau1", (1, 2), (0, 0), 2, "left", budget=1) is None


def test_joint_continuity_search():
    assert verify.joint_continuity_search("tau1", 2).verdict == verify.VERIFIED
    assert verify.joint_continuity_search("tau2", 2).verdict == verify.VERIFIED
    assert verify.joint_continuity_search("discrete", 3).verdict == verify.VERIFIED
    r = verify.joint_continuity_search("tauc", 1)
    assert r.verdict == verify.COUNTEREXAMPLE
    f = r.witnesses[0]["witness"]["factors"]
    assert oracle.oracle_mul(f["left"], f["right"]) == tuple(f["product"])
    r = verify.joint_continuity_search("tau1", 2, budget=0)
    assert r.verdict == verify.INCONCLUSIVE


def test_crosscheck_sampling_agrees():
    for r in (verify.verify_prop1(2, 2, crosscheck=True), verify.verify_prop2(2, 2, crosscheck=True),
              verify.verify_prop3(2, covers=3, crosscheck=True)):
        assert r.crosscheck["sampled"] > 0
        assert r.crosscheck["disagreements"] == []


def test_run_claim_dispatch():
    with pytest.raises(ValueError):
        verify.run_claim("prop9")
    reports = verify.run_claim("joint-cont", 2)
    assert [r.parameters["topology"] for r in reports] == ["tau1", "tau2"]
