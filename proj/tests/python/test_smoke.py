import pytest

import eliq

HIERARCHY = "A sub some r\nsome r sub A\nr rsub s"


def test_round_trip():
    o = eliq.parse_ontology(HIERARCHY)
    assert eliq.parse_ontology(str(o)) == o
    q = eliq.parse_cq("q(x0) :- A(x0), r(x0,y), B(y)")
    assert eliq.parse_cq(str(q)) == q
    assert q.is_eliq()
    assert q.answer_var == "x0"
    a = eliq.parse_abox(str(q.to_abox()))
    assert a == q.to_abox()


def test_parse_error_has_code():
    with pytest.raises(eliq.EliqError) as info:
        eliq.parse_cq("q(x) :- A(x")
    assert info.value.code == "parse_error"
    assert isinstance(info.value, ValueError)


def test_reasoning():
    r = eliq.Reasoner(eliq.parse_ontology(HIERARCHY))
    a_only = eliq.parse_cq("q(x0) :- A(x0)")
    edge = eliq.parse_cq("q(x0) :- s(x0,y)")
    assert r.contained(a_only, edge)
    assert not r.contained(edge, a_only)
    assert r.equivalent(a_only, eliq.parse_cq("q(x0) :- r(x0,y)"))
    assert r.certain_answer(eliq.parse_abox("A(b)"), edge, "b")
    assert not r.certain_answer(eliq.parse_abox("s(b,c)"), a_only, "b")


def test_normalize():
    o = eliq.parse_ontology("A sub some r . (B & C)")
    assert not o.is_normal_form()
    nf, fresh = eliq.normalize(o)
    assert nf.is_normal_form()
    assert fresh


def test_frontier_members_are_strict_generalisations():
    o = eliq.parse_ontology(HIERARCHY)
    q = eliq.parse_cq("q(x0) :- A(x0), B(x0)")
    members = eliq.frontier(o, q)
    assert members
    r = eliq.Reasoner(o)
    for m in members:
        assert r.contained(q, m)
        assert not r.contained(m, q)
    assert eliq.check_frontier(o, q, members, 2)["ok"]


def test_unsupported_dialect():
    o = eliq.parse_ontology("r rsub s\nfunc r")
    with pytest.raises(eliq.EliqError) as info:
        eliq.frontier(o, eliq.parse_cq("q(x0) :- A(x0)"))
    assert info.value.code == "unsupported_dialect"


def test_learn_simulated():
    o = eliq.parse_ontology(HIERARCHY)
    target = eliq.parse_cq("q(x0) :- A(x0), r(x0,y), B(y)")
    trace = eliq.learn(o, target=target)
    assert trace["outcome"] == "success"
    result = eliq.parse_cq(trace["hypotheses"][-1])
    assert eliq.Reasoner(o).equivalent(result, target)


def test_learn_with_callback():
    o = eliq.parse_ontology(HIERARCHY)
    target = eliq.parse_cq("q(x0) :- B(x0)")
    r = eliq.Reasoner(o)
    asked = []

    def oracle(abox, individual):
        asked.append(str(abox))
        return r.certain_answer(abox, target, individual)

    seed = eliq.seed_query(o, target)
    trace = eliq.learn(o, oracle=oracle, seed=seed, budget=500)
    assert trace["outcome"] == "success"
    assert trace["membership_queries"] == len(asked)
    assert r.equivalent(eliq.parse_cq(trace["hypotheses"][-1]), target)


def test_learn_budget():
    o = eliq.parse_ontology(HIERARCHY)
    target = eliq.parse_cq("q(x0) :- A(x0), r(x0,y), B(y)")
    trace = eliq.learn(o, target=target, budget=1)
    assert trace["outcome"] == "budget_exceeded"


def test_characterize_and_verify():
    o = eliq.parse_ontology(HIERARCHY)
    q = eliq.parse_cq("q(x0) :- A(x0), B(x0)")
    pos, neg = eliq.characterize(o, q)
    assert len(pos) == 1
    assert eliq.fits(o, q, pos, neg)
    ok, counterexample = eliq.verify_unique(o, q, pos, neg, 2)
    assert ok and counterexample is None
    assert not eliq.fits(o, eliq.parse_cq("q(x0) :- A(x0)"), pos, neg)
