import random

import pytest
from hypothesis import given, settings, strategies as st

from eventf import (CausalitySpec, CompositionSpec, CorrelationSpec, Kind,
                    InterpretationSpec, Property, Scope, Store, TimeInterval,
                    allen_relation, attach_time, build, causal_chain,
                    diff_interpretations, find_events, infer_correlations,
                    parts_closure)
from eventf.errors import DifferentInterpretedEvents, NotAnInterpretation, UnknownEntity
from eventf.reasoning import causal_edges
from eventf.scenarios import emergency_store
from eventf.spacetime import AllenRelation
from oracles import brute_correlations, reachable
from support import PREFIXES, random_dag, random_interval

P = Property


@pytest.fixture(scope="module")
def emergency():
    return emergency_store().snapshot()


def events_store(names):
    s = Store(PREFIXES)
    for n in names:
        s.new_entity(f"ex:{n}", Kind.EVENT)
    return s


class TestParts:
    def test_flooding(self, emergency):
        assert parts_closure(emergency, "ex:flooding-1") == {
            "ex:flooded-cellar-1", "ex:power-outage-1", "ex:rescue-1"}
        assert parts_closure(emergency, "ex:rescue-1", direction="wholes") == {"ex:flooding-1"}

    def test_not_in_any_composition(self, emergency):
        assert parts_closure(emergency, "ex:storm-1") == set()

    def test_chained(self):
        s = events_store("abc")
        build(s, CompositionSpec("ex:a", ["ex:b"]))
        build(s, CompositionSpec("ex:b", ["ex:c"]))
        assert parts_closure(s, "ex:a") == {"ex:b", "ex:c"}
        assert parts_closure(s, "ex:c", direction="wholes") == {"ex:a", "ex:b"}

    def test_cycle_terminates(self):
        s = events_store("abc")
        build(s, CompositionSpec("ex:a", ["ex:b"]))
        build(s, CompositionSpec("ex:b", ["ex:c"]))
        build(s, CompositionSpec("ex:c", ["ex:a"]))
        assert parts_closure(s, "ex:a") == {"ex:b", "ex:c"}

    def test_errors(self, emergency):
        with pytest.raises(UnknownEntity):
            parts_closure(emergency, "ex:nothing")
        with pytest.raises(ValueError):
            parts_closure(emergency, "ex:flooding-1", direction="sideways")

    def test_scope_hides_unlisted_compositions(self, emergency):
        assert parts_closure(emergency, "ex:flooding-1", Scope("ex:officer-A")) == set()


class TestCausalChain:
    def test_officers(self, emergency):
        a = causal_chain(emergency, "ex:power-outage-1", Scope("ex:officer-A"))
        b = causal_chain(emergency, "ex:power-outage-1", Scope("ex:officer-B"))
        assert a.related == {"ex:snapped-power-pole-1"}
        assert b.related == {"ex:power-plant-problem-1"}
        unscoped = causal_chain(emergency, "ex:power-outage-1")
        assert unscoped.related == a.related | b.related
        assert a.related.isdisjoint(b.related)

    def test_chain_and_duality(self, emergency):
        down = causal_chain(emergency, "ex:storm-1", direction="descendants")
        assert down.related == {"ex:flooding-1", "ex:flooded-cellar-1", "ex:rescue-1"}
        for e in down.related:
            assert "ex:storm-1" in causal_chain(emergency, e).related

    def test_storm_flooding_outage(self):
        s = events_store(["storm", "flooding", "outage"])
        build(s, CausalitySpec("ex:storm", "ex:flooding", "x"))
        build(s, CausalitySpec("ex:flooding", "ex:outage", "x"))
        g = causal_chain(s, "ex:outage")
        assert g.related == {"ex:storm", "ex:flooding"}
        assert not g.cyclic and len(g.edges) == 2
        assert {e.situation for e in g.edges} == {"f-inst:causality-1", "f-inst:causality-2"}

    def test_cycles_are_flagged(self):
        s = events_store("ab")
        build(s, CausalitySpec("ex:a", "ex:b", "x"))
        build(s, CausalitySpec("ex:b", "ex:a", "x"))
        g = causal_chain(s, "ex:a")
        assert g.cyclic and g.related == {"ex:b"}

    def test_edges_match_situations(self, emergency):
        assert len(causal_edges(emergency)) == 5

    def test_errors(self, emergency):
        with pytest.raises(NotAnInterpretation):
            causal_chain(emergency, "ex:power-outage-1", Scope("ex:causality-1"))
        with pytest.raises(UnknownEntity):
            causal_chain(emergency, "ex:nothing")


class TestCorrelations:
    def test_flooding_common_cause(self, emergency):
        found = infer_correlations(emergency)
        assert [f.events for f in found] == [("ex:flooded-cellar-1", "ex:rescue-1")]
        assert "ex:flooding-1" in found[0].common_causes and found[0].already_asserted

    def test_unasserted_pair_flagged_false(self):
        s = events_store("xab")
        build(s, CausalitySpec("ex:x", "ex:a", "x"))
        build(s, CausalitySpec("ex:x", "ex:b", "x"))
        (found,) = infer_correlations(s)
        assert found.events == ("ex:a", "ex:b") and found.common_causes == ("ex:x",)
        assert not found.already_asserted
        build(s, CorrelationSpec({"ex:a", "ex:b"}, "x"))
        assert infer_correlations(s)[0].already_asserted

    def test_empty(self):
        assert infer_correlations(Store()) == []

    def test_direct_causality_excluded(self):
        s = events_store("xab")
        build(s, CausalitySpec("ex:x", "ex:a", "x"))
        build(s, CausalitySpec("ex:a", "ex:b", "x"))
        assert infer_correlations(s) == []


class TestDiff:
    def test_officers_conflict(self, emergency):
        d = diff_interpretations(emergency, "ex:officer-A", "ex:officer-B")
        assert d.shared == ("ex:participation-1",)
        (c,) = d.conflicts
        assert (c.effect, c.cause_a, c.cause_b) == (
            "ex:power-outage-1", "ex:snapped-power-pole-1", "ex:power-plant-problem-1")
        union = set(d.shared) | set(d.only_a) | set(d.only_b)
        assert len(union) == len(d.shared) + len(d.only_a) + len(d.only_b)

    def test_identity(self, emergency):
        d = diff_interpretations(emergency, "ex:officer-A", "ex:officer-A")
        assert d.only_a == d.only_b == d.conflicts == ()

    def test_errors(self, emergency):
        with pytest.raises(NotAnInterpretation):
            diff_interpretations(emergency, "ex:officer-A", "ex:causality-1")
        s = emergency_store()
        build(s, InterpretationSpec("ex:rescue-1", ["ex:causality-4"], situation="ex:officer-C"))
        with pytest.raises(DifferentInterpretedEvents):
            diff_interpretations(s, "ex:officer-A", "ex:officer-C")

    def test_erroneous_causality_is_not_a_conflict(self):
        s = emergency_store()
        s.retract_edge("ex:causality-5-description", P.HAS_JUSTIFICATION,
                       s.objects("ex:causality-5-description", P.HAS_JUSTIFICATION)[0])
        assert diff_interpretations(s, "ex:officer-A", "ex:officer-B").conflicts == ()


class TestFindEvents:
    def test_queries(self, emergency):
        assert "ex:power-outage-1" in find_events(emergency, participant="ex:person-1")
        assert find_events(emergency, documenter="ex:photo-1") == ["ex:flooded-cellar-1"]
        assert find_events(emergency, interpretant="dom:EmergencyIncident") == ["ex:power-outage-1"]
        assert find_events(emergency, interpretant="ex:incident-view-B") == ["ex:power-outage-1"]

    def test_time_overlap_on_empty_store(self):
        assert find_events(Store(), time_overlap=TimeInterval(0, 1)) == []

    def test_exactly_one_query(self, emergency):
        with pytest.raises(TypeError):
            find_events(emergency)
        with pytest.raises(TypeError):
            find_events(emergency, participant="ex:person-1", documenter="ex:photo-1")

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_time_overlap_matches_allen_filter(self, seed):
        rng = random.Random(seed)
        s = events_store([f"e{i}" for i in range(8)])
        times = {}
        for i in range(8):
            if rng.random() < 0.8:
                times[f"ex:e{i}"] = random_interval(rng, 0, 30)
                attach_time(s, f"ex:e{i}", times[f"ex:e{i}"])
        q = random_interval(rng, 0, 30)
        expected = sorted(e for e, t in times.items()
                          if allen_relation(t, q) not in (AllenRelation.BEFORE, AllenRelation.AFTER))
        assert find_events(s, time_overlap=q) == expected


def _composition_store(n, edges):
    s = events_store([f"n{i:02d}" for i in range(n)])
    wholes = {}
    for a, b in edges:
        wholes.setdefault(a, []).append(b)
    for a, parts in sorted(wholes.items()):
        build(s, CompositionSpec(f"ex:n{a:02d}", [f"ex:n{b:02d}" for b in parts]))
    return s


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_parts_closure_matches_reachability(seed):
    n, edges = random_dag(random.Random(seed), 20, 0.15)
    s = _composition_store(n, edges)
    for i in range(n):
        assert parts_closure(s, f"ex:n{i:02d}") == {f"ex:n{j:02d}" for j in reachable(edges, i)}


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_correlations_symmetric_and_match_oracle(seed):
    n, edges = random_dag(random.Random(seed), 15, 0.2)
    s = events_store([f"n{i:02d}" for i in range(n)])
    for a, b in sorted(edges):
        build(s, CausalitySpec(f"ex:n{a:02d}", f"ex:n{b:02d}", "x"))
    got = {f.events: set(f.common_causes) for f in infer_correlations(s)}
    want = {(f"ex:n{a:02d}", f"ex:n{b:02d}"): {f"ex:n{c:02d}" for c in cs}
            for (a, b), cs in brute_correlations(edges).items()}
    assert got == want
    assert all(a < b for a, b in got)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_cyclic_causal_graphs_terminate(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 10)
    s = events_store([f"n{i}" for i in range(n)])
    for _ in range(rng.randint(1, 25)):
        a, b = rng.sample(range(n), 2)
        build(s, CausalitySpec(f"ex:n{a}", f"ex:n{b}", "x"))
    for i in range(n):
        causal_chain(s, f"ex:n{i}")
        causal_chain(s, f"ex:n{i}", direction="descendants")
    infer_correlations(s)
