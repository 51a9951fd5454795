"""Exhaustive structural laws of the generator, one test per modulus."""
import pytest

from inversive.analytic import CaseLabel, classify
from inversive.iprng import Params
from inversive.ring import Modulus, logp

import properties as props


def _grid(p, e):
    m = Modulus(p, e)
    if (p, e) in props.ALL_PAIR_MODULI:
        return [Params(m, a, b) for a in range(m.q) for b in range(m.q)]
    return [Params(m, a, b) for a, b in props.sampled_pairs(p, e)]


MODULI = props.ALL_PAIR_MODULI + props.SAMPLED_MODULI


@pytest.mark.parametrize("p,e", MODULI)
def test_all_properties(p, e):
    results = props.run_all(_grid(p, e))
    assert {k: v[:3] for k, v in results.items() if v} == {}


def test_leaf_criterion_needs_strict_bound():
    # The leaf test reads "logp(y - b) < logp(a) + 1". Reading it as
    # "!= logp(a) + 1" instead breaks once e >= logp(a) + 3: y = 28 for
    # (a, b) = (3, 1) mod 3^4 has logp(y - b) = 3 and no predecessor.
    Q = Params.of(3, 4, 3, 1)
    A = classify(Q)
    assert A.label is CaseLabel.A_IN_P and A.logp_a == 1
    deg = props.plain_indegree(props.plain_successors(Q))
    y = 28
    assert logp(y - A.x_tilde, Q.m) >= A.logp_a
    assert logp(y - Q.b, Q.m) == 3 != A.logp_a + 1
    assert deg[y] == 0


def test_sampled_pairs_are_deterministic():
    assert props.sampled_pairs(13, 2) == props.sampled_pairs(13, 2)
