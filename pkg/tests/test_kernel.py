import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kedgecon import _kernel, _kernel_py

ext = pytest.importorskip("kedgecon._kernel_ext")


@st.composite
def edge_arrays(draw):
    n = draw(st.integers(1, 8))
    if n == 1:
        return n, [], []
    pairs = draw(
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]), max_size=16)
    )
    return n, [a for a, _ in pairs], [b for _, b in pairs]


def test_backend_selected():
    assert _kernel.BACKEND in ("cython", "python")


@settings(max_examples=300, deadline=None)
@given(edge_arrays(), st.data())
def test_backends_agree(arrays, data):
    n, eu, ev = arrays
    py = _kernel_py.FlowGraph(n, eu, ev)
    cy = ext.FlowGraph(n, eu, ev)
    assert py.lambda_matrix() == cy.lambda_matrix()
    assert py.eu == cy.eu and py.ev == cy.ev
    if n >= 2:
        s = data.draw(st.integers(0, n - 1))
        t = data.draw(st.integers(0, n - 1).filter(lambda x: x != s))
        limit = data.draw(st.integers(-1, 5))
        fp = py.max_flow(s, t, limit)
        fc = cy.max_flow(s, t, limit)
        assert fp == fc
        assert py.reachable(fp[1], s) == cy.reachable(fc[1], s)
    value = data.draw(st.integers(0, 8))
    assert py.cut_masks(value) == cy.cut_masks(value)
    mask = data.draw(st.integers(0, (1 << n) - 1))
    assert py.crossing(mask) == cy.crossing(mask)


@pytest.mark.parametrize("cls", [_kernel_py.FlowGraph, ext.FlowGraph], ids=["python", "cython"])
def test_flow_is_conserved(cls):
    # K4 plus a pendant path; every interior vertex must balance
    eu = [0, 0, 0, 1, 1, 2, 3]
    ev = [1, 2, 3, 2, 3, 3, 4]
    fg = cls(5, eu, ev)
    value, flow = fg.max_flow(0, 3)
    assert value == 3
    net = [0] * 5
    for a, b, f in zip(eu, ev, flow):
        net[a] -= f
        net[b] += f
    assert net == [-3, 0, 0, 3, 0]


@pytest.mark.parametrize("cls", [_kernel_py.FlowGraph, ext.FlowGraph], ids=["python", "cython"])
def test_limit_stops_early(cls):
    fg = cls(2, [0] * 5, [1] * 5)
    assert fg.flow_value(0, 1) == 5
    assert fg.flow_value(0, 1, 2) == 2


@pytest.mark.parametrize("cls", [_kernel_py.FlowGraph, ext.FlowGraph], ids=["python", "cython"])
def test_rejects_bad_edges(cls):
    with pytest.raises(ValueError):
        cls(3, [0], [0])
    with pytest.raises(ValueError):
        cls(3, [0], [5])


@pytest.mark.parametrize("cls", [_kernel_py.FlowGraph, ext.FlowGraph], ids=["python", "cython"])
def test_cut_masks_c4(cls):
    fg = cls(4, [0, 1, 2, 0], [1, 2, 3, 3])
    # {0,1} and {0,3} each cut two edges; {0,2} cuts four
    assert fg.cut_masks(2) == [0b0011, 0b1001]
    assert fg.cut_masks(4) == [0b0101]
