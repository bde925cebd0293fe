import random
from fractions import Fraction

import numpy as np
import pytest

from lojex.bipoly import BiPoly
from lojex.numeric import EstimateConfig, min_grad_on_circle
from lojex.parse import parse_polynomial as P
from lojex.signature import classify, containment_condition, is_nondegenerate
from lojex.wfilter import WeightError, WeightSystem, infer_weights, weights_from_override
from oracles import random_weighted_homogeneous

F1 = "x^3 + x*y^6 + y^9"
G1 = "x^3 - x*y^6 + y^9"
F2 = "y*(x^5 + x*y^12 + y^15)"
G2 = "y*(x^5 - x*y^12 + y^15)"

DEGENERATE = [
    ("x^2*y^2", (1, 1)),
    ("(x - y^3)^2", (3, 1)),
    ("x^3", (1, 1)),
    ("(x^2 - y^2)^2", (1, 1)),
    ("y*(x - y^2)^2", (2, 1)),
]


def _ws(text, weights=None):
    p = P(text)
    return p, (weights_from_override(p, *weights) if weights else infer_weights(p))


@pytest.mark.parametrize(
    "text, weights, expected",
    [
        (F1, None, True),
        ("x^2*y^2", (1, 1), False),
        ("x^2 + y^2", None, True),
        (F2, None, True),
        (G2, None, True),
        ("x*y*(x - y)", None, True),
        ("(x - y^3)^2", None, False),
    ],
)
def test_is_nondegenerate(text, weights, expected):
    p, ws = _ws(text, weights)
    ok, diags = is_nondegenerate(p, ws)
    assert ok is expected
    if not ok:
        assert any(d.code.startswith("common-zero") for d in diags)


def test_degenerate_diagnostics():
    p, ws = _ws("x^2*y^2", (1, 1))
    _, diags = is_nondegenerate(p, ws, ("x", "y"))
    assert "common-zero-axis" in {d.code for d in diags}
    p, ws = _ws("(x - y^3)^2")
    _, diags = is_nondegenerate(p, ws, ("x", "y"))
    assert any("on y=+1 the partials share" in d.message for d in diags)
    p, ws = _ws("x^3", (1, 1))
    _, diags = is_nondegenerate(p, ws)
    assert "partial-identically-zero" in {d.code for d in diags}


def test_zero_polynomial_rejected():
    with pytest.raises(WeightError):
        is_nondegenerate(BiPoly.zero(), WeightSystem(1, 1, 2))
    with pytest.raises(WeightError):
        classify(P("x^2 + 1"), WeightSystem(1, 1, 2))


@pytest.mark.parametrize(
    "text, expected, witness",
    [
        (F1, True, None),
        (G1, False, "3u^2 - 1 has 2 real roots"),
        ("x^5*y + x*y^13 + y^16", True, None),
    ],
)
def test_containment(text, expected, witness):
    p, ws = _ws(text)
    ok, diags = containment_condition(p, ws, ("x", "y"))
    assert ok is expected
    if witness:
        assert any(witness in d.message for d in diags)


def test_containment_needs_orientation():
    p, ws = _ws("y^3 + x^6*y + x^9")
    with pytest.raises(ValueError, match="orient"):
        containment_condition(p, ws)


def test_classify_examples():
    p, ws = _ws(F1)
    c = classify(p, ws)
    assert (c.nondegenerate, c.containment_holds, c.swapped, c.homogeneous) == (True, True, False, False)
    assert c.weights == WeightSystem(3, 1, 9)

    # the same polynomial with the variable names exchanged
    p, ws = _ws("y^3 + y*x^6 + x^9")
    assert ws.weights == (1, 3)
    c2 = classify(p, ws)
    assert c2.swapped
    assert (c2.nondegenerate, c2.containment_holds) == (True, True)
    assert c2.weights == c.weights

    p, ws = _ws("x^2 + y^2")
    assert classify(p, ws).homogeneous


def test_classify_relabels_diagnostics_after_swap():
    p, ws = _ws("y^3 - y*x^6 + x^9")
    c = classify(p, ws, ("x", "y"))
    assert c.swapped and not c.containment_holds
    assert any("slice d/dy at x=" in d.message for d in c.diagnostics)


def test_diagnostics_present_when_flags_false():
    rng = random.Random(21)
    for _ in range(150):
        p, (w1, w2, d) = random_weighted_homogeneous(rng, max_degree=24)
        c = classify(p, WeightSystem(w1, w2, d))
        if not (c.nondegenerate and c.containment_holds):
            assert c.diagnostics


def test_swap_consistency():
    rng = random.Random(22)
    for _ in range(200):
        p, (w1, w2, d) = random_weighted_homogeneous(rng, max_degree=30)
        ws = WeightSystem(w1, w2, d)
        a, b = classify(p, ws), classify(p.swap(), ws.swapped())
        assert a.nondegenerate == b.nondegenerate
        # with equal weights nothing is reoriented and containment names a fixed axis
        if w1 != w2:
            assert a.containment_holds == b.containment_holds
            assert a.swapped != b.swapped


def test_constant_multiple_stability():
    rng = random.Random(23)
    for _ in range(150):
        p, (w1, w2, d) = random_weighted_homogeneous(rng, max_degree=30)
        ws = WeightSystem(w1, w2, d)
        c = Fraction(rng.choice([-7, -2, 3, 5]), rng.choice([1, 3, 11]))
        a, b = classify(p, ws), classify(p * c, ws)
        assert a.nondegenerate == b.nondegenerate
        if a.nondegenerate:
            assert a.containment_holds == b.containment_holds


def _grid_violations(p: BiPoly, ws: WeightSystem, n: int = 2001) -> int:
    """Grid points off the x2 band where dp/dx1 nearly vanishes.

    The threshold is taken relative to rho^(d - w1) so that flat but nonzero
    values close to the origin do not count.
    """
    d1 = p.derivative(1)
    xs = np.linspace(-1.0, 1.0, n)
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    val = np.zeros_like(X)
    for (a, b), c in d1.items():
        val += float(c) * X**a * Y**b
    rho = np.hypot(np.abs(X) ** (1 / ws.w1), np.abs(Y) ** (1 / ws.w2))
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = np.abs(val) / rho ** (ws.d - ws.w1)
    mask = (np.abs(Y) > 1e-2) & (rel < 1e-9)
    return int(mask.sum())


def _slice_near_zero(p: BiPoly) -> bool:
    """Does dp/dx1 change sign, or come near zero, along x2 = +1 or x2 = -1?"""
    d1 = p.derivative(1)
    u = np.linspace(-50, 50, 400001)
    for sigma in (1.0, -1.0):
        v = sum(float(c) * u**a * sigma**b for (a, b), c in d1.items())
        s = np.sign(v)
        if np.any(s[:-1] * s[1:] <= 0):
            return True
        # even-multiplicity roots touch zero without crossing it
        scale = sum(abs(float(c)) * np.abs(u) ** a for (a, b), c in d1.items())
        if np.min(np.abs(v) / scale) < 1e-5:
            return True
    return False


def test_containment_against_grid_oracle():
    cases = [_ws(t) for t in (F1, G1, F2, G2)]
    rng = random.Random(24)
    while len(cases) < 14:
        p, (w1, w2, d) = random_weighted_homogeneous(rng, max_weight=4, max_degree=16)
        cases.append((p, WeightSystem(w1, w2, d).normalized()))
    seen = {True: 0, False: 0}
    for p, ws in cases:
        c = classify(p, ws)
        if not c.nondegenerate:
            continue
        q, ows = (p, ws) if not c.swapped else (p.swap(), ws.swapped())
        seen[c.containment_holds] += 1
        if c.containment_holds:
            assert _grid_violations(q, ows) == 0
        else:
            assert _slice_near_zero(q)
    assert seen[True] >= 2 and seen[False] >= 2


@pytest.mark.parametrize("text, weights", DEGENERATE)
def test_degenerate_means_tiny_gradient_somewhere(text, weights):
    p, ws = _ws(text, weights)
    assert not classify(p, ws).nondegenerate
    cfg = EstimateConfig()
    found = False
    for r in (0.1, 0.05, 0.02):
        if min_grad_on_circle(p, r, cfg) < 1e-6 * r**ws.d:
            found = True
            break
    assert found
