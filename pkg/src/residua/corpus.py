"""The ideal corpus the verification suite runs over.

Every entry is homogeneous over QQ.  Tags drive which statements apply and
are themselves re-verified against computed facts by the test suite
(perfect-ht2 entries really are perfect of height 2 with beta1 - beta0 = -1,
and so on).  Expected facts are values fixed in advance, either quoted from
the worked example or derived once with independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ideals import Ideal
from .ring import QQ, PolynomialRing


@dataclass
class CorpusEntry:
    name: str
    variables: tuple
    generator_text: tuple
    tags: tuple
    expected: dict = field(default_factory=dict)
    _ideal: Ideal | None = None

    def ring(self, coefficient_field=QQ) -> PolynomialRing:
        return PolynomialRing(self.variables, coefficient_field)

    def ideal(self, coefficient_field=QQ) -> Ideal:
        if coefficient_field == QQ:
            if self._ideal is None:
                ring = self.ring()
                self._ideal = Ideal(ring, [ring.parse(t) for t in self.generator_text])
            return self._ideal
        ring = self.ring(coefficient_field)
        return Ideal(ring, [ring.parse(t) for t in self.generator_text])


_XYZ = ("x", "y", "z")
_XYZW = ("x", "y", "z", "w")

_ENTRIES = [
    CorpusEntry(
        "paper-example",
        _XYZ,
        ("x^2", "x*y", "z^2"),
        ("paper-example", "beta-diff-0", "non-cm"),
        expected={
            "betti_ideal": [3, 3, 1],
            "graded_betti": {(0, 2): 3, (1, 3): 1, (1, 4): 2, (2, 5): 1},
            "height": 2,
            "spread": 3,
            "g_infinity": True,
        },
    ),
    CorpusEntry(
        "paper-example-4v",
        _XYZW,
        ("x^2", "x*y", "z^2"),
        ("beta-diff-0", "non-cm"),
        expected={"betti_ideal": [3, 3, 1], "height": 2, "spread": 3},
    ),
    CorpusEntry(
        "squarefree-triple",
        _XYZ,
        ("y*z", "x*z", "x*y"),
        ("perfect-ht2", "cm", "thm3"),
        expected={"betti_ideal": [3, 2], "height": 2},
    ),
    CorpusEntry(
        "twisted-cubic",
        _XYZW,
        ("x*z - y^2", "x*w - y*z", "y*w - z^2"),
        ("perfect-ht2", "cm", "thm3"),
        expected={"betti_ideal": [3, 2], "height": 2},
    ),
    CorpusEntry(
        "generic-2x3-minors",
        ("a", "b", "c", "d", "e", "f"),
        ("b*f - c*e", "a*f - c*d", "a*e - b*d"),
        ("perfect-ht2", "cm", "thm3"),
        expected={"betti_ideal": [3, 2], "height": 2},
    ),
    CorpusEntry(
        "planar-points-a",
        _XYZ,
        (
            "3*x*y*z + 6*y^2*z - 8*x*z^2 - y*z^2",
            "x^2*z + 5*y^2*z - 5*x*z^2 - y*z^2",
            "27*x*y^2 + 105*y^2*z - 112*x*z^2 - 20*y*z^2",
            "27*x^2*y + 168*y^2*z - 160*x*z^2 - 35*y*z^2",
        ),
        ("perfect-ht2", "cm", "thm2a", "thm3"),
        expected={"betti_ideal": [4, 3], "height": 2},
    ),
    CorpusEntry(
        "planar-points-b",
        _XYZ,
        (
            "11*x*y*z - 13*y^2*z + 7*x*z^2 - 5*y*z^2",
            "11*x^2*z - 23*y^2*z + 9*x*z^2 + 3*y*z^2",
            "22*x*y^2 + 3*y^2*z - 16*x*z^2 - 9*y*z^2",
            "22*x^2*y + 21*y^2*z - 24*x*z^2 - 19*y*z^2",
        ),
        ("perfect-ht2", "cm", "thm2a"),
        expected={"betti_ideal": [4, 3], "height": 2},
    ),
    CorpusEntry(
        # maximal minors of the 3x4 circulant [[x,y,z,0],[0,x,y,z],[z,0,x,y]]
        "circulant-minors",
        _XYZ,
        (
            "x^3 + y^2*z - x*z^2",
            "x^2*y + y*z^2",
            "x*y^2 - x^2*z + z^3",
            "y^3 - 2*x*y*z",
        ),
        ("perfect-ht2", "cm", "thm2a"),
        expected={"betti_ideal": [4, 3], "height": 2},
    ),
    CorpusEntry(
        "power-cube",
        _XYZ,
        ("x^3", "x^2*y", "x*y^2", "y^3"),
        ("perfect-ht2", "cm", "gs-fail"),
        expected={"betti_ideal": [4, 3], "height": 2, "spread": 2},
    ),
    CorpusEntry(
        "staircase",
        _XYZ,
        ("x^4", "x^2*y", "x*y^2", "y^4"),
        ("perfect-ht2", "cm"),
        expected={"betti_ideal": [4, 3], "height": 2},
    ),
    CorpusEntry(
        "fat-point-2v",
        ("x", "y"),
        ("x^2", "x*y", "y^2"),
        ("perfect-ht2", "cm", "gs-fail"),
        expected={"betti_ideal": [3, 2], "height": 2, "spread": 2},
    ),
    CorpusEntry(
        "grade1-x2-xy",
        ("x", "y"),
        ("x^2", "x*y"),
        ("grade1-nonunmixed",),
        expected={"betti_ideal": [2, 1], "height": 1, "hull": ("x",)},
    ),
    CorpusEntry(
        "grade1-line-pair",
        _XYZ,
        ("x*y", "x*z"),
        ("grade1-nonunmixed",),
        expected={"betti_ideal": [2, 1], "height": 1, "hull": ("x",)},
    ),
    CorpusEntry(
        "grade1-fat-plane",
        _XYZ,
        ("x^2*y", "x^2*z"),
        ("grade1-nonunmixed",),
        expected={"betti_ideal": [2, 1], "height": 1, "hull": ("x^2",)},
    ),
    CorpusEntry(
        "grade1-plane-triple",
        _XYZW,
        ("x*y", "x*z", "x*w"),
        ("beta-diff-0", "non-cm"),
        expected={"betti_ideal": [3, 3, 1], "height": 1, "hull": ("x",)},
    ),
    CorpusEntry(
        # edge ideal of the 4-cycle = (x,z) cap (y,w): unmixed, not CM, and
        # ell = 3 < mu = 4, so thm2c produces a proper geometric residual
        "cycle-four",
        _XYZW,
        ("x*y", "y*z", "z*w", "w*x"),
        ("beta-diff-0", "non-cm"),
        expected={"betti_ideal": [4, 4, 1], "height": 2, "spread": 3},
    ),
    CorpusEntry(
        "gorenstein-ht3",
        _XYZ,
        ("x^2 - y^2", "y^2 - z^2", "x*y", "y*z", "x*z"),
        ("gorenstein-ht3", "beta-diff-0", "cm", "thm3"),
        expected={"betti_ideal": [5, 5, 1], "height": 3},
    ),
    CorpusEntry(
        "ci-linear-2",
        _XYZ,
        ("x", "y"),
        ("ci", "cm", "thm3"),
        expected={"betti_ideal": [2, 1], "height": 2},
    ),
    CorpusEntry(
        "ci-quadrics",
        _XYZ,
        ("x^2", "y^2", "z^2"),
        ("ci", "cm", "thm3"),
        expected={"betti_ideal": [3, 3, 1], "height": 3},
    ),
    CorpusEntry(
        "ci-mixed",
        _XYZ,
        ("x^2 + y^2", "z^3"),
        ("ci", "cm"),
        expected={"betti_ideal": [2, 1], "height": 2},
    ),
    CorpusEntry(
        "principal-linear",
        _XYZ,
        ("x",),
        ("principal", "cm", "thm3"),
        expected={"betti_ideal": [1], "height": 1},
    ),
    CorpusEntry(
        "principal-quadric",
        _XYZ,
        ("x*y",),
        ("principal", "cm", "thm3"),
        expected={"betti_ideal": [1], "height": 1},
    ),
    CorpusEntry(
        "maximal-ideal",
        _XYZ,
        ("x", "y", "z"),
        ("ci", "cm"),
        expected={"betti_ideal": [3, 3, 1], "height": 3},
    ),
    CorpusEntry(
        "path-four",
        _XYZW,
        ("x*y", "y*z", "z*w"),
        ("perfect-ht2", "cm"),
        expected={"betti_ideal": [3, 2], "height": 2, "spread": 3},
    ),
]


def corpus():
    """The corpus entries (singleton list; ideals cached per entry)."""
    return list(_ENTRIES)


def corpus_entry(name: str) -> CorpusEntry:
    for e in corpus():
        if e.name == name:
            return e
    raise KeyError(f"no corpus entry named {name!r}")
