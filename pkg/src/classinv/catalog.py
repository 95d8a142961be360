"""The scenario registry: ambient rings in the source's coordinate
conventions, invariant generators, the catalogued ideals, degeneration
data, tangent-space data, and expected results with provenance labels.

Ground truth is the printed generator lists of the source document,
adopted verbatim (a handful of evident transcription defects are
repaired; each repair is pinned by a machine check in the test suite).
Everything here is data plus constructors; the modules that consume it
do the actual computing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .groebner import Ideal
from .poly import Polynomial, Ring, parse_poly, ring

Coeffs = Dict[str, Polynomial]


@dataclass(frozen=True)
class Expected:
    """An expected result together with a provenance label for reports."""

    value: object
    citation: str


@dataclass
class DegenerationData:
    source: str  # name of the catalogued source ideal (a non-homogeneous fiber ideal)
    column_weights: Tuple[int, ...]  # one weight per matrix column
    target: str  # name of the catalogued limit ideal
    citation: str


@dataclass
class TangentData:
    """Generator/relation/morphism data for one tangent-space argument."""

    generators: List[Tuple[str, Polynomial]]
    dim_module: int  # declared dimension of the generating module
    relations: List[Tuple[str, Coeffs]]
    morphisms: List[Tuple[str, Coeffs]]
    expected_rank: int
    lower_bound: int
    lower_citation: str
    upper_bound: Optional[int] = None  # None: dim_module - rank
    rank_citation: str = ""


@dataclass
class IndependenceData:
    """Value-tuple independence data (used where relations are unavailable)."""

    generators: List[Tuple[str, Polynomial]]
    morphisms: List[Tuple[str, Coeffs]]
    expected_rank: int
    bounds: Tuple[int, int]
    citation: str


@dataclass
class CaseSpec:
    name: str
    situation: str
    params: Tuple[int, ...]
    ring: Ring
    title: str
    fft: List[Polynomial] = field(default_factory=list)
    ideals: Dict[str, Ideal] = field(default_factory=dict)
    expected: Dict[str, Expected] = field(default_factory=dict)
    degenerations: List[DegenerationData] = field(default_factory=list)
    tangent: Optional[TangentData] = None
    independence: Optional[IndependenceData] = None
    components: List[Tuple[str, Ideal]] = field(default_factory=list)
    quotient_ring: Optional[Ring] = None  # reduced ambient for auxiliary Hilbert data

    def ideal(self, which: str) -> Ideal:
        try:
            return self.ideals[which]
        except KeyError:
            raise UnsupportedIdeal(
                f"case {self.name!r} has no catalogued ideal {which!r}"
            ) from None


class UnsupportedIdeal(KeyError):
    """Raised for fixed points whose generators were never printed."""


# --------------------------------------------------------------------------
# matrix helpers


def _matrix_ring(letters: Sequence[str], rows: int) -> Ring:
    return ring(*[f"{c}{i}" for c in letters for i in range(1, rows + 1)])


def _grid_ring(letter_rows: int, letter_cols: int, names: Tuple[str, str]) -> Ring:
    a, b = names
    vs = [f"{a}{i}{j}" for i in range(1, letter_rows + 1) for j in range(1, letter_cols + 1)]
    vs += [f"{b}{i}{j}" for i in range(1, letter_rows + 1) for j in range(1, letter_cols + 1)]
    return ring(*vs)


def _columns(r: Ring, letters: Sequence[str], rows: int) -> Dict[str, List[Polynomial]]:
    return {c: [r.var(f"{c}{i}") for i in range(1, rows + 1)] for c in letters}


# --------------------------------------------------------------------------
# bilinear cases (pairing of a space with its dual)


def _bilinear_ring(n: int, n1: int, n2: int) -> Ring:
    names = [f"a{i}{j}" for i in range(1, n + 1) for j in range(1, n1 + 1)]
    names += [f"b{i}{j}" for i in range(1, n2 + 1) for j in range(1, n + 1)]
    return ring(*names)


def _bilinear_fft(r: Ring, n: int, n1: int, n2: int) -> List[Polynomial]:
    """Entries of the composite map: the n1*n2 contractions b . a."""
    out = []
    for i in range(1, n2 + 1):
        for j in range(1, n1 + 1):
            s = r.zero()
            for c in range(1, n + 1):
                s = s + r.var(f"b{i}{c}") * r.var(f"a{c}{j}")
            out.append(s)
    return out


def _make_bilinear_nilcone_case(name: str, n: int, n1: int, n2: int) -> CaseSpec:
    from .orbits import nilcone_dim

    r = _bilinear_ring(n, n1, n2)
    fft = _bilinear_fft(r, n, n1, n2)
    case = CaseSpec(
        name=name,
        situation="GL",
        params=(n, n1, n2),
        ring=r,
        title=f"bilinear contraction nilcone, parameters ({n},{n1},{n2})",
        fft=fft,
    )
    case.ideals["J"] = Ideal(r, fft)
    case.expected["nilcone-dim"] = Expected(
        nilcone_dim("GL", (n, n1, n2)),
        "nilcone dimension, closed form for the bilinear situation",
    )
    return case


# --------------------------------------------------------------------------
# GL2


def _gl2_pieces():
    r = _grid_ring(2, 2, ("x", "y"))
    x = {(i, j): r.var(f"x{i}{j}") for i in (1, 2) for j in (1, 2)}
    y = {(i, j): r.var(f"y{i}{j}") for i in (1, 2) for j in (1, 2)}
    # the second matrix is written anti-diagonally: entry (a,c) is y[3-c,3-a]
    u2 = {(a, c): y[(3 - c, 3 - a)] for a in (1, 2) for c in (1, 2)}
    fs = []
    for a in (1, 2):
        for b in (1, 2):
            fs.append(sum((u2[(a, c)] * x[(c, b)] for c in (1, 2)), r.zero()))
    hs = [x[(i, 1)] * y[(j, 1)] for i in (1, 2) for j in (1, 2)]
    return r, x, y, fs, hs


def build_gl2() -> CaseSpec:
    from .reptheory import GroupType, classical_hilbert

    r, x, y, fs, hs = _gl2_pieces()
    P = lambda t: parse_poly(t, r)
    case = CaseSpec(
        name="gl2",
        situation="GL",
        params=(2, 2, 2),
        ring=r,
        title="rank-two bilinear situation: distinguished fixed point",
        fft=fs,
    )
    gens = [(f"f{i+1}", fs[i]) for i in range(4)] + [(f"h{i+1}", hs[i]) for i in range(4)]
    case.ideals["J"] = Ideal(r, fs)
    case.ideals["I"] = Ideal(r, [g for _, g in gens])
    g2 = GroupType("GL", 2)
    case.expected["hilbert-I"] = Expected(
        [classical_hilbert(g2, p=p) for p in range(9)],
        "classical Hilbert function of the fixed point, squared-dimension sum",
    )
    case.expected["nilcone-dim"] = Expected(
        5, "nilcone dimension, closed form (even branch)"
    )

    def coeffs(**kw) -> Coeffs:
        return dict(kw)

    rels = [
        ("r1", coeffs(f1=-P("y21"), h2=P("y22"), h4=P("y12"))),
        ("r2", coeffs(f3=-P("x11"), h1=P("x21"), h2=P("x11"))),
        ("r3", coeffs(f4=P("x11"), h1=-P("x22"), h2=-P("x12"))),
    ]
    morphs = []
    for i in (1, 2, 3, 4):
        morphs.append((f"psi{i}", {f"f{i}": r.one()}))
    case.tangent = TangentData(
        generators=gens,
        dim_module=7,
        relations=rels,
        morphisms=[m for m in morphs if m[0] in ("psi1", "psi3", "psi4")],
        expected_rank=3,
        lower_bound=4,
        lower_citation="principal-component dimension lower bound",
        rank_citation="three independent pairings against the displayed relations",
    )
    G = lambda t: parse_poly(t, r)
    case.components = [
        ("K1", Ideal(r, [G("x11"), G("x12"), G("x21"), G("x22")])),
        ("K2", Ideal(r, [G("y11"), G("y12"), G("y21"), G("y22")])),
        (
            "K3",
            Ideal(
                r,
                [
                    G("x11"),
                    G("x21"),
                    G("y22*y11 - y21*y12"),
                    G("y22*x12 + y12*x22"),
                    G("y21*x12 + y11*x22"),
                ],
            ),
        ),
        (
            "K4",
            Ideal(
                r,
                [
                    G("y11"),
                    G("y21"),
                    G("x22*x11 - x21*x12"),
                    G("y22*x11 + y12*x21"),
                    G("y22*x12 + y12*x22"),
                ],
            ),
        ),
    ]
    case.expected["component-intersection"] = Expected(
        True, "fixed-point ideal equals the intersection of its four components"
    )
    return case


# --------------------------------------------------------------------------
# GL3


GL3_HILBERT_COEFFS: Tuple[Fraction, ...] = (
    Fraction(1),
    Fraction(122, 35),
    Fraction(1654, 315),
    Fraction(547, 120),
    Fraction(91, 36),
    Fraction(37, 40),
    Fraction(79, 360),
    Fraction(13, 420),
    Fraction(1, 504),
)


def _gl3_pieces():
    r = _grid_ring(3, 3, ("x", "y"))
    x = {(i, j): r.var(f"x{i}{j}") for i in (1, 2, 3) for j in (1, 2, 3)}
    y = {(i, j): r.var(f"y{i}{j}") for i in (1, 2, 3) for j in (1, 2, 3)}
    u2 = {(a, c): y[(4 - c, 4 - a)] for a in (1, 2, 3) for c in (1, 2, 3)}

    def yminor(rows, cols):
        (r1, r2), (c1, c2) = rows, cols
        return u2[(r1, c1)] * u2[(r2, c2)] - u2[(r1, c2)] * u2[(r2, c1)]

    def xminor(rows, cols):
        (r1, r2), (c1, c2) = rows, cols
        return x[(r1, c1)] * x[(r2, c2)] - x[(r1, c2)] * x[(r2, c1)]

    fs = []
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            fs.append(sum((u2[(a, c)] * x[(c, b)] for c in (1, 2, 3)), r.zero()))
    hs = [x[(i, 1)] * y[(j, 1)] for i in (1, 2, 3) for j in (1, 2, 3)]
    s_labels = [(1, (2, 3)), (1, (1, 3)), (2, (1, 3)), (1, (1, 2)), (2, (1, 2)), (3, (1, 2))]
    t_labels = [(1, (1, 2)), (1, (1, 3)), (2, (1, 3)), (1, (2, 3)), (2, (2, 3)), (3, (2, 3))]
    ss = [x[(i, 2)] * yminor((2, 3), cd) for (i, cd) in s_labels]
    ts = [y[(i, 2)] * xminor(rp, (1, 2)) for (i, rp) in t_labels]
    return r, x, y, u2, yminor, xminor, fs, hs, ss, ts, s_labels, t_labels


def build_gl3() -> CaseSpec:
    r, x, y, u2, yminor, xminor, fs, hs, ss, ts, s_labels, t_labels = _gl3_pieces()
    P = lambda t: parse_poly(t, r)
    case = CaseSpec(
        name="gl3",
        situation="GL",
        params=(3, 3, 3),
        ring=r,
        title="rank-three bilinear situation: distinguished fixed point",
        fft=fs,
    )
    gens = (
        [(f"f{i+1}", fs[i]) for i in range(9)]
        + [(f"h{i+1}", hs[i]) for i in range(9)]
        + [(f"s{i+1}", ss[i]) for i in range(6)]
        + [(f"t{i+1}", ts[i]) for i in range(6)]
    )
    case.ideals["J"] = Ideal(r, fs)
    case.ideals["I"] = Ideal(r, [g for _, g in gens])
    case.expected["hilbert-coeffs"] = Expected(
        GL3_HILBERT_COEFFS, "classical Hilbert function, degree-8 closed form"
    )

    def coeffs(**kw) -> Coeffs:
        return dict(kw)

    rels = [
        ("r1", coeffs(h1=-P("y21"), h2=P("y11"))),
        ("r2", coeffs(f1=-P("y21"), h2=P("y33"), h5=P("y23"), h8=P("y13"))),
        ("r3", coeffs(f4=-P("y21"), h2=P("y32"), h5=P("y22"), h8=P("y12"))),
        ("r4", coeffs(f7=-P("y21"), h2=P("y31"), h5=P("y21"), h8=P("y11"))),
        ("r5", coeffs(f8=-P("x21"), h4=P("x32"), h5=P("x22"), h6=P("x12"))),
        ("r6", coeffs(f9=-P("x21"), h4=P("x33"), h5=P("x23"), h6=P("x13"))),
        ("r7", coeffs(f6=P("x12*y11"), f9=-P("x12*y12"), s1=-P("x23"), s2=-P("x13"))),
        ("r8", coeffs(f1=-P("x22*y12"), f2=P("x21*y12"), t1=P("y33"), t4=-P("y13"))),
        ("r9", coeffs(f5=P("x12*y11"), f8=-P("x12*y12"), s1=-P("x22"), s2=-P("x12"))),
        (
            "r10",
            coeffs(
                h1=-P("x32*y22"),
                h2=-(P("x22*y22") + P("x12*y32")),
                s1=P("x31"),
                t2=-P("y21"),
                t3=P("y11"),
            ),
        ),
        ("r11", coeffs(t1=P("y11"), h1=-P("x22*y12"), h4=P("x12*y12"))),
    ]
    morphs: List[Tuple[str, Coeffs]] = []
    for i in range(1, 10):
        if i == 3:
            continue
        morphs.append((f"psi{i}", {f"f{i}": r.one()}))
    for k, (a, b) in enumerate([(1, 3), (2, 3), (3, 1), (3, 2), (3, 3)], 1):
        morphs.append(
            (
                f"phi{k}",
                {f"h{3*(i-1)+j}": x[(i, a)] * y[(j, b)] for i in (1, 2, 3) for j in (1, 2, 3)},
            )
        )
    for k, col in [(1, 1), (2, 3)]:
        morphs.append(
            (
                f"gamma{k}",
                {
                    f"s{idx}": -x[(i, col)] * yminor((1, 2), cd)
                    for idx, (i, cd) in enumerate(s_labels, 1)
                },
            )
        )
    m1 = x[(1, 3)] * x[(2, 2)] - x[(1, 2)] * x[(2, 3)]
    m2 = x[(1, 3)] * x[(3, 2)] - x[(1, 2)] * x[(3, 3)]
    m3 = x[(2, 3)] * x[(3, 2)] - x[(2, 2)] * x[(3, 3)]
    for k, c in [(1, 1), (2, 3)]:
        vals = [m1 * y[(1, c)], -m1 * y[(2, c)], m2 * y[(2, c)],
                m1 * y[(3, c)], -m2 * y[(3, c)], m3 * y[(3, c)]]
        morphs.append((f"delta{k}", {f"t{idx+1}": vals[idx] for idx in range(6)}))
    case.tangent = TangentData(
        generators=gens,
        dim_module=29,
        relations=rels,
        morphisms=morphs,
        expected_rank=17,
        lower_bound=12,
        lower_citation="twelve independent equivariant morphisms exhibited",
        rank_citation="seventeen independent pairings against the relation family",
    )
    return case


# --------------------------------------------------------------------------
# O2 (hyperbolic-basis coordinates)


def build_o2() -> CaseSpec:
    r = ring("x1", "x2", "y1", "y2")
    P = lambda t: parse_poly(t, r)
    fs = [P("x1*x2"), P("y1*y2"), P("x1*y2 + x2*y1")]
    hs = [P("x1^2"), P("x2^2")]
    case = CaseSpec(
        name="o2",
        situation="O",
        params=(2, 2),
        ring=r,
        title="orthogonal pairs in the hyperbolic plane: fixed point",
        fft=fs,
    )
    gens = [("f1", fs[0]), ("f2", fs[1]), ("f3", fs[2]), ("h1", hs[0]), ("h2", hs[1])]
    case.ideals["J"] = Ideal(r, fs)
    case.ideals["I"] = Ideal(r, [g for _, g in gens])
    case.expected["hilbert-J-2"] = Expected(
        7, "quotient basis count in degree two (monomial enumeration)"
    )
    case.expected["nilcone-dim"] = Expected(2, "two isotropic components of dimension 2")
    rels = [
        ("r1", {"f3": P("x1"), "f1": -P("y1"), "h1": -P("y2")}),
        ("r2", {"f1": P("x2"), "h2": -P("x1")}),
    ]
    morphs = [(f"psi{i}", {f"f{i}": r.one()}) for i in (1, 3)]
    case.tangent = TangentData(
        generators=gens,
        dim_module=5,
        relations=rels,
        morphisms=morphs,
        expected_rank=2,
        lower_bound=3,
        lower_citation="principal-component dimension lower bound",
        rank_citation="two independent pairings against the displayed relations",
    )
    case.components = [
        ("C1", Ideal(r, [P("x1"), P("y1"), P("x2^2")])),
        ("C2", Ideal(r, [P("x2"), P("y2"), P("x1^2")])),
    ]
    case.expected["component-intersection"] = Expected(
        True, "fixed-point ideal vs the displayed two-component intersection"
    )
    return case


# --------------------------------------------------------------------------
# O3 / SO3 shared ambient


def _triple_ring() -> Ring:
    return ring("x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3")


def _o3_quadrics(r: Ring) -> List[Polynomial]:
    P = lambda t: parse_poly(t, r)
    return [
        P("x1^2 + x2^2 + x3^2"),
        P("y1^2 + y2^2 + y3^2"),
        P("z1^2 + z2^2 + z3^2"),
        P("x1*y1 + x2*y2 + x3*y3"),
        P("x1*z1 + x2*z2 + x3*z3"),
        P("z1*y1 + z2*y2 + z3*y3"),
    ]


def _det3(r: Ring) -> Polynomial:
    return parse_poly(
        "x1*y2*z3 - x1*y3*z2 - x2*y1*z3 + x2*y3*z1 + x3*y1*z2 - x3*y2*z1", r
    )


O3_PRINTED_BASIS: Tuple[str, ...] = (
    "z1^2 + z2^2 + z3^2 - 1",
    "y1*z1 + y2*z2 + y3*z3",
    "x1*z1 + x2*z2 + x3*z3",
    "y1^2 + y2^2 + y3^2 - 1",
    "x1*y1 + x2*y2 + x3*y3",
    "x3^2 + y3^2 + z3^2 - 1",
    "x2*x3 + y2*y3 + z2*z3",
    "x1*x3 + y1*y3 + z1*z3",
    "x2^2 + y2^2 + z2^2 - 1",
    "x1*x2 + y1*y2 + z1*z2",
    "x1^2 - y2^2 - y3^2 - z2^2 - z3^2 + 1",
    "x2*y1*y2 - x1*y2^2 - x3*z1*z3 + x1*z3^2",
    "y2*z1*z2 - y1*z2^2 + y3*z1*z3 - y1*z3^2 + y1",
    "x2*z1*z2 - x1*z2^2 + x3*z1*z3 - x1*z3^2 + x1",
    "x2*y1*z2 - x1*y2*z2 + x3*y1*z3 - x1*y3*z3",
    "y2^2*z1 + y3^2*z1 - y1*y2*z2 - y1*y3*z3 - z1",
    "x2*y2*z1 + x3*y3*z1 - x1*y2*z2 - x1*y3*z3",
    "x3*y2*y3 - x2*y3^2 + x3*z2*z3 - x2*z3^2 + x2",
    "x3*y1*y3 - x1*y3^2 + x3*z1*z3 - x1*z3^2 + x1",
    "x2*y1*y3 - x1*y2*y3 + x2*z1*z3 - x1*z2*z3",
    "x3*y2^2 - x2*y2*y3 + x3*z2^2 - x2*z2*z3 - x3",
    "x3*y1*y2 - x1*y2*y3 + x3*z1*z2 - x1*z2*z3",
    "x3*y2*z1*z3 - x2*y3*z1*z3 - x3*y1*z2*z3 + x1*y3*z2*z3 + x2*y1*z3^2 - x1*y2*z3^2 - x2*y1 + x1*y2",
    "y3^2*z2^2 - 2*y2*y3*z2*z3 + y2^2*z3^2 - y2^2 - y3^2 - z2^2 - z3^2 + 1",
    "x3*y3*z2^2 - x3*y2*z2*z3 - x2*y3*z2*z3 + x2*y2*z3^2 - x2*y2 - x3*y3",
    "y3^2*z1*z2 - y2*y3*z1*z3 - y1*y3*z2*z3 + y1*y2*z3^2 - y1*y2 - z1*z2",
    "x3*y3*z1*z2 - x2*y3*z1*z3 - x3*y1*z2*z3 + x2*y1*z3^2 - x2*y1",
)

SO3_PRINTED_BASIS: Tuple[str, ...] = (
    "y3*z2 - y2*z3 + x1",
    "y3*z1 - y1*z3 - x2",
    "y2*z1 - y1*z2 + x3",
    "x3*z2 - x2*z3 - y1",
    "x3*z1 - x1*z3 + y2",
    "x2*z1 - x1*z2 - y3",
    "x3*y2 - x2*y3 + z1",
    "x3*y1 - x1*y3 - z2",
    "x2*y1 - x1*y2 + z3",
    "y1^2 + y2^2 + y3^2 - 1",
    "z1^2 + z2^2 + z3^2 - 1",
    "x1^2 + y1^2 + z1^2 - 1",
    "x2^2 + y2^2 + z2^2 - 1",
    "x3^2 + y3^2 + z3^2 - 1",
    "y1*z1 + y2*z2 + y3*z3",
    "x1*z1 + x2*z2 + x3*z3",
    "x1*y1 + x2*y2 + x3*y3",
    "x2*x3 + y2*y3 + z2*z3",
    "x1*x3 + y1*y3 + z1*z3",
    "x1*x2 + y1*y2 + z1*z2",
    # final element repaired: the transcription showed y1^2 in place of y2^2,
    # which provably fails to lie in the fiber ideal
    "x1^2 - y2^2 - y3^2 - z2^2 - z3^2 + 1",
)


def build_o3() -> CaseSpec:
    r = _triple_ring()
    P = lambda t: parse_poly(t, r)
    quadrics = _o3_quadrics(r)
    case = CaseSpec(
        name="o3-I2",
        situation="O",
        params=(3, 3),
        ring=r,
        title="orthogonal triples in three-space: second fixed point",
        fft=quadrics,
    )
    case.ideals["J"] = Ideal(r, quadrics)
    i2_texts = [
        "y1^2 + y2^2 + y3^2",
        "z1^2 + z2^2 + z3^2",
        "x1^2 + x2^2 + x3^2",
        "x2^2",
        "x3^2",
        "x1*x2",
        "x2*x3",
        "x1*x3",
        "x1*y1 + x2*y2 + x3*y3",
        "x1*z1 + x2*z2 + x3*z3",
        "z1*y1 + z2*y2 + z3*y3",
        "y3*x1*y2 - y3*x2*y1",
        "y2*x1*y3 - y2*x3*y1",
        "y3*x1*y3 - y3*x3*y1",
        "y2*x2*y3 - y2*x3*y2",
        "y3*x2*y3 - y3*x3*y2",
    ]
    case.ideals["I2"] = Ideal(r, [P(t) for t in i2_texts])
    fiber = [q for q in quadrics]
    for i in (0, 1, 2):
        fiber[i] = fiber[i] - r.one()
    case.ideals["L"] = Ideal(r, fiber)
    case.ideals["L-printed-basis"] = Ideal(r, [P(t) for t in O3_PRINTED_BASIS])
    case.degenerations = [
        DegenerationData(
            source="L",
            column_weights=(-3, -2, -1),
            target="I2",
            citation="one-parameter degeneration with column weights (-3,-2,-1)",
        )
    ]
    case.expected["hilbert-J"] = Expected(
        {0: 1, 1: 9, 2: 39, 3: 111, 4: 240, 5: 447},
        "invariant-ideal Hilbert values; cubic closed form away from 0 and 3",
    )
    case.expected["hilbert-J-poly"] = Expected(
        (Fraction(2), Fraction(3, 2), Fraction(5, 2), Fraction(3)),
        "cubic closed form 3p^3 + 5/2 p^2 + 3/2 p + 2 (ascending coefficients)",
    )
    case.expected["hilbert-I2"] = Expected(
        {0: 1, 1: 9, 2: 34, 3: 75, 4: 130, 5: 202},
        "fixed-point Hilbert values; 8p^2 + 2 from degree four on",
    )
    case.expected["nilcone-dim"] = Expected(4, "odd-dimension branch of the nilcone formula")

    # tangent data: value tuples of the displayed morphism family on the
    # sixteen generators (table row order), plus the seven combinations
    table_rows = [
        "y3*x1*y2 - y3*x2*y1",
        "y2*x1*y3 - y2*x3*y1",
        "y3*x1*y3 - y3*x3*y1",
        "y2*x2*y3 - y2*x3*y2",
        "y3*x2*y3 - y3*x3*y2",
        "x1^2 + x2^2 + x3^2",
        "y1^2 + y2^2 + y3^2",
        "z1^2 + z2^2 + z3^2",
        "x1*y1 + x2*y2 + x3*y3",
        "x1*z1 + x2*z2 + x3*z3",
        "y1*z1 + y2*z2 + y3*z3",
        "x2^2",
        "x3^2",
        "x1*x2",
        "x1*x3",
        "x2*x3",
    ]
    gens = [(f"g{k+1}", P(t)) for k, t in enumerate(table_rows)]
    phi_table: Dict[int, Dict[int, str]] = {
        1: {8: "1"},
        2: {1: "x2*y1 - x1*y2", 2: "-x1*y2", 3: "x3*y1 - 2*x1*y3", 4: "-x2*y2",
            5: "x3*y2 - 2*x2*y3", 7: "-2*y3", 9: "-x3", 11: "-z3"},
        3: {1: "-x1*y3", 2: "x3*y1 - x1*y3", 4: "2*x3*y2 - x2*y3", 5: "x3*y3",
            7: "-2*y2", 9: "-x2", 11: "-z2"},
        4: {1: "x2*y3", 2: "x3*y2", 3: "x3*y3", 7: "-2*y1", 9: "-x1", 11: "-z1"},
        5: {1: "y2*y3", 2: "y2*y3", 3: "y3^2", 9: "y1", 10: "z1", 14: "x2", 15: "x3"},
        6: {1: "y1*y3", 4: "-y2*y3", 5: "-y3^2", 6: "2*x1", 9: "-y2", 10: "-z2",
            12: "-2*x2", 14: "-x1", 16: "-x3"},
        7: {2: "y1*y2", 3: "y1*y3", 4: "y2^2", 5: "y2*y3", 6: "-2*x2",
            9: "-y3", 10: "-z3", 13: "-2*x3", 15: "-x1", 16: "-x2"},
        8: {1: "x2*z1*z3 - x1*z2*z3", 2: "x3*z1*z2 - x1*z2*z3",
            3: "x3*z1*z3 - x1*z3^2", 4: "x3*z2^2 - x2*z2*z3",
            5: "x3*z2*z3 - x2*z3^2", 6: "-2*x3"},
        9: {1: "x2*y3*z1 - x1*y3*z2", 2: "x2*y3*z1 - x2*y1*z3",
            3: "x3*y3*z1 - 2*x1*y3*z3", 4: "x2*y3*z2 - 2*x2*y2*z3",
            5: "x3*y3*z2 - 2*x2*y3*z3", 7: "-2*y3*z3", 9: "-x3*z3", 11: "-z3^2"},
        10: {1: "x3*y2*z1 - x2*y3*z1 - x3*y1*z2 + x1*y3*z2", 2: "x1*y2*z3",
             3: "-x3*y1*z3 + 2*x1*y3*z3", 4: "x2*y2*z3",
             5: "-x3*y2*z3 + 2*x2*y3*z3", 7: "2*y3*z3", 9: "x3*z3", 11: "z3^2"},
        11: {12: "y2^2", 13: "y3^2", 14: "y1*y2", 15: "y1*y3", 16: "y2*y3"},
    }
    combos = {
        "m1": [(1, "1")],
        "m2": [(2, "z3"), (3, "z2"), (4, "z1")],
        "m3": [(5, "y1"), (6, "-y2"), (7, "-y3")],
        "m4": [(5, "z1"), (6, "-z2"), (7, "-z3")],
        "m5": [(8, "1")],
        "m6": [(9, "1"), (10, "1")],
        "m7": [(11, "1")],
    }
    morphs: List[Tuple[str, Coeffs]] = []
    for name, parts in combos.items():
        values: Coeffs = {}
        for k, cf in parts:
            coeff = P(cf)
            for rowidx, expr in phi_table[k].items():
                gname = f"g{rowidx}"
                values[gname] = values.get(gname, r.zero()) + coeff * P(expr)
        morphs.append((name, values))
    case.independence = IndependenceData(
        generators=gens,
        morphisms=morphs,
        expected_rank=7,
        bounds=(7, 8),
        citation="seven independent morphism values; upper bound quoted from the source",
    )
    return case


def build_so3(which: str) -> CaseSpec:
    r = _triple_ring()
    P = lambda t: parse_poly(t, r)
    quadrics = _o3_quadrics(r)
    det = _det3(r)
    case = CaseSpec(
        name=f"so3-{which}",
        situation="SO",
        params=(3, 3),
        ring=r,
        title=f"special orthogonal triples: fixed point {which}",
        fft=quadrics + [det],
    )
    case.ideals["J"] = Ideal(r, quadrics + [det])
    case.ideals["I1"] = Ideal(
        r,
        [P("x1"), P("x2"), P("x3"), quadrics[1], quadrics[2], quadrics[5]],
    )
    i2 = [
        "x1^2 - x3^2", "x2^2", "x1*x2", "x2*x3", "x1*x3",
        "x1^2 + x2^2 + x3^2", "y1^2 + y2^2 + y3^2", "z1^2 + z2^2 + z3^2",
        "x1*y1 + x2*y2 + x3*y3", "x1*z1 + x2*z2 + x3*z3", "z1*y1 + z2*y2 + z3*y3",
        "x2*y3 - x3*y2", "x1*y3 - x3*y1", "x1*y2 - x2*y1",
        "x2*z3 - x3*z2", "x1*z3 - x3*z1", "x1*z2 - x2*z1",
        "z2*y3 - z3*y2", "z1*y3 - z3*y1", "z1*y2 - z2*y1",
    ]
    case.ideals["I2"] = Ideal(r, [P(t) for t in i2])
    fiber = [q for q in quadrics]
    for i in (0, 1, 2):
        fiber[i] = fiber[i] - r.one()
    fiber.append(det - r.one())
    case.ideals["L"] = Ideal(r, fiber)
    case.ideals["L-printed-basis"] = Ideal(r, [P(t) for t in SO3_PRINTED_BASIS])
    if which == "I1":
        case.degenerations = [
            DegenerationData(
                source="L",
                column_weights=(-3, -1, -1),
                target="I1",
                citation="one-parameter degeneration with column weights (-3,-1,-1)",
            )
        ]
        case.quotient_ring = ring("y1", "y2", "y3", "z1", "z2", "z3")
        case.expected["hilbert-J1"] = Expected(
            {0: 1, 1: 6, 2: 18, 3: 38, 4: 66, 5: 102, 6: 146},
            "quotient-plane Hilbert values; 4p^2 + 2 from degree one on",
        )
        # dimension argument for the first fixed point: its ideal is minimally
        # generated by six elements because three of the natural nine are
        # redundant; the memberships below certify the redundancy
        case.expected["redundant-members"] = Expected(
            ["f1", "f4", "f6"],
            "three invariant quadrics already lie in the linear-coordinate ideal",
        )
        case.expected["tangent-dim"] = Expected(
            6, "tangent dimension equals the minimal generator count"
        )
    else:
        case.degenerations = [
            DegenerationData(
                source="L",
                column_weights=(-3, -2, -2),
                target="I2",
                citation="one-parameter degeneration with column weights (-3,-2,-2)",
            )
        ]
        f = [
            ("f1", quadrics[0]), ("f2", quadrics[1]), ("f3", quadrics[2]),
            ("f4", quadrics[3]), ("f5", quadrics[5]), ("f6", quadrics[4]),
        ]
        # f5 is the y.z pairing, f6 the x.z pairing, matching the relation list
        g = [
            ("g11", P("x2*y3 - x3*y2")), ("g12", P("x3*y1 - x1*y3")), ("g13", P("x1*y2 - x2*y1")),
            ("g21", P("x2*z3 - x3*z2")), ("g22", P("x3*z1 - x1*z3")), ("g23", P("x1*z2 - x2*z1")),
            ("g31", P("z2*y3 - z3*y2")), ("g32", P("z1*y3 - z3*y1")), ("g33", P("z2*y1 - z1*y2")),
        ]
        h = [
            ("h1", P("x1^2 - x3^2")), ("h2", P("x1*x2")), ("h3", P("x2^2")),
            ("h4", P("x2*x3")), ("h5", P("x1*x3")),
        ]
        gens = f + g + h
        rels = [
            ("r1", {"f1": -P("y1"), "f4": 2 * P("x1"), "h1": -P("y1"),
                    "h2": -2 * P("y2"), "h3": P("y1"), "h5": -2 * P("y3")}),
            ("r2", {"f1": P("y2"), "h1": -P("y2"), "h3": -P("y2"),
                    "h4": -2 * P("y3"), "g11": 2 * P("x3")}),
            ("r3", {"f1": P("z2"), "h1": -P("z2"), "h3": -P("z2"),
                    "h4": -2 * P("z3"), "g21": 2 * P("x3")}),
            ("r4", {"f4": -P("z2"), "f6": P("y2"), "g11": P("z3"),
                    "g21": -P("y3"), "g33": P("x1")}),
            ("r5", {"f2": P("x3"), "f4": -P("y3"), "g11": P("y2"), "g12": -P("y1")}),
            ("r6", {"f3": P("x3"), "f6": -P("z3"), "g21": P("z2"), "g22": -P("z1")}),
            ("r7", {"f5": P("x2"), "f6": -P("y2"), "g11": -P("z3"), "g13": P("z1")}),
        ]
        letters = {1: "x", 2: "y", 3: "z"}
        morphs = [(f"psi{i}", {f"f{i}": r.one()}) for i in range(1, 7)]
        for j in (1, 2, 3):
            for k in (1, 2, 3):
                morphs.append(
                    (
                        f"phi{j}{k}",
                        {f"g{j}{l}": r.var(f"{letters[k]}{l}") for l in (1, 2, 3)},
                    )
                )
        case.tangent = TangentData(
            generators=gens,
            dim_module=20,
            relations=rels,
            morphisms=morphs,
            expected_rank=12,
            lower_bound=8,
            lower_citation="exhibited morphism family matching the stated tangent dimension",
            rank_citation="twelve independent pairings against the relation family",
        )
    return case


# --------------------------------------------------------------------------
# Sp4


SP4_HILBERT_COEFFS: Tuple[Fraction, ...] = (
    Fraction(1),
    Fraction(473, 140),
    Fraction(4069, 840),
    Fraction(29683, 7560),
    Fraction(481, 240),
    Fraction(97, 144),
    Fraction(3, 20),
    Fraction(3, 140),
    Fraction(1, 560),
    Fraction(1, 15120),
)


def build_sp4() -> CaseSpec:
    r = _matrix_ring(("x", "y", "z", "t"), 4)
    P = lambda t: parse_poly(t, r)
    cols = _columns(r, ("x", "y", "z", "t"), 4)

    def omega(a: str, b: str) -> Polynomial:
        # the symplectic pairing in the coordinates the generator display uses:
        # a1 b3 + a2 b4 - a3 b1 - a4 b2
        va, vb = cols[a], cols[b]
        return va[0] * vb[2] + va[1] * vb[3] - va[2] * vb[0] - va[3] * vb[1]

    pairs = [("x", "y"), ("x", "z"), ("x", "t"), ("y", "z"), ("y", "t"), ("z", "t")]
    fs = [omega(a, b) for a, b in pairs]

    def wedge(a, b, i, j):
        va, vb = cols[a], cols[b]
        return va[i - 1] * vb[j - 1] - va[j - 1] * vb[i - 1]

    hs = [wedge("x", "y", 1, 2), wedge("x", "y", 1, 3), wedge("x", "y", 1, 4),
          wedge("x", "y", 2, 3), wedge("x", "y", 3, 4)]
    case = CaseSpec(
        name="sp4",
        situation="Sp",
        params=(4, 4),
        ring=r,
        title="symplectic quadruples in four-space: distinguished fixed point",
        fft=fs,
    )
    gens = [(f"f{i+1}", fs[i]) for i in range(6)] + [(f"h{i+1}", hs[i]) for i in range(5)]
    case.ideals["J"] = Ideal(r, fs)
    case.ideals["I"] = Ideal(r, [g for _, g in gens])
    case.expected["hilbert-coeffs"] = Expected(
        SP4_HILBERT_COEFFS, "classical Hilbert function, degree-9 closed form"
    )
    case.expected["nilcone-dim"] = Expected(10, "symplectic nilcone closed form")
    rels = [
        ("r1", {"h2": -P("z4"), "h3": P("z3"), "h5": -P("z1"),
                "f1": P("z4"), "f2": -P("y4"), "f4": P("x4")}),
        ("r2", {"h2": -P("t4"), "h3": P("t3"), "h5": -P("t1"),
                "f1": P("t4"), "f3": -P("y4"), "f5": P("x4")}),
    ]
    morphs = [(f"psi{i}", {f"f{i}": r.one()}) for i in range(1, 6)]
    case.tangent = TangentData(
        generators=gens,
        dim_module=11,
        relations=rels,
        morphisms=morphs,
        expected_rank=5,
        lower_bound=6,
        lower_citation="principal-component dimension lower bound",
        rank_citation="five independent pairings against the displayed relations",
    )
    return case


# --------------------------------------------------------------------------
# SL and the symplectic-reduction scenarios


def build_sl(n: int, nprime: int) -> CaseSpec:
    names = [f"w{i}{j}" for i in range(1, n + 1) for j in range(1, nprime + 1)]
    r = ring(*names)
    from itertools import combinations

    fft = []
    for cols in combinations(range(1, nprime + 1), n):
        fft.append(_minor(r, "w", list(range(1, n + 1)), list(cols)))
    case = CaseSpec(
        name=f"sl-{n}-{nprime}",
        situation="SL",
        params=(n, nprime),
        ring=r,
        title=f"special linear situation ({n},{nprime}): maximal minors",
        fft=fft,
    )
    case.ideals["J"] = Ideal(r, fft)
    return case


def _minor(r: Ring, letter: str, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    """Determinant of the square submatrix with the given rows/columns."""
    from itertools import permutations

    k = len(rows)
    out = r.zero()
    for perm in permutations(range(k)):
        sign = 1
        seen = list(perm)
        for i in range(k):
            for j in range(i + 1, k):
                if seen[i] > seen[j]:
                    sign = -sign
        term = r.one() * sign
        for i in range(k):
            term = term * r.var(f"{letter}{rows[i]}{cols[perm[i]]}")
        out = out + term
    return out


def build_glsym(n: int, d: int) -> CaseSpec:
    from .orbits import nilcone_dim, symplectic_reduction_orbit

    names = [f"a{i}{j}" for i in range(1, n + 1) for j in range(1, d + 1)]
    names += [f"b{i}{j}" for i in range(1, d + 1) for j in range(1, n + 1)]
    r = ring(*names)
    gens = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            s = r.zero()
            for c in range(1, d + 1):
                s = s + r.var(f"a{i}{c}") * r.var(f"b{c}{j}")
            gens.append(s)
    case = CaseSpec(
        name=f"glsym-n{n}-d{d}",
        situation="GLsym",
        params=(n, d),
        ring=r,
        title=f"bilinear moment fiber, parameters ({n},{d})",
    )
    case.ideals["moment"] = Ideal(r, gens)
    case.expected["moment-dim"] = Expected(
        nilcone_dim("GLsym", (n, d)), "moment-fiber dimension, closed form"
    )
    case.expected["reduction-orbit"] = Expected(
        str(symplectic_reduction_orbit("GL", n, d)),
        "symplectic reduction as a nilpotent orbit closure",
    )
    return case


def build_osym(n: int, d: int) -> CaseSpec:
    from .orbits import nilcone_dim, symplectic_reduction_orbit

    names = [f"w{i}{j}" for i in range(1, n + 1) for j in range(1, 2 * d + 1)]
    r = ring(*names)
    # w J' (w transpose), J' the standard block antisymmetric form on 2d columns
    gens = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            s = r.zero()
            for c in range(1, d + 1):
                s = s + r.var(f"w{i}{2*c-1}") * r.var(f"w{j}{2*c}")
                s = s - r.var(f"w{i}{2*c}") * r.var(f"w{j}{2*c-1}")
            gens.append(s)
    case = CaseSpec(
        name=f"osym-n{n}-d{d}",
        situation="Osym",
        params=(n, d),
        ring=r,
        title=f"orthogonal moment fiber, parameters ({n},{d})",
    )
    case.ideals["moment"] = Ideal(r, gens)
    case.expected["moment-dim"] = Expected(
        nilcone_dim("Osym", (n, d)), "moment-fiber dimension, closed form"
    )
    case.expected["reduction-orbit"] = Expected(
        str(symplectic_reduction_orbit("O", n, d)),
        "symplectic reduction as a nilpotent orbit closure",
    )
    return case


def build_spsym(n_half: int, d: int) -> CaseSpec:
    from .orbits import nilcone_dim, symplectic_reduction_orbit

    n = 2 * n_half
    names = [f"w{i}{j}" for i in range(1, n + 1) for j in range(1, 2 * d + 1)]
    r = ring(*names)
    # w (w transpose): symmetric, upper entries
    gens = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            s = r.zero()
            for c in range(1, 2 * d + 1):
                s = s + r.var(f"w{i}{c}") * r.var(f"w{j}{c}")
            gens.append(s)
    case = CaseSpec(
        name=f"spsym-n{n_half}-d{d}",
        situation="Spsym",
        params=(n, d),
        ring=r,
        title=f"symplectic moment fiber, parameters ({n},{d})",
    )
    case.ideals["moment"] = Ideal(r, gens)
    case.expected["moment-dim"] = Expected(
        nilcone_dim("Spsym", (n, d)), "moment-fiber dimension, closed form"
    )
    orb = symplectic_reduction_orbit("Sp", n_half, d)
    case.expected["reduction-orbit"] = Expected(
        str(orb) if not isinstance(orb, tuple) else f"{orb[0]} / {orb[1]}",
        "symplectic reduction as nilpotent orbit closure(s)",
    )
    return case


# --------------------------------------------------------------------------
# quotient maps and moment maps on rational points


def fft_generators(case: CaseSpec) -> List[Polynomial]:
    return list(case.fft)


def ideal_J(case: CaseSpec) -> Ideal:
    return case.ideal("J")


def fixed_point_ideal(case: CaseSpec, which: Optional[str] = None) -> Ideal:
    if which is None:
        which = "I"
    if case.name.startswith("o3") and which == "I1":
        raise UnsupportedIdeal(
            "the first orthogonal-triple fixed point has no printed generators"
        )
    return case.ideal(which)


def generic_fiber_ideal(case: CaseSpec) -> Ideal:
    return case.ideal("L")


def moment_ideal(case: CaseSpec) -> Ideal:
    return case.ideal("moment")


def component_ideals(case: CaseSpec) -> List[Ideal]:
    if not case.components:
        raise UnsupportedIdeal(f"case {case.name!r} has no catalogued components")
    return [ideal for _, ideal in case.components]


Matrix = List[List[Fraction]]


def _mat(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def _transpose(a: Matrix) -> Matrix:
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]


def quotient_image(case: CaseSpec, point) -> object:
    """Evaluate the quotient map at a rational matrix point.

    GL-type situations take a pair (u1, u2) and return u2 . u1; the
    orthogonal situations return w^T w; the symplectic one returns
    w^T J w; the special linear one the vector of maximal minors; the
    special orthogonal one the pair (w^T w, minors)."""
    sit = case.situation
    if sit in ("GL", "GLsym"):
        u1, u2 = (_mat(point[0]), _mat(point[1]))
        return _matmul(u2, u1)
    w = _mat(point)
    if sit in ("O", "Osym"):
        return _matmul(_transpose(w), w)
    if sit in ("Sp", "Spsym"):
        n = len(w)
        J = [[Fraction(0)] * n for _ in range(n)]
        half = n // 2
        for i in range(half):
            J[i][half + i] = Fraction(1)
            J[half + i][i] = Fraction(-1)
        return _matmul(_matmul(_transpose(w), J), w)
    if sit == "SL":
        return _sl_minors(w)
    if sit == "SO":
        return (_matmul(_transpose(w), w), _sl_minors(w))
    raise ValueError(f"no quotient map for situation {sit!r}")


def _det(m: Matrix) -> Fraction:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Fraction(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _det(minor)
    return total


def _sl_minors(w: Matrix) -> List[Fraction]:
    from itertools import combinations

    n = len(w)
    nprime = len(w[0])
    out = []
    for cols in combinations(range(nprime), n):
        out.append(_det([[w[i][j] for j in cols] for i in range(n)]))
    return out


# --------------------------------------------------------------------------
# registry


_BUILDERS: Dict[str, Callable[[], CaseSpec]] = {
    "gl2": build_gl2,
    "gl3": build_gl3,
    "o2": build_o2,
    "o3-I2": build_o3,
    "so3-I1": lambda: build_so3("I1"),
    "so3-I2": lambda: build_so3("I2"),
    "sp4": build_sp4,
    "sl-2-3": lambda: build_sl(2, 3),
    "glnil-2-2-1": lambda: _make_bilinear_nilcone_case("glnil-2-2-1", 2, 2, 1),
    "glnil-1-1-1": lambda: _make_bilinear_nilcone_case("glnil-1-1-1", 1, 1, 1),
    "glnil-1-2-2": lambda: _make_bilinear_nilcone_case("glnil-1-2-2", 1, 2, 2),
    "glnil-1-3-3": lambda: _make_bilinear_nilcone_case("glnil-1-3-3", 1, 3, 3),
    "onil-3-2": lambda: _make_o_nilcone_case(3, 2),
    "glsym-n2-d2": lambda: build_glsym(2, 2),
    "glsym-n1-d2": lambda: build_glsym(1, 2),
    "glsym-n2-d4": lambda: build_glsym(2, 4),
    "osym-n2-d2": lambda: build_osym(2, 2),
    "spsym-n1-d2": lambda: build_spsym(1, 2),
}

_CACHE: Dict[str, CaseSpec] = {}


def _make_o_nilcone_case(n: int, nprime: int) -> CaseSpec:
    from .orbits import nilcone_dim

    names = [f"w{i}{j}" for i in range(1, n + 1) for j in range(1, nprime + 1)]
    r = ring(*names)
    gens = []
    for i in range(1, nprime + 1):
        for j in range(i, nprime + 1):
            s = r.zero()
            for c in range(1, n + 1):
                s = s + r.var(f"w{c}{i}") * r.var(f"w{c}{j}")
            gens.append(s)
    case = CaseSpec(
        name=f"onil-{n}-{nprime}",
        situation="O",
        params=(n, nprime),
        ring=r,
        title=f"orthogonal nilcone, parameters ({n},{nprime})",
        fft=gens,
    )
    case.ideals["J"] = Ideal(r, gens)
    case.expected["nilcone-dim"] = Expected(
        nilcone_dim("O", (n, nprime)), "nilcone dimension, closed form"
    )
    return case


def case_names() -> List[str]:
    return sorted(_BUILDERS)


def get_case(name: str) -> CaseSpec:
    if name not in _BUILDERS:
        raise KeyError(f"unknown case {name!r}; known: {', '.join(case_names())}")
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]
