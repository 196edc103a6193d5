"""Reference data for the regression suites.

Weights are written in the CLI grammar. Enveloping-algebra elements are lists of
``(coefficient, word)`` pairs, a word being space separated generators with optional powers.
G2 data uses the labelling with the short simple root first.
"""

from __future__ import annotations

Term = tuple[str, str]

DIMENSION = 14
CARTAN_MATRIX = ((2, -1), (-3, 2))
DYNKIN_INDEX = 3
PROJECTED_FUNDAMENTALS = {"w1": "psi1", "w2": "psi2", "w3": "psi1"}

# 36 c1 in the labelling with the long simple root first; compared after exchanging 1 and 2
CASIMIR_G2_LONG_FIRST: tuple[Term, ...] = (
    ("1", "h1 h1"),
    ("3", "h1 h2"),
    ("3", "h2 h2"),
    ("15", "h2"),
    ("9", "h1"),
    ("9", "g-6 g6"),
    ("9", "g-5 g5"),
    ("3", "g-4 g4"),
    ("3", "g-3 g3"),
    ("3", "g-2 g2"),
    ("9", "g-1 g1"),
)
CASIMIR_G2_SCALE = 36

CASIMIR_IMAGE: tuple[Term, ...] = (
    ("3", "h2 h2"),
    ("3", "h1 h2"),
    ("6", "h2 h3"),
    ("1", "h1 h1"),
    ("4", "h1 h3"),
    ("4", "h3 h3"),
    ("10", "h3"),
    ("5", "h1"),
    ("9", "h2"),
    ("3", "g-9 g9"),
    ("3", "g-8 g8"),
    ("1", "g-7 g6"),
    ("1", "g-6 g6"),
    ("1", "g-7 g7"),
    ("1", "g-6 g7"),
    ("-1", "g-5 g4"),
    ("1", "g-4 g4"),
    ("1", "g-5 g5"),
    ("-1", "g-4 g5"),
    ("1", "g-3 g1"),
    ("1", "g-1 g1"),
    ("1", "g-3 g3"),
    ("1", "g-1 g3"),
    ("3", "g-2 g2"),
)
CASIMIR_IMAGE_SCALE = 12

# so(7) highest weight -> [(G2 highest weight, multiplicity, dimension)]
FD_DECOMPOSITIONS: dict[str, tuple[int, tuple[tuple[str, int, int], ...]]] = {
    "0": (1, (("0", 1, 1),)),
    "w3": (8, (("0", 1, 1), ("psi1", 1, 7))),
    "w2": (21, (("psi1", 1, 7), ("psi2", 1, 14))),
    "w1": (7, (("psi1", 1, 7),)),
    "2*w3": (35, (("0", 1, 1), ("psi1", 1, 7), ("2*psi1", 1, 27))),
    "w2+w3": (112, (("psi1", 1, 7), ("psi2", 1, 14), ("2*psi1", 1, 27), ("psi1+psi2", 1, 64))),
    "2*w2": (168, (("2*psi1", 1, 27), ("psi1+psi2", 1, 64), ("2*psi2", 1, 77))),
    "w1+w3": (48, (("psi1", 1, 7), ("psi2", 1, 14), ("2*psi1", 1, 27))),
    "w1+w2": (105, (("psi2", 1, 14), ("2*psi1", 1, 27), ("psi1+psi2", 1, 64))),
    "2*w1": (27, (("2*psi1", 1, 27),)),
}

# vectors of the finite-dimensional modules killed by the raising operators of G2
FD_SINGULAR_VECTORS: tuple[tuple[str, str, tuple[Term, ...]], ...] = (
    ("w3", "0", (("1", "g-1 g-2 g-3"), ("-1", "g-3 g-2 g-3"))),
    ("w2", "psi1", (("1", "g-1 g-2"), ("-1/2", "g-3 g-2"))),
    ("2*w3", "psi1", (("1", "g-1 g-2 g-3"), ("1/2", "g-2 g-3^2"), ("-1", "g-3 g-2 g-3"))),
    ("w2+w3", "2*psi1", (("1", "g-1 g-2"), ("-2/5", "g-3 g-2"), ("1/5", "g-2 g-3"))),
    ("2*w2", "psi1+psi2", (("1", "g-1 g-2"), ("-1/2", "g-3 g-2"))),
    ("w1+w3", "psi2", (("1", "g-1"), ("-1", "g-3"))),
    (
        "w1+w3",
        "psi1",
        (("1", "g-3 g-2 g-1"), ("-3", "g-2 g-3 g-1"), ("5", "g-1 g-2 g-3"), ("-7", "g-3 g-2 g-3")),
    ),
    ("w1+w2", "2*psi1", (("1", "g-2 g-1"), ("-2", "g-1 g-2"), ("3/2", "g-3 g-2"))),
    ("w1+w2", "psi2", (("1", "g-1^2 g-2"), ("-1", "g-3 g-1 g-2"), ("1", "g-3^2 g-2"))),
)

# parabolic -> (weakly compatible, compatible, finite branching)
CONDITIONS: dict[str, tuple[bool, bool, bool]] = {
    "0,0,0": (True, True, True),
    "1,0,0": (True, False, True),
    "0,1,0": (True, True, False),
    "0,0,1": (True, False, False),
    "1,1,0": (True, False, False),
    "1,0,1": (True, True, False),
    "0,1,1": (True, False, False),
    "1,1,1": (True, True, False),
}

# (parabolic, lambda, cutoff) -> {mu: multiplicity}
BRANCHING: tuple[tuple[str, str, int, dict[str, int]], ...] = (
    ("1,0,0", "10*w1+w2", 2, {"10*psi1+psi2": 1, "11*psi1": 1, "9*psi1+psi2": 1}),
    ("0,0,0", "w3", 0, {"0": 1, "psi1": 1}),
    ("0,0,1", "w2+10*w3", 0, {"11*psi1": 1, "10*psi1+psi2": 1}),
)

QUASIPOLY_DEGREE_BOUND = 1

# (parabolic, lambda, cutoff) for the truncated character identity, five weights per parabolic
CHARACTER_IDENTITIES: tuple[tuple[str, str, int], ...] = (
    ("1,0,0", "10*w1+w2", 4),
    ("1,0,0", "7*w1+2*w2+w3", 4),
    ("1,0,0", "5*w1+w3", 4),
    ("1,0,0", "12*w1+2*w3", 4),
    ("1,0,0", "9*w1+w2+w3", 4),
    ("0,1,0", "w1+7*w2+w3", 4),
    ("0,1,0", "2*w1+9*w2", 4),
    ("0,1,0", "8*w2+w3", 4),
    ("0,1,0", "w1+11*w2", 4),
    ("0,1,0", "10*w2+2*w3", 4),
    ("0,0,1", "w2+10*w3", 4),
    ("0,0,1", "3*w1+w2+8*w3", 4),
    ("0,0,1", "w1+9*w3", 4),
    ("0,0,1", "2*w2+7*w3", 4),
    ("0,0,1", "w1+w2+12*w3", 4),
)

# kostant_partition is compared with brute force on every target down to this depth, over
# the quotient weights of the parabolics above and of the Borel subalgebra
PARTITION_SWEEP_DEPTH = 8
PARTITION_SWEEP_PARABOLICS: tuple[str, ...] = ("1,0,0", "0,1,0", "0,0,1", "1,1,1")

# m(mu, lambda) over p(1,0,0) equals the multiplicity of mu in P1_TABLE at this point
MULTIPLICITY_POINT: dict[str, str] = {"x1": "10"}

# dimensions by degree of M_lambda(so(7), p) against the sum of the three G2 modules
DIRECT_SUM: tuple[str, str, int] = ("1,0,0", "10*w1+w2", 6)

# lambda over p(1,0,0) -> [(pr of a constituent in simple-root coordinates, p1)]
P1_TABLE: dict[str, tuple[tuple[tuple[str, str], str], ...]] = {
    "x1*w1+w2": (
        (("2*x1+1", "x1+1"), "1/12*x1**2+1/2*x1+5/12"),
        (("2*x1+2", "x1+1"), "1/12*x1**2+7/12*x1+1/2"),
        (("2*x1+3", "x1+2"), "1/12*x1**2+2/3*x1+1"),
    ),
    "x1*w1+w3": (
        (("2*x1", "x1"), "1/12*x1**2+5/12*x1"),
        (("2*x1+1", "x1+1"), "1/12*x1**2+1/2*x1+5/12"),
        (("2*x1+2", "x1+1"), "1/12*x1**2+7/12*x1+1/2"),
    ),
    "x1*w1+2*w2": (
        (("2*x1+2", "x1+2"), "1/12*x1**2+7/12*x1+1"),
        (("2*x1+3", "x1+2"), "1/12*x1**2+2/3*x1+1"),
        (("2*x1+4", "x1+2"), "1/12*x1**2+3/4*x1+7/6"),
        (("2*x1+4", "x1+3"), "1/12*x1**2+3/4*x1+5/3"),
        (("2*x1+5", "x1+3"), "1/12*x1**2+5/6*x1+7/4"),
        (("2*x1+6", "x1+4"), "1/12*x1**2+11/12*x1+5/2"),
    ),
    "x1*w1+w2+w3": (
        (("2*x1+1", "x1+1"), "1/12*x1**2+1/2*x1+5/12"),
        (("2*x1+2", "x1+1"), "1/12*x1**2+7/12*x1+1/2"),
        (("2*x1+2", "x1+2"), "1/12*x1**2+7/12*x1+1"),
        (("2*x1+3", "x1+2"), "1/12*x1**2+2/3*x1+1"),
        (("2*x1+3", "x1+2"), "1/12*x1**2+2/3*x1+1"),
        (("2*x1+4", "x1+2"), "1/12*x1**2+3/4*x1+7/6"),
        (("2*x1+4", "x1+3"), "1/12*x1**2+3/4*x1+5/3"),
        (("2*x1+5", "x1+3"), "1/12*x1**2+5/6*x1+7/4"),
    ),
    "x1*w1+2*w3": (
        (("2*x1", "x1"), "1/12*x1**2+5/12*x1"),
        (("2*x1+1", "x1+1"), "1/12*x1**2+1/2*x1+5/12"),
        (("2*x1+2", "x1+1"), "1/12*x1**2+7/12*x1+1/2"),
        (("2*x1+2", "x1+2"), "1/12*x1**2+7/12*x1+1"),
        (("2*x1+3", "x1+2"), "1/12*x1**2+2/3*x1+1"),
        (("2*x1+4", "x1+2"), "1/12*x1**2+3/4*x1+7/6"),
    ),
}

# (parabolic, lambda, vector) for printed singular vectors; the constructed vectors of the
# same weight must span it
SINGULAR_VECTORS: tuple[tuple[str, str, tuple[Term, ...]], ...] = (
    ("1,0,0", "x1*w1+w2", (("-x1-2", "g-3 g-2"), ("-4", "g-4"), ("2", "g-2 g-1"))),
    (
        "1,0,0",
        "x1*w1+w2",
        (
            ("x1**2+2*x1", "g-3^2 g-2"),
            ("x1-1", "g-6"),
            ("-2*x1-1", "g-1 g-3 g-2"),
            ("-2", "g-4 g-1"),
            ("2", "g-1^2 g-2"),
        ),
    ),
    ("1,0,0", "x1*w1+w3", (("-x1", "g-3"), ("1", "g-1"))),
    (
        "1,0,0",
        "x1*w1+w3",
        (("2*x1+5", "g-3 g-2 g-3"), ("-1", "g-6"), ("2", "g-4 g-3"), ("-2", "g-1 g-2 g-3")),
    ),
    ("1,0,0", "x1*w1+2*w2", (("-4", "g-4"), ("-x1-3", "g-3 g-2"), ("2", "g-1 g-2"))),
    (
        "1,0,0",
        "x1*w1+2*w2",
        (
            ("4*x1-4", "g-6"),
            ("-8", "g-4 g-1"),
            ("2*x1**2+6*x1", "g-3^2 g-2"),
            ("-4*x1-4", "g-1 g-3 g-2"),
            ("4", "g-1^2 g-2"),
        ),
    ),
    (
        "1,0,0",
        "x1*w1+2*w2",
        (
            ("-10*x1-20", "g-4 g-3 g-2"),
            ("20", "g-4 g-1 g-2"),
            ("-20", "g-4^2"),
            ("-x1**2-5*x1-6", "g-3^2 g-2^2"),
            ("x1**2+5*x1+6", "g-2 g-3^2 g-2"),
            ("5*x1+10", "g-1 g-3 g-2^2"),
            ("-10", "g-1^2 g-2^2"),
        ),
    ),
    ("1,0,0", "x1*w1+w2+w3", (("-x1", "g-3"), ("1", "g-1"))),
    (
        "1,0,0",
        "x1*w1+w2+w3",
        (("5", "g-1 g-2"), ("-2*x1-4", "g-3 g-2"), ("x1+2", "g-2 g-3"), ("-5", "g-4")),
    ),
    ("1,0,0", "x1*w1+2*w3", (("-x1", "g-3"), ("2", "g-1"))),
    (
        "1,0,0",
        "x1*w1+2*w3",
        (("2*x1**2-2*x1", "g-3^2"), ("-4*x1+4", "g-1 g-3"), ("4", "g-1^2")),
    ),
    ("0,0,1", "w2+x3*w3", (("-1", "g-5"), ("-1", "g-3 g-2"), ("x3+4", "g-1 g-2"))),
    ("0,0,1", "w1+x3*w3", (("-1", "g-3"), ("x3", "g-1"))),
    (
        "0,0,1",
        "2*w1+x3*w3",
        (("-4", "g-3^2"), ("4*x3-4", "g-3 g-1"), ("-2*x3**2+2*x3", "g-1^2")),
    ),
    ("0,1,1", "w1+x2*w2+x3*w3", (("-1", "g-3"), ("x3", "g-1"))),
    ("1,1,0", "x1*w1+x2*w2+w3", (("-1", "g-1"), ("x1", "g-3"))),
    ("0,1,0", "w1+x2*w2+w3", (("2", "g-1"), ("-2", "g-3"))),
)

# the pair of vectors printed for the two-dimensional constituent of x1*w1+w2+w3
TWO_DIMENSIONAL_PAIR: tuple[tuple[Term, ...], tuple[Term, ...]] = (
    (
        ("1/6*x1**3+5/3*x1**2+8/3*x1", "g-3^2 g-2"),
        ("-1/2*x1**2-x1", "g-3 g-2 g-3"),
        ("1/6*x1**2+4/3*x1-3", "g-6"),
        ("2/3*x1**2+10/3*x1-1", "g-4 g-3"),
        ("-2/3*x1**2-16/3*x1-3", "g-1 g-3 g-2"),
        ("-x1-7", "g-4 g-1"),
        ("x1+7", "g-1^2 g-2"),
        ("x1+2", "g-1 g-2 g-3"),
    ),
    (
        ("1/6*x1**3+5/3*x1**2+17/3*x1+6", "g-3 g-2 g-3"),
        ("-1/8*x1**2-5/4*x1-2", "g-3^2 g-2"),
        ("-1/12*x1**2-2/3*x1-9/4", "g-6"),
        ("1/2*x1**2+35/12*x1+31/12", "g-4 g-3"),
        ("-1/6*x1**2-11/12*x1-7/6", "g-1 g-2 g-3"),
        ("-1/6*x1**2-13/12*x1-1/4", "g-1 g-3 g-2"),
        ("-1/3*x1-23/12", "g-4 g-1"),
        ("1/3*x1+23/12", "g-1^2 g-2"),
    ),
)

# (parabolic, lambda, mu) -> p1 values of the projector factors
PROJECTOR_FACTORS: tuple[tuple[str, str, str, tuple[str, ...]], ...] = (
    ("0,0,1", "w2+x3*w3", "(x3+1)*psi1", ("1/12*x3**2+2/3*x3+1",)),
    ("0,0,1", "w1+x3*w3", "(x3-1)*psi1+psi2", ("1/12*x3**2+7/12*x3+1/2",)),
    (
        "0,0,1",
        "2*w2+x3*w3",
        "(x3+2)*psi1",
        ("1/12*x3**2+5/6*x3+7/4", "1/12*x3**2+11/12*x3+5/2"),
    ),
)

# lambda over p(1,0,0) -> [(coefficient of v_lambda in tau(u)u.v_lambda, rational roots)]
CERTIFICATES: dict[str, tuple[tuple[str, tuple[str, ...]], ...]] = {
    "x1*w1+w3": (
        ("2*x1**4+27*x1**3+133*x1**2+285*x1+225", ("-3", "-5", "-5/2")),
        ("x1**2+x1", ("0", "-1")),
    ),
    "x1*w1+w2": (
        ("2*x1**4+13*x1**3+25*x1**2+14*x1", ("0", "-1", "-2", "-7/2")),
        ("x1**2+8*x1+12", ("-2", "-6")),
    ),
    "x1*w1+2*w3": (
        (
            "4*x1**10+152*x1**9+2579*x1**8+25736*x1**7+167312*x1**6+740582*x1**5"
            "+2260753*x1**4+4700490*x1**3+6371352*x1**2+5084640*x1+1814400",
            ("-7/2", "-5/2", "-3", "-5", "-4", "-6"),
        ),
        (
            "2*x1**8+49*x1**7+495*x1**6+2678*x1**5+8368*x1**4+15021*x1**3+14175*x1**2"
            "+5292*x1",
            ("0", "-1", "-3", "-4", "-7", "-7/2"),
        ),
        ("x1**4+17*x1**3+106*x1**2+288*x1+288", ("-3", "-4", "-6")),
        ("x1**4-x1**2", ("0", "1", "-1")),
        ("x1**2+2*x1", ("0", "-2")),
    ),
    "x1*w1+w2+w3": (
        (
            "16*x1**14+784*x1**13+17496*x1**12+235424*x1**11+2130569*x1**10"
            "+13688787*x1**9+64200218*x1**8+222353222*x1**7+568050249*x1**6"
            "+1055574499*x1**5+1383817036*x1**4+1208330004*x1**3+627179616*x1**2"
            "+145212480*x1",
            ("-7/2", "-3", "-4", "-6", "-5", "0", "-1", "-2", "-7"),
        ),
        (
            "2*x1**10+97*x1**9+2097*x1**8+26595*x1**7+218973*x1**6+1222044*x1**5"
            "+4676800*x1**4+12104384*x1**3+20244528*x1**2+19716480*x1+8467200",
            ("-7/2", "-4", "-6", "-5", "-7", "-2"),
        ),
        (
            "2*x1**10+25*x1**9+113*x1**8+205*x1**7+53*x1**6-230*x1**5-168*x1**4",
            ("0", "1", "-1", "-2", "-3", "-4", "-7/2"),
        ),
        (
            "2*x1**6+47*x1**5+431*x1**4+1978*x1**3+4804*x1**2+5896*x1+2880",
            ("-2", "-5", "-8", "-9/2"),
        ),
        (
            "2*x1**6+47*x1**5+411*x1**4+1648*x1**3+3004*x1**2+2016*x1",
            ("0", "-2", "-7", "-8", "-9/2"),
        ),
        ("x1**2+9*x1+14", ("-2", "-7")),
        ("x1**2+x1", ("0", "-1")),
    ),
    "x1*w1+2*w2": (
        (
            "4*x1**10+80*x1**9+655*x1**8+2780*x1**7+6232*x1**6+5870*x1**5-2355*x1**4"
            "-8730*x1**3-4536*x1**2",
            ("0", "1", "-1", "-2", "-3", "-4", "-7/2", "-9/2"),
        ),
        (
            "2*x1**8+65*x1**7+870*x1**6+6193*x1**5+25234*x1**4+58716*x1**3+72216*x1**2"
            "+36288*x1",
            ("-9/2", "-2", "-6", "-7", "-3", "0", "-8"),
        ),
        ("x1**4+20*x1**3+137*x1**2+370*x1+336", ("-2", "-3", "-7", "-8")),
        ("x1**4+9*x1**3+23*x1**2+15*x1", ("0", "-1", "-3", "-5")),
        ("x1**2+12*x1+27", ("-3", "-9")),
    ),
}
