"""Neron-Severi bilattices of the blow-up models and their root datum.

Divisor classes live in the basis (Hq, Hr, E1, ..., EK) and curve classes in
(hq, hr, e1, ..., eK), paired by diag(1, 1, -1, ..., -1). Linear maps act on
coefficient column vectors; the curve matrix of a map is always derived from
its divisor matrix through the pairing.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exact.rational import Rational, is_integral, rational, to_str

# -- models -------------------------------------------------------------------

X10_DIMS = (2, 2, 2, 2, 2, 2, 1, 2, 1, 2)
# Centers 11..21 are not dimensioned in the source; these values are derived
# from the chart atlas (see garnier.geom.center_dimension, which re-checks them).
X21_EXTRA_DIMS = (2, 2, 2, 0, 0, 0, 0, 0, 0, 1, 1)


@dataclass(frozen=True)
class Model:
    name: str
    center_dims: tuple

    @property
    def K(self) -> int:
        return len(self.center_dims)

    @property
    def rank(self) -> int:
        return 2 + self.K

    def divisor_basis(self) -> list:
        return ["Hq", "Hr"] + [f"E{k}" for k in range(1, self.K + 1)]

    def curve_basis(self) -> list:
        return ["hq", "hr"] + [f"e{k}" for k in range(1, self.K + 1)]

    def signs(self) -> tuple:
        return (1, 1) + (-1,) * self.K

    def divisor(self, text: str) -> "DivisorClass":
        return DivisorClass(self, parse_coeffs(self, text, curve=False))

    def curve(self, text: str) -> "CurveClass":
        return CurveClass(self, parse_coeffs(self, text, curve=True))

    def basis_divisor(self, i: int) -> "DivisorClass":
        return DivisorClass(self, tuple(rational(int(j == i)) for j in range(self.rank)))

    def basis_curve(self, i: int) -> "CurveClass":
        return CurveClass(self, tuple(rational(int(j == i)) for j in range(self.rank)))


P2xP2 = Model("P2xP2", ())
X10 = Model("X10", X10_DIMS)
X21 = Model("X21", X10_DIMS + X21_EXTRA_DIMS)
MODELS = {m.name: m for m in (P2xP2, X10, X21)}


def get_model(name) -> Model:
    if isinstance(name, Model):
        return name
    try:
        return MODELS[name]
    except KeyError:
        raise ValueError(f"unknown model {name!r}; expected one of {sorted(MODELS)}") from None


# -- parsing compact class notation --------------------------------------------

_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(Hq|Hr|hq|hr|E|e)(\{[\d,\s]+\}|\d+)?")


def parse_coeffs(model: Model, text: str, curve: bool = False) -> tuple:
    """Parse e.g. ``"Hq+Hr-E{7,8}"`` or ``"2hq-e1-e3"`` into a coefficient tuple.

    ``E{i,j,...}`` abbreviates ``Ei+Ej+...``.
    """
    coeffs = [rational(0)] * model.rank
    s = text.replace(" ", "")
    if s in ("0", ""):
        return tuple(coeffs)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse class {text!r} at {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = rational(m.group(2)) if m.group(2) else rational(1)
        sym, idx = m.group(3), m.group(4)
        if (sym[0].islower()) != curve:
            raise ValueError(f"mixed divisor/curve symbols in {text!r}")
        if sym.lower() in ("hq", "hr"):
            if idx:
                raise ValueError(f"bad symbol in {text!r}")
            slots = [0 if sym.lower() == "hq" else 1]
        else:
            if not idx:
                raise ValueError(f"missing index in {text!r}")
            nums = [int(x) for x in idx.strip("{}").split(",")]
            for k in nums:
                if not 1 <= k <= model.K:
                    raise ValueError(f"E{k} is not in model {model.name}")
            slots = [k + 1 for k in nums]
        for j in slots:
            coeffs[j] += sign * c
        pos = m.end()
    return tuple(coeffs)


# -- classes ----------------------------------------------------------------------


@dataclass(frozen=True)
class _Vector:
    model: Model
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.model.rank:
            raise ValueError(f"expected {self.model.rank} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(rational(c) for c in self.coeffs))

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.model != self.model:
            raise ValueError(f"model mismatch: {self.model.name} vs {other.model.name}")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.model, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.model, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return type(self)(self.model, tuple(-a for a in self.coeffs))

    def __mul__(self, c):
        c = rational(c)
        return type(self)(self.model, tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(is_integral(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _names(self):
        raise NotImplementedError

    def __str__(self):
        parts = []
        for name, c in zip(self._names(), self.coeffs):
            if not c:
                continue
            mag = abs(c)
            body = name if mag == 1 else f"{to_str(mag)}{name}"
            parts.append(("-" if c < 0 else "+") + body)
        if not parts:
            return "0"
        out = "".join(parts)
        return out[1:] if out[0] == "+" else out

    def to_json(self) -> dict:
        return {"model": self.model.name, "basis": self._names(), "coeffs": [to_str(c) for c in self.coeffs]}


class DivisorClass(_Vector):
    def _names(self):
        return self.model.divisor_basis()


class CurveClass(_Vector):
    def _names(self):
        return self.model.curve_basis()


def class_from_json(data: dict):
    model = get_model(data["model"])
    coeffs = tuple(rational(c) for c in data["coeffs"])
    basis = data.get("basis")
    if basis == model.curve_basis():
        return CurveClass(model, coeffs)
    if basis is None or basis == model.divisor_basis():
        return DivisorClass(model, coeffs)
    raise ValueError("basis does not match the model")


def pairing(D: DivisorClass, c: CurveClass) -> Rational:
    if not isinstance(D, DivisorClass) or not isinstance(c, CurveClass):
        raise TypeError("pairing takes a DivisorClass and a CurveClass")
    if D.model != c.model:
        raise ValueError(f"model mismatch: {D.model.name} vs {c.model.name}")
    total = rational(0)
    for a, b, s in zip(D.coeffs, c.coeffs, D.model.signs()):
        if a and b:
            total += s * a * b
    return total


def anticanonical(model) -> DivisorClass:
    model = get_model(model)
    coeffs = [rational(3), rational(3)] + [rational(d - 3) for d in model.center_dims]
    return DivisorClass(model, tuple(coeffs))


# -- exact matrices -------------------------------------------------------------


def identity(n: int) -> tuple:
    return tuple(tuple(rational(int(i == j)) for j in range(n)) for i in range(n))


def matmul(a, b) -> tuple:
    bt = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col) if x and y), rational(0)) for col in bt) for row in a)


def matvec(a, v) -> tuple:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), rational(0)) for row in a)


def transpose(a) -> tuple:
    return tuple(zip(*a))


def matinv(a) -> tuple:
    n = len(a)
    m = [list(row) + [rational(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ArithmeticError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


# -- maps -------------------------------------------------------------------------


@dataclass(frozen=True)
class BiLatticeMap:
    """Linear action on the bilattice; ``divisor_matrix`` columns are images of basis classes."""

    model: Model
    divisor_matrix: tuple
    label: str = ""

    def __post_init__(self):
        n = self.model.rank
        m = tuple(tuple(rational(x) for x in row) for row in self.divisor_matrix)
        if len(m) != n or any(len(r) != n for r in m):
            raise ValueError(f"matrix must be {n}x{n}")
        object.__setattr__(self, "divisor_matrix", m)

    @classmethod
    def from_images(cls, model: Model, images: Sequence[DivisorClass], label: str = "") -> "BiLatticeMap":
        cols = [img.coeffs for img in images]
        return cls(model, transpose(cols), label)

    @classmethod
    def identity(cls, model) -> "BiLatticeMap":
        model = get_model(model)
        return cls(model, identity(model.rank), "id")

    @property
    def curve_matrix(self) -> tuple:
        j = self.model.signs()
        inv_t = transpose(matinv(self.divisor_matrix))
        return tuple(tuple(j[r] * inv_t[r][c] * j[c] for c in range(len(j))) for r in range(len(j)))

    def __call__(self, x):
        if x.model != self.model:
            raise ValueError("model mismatch")
        if isinstance(x, DivisorClass):
            return DivisorClass(self.model, matvec(self.divisor_matrix, x.coeffs))
        if isinstance(x, CurveClass):
            return CurveClass(self.model, matvec(self.curve_matrix, x.coeffs))
        raise TypeError("expected a DivisorClass or CurveClass")

    def then(self, other: "BiLatticeMap") -> "BiLatticeMap":
        """The map applying ``self`` first and ``other`` second."""
        if other.model != self.model:
            raise ValueError("model mismatch")
        return BiLatticeMap(self.model, matmul(other.divisor_matrix, self.divisor_matrix))

    def inverse(self) -> "BiLatticeMap":
        return BiLatticeMap(self.model, matinv(self.divisor_matrix), f"({self.label})^-1")

    def power(self, n: int) -> "BiLatticeMap":
        base = self if n >= 0 else self.inverse()
        out = BiLatticeMap.identity(self.model)
        for _ in range(abs(n)):
            out = out.then(base)
        return out

    def __eq__(self, other):
        return isinstance(other, BiLatticeMap) and self.model == other.model and \
            self.divisor_matrix == other.divisor_matrix

    def __hash__(self):
        return hash((self.model, self.divisor_matrix))

    def is_identity(self) -> bool:
        return self.divisor_matrix == identity(self.model.rank)

    def is_integral(self) -> bool:
        return all(is_integral(x) for row in self.divisor_matrix for x in row)

    def preserves_pairing(self) -> bool:
        n = self.model.rank
        cm = self.curve_matrix
        if not all(is_integral(x) for row in cm for x in row) and self.is_integral():
            return False
        for i in range(n):
            D = self(self.model.basis_divisor(i))
            for j in range(n):
                c = CurveClass(self.model, tuple(row[j] for row in cm))
                if pairing(D, c) != (self.model.signs()[i] if i == j else 0):
                    return False
        return True

    def fixes(self, D: DivisorClass) -> bool:
        return self(D) == D

    def images(self) -> list:
        return [self(self.model.basis_divisor(i)) for i in range(self.model.rank)]

    def block(self, rows: Iterable[int], cols: Iterable[int]) -> tuple:
        rows, cols = list(rows), list(cols)
        return tuple(tuple(self.divisor_matrix[r][c] for c in cols) for r in rows)

    def to_json(self) -> dict:
        enc = lambda m: [[to_str(x) for x in row] for row in m]
        return {
            "model": self.model.name,
            "label": self.label,
            "basis": self.model.divisor_basis(),
            "divisor_matrix": enc(self.divisor_matrix),
            "curve_matrix": enc(self.curve_matrix),
        }

    def describe(self) -> list:
        """Non-trivial images as strings, e.g. ``'Hr -> Hq+Hr-E7-E8'``."""
        out = []
        names = self.model.divisor_basis()
        for name, img in zip(names, self.images()):
            if img != self.model.divisor(name):
                out.append(f"{name} -> {img}")
        return out


def map_from_json(data: dict) -> BiLatticeMap:
    model = get_model(data["model"])
    m = tuple(tuple(rational(x) for x in row) for row in data["divisor_matrix"])
    return BiLatticeMap(model, m, data.get("label", ""))


# -- generator tables -------------------------------------------------------------

GENERATORS = ("wk0", "wk1", "wkI", "wt1", "wt2", "wa0", "s1", "s2", "s3", "s4")
DISPLAY_NAMES = {
    "wk0": "w_kappa0", "wk1": "w_kappa1", "wkI": "w_kappaInf", "wt1": "w_theta1",
    "wt2": "w_theta2", "wa0": "w_alpha0", "s1": "sigma1", "s2": "sigma2", "s3": "sigma3", "s4": "sigma4",
}
_ALIASES = {
    "w_kappa0": "wk0", "w_kappa1": "wk1", "w_kappainf": "wkI", "w_kappa_inf": "wkI", "wki": "wkI",
    "w_theta1": "wt1", "w_theta2": "wt2", "w_alpha0": "wa0",
    "sigma1": "s1", "sigma2": "s2", "sigma3": "s3", "sigma4": "s4",
}


def canonical_name(name: str) -> str:
    if name in GENERATORS:
        return name
    key = name.strip().lower()
    if key in _ALIASES:
        return _ALIASES[key]
    for g in GENERATORS:
        if g.lower() == key:
            return g
    raise ValueError(f"unknown generator {name!r}; expected one of {', '.join(GENERATORS)}")


# "X <> Y": basis element X maps to Y; when Y is itself a basis element the
# swap is mutual. Unlisted basis elements are fixed.
TABLE_X10 = {
    "wk0": ["Hr <> Hq+Hr-E{9,10}", "E9 <> Hq-E10", "E10 <> Hq-E9"],
    "wk1": ["Hr <> Hq+Hr-E{7,8}", "E7 <> Hq-E8", "E8 <> Hq-E7"],
    "wkI": ["E5 <> E6"],
    "wt1": ["E1 <> E2"],
    "wt2": ["E3 <> E4"],
    "s1": ["E7 <> E9", "E8 <> E10"],
    "s2": ["Hr <> Hq+Hr-E{5,7}", "E5 <> Hq-E7", "E6 <> E8", "E7 <> Hq-E5"],
    "s3": ["E1 <> E5", "E2 <> E6"],
    "s4": ["E1 <> E3", "E2 <> E4"],
}

TABLE_X21 = {
    "wk0": ["Hr <> Hq+Hr-E{9,10,15,17,19,20}", "E9 <> Hq-E{10,15,17,19,20}", "E10 <> Hq-E{9,15,17,19,20}"],
    "wk1": ["Hr <> Hq+Hr-E{7,8,14,16,18,20}", "E7 <> Hq-E{8,14,16,18,20}", "E8 <> Hq-E{7,14,16,18,20}"],
    "wkI": ["E5 <> E6"],
    "wt1": ["E1 <> E2"],
    "wt2": ["E3 <> E4"],
    "wa0": [
        "Hq <> 2Hq+2Hr-E{1,2,3,4,5,6,11,12,13,14,15,16,17,18,19}",
        "E1 <> Hr-E{1,14,15}", "E2 <> Hr-E{2,14,15}", "E3 <> Hr-E{3,16,17}",
        "E4 <> Hr-E{4,16,17}", "E5 <> Hr-E{5,18,19}", "E6 <> Hr-E{6,18,19}",
        "E7 <> E9", "E8 <> E10",
        "E11 <> Hq-E{1,2,12,13,14,15}", "E12 <> Hq-E{3,4,11,13,16,17}",
        "E13 <> Hq-E{5,6,11,12,18,19}", "E20 <> E21",
    ],
    "s1": ["E7 <> E9", "E8 <> E10", "E14 <> E15", "E16 <> E17", "E18 <> E19"],
    "s2": [
        "Hr <> Hq+Hr-E{5,7,14,16,18,19}", "E5 <> Hq-E{7,14,16,18,20}", "E6 <> E8",
        "E7 <> Hq-E{5,11,12,18,19}", "E11 <> E16", "E12 <> E14", "E19 <> E20",
    ],
    "s3": ["E1 <> E5", "E2 <> E6", "E11 <> E13", "E14 <> E18", "E15 <> E19"],
    "s4": ["E1 <> E3", "E2 <> E4", "E11 <> E12", "E14 <> E16", "E15 <> E17"],
}

TABLES = {"X10": TABLE_X10, "X21": TABLE_X21}

# Entries the printed X21 table leaves out although the geometric pullback
# computes them (w_a0 sends C14, C16, C18 to C15, C17, C19 and back).
# Applied only on request; the default table is the printed one.
ERRATA_X21 = {
    "wa0": ["E14 <> E15", "E16 <> E17", "E18 <> E19"],
}
ERRATA = {"X21": ERRATA_X21}


def table_entries(g: str, model, errata: bool = False) -> list:
    model = get_model(model)
    g = canonical_name(g)
    if model.name not in TABLES:
        raise ValueError(f"no table for model {model.name}")
    table = TABLES[model.name]
    if g not in table:
        raise ValueError(f"{DISPLAY_NAMES[g]} has no lattice action on {model.name} (it is not a "
                         f"pseudo-isomorphism there); use X21")
    if errata:
        return table[g] + ERRATA.get(model.name, {}).get(g, [])
    return table[g]


def table_action(g: str, model, errata: bool = False) -> BiLatticeMap:
    """Lattice action read off the printed table (``errata=True`` adds ERRATA entries)."""
    model = get_model(model)
    entries = table_entries(g, model, errata)
    names = model.divisor_basis()
    images = {n: model.divisor(n) for n in names}
    for entry in entries:
        lhs, rhs = (s.strip() for s in entry.split("<>"))
        if lhs not in images:
            raise ValueError(f"left side of {entry!r} must be a basis element")
        images[lhs] = model.divisor(rhs)
        if rhs in images:
            images[rhs] = model.divisor(lhs)
    return BiLatticeMap.from_images(model, [images[n] for n in names], canonical_name(g))


def parse_word(word) -> list:
    if isinstance(word, str):
        parts = [p for p in word.replace(" ", "").split(",") if p]
    else:
        parts = list(word)
    return [canonical_name(p) for p in parts]


CONVENTIONS = ("right_first", "left_first")


def compose_maps(maps: Sequence[BiLatticeMap], convention: str = "right_first") -> BiLatticeMap:
    """Lattice action of the word ``maps[0] maps[1] ... maps[-1]``.

    ``right_first``: the rightmost letter acts first (function composition).
    ``left_first``: the leftmost letter acts first.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if not maps:
        raise ValueError("empty word needs a model; use BiLatticeMap.identity")
    model = maps[0].model
    order = list(reversed(maps)) if convention == "right_first" else list(maps)
    out = BiLatticeMap.identity(model)
    for m in order:
        if m.model != model:
            raise ValueError("model mismatch in composition")
        out = out.then(m)
    return BiLatticeMap(model, out.divisor_matrix, "")


def word_action(word, model, convention: str = "right_first") -> BiLatticeMap:
    model = get_model(model)
    names = parse_word(word)
    if not names:
        return BiLatticeMap.identity(model)
    out = compose_maps([table_action(g, model) for g in names], convention)
    return BiLatticeMap(model, out.divisor_matrix, ",".join(names))


# -- root datum -------------------------------------------------------------------


@dataclass(frozen=True)
class RootDatum:
    model: Model
    roots: tuple
    coroots: tuple
    delta: DivisorClass
    delta_check: CurveClass

    def cartan(self) -> tuple:
        return tuple(tuple(pairing(a, c) for c in self.coroots) for a in self.roots)


ROOT_TEXT = (
    "1/2Hq+Hr-E1-E3-E5",
    "Hq-E9-E10",
    "Hq-E7-E8",
    "E5-E6",
    "E1-E2",
    "E3-E4",
)
COROOT_TEXT = (
    "hq-e1-e3-e5",
    "hr-e9-e10",
    "hr-e7-e8",
    "e5-e6",
    "e1-e2",
    "e3-e4",
)
# which generator realizes each simple reflection w_{alpha_i}, i = 1..5
REFLECTION_GENERATORS = {1: "wk0", 2: "wk1", 3: "wkI", 4: "wt1", 5: "wt2"}
STATED_SIGMA_TRANSPOSITIONS = {1: (1, 2), 2: (2, 3), 3: (3, 4), 4: (4, 5)}


def root_datum() -> RootDatum:
    roots = tuple(X10.divisor(t) for t in ROOT_TEXT)
    coroots = tuple(X10.curve(t) for t in COROOT_TEXT)
    delta = roots[0] * 2
    for a in roots[1:]:
        delta = delta + a
    delta_check = coroots[0] * 2
    for c in coroots[1:]:
        delta_check = delta_check + c
    return RootDatum(X10, roots, coroots, delta, delta_check)


def _reflection(i: int, D: DivisorClass) -> DivisorClass:
    rd = root_datum()
    a, c = rd.roots[i], rd.coroots[i]
    return D - a * (2 * pairing(D, c) / pairing(a, c))


def reflect(i: int, x):
    """Simple reflection ``w_{alpha_i}`` for i = 1..5 on a divisor or curve class."""
    if i not in range(1, 6):
        raise ValueError("reflect takes i in 1..5; alpha_0 does not give an integral reflection "
                         "(see reflect_alpha0_demo)")
    if x.model != X10:
        raise ValueError("root datum lives on X10")
    if isinstance(x, DivisorClass):
        return _reflection(i, x)
    if isinstance(x, CurveClass):
        rd = root_datum()
        a, c = rd.roots[i], rd.coroots[i]
        return x - c * (2 * pairing(a, x) / pairing(a, c))
    raise TypeError("expected a DivisorClass or CurveClass")


def reflect_alpha0_demo() -> DivisorClass:
    """The alpha_0 reflection formula applied to Hq; the result is not integral."""
    return _reflection(0, X10.divisor("Hq"))


def reflection_map(i: int) -> BiLatticeMap:
    return BiLatticeMap.from_images(X10, [reflect(i, X10.basis_divisor(j)) for j in range(X10.rank)], f"r{i}")


KAC_FORMS = ("kac", "literal")


def kac_translate(i: int, D: DivisorClass, form: str = "kac") -> DivisorClass:
    """Kac translation by ``alpha_i`` on a divisor class of X10.

    ``form="kac"`` is D + <D,dc> a - (<D,ac> + <a,ac>/2 <D,dc>) delta, the
    general formula; for the norm -2 roots alpha_1..alpha_5 it agrees with
    D + <D,dc> a + <D, dc - ac> delta, which ``form="literal"`` applies to
    every i (including i = 0).
    """
    if i not in range(6):
        raise ValueError("root index must be in 0..5")
    if D.model != X10:
        raise ValueError("root datum lives on X10")
    rd = root_datum()
    a, ac = rd.roots[i], rd.coroots[i]
    dd = pairing(D, rd.delta_check)
    if form == "literal":
        k = pairing(D, rd.delta_check - ac)
    elif form == "kac":
        k = -(pairing(D, ac) + pairing(a, ac) / 2 * dd)
    else:
        raise ValueError(f"unknown form {form!r}")
    return D + a * dd + rd.delta * k


def translation_map(i: int, form: str = "kac") -> BiLatticeMap:
    return BiLatticeMap.from_images(
        X10, [kac_translate(i, X10.basis_divisor(j), form) for j in range(X10.rank)], f"T{i}")


def translation_on_roots(i: int, form: str = "kac") -> tuple:
    """Images of alpha_0..alpha_5 under T_{alpha_i} (i = 1..5) or T_{alpha_0}^2 (i = 0)."""
    t = translation_map(i, form)
    if i == 0:
        t = t.then(t)
    return tuple(t(a) for a in root_datum().roots)


def root_shift_vector(i: int, form: str = "kac") -> tuple:
    """Coefficients c_j with image(alpha_j) = alpha_j + c_j delta."""
    rd = root_datum()
    out = []
    for a, img in zip(rd.roots, translation_on_roots(i, form)):
        diff = img - a
        # diff must be a multiple of delta; read the ratio from the Hq slot
        c = diff.coeffs[0] / rd.delta.coeffs[0]
        if diff != rd.delta * c:
            raise ArithmeticError(f"image of a root is not a delta-shift: {img}")
        out.append(c)
    return tuple(out)


def sigma_root_permutation(j: int) -> dict:
    """Permutation of root indices 1..5 induced by sigma_j's table action on X10."""
    if j not in range(1, 5):
        raise ValueError("sigma index must be in 1..4")
    m = table_action(f"s{j}", X10)
    roots = root_datum().roots
    perm = {}
    for i in range(1, 6):
        img = m(roots[i])
        hit = [k for k in range(1, 6) if roots[k] == img]
        if not hit:
            raise ArithmeticError(f"sigma{j} does not permute alpha_{i}: image {img}")
        perm[i] = hit[0]
    return perm


VERTICAL_LEAF_TEXT = (
    ("Q1=0", "Hq-E1-E2"),
    ("Q2=0", "Hq-E3-E4"),
    ("Q0=0", "Hq-E5-E6"),
    ("R0=0", "Hr-E7-E9"),
    ("R0=Q12=A12=0", "E7-E8"),
    ("R0=Q12s=A12s=0", "E9-E10"),
)


def vertical_leaves() -> list:
    return [(label, X10.divisor(text)) for label, text in VERTICAL_LEAF_TEXT]


def resolved_t1_word(slot: str) -> list:
    """The letters of (w_t2 w_t1 w_? w_k0 w_a0)^2 with ``slot`` in the third place."""
    base = ["wt2", "wt1", canonical_name(slot), "wk0", "wa0"]
    return base * 2


def degree_sequence(m: BiLatticeMap, n_max: int, start: str = "Hq", against: str = "hq") -> list:
    D = m.model.divisor(start)
    c = m.model.curve(against)
    out = []
    for _ in range(n_max):
        D = m(D)
        out.append(pairing(D, c))
    return out


def braid_report() -> dict:
    """Order of sigma_j sigma_{j+1} on X10 (informational only)."""
    out = {}
    for j in range(1, 4):
        m = word_action([f"s{j}", f"s{j + 1}"], X10)
        p = m
        order = 1
        while not p.is_identity() and order < 24:
            p = p.then(m)
            order += 1
        out[f"s{j}s{j + 1}"] = order
    return out
