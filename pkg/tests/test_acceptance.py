"""Acceptance criteria, all at exact (zero) tolerance.

Each criterion prints one PASS/FAIL line.  Run standalone with
``python tests/test_acceptance.py`` for just the eleven lines.
"""
import random

import pytest

from garnier import bmap, ham
from garnier import lattice as L
from garnier.geom import contraction_witnesses, matrix_of, prop1_intersection_suite, pseudo_iso_certificate
from garnier.lattice import X10, X21

X10_GENERATORS = [g for g in L.GENERATORS if g in L.TABLES["X10"]]
X21_GENERATORS = [g for g in L.GENERATORS if g in L.TABLES["X21"]]
_MATRICES = {}


def _matrix(g, model):
    key = (g, model)
    if key not in _MATRICES:
        _MATRICES[key] = matrix_of(g, model)
    return _MATRICES[key]


def _table_reproduction(model, gens):
    bad = []
    for g in gens:
        geo, tab = _matrix(g, model), L.table_action(g, model)
        if geo != tab:
            n = len([1 for r in range(geo.model.rank) for c in range(geo.model.rank)
                     if geo.divisor_matrix[r][c] != tab.divisor_matrix[r][c]])
            note = f"{g}: {n} cells differ"
            if g in L.ERRATA.get(model.name, {}):
                note += (f"; computed matrix equals the table plus {L.ERRATA[model.name][g]}: "
                         f"{geo == L.table_action(g, model, errata=True)}")
            bad.append(note)
    return not bad, f"{len(gens) - len(bad)}/{len(gens)} generators equal" + ("; " + "; ".join(bad) if bad else "")


def c01_tables_x10():
    return _table_reproduction(X10, X10_GENERATORS)


def c02_tables_x21():
    return _table_reproduction(X21, X21_GENERATORS)


def c03_intersection_lattice():
    res = prop1_intersection_suite(X10, random.Random(3))
    K = L.anticanonical(X10)
    want = X10.divisor("3Hq+3Hr-E{1,2,3,4,5,6,8,10}-2E7-2E9")
    ok = res.passed and X10.rank == 12 and K == want
    return ok, f"rank {X10.rank}; {res.detail}"


def c04_cartan():
    C = L.root_datum().cartan()
    bad = []
    for i in range(6):
        for j in range(6):
            want = (L.rational("-5/2") if i == 0 else -2) if i == j else (1 if 0 in (i, j) else 0)
            if C[i][j] != want:
                bad.append((i, j, str(C[i][j])))
    return not bad, f"36 pairings, mismatches {bad}"


def _slot_rows():
    rows = []
    t1 = L.translation_map(1)
    for slot in ("wk1", "wkI"):
        for conv in L.CONVENTIONS:
            T = L.compose_maps([L.table_action(g, X21) for g in L.resolved_t1_word(slot)], conv)
            fixes = all(T(X21.basis_divisor(i)) == X21.basis_divisor(i) for i in range(X10.rank, X21.rank))
            block = L.BiLatticeMap(X10, T.block(range(X10.rank), range(X10.rank)))
            rows.append((slot, conv, fixes, block == t1, T))
    return rows


def c05_translation_word():
    rows = _slot_rows()
    a_slots = sorted({slot for slot, _, fixes, _, _ in rows if fixes})
    part_a = len(a_slots) == 1
    winners = [(slot, conv) for slot, conv, fixes, is_t1, _ in rows if fixes and is_t1]
    part_b = len(winners) == 1
    part_c = (L.root_shift_vector(1) == (-1, 2, 0, 0, 0, 0)
              and L.root_shift_vector(0) == (5, -2, -2, -2, -2, -2))
    t0 = L.translation_map(0)
    prod = L.BiLatticeMap.identity(X10)
    for i in range(1, 6):
        prod = prod.then(L.translation_map(i).inverse())
    part_d = t0.then(t0) == prod
    detail = (f"(a) {part_a}: slots fixing E11..E21 = {a_slots} (needs exactly one); "
              f"(b) {part_b}: block equals T_alpha1 for {winners}; (c) {part_c}; (d) {part_d}")
    return part_a and part_b and part_c and part_d, detail


def c06_certificates():
    bad = []
    for model, gens in (("X10", X10_GENERATORS), ("X21", X21_GENERATORS)):
        for g in gens:
            cert = pseudo_iso_certificate(g, model)
            if cert.verdict != "pass":
                bad.append(f"{model} {g}")
    cert = pseudo_iso_certificate("wa0", X10)
    wit = contraction_witnesses("wa0", X10)
    hit = any(w["divisor"] == "Q0=0" and w["image"] == "Q1=Q2=0" for w in wit)
    ok = not bad and cert.verdict == "fail" and hit
    return ok, (f"{len(X10_GENERATORS) + len(X21_GENERATORS) - len(bad)}/"
                f"{len(X10_GENERATORS) + len(X21_GENERATORS)} certificates pass{bad or ''}; "
                f"w_alpha0 on X10 verdict {cert.verdict}, witness Q0=0 -> Q1=Q2=0 found: {hit}")


def c07_delta():
    rd = L.root_datum()
    ok = (rd.delta == X10.divisor("3Hq+2Hr-E{1,2,3,4,5,6,7,8,9,10}")
          and rd.delta_check == X10.curve("2hq+2hr-e{1,2,3,4,5,6,7,8,9,10}")
          and L.pairing(rd.delta, rd.delta_check) == 0)
    # realized translations: the T_alpha1 word on X21 and its sigma conjugates
    delta21 = L.DivisorClass(X21, tuple(rd.delta.coeffs) + (L.rational(0),) * (X21.rank - X10.rank))
    realized = {"T1": T for slot, conv, fixes, is_t1, T in _slot_rows() if fixes and is_t1}
    for j in range(1, 5):
        s = L.table_action(f"s{j}", X21)
        for name, T in list(realized.items()):
            realized.setdefault(f"s{j}{name}s{j}", s.then(T).then(s))
    moved = [n for n, T in realized.items() if T(delta21) != delta21]
    kac = [i for i in range(6) if L.translation_map(i)(rd.delta) != rd.delta]
    ok = ok and bool(realized) and not moved and not kac
    return ok, f"{len(realized)} realized translations checked, moved {moved}; Kac maps moving delta {kac}"


def c08_generator_algebra():
    bad = []
    for g in L.GENERATORS:
        rng = random.Random(f"acceptance:{g}")
        for res in (bmap.involution_check(g, rng, 100), bmap.consistency_qp_qr(g, rng, 5),
                    bmap.genericity_check(g, rng, 100)):
            if not res.passed:
                bad.append(f"{res.name}: {res.detail}")
    return not bad, f"{3 * len(L.GENERATORS) - len(bad)}/{3 * len(L.GENERATORS)} checks pass{bad or ''}"


def c09_hamiltonian():
    notes = []
    ident = ham.hvi_identity_check(random.Random("acceptance:hvi"), 20)
    fails = []
    for g in ham.SYMMETRY_GENERATORS:
        res = ham.symmetry_check(g, random.Random(f"acceptance:sym:{g}"), 20)
        if not res.passed:
            slice1 = ham.symmetry_check(g, random.Random(f"acceptance:sym1:{g}"), 20, d=1).passed
            weighted = ham.symmetry_check(g, random.Random(f"acceptance:symd:{g}"), 20, s_weight="d").passed
            fails.append(g)
            notes.append(f"{g} residual nonzero for generic d ({res.detail}); exact on d=1: {slice1}; "
                         f"exact with time weighted by d: {weighted}")
    swap = ham.swap_symmetry_check(random.Random("acceptance:swap"), 20)
    ok = ident.passed and not fails and swap.passed
    return ok, (f"decomposition {ident.passed}; symmetry exact for "
                f"{len(ham.SYMMETRY_GENERATORS) - len(fails)}/{len(ham.SYMMETRY_GENERATORS)}; swap {swap.passed}"
                + ("; " + "; ".join(notes) if notes else ""))


def c10_vertical_leaves():
    rd = L.root_datum()
    bad = [label for label, D in L.vertical_leaves() if any(L.pairing(D, c) != 0 for c in rd.coroots)]
    return not bad and len(L.vertical_leaves()) == 6, f"6 classes x 6 coroots, nonzero for {bad}"


def c11_degree_growth():
    seq = L.degree_sequence(L.translation_map(1), 20)
    d2 = {seq[n + 2] - 2 * seq[n + 1] + seq[n] for n in range(18)}
    return len(d2) == 1 and 0 not in d2, f"second differences {sorted(str(x) for x in d2)}, first terms {[str(x) for x in seq[:4]]}"


CRITERIA = [
    (1, "X10 lattice actions reproduced from the geometry", c01_tables_x10),
    (2, "X21 lattice actions reproduced from the geometry", c02_tables_x21),
    (3, "intersection lattice and anticanonical class", c03_intersection_lattice),
    (4, "Cartan pairings", c04_cartan),
    (5, "translation word, root shifts and product identity", c05_translation_word),
    (6, "pseudo-isomorphism certificates", c06_certificates),
    (7, "delta identities", c07_delta),
    (8, "generator algebra", c08_generator_algebra),
    (9, "Hamiltonian suite", c09_hamiltonian),
    (10, "vertical leaves", c10_vertical_leaves),
    (11, "quadratic degree growth", c11_degree_growth),
]


def _line(num, title, ok, detail):
    return f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_acceptance(num, title, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    for num, title, fn in CRITERIA:
        print(_line(num, title, *fn()), flush=True)
