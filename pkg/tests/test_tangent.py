from fractions import Fraction

import pytest

from classinv.catalog import get_case
from classinv.groebner import Ideal, ideal_product, normal_form
from classinv.poly import parse_poly
from classinv.tangent import (
    check_generates,
    check_relation,
    evaluate_pairing,
    rank_lower_bound,
    relation_combination,
    tangent_bounds,
    tangent_report,
    value_tuple_rank,
)


def span_dimension(polys):
    monos = sorted({m for p in polys for m in p.terms})
    rows = [[p.terms.get(m, Fraction(0)) for m in monos] for p in polys]
    rank = 0
    for c in range(len(monos)):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][c]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


class TestGenerates:
    def test_catalogued_sets_generate(self):
        for name in ("gl2", "sp4", "o2"):
            case = get_case(name)
            assert check_generates(case.tangent.generators, case.ideal("I"))

    def test_declared_module_dimensions_match_spans(self):
        # the generator lists may carry one linear dependency (the trace-type
        # invariant appears on both sides); the declared dimension is the span
        for name, want in [("gl2", 7), ("gl3", 29), ("o2", 5), ("sp4", 11), ("so3-I2", 20)]:
            case = get_case(name)
            polys = [g for _, g in case.tangent.generators]
            assert span_dimension(polys) == want == case.tangent.dim_module, name

    def test_dropping_a_generator_fails(self):
        case = get_case("gl2")
        gens = [g for g in case.tangent.generators if g[0] != "h1"]
        assert not check_generates(gens, case.ideal("I"))


class TestRelations:
    def test_all_catalogued_relations_pass(self):
        for name in ("gl2", "gl3", "o2", "so3-I2", "sp4"):
            case = get_case(name)
            ideal_name = "I2" if "I2" in case.ideals and "I" not in case.ideals else "I"
            ideal = case.ideal(ideal_name)
            square = ideal_product(ideal, ideal)
            for rel_name, rel in case.tangent.relations:
                assert check_relation(rel, case.tangent.generators, ideal, square), (
                    name,
                    rel_name,
                )

    def test_perturbed_relation_fails(self):
        case = get_case("gl2")
        ideal = case.ideal("I")
        name, rel = case.tangent.relations[0]
        bad = dict(rel)
        key = next(iter(bad))
        bad[key] = bad[key] + case.ring.one()
        assert not check_relation(bad, case.tangent.generators, ideal)

    def test_most_relations_are_identically_zero(self):
        # the rank-one checks: the displayed relations combine to zero on the nose
        case = get_case("sp4")
        for _, rel in case.tangent.relations:
            assert relation_combination(rel, case.tangent.generators).is_zero()


class TestPairing:
    def test_gl2_displayed_values(self):
        case = get_case("gl2")
        ideal = case.ideal("I")
        morphs = dict(case.tangent.morphisms)
        rels = dict(case.tangent.relations)
        r = case.ring
        assert evaluate_pairing(morphs["psi1"], rels["r1"], ideal) == -parse_poly("y21", r)
        assert evaluate_pairing(morphs["psi3"], rels["r2"], ideal) == -parse_poly("x11", r)
        assert evaluate_pairing(morphs["psi4"], rels["r3"], ideal) == parse_poly("x11", r)

    def test_sp4_displayed_pattern(self):
        case = get_case("sp4")
        ideal = case.ideal("I")
        morphs = dict(case.tangent.morphisms)
        rels = dict(case.tangent.relations)
        r = case.ring
        row = [
            evaluate_pairing(morphs[f"psi{i}"], rels["r1"], ideal) for i in range(1, 6)
        ]
        want = [parse_poly("z4", r), -parse_poly("y4", r), r.zero(),
                parse_poly("x4", r), r.zero()]
        assert row == want

    def test_bilinearity(self):
        case = get_case("o2")
        ideal = case.ideal("I")
        (n1, m1), (n2, m2) = case.tangent.morphisms[:2]
        _, rel = case.tangent.relations[0]
        combined = {
            k: m1.get(k, case.ring.zero()) * 2 + m2.get(k, case.ring.zero()) * 3
            for k in set(m1) | set(m2)
        }
        lhs = evaluate_pairing(combined, rel, ideal)
        rhs = normal_form(
            evaluate_pairing(m1, rel, ideal) * 2 + evaluate_pairing(m2, rel, ideal) * 3,
            ideal,
        )
        assert lhs == rhs

    def test_zero_morphism_rank(self):
        case = get_case("o2")
        ideal = case.ideal("I")
        zero_morph = [("z", {})]
        assert rank_lower_bound(zero_morph, case.tangent.relations, ideal) == 0


class TestRanks:
    def test_catalogued_ranks(self):
        for name, want in [("gl2", 3), ("o2", 2), ("sp4", 5), ("so3-I2", 12)]:
            case = get_case(name)
            ideal_name = "I2" if "I2" in case.ideals and "I" not in case.ideals else "I"
            ideal = case.ideal(ideal_name)
            got = rank_lower_bound(case.tangent.morphisms, case.tangent.relations, ideal)
            assert got == want, name

    def test_rank_monotone_in_rows_and_columns(self):
        case = get_case("so3-I2")
        ideal = case.ideal("I2")
        data = case.tangent
        full = rank_lower_bound(data.morphisms, data.relations, ideal)
        fewer_rows = rank_lower_bound(data.morphisms[:8], data.relations, ideal)
        fewer_cols = rank_lower_bound(data.morphisms, data.relations[:4], ideal)
        assert fewer_rows <= full and fewer_cols <= full


class TestBounds:
    def test_concluded_dimensions(self):
        assert tangent_bounds("gl2") == (4, 4)
        assert tangent_bounds("o2") == (3, 3)
        assert tangent_bounds("sp4") == (6, 6)
        assert tangent_bounds("so3-I2") == (8, 8)
        assert tangent_bounds("so3-I1") == (6, 6)
        assert tangent_bounds("o3-I2") == (7, 8)

    def test_o3_independence_rank(self):
        rep = tangent_report("o3-I2")
        assert rep.rank == 7 == rep.expected_rank

    def test_report_contents(self):
        rep = tangent_report("sp4")
        assert rep.generates is True
        assert all(ok for _, ok in rep.relation_results)
        assert rep.rank == 5


class TestGl3Heavy:
    def test_gl3_rank_and_bounds(self):
        case = get_case("gl3")
        ideal = case.ideal("I")
        got = rank_lower_bound(case.tangent.morphisms, case.tangent.relations, ideal)
        assert got == 17
        assert tangent_bounds("gl3") == (12, 12)

    def test_gl3_all_nineteen_morphisms_stay_at_seventeen(self):
        # adding the two remaining natural morphisms cannot exceed the
        # seventeen bound forced by the twelve-dimensional kernel
        case = get_case("gl3")
        ideal = case.ideal("I")
        extra = list(case.tangent.morphisms)
        extra.append(("psi3", {"f3": case.ring.one()}))
        got = rank_lower_bound(extra, case.tangent.relations, ideal)
        assert got == 17
