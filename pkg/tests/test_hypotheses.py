from fractions import Fraction

import pytest

from plimpton.hypotheses import (
    HYPOTHESIS_TAGS,
    LOWER_EXTENSION_PRINTED,
    PLIMPTON_PAIRS_PRINTED,
    TABLE1_PQ,
    UPPER_EXTENSION_PRINTED,
    Hypothesis,
    extend_phillips,
    extension_corrections,
    generate,
    link_to_standard,
    phillips_pairs,
    plimpton_pair_corrections,
    standard_table,
)
from plimpton.pairs import ReciprocalPair, full_mult10_list
from plimpton.sexagesimal import factor_2_3_5, render_sex


def _t_set(tag, **kwargs):
    return {r.pair.T.mantissa for r in generate(Hypothesis(tag, **kwargs))}


PHILLIPS_T = [r.pair.T.mantissa for r in generate("phillips")]


class TestHypothesisCounts:
    @pytest.mark.parametrize("tag,count", [
        ("ns1945", 15), ("bruins1949", 15), ("price1964", 14),
        ("buck1980", 15), ("friberg1981", 15), ("friberg2007", 38),
        ("phillips", 15),
    ])
    def test_row_counts(self, tag, count):
        assert len(generate(tag)) == count

    def test_unknown_tag_rejected(self):
        with pytest.raises(ValueError):
            Hypothesis("kepler1619")


class TestAgreements:
    def test_friberg2007_first_15_are_phillips(self):
        first15 = [r.pair.T.mantissa for r in generate("friberg2007")][:15]
        assert first15 == PHILLIPS_T

    def test_friberg1981_equals_phillips(self):
        assert [r.pair.T.mantissa for r in generate("friberg1981")] == PHILLIPS_T

    def test_bruins_equals_phillips(self):
        assert [r.pair.T.mantissa for r in generate("bruins1949")] == PHILLIPS_T

    def test_price_misses_only_the_2_1_row(self):
        # Q > 1 excludes the (P, Q) = (2, 1) parameterization of row 11
        missing = set(PHILLIPS_T) - _t_set("price1964")
        assert missing == {2}
        assert _t_set("price1964") < set(PHILLIPS_T)

    def test_price_text_variant_same_set(self):
        # the misprinted bound 2;25 covers the same regular ratios as 12/5
        assert _t_set("price1964", price_g_from_text=True) == _t_set("price1964")

    def test_buck_differs_from_table1_in_one_swap(self):
        table1_t = {r.pair.T.mantissa for r in generate("ns1945")}
        buck_t = _t_set("buck1980")
        only_buck = buck_t - table1_t
        only_table1 = table1_t - buck_t
        # 16/9 = 1 46 40 enters (below the 1;48 cut-off but above sqrt(3));
        # 125/54 = 2 18 53 20 leaves (it needs P = 125 >= 100)
        assert only_buck == {6400}
        assert only_table1 == {500000}
        assert render_sex(ReciprocalPair.from_T_mantissa(6400).T.value) == "1 46 40"

    def test_ns1945_uses_raw_formula_values(self):
        rows = generate("ns1945")
        assert [(TABLE1_PQ[i]) for i in range(15)] == TABLE1_PQ
        by_n = {r.n: r for r in rows}
        # row 15: (P, Q) = (9, 5) gives the unreduced (56, 106)
        assert (by_n[15].s, by_n[15].d) == (56, 106)
        assert not by_n[15].reduced
        # row 11: (2, 1) gives the already-coprime (3, 5)
        assert (by_n[11].s, by_n[11].d) == (3, 5)
        assert (by_n[1].s, by_n[1].d) == (119, 169)

    def test_table1_order_matches_phillips_order(self):
        assert [r.pair.T.mantissa for r in generate("ns1945")] == PHILLIPS_T


class TestPrintedFifteen:
    def test_printed_table_matches_after_logged_correction(self):
        corrections = plimpton_pair_corrections()
        assert [(c.label, c.column, c.printed, c.computed)
                for c in corrections] == [("12", "T", "1 55 2", "1 55 12")]
        corrected = {(c.label, c.column): c.computed for c in corrections}
        for (label, t_text, tbar_text, _), pair in zip(
                PLIMPTON_PAIRS_PRINTED, phillips_pairs()):
            want_t = corrected.get((label, "T"), t_text)
            want_tbar = corrected.get((label, "Tbar"), tbar_text)
            assert render_sex(pair.T.value) == want_t
            assert render_sex(pair.Tbar.value) == want_tbar


class TestExtensions:
    def test_counts_and_boundary_rows(self):
        lower = extend_phillips("lower")
        upper = extend_phillips("upper")
        assert len(lower) == 24
        assert len(upper) == 28
        assert (lower[-1].label, str(lower[-1].pair)) == ("-1", "(2 30, 24)")
        assert (upper[0].label, render_sex(upper[0].pair.T.value)) == \
            ("16", "1 46 40")
        assert render_sex(upper[-1].pair.Tbar.value) == "59 15 33 20"

    def test_labels_match_printed_tables(self):
        assert [r.label for r in extend_phillips("lower")] == \
            [label for label, *_ in LOWER_EXTENSION_PRINTED]
        assert [r.label for r in extend_phillips("upper")] == \
            [label for label, *_ in UPPER_EXTENSION_PRINTED]

    def test_corrections_are_exactly_the_known_misprints(self):
        lower = [(c.table, c.label, c.column, c.computed)
                 for c in extension_corrections("lower")]
        assert lower == [
            ("extension-lower", "-14", "Tbar", "18 31 06 40"),
            ("extension-lower(variant)", "-17", "T", "3 28 20"),
        ]
        upper = [(c.label, c.column, c.computed)
                 for c in extension_corrections("upper")]
        assert upper == [("33", "T", "1 11 06 40")]

    def test_extensions_partition_the_full_list(self):
        full = {p.T.mantissa for p in full_mult10_list()}
        fifteen = set(PHILLIPS_T)
        lower = {r.pair.T.mantissa for r in extend_phillips("lower")}
        upper = {r.pair.T.mantissa for r in extend_phillips("upper")}
        assert lower & fifteen == set()
        assert upper & fifteen == set()
        assert lower & upper == set()
        assert lower | upper | fifteen <= full

    def test_interpolated_rows_connect_to_numbered_neighbors(self):
        # every roman-labeled pair is a doubling/halving (or the 9-fold
        # jump for label v) of some numerically labeled pair's member
        numbered = set(PHILLIPS_T)
        for side in ("lower", "upper"):
            for row in extend_phillips(side):
                if row.label.lstrip("-").isdigit():
                    numbered.add(row.pair.T.mantissa)
                    numbered.add(row.pair.Tbar.mantissa)
        def normalized(m):
            while m % 60 == 0:
                m //= 60
            return m
        for side in ("lower", "upper"):
            for row in extend_phillips(side):
                if row.label.lstrip("-").isdigit():
                    continue
                t = row.pair.T.mantissa
                related = {normalized(t * k) for k in (2, 9)}
                related |= {normalized(t * 60**3 // k) for k in (2, 9)
                            if (t * 60**3) % k == 0}
                assert related & numbered, row.label

    def test_bad_side_rejected(self):
        with pytest.raises(ValueError):
            extend_phillips("sideways")


class TestStandardTableAndLinks:
    def test_standard_table_contents(self):
        table = standard_table()
        mantissas = [p.T.mantissa for p in table]
        assert mantissas[0] == 2
        assert mantissas[-1] == 81
        assert 60 not in mantissas and 1 not in mantissas
        assert all(factor_2_3_5(m) for m in mantissas)
        # 21 distinct pair states (n and recip(n) share one state)
        states = {min(p.T.mantissa, p.Tbar.mantissa) for p in table}
        assert len(states) == 21

    def test_in_table_rows(self):
        chains = [link_to_standard(p) for p in phillips_pairs()]
        in_table = [i + 1 for i, c in enumerate(chains) if c.in_table]
        assert in_table == [1, 6, 11, 13]

    def test_chain_replay_reproduces_the_pair(self):
        for p in phillips_pairs():
            chain = link_to_standard(p)
            replayed = chain.replay()
            assert replayed.T.mantissa in (p.T.mantissa, p.Tbar.mantissa)

    def test_known_chains(self):
        by_n = {i + 1: link_to_standard(p)
                for i, p in enumerate(phillips_pairs())}
        assert str(by_n[7]) == "(54, 1 06 40) × (1/25, 25)"
        assert by_n[2].factor_magnitude == 27
        assert by_n[4].factor_magnitude == 125
        assert by_n[8].factor_magnitude == 2
        assert by_n[10].factor_fraction == Fraction(3, 2)
        # ties at one step prefer doubling over tripling or quintupling
        assert by_n[15].factor_fraction == 2
        assert by_n[15].start.T.mantissa == 54

    def test_minimality_against_independent_oracle(self):
        # exponent-lattice oracle: a pair state is the class of its T
        # mantissa modulo the 60-lattice generated by (2, 1, 1)
        def class_key(triple):
            a, b, c = triple
            return (a - 2 * c, b - c)

        std_classes = {}
        for p in standard_table():
            for m in (p.T.mantissa, p.Tbar.mantissa):
                key = class_key(factor_2_3_5(m))
                std_classes.setdefault(key, m)

        deltas = [(da, db, dc)
                  for da in range(-7, 8) for db in range(-7, 8)
                  for dc in range(-7, 8)]

        def oracle_steps(pair):
            target = class_key(factor_2_3_5(pair.T.mantissa))
            if target in std_classes:
                return 0
            best = None
            for key, (sa, sb, sc) in (
                    (k, factor_2_3_5(m)) for k, m in std_classes.items()):
                for da, db, dc in deltas:
                    if class_key((sa + da, sb + db, sc + dc)) == target:
                        w = abs(da) + abs(db) + abs(dc)
                        best = w if best is None else min(best, w)
            return best

        for p in phillips_pairs():
            chain = link_to_standard(p)
            assert chain.steps == oracle_steps(p), str(p)

    def test_start_is_always_in_the_standard_table(self):
        states = {min(p.T.mantissa, p.Tbar.mantissa) for p in standard_table()}
        for p in phillips_pairs():
            chain = link_to_standard(p)
            key = min(chain.start.T.mantissa, chain.start.Tbar.mantissa)
            if chain.in_table:
                continue
            assert key in states
