import itertools

import pytest

from oometric.cyclomatic import (
    BasicBlock,
    ControlFlowGraph,
    DecisionCount,
    SourceUnit,
    attribute_primary_class,
    build_cfg,
    cc_from_cfg,
    cc_of_source,
    count_decision_points,
    strip_noncode,
)
from oometric.classfile import parse_class
from oometric.descriptors import INT, VOID, MethodDescriptor
from oometric.forge import ForgeClass, ForgeMethod, build, random_class
from oometric.opcodes import Category


def _count(text: str) -> DecisionCount:
    return count_decision_points(strip_noncode(text))


# Each entry: (label, snippet, expected cc, expected per-kind counts).
# Counts are hand-derived from the counting rules; `expected cc` = total + 1.
CC_CORPUS = [
    ("empty_class",
     "class A { void m() {} }",
     1, {}),
    ("else_if_chain_with_and",
     "if (a && b) x(); else if (c) y(); else z();",
     4, {"if_count": 2, "and_op_count": 1}),
    ("switch_cases_not_default",
     "switch (k) { case 1: case 2: case 3: break; default: break; }",
     4, {"case_count": 3}),
    ("loops_including_do_while",
     "for (int i = 0; i < n; i++) { while (i > 0) { i--; } } do { n--; } while (n > 0);",
     4, {"for_count": 1, "while_count": 2}),
    ("catch_counted_try_finally_not",
     "try { x(); } catch (A e) { y(); } catch (B e) { z(); } finally { w(); }",
     3, {"catch_count": 2}),
    ("keywords_inside_comments",
     "// if (a) while (b) x();\n/* for case catch && || ?: */\nint x = 0;",
     1, {}),
    ("keywords_inside_literals",
     "String s = \"if (a) && for\"; char c = '?'; char q = 'f';",
     1, {}),
    ("nested_ternary",
     "int r = a ? b : c ? d : e;",
     3, {"ternary_count": 2}),
    ("generic_wildcards_not_ternary",
     "List<?> xs; Map<String, ? extends Number> m; Class<? super Integer> k;",
     1, {}),
    ("keyword_like_identifiers",
     "int iffy = 0; int forEach = whileLoop(catchy); int supercase = 1;",
     1, {}),
    ("boolean_operator_mix",
     "boolean z = a && b || c && d;",
     4, {"and_op_count": 2, "or_op_count": 1}),
    ("ternary_after_paren",
     "int v = (a > b) ? a : b;",
     2, {"ternary_count": 1}),
    ("else_not_counted",
     "if (a) { b(); } else { c(); }",
     2, {"if_count": 1}),
    ("literal_traps_inside_switch",
     "switch (c) { case 'x': s = \"default\"; break; default: break; }",
     2, {"case_count": 1}),
    ("do_while_alone",
     "do { x(); } while (c);",
     2, {"while_count": 1}),
    ("package_and_empty_type",
     "package p; class A {}",
     1, {}),
]


class TestCountingRules:
    @pytest.mark.parametrize(
        "snippet, cc", [(s, cc) for _, s, cc, _ in CC_CORPUS],
        ids=[label for label, *_ in CC_CORPUS],
    )
    def test_corpus_cc(self, snippet, cc):
        assert _count(snippet).cc == cc

    @pytest.mark.parametrize(
        "snippet, kinds", [(s, k) for _, s, _, k in CC_CORPUS if k],
        ids=[label for label, _, _, k in CC_CORPUS if k],
    )
    def test_corpus_kind_breakdown(self, snippet, kinds):
        counted = _count(snippet)
        for kind, expected in kinds.items():
            assert getattr(counted, kind) == expected
        untouched = {
            f for f in ("if_count", "case_count", "for_count", "while_count",
                        "catch_count", "and_op_count", "or_op_count", "ternary_count")
            if f not in kinds
        }
        assert all(getattr(counted, f) == 0 for f in untouched)

    def test_cc_is_total_plus_one(self):
        for _, snippet, _, _ in CC_CORPUS:
            counted = _count(snippet)
            assert counted.cc == counted.total + 1
            assert counted.cc >= 1

    def test_comment_insertion_changes_nothing(self):
        poison = "\n// if for while case catch && || ?: x ? y : z\n"
        for _, snippet, _, _ in CC_CORPUS:
            assert _count(snippet + poison) == _count(snippet)

    def test_concatenation_adds_counts(self):
        for (_, a, _, _), (_, b, _, _) in itertools.product(CC_CORPUS, repeat=2):
            assert _count(a + "\n" + b) == _count(a) + _count(b)


class TestStripNoncode:
    def test_line_comment_blanked_offsets_preserved(self):
        original = "x = 1; // if (a) y();"
        stripped = strip_noncode(original)
        assert len(stripped) == len(original)
        assert stripped.startswith("x = 1; ")
        assert stripped.rstrip() == "x = 1;"

    def test_string_literal_blanked(self):
        stripped = strip_noncode('s = "if && while";')
        assert count_decision_points(stripped).total == 0
        assert stripped.endswith(";")

    def test_block_comment_then_code(self):
        counted = _count("/* for */ for(;;)")
        assert counted.for_count == 1

    def test_newlines_survive_block_comments(self):
        original = "a\n/* if\nwhile */\nb"
        stripped = strip_noncode(original)
        assert stripped.count("\n") == original.count("\n")
        assert len(stripped) == len(original)

    def test_unterminated_block_comment(self):
        assert _count("/* if while for").total == 0

    def test_unterminated_string(self):
        assert _count('s = "if && while').total == 0

    def test_escaped_quotes(self):
        assert _count(r's = "a \" if \" b"; t = '
                      r"'\''; u = \"x\";").total == 0

    def test_division_untouched(self):
        assert strip_noncode("a = b / c; d = e / f;") == "a = b / c; d = e / f;"


class TestAttribution:
    def test_package_prefix(self):
        assert attribute_primary_class("A", "package p.q; class A {}") == "p.q.A"

    def test_no_package(self):
        assert attribute_primary_class("A", "interface A {}") == "A"

    def test_stem_mismatch(self):
        assert attribute_primary_class("A", "class B {}") is None

    def test_declaration_inside_comment_ignored(self):
        unit_text = "// class A\nclass B {}"
        assert attribute_primary_class("A", strip_noncode(unit_text)) is None

    def test_cc_of_source_counts_whole_unit(self):
        unit = SourceUnit("A.java", "class A { void m() { if (x) y(); } }", "A")
        assert cc_of_source(unit).cc == 2

    def test_cc_of_source_from_file(self, tmp_path):
        from oometric.cyclomatic import load_source_unit

        path = tmp_path / "Mix.java"
        path.write_text(
            "class Mix {\n"
            "    void m() {\n"
            "        for (;;) { break; }\n"
            "        while (c) { d(); }\n"
            "        try { e(); } catch (X x) { }\n"
            "    }\n"
            "}\n"
        )
        unit = load_source_unit(path)
        assert unit.primary_class == "Mix"
        assert cc_of_source(unit).cc == 4


def _method_cfg(code):
    spec = ForgeClass(name="G", methods=(ForgeMethod("m", MethodDescriptor((INT,), VOID), code=code),))
    return build_cfg(parse_class(build(spec)).methods[0])


class TestControlFlowGraph:
    def test_straight_line_single_block(self):
        graph = _method_cfg((("iconst_0",), ("istore_1",), ("return",)))
        assert len(graph.blocks) == 1
        assert graph.edges == ()
        assert cc_from_cfg(graph) == 1

    def test_single_conditional_is_two_paths(self):
        graph = _method_cfg((
            ("iload_1",), ("ifle", 4), ("iconst_1",), ("istore_1",), ("return",),
        ))
        assert len(graph.blocks) == 3
        assert len(graph.edges) == 3
        assert cc_from_cfg(graph) == 2

    def test_diamond_layout_also_two_paths(self):
        graph = _method_cfg((
            ("iload_1",), ("ifle", 5), ("iconst_1",), ("istore_1",), ("goto", 7),
            ("iconst_2",), ("istore_1",), ("return",),
        ))
        assert len(graph.blocks) == 4
        assert len(graph.edges) == 4
        assert cc_from_cfg(graph) == 2

    def test_switch_out_degree_counts_cases_plus_default(self):
        graph = _method_cfg((
            ("iload_1",),
            ("tableswitch", 8, 1, [2, 4, 6]),
            ("iconst_1",), ("goto", 9),
            ("iconst_2",), ("goto", 9),
            ("iconst_3",), ("goto", 9),
            ("iconst_0",),
            ("return",),
        ))
        switch_out = sum(1 for src, _ in graph.edges if src == 0)
        assert switch_out == 4
        assert cc_from_cfg(graph) == 4

    def test_parallel_switch_edges_count_separately(self):
        # both cases and the default jump to the same block: still 3 paths
        graph = _method_cfg((
            ("iload_1",), ("tableswitch", 2, 0, [2, 2]), ("return",),
        ))
        assert cc_from_cfg(graph) == 3

    def test_unreachable_code_excluded(self):
        graph = _method_cfg((("athrow",), ("nop",), ("return",)))
        assert len(graph.blocks) == 2
        assert cc_from_cfg(graph) == 1

    def test_goto_skips_dead_code(self):
        graph = _method_cfg((("goto", 2), ("nop",), ("return",)))
        assert cc_from_cfg(graph) == 1

    def test_methods_without_code_rejected(self):
        spec = ForgeClass(name="G", methods=(ForgeMethod("m", MethodDescriptor((), VOID)),))
        with pytest.raises(ValueError):
            build_cfg(parse_class(build(spec)).methods[0])

    def test_every_instruction_in_exactly_one_block(self):
        for seed in range(30):
            cls = parse_class(build(random_class(seed).spec))
            for method in cls.methods:
                if method.code is None:
                    continue
                graph = build_cfg(method)
                covered = [i.offset for block in graph.blocks for i in block.instructions]
                assert covered == [i.offset for i in method.code.instructions]

    def test_cc_one_exactly_when_no_decision_instruction(self):
        for seed in range(40):
            cls = parse_class(build(random_class(seed).spec))
            for method in cls.methods:
                if method.code is None:
                    continue
                cfg_cc = cc_from_cfg(build_cfg(method))
                assert cfg_cc >= 1
                has_decision = any(
                    i.category in (Category.BRANCH, Category.SWITCH)
                    for i in method.code.instructions
                )
                assert (cfg_cc == 1) == (not has_decision)


class TestCcFromCfgDirect:
    def test_single_node(self):
        graph = ControlFlowGraph(blocks=(), edges=(), entry=0)
        assert cc_from_cfg(graph) == 1

    def test_diamond(self):
        graph = ControlFlowGraph(
            blocks=(), edges=((0, 1), (0, 2), (1, 3), (2, 3)), entry=0
        )
        assert cc_from_cfg(graph) == 2
