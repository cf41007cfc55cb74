import random

import pytest
from oracles import literal_coupling_oracle

from oometric.classfile import parse_class
from oometric.coupling import (
    CouplingPolicy,
    CouplingSet,
    class_name_of_type,
    compute_cbo,
    register_coupling,
    register_type,
)
from oometric.descriptors import (
    INT,
    LONG,
    VOID,
    ArrayType,
    ClassType,
    MethodDescriptor,
    Primitive,
)
from oometric.forge import ForgeClass, ForgeMethod, build, random_class

LIT = CouplingPolicy.LITERAL
EXT = CouplingPolicy.EXTENDED


def _empty(analyzed="A", policy=LIT):
    return CouplingSet(analyzed_class=analyzed, names=frozenset(), policy=policy)


class TestNameOfType:
    def test_primitive_has_no_class(self):
        assert class_name_of_type(Primitive("int")) is None

    def test_array_has_no_class(self):
        assert class_name_of_type(ArrayType(ClassType("org.x.B"), 1)) is None

    def test_class_yields_binary_name(self):
        assert class_name_of_type(ClassType("org.x.B")) == "org.x.B"

    def test_void_has_no_class(self):
        assert class_name_of_type(VOID) is None


class TestRegister:
    def test_self_reference_ignored(self):
        s = register_coupling(_empty("A"), "A")
        assert s.names == frozenset()

    def test_jdk_class_ignored(self):
        s = register_coupling(_empty(), "java.lang.String")
        assert s.names == frozenset()
        s = register_coupling(_empty(), "javax.swing.JFrame")
        assert s.names == frozenset()

    def test_insertion_idempotent(self):
        s = register_coupling(_empty(), "org.x.B")
        s = register_coupling(s, "org.x.B")
        assert len(s) == 1

    def test_register_type_composes(self):
        assert register_type(_empty(), Primitive("long")).names == frozenset()
        assert register_type(_empty(), VOID).names == frozenset()
        s = register_type(_empty("A"), ClassType("org.x.C"))
        assert s.names == {"org.x.C"}

    def test_malformed_names_never_enter(self):
        for bad in ("", "org.x.B[]", "[Lorg/x/B;", "Lorg.x.B;"):
            assert register_coupling(_empty(), bad).names == frozenset()

    def test_custom_prefixes(self):
        s = CouplingSet("A", frozenset(), LIT, jdk_prefixes=("com.corp.",))
        assert register_coupling(s, "com.corp.Util").names == frozenset()
        assert register_coupling(s, "java.lang.String").names == {"java.lang.String"}


def _cbo(spec, policy=LIT, prefixes=("java.", "javax.")):
    return compute_cbo(parse_class(build(spec)), policy, prefixes)


class TestComputeCbo:
    def test_bare_class_scores_zero(self):
        n, s = _cbo(ForgeClass(name="A"))
        assert n == 0 and s.names == frozenset()

    def test_interface_and_field(self):
        spec = ForgeClass(
            name="A", interfaces=("org.x.I",), fields=(("f", ClassType("org.x.F")),)
        )
        for policy in (LIT, EXT):
            n, s = _cbo(spec, policy)
            assert n == 2
            assert s.names == {"org.x.I", "org.x.F"}

    def test_instanceof_and_checkcast(self):
        method = ForgeMethod(
            "m", MethodDescriptor((), VOID),
            code=(("instanceof", "org.x.C"), ("checkcast", "org.x.D"), ("return",)),
        )
        n, _ = _cbo(ForgeClass(name="A", methods=(method,)))
        assert n == 2

    def test_superclass_counts_under_both_policies(self):
        spec = ForgeClass(name="A", super_name="org.x.Base")
        assert _cbo(spec, LIT)[0] == 1
        assert _cbo(spec, EXT)[0] == 1

    def test_primitives_only_scores_zero(self):
        method = ForgeMethod(
            "m", MethodDescriptor((INT, LONG), INT),
            code=(("iload_1",), ("iinc", 1, 2), ("iaload",), ("ireturn",)),
            local_variable_types=(Primitive("double"),),
        )
        spec = ForgeClass(
            name="A",
            fields=(("f", INT), ("g", Primitive("boolean"))),
            methods=(method,),
        )
        for policy in (LIT, EXT):
            assert _cbo(spec, policy)[0] == 0

    def test_arrays_of_external_classes_score_zero(self):
        method = ForgeMethod(
            "m",
            MethodDescriptor((ArrayType(ClassType("ext.B"), 2),), ArrayType(ClassType("ext.C"), 1)),
            code=(("checkcast", ArrayType(ClassType("ext.D"), 1)), ("areturn",)),
            local_variable_types=(ArrayType(ClassType("ext.E"), 3),),
        )
        spec = ForgeClass(
            name="A",
            fields=(("f", ArrayType(ClassType("ext.A"), 1)),),
            methods=(method,),
        )
        for policy in (LIT, EXT):
            assert _cbo(spec, policy)[0] == 0

    def test_self_references_score_zero(self):
        self_type = ClassType("A")
        method = ForgeMethod(
            "m", MethodDescriptor((self_type,), self_type),
            code=(
                ("checkcast", "A"),
                ("getfield", "A", "f", self_type),
                ("invokevirtual", "A", "m2", MethodDescriptor((self_type,), self_type)),
                ("areturn",),
            ),
            local_variable_types=(self_type,),
        )
        spec = ForgeClass(name="A", fields=(("f", self_type),), methods=(method,))
        for policy in (LIT, EXT):
            assert _cbo(spec, policy)[0] == 0

    def test_jdk_only_references_score_zero(self):
        string = ClassType("java.lang.String")
        method = ForgeMethod(
            "m", MethodDescriptor((string,), string),
            declared_exceptions=("java.io.IOException",),
            code=(
                ("getstatic", "java.lang.System", "out", ClassType("java.io.PrintStream")),
                ("invokevirtual", "java.io.PrintStream", "println",
                 MethodDescriptor((string,), VOID)),
                ("areturn",),
            ),
            local_variable_types=(ClassType("javax.swing.JFrame"),),
        )
        spec = ForgeClass(name="A", interfaces=("java.io.Serializable",), methods=(method,))
        for policy in (LIT, EXT):
            assert _cbo(spec, policy)[0] == 0

    def test_extended_adds_owners_arguments_and_catch_types(self):
        method = ForgeMethod(
            "m", MethodDescriptor((), VOID),
            code=(
                ("getstatic", "ext.Owner", "f", INT),
                ("invokestatic", "ext.Callee", "run",
                 MethodDescriptor((ClassType("ext.Arg"),), VOID)),
                ("return",),
            ),
            exception_handlers=((0, 2, 2, "ext.Oops"),),
        )
        spec = ForgeClass(name="A", methods=(method,))
        n_lit, s_lit = _cbo(spec, LIT)
        n_ext, s_ext = _cbo(spec, EXT)
        assert s_lit.names == frozenset()
        assert s_ext.names == {"ext.Owner", "ext.Callee", "ext.Arg", "ext.Oops"}
        assert n_lit == 0 and n_ext == 4

    def test_invokedynamic_contributes_only_signature(self):
        method = ForgeMethod(
            "m", MethodDescriptor((), VOID),
            code=(
                ("invokedynamic", "dyn",
                 MethodDescriptor((ClassType("ext.Arg"),), ClassType("ext.Ret"))),
                ("pop",),
                ("return",),
            ),
        )
        spec = ForgeClass(name="A", methods=(method,))
        assert _cbo(spec, LIT)[1].names == {"ext.Ret"}
        assert _cbo(spec, EXT)[1].names == {"ext.Ret", "ext.Arg"}

    def test_result_reports_analyzed_class_and_policy(self):
        n, s = _cbo(ForgeClass(name="org.p.A"), EXT)
        assert s.analyzed_class == "org.p.A"
        assert s.policy is EXT

    def test_configurable_prefixes(self):
        spec = ForgeClass(name="A", fields=(("f", ClassType("com.corp.Util")),))
        assert _cbo(spec)[0] == 1
        assert _cbo(spec, prefixes=("java.", "javax.", "com.corp."))[0] == 0


class TestProperties:
    @pytest.mark.parametrize("seed", range(40))
    def test_generator_oracle_and_brute_force_agree(self, seed):
        generated = random_class(seed)
        cls = parse_class(build(generated.spec))
        n_lit, s_lit = compute_cbo(cls, LIT)
        n_ext, s_ext = compute_cbo(cls, EXT)
        assert s_lit.names == generated.expected_literal
        assert s_ext.names == generated.expected_extended
        assert s_lit.names == literal_coupling_oracle(cls)
        assert s_ext.names >= s_lit.names
        assert n_lit == len(s_lit.names) and n_ext == len(s_ext.names)

    @pytest.mark.parametrize("seed", range(20))
    def test_filter_soundness_and_self_exclusion(self, seed):
        generated = random_class(seed)
        cls = parse_class(build(generated.spec))
        for policy in (LIT, EXT):
            _, s = compute_cbo(cls, policy)
            assert s.analyzed_class not in s.names
            for name in s.names:
                assert name and "[" not in name and ";" not in name
                assert not name.startswith(("java.", "javax."))

    @pytest.mark.parametrize("seed", [3, 11, 29])
    def test_member_permutations_leave_cbo_unchanged(self, seed):
        generated = random_class(seed)
        spec = generated.spec
        baseline = compute_cbo(parse_class(build(spec)))[0]
        rng = random.Random(seed)
        for _ in range(3):
            methods = list(spec.methods)
            fields = list(spec.fields)
            rng.shuffle(methods)
            rng.shuffle(fields)
            shuffled = ForgeClass(
                name=spec.name, super_name=spec.super_name, interfaces=spec.interfaces,
                fields=tuple(fields), methods=tuple(methods),
            )
            assert compute_cbo(parse_class(build(shuffled)))[0] == baseline
