"""Builds minimal, valid class-file bytes for tests.

The forge assembles a symbolic class description (names, signatures, and a
small mnemonic-level instruction language) into real class-file bytes with a
deduplicated constant pool, so parser and coupling tests get exact inputs
without running a compiler. Emitted files default to version 49.0, which
predates mandatory stack-map frames, so code arrays need no verification
metadata. Output is structurally valid -- it parses and decodes -- but makes
no claim of passing a real VM's verifier.

Symbolic code is a sequence of tuples, e.g.::

    ("iload_1",)
    ("ifle", 4)                        # target = instruction index 4
    ("getfield", "org.x.B", "f", ClassType("org.x.F"))
    ("invokevirtual", "org.x.B", "m", MethodDescriptor((INT,), VOID))
    ("tableswitch", 8, 1, [2, 5])      # default index, low, case indices
    ("ldc2_w", ("long", 7))
    ("return",)

Branch targets are instruction indices, resolved to byte offsets at emit
time. Local-variable operands widen automatically when they exceed one byte.

``random_class`` generates seeded classes and, alongside each, the exact
coupling set every policy should report, tracked channel by channel as names
are injected; the generator is the independent check for the analyzer.
"""

from __future__ import annotations

import random
import struct
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence, Union

from . import opcodes as ops
from .coupling import DEFAULT_JDK_PREFIXES
from .descriptors import (
    VOID,
    ArrayType,
    ClassType,
    MethodDescriptor,
    Primitive,
    TypeDescriptor,
    Void,
    format_method,
    format_type,
)

ACC_PUBLIC = 0x0001
ACC_SUPER = 0x0020
ACC_ABSTRACT = 0x0400

DEFAULT_VERSION = (49, 0)  # last major version without stack-map requirements


class InvalidSpec(ValueError):
    """A forge description cannot be assembled."""


SymbolicInstruction = tuple
SymbolicHandler = tuple  # (start_index, end_index, handler_index, catch_name | None)


@dataclass(frozen=True)
class ForgeMethod:
    name: str
    descriptor: MethodDescriptor
    declared_exceptions: tuple[str, ...] = ()
    code: Optional[tuple[SymbolicInstruction, ...]] = None
    local_variable_types: tuple[TypeDescriptor, ...] = ()
    exception_handlers: tuple[SymbolicHandler, ...] = ()
    access_flags: int = ACC_PUBLIC


@dataclass(frozen=True)
class ForgeClass:
    name: str
    super_name: str = "java.lang.Object"
    interfaces: tuple[str, ...] = ()
    fields: tuple[tuple[str, TypeDescriptor], ...] = ()
    methods: tuple[ForgeMethod, ...] = ()
    version: tuple[int, int] = DEFAULT_VERSION
    access_flags: int = ACC_PUBLIC | ACC_SUPER


def _check_binary_name(name: str) -> str:
    if not name or any(not seg for seg in name.split(".")) or any(c in name for c in "/;[ \t\n"):
        raise InvalidSpec(f"malformed binary name {name!r}")
    return name


# --- constant pool builder -------------------------------------------------

class _PoolBuilder:
    def __init__(self) -> None:
        self._chunks: list[bytes] = []
        self._index: dict[tuple, int] = {}
        self._next = 1

    def _intern(self, key: tuple, encode, wide: bool = False) -> int:
        found = self._index.get(key)
        if found is not None:
            return found
        index = self._next
        self._index[key] = index
        self._next += 2 if wide else 1
        self._chunks.append(encode())
        return index

    def utf8(self, text: str) -> int:
        raw = text.encode("utf-8")
        return self._intern(("u", text), lambda: struct.pack(">BH", 1, len(raw)) + raw)

    def class_of_name(self, binary_name: str) -> int:
        internal = _check_binary_name(binary_name).replace(".", "/")
        return self._class_internal(internal)

    def class_of_type(self, t: Union[ClassType, ArrayType]) -> int:
        if isinstance(t, ClassType):
            return self.class_of_name(t.binary_name)
        if isinstance(t, ArrayType):
            return self._class_internal(format_type(t))
        raise InvalidSpec(f"class operand must be a class or array type, got {t!r}")

    def _class_internal(self, internal: str) -> int:
        name_index = self.utf8(internal)
        return self._intern(("c", internal), lambda: struct.pack(">BH", 7, name_index))

    def string(self, text: str) -> int:
        utf8_index = self.utf8(text)
        return self._intern(("s", text), lambda: struct.pack(">BH", 8, utf8_index))

    def integer(self, value: int) -> int:
        return self._intern(("i", value), lambda: struct.pack(">Bi", 3, value))

    def float_(self, value: float) -> int:
        return self._intern(("f", struct.pack(">f", value)), lambda: struct.pack(">Bf", 4, value))

    def long_(self, value: int) -> int:
        return self._intern(("l", value), lambda: struct.pack(">Bq", 5, value), wide=True)

    def double_(self, value: float) -> int:
        return self._intern(
            ("d", struct.pack(">d", value)), lambda: struct.pack(">Bd", 6, value), wide=True
        )

    def name_and_type(self, name: str, descriptor: str) -> int:
        name_index = self.utf8(name)
        desc_index = self.utf8(descriptor)
        return self._intern(
            ("n", name, descriptor), lambda: struct.pack(">BHH", 12, name_index, desc_index)
        )

    def member_ref(self, tag: int, owner: str, name: str, descriptor: str) -> int:
        class_index = self.class_of_name(owner)
        nat_index = self.name_and_type(name, descriptor)
        return self._intern(
            ("r", tag, owner, name, descriptor),
            lambda: struct.pack(">BHH", tag, class_index, nat_index),
        )

    def invoke_dynamic(self, name: str, descriptor: str) -> int:
        nat_index = self.name_and_type(name, descriptor)
        return self._intern(
            ("id", name, descriptor), lambda: struct.pack(">BHH", 18, 0, nat_index)
        )

    def emit(self) -> bytes:
        return struct.pack(">H", self._next) + b"".join(self._chunks)


# --- assembler -------------------------------------------------------------

@dataclass
class _Asm:
    opcode: int
    mnemonic: str
    encoding: str  # "plain", "wide", "switch"
    payload: tuple = ()
    target: Optional[int] = None
    switch: Optional[tuple] = None  # (default_index, low | None, case_indices)
    offset: int = 0
    size: int = 0


_CONST_POOL_KINDS = {
    "int": "integer",
    "float": "float_",
    "string": "string",
    "long": "long_",
    "double": "double_",
}
_NEWARRAY_CODES = {kind.kind: code for code, kind in ops.NEWARRAY_ATYPES.items()}
_MEMBER_TAGS = {
    "getstatic": 9, "putstatic": 9, "getfield": 9, "putfield": 9,
    "invokevirtual": 10, "invokespecial": 10, "invokestatic": 10,
    "invokeinterface": 11,
}


def _slot_width(t: TypeDescriptor) -> int:
    return 2 if isinstance(t, Primitive) and t.kind in ("long", "double") else 1


def _normalize(symbolic: Sequence[SymbolicInstruction], pool: _PoolBuilder) -> list[_Asm]:
    insns: list[_Asm] = []
    for raw in symbolic:
        if not raw or not isinstance(raw, tuple):
            raise InvalidSpec(f"symbolic instruction must be a non-empty tuple, got {raw!r}")
        mn, args = raw[0], raw[1:]
        spec = ops.BY_NAME.get(mn)
        if spec is None:
            raise InvalidSpec(f"unknown mnemonic {mn!r}")
        insns.append(_normalize_one(spec, mn, args, pool))
    return insns


def _normalize_one(spec: ops.OpSpec, mn: str, args: tuple, pool: _PoolBuilder) -> _Asm:
    fmt = spec.fmt

    def need(n: int) -> None:
        if len(args) != n:
            raise InvalidSpec(f"{mn} takes {n} operand(s), got {len(args)}")

    if fmt == "":
        need(0)
        return _Asm(spec.code, mn, "plain", (b"",))
    if fmt == "b":
        need(1)
        return _Asm(spec.code, mn, "plain", (struct.pack(">b", args[0]),))
    if fmt == "B":
        need(1)
        atype = args[0] if isinstance(args[0], int) else _NEWARRAY_CODES.get(args[0])
        if atype not in ops.NEWARRAY_ATYPES:
            raise InvalidSpec(f"newarray element {args[0]!r} is not a primitive kind")
        return _Asm(spec.code, mn, "plain", (struct.pack(">B", atype),))
    if fmt == "s":
        need(1)
        return _Asm(spec.code, mn, "plain", (struct.pack(">h", args[0]),))
    if fmt == "L1":
        need(1)
        index = args[0]
        if index < 0 or index > 0xFFFF:
            raise InvalidSpec(f"{mn} local index {index} out of range")
        if index > 0xFF:
            return _Asm(spec.code, mn, "wide", (struct.pack(">H", index),))
        return _Asm(spec.code, mn, "plain", (struct.pack(">B", index),))
    if fmt == "IINC":
        need(2)
        index, delta = args
        if index > 0xFF or not -0x80 <= delta <= 0x7F:
            return _Asm(spec.code, mn, "wide", (struct.pack(">Hh", index, delta),))
        return _Asm(spec.code, mn, "plain", (struct.pack(">Bb", index, delta),))
    if fmt in ("T2", "T4"):
        need(1)
        return _Asm(spec.code, mn, "plain", (None,), target=args[0])
    if fmt == "C1":  # ldc
        need(1)
        index = _const_index(mn, args[0], pool)
        if index > 0xFF:
            return _Asm(ops.LDC_W, "ldc_w", "plain", (struct.pack(">H", index),))
        return _Asm(spec.code, mn, "plain", (struct.pack(">B", index),))
    if fmt == "C2" and mn == "ldc2_w":
        need(1)
        return _Asm(spec.code, mn, "plain", (struct.pack(">H", _const_index(mn, args[0], pool)),))
    if fmt == "C2" and mn in _MEMBER_TAGS:
        need(3)
        owner, name, member_type = args
        descriptor = (
            format_method(member_type) if isinstance(member_type, MethodDescriptor)
            else format_type(member_type)
        )
        index = pool.member_ref(_MEMBER_TAGS[mn], owner, name, descriptor)
        return _Asm(spec.code, mn, "plain", (struct.pack(">H", index),))
    if fmt == "C2" and mn in ("checkcast", "instanceof", "anewarray"):
        need(1)
        operand = ClassType(args[0]) if isinstance(args[0], str) else args[0]
        return _Asm(spec.code, mn, "plain", (struct.pack(">H", pool.class_of_type(operand)),))
    if fmt == "C2":  # new
        need(1)
        return _Asm(spec.code, mn, "plain", (struct.pack(">H", pool.class_of_name(args[0])),))
    if fmt == "II":
        need(3)
        owner, name, md = args
        if not isinstance(md, MethodDescriptor):
            raise InvalidSpec(f"{mn} needs a method descriptor, got {md!r}")
        index = pool.member_ref(11, owner, name, format_method(md))
        count = 1 + sum(_slot_width(p) for p in md.params)
        return _Asm(spec.code, mn, "plain", (struct.pack(">HBB", index, count, 0),))
    if fmt == "ID":
        need(2)
        name, md = args
        index = pool.invoke_dynamic(name, format_method(md))
        return _Asm(spec.code, mn, "plain", (struct.pack(">HBB", index, 0, 0),))
    if fmt == "MA":
        need(2)
        array_type, dims = args
        index = pool.class_of_type(array_type)
        if dims < 1:
            raise InvalidSpec("multianewarray needs at least one dimension")
        return _Asm(spec.code, mn, "plain", (struct.pack(">HB", index, dims),))
    if fmt == "TS":
        need(3)
        default_index, low, case_indices = args
        return _Asm(spec.code, mn, "switch",
                    switch=(default_index, low, tuple(case_indices)))
    if fmt == "LS":
        need(2)
        default_index, pairs = args
        return _Asm(spec.code, mn, "switch",
                    switch=(default_index, None, tuple(pairs)))
    raise InvalidSpec(f"mnemonic {mn!r} cannot be assembled directly")


def _const_index(mn: str, operand: tuple, pool: _PoolBuilder) -> int:
    if not (isinstance(operand, tuple) and len(operand) == 2 and operand[0] in _CONST_POOL_KINDS):
        raise InvalidSpec(f"{mn} operand must be (kind, value), got {operand!r}")
    kind, value = operand
    if mn == "ldc2_w" and kind not in ("long", "double"):
        raise InvalidSpec(f"ldc2_w loads long or double constants, got {kind!r}")
    if mn == "ldc" and kind in ("long", "double"):
        raise InvalidSpec(f"ldc cannot load {kind} constants")
    return getattr(pool, _CONST_POOL_KINDS[kind])(value)


def _assemble(symbolic: Sequence[SymbolicInstruction], pool: _PoolBuilder) -> tuple[bytes, list[int]]:
    """Assemble symbolic code; returns (code bytes, per-instruction offsets)."""
    insns = _normalize(symbolic, pool)

    def resolve(index: int, at: _Asm) -> int:
        if not isinstance(index, int) or not 0 <= index < len(insns):
            raise InvalidSpec(
                f"{at.mnemonic} targets instruction index {index!r}, "
                f"but the method has {len(insns)} instructions"
            )
        return insns[index].offset

    offset = 0
    for ins in insns:
        ins.offset = offset
        if ins.encoding == "plain":
            body = ins.payload[0]
            ins.size = 1 + (2 if ins.target is not None and ops.OPCODES[ins.opcode].fmt == "T2"
                            else 4 if ins.target is not None else len(body))
        elif ins.encoding == "wide":
            ins.size = 2 + len(ins.payload[0])
        else:
            pad = (4 - ((offset + 1) % 4)) % 4
            default_index, low, entries = ins.switch
            per_entry = 4 if low is not None else 8
            header = 12 if low is not None else 8
            ins.size = 1 + pad + header + per_entry * len(entries)
        offset += ins.size

    out = bytearray()
    for ins in insns:
        if ins.encoding == "wide":
            out += bytes([ops.WIDE, ins.opcode]) + ins.payload[0]
        elif ins.encoding == "switch":
            out.append(ins.opcode)
            out += b"\x00" * ((4 - (len(out) % 4)) % 4)
            default_index, low, entries = ins.switch
            out += struct.pack(">i", resolve(default_index, ins) - ins.offset)
            if low is not None:
                out += struct.pack(">ii", low, low + len(entries) - 1)
                for case_index in entries:
                    out += struct.pack(">i", resolve(case_index, ins) - ins.offset)
            else:
                out += struct.pack(">i", len(entries))
                for match, case_index in entries:
                    out += struct.pack(">ii", match, resolve(case_index, ins) - ins.offset)
        elif ins.target is not None:
            displacement = resolve(ins.target, ins) - ins.offset
            fmt = ops.OPCODES[ins.opcode].fmt
            if fmt == "T2":
                if not -0x8000 <= displacement <= 0x7FFF:
                    raise InvalidSpec(f"{ins.mnemonic} displacement {displacement} overflows 16 bits")
                out += bytes([ins.opcode]) + struct.pack(">h", displacement)
            else:
                out += bytes([ins.opcode]) + struct.pack(">i", displacement)
        else:
            out += bytes([ins.opcode]) + ins.payload[0]
    return bytes(out), [ins.offset for ins in insns]


def _attribute(pool: _PoolBuilder, name: str, payload: bytes) -> bytes:
    return struct.pack(">HI", pool.utf8(name), len(payload)) + payload


def _emit_method(method: ForgeMethod, pool: _PoolBuilder) -> bytes:
    flags = method.access_flags
    name_index = pool.utf8(method.name)
    desc_index = pool.utf8(format_method(method.descriptor))
    attributes: list[bytes] = []

    if method.code is None:
        flags |= ACC_ABSTRACT
    else:
        code_bytes, offsets = _assemble(method.code, pool)

        def at(index: int, *, end_ok: bool = False) -> int:
            if end_ok and index == len(offsets):
                return len(code_bytes)
            if not 0 <= index < len(offsets):
                raise InvalidSpec(f"handler index {index} out of range")
            return offsets[index]

        table = bytearray(struct.pack(">H", len(method.exception_handlers)))
        for start, end, handler, catch in method.exception_handlers:
            catch_index = pool.class_of_name(catch) if catch else 0
            table += struct.pack(
                ">HHHH", at(start), at(end, end_ok=True), at(handler), catch_index
            )

        inner: list[bytes] = []
        if method.local_variable_types:
            lvt = bytearray(struct.pack(">H", len(method.local_variable_types)))
            for slot, lv_type in enumerate(method.local_variable_types):
                lvt += struct.pack(
                    ">HHHHH",
                    0, len(code_bytes),
                    pool.utf8(f"v{slot}"),
                    pool.utf8(format_type(lv_type)),
                    slot,
                )
            inner.append(_attribute(pool, "LocalVariableTable", bytes(lvt)))

        payload = (
            struct.pack(">HHI", 16, 16, len(code_bytes))
            + code_bytes
            + bytes(table)
            + struct.pack(">H", len(inner))
            + b"".join(inner)
        )
        attributes.append(_attribute(pool, "Code", payload))

    if method.declared_exceptions:
        body = struct.pack(">H", len(method.declared_exceptions)) + b"".join(
            struct.pack(">H", pool.class_of_name(name))
            for name in method.declared_exceptions
        )
        attributes.append(_attribute(pool, "Exceptions", body))

    return (
        struct.pack(">HHHH", flags, name_index, desc_index, len(attributes))
        + b"".join(attributes)
    )


def build(spec: ForgeClass) -> bytes:
    """Emit class-file bytes for a forge description."""
    pool = _PoolBuilder()
    this_index = pool.class_of_name(spec.name)
    super_index = pool.class_of_name(spec.super_name)
    interface_indices = [pool.class_of_name(name) for name in spec.interfaces]

    field_blobs = []
    for name, field_type in spec.fields:
        if not name or isinstance(field_type, Void):
            raise InvalidSpec(f"field {name!r} must have a name and a non-void type")
        field_blobs.append(
            struct.pack(
                ">HHHH", ACC_PUBLIC, pool.utf8(name), pool.utf8(format_type(field_type)), 0
            )
        )
    method_blobs = [_emit_method(m, pool) for m in spec.methods]

    out = bytearray(struct.pack(">IHH", 0xCAFEBABE, spec.version[1], spec.version[0]))
    out += pool.emit()
    out += struct.pack(">HHH", spec.access_flags, this_index, super_index)
    out += struct.pack(">H", len(interface_indices))
    for index in interface_indices:
        out += struct.pack(">H", index)
    out += struct.pack(">H", len(field_blobs)) + b"".join(field_blobs)
    out += struct.pack(">H", len(method_blobs)) + b"".join(method_blobs)
    out += struct.pack(">H", 0)  # no class-level attributes
    return bytes(out)


# --- seeded random classes with known coupling ------------------------------

@dataclass(frozen=True)
class ForgeBounds:
    max_interfaces: int = 2
    max_fields: int = 3
    max_methods: int = 3
    max_body_len: int = 12
    allow_external_super: bool = True

    @classmethod
    def empty(cls) -> "ForgeBounds":
        return cls(0, 0, 0, 0, allow_external_super=False)


@dataclass(frozen=True)
class GeneratedClass:
    spec: ForgeClass
    expected_literal: frozenset[str]
    expected_extended: frozenset[str]


_EXTERNAL_NAMES = (
    "ext.Alpha", "ext.Beta", "ext.Gamma", "ext.Delta",
    "org.demo.Widget", "org.demo.Gadget", "org.demo.err.BoomError",
)
_JDK_NAMES = (
    "java.lang.String", "java.lang.Object", "java.util.List",
    "javax.swing.JFrame", "java.io.IOException",
)
_PRIMS = ("int", "long", "float", "double", "boolean", "byte", "char", "short")

_RETURN_OP = {
    "int": "ireturn", "short": "ireturn", "byte": "ireturn", "char": "ireturn",
    "boolean": "ireturn", "long": "lreturn", "float": "freturn", "double": "dreturn",
}


class _Tracker:
    """Mirrors the coupling filters while names are injected."""

    def __init__(self, self_name: str):
        self.self_name = self_name
        self.literal: set[str] = set()
        self.extended: set[str] = set()

    def name(self, value: Optional[str], *, literal: bool) -> None:
        if value is None or value == self.self_name:
            return
        if any(value.startswith(p) for p in DEFAULT_JDK_PREFIXES):
            return
        self.extended.add(value)
        if literal:
            self.literal.add(value)

    def type(self, t: TypeDescriptor, *, literal: bool) -> None:
        if isinstance(t, ClassType):  # primitives, arrays, and void never couple
            self.name(t.binary_name, literal=literal)


def random_class(seed: int, bounds: ForgeBounds = ForgeBounds()) -> GeneratedClass:
    """Deterministic random class plus the coupling sets it must produce."""
    rng = random.Random(seed)
    self_name = f"fix.C{seed}"
    track = _Tracker(self_name)

    def pick_class_name() -> str:
        roll = rng.random()
        if roll < 0.55:
            return rng.choice(_EXTERNAL_NAMES)
        if roll < 0.85:
            return rng.choice(_JDK_NAMES)
        return self_name

    def pick_type(allow_void: bool = False) -> TypeDescriptor:
        roll = rng.random()
        if allow_void and roll < 0.2:
            return VOID
        if roll < 0.5:
            return Primitive(rng.choice(_PRIMS))
        if roll < 0.85:
            return ClassType(pick_class_name())
        element = (
            Primitive(rng.choice(_PRIMS)) if rng.random() < 0.5
            else ClassType(pick_class_name())
        )
        return ArrayType(element, rng.randint(1, 2))

    super_name = "java.lang.Object"
    if bounds.allow_external_super and rng.random() < 0.35:
        super_name = rng.choice(_EXTERNAL_NAMES)
        track.name(super_name, literal=True)

    interfaces = tuple(
        rng.sample(_EXTERNAL_NAMES + _JDK_NAMES, k=rng.randint(0, bounds.max_interfaces))
        if bounds.max_interfaces
        else ()
    )
    for name in interfaces:
        track.name(name, literal=True)

    fields = []
    for i in range(rng.randint(0, bounds.max_fields)):
        field_type = pick_type()
        track.type(field_type, literal=True)
        fields.append((f"f{i}", field_type))

    methods = [
        _random_method(f"m{i}", rng, bounds, track)
        for i in range(rng.randint(0, bounds.max_methods))
    ]

    spec = ForgeClass(
        name=self_name,
        super_name=super_name,
        interfaces=interfaces,
        fields=tuple(fields),
        methods=tuple(methods),
    )
    return GeneratedClass(spec, frozenset(track.literal), frozenset(track.extended))


def _random_method(name: str, rng: random.Random, bounds: ForgeBounds, track: _Tracker) -> ForgeMethod:
    params = tuple(_non_void(rng, track) for _ in range(rng.randint(0, 3)))
    return_type = _signature_type(rng, track, allow_void=True)
    declared = ()
    if rng.random() < 0.3:
        declared = (rng.choice(("org.demo.err.BoomError", "java.io.IOException", "ext.Delta")),)
        track.name(declared[0], literal=True)
    if rng.random() < 0.15:  # abstract: no code, so no local-variable table either
        return ForgeMethod(name, MethodDescriptor(params, return_type),
                           declared_exceptions=declared)
    lvt = ()
    if rng.random() < 0.3:
        lvt = tuple(_non_void(rng, track) for _ in range(rng.randint(1, 2)))

    body, handlers = _random_body(rng, bounds, track, return_type)
    return ForgeMethod(
        name,
        MethodDescriptor(params, return_type),
        declared_exceptions=declared,
        code=tuple(body),
        local_variable_types=lvt,
        exception_handlers=handlers,
    )


def _signature_type(rng: random.Random, track: _Tracker, allow_void: bool = False) -> TypeDescriptor:
    t = _pick_any(rng, allow_void)
    track.type(t, literal=True)
    return t


def _non_void(rng: random.Random, track: _Tracker) -> TypeDescriptor:
    return _signature_type(rng, track, allow_void=False)


def _pick_any(rng: random.Random, allow_void: bool) -> TypeDescriptor:
    roll = rng.random()
    if allow_void and roll < 0.25:
        return VOID
    if roll < 0.55:
        return Primitive(rng.choice(_PRIMS))
    if roll < 0.85:
        names = _EXTERNAL_NAMES + _JDK_NAMES
        return ClassType(rng.choice(names))
    element = (
        Primitive(rng.choice(_PRIMS)) if rng.random() < 0.5
        else ClassType(rng.choice(_EXTERNAL_NAMES + _JDK_NAMES))
    )
    return ArrayType(element, rng.randint(1, 2))


_PLAIN_OPS = (
    ("nop",), ("iconst_0",), ("iconst_1",), ("iconst_2",), ("pop",),
    ("dup",), ("iadd",), ("isub",), ("bipush", 7), ("sipush", 300),
    ("lconst_0",), ("swap",), ("i2l",), ("arraylength",),
)
_LOCAL_OPS = (
    ("iload", 1), ("iload_2",), ("aload_0",), ("aload", 3), ("istore", 2),
    ("astore_1",), ("lload", 1), ("dstore", 3), ("fload_0",),
    ("iinc", 1, 1), ("iinc", 2, -3), ("iload", 300), ("iinc", 300, 200),
)
_ARRAY_OPS = (
    ("iaload",), ("aaload",), ("bastore",), ("castore",), ("laload",),
    ("saload",), ("daload",), ("fastore",),
)


def _random_body(
    rng: random.Random, bounds: ForgeBounds, track: _Tracker, return_type: TypeDescriptor
) -> tuple[list[SymbolicInstruction], tuple[SymbolicHandler, ...]]:
    body: list[SymbolicInstruction] = []
    for _ in range(rng.randint(0, bounds.max_body_len)):
        kind = rng.choices(
            ("plain", "local", "array", "ldc2", "field", "invoke", "typecheck"),
            weights=(3, 2, 1, 1, 2, 2, 2),
        )[0]
        if kind == "plain":
            body.append(rng.choice(_PLAIN_OPS))
        elif kind == "local":
            body.append(rng.choice(_LOCAL_OPS))
        elif kind == "array":
            body.append(rng.choice(_ARRAY_OPS))
        elif kind == "ldc2":
            constant = (
                ("long", rng.randint(-(2**40), 2**40)) if rng.random() < 0.5
                else ("double", rng.uniform(-1e6, 1e6))
            )
            body.append(("ldc2_w", constant))
        elif kind == "field":
            mn = rng.choice(("getfield", "putfield", "getstatic", "putstatic"))
            owner = rng.choice(_EXTERNAL_NAMES + _JDK_NAMES + (track.self_name,))
            field_type = _pick_any(rng, allow_void=False)
            track.type(field_type, literal=True)
            track.name(owner, literal=False)
            body.append((mn, owner, f"x{rng.randint(0, 4)}", field_type))
        elif kind == "invoke":
            md = MethodDescriptor(
                tuple(_pick_any(rng, False) for _ in range(rng.randint(0, 2))),
                _pick_any(rng, allow_void=True),
            )
            track.type(md.return_type, literal=True)
            for param in md.params:
                track.type(param, literal=False)
            if rng.random() < 0.12:
                body.append(("invokedynamic", f"dyn{rng.randint(0, 3)}", md))
            else:
                mn = rng.choice(
                    ("invokevirtual", "invokespecial", "invokestatic", "invokeinterface")
                )
                owner = rng.choice(_EXTERNAL_NAMES + _JDK_NAMES + (track.self_name,))
                track.name(owner, literal=False)
                body.append((mn, owner, f"call{rng.randint(0, 4)}", md))
        else:
            mn = rng.choice(("instanceof", "checkcast"))
            operand: Union[ClassType, ArrayType]
            if rng.random() < 0.7:
                operand = ClassType(rng.choice(_EXTERNAL_NAMES + _JDK_NAMES + (track.self_name,)))
            else:
                operand = ArrayType(ClassType(rng.choice(_EXTERNAL_NAMES)), rng.randint(1, 2))
            track.type(operand, literal=True)
            body.append((mn, operand))

    prefix: list[SymbolicInstruction] = []
    use_branch = rng.random() < 0.35
    use_switch = rng.random() < 0.30
    if use_branch:
        prefix = [("iconst_0",), ("ifeq", -1)]
    body = prefix + body
    if use_switch:
        if rng.random() < 0.5:
            body += [("iconst_1",), ("tableswitch", -1, 0, [-1] * rng.randint(1, 3))]
        else:
            pairs = sorted(rng.sample(range(-5, 100), k=rng.randint(1, 3)))
            body += [("iconst_1",), ("lookupswitch", -1, [(m, -1) for m in pairs])]

    return_op = (
        "return" if isinstance(return_type, Void)
        else _RETURN_OP.get(getattr(return_type, "kind", None), "areturn")
    )
    body.append((return_op,))
    end = len(body) - 1

    def patch(ins: SymbolicInstruction) -> SymbolicInstruction:
        if ins[0] == "ifeq" and ins[1] == -1:
            return ("ifeq", end)
        if ins[0] == "tableswitch" and ins[1] == -1:
            return ("tableswitch", end, ins[2], [end] * len(ins[3]))
        if ins[0] == "lookupswitch" and ins[1] == -1:
            return ("lookupswitch", end, [(m, end) for m, _ in ins[2]])
        return ins

    body = [patch(ins) for ins in body]

    handlers: tuple[SymbolicHandler, ...] = ()
    if rng.random() < 0.25 and len(body) > 1:
        catch = rng.choice(("ext.Delta", "org.demo.err.BoomError", "java.io.IOException", None))
        if catch:
            track.name(catch, literal=False)  # catch types register under Extended only
        handlers = ((0, len(body) - 1, len(body) - 1, catch),)
    return body, handlers
