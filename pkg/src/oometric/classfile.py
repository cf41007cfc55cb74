"""Class-file parser: constant pool, members, attributes, and instructions.

Parses raw class-file bytes into an immutable model with enough structure to
traverse every reference a class makes: superclass, interfaces, field and
method signatures, declared exceptions, local-variable types, and a fully
decoded instruction stream with the types each instruction manipulates.

Multi-byte integers are big-endian. Binary names are normalized to the
dot-separated form at parse time. Attributes other than Code, Exceptions and
LocalVariableTable are retained opaquely and never inspected; generic
signatures are ignored, so later analysis sees erased types only.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Optional, Union

from . import opcodes as ops
from .descriptors import (
    ArrayType,
    ClassType,
    MethodDescriptor,
    TypeDescriptor,
    parse_field_descriptor,
    parse_method_descriptor,
    type_name,
)
from .errors import (
    BadCode,
    BadConstantTag,
    BadIndex,
    BadMagic,
    ClassFileError,
    TrailingBytes,
    Truncated,
)

MAGIC = 0xCAFEBABE

ACC_ABSTRACT = 0x0400
ACC_NATIVE = 0x0100


class _Reader:
    """Cursor over a byte buffer; raises Truncated on overrun."""

    __slots__ = ("data", "pos")

    def __init__(self, data: bytes, pos: int = 0):
        self.data = data
        self.pos = pos

    def take(self, n: int) -> bytes:
        end = self.pos + n
        if end > len(self.data):
            raise Truncated(f"need {n} bytes at offset {self.pos}, have {len(self.data) - self.pos}")
        chunk = self.data[self.pos : end]
        self.pos = end
        return chunk

    def u1(self) -> int:
        return self.take(1)[0]

    def u2(self) -> int:
        return struct.unpack(">H", self.take(2))[0]

    def u4(self) -> int:
        return struct.unpack(">I", self.take(4))[0]

    def s1(self) -> int:
        return struct.unpack(">b", self.take(1))[0]

    def s2(self) -> int:
        return struct.unpack(">h", self.take(2))[0]

    def s4(self) -> int:
        return struct.unpack(">i", self.take(4))[0]

    @property
    def eof(self) -> bool:
        return self.pos >= len(self.data)


def _decode_mutf8(raw: bytes) -> str:
    """Decode the JVM's modified UTF-8 (two-byte NUL, CESU-8 surrogates)."""
    units: list[int] = []
    i, n = 0, len(raw)
    while i < n:
        b = raw[i]
        if b & 0x80 == 0:
            units.append(b)
            i += 1
        elif b & 0xE0 == 0xC0:
            if i + 1 >= n or raw[i + 1] & 0xC0 != 0x80:
                raise ClassFileError("malformed modified UTF-8 sequence")
            units.append(((b & 0x1F) << 6) | (raw[i + 1] & 0x3F))
            i += 2
        elif b & 0xF0 == 0xE0:
            if i + 2 >= n or raw[i + 1] & 0xC0 != 0x80 or raw[i + 2] & 0xC0 != 0x80:
                raise ClassFileError("malformed modified UTF-8 sequence")
            units.append(((b & 0x0F) << 12) | ((raw[i + 1] & 0x3F) << 6) | (raw[i + 2] & 0x3F))
            i += 3
        else:
            raise ClassFileError(f"invalid modified UTF-8 lead byte 0x{b:02X}")
    text = "".join(map(chr, units))
    # merge surrogate pairs produced by the CESU-8 style encoding
    return text.encode("utf-16", "surrogatepass").decode("utf-16", "surrogatepass")


# --- constant pool ---------------------------------------------------------

TAG_UTF8 = 1
TAG_INTEGER = 3
TAG_FLOAT = 4
TAG_LONG = 5
TAG_DOUBLE = 6
TAG_CLASS = 7
TAG_STRING = 8
TAG_FIELDREF = 9
TAG_METHODREF = 10
TAG_INTERFACE_METHODREF = 11
TAG_NAME_AND_TYPE = 12
TAG_METHOD_HANDLE = 15
TAG_METHOD_TYPE = 16
TAG_DYNAMIC = 17
TAG_INVOKE_DYNAMIC = 18
TAG_MODULE = 19
TAG_PACKAGE = 20


@dataclass(frozen=True)
class CpUtf8:
    text: str


@dataclass(frozen=True)
class CpInteger:
    value: int


@dataclass(frozen=True)
class CpFloat:
    bits: int  # raw IEEE bits; keeps NaN payloads comparable

    @property
    def value(self) -> float:
        return struct.unpack(">f", struct.pack(">I", self.bits))[0]


@dataclass(frozen=True)
class CpLong:
    value: int


@dataclass(frozen=True)
class CpDouble:
    bits: int

    @property
    def value(self) -> float:
        return struct.unpack(">d", struct.pack(">Q", self.bits))[0]


@dataclass(frozen=True)
class CpClass:
    name_index: int


@dataclass(frozen=True)
class CpString:
    utf8_index: int


@dataclass(frozen=True)
class CpFieldref:
    class_index: int
    name_and_type_index: int


@dataclass(frozen=True)
class CpMethodref:
    class_index: int
    name_and_type_index: int


@dataclass(frozen=True)
class CpInterfaceMethodref:
    class_index: int
    name_and_type_index: int


@dataclass(frozen=True)
class CpNameAndType:
    name_index: int
    descriptor_index: int


@dataclass(frozen=True)
class CpMethodHandle:
    reference_kind: int
    reference_index: int


@dataclass(frozen=True)
class CpMethodType:
    descriptor_index: int


@dataclass(frozen=True)
class CpDynamic:
    bootstrap_index: int
    name_and_type_index: int


@dataclass(frozen=True)
class CpInvokeDynamic:
    bootstrap_index: int
    name_and_type_index: int


@dataclass(frozen=True)
class CpModule:
    name_index: int


@dataclass(frozen=True)
class CpPackage:
    name_index: int


CpEntry = Union[
    CpUtf8, CpInteger, CpFloat, CpLong, CpDouble, CpClass, CpString,
    CpFieldref, CpMethodref, CpInterfaceMethodref, CpNameAndType,
    CpMethodHandle, CpMethodType, CpDynamic, CpInvokeDynamic,
    CpModule, CpPackage,
]

_LOADABLE_LDC = (CpInteger, CpFloat, CpString, CpClass, CpMethodType, CpMethodHandle, CpDynamic)
_REF_ENTRIES = (CpFieldref, CpMethodref, CpInterfaceMethodref)


@dataclass(frozen=True)
class ConstantPool:
    """1-based entry table; ``None`` marks the dead slot after a Long/Double."""

    entries: tuple[Optional[CpEntry], ...]  # index 0 is always None

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, index: int, kind: Optional[type | tuple] = None) -> CpEntry:
        if index < 1 or index >= len(self.entries):
            raise BadIndex(f"constant-pool index {index} out of range [1, {len(self.entries) - 1}]")
        e = self.entries[index]
        if e is None:
            raise BadIndex(f"constant-pool index {index} addresses the unusable slot of an 8-byte constant")
        if kind is not None and not isinstance(e, kind):
            wanted = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
            raise BadIndex(f"constant-pool index {index} is {type(e).__name__}, expected {wanted}")
        return e

    def utf8(self, index: int) -> str:
        return self.entry(index, CpUtf8).text

    def class_type(self, index: int) -> Union[ClassType, ArrayType]:
        """Resolve a Class entry to its type; array entries parse as descriptors."""
        e = self.entry(index, CpClass)
        raw = self.utf8(e.name_index)
        if raw.startswith("["):
            t = parse_field_descriptor(raw)
            if not isinstance(t, ArrayType):
                raise BadIndex(f"class entry {index} names a non-array descriptor {raw!r}")
            return t
        return ClassType(raw.replace("/", "."))

    def class_name(self, index: int) -> str:
        """Dot-separated binary name; array entries render as ``elem[]``."""
        return type_name(self.class_type(index))

    def name_and_type(self, index: int) -> tuple[str, str]:
        e = self.entry(index, CpNameAndType)
        return self.utf8(e.name_index), self.utf8(e.descriptor_index)


def _parse_pool(r: _Reader) -> ConstantPool:
    count = r.u2()
    if count < 1:
        raise BadIndex("constant-pool count must be at least 1")
    entries: list[Optional[CpEntry]] = [None]
    while len(entries) < count:
        tag = r.u1()
        if tag == TAG_UTF8:
            entries.append(CpUtf8(_decode_mutf8(r.take(r.u2()))))
        elif tag == TAG_INTEGER:
            entries.append(CpInteger(r.s4()))
        elif tag == TAG_FLOAT:
            entries.append(CpFloat(r.u4()))
        elif tag == TAG_LONG:
            entries.append(CpLong(struct.unpack(">q", r.take(8))[0]))
            entries.append(None)
        elif tag == TAG_DOUBLE:
            entries.append(CpDouble(struct.unpack(">Q", r.take(8))[0]))
            entries.append(None)
        elif tag == TAG_CLASS:
            entries.append(CpClass(r.u2()))
        elif tag == TAG_STRING:
            entries.append(CpString(r.u2()))
        elif tag == TAG_FIELDREF:
            entries.append(CpFieldref(r.u2(), r.u2()))
        elif tag == TAG_METHODREF:
            entries.append(CpMethodref(r.u2(), r.u2()))
        elif tag == TAG_INTERFACE_METHODREF:
            entries.append(CpInterfaceMethodref(r.u2(), r.u2()))
        elif tag == TAG_NAME_AND_TYPE:
            entries.append(CpNameAndType(r.u2(), r.u2()))
        elif tag == TAG_METHOD_HANDLE:
            entries.append(CpMethodHandle(r.u1(), r.u2()))
        elif tag == TAG_METHOD_TYPE:
            entries.append(CpMethodType(r.u2()))
        elif tag == TAG_DYNAMIC:
            entries.append(CpDynamic(r.u2(), r.u2()))
        elif tag == TAG_INVOKE_DYNAMIC:
            entries.append(CpInvokeDynamic(r.u2(), r.u2()))
        elif tag == TAG_MODULE:
            entries.append(CpModule(r.u2()))
        elif tag == TAG_PACKAGE:
            entries.append(CpPackage(r.u2()))
        else:
            raise BadConstantTag(f"unknown constant-pool tag {tag} at entry {len(entries)}")
    if len(entries) != count:
        # a Long/Double in the final slot would have pushed one past the count
        raise BadIndex("8-byte constant overflows the declared constant-pool count")
    pool = ConstantPool(tuple(entries))
    _validate_pool_refs(pool)
    return pool


def _validate_pool_refs(pool: ConstantPool) -> None:
    for index, e in enumerate(pool.entries):
        if e is None:
            continue
        if isinstance(e, CpClass):
            pool.utf8(e.name_index)
        elif isinstance(e, CpString):
            pool.utf8(e.utf8_index)
        elif isinstance(e, _REF_ENTRIES):
            pool.entry(e.class_index, CpClass)
            pool.entry(e.name_and_type_index, CpNameAndType)
        elif isinstance(e, CpNameAndType):
            pool.utf8(e.name_index)
            pool.utf8(e.descriptor_index)
        elif isinstance(e, CpMethodHandle):
            pool.entry(e.reference_index, _REF_ENTRIES)
        elif isinstance(e, CpMethodType):
            pool.utf8(e.descriptor_index)
        elif isinstance(e, (CpDynamic, CpInvokeDynamic)):
            pool.entry(e.name_and_type_index, CpNameAndType)
        elif isinstance(e, (CpModule, CpPackage)):
            pool.utf8(e.name_index)


# --- instructions ----------------------------------------------------------

@dataclass(frozen=True)
class Instruction:
    """One decoded instruction.

    ``opcode`` is the logical opcode: for wide-prefixed forms it is the
    widened opcode (``wide`` is set and ``size`` covers the prefix), so the
    category is always a pure function of ``opcode``.
    """

    offset: int
    opcode: int
    mnemonic: str
    category: ops.Category
    size: int
    wide: bool = False
    local_index: Optional[int] = None
    pool_index: Optional[int] = None
    value: Optional[int] = None  # immediate: push value, iinc delta, atype, dims
    branch_target: Optional[int] = None
    switch_default: Optional[int] = None
    switch_targets: tuple[int, ...] = ()
    referenced_type: Optional[TypeDescriptor] = None
    referenced_owner: Optional[str] = None
    argument_types: Optional[tuple[TypeDescriptor, ...]] = None

    @property
    def is_unconditional_transfer(self) -> bool:
        return self.opcode in ops.UNCONDITIONAL_TRANSFER


def _owner_name(pool: ConstantPool, class_index: int) -> Optional[str]:
    """Owner of a field/method ref; None when the owner entry is an array type."""
    t = pool.class_type(class_index)
    return t.binary_name if isinstance(t, ClassType) else None


def decode_instructions(code: bytes, pool: ConstantPool) -> tuple[Instruction, ...]:
    """Decode a code array completely; every byte belongs to one instruction."""
    out: list[Instruction] = []
    r = _Reader(code)
    while not r.eof:
        offset = r.pos
        try:
            out.append(_decode_one(r, offset, pool))
        except Truncated as exc:
            raise BadCode(f"instruction at offset {offset} overruns the code array") from exc
    offsets = {ins.offset for ins in out}
    for ins in out:
        targets = list(ins.switch_targets)
        if ins.branch_target is not None:
            targets.append(ins.branch_target)
        if ins.switch_default is not None:
            targets.append(ins.switch_default)
        for t in targets:
            if t not in offsets:
                raise BadCode(
                    f"{ins.mnemonic} at offset {ins.offset} targets {t}, not an instruction boundary"
                )
    return tuple(out)


def _decode_one(r: _Reader, offset: int, pool: ConstantPool) -> Instruction:
    op = r.u1()
    spec = ops.OPCODES.get(op)
    if spec is None:
        raise BadCode(f"unknown opcode 0x{op:02X} at offset {offset}")

    wide = False
    if op == ops.WIDE:
        sub = r.u1()
        if sub not in ops.WIDE_TARGETS:
            raise BadCode(f"wide prefix before non-wideable opcode 0x{sub:02X} at offset {offset}")
        op = sub
        spec = ops.OPCODES[op]
        wide = True

    common = dict(offset=offset, opcode=op, mnemonic=spec.mnemonic,
                  category=spec.category, wide=wide)
    fmt = spec.fmt

    if fmt == "" or fmt == "W":
        local, value = _implicit_local(spec.mnemonic)
        kind = ops.LOCAL_VALUE_KIND.get(op)
        art = ops.ARRAY_KIND.get(op)
        return Instruction(size=r.pos - offset, local_index=local, value=value,
                           referenced_type=kind or art, **common)
    if fmt == "b":
        v = r.s1()
        return Instruction(size=r.pos - offset, value=v, **common)
    if fmt == "B":
        v = r.u1()
        if op == ops.NEWARRAY and v not in ops.NEWARRAY_ATYPES:
            raise BadCode(f"newarray with invalid element type code {v} at offset {offset}")
        return Instruction(size=r.pos - offset, value=v, **common)
    if fmt == "s":
        v = r.s2()
        return Instruction(size=r.pos - offset, value=v, **common)
    if fmt == "L1":
        local = r.u2() if wide else r.u1()
        return Instruction(size=r.pos - offset, local_index=local,
                           referenced_type=ops.LOCAL_VALUE_KIND.get(op), **common)
    if fmt == "IINC":
        if wide:
            local, delta = r.u2(), r.s2()
        else:
            local, delta = r.u1(), r.s1()
        return Instruction(size=r.pos - offset, local_index=local, value=delta,
                           referenced_type=ops.LOCAL_VALUE_KIND[op], **common)
    if fmt == "T2":
        target = offset + r.s2()
        return Instruction(size=r.pos - offset, branch_target=target, **common)
    if fmt == "T4":
        target = offset + r.s4()
        return Instruction(size=r.pos - offset, branch_target=target, **common)
    if fmt == "C1" or fmt == "C2":
        index = r.u1() if fmt == "C1" else r.u2()
        return _decode_pool_op(r, offset, index, common, pool)
    if fmt == "II":
        index = r.u2()
        r.take(2)  # count byte + reserved zero
        return _decode_pool_op(r, offset, index, common, pool)
    if fmt == "ID":
        index = r.u2()
        r.take(2)  # two reserved zero bytes
        entry = pool.entry(index, CpInvokeDynamic)
        _, desc = pool.name_and_type(entry.name_and_type_index)
        md = parse_method_descriptor(desc)
        return Instruction(size=r.pos - offset, pool_index=index,
                           referenced_type=md.return_type,
                           argument_types=md.params, **common)
    if fmt == "MA":
        index = r.u2()
        dims = r.u1()
        if dims < 1:
            raise BadCode(f"multianewarray with zero dimensions at offset {offset}")
        pool.entry(index, CpClass)
        return Instruction(size=r.pos - offset, pool_index=index, value=dims, **common)
    if fmt == "TS":
        pad = (4 - (r.pos % 4)) % 4
        r.take(pad)
        default = offset + r.s4()
        low, high = r.s4(), r.s4()
        if high < low:
            raise BadCode(f"tableswitch with high < low at offset {offset}")
        targets = tuple(offset + r.s4() for _ in range(high - low + 1))
        return Instruction(size=r.pos - offset, value=low, switch_default=default,
                           switch_targets=targets, **common)
    if fmt == "LS":
        pad = (4 - (r.pos % 4)) % 4
        r.take(pad)
        default = offset + r.s4()
        npairs = r.s4()
        if npairs < 0:
            raise BadCode(f"lookupswitch with negative pair count at offset {offset}")
        targets = []
        for _ in range(npairs):
            r.s4()  # match key; irrelevant to flow analysis
            targets.append(offset + r.s4())
        return Instruction(size=r.pos - offset, switch_default=default,
                           switch_targets=tuple(targets), **common)
    raise AssertionError(f"unhandled operand format {fmt!r}")


def _decode_pool_op(r: _Reader, offset: int, index: int, common: dict, pool: ConstantPool) -> Instruction:
    op = common["opcode"]
    cat = common["category"]
    size = r.pos - offset
    if cat is ops.Category.FIELD:
        ref = pool.entry(index, CpFieldref)
        _, desc = pool.name_and_type(ref.name_and_type_index)
        return Instruction(size=size, pool_index=index,
                           referenced_type=parse_field_descriptor(desc),
                           referenced_owner=_owner_name(pool, ref.class_index), **common)
    if cat is ops.Category.INVOKE:
        ref = pool.entry(index, (CpMethodref, CpInterfaceMethodref))
        _, desc = pool.name_and_type(ref.name_and_type_index)
        md = parse_method_descriptor(desc)
        return Instruction(size=size, pool_index=index,
                           referenced_type=md.return_type,
                           referenced_owner=_owner_name(pool, ref.class_index),
                           argument_types=md.params, **common)
    if cat in (ops.Category.INSTANCE_OF, ops.Category.CHECK_CAST):
        return Instruction(size=size, pool_index=index,
                           referenced_type=pool.class_type(index), **common)
    if op in (ops.LDC, ops.LDC_W):
        pool.entry(index, _LOADABLE_LDC)
        return Instruction(size=size, pool_index=index, **common)
    if op == ops.LDC2_W:
        pool.entry(index, (CpLong, CpDouble))
        return Instruction(size=size, pool_index=index, **common)
    if op in (ops.NEW, ops.ANEWARRAY):
        pool.entry(index, CpClass)
        return Instruction(size=size, pool_index=index, **common)
    raise AssertionError(f"unhandled pool opcode 0x{op:02X}")


def _implicit_local(mnemonic: str) -> tuple[Optional[int], Optional[int]]:
    """Local index baked into ``iload_2``-style forms; push value for iconst etc."""
    if "_" in mnemonic:
        head, _, tail = mnemonic.rpartition("_")
        base = ops.BY_NAME.get(head)
        if base is not None and base.category is ops.Category.LOCAL_VAR and tail.isdigit():
            return int(tail), None
        if head in ("iconst", "lconst", "fconst", "dconst"):
            return None, -1 if tail == "m1" else int(tail)
    return None, None


# --- members and attributes ------------------------------------------------

@dataclass(frozen=True)
class RawAttribute:
    name: str
    payload: bytes


@dataclass(frozen=True)
class ExceptionHandler:
    start_pc: int
    end_pc: int
    handler_pc: int
    catch_type: Optional[str]  # None = catch-all


@dataclass(frozen=True)
class CodeAttribute:
    max_stack: int
    max_locals: int
    code_length: int
    instructions: tuple[Instruction, ...]
    exception_table: tuple[ExceptionHandler, ...]


@dataclass(frozen=True)
class FieldInfo:
    name: str
    descriptor: TypeDescriptor
    access_flags: int


@dataclass(frozen=True)
class MethodInfo:
    name: str
    descriptor: MethodDescriptor
    access_flags: int
    declared_exceptions: tuple[str, ...]
    code: Optional[CodeAttribute]
    local_variable_types: tuple[TypeDescriptor, ...]


@dataclass(frozen=True)
class RawClassFile:
    magic: int
    minor_version: int
    major_version: int
    constant_pool: ConstantPool
    access_flags: int
    this_class: int
    super_class: int  # 0 only for the root object class
    interfaces: tuple[int, ...]
    fields: tuple[FieldInfo, ...]
    methods: tuple[MethodInfo, ...]
    attributes: tuple[RawAttribute, ...]

    @property
    def class_name(self) -> str:
        return self.constant_pool.class_name(self.this_class)

    @property
    def super_name(self) -> Optional[str]:
        if self.super_class == 0:
            return None
        return self.constant_pool.class_name(self.super_class)

    @property
    def interface_names(self) -> tuple[str, ...]:
        return tuple(self.constant_pool.class_name(i) for i in self.interfaces)


def resolve_class_name(pool: ConstantPool, index: int) -> str:
    """Binary name of a Class entry ('/' normalized to '.'); arrays render as ``elem[]``."""
    return pool.class_name(index)


def parse_class(data: bytes) -> RawClassFile:
    """Parse class-file bytes completely; trailing garbage is an error."""
    r = _Reader(data)
    magic = r.u4()
    if magic != MAGIC:
        raise BadMagic(f"expected magic 0x{MAGIC:08X}, found 0x{magic:08X}")
    minor, major = r.u2(), r.u2()
    pool = _parse_pool(r)
    access = r.u2()
    this_class = r.u2()
    super_class = r.u2()
    pool.entry(this_class, CpClass)
    if super_class == 0:
        if pool.class_name(this_class) != "java.lang.Object":
            raise BadIndex("super_class may be 0 only for java.lang.Object")
    else:
        pool.entry(super_class, CpClass)
    interfaces = tuple(r.u2() for _ in range(r.u2()))
    for i in interfaces:
        pool.entry(i, CpClass)
    fields = tuple(_parse_field(r, pool) for _ in range(r.u2()))
    methods = tuple(_parse_method(r, pool) for _ in range(r.u2()))
    attributes = tuple(_parse_attribute(r, pool) for _ in range(r.u2()))
    if not r.eof:
        raise TrailingBytes(f"{len(data) - r.pos} bytes remain after the last attribute")
    return RawClassFile(
        magic=magic,
        minor_version=minor,
        major_version=major,
        constant_pool=pool,
        access_flags=access,
        this_class=this_class,
        super_class=super_class,
        interfaces=interfaces,
        fields=fields,
        methods=methods,
        attributes=attributes,
    )


def _parse_attribute(r: _Reader, pool: ConstantPool) -> RawAttribute:
    name = pool.utf8(r.u2())
    return RawAttribute(name, bytes(r.take(r.u4())))


def _parse_field(r: _Reader, pool: ConstantPool) -> FieldInfo:
    access = r.u2()
    name = pool.utf8(r.u2())
    descriptor = parse_field_descriptor(pool.utf8(r.u2()))
    for _ in range(r.u2()):
        _parse_attribute(r, pool)
    return FieldInfo(name=name, descriptor=descriptor, access_flags=access)


def _parse_method(r: _Reader, pool: ConstantPool) -> MethodInfo:
    access = r.u2()
    name = pool.utf8(r.u2())
    descriptor = parse_method_descriptor(pool.utf8(r.u2()))
    code: Optional[CodeAttribute] = None
    declared: tuple[str, ...] = ()
    lvt_types: tuple[TypeDescriptor, ...] = ()
    for _ in range(r.u2()):
        attr = _parse_attribute(r, pool)
        if attr.name == "Code" and code is None:
            code, lvt_types = _parse_code(attr.payload, pool)
        elif attr.name == "Exceptions":
            er = _Reader(attr.payload)
            declared = tuple(pool.class_name(er.u2()) for _ in range(er.u2()))
    if code is not None and access & (ACC_ABSTRACT | ACC_NATIVE):
        raise BadCode(f"abstract or native method {name!r} carries a Code attribute")
    return MethodInfo(
        name=name,
        descriptor=descriptor,
        access_flags=access,
        declared_exceptions=declared,
        code=code,
        local_variable_types=lvt_types,
    )


def _parse_code(payload: bytes, pool: ConstantPool) -> tuple[CodeAttribute, tuple[TypeDescriptor, ...]]:
    r = _Reader(payload)
    max_stack, max_locals = r.u2(), r.u2()
    code_length = r.u4()
    if code_length == 0:
        raise BadCode("empty code array")
    instructions = decode_instructions(bytes(r.take(code_length)), pool)
    offsets = {ins.offset for ins in instructions}
    handlers = []
    for _ in range(r.u2()):
        start, end, handler, catch_index = r.u2(), r.u2(), r.u2(), r.u2()
        if start not in offsets or handler not in offsets or (end not in offsets and end != code_length):
            raise BadCode(f"exception handler ({start}, {end}, {handler}) off instruction boundaries")
        catch = pool.class_name(catch_index) if catch_index else None
        handlers.append(ExceptionHandler(start, end, handler, catch))
    lvt_types: list[TypeDescriptor] = []
    for _ in range(r.u2()):
        attr = _parse_attribute(r, pool)
        if attr.name == "LocalVariableTable":
            lr = _Reader(attr.payload)
            for _ in range(lr.u2()):
                lr.take(4)  # start_pc + length
                lr.u2()  # name index
                lvt_types.append(parse_field_descriptor(pool.utf8(lr.u2())))
                lr.u2()  # slot
    if not r.eof:
        raise BadCode(f"{len(payload) - r.pos} stray bytes at the end of a Code attribute")
    code = CodeAttribute(
        max_stack=max_stack,
        max_locals=max_locals,
        code_length=code_length,
        instructions=instructions,
        exception_table=tuple(handlers),
    )
    return code, tuple(lvt_types)
