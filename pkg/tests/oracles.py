"""Independent brute-force coupling oracle.

Re-derives the literal coupling set from a parsed class without using the
production coupling module: its own opcode classification (hand-listed
numbers), its own descriptor text scanning for instruction-referenced types,
and its own filter. Only the class-file parse itself is shared, which the
round-trip suite covers separately.
"""

from oometric.classfile import (
    CpClass,
    CpFieldref,
    CpInterfaceMethodref,
    CpInvokeDynamic,
    CpMethodref,
    CpNameAndType,
    CpUtf8,
    RawClassFile,
)
from oometric.descriptors import ClassType

JDK_PREFIXES = ("java.", "javax.")

# opcode numbers straight from the instruction-set listing
FIELD_OPS = frozenset([0xB2, 0xB3, 0xB4, 0xB5])
INVOKE_REF_OPS = frozenset([0xB6, 0xB7, 0xB8, 0xB9])
OP_INVOKEDYNAMIC = 0xBA
OP_CHECKCAST = 0xC0
OP_INSTANCEOF = 0xC1
# aload/astore and their constant-index forms manipulate plain object refs
OBJECT_LOCAL_OPS = frozenset([0x19, 0x2A, 0x2B, 0x2C, 0x2D,
                              0x3A, 0x4B, 0x4C, 0x4D, 0x4E])


def _class_of_descriptor(text: str) -> str | None:
    """Class named by one field-style descriptor; arrays and primitives: none."""
    if text.startswith("L") and text.endswith(";"):
        return text[1:-1].replace("/", ".")
    return None


def _return_descriptor(method_descriptor: str) -> str:
    return method_descriptor[method_descriptor.index(")") + 1:]


def literal_coupling_oracle(cls: RawClassFile) -> set[str]:
    pool = cls.constant_pool.entries
    analyzed = _entry_class_name(pool, cls.this_class)
    names: set[str] = set()

    def add(name: str | None) -> None:
        if name is None or name == analyzed:
            return
        if any(name.startswith(p) for p in JDK_PREFIXES):
            return
        names.add(name)

    def add_model_type(t) -> None:
        add(t.binary_name if isinstance(t, ClassType) else None)

    if cls.super_class:
        add(_entry_class_name(pool, cls.super_class))
    for index in cls.interfaces:
        add(_entry_class_name(pool, index))
    for field in cls.fields:
        add_model_type(field.descriptor)
    for method in cls.methods:
        add_model_type(method.descriptor.return_type)
        for param in method.descriptor.params:
            add_model_type(param)
        for exc in method.declared_exceptions:
            add(exc)
        for lv in method.local_variable_types:
            add_model_type(lv)
        if method.code is None:
            continue
        for ins in method.code.instructions:
            op = ins.opcode
            if op in FIELD_OPS:
                ref = pool[ins.pool_index]
                assert isinstance(ref, CpFieldref)
                add(_class_of_descriptor(_nat_descriptor(pool, ref.name_and_type_index)))
            elif op in INVOKE_REF_OPS:
                ref = pool[ins.pool_index]
                assert isinstance(ref, (CpMethodref, CpInterfaceMethodref))
                desc = _nat_descriptor(pool, ref.name_and_type_index)
                add(_class_of_descriptor(_return_descriptor(desc)))
            elif op == OP_INVOKEDYNAMIC:
                ref = pool[ins.pool_index]
                assert isinstance(ref, CpInvokeDynamic)
                desc = _nat_descriptor(pool, ref.name_and_type_index)
                add(_class_of_descriptor(_return_descriptor(desc)))
            elif op in (OP_CHECKCAST, OP_INSTANCEOF):
                raw = _entry_class_raw(pool, ins.pool_index)
                if not raw.startswith("["):
                    add(raw.replace("/", "."))
            elif op in OBJECT_LOCAL_OPS:
                add("java.lang.Object")
            # every other local-variable op carries a primitive; array ops
            # carry array types; neither ever couples
    return names


def _entry_class_raw(pool, index: int) -> str:
    entry = pool[index]
    assert isinstance(entry, CpClass)
    utf8 = pool[entry.name_index]
    assert isinstance(utf8, CpUtf8)
    return utf8.text


def _entry_class_name(pool, index: int) -> str:
    return _entry_class_raw(pool, index).replace("/", ".")


def _nat_descriptor(pool, index: int) -> str:
    nat = pool[index]
    assert isinstance(nat, CpNameAndType)
    utf8 = pool[nat.descriptor_index]
    assert isinstance(utf8, CpUtf8)
    return utf8.text
