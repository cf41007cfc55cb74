"""JVM opcode table: mnemonics, operand formats, and analysis categories.

Operand format codes (bytes following the opcode):
    ""       no operands
    "b"/"B"  one signed / unsigned byte immediate
    "s"      one signed 16-bit immediate
    "L1"     one unsigned byte local-variable index
    "C1"     one unsigned byte constant-pool index (ldc only)
    "C2"     one unsigned 16-bit constant-pool index
    "T2"     signed 16-bit branch displacement
    "T4"     signed 32-bit branch displacement
    "IINC"   unsigned byte local index + signed byte increment
    "II"     invokeinterface: u2 pool index + count byte + zero byte
    "ID"     invokedynamic: u2 pool index + two zero bytes
    "MA"     multianewarray: u2 pool index + dimension byte
    "W"/"TS"/"LS"  wide / tableswitch / lookupswitch, decoded specially
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from . import descriptors as d


class Category(Enum):
    LOCAL_VAR = "LocalVar"
    ARRAY = "Array"
    FIELD = "Field"
    INVOKE = "Invoke"
    INSTANCE_OF = "InstanceOf"
    CHECK_CAST = "CheckCast"
    BRANCH = "Branch"
    SWITCH = "Switch"
    OTHER = "Other"


class OpSpec(NamedTuple):
    code: int
    mnemonic: str
    fmt: str
    category: Category


OPCODES: dict[int, OpSpec] = {}
BY_NAME: dict[str, OpSpec] = {}


def _op(code: int, mnemonic: str, fmt: str = "", cat: Category = Category.OTHER) -> int:
    spec = OpSpec(code, mnemonic, fmt, cat)
    assert code not in OPCODES and mnemonic not in BY_NAME
    OPCODES[code] = spec
    BY_NAME[mnemonic] = spec
    return code


_LV = Category.LOCAL_VAR
_AR = Category.ARRAY

NOP = _op(0x00, "nop")
_op(0x01, "aconst_null")
for _i, _n in enumerate(["iconst_m1", "iconst_0", "iconst_1", "iconst_2",
                         "iconst_3", "iconst_4", "iconst_5"]):
    _op(0x02 + _i, _n)
_op(0x09, "lconst_0")
_op(0x0A, "lconst_1")
_op(0x0B, "fconst_0")
_op(0x0C, "fconst_1")
_op(0x0D, "fconst_2")
_op(0x0E, "dconst_0")
_op(0x0F, "dconst_1")
_op(0x10, "bipush", "b")
_op(0x11, "sipush", "s")
LDC = _op(0x12, "ldc", "C1")
LDC_W = _op(0x13, "ldc_w", "C2")
LDC2_W = _op(0x14, "ldc2_w", "C2")
_op(0x15, "iload", "L1", _LV)
_op(0x16, "lload", "L1", _LV)
_op(0x17, "fload", "L1", _LV)
_op(0x18, "dload", "L1", _LV)
_op(0x19, "aload", "L1", _LV)
for _i, _p in enumerate(["iload", "lload", "fload", "dload", "aload"]):
    for _k in range(4):
        _op(0x1A + 4 * _i + _k, f"{_p}_{_k}", "", _LV)
for _i, _n in enumerate(["iaload", "laload", "faload", "daload",
                         "aaload", "baload", "caload", "saload"]):
    _op(0x2E + _i, _n, "", _AR)
_op(0x36, "istore", "L1", _LV)
_op(0x37, "lstore", "L1", _LV)
_op(0x38, "fstore", "L1", _LV)
_op(0x39, "dstore", "L1", _LV)
_op(0x3A, "astore", "L1", _LV)
for _i, _p in enumerate(["istore", "lstore", "fstore", "dstore", "astore"]):
    for _k in range(4):
        _op(0x3B + 4 * _i + _k, f"{_p}_{_k}", "", _LV)
for _i, _n in enumerate(["iastore", "lastore", "fastore", "dastore",
                         "aastore", "bastore", "castore", "sastore"]):
    _op(0x4F + _i, _n, "", _AR)
for _i, _n in enumerate(["pop", "pop2", "dup", "dup_x1", "dup_x2",
                         "dup2", "dup2_x1", "dup2_x2", "swap"]):
    _op(0x57 + _i, _n)
for _i, _n in enumerate(["iadd", "ladd", "fadd", "dadd", "isub", "lsub", "fsub",
                         "dsub", "imul", "lmul", "fmul", "dmul", "idiv", "ldiv",
                         "fdiv", "ddiv", "irem", "lrem", "frem", "drem", "ineg",
                         "lneg", "fneg", "dneg", "ishl", "lshl", "ishr", "lshr",
                         "iushr", "lushr", "iand", "land", "ior", "lor",
                         "ixor", "lxor"]):
    _op(0x60 + _i, _n)
IINC = _op(0x84, "iinc", "IINC", _LV)
for _i, _n in enumerate(["i2l", "i2f", "i2d", "l2i", "l2f", "l2d", "f2i", "f2l",
                         "f2d", "d2i", "d2l", "d2f", "i2b", "i2c", "i2s"]):
    _op(0x85 + _i, _n)
_op(0x94, "lcmp")
_op(0x95, "fcmpl")
_op(0x96, "fcmpg")
_op(0x97, "dcmpl")
_op(0x98, "dcmpg")
for _i, _n in enumerate(["ifeq", "ifne", "iflt", "ifge", "ifgt", "ifle",
                         "if_icmpeq", "if_icmpne", "if_icmplt", "if_icmpge",
                         "if_icmpgt", "if_icmple", "if_acmpeq", "if_acmpne"]):
    _op(0x99 + _i, _n, "T2", Category.BRANCH)
GOTO = _op(0xA7, "goto", "T2")
JSR = _op(0xA8, "jsr", "T2")
RET = _op(0xA9, "ret", "L1")
TABLESWITCH = _op(0xAA, "tableswitch", "TS", Category.SWITCH)
LOOKUPSWITCH = _op(0xAB, "lookupswitch", "LS", Category.SWITCH)
for _i, _n in enumerate(["ireturn", "lreturn", "freturn", "dreturn", "areturn",
                         "return"]):
    _op(0xAC + _i, _n)
_op(0xB2, "getstatic", "C2", Category.FIELD)
_op(0xB3, "putstatic", "C2", Category.FIELD)
_op(0xB4, "getfield", "C2", Category.FIELD)
_op(0xB5, "putfield", "C2", Category.FIELD)
_op(0xB6, "invokevirtual", "C2", Category.INVOKE)
_op(0xB7, "invokespecial", "C2", Category.INVOKE)
_op(0xB8, "invokestatic", "C2", Category.INVOKE)
INVOKEINTERFACE = _op(0xB9, "invokeinterface", "II", Category.INVOKE)
INVOKEDYNAMIC = _op(0xBA, "invokedynamic", "ID", Category.INVOKE)
NEW = _op(0xBB, "new", "C2")
NEWARRAY = _op(0xBC, "newarray", "B")
ANEWARRAY = _op(0xBD, "anewarray", "C2")
_op(0xBE, "arraylength")
ATHROW = _op(0xBF, "athrow")
CHECKCAST = _op(0xC0, "checkcast", "C2", Category.CHECK_CAST)
INSTANCEOF = _op(0xC1, "instanceof", "C2", Category.INSTANCE_OF)
_op(0xC2, "monitorenter")
_op(0xC3, "monitorexit")
WIDE = _op(0xC4, "wide", "W")
MULTIANEWARRAY = _op(0xC5, "multianewarray", "MA")
_op(0xC6, "ifnull", "T2", Category.BRANCH)
_op(0xC7, "ifnonnull", "T2", Category.BRANCH)
GOTO_W = _op(0xC8, "goto_w", "T4")
JSR_W = _op(0xC9, "jsr_w", "T4")

#: value kind manipulated by a local-variable load/store/increment
LOCAL_VALUE_KIND: dict[int, d.TypeDescriptor] = {}
for _code, _spec in OPCODES.items():
    if _spec.category is _LV:
        LOCAL_VALUE_KIND[_code] = {
            "i": d.INT, "l": d.LONG, "f": d.FLOAT, "d": d.DOUBLE, "a": d.OBJECT,
        }[_spec.mnemonic[0]]

#: array type manipulated by an array load/store (one dimension)
_ELEMENT_BY_LETTER = {
    "i": d.INT, "l": d.LONG, "f": d.FLOAT, "d": d.DOUBLE,
    "a": d.OBJECT, "b": d.BYTE, "c": d.CHAR, "s": d.SHORT,
}
ARRAY_KIND: dict[int, d.ArrayType] = {
    code: d.ArrayType(_ELEMENT_BY_LETTER[spec.mnemonic[0]], 1)
    for code, spec in OPCODES.items()
    if spec.category is _AR
}

#: newarray operand byte -> element kind
NEWARRAY_ATYPES = {
    4: d.BOOLEAN, 5: d.CHAR, 6: d.FLOAT, 7: d.DOUBLE,
    8: d.BYTE, 9: d.SHORT, 10: d.INT, 11: d.LONG,
}

#: sub-opcodes the wide prefix may modify
WIDE_TARGETS = frozenset(
    list(range(0x15, 0x1A)) + list(range(0x36, 0x3B)) + [IINC, RET]
)

_RETURNS = frozenset(range(0xAC, 0xB2))

#: opcodes that always leave the block: jumps, returns, throw, subroutine ops
UNCONDITIONAL_TRANSFER = frozenset([GOTO, GOTO_W, JSR, JSR_W, RET, ATHROW]) | _RETURNS

#: unconditional jumps that carry a single static target
GOTO_FAMILY = frozenset([GOTO, GOTO_W, JSR, JSR_W])


def mnemonic(code: int) -> str:
    return OPCODES[code].mnemonic
