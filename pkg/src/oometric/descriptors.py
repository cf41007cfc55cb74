"""Type and method descriptor grammar.

Descriptors are the compact type encoding used throughout a class file:
``I`` for int, ``Ljava/lang/String;`` for a class reference, ``[[D`` for
``double[][]``, and ``(ILjava/lang/Object;)J`` for a method signature.
Parsing produces a small tagged union that the rest of the analyzer works
with; ``format_type``/``format_method`` invert the parse exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import BadDescriptor

#: descriptor base char -> primitive kind
PRIMITIVE_KINDS = {
    "B": "byte",
    "C": "char",
    "D": "double",
    "F": "float",
    "I": "int",
    "J": "long",
    "S": "short",
    "Z": "boolean",
}
_KIND_TO_CODE = {kind: code for code, kind in PRIMITIVE_KINDS.items()}


@dataclass(frozen=True)
class Primitive:
    kind: str

    def __post_init__(self):
        if self.kind not in _KIND_TO_CODE:
            raise ValueError(f"unknown primitive kind {self.kind!r}")


@dataclass(frozen=True)
class ClassType:
    binary_name: str  # dot-separated


@dataclass(frozen=True)
class ArrayType:
    element: Union[Primitive, ClassType]
    dims: int

    def __post_init__(self):
        if self.dims < 1:
            raise ValueError("array dims must be >= 1")
        if isinstance(self.element, (ArrayType, Void)):
            raise ValueError("array element must be a primitive or class type")


@dataclass(frozen=True)
class Void:
    pass


VOID = Void()

TypeDescriptor = Union[Primitive, ClassType, ArrayType, Void]

BYTE = Primitive("byte")
CHAR = Primitive("char")
DOUBLE = Primitive("double")
FLOAT = Primitive("float")
INT = Primitive("int")
LONG = Primitive("long")
SHORT = Primitive("short")
BOOLEAN = Primitive("boolean")
OBJECT = ClassType("java.lang.Object")


@dataclass(frozen=True)
class MethodDescriptor:
    params: tuple[TypeDescriptor, ...]
    return_type: TypeDescriptor


def type_name(t: TypeDescriptor) -> str:
    """Human-readable rendering: ``int``, ``org.x.B``, ``org.x.B[]``, ``void``."""
    if isinstance(t, Primitive):
        return t.kind
    if isinstance(t, ClassType):
        return t.binary_name
    if isinstance(t, ArrayType):
        return type_name(t.element) + "[]" * t.dims
    return "void"


def format_type(t: TypeDescriptor) -> str:
    """Render a type back to descriptor syntax (internal '/' form)."""
    if isinstance(t, Primitive):
        return _KIND_TO_CODE[t.kind]
    if isinstance(t, ClassType):
        return "L" + t.binary_name.replace(".", "/") + ";"
    if isinstance(t, ArrayType):
        return "[" * t.dims + format_type(t.element)
    return "V"


def format_method(d: MethodDescriptor) -> str:
    return "(" + "".join(format_type(p) for p in d.params) + ")" + format_type(d.return_type)


def _parse_one(text: str, pos: int) -> tuple[TypeDescriptor, int]:
    """Parse one descriptor starting at ``pos``; returns (type, next position)."""
    if pos >= len(text):
        raise BadDescriptor(f"empty descriptor at offset {pos} in {text!r}")
    dims = 0
    while pos < len(text) and text[pos] == "[":
        dims += 1
        pos += 1
    if pos >= len(text):
        raise BadDescriptor(f"array descriptor missing element type in {text!r}")
    c = text[pos]
    base: TypeDescriptor
    if c in PRIMITIVE_KINDS:
        base = Primitive(PRIMITIVE_KINDS[c])
        pos += 1
    elif c == "L":
        end = text.find(";", pos)
        if end < 0:
            raise BadDescriptor(f"unterminated class name in {text!r}")
        name = text[pos + 1 : end]
        if not name:
            raise BadDescriptor(f"empty class name in {text!r}")
        base = ClassType(name.replace("/", "."))
        pos = end + 1
    elif c == "V":
        if dims:
            raise BadDescriptor(f"array of void in {text!r}")
        return VOID, pos + 1
    else:
        raise BadDescriptor(f"unknown base type {c!r} in {text!r}")
    if dims:
        return ArrayType(base, dims), pos
    return base, pos


def parse_field_descriptor(text: str) -> TypeDescriptor:
    """Parse a field descriptor; exactly one type, and never void."""
    t, pos = _parse_one(text, 0)
    if isinstance(t, Void):
        raise BadDescriptor(f"void is not a field type: {text!r}")
    if pos != len(text):
        raise BadDescriptor(f"trailing characters after descriptor in {text!r}")
    return t


def parse_method_descriptor(text: str) -> MethodDescriptor:
    """Parse ``(paramdescs)returndesc``; the return type may be void."""
    if not text or text[0] != "(":
        raise BadDescriptor(f"method descriptor must start with '(' in {text!r}")
    pos = 1
    params: list[TypeDescriptor] = []
    while True:
        if pos >= len(text):
            raise BadDescriptor(f"unterminated parameter list in {text!r}")
        if text[pos] == ")":
            pos += 1
            break
        t, pos = _parse_one(text, pos)
        if isinstance(t, Void):
            raise BadDescriptor(f"void parameter in {text!r}")
        params.append(t)
    ret, pos = _parse_one(text, pos)
    if pos != len(text):
        raise BadDescriptor(f"trailing characters after return type in {text!r}")
    return MethodDescriptor(tuple(params), ret)
