"""Coupling between object classes (CBO): unique external class references.

A class is coupled to every distinct non-JDK class it references through any
channel: superclass, implemented interfaces, field types, method signatures,
declared exceptions, local-variable types, and typed instructions. The CBO
score is the size of that set.

Two policies control how much each instruction contributes:

* ``LITERAL`` registers exactly one type per instruction: the field's type
  for field accesses, the return type for invocations, the value kind for
  local-variable ops, the array type for array ops, and the tested/cast type
  for instanceof/checkcast.
* ``EXTENDED`` additionally registers the owner class of field and method
  references, the argument types of invocations, and catch types from
  exception tables.

Array types never contribute, not even their element class: an ``ext.B[]``
field couples to nothing. This is a deliberate, documented blind spot kept
for fidelity with the literal counting rules. Nested classes of the analyzed
class count as external (only an exact name match is treated as self).
Dynamic/Module/Package constants are parsed upstream but contribute nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Optional

from . import opcodes as ops
from .classfile import RawClassFile
from .descriptors import ClassType, TypeDescriptor

DEFAULT_JDK_PREFIXES = ("java.", "javax.")


class CouplingPolicy(Enum):
    LITERAL = "literal"
    EXTENDED = "extended"


@dataclass(frozen=True)
class CouplingSet:
    """Unique external class names registered for one analyzed class."""

    analyzed_class: str
    names: frozenset[str]
    policy: CouplingPolicy = CouplingPolicy.LITERAL
    jdk_prefixes: tuple[str, ...] = DEFAULT_JDK_PREFIXES

    def __len__(self) -> int:
        return len(self.names)


def class_name_of_type(t: TypeDescriptor) -> Optional[str]:
    """Binary name of a class type; primitives, arrays, and void carry none."""
    if isinstance(t, ClassType):
        return t.binary_name
    return None


def _admitted(analyzed_class: str, jdk_prefixes: Iterable[str], name: str) -> bool:
    # reject malformed names outright so the set only ever holds plain
    # dot-separated binary names
    if not name or "[" in name or ";" in name:
        return False
    if name == analyzed_class:
        return False
    return not any(name.startswith(p) for p in jdk_prefixes)


def register_coupling(couplings: CouplingSet, name: str) -> CouplingSet:
    """Add ``name`` unless it is the analyzed class itself or a JDK class."""
    if not _admitted(couplings.analyzed_class, couplings.jdk_prefixes, name):
        return couplings
    if name in couplings.names:
        return couplings
    return replace(couplings, names=couplings.names | {name})


def register_type(couplings: CouplingSet, t: TypeDescriptor) -> CouplingSet:
    name = class_name_of_type(t)
    if name is None:
        return couplings
    return register_coupling(couplings, name)


def compute_cbo(
    cls: RawClassFile,
    policy: CouplingPolicy = CouplingPolicy.LITERAL,
    jdk_prefixes: Iterable[str] = DEFAULT_JDK_PREFIXES,
) -> tuple[int, CouplingSet]:
    """Collect every coupled class name in ``cls`` and return (CBO, set)."""
    analyzed = cls.class_name
    prefixes = tuple(jdk_prefixes)
    extended = policy is CouplingPolicy.EXTENDED
    names: set[str] = set()

    def add_name(name: Optional[str]) -> None:
        if name is not None and _admitted(analyzed, prefixes, name):
            names.add(name)

    def add_type(t: Optional[TypeDescriptor]) -> None:
        if t is not None:
            add_name(class_name_of_type(t))

    pool = cls.constant_pool
    if cls.super_class:
        add_type(pool.class_type(cls.super_class))
    for index in cls.interfaces:
        add_type(pool.class_type(index))
    for field in cls.fields:
        add_type(field.descriptor)
    for method in cls.methods:
        add_type(method.descriptor.return_type)
        for param in method.descriptor.params:
            add_type(param)
        for exc_name in method.declared_exceptions:
            add_name(exc_name)
        for lv_type in method.local_variable_types:
            add_type(lv_type)
        if method.code is None:
            continue
        for ins in method.code.instructions:
            if ins.category is ops.Category.OTHER:
                continue
            add_type(ins.referenced_type)
            if extended and ins.category in (ops.Category.FIELD, ops.Category.INVOKE):
                add_name(ins.referenced_owner)
                if ins.argument_types:
                    for arg in ins.argument_types:
                        add_type(arg)
        if extended:
            for handler in method.code.exception_table:
                add_name(handler.catch_type)

    result = CouplingSet(
        analyzed_class=analyzed,
        names=frozenset(names),
        policy=policy,
        jdk_prefixes=prefixes,
    )
    return len(names), result
