"""Object-oriented complexity metrics for Java: decision counting over source,
class-coupling over bytecode, and a combined risk figure per class."""

__version__ = "0.1.0"

from .classfile import (
    CodeAttribute,
    ConstantPool,
    FieldInfo,
    Instruction,
    MethodInfo,
    RawClassFile,
    decode_instructions,
    parse_class,
    resolve_class_name,
)
from .coupling import (
    DEFAULT_JDK_PREFIXES,
    CouplingPolicy,
    CouplingSet,
    class_name_of_type,
    compute_cbo,
    register_coupling,
    register_type,
)
from .cyclomatic import (
    ControlFlowGraph,
    DecisionCount,
    SourceUnit,
    build_cfg,
    cc_from_cfg,
    cc_of_source,
    count_decision_points,
    load_source_unit,
    strip_noncode,
)
from .descriptors import (
    ArrayType,
    ClassType,
    MethodDescriptor,
    Primitive,
    TypeDescriptor,
    Void,
    parse_field_descriptor,
    parse_method_descriptor,
)
from .errors import (
    BadCode,
    BadConstantTag,
    BadDescriptor,
    BadIndex,
    BadMagic,
    ClassFileError,
    TrailingBytes,
    Truncated,
)
from .metrics import MetricsRecord, Provenance, RiskLevel, classify_risk, combine

__all__ = [
    "ArrayType",
    "BadCode",
    "BadConstantTag",
    "BadDescriptor",
    "BadIndex",
    "BadMagic",
    "ClassFileError",
    "ClassType",
    "CodeAttribute",
    "ConstantPool",
    "ControlFlowGraph",
    "CouplingPolicy",
    "CouplingSet",
    "DEFAULT_JDK_PREFIXES",
    "DecisionCount",
    "FieldInfo",
    "Instruction",
    "MethodDescriptor",
    "MethodInfo",
    "MetricsRecord",
    "Primitive",
    "Provenance",
    "RawClassFile",
    "RiskLevel",
    "SourceUnit",
    "TrailingBytes",
    "Truncated",
    "TypeDescriptor",
    "Void",
    "build_cfg",
    "cc_from_cfg",
    "cc_of_source",
    "class_name_of_type",
    "classify_risk",
    "combine",
    "compute_cbo",
    "count_decision_points",
    "decode_instructions",
    "load_source_unit",
    "parse_class",
    "parse_field_descriptor",
    "parse_method_descriptor",
    "register_coupling",
    "register_type",
    "resolve_class_name",
    "strip_noncode",
]
