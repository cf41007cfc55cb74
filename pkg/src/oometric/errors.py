"""Exception types raised while reading class-file input."""


class ClassFileError(ValueError):
    """Base class for structural errors in class-file bytes."""


class BadMagic(ClassFileError):
    """First four bytes are not CA FE BA BE."""


class Truncated(ClassFileError):
    """Input ended in the middle of a structure."""


class TrailingBytes(ClassFileError):
    """Bytes remain after the last class-level attribute."""


class BadConstantTag(ClassFileError):
    """Unknown constant-pool tag."""


class BadIndex(ClassFileError):
    """Constant-pool index out of range, unusable, or of the wrong kind."""


class BadDescriptor(ClassFileError):
    """Field or method descriptor violates the descriptor grammar."""


class BadCode(ClassFileError):
    """Instruction stream failed to decode."""
