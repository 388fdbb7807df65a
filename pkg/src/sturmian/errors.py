"""Exception hierarchy shared by every module of the package."""


class SturmianError(ValueError):
    """Base class; the CLI turns any of these into a one-line error report."""


class ParseError(SturmianError):
    pass


class NotAPrefix(SturmianError):
    pass


class NotASuffix(SturmianError):
    pass


class IndexOutOfRange(SturmianError, IndexError):
    pass


class NotTypeI(SturmianError):
    pass


class NotProlongable(SturmianError):
    pass


class NoCertificate(SturmianError):
    pass


class NoCommonPrefix(SturmianError):
    """Raised when ψ(a)^ω and ψ(b)^ω disagree before the requested length.

    Cannot happen for a standard morphism inside the admissible range, so
    seeing it means the certificate lies about the images.
    """


class CertificateMismatch(SturmianError):
    pass


class DirectiveTooShort(SturmianError):
    pass


class UnsupportedSlope(SturmianError):
    """The conjugate decompositions only exist for slopes [0;2,(r)]."""


class CapExceeded(SturmianError):
    pass
