"""Exception hierarchy shared across the package.

The CLI maps these onto stable exit codes, so new error conditions should
subclass an existing family rather than raising bare builtins.
"""


class AdviewError(Exception):
    """Base class for all package errors."""


class SchemaError(AdviewError):
    """Schema document invalid, or a CSV header does not match the schema."""


class CsvParseError(AdviewError):
    """Malformed CSV content (wrong cell count, bad quoting)."""


class CsvEncodingError(AdviewError):
    """Input bytes are not valid UTF-8."""


class CellError(AdviewError):
    """A cell could not be converted to its numeric form."""


class UnknownCategoryError(CellError):
    """A categorical value was absent from the fitted encoder."""


class NotFittedError(AdviewError):
    """predict was called before fit."""


class FeatureMismatchError(AdviewError):
    """Input feature count or names do not match the fitted artifact."""


class DivergenceError(AdviewError):
    """Training produced a non-finite loss."""

    def __init__(self, message, epoch, batch=None):
        super().__init__(message)
        self.epoch = epoch
        self.batch = batch


class ConfigError(AdviewError):
    """Run-config document invalid or inconsistent flag values."""


class BundleError(AdviewError):
    """Base class for model bundle file problems."""


class BundleVersionError(BundleError):
    """Bundle carries an unsupported format version."""


class BundleKindError(BundleError):
    """Bundle carries an unknown model kind tag."""


class BundleCorruptionError(BundleError):
    """Bundle is truncated or structurally invalid."""
