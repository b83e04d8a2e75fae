"""CSV ingestion against a declared column schema, plus missing-row removal.

Input contract: RFC 4180 CSV, UTF-8, comma-delimited, double-quote quoting,
first line is the header. Header names are matched to the schema
case-insensitively after trimming, in any order; cells are stored in schema
order. Rows with the wrong cell count are hard errors, never silent drops,
so the dropped-row audit from drop_missing stays trustworthy.
"""

import csv
import io
from dataclasses import dataclass, field

from adview.cells import try_parse_numeric
from adview.errors import CsvEncodingError, CsvParseError, SchemaError

COLUMN_KINDS = ("identifier", "numeric", "categorical", "date", "duration", "target")
DEFAULT_SENTINELS = frozenset({"", "F", "NaN"})


@dataclass(frozen=True)
class ColumnSpec:
    """One declared column: its name, kind, and missing-value sentinels."""

    name: str
    kind: str
    missing_sentinels: frozenset = DEFAULT_SENTINELS

    def __post_init__(self):
        if not self.name:
            raise SchemaError("column name must be nonempty")
        if self.kind not in COLUMN_KINDS:
            raise SchemaError(f"unknown column kind {self.kind!r} for column {self.name!r}")
        object.__setattr__(self, "missing_sentinels", frozenset(self.missing_sentinels))


@dataclass(frozen=True)
class Schema:
    """Ordered column declarations; exactly one target column."""

    columns: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        seen = set()
        for col in self.columns:
            key = col.name.strip().lower()
            if key in seen:
                raise SchemaError(f"duplicate column name {col.name!r}")
            seen.add(key)
        targets = [c for c in self.columns if c.kind == "target"]
        if len(targets) != 1:
            raise SchemaError(f"schema must declare exactly one target column, found {len(targets)}")
        predictors = [c for c in self.columns if c.kind not in ("target", "identifier")]
        if not predictors:
            raise SchemaError("schema needs at least one non-target, non-identifier column")

    @property
    def names(self):
        return tuple(c.name for c in self.columns)

    @property
    def target_column(self):
        return next(c for c in self.columns if c.kind == "target")

    @property
    def feature_columns(self):
        return tuple(c for c in self.columns if c.kind not in ("target", "identifier"))

    @property
    def identifier_column(self):
        for col in self.columns:
            if col.kind == "identifier":
                return col
        return None

    def column(self, name: str) -> ColumnSpec:
        key = name.strip().lower()
        for col in self.columns:
            if col.name.strip().lower() == key:
                return col
        raise SchemaError(f"schema has no column named {name!r}")

    def with_target(self, name: str) -> "Schema":
        """Re-designate the target column; the old target becomes numeric."""
        target = self.column(name)
        if target.kind == "identifier":
            raise SchemaError(f"identifier column {name!r} cannot be the target")
        columns = []
        for col in self.columns:
            if col is target:
                columns.append(ColumnSpec(col.name, "target", col.missing_sentinels))
            elif col.kind == "target":
                columns.append(ColumnSpec(col.name, "numeric", col.missing_sentinels))
            else:
                columns.append(col)
        return Schema(tuple(columns))


@dataclass(frozen=True)
class RawTable:
    """Parsed CSV cells as text, pre-cleaning. Immutable and shareable."""

    header: tuple
    rows: tuple = field(default=())
    source_name: str = "<stream>"

    def __post_init__(self):
        object.__setattr__(self, "header", tuple(self.header))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        arity = len(self.header)
        for i, row in enumerate(self.rows):
            if len(row) != arity:
                raise CsvParseError(
                    f"{self.source_name}: row {i + 1} has {len(row)} cells, expected {arity}"
                )

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def column_values(self, index: int) -> tuple:
        return tuple(row[index] for row in self.rows)


def default_schema() -> Schema:
    """The 9-column ad-view schema the toolkit ships with."""
    return Schema(
        (
            ColumnSpec("vidid", "identifier"),
            ColumnSpec("views", "numeric"),
            ColumnSpec("likes", "numeric"),
            ColumnSpec("dislikes", "numeric"),
            ColumnSpec("comment", "numeric"),
            ColumnSpec("published", "date"),
            ColumnSpec("duration", "duration"),
            ColumnSpec("category", "categorical"),
            ColumnSpec("adview", "target"),
        )
    )


def parse_csv(source, schema: Schema, source_name: str = "<stream>") -> RawTable:
    """Parse CSV bytes (or a binary stream) against a schema.

    The file header must contain exactly the schema's column names
    (case-insensitive, trimmed, any order); cells are reordered into schema
    order. Raises SchemaError on header mismatch, CsvParseError on bad rows,
    CsvEncodingError on non-UTF-8 bytes.
    """
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, str):
        text = data
    else:
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CsvEncodingError(f"{source_name}: not valid UTF-8: {exc}") from exc

    try:
        reader = csv.reader(io.StringIO(text))
        try:
            file_header = next(reader)
        except StopIteration:
            raise CsvParseError(f"{source_name}: empty file, expected a header row") from None

        permutation = _match_header(file_header, schema, source_name)
        arity = len(file_header)
        rows = []
        for row in reader:
            if len(row) != arity:
                raise CsvParseError(
                    f"{source_name}: line {reader.line_num} has {len(row)} cells, expected {arity}"
                )
            rows.append(tuple(row[p] for p in permutation))
    except csv.Error as exc:
        raise CsvParseError(f"{source_name}: malformed CSV: {exc}") from exc

    return RawTable(header=schema.names, rows=tuple(rows), source_name=source_name)


def _match_header(file_header, schema: Schema, source_name: str):
    """Positions of each schema column within the file header."""
    positions = {}
    for pos, name in enumerate(file_header):
        key = name.strip().lower()
        if key in positions:
            raise SchemaError(f"{source_name}: duplicate header column {name!r}")
        positions[key] = pos
    schema_keys = [c.name.strip().lower() for c in schema.columns]
    missing = [k for k in schema_keys if k not in positions]
    extra = [k for k in positions if k not in set(schema_keys)]
    if missing or extra:
        detail = []
        if missing:
            detail.append(f"missing {sorted(missing)}")
        if extra:
            detail.append(f"unexpected {sorted(extra)}")
        raise SchemaError(f"{source_name}: header does not match schema: {'; '.join(detail)}")
    return [positions[k] for k in schema_keys]


def write_csv(table: RawTable) -> str:
    """Serialize a RawTable back to CSV text (round-trips through parse_csv)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.header)
    writer.writerows(table.rows)
    return buffer.getvalue()


def drop_missing(table: RawTable, schema: Schema):
    """Remove rows where any cell equals a sentinel of its column.

    Returns (cleaned table, dropped row count). Surviving row order is
    preserved; zero survivors is legal.
    """
    sentinels = [schema.column(name).missing_sentinels for name in table.header]
    kept = []
    for row in table.rows:
        if any(cell in sentinels[j] for j, cell in enumerate(row)):
            continue
        kept.append(row)
    cleaned = RawTable(header=table.header, rows=tuple(kept), source_name=table.source_name)
    return cleaned, table.n_rows - len(kept)


@dataclass(frozen=True)
class ColumnSummary:
    name: str
    kind: str
    non_missing: int
    distinct: int
    minimum: float | None = None
    maximum: float | None = None


def summarize(table: RawTable, schema: Schema):
    """Per-column counts: non-missing, distinct, min/max where cells parse numerically."""
    summaries = []
    for j, name in enumerate(table.header):
        spec = schema.column(name)
        cells = [row[j] for row in table.rows if row[j] not in spec.missing_sentinels]
        numeric = [v for v in (try_parse_numeric(c) for c in cells) if v is not None]
        summaries.append(
            ColumnSummary(
                name=name,
                kind=spec.kind,
                non_missing=len(cells),
                distinct=len(set(cells)),
                minimum=min(numeric) if numeric else None,
                maximum=max(numeric) if numeric else None,
            )
        )
    return summaries


def parse_kv_document(text: str) -> dict:
    """Flat `key = value` document: one pair per line, # comments, blank lines ok."""
    values = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigDocumentError(f"line {lineno}: expected key = value, got {raw_line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if not key:
            raise ConfigDocumentError(f"line {lineno}: empty key")
        if key in values:
            raise ConfigDocumentError(f"line {lineno}: duplicate key {key!r}")
        values[key] = value.strip()
    return values


# SchemaError doubles as the config-document error for schema files; the CLI
# run-config parser wraps this into ConfigError instead.
ConfigDocumentError = SchemaError


def parse_schema_document(text: str) -> Schema:
    """Build a Schema from a flat key=value document.

    Layout:
        columns = vidid, views, ..., adview      # file order
        kind.views = numeric                     # default: numeric
        kind.adview = target
        sentinels.views = ,F,NaN                 # default: "", "F", "NaN"

    Sentinel lists are comma-split verbatim, so a leading/trailing comma
    declares the empty string.
    """
    values = parse_kv_document(text)
    if "columns" not in values:
        raise SchemaError("schema document must declare a 'columns' line")
    names = [n.strip() for n in values["columns"].split(",") if n.strip()]
    if not names:
        raise SchemaError("schema 'columns' line declares no columns")

    known = {f"kind.{n}" for n in names} | {f"sentinels.{n}" for n in names} | {"columns"}
    unknown = sorted(set(values) - known)
    if unknown:
        raise SchemaError(f"schema document has unknown keys: {unknown}")

    columns = []
    for name in names:
        kind = values.get(f"kind.{name}", "numeric")
        if f"sentinels.{name}" in values:
            sentinels = frozenset(values[f"sentinels.{name}"].split(","))
        else:
            sentinels = DEFAULT_SENTINELS
        columns.append(ColumnSpec(name=name, kind=kind, missing_sentinels=sentinels))
    return Schema(tuple(columns))


def load_schema(path) -> Schema:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_schema_document(handle.read())
