"""Schema-tagged sweep tables and their CSV / JSON serialization."""
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

__all__ = ["SCHEMAS", "SweepTable", "format_number", "write_table", "read_table"]

SCHEMAS = {
    "axion_derived": [
        ("m_a", "eV"), ("g_ae", "GeV^-1"), ("omega_a", "rad/s"), ("a0", "eV"),
        ("tau_a", "s"), ("ell_a", "m"), ("B_eff_amp", "T"), ("beta_mod", "1"),
        ("T_seg", "s"),
    ],
    "gain_vs_k": [
        ("n_rep", "1"), ("k_L", "1"), ("N_phys", "1"), ("gamma_eff", "1/s"), ("eta", "1"),
    ],
    "regimes_map": [
        ("gamma_loc_T", "1"), ("gamma_eff_T", "1"), ("k_star", "1"), ("eta_max", "1"),
        ("benefit", "1"),
    ],
    "distance_tradeoff": [
        ("p_g", "1"), ("p_m", "1"), ("n_rep", "1"), ("gamma_eff_T", "1"),
        ("k_opt", "1"), ("eta_max", "1"),
    ],
    "scaling_vs_n": [
        ("N", "1"), ("g_sql", "GeV^-1"), ("g_qec", "GeV^-1"), ("g_heisenberg", "GeV^-1"),
    ],
    "sensitivity_vs_mass": [
        ("m_a", "eV"), ("T_seg", "s"), ("k_opt", "1"), ("eta", "1"),
        ("g_base", "GeV^-1"), ("g_qec", "GeV^-1"), ("k_boundary", "1"),
    ],
    # check: 0 exhaustive vs closed tail, 1 repetition MC, 2 GHZ envelope MC
    "mc_validation": [
        ("check", "1"), ("n", "1"), ("param", "1"), ("expected", "1"),
        ("estimate", "1"), ("std_error", "1"), ("delta", "1"), ("passed", "1"),
    ],
}


@dataclass
class SweepTable:
    schema_name: str
    columns: list = None
    rows: list = field(default_factory=list)
    dropped: int = 0
    # free-form run summary; not serialized
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.columns is None:
            if self.schema_name not in SCHEMAS:
                raise KeyError(f"unknown schema {self.schema_name!r}")
            self.columns = list(SCHEMAS[self.schema_name])

    @property
    def names(self):
        return [c[0] for c in self.columns]

    def add(self, *values):
        if len(values) != len(self.columns):
            raise ValueError(
                f"{self.schema_name}: row has {len(values)} values, expected {len(self.columns)}"
            )
        vals = tuple(float(v) for v in values)
        if all(math.isfinite(v) for v in vals):
            self.rows.append(vals)
        else:
            self.dropped += 1

    def column(self, name):
        i = self.names.index(name)
        return [r[i] for r in self.rows]

    def __len__(self):
        return len(self.rows)


def format_number(x):
    """Nine significant digits in scientific notation with a bare exponent: 1.11053000e1."""
    mantissa, exp = f"{x:.8e}".split("e")
    return f"{mantissa}e{int(exp)}"


def _header_token(name, unit):
    return f"{name}[{unit}]"


def _parse_header_token(tok):
    name, _, unit = tok.partition("[")
    return name, unit.rstrip("]")


def write_table(table, path, fmt="csv"):
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        if fmt == "csv":
            lines = [",".join(_header_token(n, u) for n, u in table.columns)]
            lines += [",".join(format_number(v) for v in row) for row in table.rows]
            if table.dropped:
                lines.append(f"# dropped_rows={table.dropped}")
            path.write_text("\n".join(lines) + "\n")
        elif fmt == "json":
            records = [
                {_header_token(n, u): v for (n, u), v in zip(table.columns, row)}
                for row in table.rows
            ]
            if table.dropped:
                records.append({"_footer": {"dropped_rows": table.dropped}})
            path.write_text(json.dumps(records, indent=1) + "\n")
        else:
            raise ValueError(f"unknown format {fmt!r}")
    except OSError as exc:
        raise OSError(f"cannot write table to {path}: {exc}") from exc


def read_table(path, schema_name=None):
    """Inverse of :func:`write_table`; the format is taken from the suffix."""
    path = Path(path)
    schema_name = schema_name or path.stem
    if path.suffix == ".json":
        records = json.loads(path.read_text())
        dropped = 0
        if records and "_footer" in records[-1]:
            dropped = records.pop()["_footer"]["dropped_rows"]
        if records:
            columns = [_parse_header_token(k) for k in records[0]]
        else:
            columns = SCHEMAS.get(schema_name)
        table = SweepTable(schema_name, columns=columns)
        table.rows = [tuple(float(v) for v in r.values()) for r in records]
        table.dropped = dropped
        return table
    lines = path.read_text().splitlines()
    columns = [_parse_header_token(tok) for tok in lines[0].split(",")]
    table = SweepTable(schema_name, columns=columns)
    for line in lines[1:]:
        if line.startswith("# dropped_rows="):
            table.dropped = int(line.split("=", 1)[1])
        elif line:
            table.rows.append(tuple(float(v) for v in line.split(",")))
    return table
