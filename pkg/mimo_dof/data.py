import csv
import json
import os

from . import __version__

SWEEP_COLUMNS = ["gamma_db", "quantity", "mean_bits", "std_err", "trials", "seed", "tool_version"]


def provenance(seed=None, trials=None):
    return {"seed": seed, "trials": trials, "tool_version": __version__}


def read_config(path):
    """Read a flat ``key=value`` run configuration.

    Blank lines and ``#`` comments are ignored; keys may carry leading dashes and use
    ``-`` or ``_`` interchangeably. Returns a dict keyed by the argparse dest name.
    """
    if not os.path.exists(path):
        raise FileNotFoundError(f"Missing config file {path}")
    out = {}
    with open(path) as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, value = line.split("=", 1)
            key = key.strip().lstrip("-").replace("-", "_")
            if not key:
                raise ValueError(f"{path}:{lineno}: empty key")
            out[key] = value.strip()
    return out


class ResultRepository:
    """Reads and writes result files under ``root`` (absolute paths are used as given)."""

    def __init__(self, root="."):
        self.root = root

    def path(self, name):
        return name if os.path.isabs(name) else os.path.join(self.root, name)

    def _ensure_parent(self, p):
        parent = os.path.dirname(p)
        if parent:
            os.makedirs(parent, exist_ok=True)

    def write_json(self, name, payload):
        p = self.path(name)
        self._ensure_parent(p)
        with open(p, "w") as f:
            json.dump(payload, f, indent=2, sort_keys=True)
            f.write("\n")
        return p

    def load_json(self, name):
        p = self.path(name)
        if not os.path.exists(p):
            raise FileNotFoundError(f"Missing {p}")
        with open(p) as f:
            return json.load(f)

    def write_csv(self, name, header, rows):
        p = self.path(name)
        self._ensure_parent(p)
        with open(p, "w", newline="") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(header)
            for row in rows:
                w.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
        return p

    def write_sweep(self, name, records, seed, trials):
        """``records`` is an iterable of ``(gamma_db, quantity, Estimate)``."""
        rows = [(float(db), q, e.mean, e.std_err, e.trials, seed, __version__) for db, q, e in records]
        return self.write_csv(name, SWEEP_COLUMNS, rows)

    def load_sweep(self, name):
        """Sweep CSV as ``{quantity: [(gamma_db, mean_bits), ...]}`` in file order."""
        p = self.path(name)
        if not os.path.exists(p):
            raise FileNotFoundError(f"Missing {p}. Expected a sweep CSV with columns {','.join(SWEEP_COLUMNS)}")
        out = {}
        with open(p, newline="") as f:
            reader = csv.DictReader(f)
            missing = {"gamma_db", "quantity", "mean_bits"} - set(reader.fieldnames or ())
            if missing:
                raise ValueError(f"{p} lacks columns {sorted(missing)}")
            for row in reader:
                out.setdefault(row["quantity"], []).append((float(row["gamma_db"]), float(row["mean_bits"])))
        return out
