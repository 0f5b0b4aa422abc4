"""
Convention ledger: the handful of choices the algebra does not fix by itself.

The ledger is a small text file of ``key=value`` lines preceded by a
checksum header.  A default ledger ships with the package; ``calibrate``
regenerates it from the discriminating test suites.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, fields
from functools import lru_cache
from importlib import resources
from pathlib import Path

OPERATOR_ORDERS = ("right-first", "left-first")
LEG_LENGTHS = ("standard", "literal")
TDELTAS = ("t^(n-i)", "t^(i-1)", "t^-(i-1)", "t^-(n-i)")
L_STATISTICS = ("ascents", "descents", "-ascents", "-descents", "zero", "ascents+n")

HEADER = "# macpresym convention ledger"


class LedgerError(RuntimeError):
    pass


@dataclass(frozen=True)
class Conventions:
    operator_order: str = "right-first"
    leg_length: str = "standard"
    tdelta: str = "t^(n-i)"
    l_statistic: str = "ascents"

    def __post_init__(self):
        for f, allowed in (("operator_order", OPERATOR_ORDERS), ("leg_length", LEG_LENGTHS),
                           ("tdelta", TDELTAS), ("l_statistic", L_STATISTICS)):
            if getattr(self, f) not in allowed:
                raise ValueError("%s=%r is not one of %s" % (f, getattr(self, f), allowed))

    def replace(self, **kw):
        vals = {f.name: getattr(self, f.name) for f in fields(self)}
        vals.update(kw)
        return Conventions(**vals)

    def tdelta_exponents(self, n):
        """Exponents of t at z_1..z_n for the principal specialization."""
        return {
            "t^(n-i)": [n - i for i in range(1, n + 1)],
            "t^(i-1)": [i - 1 for i in range(1, n + 1)],
            "t^-(i-1)": [-(i - 1) for i in range(1, n + 1)],
            "t^-(n-i)": [-(n - i) for i in range(1, n + 1)],
        }[self.tdelta]

    def l_of(self, eta):
        n = len(eta)
        asc = sum(1 for i in range(n) for j in range(i + 1, n) if eta[i] < eta[j])
        desc = sum(1 for i in range(n) for j in range(i + 1, n) if eta[i] > eta[j])
        if self.l_statistic == "ascents+n":
            # ascents plus n(eta+) = sum (i-1) eta+_i
            return asc + sum(i * k for i, k in enumerate(sorted(eta, reverse=True)))
        return {"ascents": asc, "descents": desc, "-ascents": -asc,
                "-descents": -desc, "zero": 0}[self.l_statistic]


CONVENTION_KEYS = tuple(f.name for f in fields(Conventions))


def _checksum(body):
    return hashlib.sha256(body.encode("utf-8")).hexdigest()


def format_ledger(conv, evidence=None):
    """Ledger text for ``conv``; ``evidence`` is an ordered list of (key, value)."""
    lines = ["%s=%s" % (k, getattr(conv, k)) for k in CONVENTION_KEYS]
    for k, v in evidence or ():
        lines.append("evidence.%s=%s" % (k, v))
    body = "\n".join(lines) + "\n"
    return "%s\n# sha256=%s\n%s" % (HEADER, _checksum(body), body)


def parse_ledger(text):
    lines = text.splitlines(keepends=True)
    if len(lines) < 2 or lines[0].strip() != HEADER or not lines[1].startswith("# sha256="):
        raise LedgerError("not a convention ledger (missing header)")
    expected = lines[1].strip()[len("# sha256="):]
    body = "".join(lines[2:])
    if _checksum(body) != expected:
        raise LedgerError("ledger checksum mismatch; re-run calibrate")
    values = {}
    for line in body.splitlines():
        if not line.strip():
            continue
        key, sep, val = line.partition("=")
        if not sep:
            raise LedgerError("malformed ledger line %r" % (line,))
        values[key.strip()] = val.strip()
    missing = [k for k in CONVENTION_KEYS if k not in values]
    if missing:
        raise LedgerError("ledger lacks %s" % ", ".join(missing))
    try:
        return Conventions(**{k: values[k] for k in CONVENTION_KEYS})
    except ValueError as exc:
        raise LedgerError(str(exc)) from None


def default_ledger_path():
    return Path(str(resources.files("macpresym") / "data" / "conventions.ledger"))


def load_ledger(path=None):
    path = default_ledger_path() if path is None else Path(path)
    if not path.exists():
        raise LedgerError("no convention ledger at %s; run 'macpresym calibrate'" % path)
    return parse_ledger(path.read_text(encoding="utf-8"))


@lru_cache(maxsize=1)
def default_conventions():
    return load_ledger()
