"""Reference values shipped as plain-text fixtures (printed polynomials and lambda tables)."""

from __future__ import annotations

from importlib import resources

from .algebra import gf
from .polyring import Polynomial, parse

_FIELDS = {"c4": 3, "g12": 3, "c2iv": 4, "c4iv": 4, "h6": 4, "c8iv": 4}


def names() -> list[str]:
    d = resources.files("colordesigns").joinpath("data/fixtures")
    return sorted(p.name[:-4] for p in d.iterdir() if p.name.endswith(".txt"))


def read(name: str) -> tuple[dict[str, str], str]:
    """(metadata, body) of a fixture; '#' lines are comments, '---' ends the header."""
    text = resources.files("colordesigns").joinpath(f"data/fixtures/{name}.txt").read_text()
    meta: dict[str, str] = {}
    head, _, body = text.partition("\n---\n")
    for line in head.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        k, _, v = line.partition(":")
        meta[k.strip()] = v.strip()
    return meta, body.strip()


def polynomial(name: str) -> tuple[dict[str, str], Polynomial]:
    meta, body = read(name)
    return meta, parse(body, gf(_FIELDS[meta["code"]]))


def table(name: str) -> tuple[dict[str, str], list[str], dict[str, list[int]]]:
    """A lambda table: header multisets and ``{row name: values}``."""
    meta, body = read(name)
    rows = [ln.split() for ln in body.splitlines() if ln.strip()]
    header = rows[0][1:]
    return meta, header, {r[0]: [int(v) for v in r[1:]] for r in rows[1:]}
