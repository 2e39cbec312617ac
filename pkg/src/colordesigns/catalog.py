"""Named codes shipped with the package, plus a loader for user code files.

File format (``#`` starts a comment)::

    code <name> q=<q> n=<n> [type=<classify key>]
    <row of element labels>
    ...
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path

from .algebra import gf
from .codes import LinearCode, code_from_generator
from .errors import PreconditionError


def parse_catalog(text: str) -> dict[str, tuple[LinearCode, str | None]]:
    """Parse catalog text into ``{name: (code, asserted type or None)}``."""
    out: dict[str, tuple[LinearCode, str | None]] = {}
    header = None
    rows: list[list[str]] = []

    def flush():
        if header is None:
            return
        name, q, n, typ = header
        field = gf(q)
        out[name] = (code_from_generator(field, rows, length=n, name=name), typ)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "code":
            flush()
            opts = dict(p.split("=", 1) for p in parts[2:])
            try:
                header = (parts[1], int(opts["q"]), int(opts["n"]), opts.get("type"))
            except (KeyError, IndexError, ValueError) as exc:
                raise PreconditionError(f"line {lineno}: malformed code header {raw!r}") from exc
            rows = []
        else:
            if header is None:
                raise PreconditionError(f"line {lineno}: generator row before any code header")
            rows.append(parts)
    flush()
    return out


@lru_cache(maxsize=None)
def _builtin() -> dict[str, tuple[LinearCode, str | None]]:
    text = resources.files("colordesigns").joinpath("data/catalog.txt").read_text()
    return parse_catalog(text)


def names() -> list[str]:
    return list(_builtin())


def asserted_type(name: str) -> str | None:
    return _builtin()[name][1]


def get(name: str) -> LinearCode:
    """A built-in code by name, or the first code of a catalog-format file path."""
    cat = _builtin()
    if name in cat:
        return cat[name][0]
    path = Path(name)
    if path.is_file():
        codes = parse_catalog(path.read_text())
        if not codes:
            raise PreconditionError(f"no code found in {name}")
        return next(iter(codes.values()))[0]
    raise PreconditionError(f"unknown code {name!r}; built-ins are {', '.join(cat)}")
