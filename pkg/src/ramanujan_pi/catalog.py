"""Catalog files of transformations and series, and certificate persistence.

A catalog is line-oriented text made of sections::

    # comment
    [metadata]
    version = 1

    [transformation]
    name = level2-degree5
    level = 2
    degree = 5
    alpha = 64*x^5*(1+x)/((1+4*x^2)*(1-2*x-4*x^2)^2)
    beta = 64*x*(1+x)^5/((1+4*x^2)*(1+22*x-4*x^2)^2)
    m_squared = (1-2*x-4*x^2)/(1+22*x-4*x^2)

    [series]
    name = l2-d5-pos
    level = 2
    degree = 5
    z = 1/81
    a = 4/(9*sqrt(2))
    b = 40/(9*sqrt(2))

Values use the exact literal grammars of :mod:`exactnum` and
:mod:`transform`, so every number is stored exactly.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterable

from .errors import ParseError, ValidationError
from .exactnum import DEFAULT_POLICY, PrecisionPolicy, Surd, parse_surd
from .hyper import LevelParam
from .ramanujan import Certificate, SeriesSpec, certificate_from_dict, certificate_to_dict
from .transform import Transformation, parse_rational_function

__all__ = [
    "CatalogFile",
    "DEFAULT_CATALOG",
    "load_catalog",
    "parse_catalog",
    "format_catalog",
    "emit_certificate",
    "read_certificate",
]

DEFAULT_CATALOG = "default"

_SECTIONS = ("metadata", "transformation", "series")
_TRANSFORMATION_KEYS = {"name", "level", "degree", "alpha", "beta", "m_squared"}
_SERIES_REQUIRED = {"name", "level", "z", "a", "b"}
_SERIES_KEYS = _SERIES_REQUIRED | {"degree", "sign", "aliases", "table"}


@dataclass
class CatalogFile:
    transformations: list = field(default_factory=list)
    series: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def find(self, name: str) -> SeriesSpec:
        """Look a series up by name or alias."""
        for s in self.series:
            if s.name == name or name in s.aliases:
                return s
        raise KeyError(name)

    def __iter__(self):
        return iter(self.transformations)


@dataclass
class _Block:
    kind: str
    line: int
    items: dict = field(default_factory=dict)
    # key -> (line, column of the value)
    where: dict = field(default_factory=dict)


def _split_blocks(text: str) -> list[_Block]:
    blocks: list[_Block] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ParseError("unterminated section header", lineno, len(raw))
            kind = stripped[1:-1].strip()
            if kind not in _SECTIONS:
                raise ParseError(f"unknown section [{kind}]", lineno, raw.index("[") + 1)
            blocks.append(_Block(kind, lineno))
            continue
        if "=" not in raw:
            raise ParseError("expected 'key = value'", lineno, raw.index(stripped[0]) + 1)
        if not blocks:
            raise ParseError("key outside of any section", lineno, raw.index(stripped[0]) + 1)
        key, _, value = raw.partition("=")
        key = key.strip()
        block = blocks[-1]
        if not key:
            raise ParseError("empty key", lineno, 1)
        if key in block.items:
            raise ParseError(f"duplicate key {key!r}", lineno, raw.index(key) + 1)
        col = len(raw) - len(raw.partition("=")[2].lstrip()) + 1
        block.items[key] = value.strip()
        block.where[key] = (lineno, col)
    return blocks


def _literal(block: _Block, key: str, parser):
    line, col = block.where[key]
    try:
        return parser(block.items[key])
    except ParseError as exc:
        inner = exc.column or 1
        msg = str(exc).split(": ", 1)[-1] if exc.line is not None else str(exc)
        raise ParseError(f"{key}: {msg}", line, col + inner - 1) from None
    except (ValueError, ArithmeticError) as exc:
        raise ParseError(f"{key}: {exc}", line, col) from None


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", 1, 1) from None


def _real_surd(text: str) -> Surd:
    v = parse_surd(text)
    if not isinstance(v, Surd):
        raise ParseError(f"expected a real value, got {text!r}", 1, 1)
    return v


def _check_keys(block: _Block, allowed: set, required: set):
    for key in block.items:
        if key not in allowed:
            line, _ = block.where[key]
            raise ParseError(f"unknown key {key!r} in [{block.kind}]", line, 1)
    missing = required - set(block.items)
    if missing:
        raise ParseError(f"[{block.kind}] is missing {', '.join(sorted(missing))}", block.line, 1)


def _level(block: _Block) -> LevelParam:
    line, col = block.where["level"]
    ell = _literal(block, "level", _int)
    try:
        return LevelParam.from_ell(ell)
    except ValueError:
        raise ParseError(f"level must be one of 1, 2, 3, 4, got {ell}", line, col) from None


def _transformation(block: _Block) -> Transformation:
    _check_keys(block, _TRANSFORMATION_KEYS, _TRANSFORMATION_KEYS)
    return Transformation(
        name=block.items["name"],
        level=_level(block),
        d=_literal(block, "degree", _int),
        alpha=_literal(block, "alpha", parse_rational_function),
        beta=_literal(block, "beta", parse_rational_function),
        m_squared=_literal(block, "m_squared", parse_rational_function),
    )


def _series(block: _Block) -> SeriesSpec:
    _check_keys(block, _SERIES_KEYS, _SERIES_REQUIRED)
    lp = _level(block)
    z = _literal(block, "z", _real_surd)
    a = _literal(block, "a", _real_surd)
    b = _literal(block, "b", _real_surd)
    d = _literal(block, "degree", _int) if "degree" in block.items else None
    table = _literal(block, "table", _int) if "table" in block.items else None
    aliases = tuple(x.strip() for x in block.items.get("aliases", "").split(",") if x.strip())
    try:
        spec = SeriesSpec(lp, z, a, b, d=d, name=block.items["name"], aliases=aliases, table=table)
    except (ValueError, TypeError) as exc:
        line, col = block.where["z"]
        raise ParseError(f"series {block.items['name']!r}: {exc}", line, col) from None
    if "sign" in block.items and block.items["sign"] != spec.sign:
        line, col = block.where["sign"]
        raise ParseError(f"sign {block.items['sign']!r} contradicts z = {z}", line, col)
    return spec


def parse_catalog(text: str) -> CatalogFile:
    """Parse catalog text; exact literals are canonicalized (``sqrt(8)`` becomes ``2*sqrt(2)``)."""
    cat = CatalogFile()
    names: dict[str, int] = {}

    def claim(name, line):
        if name in names:
            raise ParseError(f"duplicate name {name!r} (first used on line {names[name]})", line, 1)
        names[name] = line

    for block in _split_blocks(text):
        if block.kind == "metadata":
            cat.metadata.update(block.items)
        elif block.kind == "transformation":
            t = _transformation(block)
            claim(t.name, block.line)
            cat.transformations.append(t)
        else:
            s = _series(block)
            claim(s.name, block.line)
            for alias in s.aliases:
                claim(alias, block.where["aliases"][0])
            cat.series.append(s)
    return cat


def validate_catalog(cat: CatalogFile, p: PrecisionPolicy = DEFAULT_POLICY):
    """Numerically check every transformation and the alternating-row constraint ``4d > ell``."""
    for t in cat.transformations:
        t.validate(p)
    for s in cat.series:
        if s.alternating and s.d is not None and 4 * s.d <= s.level.ell:
            raise ValidationError(f"series {s.name!r}: alternating rows need 4d > ell")


def load_catalog(path=DEFAULT_CATALOG, validate: bool = True, p: PrecisionPolicy = DEFAULT_POLICY) -> CatalogFile:
    """Read and validate a catalog; ``"default"`` selects the shipped one."""
    if str(path) == DEFAULT_CATALOG:
        text = resources.files("ramanujan_pi").joinpath("data/default.catalog").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    cat = parse_catalog(text)
    if validate:
        validate_catalog(cat, p)
    return cat


def format_catalog(cat: CatalogFile) -> str:
    """Inverse of :func:`parse_catalog` up to comments and whitespace."""
    out: list[str] = []
    if cat.metadata:
        out.append("[metadata]")
        out.extend(f"{k} = {v}" for k, v in cat.metadata.items())
        out.append("")
    for t in cat.transformations:
        out += [
            "[transformation]",
            f"name = {t.name}",
            f"level = {t.level.ell}",
            f"degree = {t.d}",
            f"alpha = {t.alpha}",
            f"beta = {t.beta}",
            f"m_squared = {t.m_squared}",
            "",
        ]
    for s in cat.series:
        out += ["[series]", f"name = {s.name}", f"level = {s.level.ell}"]
        if s.d is not None:
            out.append(f"degree = {s.d}")
        out += [f"sign = {s.sign}", f"z = {s.z}", f"a = {s.a}", f"b = {s.b}"]
        if s.aliases:
            out.append(f"aliases = {', '.join(s.aliases)}")
        if s.table is not None:
            out.append(f"table = {s.table}")
        out.append("")
    return "\n".join(out)


def emit_certificate(c: Certificate, path) -> dict:
    """Write ``c`` as JSON, read it back and check the round trip."""
    record = certificate_to_dict(c)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(record, fh, indent=2, sort_keys=True)
        fh.write("\n")
    back = read_certificate(path)
    if certificate_to_dict(back) != record:
        raise OSError(f"certificate written to {os.fspath(path)!r} does not read back identically")
    return record


def read_certificate(path) -> Certificate:
    with open(path, encoding="utf-8") as fh:
        return certificate_from_dict(json.load(fh))
