"""The shipped link atlas: diagrams, band certificates and expected tables.

File formats (all line oriented, ``#`` starts a comment line, fields are
separated by ``|`` and stripped)::

    atlas.txt         name | pd | notes
    certificates.txt  nameA | nameB | source [| note]
    aliases.txt       alias | canonical
    tableN.csv        row,col,value_or_set,method,intermediate,correction,star

A name may appear on several atlas lines; the first PD is the primary
diagram and the rest are alternates.  ``notes`` is a ``;``-separated list,
where ``torus_k=<k>`` marks an anti-parallel (2,2k) torus link.  In the
CSVs, ``value_or_set`` and ``intermediate`` hold ``;``-separated lists,
``correction`` is ``+``, ``++`` or ``+++`` for the three footnote marks and
``star`` is ``*`` or ``**``.  See docs/formats.md for the grammar.
"""
from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from ..codec import LinkDiagram, parse_pd
from ..errors import (ConventionViolation, MalformedAtlas, ParityViolation, ParseError,
                      UnknownName)
from ..invariants.bundle import BundleCache, InvariantBundle
from ..names import LinkName, parse_name
from .build import name_diagram

DATA_DIR = Path(__file__).resolve().parent / "data"
CACHE_NAME = "bundles.json"

CERT_SOURCES = ("Figure5", "Figure6", "TableIntermediate", "Literature")


@dataclass(frozen=True)
class LinkRecord:
    name: str
    pd: LinkDiagram
    alternates: Tuple[LinkDiagram, ...] = ()
    convention_notes: str = ""
    composed: bool = False

    @property
    def torus_k(self) -> Optional[int]:
        m = re.search(r"torus_k=(\d+)", self.convention_notes)
        return int(m.group(1)) if m else None


@dataclass(frozen=True)
class BandCertificate:
    a: str
    b: str
    source: str
    note: str = ""

    def reversed(self) -> "BandCertificate":
        return BandCertificate(self.b, self.a, self.source, self.note)


@dataclass(frozen=True)
class ExpectedEntry:
    table: int
    a: str
    b: str
    distance: Tuple[int, ...]
    method_annotation: Optional[str] = None
    intermediate: Tuple[str, ...] = ()
    corrected: Optional[str] = None
    star: str = ""

    @property
    def value(self) -> int:
        """The smallest listed value (the only one a lower bound may reach)."""
        return min(self.distance)

    @property
    def is_set(self) -> bool:
        return len(self.distance) > 1


_DAGGERS = {"+": "†", "++": "††", "+++": "†††"}


def _records(path: Path) -> Iterator[Tuple[int, List[str]]]:
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        yield lineno, [f.strip() for f in s.split("|")]


def canonical_order(name: LinkName) -> LinkName:
    """Sort summands: knots ascending first, then links by decreasing size."""
    groups = []
    for g in name.groups:
        knots = sorted(t for t in g if t.mu == 1)
        links = sorted((t for t in g if t.mu > 1), key=lambda t: (-t.crossing_number, t))
        groups.append(tuple(knots + links))
    return LinkName(tuple(groups))


class Atlas:
    def __init__(self, root: Path, cache: Optional[BundleCache] = None):
        self.root = Path(root)
        self.cache = cache if cache is not None else BundleCache()
        self.records: Dict[str, LinkRecord] = {}
        self.aliases: Dict[str, str] = {}
        self._certs: List[BandCertificate] = []
        self._tables: Dict[int, List[ExpectedEntry]] = {}

    # -- loading -----------------------------------------------------------
    def _load_records(self):
        primaries: Dict[str, Tuple[LinkDiagram, str]] = {}
        alts: Dict[str, List[LinkDiagram]] = {}
        path = self.root / "atlas.txt"
        for lineno, f in _records(path):
            if len(f) != 3:
                raise MalformedAtlas(f"{path.name}:{lineno}: expected 'name | pd | notes'")
            name, pd_text, notes = f
            try:
                canon = parse_name(name).render()
                d = parse_pd(pd_text, name_hint=canon)
            except ParseError as exc:
                raise MalformedAtlas(f"{path.name}:{lineno}: {exc}") from exc
            if canon not in primaries:
                primaries[canon] = (d, notes)
            else:
                alts.setdefault(canon, []).append(d)
        for name, (d, notes) in primaries.items():
            self.records[name] = LinkRecord(name, d, tuple(alts.get(name, ())), notes)

    def _load_aliases(self):
        path = self.root / "aliases.txt"
        if not path.exists():
            return
        for lineno, f in _records(path):
            if len(f) != 2:
                raise MalformedAtlas(f"{path.name}:{lineno}: expected 'alias | canonical'")
            self.aliases[parse_name(f[0]).render()] = parse_name(f[1]).render()

    def _load_certs(self):
        path = self.root / "certificates.txt"
        seen = set()
        for lineno, f in _records(path):
            if len(f) not in (3, 4):
                raise MalformedAtlas(f"{path.name}:{lineno}: expected 'a | b | source'")
            a, b = self.canonical(f[0]), self.canonical(f[1])
            src = f[2]
            if not src.startswith(CERT_SOURCES):
                raise MalformedAtlas(f"{path.name}:{lineno}: unknown source {src!r}")
            key = (min(a, b), max(a, b), src)
            if key in seen:
                continue
            seen.add(key)
            self._certs.append(BandCertificate(a, b, src, f[3] if len(f) == 4 else ""))

    def _load_tables(self):
        for t in (1, 2, 3):
            path = self.root / f"table{t}.csv"
            if not path.exists():
                continue
            out = []
            with open(path, newline="") as fh:
                for r in csv.DictReader(fh):
                    try:
                        vals = tuple(int(v) for v in r["value_or_set"].split(";"))
                    except ValueError as exc:
                        raise MalformedAtlas(f"{path.name}: bad value {r['value_or_set']!r}") from exc
                    inter = tuple(x for x in r["intermediate"].split(";") if x)
                    out.append(ExpectedEntry(
                        table=t, a=r["row"], b=r["col"], distance=vals,
                        method_annotation=r["method"] or None, intermediate=inter,
                        corrected=_DAGGERS.get(r["correction"]), star=r["star"]))
            self._tables[t] = out

    # -- names -------------------------------------------------------------
    def canonical(self, text: str) -> str:
        """Resolve aliases and summand order; does not require a record."""
        name = parse_name(text)
        s = name.render()
        if s in self.records:
            return s
        if s in self.aliases:
            return self.aliases[s]
        terms = []
        for g in name.groups:
            row = []
            for t in g:
                r = self.aliases.get(t.render(), t.render())
                target = parse_name(r)
                row.extend(target.groups[0] if target.is_prime_term else [t])
            terms.append(tuple(row))
        # unknot summands vanish from connected sums
        terms = [tuple(t for t in g if t.base().render() != "0_1") or g[:1] for g in terms]
        s = canonical_order(LinkName(tuple(terms))).render()
        return self.aliases.get(s, s)

    def _base_diagram(self, base: str) -> LinkDiagram:
        rec = self.records.get(base)
        if rec is None:
            raise UnknownName(base)
        return rec.pd

    def record(self, text: str) -> LinkRecord:
        name = self.canonical(text)
        rec = self.records.get(name)
        if rec is not None:
            return rec
        d = name_diagram(parse_name(name), self._base_diagram)
        rec = LinkRecord(name, d, (), "composed from base records", composed=True)
        self.records[name] = rec
        return rec

    def __contains__(self, text: str) -> bool:
        try:
            self.record(text)
        except (UnknownName, ParseError):
            return False
        return True

    def names(self) -> List[str]:
        return sorted(n for n, r in self.records.items() if not r.composed)

    def mu(self, text: str) -> int:
        return parse_name(self.canonical(text)).mu

    # -- invariants ----------------------------------------------------------
    def bundle(self, text: str) -> InvariantBundle:
        return self.cache.get(self.record(text).pd)

    def torus_k(self, text: str) -> Optional[int]:
        return self.record(text).torus_k

    # -- data ----------------------------------------------------------------
    def certificates(self) -> List[BandCertificate]:
        """Symmetric closure of the certificate list."""
        out = []
        for c in self._certs:
            out += [c, c.reversed()]
        return out

    def expected_table(self, which: int) -> List[ExpectedEntry]:
        if which not in self._tables:
            raise ValueError(f"no table {which}")
        return list(self._tables[which])

    # -- validation --------------------------------------------------------
    def validate(self, alternates: bool = True):
        for name, rec in self.records.items():
            want = parse_name(name).mu
            if rec.pd.mu != want:
                raise ConventionViolation(f"{name}: diagram has {rec.pd.mu} components, name says {want}")
        for name, rec in list(self.records.items()):
            if alternates and rec.alternates:
                b = self.cache.get(rec.pd)
                for alt in rec.alternates:
                    if self.cache.get(alt) != b:
                        raise ConventionViolation(f"{name}: alternate diagram disagrees")
        for name, attr, want in ANCHORS:
            if name in self.records:
                got = getattr(self.bundle(name), attr)
                if got != want:
                    raise ConventionViolation(f"{name}: {attr} = {got}, anchor says {want}")
        for c in self._certs:
            for n in (c.a, c.b):
                self.record(n)
            if abs(self.mu(c.a) - self.mu(c.b)) != 1:
                raise ParityViolation(f"certificate {c.a} <-> {c.b} does not change mu by one")


# convention anchors: unadorned 2-component links carry negative linking
# number, and the recombination case study fixes these values
ANCHORS = [
    ("2^2_1", "total_lk", -1),
    ("4^2_1", "total_lk", -2),
    ("4^2_1'", "total_lk", 2),
    ("4^2_1'", "arf", 0),
    ("5^2_1", "total_lk", 0),
    ("5^2_1", "arf", 1),
    ("6^2_1'", "total_lk", 3),
]


def load_atlas(path: Optional[Path] = None, cache_path: Optional[Path] = None,
               validate: bool = True) -> Atlas:
    """Load an atlas directory.  Bundles are cached in ``cache_path`` (default:
    ``bundles.json`` beside the atlas files, when writable)."""
    root = Path(path) if path else DATA_DIR
    if root.is_file():
        root = root.parent
    if not (root / "atlas.txt").exists():
        raise MalformedAtlas(f"no atlas.txt in {root}")
    if cache_path is None:
        cache_path = root / CACHE_NAME
    atlas = Atlas(root, BundleCache(cache_path))
    atlas._load_records()
    atlas._load_aliases()
    atlas._load_certs()
    atlas._load_tables()
    if validate:
        atlas.validate()
        try:
            atlas.cache.save()
        except OSError:
            pass  # read-only install: keep the in-memory cache
    return atlas


__all__ = ["Atlas", "BandCertificate", "ExpectedEntry", "LinkRecord", "load_atlas",
           "canonical_order", "DATA_DIR"]
