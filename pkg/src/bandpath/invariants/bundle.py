"""All invariants of a diagram, computed once.

Bundles can be memoized in a JSON file keyed by a hash of the canonical
oriented diagram, so repeated CLI runs and table harnesses skip the skein
work.  Cache writes go through a temp file and an atomic rename.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, Optional

from ..codec import LinkDiagram, total_linking
from ..fields import CycloValue, QuadValue
from ..poly import LaurentPolynomial
from .conway import conway, conway_to_alexander, normalize_alexander
from .evaluations import arf_from_conway, arf_from_v_at_i, v_at_i_from, v_at_omega_from
from .jones import jones
from .qpoly import q_polynomial, rho_from_q
from .seifert import determinant, signature

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class InvariantBundle:
    jones: LaurentPolynomial
    conway: LaurentPolynomial
    alexander: LaurentPolynomial
    q_poly: LaurentPolynomial
    signature: int
    determinant: int
    arf: Optional[int]
    v_at_omega: CycloValue
    rho: QuadValue
    v_at_i: CycloValue
    mu: int
    total_lk: int

    def to_json(self) -> Dict:
        return {
            "mu": self.mu,
            "total_lk": self.total_lk,
            "jones": self.jones.to_terms_string("t"),
            "conway": self.conway.to_terms_string("z"),
            "alexander": self.alexander.to_terms_string("t"),
            "q_poly": self.q_poly.to_terms_string("z"),
            "signature": self.signature,
            "determinant": self.determinant,
            "arf": self.arf,
            "v_at_omega": self.v_at_omega.to_json(),
            "v_at_i": self.v_at_i.to_json(),
            "rho": self.rho.to_json(),
        }

    @classmethod
    def from_json(cls, data: Dict) -> "InvariantBundle":
        P = LaurentPolynomial.from_terms_string
        return cls(
            jones=P(data["jones"]),
            conway=P(data["conway"]),
            alexander=P(data["alexander"]),
            q_poly=P(data["q_poly"]),
            signature=data["signature"],
            determinant=data["determinant"],
            arf=data["arf"],
            v_at_omega=CycloValue(Fraction(x) for x in data["v_at_omega"]),
            v_at_i=CycloValue(Fraction(x) for x in data["v_at_i"]),
            rho=QuadValue(*(Fraction(x) for x in data["rho"])),
            mu=data["mu"],
            total_lk=data["total_lk"],
        )

    def pretty(self) -> Dict[str, str]:
        """Human-readable rendering of each field."""
        return {
            "mu": str(self.mu),
            "total_lk": str(self.total_lk),
            "jones": self.jones.pretty("t"),
            "conway": self.conway.pretty("z"),
            "alexander": self.alexander.pretty("t"),
            "q_poly": self.q_poly.pretty("z"),
            "signature": str(self.signature),
            "determinant": str(self.determinant),
            "arf": "undefined" if self.arf is None else str(self.arf),
            "v_at_omega": _cyclo_str(self.v_at_omega),
            "v_at_i": _cyclo_str(self.v_at_i),
            "rho": f"{self.rho.a} + {self.rho.b}*sqrt5",
        }


def _cyclo_str(v: CycloValue) -> str:
    names = ("1", "z", "z^2", "z^3")
    parts = [f"{c}*{n}" for c, n in zip(v.c, names) if c]
    return " + ".join(parts) if parts else "0"


def compute_bundle(d: LinkDiagram) -> InvariantBundle:
    J = jones(d)
    nabla = conway(d)
    Q = q_polynomial(d)
    mu = d.mu
    vi = v_at_i_from(J, mu)
    arf_val = arf_from_v_at_i(vi, mu)
    if mu == 1 and arf_val != arf_from_conway(nabla):
        raise ArithmeticError("Arf from V(i) disagrees with a_2 mod 2")
    return InvariantBundle(
        jones=J,
        conway=nabla,
        alexander=normalize_alexander(conway_to_alexander(nabla)),
        q_poly=Q,
        signature=signature(d),
        determinant=determinant(d),
        arf=arf_val,
        v_at_omega=v_at_omega_from(J),
        rho=rho_from_q(Q),
        v_at_i=vi,
        mu=mu,
        total_lk=total_linking(d),
    )


def diagram_hash(d: LinkDiagram) -> str:
    c = d.canonical()
    return hashlib.sha256(repr(c.key()).encode()).hexdigest()[:24]


class BundleCache:
    """In-memory map, optionally persisted to a JSON file."""

    def __init__(self, path: Optional[os.PathLike] = None):
        self.path = Path(path) if path else None
        self.mem: Dict[str, InvariantBundle] = {}
        self._raw: Dict[str, Dict] = {}
        self._dirty = False
        if self.path and self.path.exists():
            data = json.loads(self.path.read_text())
            if data.get("schema") == SCHEMA_VERSION:
                self._raw = data.get("bundles", {})

    def get(self, d: LinkDiagram) -> InvariantBundle:
        h = diagram_hash(d)
        hit = self.mem.get(h)
        if hit is not None:
            return hit
        if h in self._raw:
            b = InvariantBundle.from_json(self._raw[h])
        else:
            b = compute_bundle(d)
            self._raw[h] = b.to_json()
            self._dirty = True
        # setdefault keeps the first writer's object if two callers race
        return self.mem.setdefault(h, b)

    def save(self):
        if not self.path or not self._dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump({"schema": SCHEMA_VERSION, "bundles": self._raw}, fh, sort_keys=True)
        os.chmod(tmp, 0o644)
        os.replace(tmp, self.path)
        self._dirty = False


_DEFAULT = BundleCache()


def bundle(d: LinkDiagram, cache: Optional[BundleCache] = None) -> InvariantBundle:
    return (cache or _DEFAULT).get(d)
