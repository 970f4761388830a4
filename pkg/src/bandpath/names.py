"""Rolfsen-style link names.

Grammar (ASCII)::

    name    := group ("U" group)*
    group   := term ("#" term)*
    term    := base postfix* | "(" name ")" postfix*
    base    := INT "_" INT | INT "^" INT "_" INT
    postfix := "'" | "!"

``'`` reverses the orientation of one component (the second) and ``!``
mirrors.  Postfix operators bind tighter than ``#`` and ``U``.  A postfix
applied to a parenthesised sum distributes over its summands.  ``⊔`` and
``♯`` are accepted as synonyms of ``U`` and ``#``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

from .errors import MalformedName


@dataclass(frozen=True, order=True)
class Term:
    crossing_number: int
    components: Optional[int]
    index: int
    prime: bool = False
    mirror: bool = False

    @property
    def mu(self) -> int:
        return self.components or 1

    def base(self) -> "Term":
        return Term(self.crossing_number, self.components, self.index)

    def render(self) -> str:
        if self.components:
            s = f"{self.crossing_number}^{self.components}_{self.index}"
        else:
            s = f"{self.crossing_number}_{self.index}"
        return s + ("'" if self.prime else "") + ("!" if self.mirror else "")

    def mirrored(self) -> "Term":
        return replace(self, mirror=not self.mirror)

    def primed(self) -> "Term":
        if self.mu < 2:
            raise MalformedName(f"' needs a multi-component link, got {self.render()}")
        return replace(self, prime=not self.prime)


@dataclass(frozen=True)
class LinkName:
    """Split union of connected sums of terms."""
    groups: Tuple[Tuple[Term, ...], ...]

    @property
    def mu(self) -> int:
        # each # merges one pair of components
        return sum(sum(t.mu for t in g) - (len(g) - 1) for g in self.groups)

    @property
    def is_prime_term(self) -> bool:
        return len(self.groups) == 1 and len(self.groups[0]) == 1

    @property
    def term(self) -> Term:
        if not self.is_prime_term:
            raise ValueError("composite name")
        return self.groups[0][0]

    def terms(self) -> List[Term]:
        return [t for g in self.groups for t in g]

    def render(self) -> str:
        return "U".join("#".join(t.render() for t in g) for g in self.groups)

    def mirrored(self) -> "LinkName":
        return LinkName(tuple(tuple(t.mirrored() for t in g) for g in self.groups))

    def __str__(self):
        return self.render()


_TOKEN = re.compile(r"\s*(?:(?P<base>\d+(?:\^\d+)?_\d+)|(?P<op>[#U()'!]))")


def parse_name(text: str) -> LinkName:
    src = text.replace("⊔", "U").replace("♯", "#").replace("’", "'")
    tokens = []
    pos = 0
    src = src.strip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise MalformedName(f"unexpected character at {pos} in {text!r}")
        tokens.append(m.group("base") or m.group("op"))
        pos = m.end()
    if not tokens:
        raise MalformedName("empty name")
    p = _Parser(tokens, text)
    groups = p.name()
    if p.i != len(tokens):
        raise MalformedName(f"trailing input in {text!r}")
    return LinkName(tuple(tuple(g) for g in groups))


class _Parser:
    def __init__(self, tokens, text):
        self.toks = tokens
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise MalformedName(f"unexpected end of {self.text!r}")
        self.i += 1
        return tok

    def name(self) -> List[List[Term]]:
        groups = [self.group()]
        while self.peek() == "U":
            self.take()
            groups.append(self.group())
        return groups

    def group(self) -> List[Term]:
        terms = self.term()
        while self.peek() == "#":
            self.take()
            terms += self.term()
        return terms

    def term(self) -> List[Term]:
        tok = self.take()
        if tok == "(":
            inner = self.name()
            if self.take() != ")":
                raise MalformedName(f"unbalanced parentheses in {self.text!r}")
            if len(inner) != 1:
                raise MalformedName("postfix on a split union is not supported")
            terms = inner[0]
        elif tok and tok[0].isdigit():
            terms = [_base(tok)]
        else:
            raise MalformedName(f"unexpected {tok!r} in {self.text!r}")
        while self.peek() in ("'", "!"):
            op = self.take()
            if op == "!":
                terms = [t.mirrored() for t in terms]
            else:
                if len(terms) != 1:
                    raise MalformedName("' on a composite is ambiguous")
                terms = [terms[0].primed()]
        return terms


def _base(tok: str) -> Term:
    m = re.fullmatch(r"(\d+)(?:\^(\d+))?_(\d+)", tok)
    n, c, i = m.group(1), m.group(2), m.group(3)
    comps = int(c) if c else None
    if comps is not None and comps < 2:
        raise MalformedName(f"component superscript must be at least 2: {tok}")
    if int(i) < 1:
        raise MalformedName(f"index must be positive: {tok}")
    return Term(int(n), comps, int(i))


def render(n: LinkName) -> str:
    return n.render()
