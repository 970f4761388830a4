"""Build diagrams for decorated and composite names from base diagrams."""
from __future__ import annotations

from typing import Callable, Dict, Iterable, Mapping, Tuple

from ..codec import LinkDiagram, connected_sum, mirror, reverse_component, split_union
from ..errors import UnknownName
from ..names import LinkName, Term, parse_name


def term_diagram(t: Term, base: Callable[[str], LinkDiagram]) -> LinkDiagram:
    d = base(t.base().render())
    if t.prime:
        d = reverse_component(d, 1)
    if t.mirror:
        d = mirror(d)
    return d


def name_diagram(name: LinkName, base: Callable[[str], LinkDiagram]) -> LinkDiagram:
    """Connected sums are spliced on component 0 of each summand, so a ' on a
    summand reverses the component that stays free."""
    out = None
    for group in name.groups:
        g = None
        for t in group:
            d = term_diagram(t, base)
            g = d if g is None else connected_sum(g, d)
        out = g if out is None else split_union(out, g)
    return out


def build_from_bases(raw: Mapping[str, LinkDiagram], pinned: Mapping[str, Tuple[int, int]],
                     names: Iterable[str]) -> Dict[str, LinkDiagram]:
    """Apply the pinned (reverse, mirror) choice to each raw base diagram,
    then build every requested name."""
    cache: Dict[str, LinkDiagram] = {}

    def base(n: str) -> LinkDiagram:
        if n not in cache:
            if n not in raw:
                raise UnknownName(n)
            d = raw[n]
            p, m = pinned.get(n, (0, 0))
            if p:
                d = reverse_component(d, 1)
            if m:
                d = mirror(d)
            cache[n] = d
        return cache[n]

    return {n: name_diagram(parse_name(n), base) for n in names}
