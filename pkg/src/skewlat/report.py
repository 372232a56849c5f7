"""Human-readable output: DOT diagrams, key/value reports, subalgebra search."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable

from .algebra import (
    CayleyAlgebra,
    classify,
    d_decomposition,
    is_closed,
    lattice_distributive,
    natural_lt,
    subalgebra,
    verify_skew_lattice,
)
from .category import is_categorical, is_strictly_categorical
from .cosets import PartialBijection


def covers(alg: CayleyAlgebra) -> list[tuple[int, int]]:
    """Pairs (y, x) with y < x and nothing strictly between, sorted."""
    n = alg.size
    lt = [[natural_lt(alg, y, x) for x in range(n)] for y in range(n)]
    return [(y, x) for y, x in product(range(n), repeat=2)
            if lt[y][x] and not any(lt[y][z] and lt[z][x] for z in range(n))]


def export_dot(alg: CayleyAlgebra) -> str:
    """Admissible Hasse diagram: solid cover edges pointing up, dashed
    undirected edges between D-related elements."""
    d = d_decomposition(alg)
    out = ["digraph skewlattice {", "  rankdir=BT;"]
    for x in range(alg.size):
        out.append(f'  {x} [label="{alg.label(x)}"];')
    for y, x in covers(alg):
        out.append(f"  {y} -> {x};")
    dashed = sorted((i, k) for cls in d.classes for i, k in combinations(cls, 2))
    for i, k in dashed:
        out.append(f"  {i} -> {k} [dir=none, style=dashed];")
    out.append("}")
    return "\n".join(out) + "\n"


def _fmt_bool(v: bool) -> str:
    return "true" if v else "false"


def format_witness(alg: CayleyAlgebra, w) -> str:
    if isinstance(w, PartialBijection):
        pairs = ", ".join(f"{alg.label(x)}->{alg.label(y)}" for x, y in w.graph)
        return "{" + pairs + "}"
    if isinstance(w, tuple):
        return " ".join(format_witness(alg, v) for v in w)
    if isinstance(w, int):
        return alg.label(w)
    return "empty" if w is None else str(w)


def format_classes(alg: CayleyAlgebra, classes) -> str:
    return " ".join("{" + ",".join(alg.label(x) for x in c) + "}" for c in classes)


@dataclass
class Report:
    """Ordered ``key: value`` lines; ``ok`` is the overall validity."""

    lines: list[tuple[str, str]] = field(default_factory=list)
    ok: bool = True

    def add(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = _fmt_bool(value)
        self.lines.append((key, str(value)))

    def get(self, key: str) -> str:
        return dict(self.lines)[key]

    def text(self) -> str:
        return "".join(f"{k}: {v}\n" for k, v in self.lines)

    __str__ = text


def _add_flags(rep: Report, alg: CayleyAlgebra, flags) -> None:
    for name, verdict in flags:
        rep.add(name, verdict.holds)
        if not verdict.holds:
            rep.add(f"{name}.witness", format_witness(alg, verdict.witness))


def verification_report(alg: CayleyAlgebra) -> Report:
    rep = Report()
    rep.add("size", alg.size)
    verification = verify_skew_lattice(alg)
    rep.add("skew_lattice", verification.ok)
    _add_flags(rep, alg, verification)
    rep.ok = verification.ok
    return rep


def report(alg: CayleyAlgebra) -> Report:
    rep = verification_report(alg)
    if not rep.ok:
        return rep
    _add_flags(rep, alg, classify(alg))
    d = d_decomposition(alg)
    rep.add("d_classes", format_classes(alg, d.classes))
    rep.add("d_class_count", len(d))
    rep.add("lattice_reflection", d.is_lattice)
    rep.add("skew_chain", d.is_chain())
    rep.add("lattice_distributive", lattice_distributive(d).holds)
    for name, verdict in (("categorical", is_categorical(alg)),
                          ("strictly_categorical", is_strictly_categorical(alg))):
        rep.add(name, verdict.holds)
        if not verdict.holds:
            rep.add(f"{name}.witness", format_witness(alg, verdict.witness))
    return rep


def _pred(fn: Callable[[CayleyAlgebra], bool], negate: bool = False):
    return (lambda a: not fn(a)) if negate else fn


def _flag(name: str):
    return lambda a: getattr(classify(a), name)


PREDICATES: dict[str, Callable[[CayleyAlgebra], bool]] = {
    "any": lambda a: True,
    "normal": _flag("normal"),
    "not-normal": _pred(_flag("normal"), True),
    "conormal": _flag("conormal"),
    "not-conormal": _pred(_flag("conormal"), True),
    "rectangular": _flag("rectangular"),
    "left-handed": _flag("left_handed"),
    "right-handed": _flag("right_handed"),
    "symmetric": _flag("symmetric"),
    "meet-distributive": _flag("meet_distributive"),
    "skew-chain": lambda a: d_decomposition(a).is_chain(),
    "categorical": lambda a: is_categorical(a).holds,
    "non-categorical": lambda a: not is_categorical(a).holds,
    "strictly-categorical": lambda a: is_strictly_categorical(a).holds,
    "not-strictly-categorical": lambda a: not is_strictly_categorical(a).holds,
    "strictly-categorical-and-not-normal":
        lambda a: is_strictly_categorical(a).holds and not classify(a).normal,
}


def search_subalgebras(alg: CayleyAlgebra, max_size: int, predicate: str = "any",
                       min_size: int = 1) -> list[tuple[int, ...]]:
    """Closed subsets of size ``min_size..max_size`` whose subalgebra
    satisfies the named predicate, ordered by size then lexicographically."""
    try:
        test = PREDICATES[predicate]
    except KeyError:
        raise ValueError(f"unknown predicate {predicate!r}; choose from {sorted(PREDICATES)}") from None
    found = []
    for k in range(max(1, min_size), min(max_size, alg.size) + 1):
        for subset in combinations(range(alg.size), k):
            if is_closed(alg, subset) and test(subalgebra(alg, subset)):
                found.append(subset)
    return found
