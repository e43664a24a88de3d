"""Recipe strings naming graphs.

Grammar::

    expr  := builder | "g6:" RAW | op "(" expr ("," expr)* ")"
           | "mult(" INT "," expr ")" | theorem "(" [NAME "=" INT ("," NAME "=" INT)*] ")"
    builder := NAME ":" INT ("," INT)*          e.g. K:4, K:2,3, T:3,7
    op    := "join" | "union"

Examples: ``join(K:2,union(K:2,I:5))``, ``mult(3,P:3)``, ``WHM(n=8,r=2,s=1)``,
``g6:Bw``.  Builder parameters are greedy, so ``join(K:2,3,I:4)`` is
K_{2,3} joined with I_4.
"""

from __future__ import annotations

import re

from ..graphs import Graph, GraphError, disjoint_union, graph6_decode, join
from ..graphs.atlas import BUILDER_IDS, build_atlas
from .theorems import THEOREMS, UnknownTheoremError, theorem_construction


class RecipeError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_\-]*)|(?P<sym>[:,()=]))")
_G6 = re.compile(r"\s*([?-~]+)")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> RecipeError:
        return RecipeError(f"{msg} at position {self.pos} in {self.text!r}")

    def peek(self) -> tuple[str, str] | None:
        m = _TOKEN.match(self.text, self.pos)
        if not m or m.end() == self.pos and self.pos >= len(self.text):
            return None
        kind = m.lastgroup
        if kind is None:
            return None
        return kind, m.group(kind)

    def take(self, kind: str | None = None, value: str | None = None) -> str:
        m = _TOKEN.match(self.text, self.pos)
        if not m or m.lastgroup is None:
            raise self.error("unexpected input")
        k, v = m.lastgroup, m.group(m.lastgroup)
        if (kind and k != kind) or (value and v != value):
            raise self.error(f"expected {value or kind}, found {v!r}")
        self.pos = m.end()
        return v

    def at(self, value: str) -> bool:
        t = self.peek()
        return t is not None and t[1] == value and t[0] == "sym"

    def expr(self) -> Graph:
        name = self.take("name")
        if name == "g6":
            self.take("sym", ":")
            m = _G6.match(self.text, self.pos)
            if not m:
                raise self.error("missing graph6 string")
            self.pos = m.end()
            try:
                return graph6_decode(m.group(1))
            except ValueError as exc:
                raise self.error(str(exc)) from exc
        if self.at(":"):
            self.take("sym", ":")
            params = [int(self.take("int"))]
            while self.at(","):
                save = self.pos
                self.take("sym", ",")
                t = self.peek()
                if t is None or t[0] != "int":
                    self.pos = save
                    break
                params.append(int(self.take("int")))
            if name not in BUILDER_IDS:
                raise self.error(f"unknown builder {name!r}")
            try:
                return build_atlas(name, params)
            except GraphError as exc:
                raise self.error(str(exc)) from exc
        self.take("sym", "(")
        if name in ("join", "union"):
            parts = [self.expr()]
            while self.at(","):
                self.take("sym", ",")
                parts.append(self.expr())
            self.take("sym", ")")
            out = parts[0]
            op = join if name == "join" else disjoint_union
            try:
                for p in parts[1:]:
                    out = op(out, p)
            except GraphError as exc:
                raise self.error(str(exc)) from exc
            return out
        if name == "mult":
            count = int(self.take("int"))
            self.take("sym", ",")
            part = self.expr()
            self.take("sym", ")")
            out = Graph.empty(0)
            try:
                for _ in range(count):
                    out = disjoint_union(out, part)
            except GraphError as exc:
                raise self.error(str(exc)) from exc
            return out
        if name in THEOREMS:
            kw: dict[str, int] = {}
            while not self.at(")"):
                key = self.take("name")
                self.take("sym", "=")
                kw[key] = int(self.take("int"))
                if not self.at(")"):
                    self.take("sym", ",")
            self.take("sym", ")")
            try:
                return theorem_construction(name, **kw)
            except (GraphError, UnknownTheoremError) as exc:
                raise self.error(str(exc)) from exc
        raise self.error(f"unknown operation {name!r}")


def parse_recipe(text: str) -> Graph:
    """Build the graph described by a recipe string."""
    p = _Parser(text.strip())
    if not p.text:
        raise RecipeError("empty recipe")
    g = p.expr()
    if p.text[p.pos:].strip():
        raise p.error("trailing input")
    return g
