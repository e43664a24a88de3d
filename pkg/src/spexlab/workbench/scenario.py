"""Scenario files binding a family to expected extremal constructions, and their verification."""

from __future__ import annotations

import ast
import operator
import re
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..constructions import build_G0, parse_recipe
from ..families import FamilySpec, load_family, parse_family
from ..graphs import Graph, canonical_form, graph6_decode, graph6_encode
from ..oracles.enumerate import check_cap
from ..oracles.extremal import ExtremalReport, brute_ex, brute_spex, build_G_family
from ..spectral import Verdict, compare_lambda


class ScenarioError(ValueError):
    pass


class OracleAssertionError(AssertionError):
    """An oracle-internal consistency check failed."""


# -- safe arithmetic for {n-2} placeholders ---------------------------------

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.FloorDiv: operator.floordiv,
        ast.Mod: operator.mod}


def _eval(node: ast.AST, env: dict[str, int]) -> int:
    if isinstance(node, ast.Expression):
        return _eval(node.body, env)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name) and node.id in env:
        return env[node.id]
    if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
        return _OPS[type(node.op)](_eval(node.left, env), _eval(node.right, env))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval(node.operand, env)
    raise ScenarioError(f"unsupported expression {ast.dump(node)}")


def substitute(template: str, n: int) -> str:
    def repl(m: re.Match) -> str:
        try:
            tree = ast.parse(m.group(1), mode="eval")
        except SyntaxError as exc:
            raise ScenarioError(f"bad placeholder {{{m.group(1)}}}") from exc
        return str(_eval(tree, {"n": n}))

    return re.sub(r"\{([^{}]*)\}", repl, template)


# -- data files -------------------------------------------------------------

def data_path(kind: str, name: str) -> Path:
    return Path(str(resources.files("spexlab") / "data" / kind / name))


def resolve_family(ref: str, base: Path | None = None) -> FamilySpec:
    """A family from a path, a path relative to ``base``, or a shipped catalog name."""
    candidates = [Path(ref)]
    if base is not None:
        candidates.append(base / ref)
    stem = Path(ref).name
    if not stem.endswith(".fam"):
        stem += ".fam"
    candidates.append(data_path("families", stem))
    for c in candidates:
        if c.is_file():
            return load_family(c)
    raise ScenarioError(f"family {ref!r} not found")


def catalog_names() -> list[str]:
    root = Path(str(resources.files("spexlab") / "data" / "families"))
    return sorted(p.stem for p in root.glob("*.fam"))


def load_catalog() -> dict[str, FamilySpec]:
    return {name: load_family(data_path("families", name + ".fam")) for name in catalog_names()}


def scenario_paths() -> list[Path]:
    root = Path(str(resources.files("spexlab") / "data" / "scenarios"))
    return sorted(root.glob("*.scn"))


@dataclass(frozen=True)
class Scenario:
    name: str
    family: FamilySpec
    n_values: tuple[int, ...]
    objective: str  # "spex" or "ex"
    expected: tuple[str, ...]  # recipes, graph6 strings, "G0" or "G"
    notes: str = ""
    family_ref: str = ""

    def expected_graphs(self, n: int) -> list[Graph]:
        out: list[Graph] = []
        for item in self.expected:
            if item == "G0":
                out += list(build_G0(self.family, n).graphs)
            elif item == "G":
                out += list(build_G_family(self.family, n).graphs)
            else:
                text = substitute(item, n)
                out.append(parse_recipe(text) if (":" in text or "(" in text) else graph6_decode(text))
        return out


def parse_n_range(text: str) -> tuple[int, ...]:
    text = text.strip()
    m = re.fullmatch(r"(\d+)\s*\.\.\s*(\d+)", text)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        if a > b:
            raise ScenarioError(f"empty n range {text!r}")
        return tuple(range(a, b + 1))
    try:
        vals = tuple(sorted({int(x) for x in text.split(",")}))
    except ValueError as exc:
        raise ScenarioError(f"bad n range {text!r}") from exc
    if not vals:
        raise ScenarioError("empty n range")
    return vals


def parse_scenario(text: str, base: Path | None = None, default_name: str = "") -> Scenario:
    fields: dict[str, str] = {}
    expected: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ScenarioError(f"line {lineno}: expected 'key: value'")
        key, value = (x.strip() for x in line.split(":", 1))
        if key == "expected":
            expected.append(value)
        elif key in ("name", "family", "n_range", "objective", "notes"):
            fields[key] = value
        elif key.startswith("family."):
            # inline family lines, e.g. "family.member: K:3"
            fields.setdefault("_inline", "")
            fields["_inline"] += f"{key[7:]}: {value}\n"
        else:
            raise ScenarioError(f"line {lineno}: unknown key {key!r}")
    for key in ("n_range", "objective"):
        if key not in fields:
            raise ScenarioError(f"missing key {key!r}")
    if not expected:
        raise ScenarioError("scenario lists no expected graphs")
    if "_inline" in fields:
        family = parse_family(fields["_inline"])
        ref = "inline"
    elif "family" in fields:
        family = resolve_family(fields["family"], base)
        ref = fields["family"]
    else:
        raise ScenarioError("missing key 'family'")
    objective = fields["objective"]
    if objective not in ("spex", "ex"):
        raise ScenarioError(f"objective must be spex or ex, not {objective!r}")
    return Scenario(fields.get("name", default_name), family, parse_n_range(fields["n_range"]), objective,
                    tuple(expected), fields.get("notes", ""), ref)


def load_scenario(path: str | Path) -> Scenario:
    p = Path(path)
    if not p.is_file():
        alt = data_path("scenarios", p.name if p.suffix else p.name + ".scn")
        if not alt.is_file():
            raise ScenarioError(f"scenario {path!r} not found")
        p = alt
    return parse_scenario(p.read_text(), base=p.parent, default_name=p.stem)


# -- verification -----------------------------------------------------------

@dataclass(frozen=True)
class ScenarioRow:
    n: int
    verdict: str  # AGREE or DIFFER
    report: ExtremalReport
    expected: tuple[str, ...]  # graph6 of canonical expected graphs


@dataclass(frozen=True)
class ScenarioVerdict:
    scenario: Scenario
    rows: tuple[ScenarioRow, ...]
    checks: tuple[str, ...] = ()  # oracle-internal checks that ran
    timings: dict = field(default_factory=dict, compare=False)

    @property
    def frontier(self) -> int | None:
        """Smallest n from which every n in the range agrees; None if the last n differs."""
        first = None
        for row in self.rows:
            if row.verdict == "AGREE":
                if first is None:
                    first = row.n
            else:
                first = None
        return first

    @property
    def all_agree(self) -> bool:
        return all(r.verdict == "AGREE" for r in self.rows)


def _check_report(rep: ExtremalReport, f: FamilySpec) -> None:
    keys = [canonical_form(g).bytes for g in rep.witnesses]
    if len(set(keys)) != len(keys):
        raise OracleAssertionError(f"n={rep.n}: duplicate witnesses")
    for g in rep.witnesses:
        if not f.is_free(g):
            raise OracleAssertionError(f"n={rep.n}: witness {graph6_encode(g)} is not F-free")
    if rep.objective == "edges":
        if any(g.num_edges != rep.value for g in rep.witnesses):
            raise OracleAssertionError(f"n={rep.n}: witness edge count differs from optimum")
    if rep.objective == "lambda":
        for g in rep.witnesses:
            for u, v in g.non_edges():
                h = g.with_edge(u, v)
                if f.is_free(h) and compare_lambda(h, g) is Verdict.GREATER:
                    raise OracleAssertionError(f"n={rep.n}: {graph6_encode(g)} + {u}{v} is F-free with larger λ")


def verify_scenario(s: Scenario, *, max_n: int | None = None, long_run: bool = False,
                    workers: int = 1) -> ScenarioVerdict:
    """Run the oracle for each n and compare its witness set with the expected graphs."""
    for n in s.n_values:
        if max_n is not None and n > max_n:
            raise ScenarioError(f"n = {n} exceeds --max-n {max_n}")
        check_cap(n, long_run)
    expected_by_n = {}
    for n in s.n_values:
        graphs = s.expected_graphs(n)
        for g in graphs:
            if g.order != n:
                raise ScenarioError(f"expected graph {graph6_encode(g)} has order {g.order}, not {n}")
            if not s.family.is_free(g):
                raise OracleAssertionError(f"expected graph {graph6_encode(g)} is not F-free")
        expected_by_n[n] = graphs
    rows = []
    timings = {}
    previous = None
    for n in s.n_values:
        t0 = time.perf_counter()
        oracle = brute_spex if s.objective == "spex" else brute_ex
        rep = oracle(n, s.family, long_run=long_run, workers=workers)
        _check_report(rep, s.family)
        if s.objective == "spex" and previous is not None and rep.value is not None and previous.value is not None:
            # padding with an isolated vertex keeps λ, so spex cannot drop
            if rep.value.hi < previous.value.lo:
                raise OracleAssertionError(f"spex decreased from n={previous.n} to n={n}")
        previous = rep
        exp_keys = {canonical_form(g).bytes: g for g in expected_by_n[n]}
        verdict = "AGREE" if rep.witness_keys() == set(exp_keys) else "DIFFER"
        exp_g6 = tuple(sorted(graph6_encode(canonical_form(g).graph()) for g in exp_keys.values()))
        rows.append(ScenarioRow(n, verdict, rep, exp_g6))
        timings[n] = time.perf_counter() - t0
    checks = ("expected graphs F-free", "witnesses F-free and pairwise non-isomorphic",
              "witness optimality under single-edge additions" if s.objective == "spex" else "witness edge counts",
              "spex non-decreasing in n" if s.objective == "spex" else "ex recorded")
    return ScenarioVerdict(s, tuple(rows), checks, timings)
