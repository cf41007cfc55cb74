"""McCabe cyclomatic complexity, two ways.

Source route: strip comments and literals, then count decision tokens over
the whole compilation unit -- ``if``, ``case``, ``for``, ``while``, ``catch``,
``&&``, ``||``, and the conditional ``?`` -- and add one. ``else``,
``default``, ``try``, ``finally`` and ``do`` are never counted (the ``while``
of a do-while carries its decision point).

Bytecode route: build a basic-block control-flow graph over a decoded method
and compute E - N + 2 on the part reachable from entry. Exception-handler
edges are excluded so the figure stays comparable with source counting on
try/catch-free code; handler blocks are therefore usually unreachable and
drop out of the count. The two routes agree on straightforward single-exit
methods; compilers may break agreement with early returns, synthetic code,
or desugared constructs, so the graph figure is a diagnostic, not the
primary number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from . import opcodes as ops
from .classfile import Instruction, MethodInfo


@dataclass(frozen=True)
class SourceUnit:
    path: str
    text: str
    primary_class: Optional[str]  # None when no top-level type matches the file stem


@dataclass(frozen=True)
class DecisionCount:
    if_count: int = 0
    case_count: int = 0
    for_count: int = 0
    while_count: int = 0
    catch_count: int = 0
    and_op_count: int = 0
    or_op_count: int = 0
    ternary_count: int = 0

    @property
    def total(self) -> int:
        return (self.if_count + self.case_count + self.for_count + self.while_count
                + self.catch_count + self.and_op_count + self.or_op_count
                + self.ternary_count)

    @property
    def cc(self) -> int:
        return self.total + 1

    def __add__(self, other: "DecisionCount") -> "DecisionCount":
        return DecisionCount(
            self.if_count + other.if_count,
            self.case_count + other.case_count,
            self.for_count + other.for_count,
            self.while_count + other.while_count,
            self.catch_count + other.catch_count,
            self.and_op_count + other.and_op_count,
            self.or_op_count + other.or_op_count,
            self.ternary_count + other.ternary_count,
        )


def strip_noncode(text: str) -> str:
    """Blank comments and string/char literals, preserving length and newlines.

    Every non-newline character of a comment or literal (delimiters included)
    becomes a space, so token offsets and line numbers survive. Escapes inside
    literals are honored; an unterminated literal or block comment consumes
    the rest of the input.
    """
    out = list(text)
    i, n = 0, len(text)

    def blank(start: int, end: int) -> None:
        for k in range(start, end):
            if out[k] not in ("\n", "\r"):
                out[k] = " "

    while i < n:
        c = text[i]
        if c == "/" and i + 1 < n and text[i + 1] == "/":
            j = i
            while j < n and text[j] != "\n":
                j += 1
            blank(i, j)
            i = j
        elif c == "/" and i + 1 < n and text[i + 1] == "*":
            j = text.find("*/", i + 2)
            j = n if j < 0 else j + 2
            blank(i, j)
            i = j
        elif c == '"' or c == "'":
            j = i + 1
            while j < n and text[j] != c:
                j += 2 if text[j] == "\\" else 1
            j = min(j + 1, n)
            blank(i, j)
            i = j
        else:
            i += 1
    return "".join(out)


_DECISION_WORD = re.compile(r"\b(if|case|for|while|catch)\b")
_TOKEN = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*|\d[\w.]*|\S")
_IDENTISH = re.compile(r"[A-Za-z0-9_$]")


def _count_ternaries(text: str) -> int:
    # A '?' is conditional when it follows an operand (identifier, literal,
    # or closing bracket) and does not open a generic wildcard. Cheap token
    # heuristic; a blanked literal directly before '?' is not recognized as
    # an operand.
    tokens = _TOKEN.findall(text)
    count = 0
    for i, tok in enumerate(tokens):
        if tok != "?":
            continue
        if i == 0:
            continue
        prev = tokens[i - 1]
        if not (_IDENTISH.match(prev[0]) or prev in (")", "]")):
            continue
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        if nxt in (">", "extends", "super"):
            continue
        count += 1
    return count


def count_decision_points(text: str) -> DecisionCount:
    """Count decision tokens in already-stripped source text."""
    words = {"if": 0, "case": 0, "for": 0, "while": 0, "catch": 0}
    for match in _DECISION_WORD.finditer(text):
        words[match.group(1)] += 1
    return DecisionCount(
        if_count=words["if"],
        case_count=words["case"],
        for_count=words["for"],
        while_count=words["while"],
        catch_count=words["catch"],
        and_op_count=text.count("&&"),
        or_op_count=text.count("||"),
        ternary_count=_count_ternaries(text),
    )


def cc_of_source(unit: SourceUnit) -> DecisionCount:
    """Decision counts for a whole compilation unit (per-file granularity)."""
    return count_decision_points(strip_noncode(unit.text))


_PACKAGE = re.compile(r"\bpackage\s+([A-Za-z_$][\w$]*(?:\s*\.\s*[A-Za-z_$][\w$]*)*)\s*;")


def attribute_primary_class(stem: str, stripped_text: str) -> Optional[str]:
    """Binary name of the top-level type matching the file stem, if declared."""
    decl = re.search(
        r"\b(?:class|interface|enum|record)\s+" + re.escape(stem) + r"\b",
        stripped_text,
    )
    if decl is None:
        return None
    pkg = _PACKAGE.search(stripped_text)
    if pkg is None:
        return stem
    return re.sub(r"\s", "", pkg.group(1)) + "." + stem


def load_source_unit(path: Union[str, Path]) -> SourceUnit:
    """Read a UTF-8 source file and attribute it to its primary class."""
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    primary = attribute_primary_class(p.stem, strip_noncode(text))
    return SourceUnit(path=str(p), text=text, primary_class=primary)


# --- control-flow graph ----------------------------------------------------

@dataclass(frozen=True)
class BasicBlock:
    index: int
    instructions: tuple[Instruction, ...]

    @property
    def start(self) -> int:
        return self.instructions[0].offset

    @property
    def end(self) -> int:
        return self.instructions[-1].offset


@dataclass(frozen=True)
class ControlFlowGraph:
    """Basic blocks plus directed edges; parallel edges are kept distinct."""

    blocks: tuple[BasicBlock, ...]
    edges: tuple[tuple[int, int], ...]
    entry: int = 0


def _static_targets(ins: Instruction) -> tuple[int, ...]:
    targets = []
    if ins.branch_target is not None:
        targets.append(ins.branch_target)
    targets.extend(ins.switch_targets)
    if ins.switch_default is not None:
        targets.append(ins.switch_default)
    return tuple(targets)


def build_cfg(method: MethodInfo) -> ControlFlowGraph:
    """Partition a method's instructions into basic blocks and wire edges.

    Leaders are the entry offset, every branch or switch target, and every
    instruction after a branch, switch, or unconditional transfer. Edges are
    fall-through plus one edge per static target (each switch case counts
    separately, plus the default); return/throw blocks have no out-edges and
    exception handlers contribute none.
    """
    if method.code is None:
        raise ValueError(f"method {method.name!r} has no code")
    instructions = method.code.instructions
    leaders = {instructions[0].offset}
    ends_block = set()
    for k, ins in enumerate(instructions):
        transfers = (
            ins.category in (ops.Category.BRANCH, ops.Category.SWITCH)
            or ins.is_unconditional_transfer
        )
        if transfers:
            ends_block.add(ins.offset)
            leaders.update(_static_targets(ins))
            if k + 1 < len(instructions):
                leaders.add(instructions[k + 1].offset)

    blocks: list[BasicBlock] = []
    current: list[Instruction] = []
    for ins in instructions:
        if ins.offset in leaders and current:
            blocks.append(BasicBlock(len(blocks), tuple(current)))
            current = []
        current.append(ins)
        if ins.offset in ends_block:
            blocks.append(BasicBlock(len(blocks), tuple(current)))
            current = []
    if current:
        blocks.append(BasicBlock(len(blocks), tuple(current)))

    block_at = {b.start: b.index for b in blocks}
    edges: list[tuple[int, int]] = []
    for b in blocks:
        last = b.instructions[-1]
        has_next = b.index + 1 < len(blocks)
        if last.category is ops.Category.BRANCH:
            edges.append((b.index, block_at[last.branch_target]))
            if has_next:
                edges.append((b.index, b.index + 1))
        elif last.category is ops.Category.SWITCH:
            for t in last.switch_targets:
                edges.append((b.index, block_at[t]))
            edges.append((b.index, block_at[last.switch_default]))
        elif last.opcode in ops.GOTO_FAMILY:
            edges.append((b.index, block_at[last.branch_target]))
        elif last.is_unconditional_transfer:
            pass  # return, throw, or ret: flow stops here
        elif has_next:
            edges.append((b.index, b.index + 1))
    return ControlFlowGraph(tuple(blocks), tuple(edges))


def cc_from_cfg(graph: ControlFlowGraph) -> int:
    """E - N + 2 over the blocks reachable from entry (parallel edges count)."""
    successors: dict[int, list[int]] = {}
    for src, dst in graph.edges:
        successors.setdefault(src, []).append(dst)
    reachable = set()
    stack = [graph.entry]
    while stack:
        node = stack.pop()
        if node in reachable:
            continue
        reachable.add(node)
        stack.extend(successors.get(node, ()))
    n = len(reachable)
    e = sum(1 for src, _ in graph.edges if src in reachable)
    return e - n + 2
