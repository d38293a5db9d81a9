"""Graphviz DOT rendering of automata.

Output is byte-stable for identical input: nodes in index order, edges
sorted by endpoint pair with parallel edges merged into one comma-joined
label, initial states marked by an in-arrow from a hidden point node and
final states drawn as double circles.
"""

from __future__ import annotations

from .automata import AnyAutomaton, as_nfa


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(m: AnyAutomaton) -> str:
    n = as_nfa(m)
    lines = ["digraph automaton {", "  rankdir=LR;"]
    for i, q in enumerate(sorted(n.initial)):
        lines.append(f"  __start{i} [shape=point, width=0.08];")
    for q in range(n.state_count):
        shape = "doublecircle" if q in n.final else "circle"
        lines.append(f"  {q} [label={_quote(n.label_of(q))}, shape={shape}];")
    for i, q in enumerate(sorted(n.initial)):
        lines.append(f"  __start{i} -> {q};")
    grouped: dict[tuple[int, int], list[int]] = {}
    for (p, a, q) in n.transitions:
        grouped.setdefault((p, q), []).append(a)
    for (p, q) in sorted(grouped):
        label = ",".join(n.alphabet.symbols[a] for a in sorted(grouped[(p, q)]))
        lines.append(f"  {p} -> {q} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
