"""Plain-text rendering of arc and weight diagrams."""

from __future__ import annotations


def render_arc_diagram(d) -> str:
    """Three lines: arcs as bracket pairs, node glyphs, entries."""
    width = max(3, max((len(str(x)) for x in d.entries), default=1) + 1)
    glyphs = ["o" if d.kind(k) == "e" else "x" for k in range(len(d))]
    arc_line = [" " * width for _ in range(len(d))]
    for tag, (l, r) in enumerate(d.arc_positions()):
        label = chr(ord("a") + tag % 26)
        arc_line[l] = ("[" + label).rjust(width)
        arc_line[r] = (label + "]").rjust(width)
    nodes = "".join(g.rjust(width) for g in glyphs)
    entries = "".join(str(x).rjust(width) for x in d.entries)
    return "\n".join(("".join(arc_line).rstrip(), nodes.rstrip(), entries.rstrip()))


def render_weight_diagram(w, window=None) -> str:
    """Two lines: symbols above integer positions."""
    if window is None:
        pos = list(w.symbols) or [0]
        window = (min(pos) - 1, max(pos) + 1)
    lo, hi = window
    cells = list(range(lo, hi + 1))
    width = max(len(str(t)) for t in cells) + 1
    top = "".join(w.symbols.get(t, ".").rjust(width) for t in cells)
    bot = "".join(str(t).rjust(width) for t in cells)
    return top.rstrip() + "\n" + bot.rstrip()
