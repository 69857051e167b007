"""Regenerate the packaged .aut fixtures from the family builders.

Run from the repository root:

    python3 tools/make_fixtures.py

Each fixture is the canonical serialization of its builder, so tests can
assert byte equality between the shipped file and a fresh build.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from synclang.automata import serialize
from synclang.families import (
    case2_automaton,
    cerny,
    figure_commutative,
    figure_commutative_nonsync,
    sink_cycle_automaton,
)

FIG_COMMUTATIVE_NOTE = (
    "# commutative synchronizing sample; the b-transition at state 3 is a\n"
    "# self-loop, any other target would break commutativity\n"
)

FIXTURES = {
    "cerny_3.aut": (cerny(3), ""),
    "cerny_4.aut": (cerny(4), ""),
    "sink_cycle_6.aut": (sink_cycle_automaton(6), ""),
    "sink_cycle_7.aut": (sink_cycle_automaton(7), ""),
    "case2_7_3.aut": (case2_automaton(7, 3), ""),
    "fig_commutative.aut": (figure_commutative(), FIG_COMMUTATIVE_NOTE),
    "fig_commutative_nonsync.aut": (figure_commutative_nonsync(), ""),
}


def main() -> int:
    out_dir = Path(__file__).resolve().parent.parent / "src" / "synclang" / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, (aut, header) in FIXTURES.items():
        path = out_dir / name
        path.write_text(header + serialize(aut))
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
