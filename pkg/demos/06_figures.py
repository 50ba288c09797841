"""
Figures
=======

Write TikZ and DOT drawings of the genus-1 and genus-2 graphs of order 3.
Pass an output directory as the first argument (default: current directory).
"""

import sys
from pathlib import Path

from lrtrees.loopgraphs import enumerate_loop_graphs
from lrtrees.render import dot_graphs, tikz_graphs

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
out.mkdir(parents=True, exist_ok=True)

w13 = tikz_graphs(enumerate_loop_graphs(3, 1), weights=True)
(out / "W1_3.tex").write_text(w13)
(out / "W2_1.tex").write_text(tikz_graphs(enumerate_loop_graphs(3, 2), weights=True))
(out / "W2_1.dot").write_text(dot_graphs(enumerate_loop_graphs(3, 2)))
print("pictures in W1_3.tex:", w13.count("\\begin{tikzpicture}"))
print("written to", out.resolve())
