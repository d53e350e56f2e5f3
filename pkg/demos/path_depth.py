"""Depth of powers of I_c(P_n) and where the depth function settles.

Run:  python demos/path_depth.py
"""

from ceilab.depth import DepthEvaluator, dstab
from ceilab.generators import path

for n in range(4, 9):
    ev = DepthEvaluator()
    st = dstab(path(n), ev, kmax=n)
    values = " ".join(str(d) for _, d in st.table)
    print(f"P{n}: depth S/I^k for k=1..{len(st.table)}: {values}")
    print(f"     stable from k={st.dstab} at depth {st.limit} (bound {st.bound})")
    # which route produced the numbers
    print(f"     routes used: {ev.counts}")
