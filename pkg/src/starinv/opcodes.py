"""Equation opcodes shared by the solver front end and both backends.

Every system of defining equations is encoded as a flat list of opcodes,
each a single constraint over a fixed element ``a``, a candidate ``x`` and
up to three constant registers:

    C2  -- a*a, always available (computed per scanned element)
    CN  -- a power a^n or an arbitrary constant element, set per call
    CN1 -- the companion power a^(n+1), set per call

``star`` below is the ring involution.  Opcodes in EVAL_CHEAP compare
matrices that every scan already has in hand (a*x and x*a), so the solver
front end moves them first; the remaining opcodes cost one or two extra
products per candidate.
"""

AXA_A = 1        # a x a == a
XAX_X = 2        # x a x == x
AX_HERM = 3      # star(a x) == a x
XA_HERM = 4      # star(x a) == x a
AXS_XA = 5       # star(a x) == x a
XC2_A = 6        # x C2 == a
C2X_A = 7        # C2 x == a
AX2_X = 8        # a x x == x
X2A_X = 9        # x x a == x
AX_XA = 10       # a x == x a
CN_CN1X = 11     # CN == CN1 x
XCN1_CN = 12     # x CN1 == CN
AXCN_A = 13      # a x CN == a
AXCN_CN = 14     # a x CN == CN
XA_CENTRAL = 15  # x a commutes with every ring element (center lookup)
AX_CN = 16       # a x == CN
XA_CN = 17       # x a == CN
X_CNXCN = 18     # x == CN x CN
XAX_CN = 19      # x a x == CN
X_CN = 20        # x == CN

# comparisons of already-computed products; evaluated before the rest
EVAL_CHEAP = frozenset({AX_HERM, XA_HERM, AXS_XA, AX_XA, AX_CN, XA_CN, X_CN})
EVAL_MEDIUM = frozenset({XA_CENTRAL})


def eval_order(codes):
    """Reorder opcodes cheapest-first; stable within each cost class."""
    def cost(c):
        if c in EVAL_CHEAP:
            return 0
        if c in EVAL_MEDIUM:
            return 1
        return 2
    return tuple(sorted(codes, key=cost))
