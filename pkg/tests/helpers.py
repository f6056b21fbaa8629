"""Shared strategies: small random linear codes over small fields."""

from __future__ import annotations

import numpy as np
from hypothesis import assume, strategies as st

from nmdsdesigns.codes import LinearCode
from nmdsdesigns.field import build_field

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)]


@st.composite
def small_codes(draw, max_n=9, limit=1 << 14):
    p, m = draw(st.sampled_from(FIELDS))
    F = build_field(p, m)
    q = F.order
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n - 1))
    if q ** k > limit or q ** (n - k) > limit:
        k = 1 if q ** (n - 1) <= limit else n - 1
        if q ** k > limit or q ** (n - k) > limit:
            n, k = 4, 2
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    C = LinearCode(F, np.array(rows, dtype=np.int64).reshape(k, n))
    assume(C.k > 0)
    return C
