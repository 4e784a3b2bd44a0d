import hypothesis
from hypothesis import strategies as st

from skewtab import Partition, SkewShape

hypothesis.settings.register_profile("suite", max_examples=60, deadline=None)
hypothesis.settings.load_profile("suite")


@st.composite
def partitions(draw, max_len=5, max_part=6):
    length = draw(st.integers(0, max_len))
    parts = draw(st.lists(st.integers(1, max_part), min_size=length, max_size=length))
    return Partition(tuple(sorted(parts, reverse=True)))


@st.composite
def skew_shapes(draw, max_len=5, max_part=6):
    outer = draw(partitions(max_len=max_len, max_part=max_part))
    inner = []
    cap = outer.part(1)
    for i in range(1, len(outer) + 1):
        cap = draw(st.integers(0, min(cap, outer.part(i))))
        inner.append(cap)
    return SkewShape(outer, Partition(tuple(inner)))
