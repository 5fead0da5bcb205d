import hypothesis.strategies as st
from hypothesis import settings

from switchlab.graphs import new_graph
from switchlab.s3 import ALL_PERMS

settings.register_profile("lab", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("lab")

perms = st.sampled_from(ALL_PERMS)


@st.composite
def graphs(draw, min_m=0, max_m=4, min_n=0, max_n=4):
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(min_n, max_n))
    rows = [
        [draw(st.integers(1, 3)) for _ in range(n)]
        for _ in range(m)
    ]
    return new_graph(m, n, rows)
