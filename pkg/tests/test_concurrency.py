"""Everything is immutable and pure; concurrent invocation must be safe."""

import random
from concurrent.futures import ThreadPoolExecutor

from canonform import parse_form, random_form
from canonform.binary import sylvester_decompose
from canonform.canonicity import build_map, jacobian_certify
from canonform.enumeration import s_of_d
from canonform.multivar import slinky

EX310 = "2*x^3 + 3*x^2*y - 21*x*y^2 - 41*y^3"


def test_parallel_invocations_are_deterministic():
    shared = parse_form(EX310)
    rng = random.Random(70)
    cubics = [random_form(3, 3, rng, lo=-99, hi=99) for _ in range(6)]

    def work(k):
        a = str(sylvester_decompose(shared))
        b = str(slinky(cubics[k % len(cubics)]))
        c = jacobian_certify(build_map("sextican")).verdict
        d = s_of_d(15)
        return a, b, c, d

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(work, range(24)))
    baseline = [work(k) for k in range(24)]
    assert results == baseline
    assert all(r[0] == "5*(x+2*y)^3 - 3*(x+3*y)^3" for r in results)
    assert all(r[2] == "Certified" and r[3] == 2 for r in results)
