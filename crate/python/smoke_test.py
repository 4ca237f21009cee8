"""Smoke test for the gaussphi Python extension.

Builds the extension with cargo, loads it, and checks a handful of values.
Run from the repository root: python3 python/smoke_test.py
"""

import importlib.util
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "gaussphi-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "libgaussphi_py.so"
    tmp = pathlib.Path(tempfile.mkdtemp())
    target = tmp / "gaussphi.so"
    shutil.copy(built, target)
    spec = importlib.util.spec_from_file_location("gaussphi", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    gp = load()
    G = gp.GInt

    assert gp.phi("4+i") == 2
    assert gp.phi(G(0, 2)) == 2
    assert gp.phi(1) == 0
    assert gp.phi_parts("4+i") == (2, 0, 2, "within")
    assert [gp.w(m) for m in range(6)] == [3, 4, 6, 8, 12, 16]

    q, r = gp.gauss_divide(9, "4+i")
    assert (str(q), str(r)) == ("2-i", "2i")
    out = gp.minimal_divide(9, G(4, 1))
    assert str(out["quotient"]) == "2" and str(out["remainder"]) == "1-2i"
    assert out["strategy"] == "subtract_u" and out["phi_r"] == 1

    assert gp.minimal_expansion(2) == "0,0,-i"
    assert gp.eval_expansion("i,1,-i") == G(3, 2)
    assert gp.min_degree_bfs("3+2i") == 2

    g, s, t = gp.xgcd(2, "1+i")
    assert g == G(1, 1)
    assert s * 2 + t * G(1, 1) == g
    assert str(gp.gcd_minimal(6, 4)[0]) == "2"
    assert str(gp.gcd_norm(0, "-3i")[0]) == "3"

    big = G(3**200, -(7**150))
    assert gp.phi(big * 2) == gp.phi(big) + 2
    assert gp.norm(big) == big.x**2 + big.y**2
    assert gp.canonical_unit("-5") == "-1"
    assert gp.v2("4+8i") == 2 and gp.v1pi("1+i") == 1

    for bad in (lambda: gp.phi(0), lambda: gp.phi("4+x")):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        gp.gauss_divide(1, 0)
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("expected ZeroDivisionError")

    print("python smoke test: ok")


if __name__ == "__main__":
    sys.exit(main())
