"""Smoke test for the pyfwkit extension module.

Build and install first:  maturin develop -m crates/python/Cargo.toml
"""

import math

import pyfwkit


def close(a, b, tol):
    assert abs(a - b) <= tol, (a, b)


def main():
    square = pyfwkit.ConvexPolygon([(0, 0), (0, 1), (1, 1), (1, 0)])
    assert len(square) == 4 and square.area == 1.0
    close(square.diameter, math.sqrt(2), 1e-15)

    corner = pyfwkit.moment(square, (0, 0))
    close(corner["mean"], (math.sqrt(2) + math.log(1 + math.sqrt(2))) / 3, 1e-12)

    fw = pyfwkit.fw_center(square, tol=1e-7)
    close(fw.center[0], 0.5, 1e-6)
    close(fw.center[1], 0.5, 1e-6)
    grid = pyfwkit.fw_center(square, method="grid", eps=0.1)
    assert grid.mu_star <= 1.1 * fw.mu_star

    disk = pyfwkit.make_body("regular-ngon", n=512)
    close(pyfwkit.moment(disk, (0, 0))["mean"], 2 / 3, 2e-4)

    rhombus = pyfwkit.make_body("rhombus", eps=0.01)
    r = pyfwkit.ratio(rhombus)
    assert 1 / 6 < r < 1 / 6 + 0.01, r

    body = pyfwkit.make_body("random-hull", n=25, seed=3)
    report = pyfwkit.verify_bounds(body)
    assert report["all_pass"], report

    sym = pyfwkit.double_symmetrization(body)
    close(sym.area, body.area, 1e-10 * body.area)
    again = pyfwkit.ConvexPolygon.from_json(sym.to_json())
    assert again.vertices == sym.vertices

    best, _ = pyfwkit.sector_maximum(1.0, 2000)
    close(best, 0.348899, 1e-4)
    c = pyfwkit.constants()
    close(c["final_ratio"], 9.0344, 5e-4)

    try:
        pyfwkit.ConvexPolygon([(0, 0), (1, 0)])
    except ValueError:
        pass
    else:
        raise AssertionError("two vertices accepted")
    try:
        pyfwkit.fw_center(square, budget=1)
    except RuntimeError:
        pass
    else:
        raise AssertionError("budget of one converged")

    print("pyfwkit smoke test passed")


if __name__ == "__main__":
    main()
