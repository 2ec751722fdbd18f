"""Smoke test for the gauge_radii extension module.

Build and install first, e.g. ``maturin develop -m crates/python/Cargo.toml``,
then run ``python python/smoke_test.py``.
"""

import json
import math

import gauge_radii as gr

S3 = math.sqrt(3.0)


def close(a, b, tol):
    assert abs(a - b) <= tol, f"{a} vs {b}"


def main():
    square = gr.make_body("paper_square")
    tri = gr.make_body("paper_triangle")
    assert square.dim == 2 and len(square) == 4
    close(tri.support([1.0, 0.0]), 2.0, 1e-12)
    close(tri.width([1.0, 0.0]), 3.0, 1e-12)

    gauge = gr.GaugeBody(tri)
    close(gauge([-2.0, 0.0]), 2.0, 1e-12)
    close(gauge.radial([1.0, 0.0]), 2.0, 1e-12)

    d = gr.diameter(square, tri)
    close(d.value, 2.0 / 3.0 * (3.0 + S3), 1e-7)
    assert d.quantity == "D" and d.pair is not None
    r = gr.circumradius(square.difference_body(), tri)
    close(r.value, 2.0 + 4.0 / S3, 1e-7)
    assert len(r.center) == 2
    w = gr.min_width(square, tri)
    close(float(w), 2.0, 1e-7)
    close(math.hypot(*w.direction), 1.0, 1e-12)
    close(gr.inradius(tri, tri).value, 1.0, 1e-9)
    close(gr.induced_norm(tri, [0.0, S3]), 1.0, 1e-12)

    chain = gr.verify_chain(square, tri)
    assert chain["all_hold"], chain
    close(chain["a5"], 3.0 + S3, 1e-7)

    again = gr.VPolytope.from_json(square.to_json())
    assert again == square
    assert json.loads(square.to_json())["dim"] == 2

    for bad in (lambda: gr.make_body("ball"), lambda: gr.GaugeBody(tri.translate([5.0, 0.0]))):
        try:
            bad()
        except gr.GeometryError:
            pass
        else:
            raise AssertionError("expected GeometryError")
    assert issubclass(gr.GeometryError, ValueError)
    print("gauge_radii smoke test passed")


if __name__ == "__main__":
    main()
