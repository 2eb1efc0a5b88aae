import math
import re
import xml.etree.ElementTree as ET

import pytest

from hexpath.geometry import circles_below
from hexpath.render import ARC_CENTER, ARC_COLOR, SCALE, render_svg, write_svg
from hexpath.steps import Step, parse_path, vertices
from reference_values import EXAMPLE_AXIS

NS = {"s": "http://www.w3.org/2000/svg"}


def parse(svg):
    root = ET.fromstring(svg.encode())
    circles = root.findall(".//s:g[@id='circles']/s:circle", NS)
    arcs = root.findall(".//s:g[@id='arcs']/s:path", NS)
    lines = root.findall(".//s:g[@id='axes']/s:line", NS)
    return root, circles, arcs, lines


def test_single_circle_path():
    root, circles, arcs, lines = parse(render_svg("U F D"))
    assert root.get("version") == "1.1"
    assert len(circles) == 1 and len(arcs) == 3 and len(lines) == 2
    # the circle is centered where the axis line sits, 2 units right of the origin line
    axis_y = float(lines[0].get("y1"))
    wall_x = float(lines[1].get("x1"))
    c = circles[0]
    assert float(c.get("cy")) == pytest.approx(axis_y)
    assert float(c.get("cx")) - wall_x == pytest.approx(2 * SCALE)
    assert [a.get("class") for a in arcs] == ["U", "F", "D"]


def test_empty_path_draws_axes_only():
    _, circles, arcs, lines = parse(render_svg(""))
    assert (len(circles), len(arcs), len(lines)) == (0, 0, 2)


def test_partial_path_has_no_circles():
    _, circles, arcs, _ = parse(render_svg("U F"))
    assert not circles and len(arcs) == 2


def test_example_axis_path():
    _, circles, arcs, _ = parse(render_svg(EXAMPLE_AXIS))
    assert len(circles) == len(circles_below(parse_path(EXAMPLE_AXIS))) == 9
    assert len(arcs) == 20


@pytest.mark.parametrize("tokens", ["U Ub Db D", EXAMPLE_AXIS, "U F Fb Ub Db Fb F D"])
def test_every_arc_is_a_sixty_degree_arc(tokens):
    _, _, arcs, _ = parse(render_svg(tokens))
    for a in arcs:
        nums = list(map(float, re.findall(r"-?\d+(?:\.\d+)?", a.get("d"))))
        x0, y0, rx, ry, _, _, _, x1, y1 = nums
        assert rx == ry == 2 * SCALE
        # chord of a 60 degree arc equals the radius
        assert math.hypot(x1 - x0, y1 - y0) == pytest.approx(rx, abs=2e-3)


def test_arc_centers_are_at_distance_two():
    for s, (dx, dh) in ARC_CENTER.items():
        # the end vertex is also at distance 2 from the same center
        ex, eh = s.dx - dx, s.dh - dh
        assert math.hypot(dx, dh * math.sqrt(3)) == pytest.approx(2)
        assert math.hypot(ex, eh * math.sqrt(3)) == pytest.approx(2)


def test_barred_arcs_bulge_the_right_way():
    # the U and Ub arcs of "U Ub Db D" curve around different centers
    _, _, arcs, _ = parse(render_svg("U Ub Db D"))
    sweeps = [a.get("d").split()[-3] for a in arcs]
    assert sweeps == ["1", "0", "0", "1"]
    assert [a.get("stroke") for a in arcs] == [ARC_COLOR[Step[s]] for s in ("U", "Ub", "Db", "D")]


def test_colors_are_distinct():
    assert len(set(ARC_COLOR.values())) == 6


def test_deterministic_and_write(tmp_path):
    a = render_svg(EXAMPLE_AXIS)
    assert a == render_svg(parse_path(EXAMPLE_AXIS))
    out = write_svg("U F D", tmp_path / "p.svg")
    assert out.read_text() == render_svg("U F D")
