import xml.etree.ElementTree as ET

from hochgraph.generators import erdos_renyi_weighted, named_digraph, constant_weights
from hochgraph.persistence import characteristic_pipeline
from hochgraph.svg import curves_svg


def test_svg_is_well_formed_with_one_polyline_per_curve():
    w = erdos_renyi_weighted(10, 0.4, 1)
    curves = [characteristic_pipeline(w, "identity"), characteristic_pipeline(w, "npath:1")]
    text = curves_svg(curves, title="a < b & c")
    root = ET.fromstring(text)
    ns = "{http://www.w3.org/2000/svg}"
    lines = root.findall(f"{ns}polyline")
    assert len(lines) == 2
    # the t = -inf row is not drawn
    assert len(lines[0].get("points").split()) == len(curves[0].rows) - 1
    labels = [t.text for t in root.findall(f"{ns}text")]
    assert "identity" in labels and "npath:1" in labels and "a < b & c" in labels


def test_svg_handles_flat_and_single_point_curves():
    curve = characteristic_pipeline(constant_weights(named_digraph("square")))
    root = ET.fromstring(curves_svg([curve]))
    assert root.find("{http://www.w3.org/2000/svg}polyline") is not None
    ET.fromstring(curves_svg([]))
