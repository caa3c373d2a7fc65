import pandas as pd

from scripts.report import apply_column_labels, smart_table
from scripts.sweep import PROPERTIES, run_sweep
from scripts.ui.dot_render import dot_source, render_dot


def test_column_labels():
    df = pd.DataFrame({"property": ["criteria"], "extra": [1]})
    assert list(apply_column_labels(df, "sweep").columns) == ["Property", "extra"]
    assert list(apply_column_labels(df, "unknown").columns) == ["property", "extra"]


def test_smart_table_formats_floats():
    df = pd.DataFrame({"property": ["moral"], "checks": [3], "seconds": [0.123456]})
    text = smart_table(df, "sweep")
    assert "Property" in text and "Seconds" in text
    assert "0.12" in text and "0.123" not in text
    assert smart_table(df.iloc[0:0], "sweep") == "(empty)\n"


def test_sweep_on_three_nodes_has_no_mismatches():
    table = run_sweep(3)
    assert list(table["property"]) == list(PROPERTIES)
    assert (table["graphs"] == 50).all()
    assert table["mismatches"].sum() == 0
    assert (table["checks"] > 0).all()


def test_random_sweep_is_seeded():
    first = run_sweep(5, properties=["moral", "pattern"], samples=5, seed=11)
    again = run_sweep(5, properties=["moral", "pattern"], samples=5, seed=11)
    assert first[["checks", "mismatches"]].equals(again[["checks", "mismatches"]])
    assert first["mismatches"].sum() == 0


def test_dot_rendering(g_a_lines):
    dot = render_dot(g_a_lines)
    assert len(dot.get_edges()) == 4
    text = dot_source(g_a_lines)
    assert "digraph" in text
    assert text.count("dir=none") == 2
