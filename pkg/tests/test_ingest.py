import io
import logging
import random
import unicodedata

import pytest
from hypothesis import given, settings, strategies as st

from interlock.cohesion import components
from interlock.core import JournalGraph
from interlock.errors import (
    DuplicateEdge,
    ParseError,
    SelfLoop,
    UnknownVertex,
    UnsupportedDirected,
)
from interlock.ingest import (
    read_affiliation_csv,
    read_fixture_a1,
    read_fixture_distribution,
    read_pajek_clu,
    read_pajek_net,
    realize_affiliation,
    write_affiliation_csv,
    write_dot,
    write_pajek_clu,
    write_pajek_net,
)
from interlock.project import project
from oracles import random_graph


def b(text: str) -> io.BytesIO:
    return io.BytesIO(text.encode("utf-8"))


# ------------------------------------------------------------------ affiliation


def test_affiliation_two_rows():
    a = read_affiliation_csv(b("editor,journal\ne1,J1\ne1,J2\n"))
    assert (a.n_actors, a.n_events, a.seats) == (1, 2, 2)


def test_affiliation_duplicate_rows_warn(caplog):
    with caplog.at_level(logging.WARNING):
        a = read_affiliation_csv(b("editor,journal\ne1,J1\ne1,J1\n"))
    assert a.seats == 1 and a.duplicates == 1
    assert "duplicate" in caplog.text


def test_affiliation_participation():
    # 3 editors, 2 journals, 5 seats
    text = "editor,journal\na,J1\na,J2\nb,J1\nb,J2\nc,J1\n"
    a = read_affiliation_csv(b(text))
    assert (a.n_actors, a.n_events, a.seats) == (3, 2, 5)
    assert a.participation == pytest.approx(5 / 3)


def test_affiliation_quoting_and_bom():
    text = '﻿editor,journal\n"Smith, J.","Journal of ""Quoted"" Economics"\n'
    a = read_affiliation_csv(b(text))
    assert a.actors[0] == "Smith, J."
    assert a.events[0] == 'Journal of "Quoted" Economics'


@pytest.mark.parametrize(
    "text, line",
    [
        ("editor,journal\ne1,J1\ne2\n", 3),
        ("editor,journal\ne1,J1,x\n", 2),
        ("editor,journal\n , J1\n", 2),
        ("editor,journal\ne1,\n", 2),
        ("name,title\ne1,J1\n", 1),
        ("", 1),
    ],
)
def test_affiliation_errors_carry_line(text, line):
    with pytest.raises(ParseError) as err:
        read_affiliation_csv(b(text))
    assert err.value.line == line


def test_affiliation_csv_round_trip():
    text = "editor,journal\na,J1\na,J2\nb,J2\n"
    a = read_affiliation_csv(b(text))
    assert write_affiliation_csv(a).decode() == text


# ------------------------------------------------------------------ Pajek


def test_pajek_companion_pair():
    g = read_pajek_net(b('*Vertices 2\n1 "A"\n2 "B"\n*Edges\n1 2 40\n'))
    assert list(g.edges()) == [(0, 1, 40)]
    assert g.labels == ["A", "B"]


def test_pajek_empty_edges_section():
    g = read_pajek_net(b('*Vertices 2\n1 "A"\n2 "B"\n*Edges\n'))
    assert g.n == 2 and g.n_edges == 0


def test_pajek_unknown_vertex():
    with pytest.raises(UnknownVertex) as err:
        read_pajek_net(b('*Vertices 2\n1 "A"\n2 "B"\n*Edges\n1 3\n'))
    assert err.value.line == 5


def test_pajek_lenient_features():
    text = (
        "% comment\n*vertices 3\n"
        '1 "Journal A" 0.1 0.2 0.5\n2 B\n3 "C"\n'
        "*EDGES\n% another\n1 2\n2 3 7\n"
    )
    g = read_pajek_net(b(text))
    assert g.labels == ["Journal A", "B", "C"]
    assert list(g.edges()) == [(0, 1, 1), (1, 2, 7)]


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ('*Vertices 3\n1 "A"\n2 "B"\n*Edges\n', ParseError, 4),
        ('*Vertices 2\n1 "A"\n2 "B"\n*Edges\n1 2 x\n', ParseError, 5),
        ('*Vertices 2\n1 "A"\n2 "B"\n*Edges\n1 2 1.5\n', ParseError, 5),
        ('*Vertices 2\n1 "A"\n2 "B"\n*Arcs\n1 2\n', UnsupportedDirected, 4),
        ('*Vertices 2\n1 "A"\n2 "B"\n*Matrix\n', ParseError, 4),
        ('*Vertices 2\n1 "A"\n2 "B"\n*Edges\n1 1\n', SelfLoop, 5),
        ('*Vertices 2\n1 "A"\n2 "B"\n*Edges\n1 2\n2 1\n', DuplicateEdge, 6),
        ('*Vertices 2\n1 "A"\n2 "A"\n', ParseError, 3),
        ("1 2\n", ParseError, 1),
    ],
)
def test_pajek_errors(text, exc, line):
    with pytest.raises(exc) as err:
        read_pajek_net(b(text))
    assert err.value.line == line


def test_pajek_triangle_canonical_bytes(triangle):
    expected = b'*Vertices 3\n1 "a"\n2 "b"\n3 "c"\n*Edges\n1 2 1\n1 3 3\n2 3 2\n'
    assert write_pajek_net(triangle) == expected
    assert write_pajek_net(read_pajek_net(expected)) == expected


def test_pajek_writer_rejects_quote_in_label():
    g = JournalGraph.from_edges(['say "hi"'], [])
    with pytest.raises(ValueError):
        write_pajek_net(g)


@pytest.mark.parametrize("seed", range(50))
def test_pajek_round_trip_random(seed):
    g = random_graph(random.Random(1000 + seed), max_n=30, max_value=40)
    assert read_pajek_net(write_pajek_net(g)) == g


labels = st.text(
    alphabet=st.characters(blacklist_characters='"\r\n\x0b\x0c\x1c\x1d\x1e\x85  ',
                           blacklist_categories=("Cs", "Cc")),
    min_size=1,
).filter(lambda s: s.strip())


@settings(max_examples=60)
@given(st.lists(labels, min_size=1, max_size=8, unique_by=lambda s: unicodedata.normalize("NFC", s).strip()))
def test_pajek_round_trip_unicode_labels(names):
    g = JournalGraph.from_edges(names, [(0, i, i) for i in range(1, len(names))])
    data = write_pajek_net(g)
    assert read_pajek_net(data) == g
    assert write_pajek_net(read_pajek_net(data)) == data


# ------------------------------------------------------------------ .clu


def test_clu_single_component(path3):
    assert write_pajek_clu(components(path3)) == b"*Vertices 3\n1\n1\n1\n"


def test_clu_tie_rule():
    g = JournalGraph.from_edges("ab", [])
    assert write_pajek_clu(components(g)) == b"*Vertices 2\n1\n2\n"


def test_clu_size_order():
    # isolate listed first, K2 second: the pair still gets cluster 1
    g = JournalGraph.from_edges("xab", [(1, 2, 1)])
    assert write_pajek_clu(components(g)) == b"*Vertices 3\n2\n1\n1\n"
    g = JournalGraph.from_edges("abx", [(0, 1, 1)])
    assert write_pajek_clu(components(g)) == b"*Vertices 3\n1\n1\n2\n"
    assert read_pajek_clu(write_pajek_clu(components(g))) == [1, 1, 2]


# ------------------------------------------------------------------ fixtures

A1_HEADER = "journal,degree,normalized_degree,rank_degree,closeness,rank_closeness,betweenness_x100,rank_betweenness\n"


def test_fixture_a1_row():
    rows = read_fixture_a1(b(A1_HEADER + "Pacific Economic Review,124,0.166,1,0.449,1,3.932,1\n"))
    r = rows[0]
    assert r.degree == 124 and r.normalized_degree == 0.166
    assert (r.rank_degree, r.rank_closeness, r.rank_betweenness) == (1, 1, 1)
    assert r.betweenness_x100 == 3.932


def test_fixture_a1_isolated_row():
    rows = read_fixture_a1(b(A1_HEADER + "African Economic History,0,0.000,673,0.000,673,0.000,593\n"))
    assert rows[0].closeness == 0 and rows[0].betweenness_x100 == 0


def test_fixture_a1_non_numeric():
    with pytest.raises(ParseError) as err:
        read_fixture_a1(b(A1_HEADER + "ok,1,0.001,1,0.1,1,0.0,1\nX,1,abc,1,0.1,1,0.0,1\n"))
    assert err.value.line == 3


def test_fixture_a1_quoted_name_with_comma():
    rows = read_fixture_a1(b(A1_HEADER + '"L\'Industria, Nuova Serie",1,0.001,629,0.240,637,0.000,593\n'))
    assert rows[0].journal == "L'Industria, Nuova Serie"


def test_fixture_distribution_optional_pct():
    t = read_fixture_distribution(b("degree,freq\n0,74\n1,44\n"), "degree")
    assert t.counts == {0: 74, 1: 44} and t.rows[0][2] is None
    t = read_fixture_distribution(b("line_value,freq,freq_pct\n1,4780,74.61\n"), "line_value")
    assert t.rows == ((1, 4780, 74.61),)
    with pytest.raises(ParseError):
        read_fixture_distribution(b("degree,freq\n0,1\n0,2\n"), "degree")


# ------------------------------------------------------------------ misc


@pytest.mark.parametrize("seed", range(20))
def test_realized_affiliation_projects_back(seed):
    g = random_graph(random.Random(seed), max_value=4)
    assert project(realize_affiliation(g)) == g


def test_dot_export(triangle):
    dot = write_dot(triangle).decode()
    assert dot.startswith("graph journals {") and dot.count("--") == 3
