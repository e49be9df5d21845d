import numpy as np
import pytest

from weakties import (EdgeRecord, ParseError, build_graph,
                      newman_coauthorship_weights, parse_edgelist,
                      parse_pajek, parse_papers)
from weakties.ingest import PaperRecord


class TestPajek:
    def test_minimal_file(self):
        labels, records = parse_pajek(
            '*Vertices 2\n1 "a"\n2 "b"\n*Edges\n1 2 3.5\n')
        assert labels == ["a", "b"]
        assert records == [EdgeRecord("a", "b", 3.5)]

    def test_vertex_index_out_of_range(self):
        with pytest.raises(ParseError) as err:
            parse_pajek("*Vertices 2\n*Edges\n1 3 1.0\n")
        assert err.value.line == 3

    def test_missing_vertices_header(self):
        with pytest.raises(ParseError):
            parse_pajek("*Edges\n1 2\n")

    def test_default_labels_and_weight(self):
        labels, records = parse_pajek("*Vertices 3\n*Edges\n1 2\n2 3\n")
        assert labels == ["1", "2", "3"]
        assert all(r.weight == 1.0 for r in records)

    def test_arcs_symmetrized_by_collapse(self):
        _, records = parse_pajek(
            "*Vertices 2\n*Arcs\n1 2 1.0\n2 1 2.0\n")
        g = build_graph(records)
        assert g.edge_count == 1
        assert g.edge_weight(0, 1) == 3.0

    def test_case_insensitive_sections_and_comments(self):
        labels, records = parse_pajek(
            "% header comment\n*vertices 2\n\n*EDGES\n1 2 0.5\n")
        assert len(records) == 1

    def test_vertex_label_with_coordinates(self):
        labels, _ = parse_pajek(
            '*Vertices 2\n1 "San Francisco" 0.1 0.2\n2 "LA" 0.3 0.4\n'
            "*Edges\n1 2\n")
        assert labels == ["San Francisco", "LA"]

    def test_malformed_weight_reports_line(self):
        with pytest.raises(ParseError) as err:
            parse_pajek("*Vertices 2\n*Edges\n1 2 abc\n")
        assert err.value.line == 3

    def test_ignores_other_sections(self):
        _, records = parse_pajek(
            "*Vertices 2\n*Edges\n1 2\n*Partition foo\n1\n2\n")
        assert len(records) == 1


class TestEdgelist:
    def test_weighted_line(self):
        assert parse_edgelist("a b 2.5\n") == [EdgeRecord("a", "b", 2.5)]

    def test_default_weight(self):
        assert parse_edgelist("a b\n") == [EdgeRecord("a", "b", 1.0)]

    def test_single_field_errors(self):
        with pytest.raises(ParseError) as err:
            parse_edgelist("a\n")
        assert err.value.line == 1

    def test_comments_and_blanks_skipped(self):
        records = parse_edgelist("# comment\n\na b 1\n")
        assert len(records) == 1

    def test_bad_weight(self):
        with pytest.raises(ParseError):
            parse_edgelist("a b heavy\n")


class TestPapers:
    def test_parse_papers(self):
        papers = parse_papers("A;B;C\nD\n")
        assert papers == [PaperRecord(("A", "B", "C")), PaperRecord(("D",))]

    def test_duplicate_author_rejected(self):
        with pytest.raises(ParseError):
            parse_papers("A;A;B\n")

    def test_two_authors_weight_one(self):
        records = list(newman_coauthorship_weights([PaperRecord(("A", "B"))]))
        assert records == [EdgeRecord("A", "B", 1.0)]

    def test_three_authors_half_each(self):
        records = list(newman_coauthorship_weights(
            [PaperRecord(("A", "B", "C"))]))
        assert len(records) == 3
        assert all(r.weight == 0.5 for r in records)

    def test_single_author_contributes_nothing(self):
        assert list(newman_coauthorship_weights([PaperRecord(("A",))])) == []

    def test_summed_weights_across_papers(self):
        papers = [PaperRecord(("A", "B")), PaperRecord(("A", "B", "C"))]
        g = build_graph(list(newman_coauthorship_weights(papers)))
        a, b, c = (g.node_id(x) for x in "ABC")
        assert g.edge_weight(a, b) == pytest.approx(1.5)
        assert g.edge_weight(a, c) == pytest.approx(0.5)
        assert g.edge_weight(b, c) == pytest.approx(0.5)

    def test_brute_force_oracle_on_random_corpora(self):
        rng = np.random.default_rng(42)
        authors = [f"A{i}" for i in range(12)]
        for _ in range(30):
            papers = []
            for _ in range(rng.integers(1, 15)):
                k = int(rng.integers(1, 6))
                picks = rng.choice(len(authors), size=k, replace=False)
                papers.append(PaperRecord(tuple(authors[i] for i in picks)))
            # oracle: directly sum 1/(n-1) for every paper containing a pair
            expected = {}
            for p in papers:
                n = len(p.author_labels)
                if n < 2:
                    continue
                for i in range(n):
                    for j in range(i + 1, n):
                        key = tuple(sorted((p.author_labels[i],
                                            p.author_labels[j])))
                        expected[key] = expected.get(key, 0) + 1 / (n - 1)
            records = list(newman_coauthorship_weights(papers))
            if not records:
                continue
            g = build_graph(records)
            got = {tuple(sorted((g.labels[x], g.labels[y]))): w
                   for x, y, w in g.edges()}
            assert set(got) == set(expected)
            for key in expected:
                assert got[key] == pytest.approx(expected[key], rel=1e-12)
