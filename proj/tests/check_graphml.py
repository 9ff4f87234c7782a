"""Cross-checks the GraphML export and per-node metrics against networkx.

Usage: check_graphml.py <hashnet binary> <fixtures dir>
Exits 77 (skipped) when networkx is not installed.
"""

import csv
import os
import subprocess
import sys
import tempfile

try:
    import networkx as nx
except ImportError:
    print("networkx not available; skipping")
    sys.exit(77)


def main():
    cli, fixtures = sys.argv[1], sys.argv[2]
    with tempfile.TemporaryDirectory() as tmp:
        corpus = os.path.join(tmp, "corpus")
        out = os.path.join(tmp, "out")
        subprocess.run([cli, "synth", "--config", os.path.join(fixtures, "athens_like.json"),
                        "--out", corpus], check=True, capture_output=True)
        subprocess.run([cli, "analyze", "--config", os.path.join(fixtures, "athens_like_run.json"),
                        "--tweets", os.path.join(corpus, "tweets.jsonl"),
                        "--accounts", os.path.join(corpus, "accounts.jsonl"),
                        "--follows", os.path.join(corpus, "follows.jsonl"),
                        "--out", out], check=True, capture_output=True)

        g = nx.read_graphml(os.path.join(out, "network.graphml"))
        assert g.is_directed()
        assert g.number_of_nodes() == 527, g.number_of_nodes()
        assert g.number_of_edges() == 1947, g.number_of_edges()
        assert g.graph.get("schema_version") == 1, g.graph
        for _, attrs in g.nodes(data=True):
            for key in ("in_degree", "statuses", "followers", "category", "screen_name"):
                assert key in attrs, (key, attrs)
        for node, deg in g.in_degree():
            assert g.nodes[node]["in_degree"] == deg

        with open(os.path.join(out, "network_edges.csv"), newline="") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["source", "target"]
        assert {tuple(r) for r in rows[1:]} == set(g.edges())

        with open(os.path.join(out, "metrics.csv"), newline="") as f:
            metrics = {row["account_id"]: row for row in csv.DictReader(f)}

        bc = nx.betweenness_centrality(g, normalized=False)
        pr = nx.pagerank(g, alpha=0.85, tol=1e-13, max_iter=1000)
        cc = nx.clustering(nx.Graph(g.to_undirected()))
        worst = {"betweenness": 0.0, "pagerank": 0.0, "clustering": 0.0}
        for node in g.nodes:
            row = metrics[node]
            worst["betweenness"] = max(worst["betweenness"],
                                       abs(float(row["betweenness"]) - bc[node]) / max(1.0, bc[node]))
            worst["pagerank"] = max(worst["pagerank"], abs(float(row["pagerank"]) - pr[node]))
            worst["clustering"] = max(worst["clustering"], abs(float(row["clustering"]) - cc[node]))
        print("max deviation from networkx:", worst)
        assert worst["betweenness"] < 1e-9
        assert worst["pagerank"] < 1e-8
        assert worst["clustering"] < 1e-12
    print("graphml export and metrics agree with networkx")


if __name__ == "__main__":
    main()
