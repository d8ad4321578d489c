"""Run the full identity ledger on one graph and sweep a small corpus.

Run:  python3 demos/04_identity_checks.py
"""

from ctfpolys import build_graph, verify_corpus, verify_graph

g = build_graph(3, [(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)])
report = verify_graph(g)
print(report.to_text())
print("\nall identities hold:", report.all_passed)

print("\nsweeping every multigraph with at most 3 edges (loops included)...")
total = failures = 0
for graph, rep in verify_corpus(3, include_loops=True):
    total += 1
    if not rep.all_passed:
        failures += 1
        print("unexpected failure on", graph.edges)
print(f"{total} graphs checked, {failures} failures")
