#!/usr/bin/env python3
"""Convert a Geom-GCN style export into an rgsl dataset directory.

Input: out1_node_feature_label.txt (node_id, comma-separated features,
label; tab separated, one header line) and out1_graph_edges.txt (node_id
pairs, tab separated, one header line). Features may be given either dense
or as a list of active column indices (--sparse-features DIM).

Output: edges.txt, features.csv, labels.txt.
"""

import argparse
import csv
import pathlib
import sys


def read_nodes(path, sparse_dim):
    rows = {}
    with open(path, newline="") as f:
        reader = csv.reader(f, delimiter="\t")
        next(reader)
        for lineno, rec in enumerate(reader, start=2):
            if len(rec) != 3:
                sys.exit(f"{path}:{lineno}: expected 3 tab-separated fields")
            node, feats, label = int(rec[0]), rec[1].split(","), int(rec[2])
            if sparse_dim:
                dense = [0] * sparse_dim
                for j in feats:
                    if j:
                        dense[int(j)] = 1
                feats = dense
            rows[node] = (feats, label)
    ids = sorted(rows)
    if ids != list(range(len(ids))):
        sys.exit(f"{path}: node ids are not 0..n-1")
    return [rows[i] for i in ids]


def read_edges(path):
    edges = set()
    with open(path, newline="") as f:
        reader = csv.reader(f, delimiter="\t")
        next(reader)
        for rec in reader:
            i, j = int(rec[0]), int(rec[1])
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return sorted(edges)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("source", type=pathlib.Path, help="directory with the two out1_* files")
    ap.add_argument("dest", type=pathlib.Path, help="output dataset directory")
    ap.add_argument("--sparse-features", type=int, default=0, metavar="DIM",
                    help="features are active column indices in [0, DIM)")
    args = ap.parse_args()

    nodes = read_nodes(args.source / "out1_node_feature_label.txt", args.sparse_features)
    edges = read_edges(args.source / "out1_graph_edges.txt")
    args.dest.mkdir(parents=True, exist_ok=True)
    with open(args.dest / "edges.txt", "w") as f:
        f.writelines(f"{i}\t{j}\n" for i, j in edges)
    with open(args.dest / "features.csv", "w") as f:
        f.writelines(",".join(map(str, feats)) + "\n" for feats, _ in nodes)
    with open(args.dest / "labels.txt", "w") as f:
        f.writelines(f"{label}\n" for _, label in nodes)
    print(f"{args.dest}: {len(nodes)} nodes, {len(edges)} undirected edges")


if __name__ == "__main__":
    main()
