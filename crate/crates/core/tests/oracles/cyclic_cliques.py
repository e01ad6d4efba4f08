"""Clique numbers of power graphs of cyclic groups Z_n, by networkx maximal
clique enumeration on the graph built straight from the definition: i ~ j
when one of <i>, <j> contains the other."""
import json
from math import gcd

import networkx as nx


def power_graph_zn(n):
    def gen(x):
        return frozenset((x * k) % n for k in range(n))
    subs = [gen(x) for x in range(n)]
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for i in range(n):
        for j in range(i + 1, n):
            if subs[i] <= subs[j] or subs[j] <= subs[i]:
                g.add_edge(i, j)
    return g


def clique_number(g):
    return max(len(c) for c in nx.find_cliques(g))


if __name__ == "__main__":
    print(json.dumps({n: clique_number(power_graph_zn(n)) for n in range(1, 41)}))
