"""Maximum bipartite matching (Hopcroft-Karp)."""

from __future__ import annotations

from collections import deque
from typing import Dict, Hashable, List

INF = float("inf")


class HopcroftKarp:
    """Hopcroft-Karp on a bipartite graph given as ``left -> [right, ...]``.

    Left and right vertices live in separate namespaces, so the same label
    may appear on both sides (as in the split graph of a relation).
    """

    def __init__(self, graph: Dict[Hashable, List[Hashable]]):
        self.graph = graph
        self.pair_left: Dict[Hashable, Hashable] = {}
        self.pair_right: Dict[Hashable, Hashable] = {}
        self._dist: Dict[Hashable, float] = {}

    def _bfs(self) -> bool:
        queue = deque()
        for u in self.graph:
            if u in self.pair_left:
                self._dist[u] = INF
            else:
                self._dist[u] = 0
                queue.append(u)
        found = False
        limit = INF
        while queue:
            u = queue.popleft()
            if self._dist[u] >= limit:
                continue
            for v in self.graph[u]:
                w = self.pair_right.get(v)
                if w is None:
                    found = True
                    limit = self._dist[u] + 1
                elif self._dist[w] == INF:
                    self._dist[w] = self._dist[u] + 1
                    queue.append(w)
        return found

    def _augment(self, root) -> bool:
        # iterative layered DFS; stack holds (left vertex, edge cursor)
        stack = [(root, 0)]
        path = []
        while stack:
            u, i = stack[-1]
            edges = self.graph[u]
            if i == len(edges):
                self._dist[u] = INF
                stack.pop()
                if path:
                    path.pop()
                continue
            stack[-1] = (u, i + 1)
            v = edges[i]
            w = self.pair_right.get(v)
            if w is None:
                path.append(v)
                lefts = [s[0] for s in stack]
                for left, right in zip(lefts, path):
                    self.pair_left[left] = right
                    self.pair_right[right] = left
                return True
            if self._dist[w] == self._dist[u] + 1:
                path.append(v)
                stack.append((w, 0))
        return False

    def maximum_matching(self) -> Dict[Hashable, Hashable]:
        self.pair_left.clear()
        self.pair_right.clear()
        # greedy start cuts the number of phases on dense graphs
        for u, edges in self.graph.items():
            for v in edges:
                if v not in self.pair_right:
                    self.pair_left[u] = v
                    self.pair_right[v] = u
                    break
        while self._bfs():
            for u in self.graph:
                if u not in self.pair_left:
                    self._augment(u)
        return dict(self.pair_left)

    def maximum_matching_size(self) -> int:
        return len(self.maximum_matching())
