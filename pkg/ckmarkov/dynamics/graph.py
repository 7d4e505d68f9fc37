from __future__ import annotations

from ckmarkov.surgery.binary import BinaryMatrix


def _reachable(adjacency: list[list[int]], source: int) -> set[int]:
    """Vertices reachable from source; iterative DFS, neighbours in index order."""
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for w in reversed(adjacency[v]):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def successors(a: BinaryMatrix) -> list[list[int]]:
    n = a.size
    return [[j for j in range(n) if a[i, j]] for i in range(n)]


def predecessors(a: BinaryMatrix) -> list[list[int]]:
    n = a.size
    return [[i for i in range(n) if a[i, j]] for j in range(n)]


def is_irreducible(a: BinaryMatrix) -> bool:
    """Every vertex reaches every vertex by a path of positive length."""
    n = a.size
    if n == 1:
        return a[0, 0] == 1
    return len(_reachable(successors(a), 0)) == n and len(_reachable(predecessors(a), 0)) == n


def is_permutation_matrix(a: BinaryMatrix) -> bool:
    n = a.size
    return all(sum(a.row(i)) == 1 for i in range(n)) and all(
        sum(a.column(j)) == 1 for j in range(n)
    )
