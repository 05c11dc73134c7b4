"""Detection graph used by the matching decoders.

One node per Z check plus a single merged boundary node; one unit-weight edge per
data qubit. Distances come from breadth-first search and paths are kept so a
matching can be turned back into a qubit correction.
"""

import logging

import networkx as nx
import numpy as np

from syndrome_resampler.codes.base import CodeError
from syndrome_resampler.models import CodeSpec

logger = logging.getLogger(__name__)


class DetectionGraph:
    """Immutable matching graph of a code; safe to share between workers."""

    def __init__(self, code: CodeSpec):
        self.code_id = code.code_id
        self.num_checks = code.num_checks
        self.boundary = code.num_checks
        self.graph = nx.MultiGraph()
        self.graph.add_nodes_from(range(self.num_checks + 1))
        self._edge_qubit: dict[tuple[int, int], int] = {}

        for qubit, checks in enumerate(code.checks_of_qubit()):
            if len(checks) == 2:
                u, v = checks
            elif len(checks) == 1:
                u, v = checks[0], self.boundary
            else:
                raise CodeError(
                    f"qubit {qubit} belongs to {len(checks)} Z checks; expected 1 or 2"
                )
            self.graph.add_edge(u, v, key=qubit, weight=1)
            for pair in ((u, v), (v, u)):
                self._edge_qubit.setdefault(pair, qubit)

        size = self.num_checks + 1
        self.distances = np.full((size, size), -1, dtype=np.int64)
        self._parent = np.full((size, size), -1, dtype=np.int64)
        for source in range(size):
            preds, lengths = nx.predecessor(self.graph, source, return_seen=True)
            for node, length in lengths.items():
                self.distances[source, node] = length
                if preds[node]:
                    self._parent[source, node] = min(preds[node])
        if (self.distances < 0).any():
            raise CodeError(f"detection graph of {self.code_id} is disconnected")
        self.distances.setflags(write=False)
        logger.debug("built detection graph for %s with %d edges", self.code_id, self.num_edges)

    @property
    def num_edges(self) -> int:
        return self.graph.number_of_edges()

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        """(u, v, qubit) for every edge."""
        return [(u, v, q) for u, v, q in self.graph.edges(keys=True)]

    def distance(self, u: int, v: int) -> int:
        return int(self.distances[u, v])

    def path_qubits(self, u: int, v: int) -> list[int]:
        """Qubits along one shortest path from ``u`` to ``v``."""
        qubits = []
        node = v
        while node != u:
            parent = int(self._parent[u, node])
            qubits.append(self._edge_qubit[(parent, node)])
            node = parent
        return qubits


def detection_graph(code: CodeSpec) -> DetectionGraph:
    """Build the detection graph of ``code``."""
    return DetectionGraph(code)
