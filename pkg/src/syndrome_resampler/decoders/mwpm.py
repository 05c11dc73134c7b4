"""Exact minimum-weight perfect matching decoders.

:class:`BlossomDecoder` matches syndrome defects on the complete defect graph with
one virtual boundary copy per defect (zero-weight edges between copies) using the
exact blossom algorithm from networkx. :class:`PyMatchingDecoder` solves the same
problem with PyMatching's sparse blossom and is what batch runs use by default.
"""

import logging

import networkx as nx
import numpy as np
import pymatching
from scipy import sparse

from syndrome_resampler.codes import DetectionGraph
from syndrome_resampler.decoders.base import BaseDecoder, DecodeResult
from syndrome_resampler.models import CodeSpec, MatchingBackend

logger = logging.getLogger(__name__)


class BlossomDecoder(BaseDecoder):
    """MWPM on the detection graph via networkx's exact blossom matching."""

    def __init__(self, graph: DetectionGraph, code: CodeSpec):
        super().__init__(code)
        self.graph = graph

    def _matching_graph(self, defects: np.ndarray) -> nx.Graph:
        k = len(defects)
        dist = self.graph.distances
        boundary = self.graph.boundary
        pairs = nx.Graph()
        for i in range(k):
            for j in range(i + 1, k):
                pairs.add_edge(i, j, cost=int(dist[defects[i], defects[j]]))
                pairs.add_edge(k + i, k + j, cost=0)
            pairs.add_edge(i, k + i, cost=int(dist[defects[i], boundary]))
        # Blossom maximises, so flip costs against a common offset.
        offset = 1 + max(c for _, _, c in pairs.edges(data="cost"))
        for _, _, data in pairs.edges(data=True):
            data["weight"] = offset - data["cost"]
        return pairs

    def decode(self, syndrome: np.ndarray) -> DecodeResult:
        syndrome = self.check_syndromes(syndrome)[0]
        defects = np.flatnonzero(syndrome)
        correction = np.zeros(self.code.n, dtype=np.uint8)
        if len(defects) == 0:
            return self.result_from_correction(correction)

        k = len(defects)
        matching = nx.max_weight_matching(
            self._matching_graph(defects), maxcardinality=True, weight="weight"
        )
        for a, b in matching:
            a, b = min(a, b), max(a, b)
            if a >= k:
                continue
            end = self.graph.boundary if b >= k else int(defects[b])
            for qubit in self.graph.path_qubits(int(defects[a]), end):
                correction[qubit] ^= 1
        return self.result_from_correction(correction)


class PyMatchingDecoder(BaseDecoder):
    """MWPM through PyMatching on the Z-check matrix (unit edge weights)."""

    def __init__(self, code: CodeSpec):
        super().__init__(code)
        self._matching = pymatching.Matching.from_check_matrix(
            sparse.csc_matrix(code.z_check_matrix())
        )

    def decode(self, syndrome: np.ndarray) -> DecodeResult:
        syndrome = self.check_syndromes(syndrome)[0]
        return self.result_from_correction(self._matching.decode(syndrome))

    def decode_batch(self, syndromes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        syndromes = self.check_syndromes(syndromes)
        if len(syndromes) == 0:
            return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.uint8)
        corrections = np.asarray(self._matching.decode_batch(syndromes), dtype=np.int64)
        weights = corrections.sum(axis=1)
        classes = ((corrections @ self._z_logical.astype(np.int64)) % 2).astype(np.uint8)
        return weights, classes


def matching_decoder(code: CodeSpec, backend: MatchingBackend) -> BaseDecoder:
    """Build the requested MWPM backend for ``code``."""
    if backend is MatchingBackend.BLOSSOM:
        return BlossomDecoder(DetectionGraph(code), code)
    return PyMatchingDecoder(code)


def decode_mwpm(graph: DetectionGraph, code: CodeSpec, s: np.ndarray) -> DecodeResult:
    """Minimum-weight correction for syndrome ``s`` by exact blossom matching."""
    return BlossomDecoder(graph, code).decode(s)
