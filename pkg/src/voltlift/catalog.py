"""Small built-in embeddings with surface types forced by classification."""

from __future__ import annotations

from .surface import EmbeddedGraph


def sphere_theta() -> EmbeddedGraph:
    """Two vertices joined by three parallel edges, embedded in the sphere."""
    edges = [(0, 1), (0, 1), (0, 1)]
    rotation = [[0, 2, 4], [5, 3, 1]]
    return EmbeddedGraph(2, edges, rotation, [1, 1, 1])


def projective_loop() -> EmbeddedGraph:
    """One twisted loop: the projective plane."""
    return EmbeddedGraph(1, [(0, 0)], [[0, 1]], [-1])


def torus_bouquet() -> EmbeddedGraph:
    """Bouquet of two loops with interleaved rotation: the torus."""
    edges = [(0, 0), (0, 0)]
    rotation = [[0, 2, 1, 3]]
    return EmbeddedGraph(1, edges, rotation, [1, 1])


def klein_bouquet() -> EmbeddedGraph:
    """Bouquet of two loops, one twisted: the Klein bottle."""
    edges = [(0, 0), (0, 0)]
    rotation = [[0, 2, 1, 3]]
    return EmbeddedGraph(1, edges, rotation, [1, -1])


def sphere_loop() -> EmbeddedGraph:
    """One untwisted loop in the sphere."""
    return EmbeddedGraph(1, [(0, 0)], [[0, 1]], [1])
