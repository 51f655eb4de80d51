"""
shamos_hoey.py
─────────────────────────────────────────────────────────────────────────────
Farthest-point Voronoi diagram of a planar point set under a strictly convex
norm, built naively, and the Shamos–Hoey search over it:

    1. among the edges, take the defining pair at maximum distance; if its
       two-point disk encloses P, that is the answer;
    2. otherwise the answer is the circumdisk at the diagram vertex of
       minimum distance to its defining points.

Only extreme points of co(P) own a farthest region, so the sites are the hull
vertices, in counterclockwise order. The diagram is a tree whose vertices are
the circumcenters of site triples farthest from every site; those triples
triangulate the hull polygon. Construction walks that triangulation:

    walk      start from the hull side (0, h-1). For a side (a, b) whose
              polygon chain holds the sites a < m < b, the apex is the m whose
              circumdisk with a and b encloses every site. Candidates are
              ranked by a scan of bisec(a, b) refined by bisection on the
              radius, then verified with exact circumcenters, falling back to
              every candidate of the chain. Recurse on (a, m) and (m, b).
    edges     every vertex joins the regions of its defining sites in cyclic
              order, so each cyclically adjacent defining pair owns an edge
              ending there. Edges with a single endpoint are unbounded.
    checks    each edge is checked at a point of its bisector piece (between
              its endpoints, or 2x the vertex radius, 8 and 64 diameters out
              for rays) where the pair must be farthest.

``exhaustive=True`` replaces the walk with every site triple, for cross-checks.

Dependencies: numpy
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from geometry.bisector import BisectorSide, bisector_points
from geometry.norm_core import Norm, Vector
from geometry.primitives import (Disk, Side, as_point_set, convex_hull,
                                 distances, half_plane_side, support_points,
                                 two_point_disk)
from geometry.triangle import circumcenters
from solvers.report import Algorithm, Iteration, SolveReport, StepKind
from utils.config import SETTINGS
from utils.errors import EmptyInput, InternalInconsistency, SizeLimit
from utils.logging import logger

GRID = 128
VERTEX_TOL = 1e-8
CAP_FACTOR = 64.0
FAR_CHECKS = (8.0, 64.0)
ROOT_STEPS = 32
APEX_BATCH = 2
CLEARANCE = 1e-6
SIDE_TOL = 1e-9


@dataclass(frozen=True)
class VoronoiVertex:
    location: Vector
    defining: Tuple[int, ...]
    distance: float


@dataclass(frozen=True)
class VoronoiEdge:
    """Piece of bisec(sites[i], sites[j]) where both are farthest; 0 or 1 endpoints means unbounded."""

    pair: Tuple[int, int]
    endpoints: Tuple[int, ...]
    length: float

    @property
    def bounded(self) -> bool:
        return len(self.endpoints) == 2


@dataclass
class FarthestVoronoiDiagram:
    sites: List[Vector]
    vertices: List[VoronoiVertex] = field(default_factory=list)
    edges: List[VoronoiEdge] = field(default_factory=list)

    @property
    def edge_pairs(self) -> Set[Tuple[int, int]]:
        return {e.pair for e in self.edges}

    def farthest_sites(self, n: Norm, y: Vector, tol: float = VERTEX_TOL) -> List[int]:
        """Indices of the sites at maximum distance from y."""
        d = distances(n, _site_array(self.sites), y)
        top = d.max()
        return [int(k) for k in np.flatnonzero(d >= top - tol * max(1.0, top))]


def _site_array(sites: Sequence[Vector]) -> np.ndarray:
    return np.array([[s.x, s.y] for s in sites], dtype=float).reshape(-1, 2)


def _margin(n: Norm, sites: np.ndarray, pts: np.ndarray, i: int, j: int) -> np.ndarray:
    """Per row: how far the pair (i, j) is ahead of the best other site."""
    if len(sites) == 2:
        return np.full(len(pts), np.inf)
    d = np.asarray(n.value(pts[:, 0, None] - sites[None, :, 0],
                           pts[:, 1, None] - sites[None, :, 1]), dtype=float).reshape(len(pts), -1)
    pair = 0.5 * (d[:, i] + d[:, j])
    d[:, [i, j]] = -np.inf
    return pair - d.max(axis=1)


# ─────────────────────────────────────────────────────────────────────────────
# Vertices
# ─────────────────────────────────────────────────────────────────────────────

def _excess(n: Norm, arr: np.ndarray, x: Vector, triple: Sequence[int]) -> Tuple[float, float, np.ndarray]:
    """(relative amount by which some site beats the triple, circumradius, all distances)."""
    d = distances(n, arr, x)
    r = float(d[list(triple)].max())
    return (float(d.max()) - r) / max(1.0, r), r, d


def _rank_apexes(n: Norm, arr: np.ndarray, a: int, b: int, inner: List[int],
                 cap: float, grid: int) -> List[int]:
    """Candidates of ``inner`` ordered by how nearly their circumdisk with a, b encloses all sites."""
    p, q = Vector(*arr[a]), Vector(*arr[b])
    mu0 = 0.5 * n(q - p)
    mus = mu0 * (cap / mu0) ** np.linspace(0.0, 1.0, grid)
    cand = arr[inner]
    score = np.full(len(inner), np.inf)

    for side in BisectorSide:
        pts = bisector_points(n, p, q, mus, side)
        g = np.asarray(n.value(pts[None, :, 0] - cand[:, None, 0],
                               pts[None, :, 1] - cand[:, None, 1]),
                       dtype=float).reshape(len(inner), -1) - mus[None, :]
        sign = np.sign(g)
        change = sign[:, 1:] != sign[:, :-1]
        rows = np.flatnonzero(change.any(axis=1))
        if rows.size == 0:
            continue
        t = change[rows].argmax(axis=1)
        lo, hi = mus[t].copy(), mus[t + 1].copy()
        s_lo = sign[rows, t]
        targets = cand[rows]
        for _ in range(ROOT_STEPS):
            mid = 0.5 * (lo + hi)
            xy = bisector_points(n, p, q, mid, side)
            g_mid = np.asarray(n.value(xy[:, 0] - targets[:, 0], xy[:, 1] - targets[:, 1]),
                               dtype=float) - mid
            same = np.sign(g_mid) == s_lo
            lo = np.where(same, mid, lo)
            hi = np.where(same, hi, mid)
        mid = 0.5 * (lo + hi)
        xy = bisector_points(n, p, q, mid, side)
        far = np.asarray(n.value(xy[:, 0, None] - arr[None, :, 0],
                                 xy[:, 1, None] - arr[None, :, 1]),
                         dtype=float).reshape(len(rows), -1).max(axis=1)
        score[rows] = np.minimum(score[rows], (far - mid) / np.maximum(1.0, mid))

    order = np.argsort(score, kind="stable")
    return [inner[int(k)] for k in order]


def _apex(n: Norm, sites: Sequence[Vector], arr: np.ndarray, a: int, b: int, inner: List[int],
          cap: float, grid: int, tol: float, workers: int) -> Tuple[int, Vector]:
    ranked = _rank_apexes(n, arr, a, b, inner, cap, grid)
    best: Optional[Tuple[float, int, Vector]] = None
    for batch in (ranked[:APEX_BATCH], ranked[APEX_BATCH:]):
        if not batch:
            continue
        if best is not None:
            logger.debug("Apex over (%d, %d): ranked candidates failed, trying all %d", a, b, len(inner))
        centers = circumcenters(n, [[sites[a], sites[b], sites[m]] for m in batch], workers)
        for m, x in zip(batch, centers):
            if x is None:
                continue
            excess, _, _ = _excess(n, arr, x, (a, b, m))
            if best is None or excess < best[0]:
                best = (excess, m, x)
        if best is not None and best[0] <= tol:
            return best[1], best[2]
    if best is None:
        raise InternalInconsistency(f"No site of the chain between {a} and {b} has a circumcenter with them")
    logger.warning("Apex over (%d, %d) leaves a site %.3g outside its circumdisk", a, b, best[0])
    return best[1], best[2]


def _walk_vertices(n: Norm, sites: Sequence[Vector], arr: np.ndarray, cap: float, grid: int,
                   tol: float, workers: int) -> List[VoronoiVertex]:
    found: List[VoronoiVertex] = []
    stack = [list(range(len(sites)))]
    while stack:
        chain = stack.pop()
        if len(chain) < 3:
            continue
        a, b = chain[0], chain[-1]
        m, x = _apex(n, sites, arr, a, b, chain[1:-1], cap, grid, tol, workers)
        found.append(_vertex_at(arr, x, distances(n, arr, x), tol))
        k = chain.index(m)
        stack.append(chain[k:])
        stack.append(chain[:k + 1])
    return found


def _exhaustive_vertices(n: Norm, sites: Sequence[Vector], arr: np.ndarray, tol: float,
                         workers: int) -> List[VoronoiVertex]:
    triples = list(combinations(range(len(sites)), 3))
    found: List[VoronoiVertex] = []
    for triple, x in zip(triples, circumcenters(n, [[sites[k] for k in t] for t in triples], workers)):
        if x is None:
            continue
        excess, _, d = _excess(n, arr, x, triple)
        if excess <= tol:
            found.append(_vertex_at(arr, x, d, tol))
    return found


def _vertex_at(arr: np.ndarray, x: Vector, d: np.ndarray, tol: float) -> VoronoiVertex:
    top = float(d.max())
    defining = tuple(int(k) for k in np.flatnonzero(d >= top - tol * max(1.0, top)))
    return VoronoiVertex(x, defining, top)


def _merge(found: List[VoronoiVertex], scale: float) -> List[VoronoiVertex]:
    merged: List[VoronoiVertex] = []
    for v in found:
        for m, w in enumerate(merged):
            if set(v.defining) == set(w.defining) or \
                    (v.location - w.location).euclidean() <= CLEARANCE * scale:
                union = tuple(sorted(set(v.defining) | set(w.defining)))
                merged[m] = VoronoiVertex(w.location, union, w.distance)
                break
        else:
            merged.append(v)
    merged.sort(key=lambda v: v.defining)
    return merged


# ─────────────────────────────────────────────────────────────────────────────
# Edges
# ─────────────────────────────────────────────────────────────────────────────

def _vertex_sides(sites: Sequence[Vector], v: VoronoiVertex, i: int, j: int) -> Set[BisectorSide]:
    side = half_plane_side(sites[i], sites[j], v.location, SIDE_TOL)
    if side is Side.LEFT:
        return {BisectorSide.PLUS}
    if side is Side.RIGHT:
        return {BisectorSide.MINUS}
    return {BisectorSide.PLUS, BisectorSide.MINUS}


def _check_radii(sites: Sequence[Vector], i: int, j: int, ends: List[VoronoiVertex], mu0: float,
            diam: float) -> Dict[BisectorSide, List[float]]:
    """Radii per bisector half at which the edge of (i, j) must have a point."""
    if len(ends) == 2:
        common = _vertex_sides(sites, ends[0], i, j) & _vertex_sides(sites, ends[1], i, j)
        if common:
            side = BisectorSide.PLUS if BisectorSide.PLUS in common else BisectorSide.MINUS
            return {side: [0.5 * (ends[0].distance + ends[1].distance)]}
        return {BisectorSide.PLUS: [mu0]}
    far = [f * diam for f in FAR_CHECKS]
    if ends:
        far.append(2.0 * ends[0].distance)
    else:
        far.append(mu0)
    radii = [mu for mu in far if mu >= mu0]
    return {side: radii for side in BisectorSide}


def _confirmed(n: Norm, sites: Sequence[Vector], arr: np.ndarray, i: int, j: int,
               ends: List[VoronoiVertex], mu0: float, diam: float, tol: float) -> bool:
    for side, radii in _check_radii(sites, i, j, ends, mu0, diam).items():
        mus = np.array(radii)
        pts = bisector_points(n, sites[i], sites[j], mus, side)
        if np.any(_margin(n, arr, pts, i, j) >= -tol * np.maximum(1.0, mus)):
            return True
    return False


def _edges(n: Norm, sites: Sequence[Vector], arr: np.ndarray, vertices: List[VoronoiVertex],
           diam: float, tol: float) -> List[VoronoiEdge]:
    h = len(sites)
    incident: Dict[Tuple[int, int], List[int]] = {}
    if h == 2:
        incident[(0, 1)] = []
    for k, v in enumerate(vertices):
        ring = list(v.defining)
        for a, b in zip(ring, ring[1:] + ring[:1]):
            incident.setdefault((min(a, b), max(a, b)), []).append(k)

    edges = []
    for (i, j), listing in sorted(incident.items()):
        listing = sorted(set(listing), key=lambda k: (vertices[k].distance, k))
        if len(listing) > 2:
            logger.debug("Pair %s is listed by %d vertices; keeping the two nearest", (i, j), len(listing))
            listing = listing[:2]
        if len(listing) == 1 and (j - i) % h not in (1, h - 1):
            logger.warning("Unbounded edge %s between sites that are not hull neighbours", (i, j))
        mu0 = 0.5 * n(sites[j] - sites[i])
        if not _confirmed(n, sites, arr, i, j, [vertices[k] for k in listing], mu0, diam, tol):
            logger.warning("Edge %s: no sampled point where the pair is farthest", (i, j))
        edges.append(VoronoiEdge((i, j), tuple(sorted(listing)), 2.0 * mu0))
    return edges


def farthest_voronoi(n: Norm, points, grid: int = GRID, tol: float = VERTEX_TOL,
                     max_sites: Optional[int] = None, workers: int = 1,
                     exhaustive: bool = False) -> FarthestVoronoiDiagram:
    """Farthest-point Voronoi diagram of ``points``.

    Args:
        grid: radius samples per bisector half when ranking apex candidates.
        tol: relative band for "equally farthest".
        max_sites: limit on hull vertices (default NORMDISK_MAX_SITES, 60).
        workers: processes used for the circumcenters.
        exhaustive: try every site triple instead of walking the triangulation.

    Raises:
        EmptyInput: fewer than two distinct points.
        SizeLimit: more hull vertices than ``max_sites``.
    """
    pset = as_point_set(points)
    if len(pset) < 2:
        raise EmptyInput("The farthest-point Voronoi diagram needs at least two distinct points")
    max_sites = SETTINGS["MAX_SITES"] if max_sites is None else max_sites
    sites = convex_hull(pset)
    if len(sites) > max_sites:
        raise SizeLimit(f"{len(sites)} hull vertices exceed the limit of {max_sites}")

    arr = _site_array(sites)
    h = len(sites)
    diam = max(float(distances(n, arr, s).max()) for s in sites)

    if exhaustive:
        found = _exhaustive_vertices(n, sites, arr, tol, workers)
    else:
        found = _walk_vertices(n, sites, arr, CAP_FACTOR * diam, grid, tol, workers)
    vertices = _merge(found, max(1.0, diam))
    edges = _edges(n, sites, arr, vertices, diam, tol)
    logger.debug("Voronoi: %d sites, %d vertices, %d edges", h, len(vertices), len(edges))
    return FarthestVoronoiDiagram(list(sites), vertices, edges)


def solve_sh(n: Norm, points, tol: Optional[float] = None, workers: int = 1,
             grid: int = GRID) -> SolveReport:
    """Minimal enclosing disk by the edge-maximum / vertex-minimum search.

    Raises:
        EmptyInput: no points.
        SizeLimit: too many hull vertices for the naive diagram.
        InternalInconsistency: neither branch gave a disk enclosing P.
    """
    pset = as_point_set(points)
    if len(pset) == 0:
        raise EmptyInput("Cannot enclose an empty point set")
    tol = SETTINGS["TOL"] if tol is None else tol
    if len(pset) == 1:
        return SolveReport(Disk(pset[0], 0.0, n), [pset[0]], [], Algorithm.SHAMOS_HOEY)

    diagram = farthest_voronoi(n, pset, grid=grid, workers=workers)
    arr = pset.array
    sites = diagram.sites

    def encloses(disk: Disk) -> bool:
        return bool(distances(n, arr, disk.center).max() <= disk.radius + tol * max(1.0, disk.radius))

    if not diagram.edges:
        raise InternalInconsistency("Farthest-point Voronoi diagram has no edges")
    best = max(diagram.edges, key=lambda e: (e.length, tuple(-k for k in e.pair)))
    p, q = sites[best.pair[0]], sites[best.pair[1]]
    disk = two_point_disk(n, p, q)
    if encloses(disk):
        iterations = [Iteration(StepKind.TWO_POINT, (p, q), disk.radius)]
    else:
        if not diagram.vertices:
            raise InternalInconsistency(
                f"Two-point disk of edge {best.pair} does not enclose P and the diagram has no vertices"
            )
        v = min(diagram.vertices, key=lambda w: (w.distance, w.defining))
        disk = Disk(v.location, v.distance, n)
        if not encloses(disk):
            raise InternalInconsistency(
                f"Vertex {v.defining} at distance {v.distance:.12g} does not enclose P"
            )
        iterations = [Iteration(StepKind.CIRCUMDISK, tuple(sites[k] for k in v.defining), disk.radius)]

    support = support_points(n, pset, disk, max(tol, 1e-9))
    logger.info("shamos_hoey: radius=%.12g from %d sites, %d vertices, %d edges", disk.radius,
                len(sites), len(diagram.vertices), len(diagram.edges))
    return SolveReport(disk, support, iterations, Algorithm.SHAMOS_HOEY, diagram=diagram)
