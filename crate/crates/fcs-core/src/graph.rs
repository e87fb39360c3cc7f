//! Plain undirected graphs over dense integer vertex ids, plus the handful of
//! whole-graph queries everything else is built on: BFS all-pairs distances,
//! connectivity, degree counts, girth.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// Unordered pair of distinct vertices, stored with `u < v` so that equal
/// edges compare equal and edge lists have one canonical order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Panics on a loop; endpoint order is irrelevant.
    pub fn new(a: VertexId, b: VertexId) -> Self {
        assert!(a != b, "loop edge at vertex {a}");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn incident_to(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GraphError {
    #[error("endpoint {vertex} out of range for graph on {n} vertices")]
    EndpointOutOfRange { vertex: VertexId, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(VertexId),
}

/// Simple undirected graph. Adjacency lists are sorted, the edge list is
/// sorted and duplicate-free; both are fixed at construction.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` from an edge list. Duplicate edges
    /// collapse to one; loops and out-of-range endpoints are errors.
    pub fn build(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex: x, n });
                }
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { adj, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        0..self.adj.len()
    }

    /// Canonically ordered edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a != b && self.adj[a].binary_search(&b).is_ok()
    }

    /// Single-source BFS distances; `UNREACHABLE` where no path exists.
    pub fn bfs_from(&self, src: VertexId) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == UNREACHABLE {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

/// Distance value meaning "no path".
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs shortest-path distances, row-major.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: VertexId) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn all_finite(&self) -> bool {
        self.d.iter().all(|&x| x != UNREACHABLE)
    }
}

/// BFS from every vertex. For disconnected graphs the unreachable entries are
/// `UNREACHABLE`; callers that require connectivity check separately.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut d = Vec::with_capacity(n * n);
    for src in 0..n {
        d.extend_from_slice(&g.bfs_from(src));
    }
    DistanceMatrix { n, d }
}

/// Distance from a vertex to an edge: the smaller of the distances to the two
/// endpoints. Saturates at `UNREACHABLE` when neither endpoint is reachable.
pub fn vertex_edge_distance(dist: &DistanceMatrix, x: VertexId, e: Edge) -> u32 {
    dist.get(x, e.u()).min(dist.get(x, e.v()))
}

pub fn is_connected(g: &Graph) -> bool {
    match g.vertex_count() {
        0 => true,
        _ => g.bfs_from(0).iter().all(|&x| x != UNREACHABLE),
    }
}

/// Map from degree to the number of vertices having it.
pub fn degree_profile(g: &Graph) -> BTreeMap<usize, usize> {
    let mut profile = BTreeMap::new();
    for v in g.vertices() {
        *profile.entry(g.degree(v)).or_insert(0) += 1;
    }
    profile
}

/// Length of a shortest cycle, `None` for forests.
///
/// For each root, BFS assigns levels and parents; every non-tree edge `{x, y}`
/// closes a cycle through the root of length at most `level(x) + level(y) + 1`,
/// and scanning that bound over all roots attains the girth exactly (for a
/// shortest cycle C and any vertex r on it, the BFS from r gives true cycle
/// levels along C, so some non-tree edge of C realizes |C|).
pub fn girth(g: &Graph) -> Option<u32> {
    let n = g.vertex_count();
    let mut best: Option<u32> = None;
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(UNREACHABLE);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if dist[y] == UNREACHABLE {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    // Non-tree edge (seen once from each side; both give the
                    // same bound).
                    let len = dist[x] + dist[y] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}
