//! Construction of the fused hollow-coronoid / starphene graphs FCS_{a,b,c},
//! their vertex labelling, a structural audit, and the small baseline families
//! (paths, cycles, complete graphs).
//!
//! The graph consists of eighteen vertex paths: six on the outer boundary
//! (p1, q1, r1 on one half, p2, q2, r2 on the other), six interior paths
//! (s1, t1, u1, s2, t2, u2) running parallel to them, and six short core
//! paths (p3, q3, r3, s3, t3, u3) forming the central starphene. Rung edges
//! tie each outer path to its interior partner and the core paths to each
//! other, three hub edges join the core arms, six connector edges attach the
//! core arm tips to the interior ring, and twelve closer edges join the path
//! ends into the boundary cycles. See CONSTRUCTION_NOTES.md for how the
//! published index conventions were pinned down.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{degree_profile, is_connected, Edge, Graph, VertexId};

/// The eighteen vertex path families, in enumeration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    P1,
    P2,
    Q1,
    Q2,
    R1,
    R2,
    S1,
    S2,
    T1,
    T2,
    U1,
    U2,
    P3,
    Q3,
    R3,
    S3,
    T3,
    U3,
}

use Family::*;

impl Family {
    pub const ALL: [Family; 18] = [
        P1, P2, Q1, Q2, R1, R2, S1, S2, T1, T2, U1, U2, P3, Q3, R3, S3, T3, U3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            P1 => "p1",
            P2 => "p2",
            Q1 => "q1",
            Q2 => "q2",
            R1 => "r1",
            R2 => "r2",
            S1 => "s1",
            S2 => "s2",
            T1 => "t1",
            T2 => "t2",
            U1 => "u1",
            U2 => "u2",
            P3 => "p3",
            Q3 => "q3",
            R3 => "r3",
            S3 => "s3",
            T3 => "t3",
            U3 => "u3",
        }
    }

    /// Number of vertices on this path for the given parameters. The p/s
    /// families are sized by `a`, q/t by `c`, r/u by `b`.
    pub fn range(self, p: FcsParams) -> u32 {
        match self {
            P1 | P2 => 2 * p.a - 1,
            Q1 | Q2 => 2 * p.c - 1,
            R1 | R2 => 2 * p.b - 1,
            S1 | S2 => 2 * p.a - 3,
            T1 | T2 => 2 * p.c - 3,
            U1 | U2 => 2 * p.b - 3,
            P3 | S3 => 2 * p.a - 5,
            Q3 | T3 => 2 * p.c - 5,
            R3 | U3 => 2 * p.b - 5,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| LabelParseError::UnknownFamily(s.to_string()))
    }
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ParamError {
    #[error("parameters must be ≥ 4, got a={a}, b={b}, c={c}")]
    BelowMinimum { a: u32, b: u32, c: u32 },
    #[error("{kind} graph needs n ≥ {min}, got {n}")]
    BaselineTooSmall {
        kind: &'static str,
        min: u32,
        n: u32,
    },
}

/// Size parameters of FCS_{a,b,c}. All three must be at least 4.
///
/// The derived indices i = 2a−1, j = 2c−1, k = 2b−1 are the lengths of the
/// outer p, q, r paths and are recomputed on demand.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FcsParams {
    a: u32,
    b: u32,
    c: u32,
}

impl FcsParams {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self, ParamError> {
        if a < 4 || b < 4 || c < 4 {
            return Err(ParamError::BelowMinimum { a, b, c });
        }
        Ok(FcsParams { a, b, c })
    }

    pub fn a(self) -> u32 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn c(self) -> u32 {
        self.c
    }

    pub fn i(self) -> u32 {
        2 * self.a - 1
    }

    pub fn j(self) -> u32 {
        2 * self.c - 1
    }

    pub fn k(self) -> u32 {
        2 * self.b - 1
    }

    pub fn vertex_count_formula(self) -> usize {
        6 * (2 * self.a + 2 * self.b + 2 * self.c - 9) as usize
    }

    pub fn edge_count_formula(self) -> usize {
        3 * (5 * self.a + 5 * self.b + 5 * self.c - 21) as usize
    }
}

impl fmt::Display for FcsParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={} c={}", self.a, self.b, self.c)
    }
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum LabelParseError {
    #[error("unknown family token {0:?}")]
    UnknownFamily(String),
    #[error("label {0:?} is not of the form <family>:<d>")]
    BadShape(String),
    #[error("index in {0:?} must be a positive integer")]
    BadIndex(String),
}

/// A vertex name `<family>:<d>`, e.g. `p1:3`. Whether `d` lies inside the
/// family's range depends on (a, b, c), so parsing checks syntax only and
/// range checking happens against a concrete graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexLabel {
    pub family: Family,
    pub d: u32,
}

impl VertexLabel {
    pub fn new(family: Family, d: u32) -> Self {
        assert!(d >= 1, "vertex index starts at 1");
        VertexLabel { family, d }
    }

    pub fn in_range(self, p: FcsParams) -> bool {
        1 <= self.d && self.d <= self.family.range(p)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.d)
    }
}

impl FromStr for VertexLabel {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (fam, idx) = s
            .split_once(':')
            .ok_or_else(|| LabelParseError::BadShape(s.to_string()))?;
        let family = fam.parse::<Family>()?;
        let d = idx
            .parse::<u32>()
            .ok()
            .filter(|&d| d >= 1)
            .ok_or_else(|| LabelParseError::BadIndex(s.to_string()))?;
        Ok(VertexLabel { family, d })
    }
}

/// Syntax-only parse of `<family>:<d>`.
pub fn parse_label(text: &str) -> Result<VertexLabel, LabelParseError> {
    text.parse()
}

pub fn format_label(label: VertexLabel) -> String {
    label.to_string()
}

/// Vertex name in any generated graph: structured for FCS, a plain 1-based
/// position for the baseline families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    Fcs(VertexLabel),
    Seq(u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Fcs(v) => v.fmt(f),
            Label::Seq(i) => i.fmt(f),
        }
    }
}

/// The nine rung ladders: outer-to-interior (PS1, QT1, RU1 and the mirrored
/// PS2, QT2, RU2) and core-to-core (PS3, QT3, RU3).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RungFamily {
    PS1,
    QT1,
    RU1,
    PS2,
    QT2,
    RU2,
    PS3,
    QT3,
    RU3,
}

impl RungFamily {
    pub const ALL: [RungFamily; 9] = [
        RungFamily::PS1,
        RungFamily::QT1,
        RungFamily::RU1,
        RungFamily::PS2,
        RungFamily::QT2,
        RungFamily::RU2,
        RungFamily::PS3,
        RungFamily::QT3,
        RungFamily::RU3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RungFamily::PS1 => "p1s1",
            RungFamily::QT1 => "q1t1",
            RungFamily::RU1 => "r1u1",
            RungFamily::PS2 => "p2s2",
            RungFamily::QT2 => "q2t2",
            RungFamily::RU2 => "r2u2",
            RungFamily::PS3 => "p3s3",
            RungFamily::QT3 => "q3t3",
            RungFamily::RU3 => "r3u3",
        }
    }

    /// Number of rungs in this ladder.
    pub fn range(self, p: FcsParams) -> u32 {
        match self {
            RungFamily::PS1 | RungFamily::PS2 => p.a - 1,
            RungFamily::QT1 | RungFamily::QT2 => p.c - 1,
            RungFamily::RU1 | RungFamily::RU2 => p.b - 1,
            RungFamily::PS3 => p.a - 2,
            RungFamily::QT3 => p.c - 2,
            RungFamily::RU3 => p.b - 2,
        }
    }
}

impl fmt::Display for RungFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Structural role of one FCS edge. Every edge gets exactly one class at
/// build time, so the classes partition the edge set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EdgeClass {
    /// Consecutive vertices d, d+1 on one family path.
    Path { family: Family, d: u32 },
    /// The d-th rung of a ladder.
    Rung { rung: RungFamily, d: u32 },
    /// One of the twelve edges closing the outer and inner boundary cycles,
    /// numbered 1..=12 in canonical order.
    Closer { index: u8 },
    /// The six core-tip attachments (1..=6) and three hub edges (7..=9).
    Connector { index: u8 },
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeClass::Path { family, d } => write!(f, "path {family} d={d}"),
            EdgeClass::Rung { rung, d } => write!(f, "rung {rung} d={d}"),
            EdgeClass::Closer { index } => write!(f, "closer #{index}"),
            EdgeClass::Connector { index } => write!(f, "connector #{index}"),
        }
    }
}

struct FcsData {
    params: FcsParams,
    classes: BTreeMap<Edge, EdgeClass>,
}

/// A generated graph together with its vertex labelling and, for FCS graphs,
/// the parameters and per-edge structural classes.
pub struct LabeledGraph {
    graph: Graph,
    labels: Vec<Label>,
    id_of: BTreeMap<Label, VertexId>,
    fcs: Option<FcsData>,
}

impl LabeledGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn label_of(&self, v: VertexId) -> Label {
        self.labels[v]
    }

    pub fn id_of(&self, label: Label) -> Option<VertexId> {
        self.id_of.get(&label).copied()
    }

    pub fn fcs_id(&self, label: VertexLabel) -> Option<VertexId> {
        self.id_of(Label::Fcs(label))
    }

    pub fn params(&self) -> Option<FcsParams> {
        self.fcs.as_ref().map(|f| f.params)
    }

    pub fn edge_class(&self, e: Edge) -> Option<EdgeClass> {
        self.fcs.as_ref().and_then(|f| f.classes.get(&e).copied())
    }

    /// Reverse lookup from class to the (unique) edge carrying it.
    pub fn edge_with_class(&self, class: EdgeClass) -> Option<Edge> {
        self.fcs
            .as_ref()
            .and_then(|f| f.classes.iter().find(|&(_, &c)| c == class).map(|(&e, _)| e))
    }

    pub fn endpoint_labels(&self, e: Edge) -> (Label, Label) {
        (self.labels[e.u()], self.labels[e.v()])
    }

    fn from_parts(graph: Graph, labels: Vec<Label>, fcs: Option<FcsData>) -> Self {
        let id_of = labels
            .iter()
            .enumerate()
            .map(|(v, &l)| (l, v))
            .collect::<BTreeMap<_, _>>();
        assert_eq!(id_of.len(), labels.len(), "labels must be distinct");
        LabeledGraph {
            graph,
            labels,
            id_of,
            fcs,
        }
    }
}

struct FcsBuilder {
    ids: BTreeMap<VertexLabel, VertexId>,
    pairs: Vec<(VertexId, VertexId)>,
    classes: BTreeMap<Edge, EdgeClass>,
}

impl FcsBuilder {
    fn id(&self, family: Family, d: u32) -> VertexId {
        self.ids[&VertexLabel::new(family, d)]
    }

    fn add(&mut self, (f1, d1): (Family, u32), (f2, d2): (Family, u32), class: EdgeClass) {
        let e = Edge::new(self.id(f1, d1), self.id(f2, d2));
        let prev = self.classes.insert(e, class);
        debug_assert!(prev.is_none(), "edge {f1}:{d1} -- {f2}:{d2} added twice");
        self.pairs.push(e.endpoints());
    }
}

/// Builds FCS_{a,b,c}. Vertices are enumerated family by family in the order
/// of `Family::ALL`, ascending d, so ids are stable across runs.
pub fn build_fcs(p: FcsParams) -> LabeledGraph {
    let mut labels = Vec::with_capacity(p.vertex_count_formula());
    for family in Family::ALL {
        for d in 1..=family.range(p) {
            labels.push(Label::Fcs(VertexLabel::new(family, d)));
        }
    }
    let ids = labels
        .iter()
        .enumerate()
        .map(|(v, &l)| match l {
            Label::Fcs(vl) => (vl, v),
            Label::Seq(_) => unreachable!(),
        })
        .collect();
    let mut b = FcsBuilder {
        ids,
        pairs: Vec::with_capacity(p.edge_count_formula()),
        classes: BTreeMap::new(),
    };

    for family in Family::ALL {
        for d in 1..family.range(p) {
            b.add((family, d), (family, d + 1), EdgeClass::Path { family, d });
        }
    }

    // Ladder rungs: even outer vertices attach to odd interior vertices, so
    // each rung pair of consecutive rungs spans one hexagon of the ladder.
    let rung = |rung, d| EdgeClass::Rung { rung, d };
    for d in 1..p.a() {
        b.add((P1, 2 * d), (S1, 2 * d - 1), rung(RungFamily::PS1, d));
        b.add((P2, 2 * d), (S2, 2 * d - 1), rung(RungFamily::PS2, d));
    }
    for d in 1..p.c() {
        b.add((Q1, 2 * d), (T1, 2 * d - 1), rung(RungFamily::QT1, d));
        b.add((Q2, 2 * d), (T2, 2 * d - 1), rung(RungFamily::QT2, d));
    }
    for d in 1..p.b() {
        b.add((R1, 2 * d), (U1, 2 * d - 1), rung(RungFamily::RU1, d));
        b.add((R2, 2 * d), (U2, 2 * d - 1), rung(RungFamily::RU2, d));
    }
    // Core ladders pair odd with odd.
    for d in 1..p.a() - 1 {
        b.add((P3, 2 * d - 1), (S3, 2 * d - 1), rung(RungFamily::PS3, d));
    }
    for d in 1..p.c() - 1 {
        b.add((Q3, 2 * d - 1), (T3, 2 * d - 1), rung(RungFamily::QT3, d));
    }
    for d in 1..p.b() - 1 {
        b.add((R3, 2 * d - 1), (U3, 2 * d - 1), rung(RungFamily::RU3, d));
    }

    // Core arm tips reach the interior ring (connectors 1..=6); the arm roots
    // meet pairwise at the hub (7..=9).
    let (a, bb, c) = (p.a(), p.b(), p.c());
    let conn = |index| EdgeClass::Connector { index };
    b.add((P3, 2 * a - 5), (T2, 2 * c - 4), conn(1));
    b.add((S3, 2 * a - 5), (U2, 2), conn(2));
    b.add((T3, 2 * c - 5), (S2, 2 * a - 4), conn(3));
    b.add((Q3, 2 * c - 5), (U1, 2 * bb - 4), conn(4));
    b.add((U3, 2 * bb - 5), (T1, 2), conn(5));
    b.add((R3, 2 * bb - 5), (S1, 2 * a - 4), conn(6));
    b.add((P3, 1), (R3, 1), conn(7));
    b.add((Q3, 1), (U3, 1), conn(8));
    b.add((S3, 1), (T3, 1), conn(9));

    // Cycle closers: outer boundary hexagon corners (odd indices) and the
    // matching inner ring corners (even indices).
    let (i, j, k) = (p.i(), p.j(), p.k());
    let closer = |index| EdgeClass::Closer { index };
    b.add((P1, i), (Q1, 1), closer(1));
    b.add((S1, i - 2), (T1, 1), closer(2));
    b.add((Q1, j), (R1, 1), closer(3));
    b.add((T1, j - 2), (U1, 1), closer(4));
    b.add((R1, k), (P2, i), closer(5));
    b.add((U1, k - 2), (S2, i - 2), closer(6));
    b.add((P2, 1), (R2, k), closer(7));
    b.add((S2, 1), (U2, k - 2), closer(8));
    b.add((R2, 1), (Q2, j), closer(9));
    b.add((U2, 1), (T2, j - 2), closer(10));
    b.add((Q2, 1), (P1, 1), closer(11));
    b.add((T2, 1), (S1, 1), closer(12));

    let graph = Graph::build(labels.len(), &b.pairs).expect("construction is simple");
    assert_eq!(graph.edge_count(), b.pairs.len(), "construction repeated an edge");
    LabeledGraph::from_parts(
        graph,
        labels,
        Some(FcsData {
            params: p,
            classes: b.classes,
        }),
    )
}

/// Counts read straight off a graph; `euler_face_count` is E − V + 2, valid
/// for connected planar graphs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StructuralAudit {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degree2_count: usize,
    pub degree3_count: usize,
    pub euler_face_count: usize,
    pub connected: bool,
}

impl StructuralAudit {
    /// The counts FCS_{a,b,c} must have: 6(2a+2b+2c−9) vertices,
    /// 3(5a+5b+5c−21) edges, 6(a+b+c−6) vertices of degree two,
    /// 6(a+b+c−3) of degree three, and 3(a+b+c)−7 faces
    /// (3a+3b+3c−11 hexagons, two big holes, one central hole, outer face).
    pub fn expected(p: FcsParams) -> StructuralAudit {
        let s = (p.a() + p.b() + p.c()) as usize;
        StructuralAudit {
            vertex_count: p.vertex_count_formula(),
            edge_count: p.edge_count_formula(),
            degree2_count: 6 * (s - 6),
            degree3_count: 6 * (s - 3),
            euler_face_count: 3 * s - 7,
            connected: true,
        }
    }
}

/// Counts the given graph's structure. Face count is meaningful only when the
/// graph is connected (and planar); FCS graphs always are.
pub fn audit(lg: &LabeledGraph) -> StructuralAudit {
    let g = lg.graph();
    let profile = degree_profile(g);
    let connected = is_connected(g);
    StructuralAudit {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        degree2_count: profile.get(&2).copied().unwrap_or(0),
        degree3_count: profile.get(&3).copied().unwrap_or(0),
        euler_face_count: (g.edge_count() + 2).saturating_sub(g.vertex_count()),
        connected,
    }
}

fn baseline(kind: &'static str, min: u32, n: u32, pairs: &[(VertexId, VertexId)]) -> Result<LabeledGraph, ParamError> {
    if n < min {
        return Err(ParamError::BaselineTooSmall { kind, min, n });
    }
    let graph = Graph::build(n as usize, pairs).expect("baseline edges in range");
    let labels = (1..=n).map(Label::Seq).collect();
    Ok(LabeledGraph::from_parts(graph, labels, None))
}

/// Path on n ≥ 2 vertices, labelled 1..=n along the path.
pub fn build_path(n: u32) -> Result<LabeledGraph, ParamError> {
    let pairs: Vec<_> = (0..n.saturating_sub(1) as usize).map(|v| (v, v + 1)).collect();
    baseline("path", 2, n, &pairs)
}

/// Cycle on n ≥ 3 vertices.
pub fn build_cycle(n: u32) -> Result<LabeledGraph, ParamError> {
    if n < 3 {
        return Err(ParamError::BaselineTooSmall { kind: "cycle", min: 3, n });
    }
    let pairs: Vec<_> = (0..n as usize).map(|v| (v, (v + 1) % n as usize)).collect();
    baseline("cycle", 3, n, &pairs)
}

/// Complete graph on n ≥ 2 vertices.
pub fn build_complete(n: u32) -> Result<LabeledGraph, ParamError> {
    let mut pairs = Vec::new();
    for u in 0..n as usize {
        for v in u + 1..n as usize {
            pairs.push((u, v));
        }
    }
    baseline("complete", 2, n, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::girth;

    fn params(a: u32, b: u32, c: u32) -> FcsParams {
        FcsParams::new(a, b, c).unwrap()
    }

    #[test]
    fn params_below_four_rejected() {
        let err = FcsParams::new(3, 4, 4).unwrap_err();
        assert!(err.to_string().contains("must be ≥ 4"));
    }

    #[test]
    fn counts_match_formulas() {
        for (a, b, c, nv, ne) in [(4, 4, 4, 90, 117), (5, 4, 6, 126, 162), (6, 5, 4, 126, 162)] {
            let lg = build_fcs(params(a, b, c));
            assert_eq!(lg.graph().vertex_count(), nv, "vertices at ({a},{b},{c})");
            assert_eq!(lg.graph().edge_count(), ne, "edges at ({a},{b},{c})");
        }
    }

    #[test]
    fn degree_profile_and_connectivity() {
        let lg = build_fcs(params(4, 4, 4));
        let audit = audit(&lg);
        assert_eq!(audit, StructuralAudit::expected(params(4, 4, 4)));
        assert_eq!(audit.degree2_count, 36);
        assert_eq!(audit.degree3_count, 54);
        assert_eq!(audit.euler_face_count, 29);
        assert!(audit.connected);
    }

    #[test]
    fn girth_is_six() {
        assert_eq!(girth(build_fcs(params(4, 4, 4)).graph()), Some(6));
        assert_eq!(girth(build_fcs(params(5, 4, 6)).graph()), Some(6));
    }

    #[test]
    fn labels_are_a_bijection() {
        let lg = build_fcs(params(4, 5, 6));
        for v in lg.graph().vertices() {
            assert_eq!(lg.id_of(lg.label_of(v)), Some(v));
        }
        assert_eq!(lg.fcs_id(VertexLabel::new(P1, 1)), Some(0));
        // p1 has 2a-1 = 7 vertices, so p2:1 follows p1:7.
        assert_eq!(lg.fcs_id(VertexLabel::new(P2, 1)), Some(7));
        assert_eq!(lg.fcs_id(VertexLabel::new(P1, 8)), None);
    }

    #[test]
    fn every_edge_is_classified_once() {
        let p = params(5, 4, 6);
        let lg = build_fcs(p);
        let mut paths = 0;
        let mut rungs = 0;
        let mut closers = Vec::new();
        let mut connectors = Vec::new();
        for &e in lg.graph().edges() {
            match lg.edge_class(e).expect("edge must be classified") {
                EdgeClass::Path { .. } => paths += 1,
                EdgeClass::Rung { .. } => rungs += 1,
                EdgeClass::Closer { index } => closers.push(index),
                EdgeClass::Connector { index } => connectors.push(index),
            }
        }
        let s = (p.a() + p.b() + p.c()) as usize;
        assert_eq!(paths, 12 * s - 72);
        assert_eq!(rungs, 3 * s - 12);
        closers.sort_unstable();
        connectors.sort_unstable();
        assert_eq!(closers, (1..=12).collect::<Vec<_>>());
        assert_eq!(connectors, (1..=9).collect::<Vec<_>>());
        assert_eq!(paths + rungs + 21, lg.graph().edge_count());
    }

    #[test]
    fn class_reverse_lookup() {
        let lg = build_fcs(params(4, 4, 4));
        let e = lg.edge_with_class(EdgeClass::Connector { index: 7 }).unwrap();
        let (x, y) = lg.endpoint_labels(e);
        let mut names = [x.to_string(), y.to_string()];
        names.sort();
        assert_eq!(names, ["p3:1", "r3:1"]);
    }

    #[test]
    fn label_round_trip() {
        for text in ["p1:1", "u3:3", "r2:7", "t3:12"] {
            let l = parse_label(text).unwrap();
            assert_eq!(format_label(l), text);
        }
        assert!(matches!(parse_label("x9:1"), Err(LabelParseError::UnknownFamily(_))));
        assert!(matches!(parse_label("p1"), Err(LabelParseError::BadShape(_))));
        assert!(matches!(parse_label("p1:0"), Err(LabelParseError::BadIndex(_))));
        assert!(matches!(parse_label("p1:x"), Err(LabelParseError::BadIndex(_))));
    }

    #[test]
    fn baseline_families() {
        let path = build_path(2).unwrap();
        assert_eq!(path.graph().edge_count(), 1);
        let cycle = build_cycle(6).unwrap();
        assert_eq!(cycle.graph().vertex_count(), 6);
        assert_eq!(cycle.graph().edge_count(), 6);
        assert!(cycle.graph().vertices().all(|v| cycle.graph().degree(v) == 2));
        let complete = build_complete(4).unwrap();
        assert_eq!(complete.graph().edge_count(), 6);
        assert_eq!(cycle.id_of(Label::Seq(3)), Some(2));
        assert!(build_path(1).is_err());
        assert!(build_cycle(2).is_err());
    }
}
