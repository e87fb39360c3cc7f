//! Landmark codes and resolving-set machinery: vertex and edge codes with
//! respect to an ordered landmark set, the resolving / independence /
//! minimality predicates, and an exhaustive certifier for the minimum
//! resolving-set size in either mode.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Mutex;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{vertex_edge_distance, DistanceMatrix, Edge, Graph, VertexId};

/// Which objects the codes distinguish: vertices, or edges (where the
/// distance from a landmark to an edge is the nearer endpoint distance).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Vertex,
    Edge,
}

impl Mode {
    pub const BOTH: [Mode; 2] = [Mode::Vertex, Mode::Edge];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Vertex => "vertex",
            Mode::Edge => "edge",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum LandmarkError {
    #[error("landmark set is empty")]
    Empty,
    #[error("duplicate landmark {0}")]
    Duplicate(VertexId),
}

/// Ordered list of distinct landmark vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Landmarks(Vec<VertexId>);

impl Landmarks {
    pub fn new(list: Vec<VertexId>) -> Result<Self, LandmarkError> {
        if list.is_empty() {
            return Err(LandmarkError::Empty);
        }
        let mut seen = list.clone();
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0] == w[1] {
                return Err(LandmarkError::Duplicate(w[0]));
            }
        }
        Ok(Landmarks(list))
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }
}

impl Deref for Landmarks {
    type Target = [VertexId];

    fn deref(&self) -> &[VertexId] {
        &self.0
    }
}

/// Distance vector of one object; entry t is the distance from landmark t.
pub type Code = Vec<u32>;

pub fn vertex_code(dm: &DistanceMatrix, landmarks: &Landmarks, v: VertexId) -> Code {
    landmarks.iter().map(|&u| dm.get(u, v)).collect()
}

pub fn edge_code(dm: &DistanceMatrix, landmarks: &Landmarks, e: Edge) -> Code {
    landmarks
        .iter()
        .map(|&u| vertex_edge_distance(dm, u, e))
        .collect()
}

/// A coded object in one of the two modes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModeObject {
    Vertex(VertexId),
    Edge(Edge),
}

impl fmt::Display for ModeObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModeObject::Vertex(v) => write!(f, "vertex {v}"),
            ModeObject::Edge(e) => write!(f, "edge {e}"),
        }
    }
}

/// Outcome of a resolving-set check; on failure carries the first clashing
/// object pair in scan order (deterministic for a fixed graph).
#[derive(Clone, Debug)]
pub struct Resolution {
    pub resolving: bool,
    pub counterexample: Option<(ModeObject, ModeObject)>,
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ResolvabilityError {
    #[error("graph is disconnected; codes are undefined")]
    Disconnected,
    #[error("landmark set does not resolve, so minimality is undefined")]
    NotResolving,
}

struct ModeCtx<'a> {
    g: &'a Graph,
    dm: &'a DistanceMatrix,
    mode: Mode,
}

impl ModeCtx<'_> {
    fn object_count(&self) -> usize {
        match self.mode {
            Mode::Vertex => self.g.vertex_count(),
            Mode::Edge => self.g.edge_count(),
        }
    }

    fn dist(&self, landmark: VertexId, obj: usize) -> u32 {
        match self.mode {
            Mode::Vertex => self.dm.get(landmark, obj),
            Mode::Edge => vertex_edge_distance(self.dm, landmark, self.g.edges()[obj]),
        }
    }

    fn object(&self, obj: usize) -> ModeObject {
        match self.mode {
            Mode::Vertex => ModeObject::Vertex(obj),
            Mode::Edge => ModeObject::Edge(self.g.edges()[obj]),
        }
    }
}

/// Hashable code key. Codes of up to four entries pack into a u64 (distances
/// in these graphs are far below 2^16); longer ones fall back to the vector.
#[derive(PartialEq, Eq, Hash)]
enum CodeKey {
    Packed(u64),
    Wide(Vec<u32>),
}

fn code_key(ctx: &ModeCtx, set: &[VertexId], obj: usize) -> CodeKey {
    if set.len() <= 4 && ctx.dm.n() < (1 << 16) {
        let mut packed = 0u64;
        for &u in set {
            packed = packed << 16 | ctx.dist(u, obj) as u64;
        }
        CodeKey::Packed(packed)
    } else {
        CodeKey::Wide(set.iter().map(|&u| ctx.dist(u, obj)).collect())
    }
}

/// First pair of objects (in object index order) with identical codes.
fn first_clash(ctx: &ModeCtx, set: &[VertexId]) -> Option<(usize, usize)> {
    let m = ctx.object_count();
    let mut seen: HashMap<CodeKey, usize> = HashMap::with_capacity(m);
    for obj in 0..m {
        if let Some(&prev) = seen.get(&code_key(ctx, set, obj)) {
            return Some((prev, obj));
        }
        seen.insert(code_key(ctx, set, obj), obj);
    }
    None
}

/// Do the landmarks give every object a distinct code?
///
/// Requires a connected graph (distance sentinels would make codes
/// meaningless); the counterexample on failure is the first clash in object
/// order, so it is stable across runs.
pub fn is_resolving(
    g: &Graph,
    dm: &DistanceMatrix,
    landmarks: &Landmarks,
    mode: Mode,
) -> Result<Resolution, ResolvabilityError> {
    if !dm.all_finite() {
        return Err(ResolvabilityError::Disconnected);
    }
    let ctx = ModeCtx { g, dm, mode };
    Ok(match first_clash(&ctx, landmarks) {
        None => Resolution {
            resolving: true,
            counterexample: None,
        },
        Some((x, y)) => Resolution {
            resolving: false,
            counterexample: Some((ctx.object(x), ctx.object(y))),
        },
    })
}

/// True iff no edge of the graph joins two landmarks.
pub fn is_independent(g: &Graph, landmarks: &Landmarks) -> bool {
    landmarks
        .iter()
        .tuple_combinations()
        .all(|(&x, &y)| !g.has_edge(x, y))
}

/// True iff no proper subset of the landmarks still resolves. Errors if the
/// set itself does not resolve.
pub fn check_minimality(
    g: &Graph,
    dm: &DistanceMatrix,
    landmarks: &Landmarks,
    mode: Mode,
) -> Result<bool, ResolvabilityError> {
    if !is_resolving(g, dm, landmarks, mode)?.resolving {
        return Err(ResolvabilityError::NotResolving);
    }
    // Dropping one landmark at a time suffices: if any smaller subset
    // resolved, so would some (len-1)-subset containing it.
    let ctx = ModeCtx { g, dm, mode };
    for skip in 0..landmarks.len() {
        let subset: Vec<VertexId> = landmarks
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != skip)
            .map(|(_, &u)| u)
            .collect();
        if !subset.is_empty() && first_clash(&ctx, &subset).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Knobs for [`certify_dimension_with`]. Pruning skips candidates whose
/// drop-last parent left a recorded clash that the added landmark fails to
/// separate; it never changes the result, only the work done, and the test
/// suite validates it against the unpruned search. The refutation log can
/// record one unresolved pair per refuted candidate; with pruning enabled the
/// recorded pair for a pruned candidate is the inherited one.
#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    pub prune: bool,
    pub log_counterexamples: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            prune: true,
            log_counterexamples: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RefutedCandidate {
    pub candidate: Vec<VertexId>,
    pub clash: (ModeObject, ModeObject),
}

/// Evidence that one candidate size admits no resolving set.
#[derive(Clone, Debug)]
pub struct SizeRefutation {
    pub size: usize,
    pub candidates_tested: u64,
    pub log: Vec<RefutedCandidate>,
}

#[derive(Clone, Debug)]
pub struct CertificationResult {
    pub mode: Mode,
    /// `None` when every size up to the budget was refuted.
    pub dimension: Option<usize>,
    /// Lexicographically smallest resolving set of minimum size, as a sorted
    /// VertexId tuple.
    pub witness: Option<Vec<VertexId>>,
    pub refuted_sizes: Vec<usize>,
    pub refutations: Vec<SizeRefutation>,
}

impl CertificationResult {
    pub fn budget_exceeded(&self) -> bool {
        self.dimension.is_none()
    }
}

/// Exhaustive certification with default options (pruning on, no log).
pub fn certify_dimension(
    g: &Graph,
    dm: &DistanceMatrix,
    mode: Mode,
    max_size: usize,
) -> Result<CertificationResult, ResolvabilityError> {
    certify_dimension_with(g, dm, mode, max_size, CertifyOptions::default())
}

type ClashCache = HashMap<Vec<VertexId>, (usize, usize)>;

enum SizeOutcome {
    Found(Vec<VertexId>),
    Refuted {
        candidates_tested: u64,
        log: Vec<RefutedCandidate>,
        cache: ClashCache,
    },
}

/// Tries all landmark subsets of size 1, 2, ... up to `max_size`, stopping at
/// the first size with a resolving set. The returned witness is the
/// lexicographically smallest resolving subset of that size regardless of
/// thread count; refuted sizes were searched exhaustively.
pub fn certify_dimension_with(
    g: &Graph,
    dm: &DistanceMatrix,
    mode: Mode,
    max_size: usize,
    opts: CertifyOptions,
) -> Result<CertificationResult, ResolvabilityError> {
    assert!(max_size >= 1, "max_size must be at least 1");
    if g.vertex_count() == 0 || !dm.all_finite() {
        return Err(ResolvabilityError::Disconnected);
    }
    let ctx = ModeCtx { g, dm, mode };
    let mut refuted_sizes = Vec::new();
    let mut refutations = Vec::new();
    let mut cache: Option<ClashCache> = None;
    for size in 1..=max_size.min(g.vertex_count()) {
        // The cache only pays off for the next size up, so skip building it
        // at the budget boundary.
        let build_cache = opts.prune && size < max_size;
        match scan_size(&ctx, size, cache.take().as_ref(), opts, build_cache) {
            SizeOutcome::Found(witness) => {
                return Ok(CertificationResult {
                    mode,
                    dimension: Some(size),
                    witness: Some(witness),
                    refuted_sizes,
                    refutations,
                });
            }
            SizeOutcome::Refuted {
                candidates_tested,
                log,
                cache: next_cache,
            } => {
                refuted_sizes.push(size);
                refutations.push(SizeRefutation {
                    size,
                    candidates_tested,
                    log,
                });
                cache = build_cache.then_some(next_cache);
            }
        }
    }
    Ok(CertificationResult {
        mode,
        dimension: None,
        witness: None,
        refuted_sizes,
        refutations,
    })
}

#[derive(Default)]
struct RefutationCollector {
    candidates_tested: u64,
    log: Vec<RefutedCandidate>,
    cache: ClashCache,
}

/// One size level. Candidates are partitioned into blocks by their smallest
/// element; blocks run in parallel, each scanning its candidates in
/// lexicographic order, and `find_map_first` keeps the earliest block's hit,
/// which is exactly the lexicographically smallest witness.
fn scan_size(
    ctx: &ModeCtx,
    size: usize,
    prev_cache: Option<&ClashCache>,
    opts: CertifyOptions,
    build_cache: bool,
) -> SizeOutcome {
    let n = ctx.g.vertex_count();
    let collector = Mutex::new(RefutationCollector::default());
    let hit = (0..n).into_par_iter().find_map_first(|first| {
        let mut local = RefutationCollector::default();
        let mut candidate: Vec<VertexId> = Vec::with_capacity(size);
        for tail in (first + 1..n).combinations(size - 1) {
            candidate.clear();
            candidate.push(first);
            candidate.extend(tail);
            let clash = inherited_clash(ctx, &candidate, prev_cache)
                .or_else(|| first_clash(ctx, &candidate));
            match clash {
                None => return Some(candidate),
                Some(pair) => {
                    local.candidates_tested += 1;
                    if build_cache {
                        local.cache.insert(candidate.clone(), pair);
                    }
                    if opts.log_counterexamples {
                        local.log.push(RefutedCandidate {
                            candidate: candidate.clone(),
                            clash: (ctx.object(pair.0), ctx.object(pair.1)),
                        });
                    }
                }
            }
        }
        let mut shared = collector.lock().unwrap();
        shared.candidates_tested += local.candidates_tested;
        shared.log.append(&mut local.log);
        shared.cache.extend(local.cache);
        None
    });
    match hit {
        Some(witness) => SizeOutcome::Found(witness),
        None => {
            let mut shared = collector.into_inner().unwrap();
            // Blocks finish in arbitrary order; sort for a stable log.
            shared.log.sort_by(|x, y| x.candidate.cmp(&y.candidate));
            SizeOutcome::Refuted {
                candidates_tested: shared.candidates_tested,
                log: shared.log,
                cache: shared.cache,
            }
        }
    }
}

/// A clash of the candidate's drop-last parent that the appended landmark
/// does not separate persists for the whole candidate.
fn inherited_clash(
    ctx: &ModeCtx,
    candidate: &[VertexId],
    prev_cache: Option<&ClashCache>,
) -> Option<(usize, usize)> {
    let cache = prev_cache?;
    let (last, parent) = candidate.split_last()?;
    let &(x, y) = cache.get(parent)?;
    (ctx.dist(*last, x) == ctx.dist(*last, y)).then_some((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{build_complete, build_cycle, build_fcs, build_path, FcsParams};
    use crate::graph::all_pairs_distances;

    fn lm(ids: &[VertexId]) -> Landmarks {
        Landmarks::new(ids.to_vec()).unwrap()
    }

    #[test]
    fn landmark_validation() {
        assert_eq!(Landmarks::new(vec![]), Err(LandmarkError::Empty));
        assert_eq!(Landmarks::new(vec![1, 2, 1]), Err(LandmarkError::Duplicate(1)));
        assert_eq!(lm(&[2, 0]).as_slice(), &[2, 0]);
    }

    #[test]
    fn path_endpoint_resolves_both_modes() {
        let lg = build_path(4).unwrap();
        let dm = all_pairs_distances(lg.graph());
        for mode in Mode::BOTH {
            let r = is_resolving(lg.graph(), &dm, &lm(&[0]), mode).unwrap();
            assert!(r.resolving, "mode {mode}");
        }
        assert!(check_minimality(lg.graph(), &dm, &lm(&[0]), Mode::Vertex).unwrap());
        // Endpoint plus midpoint is resolving but not minimal.
        assert!(!check_minimality(lg.graph(), &dm, &lm(&[0, 2]), Mode::Vertex).unwrap());
    }

    #[test]
    fn minimality_requires_resolving() {
        let lg = build_cycle(6).unwrap();
        let dm = all_pairs_distances(lg.graph());
        assert_eq!(
            check_minimality(lg.graph(), &dm, &lm(&[0]), Mode::Vertex),
            Err(ResolvabilityError::NotResolving)
        );
    }

    #[test]
    fn disconnected_graph_is_an_error() {
        let g = crate::graph::Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        let dm = all_pairs_distances(&g);
        assert!(matches!(
            is_resolving(&g, &dm, &lm(&[0]), Mode::Vertex),
            Err(ResolvabilityError::Disconnected)
        ));
        assert!(certify_dimension(&g, &dm, Mode::Vertex, 2).is_err());
    }

    #[test]
    fn cycle_and_complete_dimensions() {
        let c6 = build_cycle(6).unwrap();
        let dm = all_pairs_distances(c6.graph());
        for mode in Mode::BOTH {
            let r = certify_dimension(c6.graph(), &dm, mode, 3).unwrap();
            assert_eq!(r.dimension, Some(2), "C6 {mode}");
            assert_eq!(r.witness.as_deref(), Some(&[0, 1][..]), "C6 {mode} witness");
            assert_eq!(r.refuted_sizes, [1]);
        }
        let k5 = build_complete(5).unwrap();
        let dm = all_pairs_distances(k5.graph());
        for mode in Mode::BOTH {
            let r = certify_dimension(k5.graph(), &dm, mode, 5).unwrap();
            assert_eq!(r.dimension, Some(4), "K5 {mode}");
        }
    }

    #[test]
    fn budget_exhaustion_reports_refutations() {
        let c6 = build_cycle(6).unwrap();
        let dm = all_pairs_distances(c6.graph());
        let r = certify_dimension(c6.graph(), &dm, Mode::Vertex, 1).unwrap();
        assert!(r.budget_exceeded());
        assert_eq!(r.refuted_sizes, [1]);
        assert_eq!(r.refutations[0].candidates_tested, 6);
    }

    #[test]
    fn pruned_and_unpruned_agree_on_a_cycle() {
        let c8 = build_cycle(8).unwrap();
        let dm = all_pairs_distances(c8.graph());
        for mode in Mode::BOTH {
            let base = certify_dimension_with(
                c8.graph(),
                &dm,
                mode,
                3,
                CertifyOptions { prune: false, log_counterexamples: false },
            )
            .unwrap();
            let pruned = certify_dimension_with(
                c8.graph(),
                &dm,
                mode,
                3,
                CertifyOptions { prune: true, log_counterexamples: false },
            )
            .unwrap();
            assert_eq!(base.dimension, pruned.dimension);
            assert_eq!(base.witness, pruned.witness);
            assert_eq!(base.refuted_sizes, pruned.refuted_sizes);
            let counts = |r: &CertificationResult| {
                r.refutations.iter().map(|s| s.candidates_tested).collect::<Vec<_>>()
            };
            assert_eq!(counts(&base), counts(&pruned));
        }
    }

    #[test]
    fn fcs_landmark_codes_match_frozen_values() {
        let lg = build_fcs(FcsParams::new(4, 4, 4).unwrap());
        let dm = all_pairs_distances(lg.graph());
        let id = |text: &str| lg.fcs_id(text.parse().unwrap()).unwrap();
        let u = lm(&[id("p1:1"), id("r1:1"), id("r2:7")]);
        assert_eq!(vertex_code(&dm, &u, id("p1:1")), [0, 14, 14]);
        assert_eq!(vertex_code(&dm, &u, id("q1:1")), [7, 7, 17]);
        assert_eq!(vertex_code(&dm, &u, id("r1:1")), [14, 0, 14]);
        assert_eq!(vertex_code(&dm, &u, id("t2:1")), [3, 13, 11]);
        assert_eq!(vertex_code(&dm, &u, id("p3:1")), [9, 11, 9]);
        let e = Edge::new(id("p2:1"), id("r2:7"));
        assert!(lg.graph().has_edge(id("p2:1"), id("r2:7")));
        assert_eq!(edge_code(&dm, &u, e), [14, 13, 0]);
        let r = is_resolving(lg.graph(), &dm, &u, Mode::Vertex).unwrap();
        assert!(r.resolving);
        assert!(is_independent(lg.graph(), &u));
        for mode in Mode::BOTH {
            assert!(check_minimality(lg.graph(), &dm, &u, mode).unwrap(), "{mode}");
        }
    }

    #[test]
    fn single_landmark_fails_on_fcs() {
        let lg = build_fcs(FcsParams::new(4, 4, 4).unwrap());
        let dm = all_pairs_distances(lg.graph());
        let id = |text: &str| lg.fcs_id(text.parse().unwrap()).unwrap();
        let r = is_resolving(lg.graph(), &dm, &lm(&[id("p1:1")]), Mode::Vertex).unwrap();
        assert!(!r.resolving);
        let (x, y) = r.counterexample.unwrap();
        let name = |o: ModeObject| match o {
            ModeObject::Vertex(v) => lg.label_of(v).to_string(),
            ModeObject::Edge(_) => unreachable!(),
        };
        assert_eq!([name(x), name(y)], ["p2:1", "p2:3"]);
    }
}
