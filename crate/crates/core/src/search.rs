//! Small-n extremal oracles and a hill climb for the spectral problem.
//!
//! Exhaustive scans walk all labelled graphs on `n` vertices in Gray-code
//! order, one edge toggle per step. The edge-pair space is split on its
//! high bits into chunks that run on the rayon pool; each chunk keeps its own
//! incumbent and the chunks are merged in order, so results do not depend on
//! scheduling. Freeness checks reuse the last packing certificate (a superset
//! of it is never free) and the last free graph (a subset of it is always
//! free) before falling back to a full packing search.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_graph6;
use crate::constructions::{FamilyParams, SVariant};
use crate::error::SearchError;
use crate::formulas::{ex_tc3, FormulaValue};
use crate::graph::Graph;
use crate::spectral::{perron_default, perron_from, SpectralResult, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::subgraphs::{find_disjoint_cycles, is_free, matching_number, packing_through_edge, CyclePacking};

pub const EX_LIMIT: usize = 8;
pub const SPEX_LIMIT: usize = 7;
/// Minimum gain in `rho` for a move to count as an improvement.
pub const IMPROVE_TOL: f64 = 1e-10;

const CHUNK_BITS: usize = 8;
const SPOT_CHECKS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// `t` disjoint cycles of length `2l+1` (odd) or `2l` (even).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleSpec {
    pub t: usize,
    pub l: usize,
    pub parity: Parity,
}

impl CycleSpec {
    pub fn odd(t: usize, l: usize) -> Self {
        CycleSpec { t, l, parity: Parity::Odd }
    }

    pub fn even(t: usize, l: usize) -> Self {
        CycleSpec { t, l, parity: Parity::Even }
    }

    pub fn cycle_len(&self) -> usize {
        match self.parity {
            Parity::Odd => 2 * self.l + 1,
            Parity::Even => 2 * self.l,
        }
    }

    pub fn is_free(&self, g: &Graph) -> bool {
        is_free(g, self.t, self.cycle_len())
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.t == 0 || self.cycle_len() < 3 {
            return Err(SearchError::Invalid(format!("need t >= 1 and cycle length >= 3, got {self:?}")));
        }
        Ok(())
    }

    /// The construction the extremal theorems single out: `S_{n,2t-1}^{++}`
    /// for `C_4`, `S_{n,lt-1}^+` for longer even cycles and
    /// `K_{t-1} + T_{n-t+1,2}` for odd cycles.
    pub fn candidate(&self, n: usize) -> Option<FamilyParams> {
        let f = match (self.parity, self.l) {
            (Parity::Even, 2) => FamilyParams::S { n, l: 2 * self.t - 1, variant: SVariant::PlusPlus },
            (Parity::Even, l) => FamilyParams::S { n, l: l * self.t - 1, variant: SVariant::Plus },
            (Parity::Odd, _) => FamilyParams::ErdosMoon { n, t: self.t },
        };
        f.build().ok().map(|_| f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Edges,
    Rho,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMatchingBound {
    pub nu_max: usize,
    pub delta_max: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateEval {
    pub family: String,
    pub graph6: String,
    pub edges: usize,
    pub rho: f64,
    pub free: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Move {
    Add { u: usize, v: usize },
    Delete { u: usize, v: usize },
    Swap { remove: [usize; 2], add: [usize; 2] },
}

impl Move {
    fn apply(&self, g: &Graph) -> Graph {
        let mut h = g.clone();
        match *self {
            Move::Add { u, v } => h.insert_edge(u, v).expect("valid non-edge"),
            Move::Delete { u, v } => h.delete_edge(u, v).expect("valid edge"),
            Move::Swap { remove: [a, b], add: [u, v] } => {
                h.delete_edge(a, b).expect("valid edge");
                h.insert_edge(u, v).expect("valid non-edge");
            }
        }
        h
    }

    /// First-order change of the Rayleigh quotient at the unit vector `x`,
    /// a lower bound on the change of `rho`.
    fn score(&self, x: &[f64]) -> f64 {
        match *self {
            Move::Add { u, v } => 2.0 * x[u] * x[v],
            Move::Delete { u, v } => -2.0 * x[u] * x[v],
            Move::Swap { remove: [a, b], add: [u, v] } => 2.0 * (x[u] * x[v] - x[a] * x[b]),
        }
    }

    /// Whether the moved graph keeps the freeness of `g` (assumed free).
    fn feasible(&self, moved: &Graph, spec: &CycleSpec) -> bool {
        match *self {
            Move::Delete { .. } => true,
            Move::Add { u, v } | Move::Swap { add: [u, v], .. } => {
                packing_through_edge(moved, spec.t, spec.cycle_len(), u, v).is_none()
            }
        }
    }
}

fn all_moves(g: &Graph) -> Vec<Move> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let non: Vec<(usize, usize)> = g.non_edges().collect();
    let mut moves: Vec<Move> = non.iter().map(|&(u, v)| Move::Add { u, v }).collect();
    moves.extend(edges.iter().map(|&(u, v)| Move::Delete { u, v }));
    for &(a, b) in &edges {
        moves.extend(non.iter().map(|&(u, v)| Move::Swap { remove: [a, b], add: [u, v] }));
    }
    moves
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClimbResult {
    /// `construction` or `random`.
    pub start: String,
    pub start_rho: f64,
    pub best_rho: f64,
    pub graph6: String,
    pub moves: Vec<Move>,
    /// `rho` after each accepted move, starting value first.
    pub trajectory: Vec<f64>,
    pub evaluations: u64,
    pub budget_exhausted: bool,
    /// True when the climb stopped because no move improves.
    pub local_max: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub forbidden: Option<CycleSpec>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub constraint: Option<DegreeMatchingBound>,
    pub objective: Objective,
    pub best_value: f64,
    /// graph6 strings; canonical for exhaustive scans.
    pub best_graphs: Vec<String>,
    pub graphs_scanned: u64,
    pub evaluations: u64,
    pub tol: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub formula: Option<FormulaValue>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub formula_matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub candidate: Option<CandidateEval>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub climbs: Vec<ClimbResult>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed: Option<f64>,
}

impl ExtremalReport {
    fn new(n: usize, objective: Objective) -> Self {
        ExtremalReport {
            n,
            forbidden: None,
            constraint: None,
            objective,
            best_value: 0.0,
            best_graphs: Vec::new(),
            graphs_scanned: 0,
            evaluations: 0,
            tol: DEFAULT_TOL,
            seed: None,
            formula: None,
            formula_matches: None,
            candidate: None,
            climbs: Vec::new(),
            elapsed: None,
        }
    }

    /// `rho` along each climb as `seed,step,rho` rows.
    pub fn trajectory_csv(&self) -> String {
        let mut out = String::from("seed,step,rho\n");
        for (i, c) in self.climbs.iter().enumerate() {
            for (s, r) in c.trajectory.iter().enumerate() {
                out.push_str(&format!("{i},{s},{r:.15}\n"));
            }
        }
        out
    }
}

/// The edge pairs of `K_n` in graph6 order, and their bit index.
struct PairSpace {
    n: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<Vec<u32>>,
}

impl PairSpace {
    fn new(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut index = vec![vec![0u32; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            index[i][j] = k as u32;
            index[j][i] = k as u32;
        }
        PairSpace { n, pairs, index }
    }

    fn graph(&self, mask: u32) -> Graph {
        Graph::from_edges(self.n, self.pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p))
            .expect("valid pairs")
    }

    fn cert_mask(&self, p: &CyclePacking) -> u32 {
        p.cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()])))
            .fold(0, |m, (a, b)| m | 1 << self.index[a][b])
    }

    /// Runs `visit` over every labelled graph, chunked on the high bits.
    fn scan<S, I, V>(&self, init: I, visit: V) -> Vec<S>
    where
        S: Send,
        I: Fn() -> S + Sync,
        V: Fn(&mut S, &Graph, u32, &[usize]) + Sync,
    {
        let m = self.pairs.len();
        let high = m.min(CHUNK_BITS);
        let low = m - high;
        (0u32..1 << high)
            .into_par_iter()
            .map(|c| {
                let mut state = init();
                let mut mask = c << low;
                let mut g = self.graph(mask);
                let mut deg = g.degrees();
                visit(&mut state, &g, mask, &deg);
                for i in 1u32..1 << low {
                    let bit = i.trailing_zeros();
                    let (u, v) = self.pairs[bit as usize];
                    mask ^= 1 << bit;
                    if mask >> bit & 1 == 1 {
                        g.insert_edge(u, v).expect("valid pair");
                        deg[u] += 1;
                        deg[v] += 1;
                    } else {
                        g.delete_edge(u, v).expect("valid pair");
                        deg[u] -= 1;
                        deg[v] -= 1;
                    }
                    visit(&mut state, &g, mask, &deg);
                }
                state
            })
            .collect()
    }
}

/// Cached freeness with certificate reuse along the Gray-code walk.
struct FreenessCache {
    free_mask: u32,
    cert: Option<u32>,
    checks: u64,
}

impl FreenessCache {
    fn new() -> Self {
        FreenessCache { free_mask: 0, cert: None, checks: 0 }
    }

    fn is_free(&mut self, space: &PairSpace, g: &Graph, mask: u32, spec: &CycleSpec) -> bool {
        if mask & !self.free_mask == 0 {
            return true;
        }
        if self.cert.is_some_and(|c| mask & c == c) {
            return false;
        }
        self.checks += 1;
        let p = find_disjoint_cycles(g, spec.t, spec.cycle_len());
        if p.is_found() {
            self.cert = Some(space.cert_mask(&p));
            false
        } else {
            self.free_mask = mask;
            true
        }
    }
}

fn canonical_set(space: &PairSpace, masks: impl IntoIterator<Item = u32>) -> Vec<String> {
    let set: BTreeSet<String> = masks.into_iter().map(|m| canonical_graph6(&space.graph(m))).collect();
    set.into_iter().collect()
}

struct EdgeState {
    best: usize,
    masks: Vec<u32>,
    scanned: u64,
    cache: FreenessCache,
}

/// `ex(n, tC_k)` over all labelled graphs on `n <= 8` vertices, with the
/// extremal graphs up to isomorphism.
pub fn exhaustive_ex(n: usize, spec: CycleSpec) -> Result<ExtremalReport, SearchError> {
    spec.validate()?;
    if n > EX_LIMIT {
        return Err(SearchError::TooLarge { n, limit: EX_LIMIT });
    }
    let space = PairSpace::new(n);
    let states = space.scan(
        || EdgeState { best: 0, masks: Vec::new(), scanned: 0, cache: FreenessCache::new() },
        |st, g, mask, _| {
            st.scanned += 1;
            let e = mask.count_ones() as usize;
            if e < st.best || !st.cache.is_free(&space, g, mask, &spec) {
                return;
            }
            if e > st.best {
                st.best = e;
                st.masks.clear();
            }
            st.masks.push(mask);
        },
    );
    let best = states.iter().map(|s| s.best).max().unwrap_or(0);
    let masks = states.iter().filter(|s| s.best == best).flat_map(|s| s.masks.iter().copied());
    let mut report = ExtremalReport::new(n, Objective::Edges);
    report.forbidden = Some(spec);
    report.best_value = best as f64;
    report.best_graphs = canonical_set(&space, masks);
    report.graphs_scanned = states.iter().map(|s| s.scanned).sum();
    report.evaluations = states.iter().map(|s| s.cache.checks).sum();
    if spec.parity == Parity::Odd && spec.l == 1 && n >= spec.t {
        let f = ex_tc3(n, spec.t).expect("n >= t >= 1");
        report.formula_matches = f.value.as_integer().map(|v| v == best as i128);
        report.formula = Some(f);
    }
    for g6 in &report.best_graphs {
        let g = crate::graph6::decode_str(g6).expect("own encoding");
        debug_assert!(spec.is_free(&g) && g.edge_count() == best);
    }
    Ok(report)
}

struct RhoState {
    best: f64,
    found: Vec<(u32, f64)>,
    scanned: u64,
    evals: u64,
    spot: usize,
    cache: FreenessCache,
}

/// `spex(n, tC_k)` over all labelled graphs on `n <= 7` vertices. Graphs
/// with maximum degree below the incumbent are skipped, as `rho <= Delta`.
pub fn exhaustive_spex(n: usize, spec: CycleSpec) -> Result<ExtremalReport, SearchError> {
    spec.validate()?;
    if n > SPEX_LIMIT {
        return Err(SearchError::TooLarge { n, limit: SPEX_LIMIT });
    }
    if n == 0 {
        return Err(SearchError::Invalid("n must be positive".into()));
    }
    let space = PairSpace::new(n);
    let chunks = 1usize << space.pairs.len().min(CHUNK_BITS);
    let spot_limit = SPOT_CHECKS.div_ceil(chunks);
    let tol = 1e-9;
    let states = space.scan(
        || RhoState { best: 0.0, found: Vec::new(), scanned: 0, evals: 0, spot: 0, cache: FreenessCache::new() },
        |st, g, mask, deg| {
            st.scanned += 1;
            let delta = deg.iter().copied().max().unwrap_or(0) as f64;
            if delta < st.best - tol {
                if cfg!(debug_assertions) && st.spot < spot_limit {
                    st.spot += 1;
                    let r = perron_default(g).expect("n >= 1").rho;
                    assert!(r < st.best, "prune unsound: rho {r} >= best {}", st.best);
                }
                return;
            }
            if !st.cache.is_free(&space, g, mask, &spec) {
                return;
            }
            st.evals += 1;
            let r = perron_default(g).expect("n >= 1").rho;
            if r > st.best + tol {
                st.best = r;
                st.found.retain(|&(_, x)| x >= r - tol);
            }
            if r >= st.best - tol {
                st.found.push((mask, r));
            }
        },
    );
    let best = states.iter().map(|s| s.best).fold(0.0, f64::max);
    let masks = states.iter().flat_map(|s| s.found.iter()).filter(|&&(_, r)| r >= best - tol).map(|&(m, _)| m);
    let mut report = ExtremalReport::new(n, Objective::Rho);
    report.forbidden = Some(spec);
    report.best_value = best;
    report.best_graphs = canonical_set(&space, masks);
    report.graphs_scanned = states.iter().map(|s| s.scanned).sum();
    report.evaluations = states.iter().map(|s| s.evals + s.cache.checks).sum();
    report.tol = tol;
    Ok(report)
}

struct BoundedState {
    best: usize,
    masks: Vec<u32>,
    scanned: u64,
    evals: u64,
}

/// Maximum edge count over labelled graphs on `n <= 8` vertices with
/// matching number at most `nu_max` and maximum degree at most `delta_max`.
/// Smaller orders are covered by isolated vertices.
pub fn exhaustive_bounded_edges(n: usize, nu_max: usize, delta_max: usize) -> Result<ExtremalReport, SearchError> {
    if n > EX_LIMIT {
        return Err(SearchError::TooLarge { n, limit: EX_LIMIT });
    }
    let space = PairSpace::new(n);
    let states = space.scan(
        || BoundedState { best: 0, masks: Vec::new(), scanned: 0, evals: 0 },
        |st, g, mask, deg| {
            st.scanned += 1;
            let e = mask.count_ones() as usize;
            if e < st.best || deg.iter().any(|&d| d > delta_max) {
                return;
            }
            st.evals += 1;
            if matching_number(g) > nu_max {
                return;
            }
            if e > st.best {
                st.best = e;
                st.masks.clear();
            }
            st.masks.push(mask);
        },
    );
    let best = states.iter().map(|s| s.best).max().unwrap_or(0);
    let masks = states.iter().filter(|s| s.best == best).flat_map(|s| s.masks.iter().copied());
    let mut report = ExtremalReport::new(n, Objective::Edges);
    report.constraint = Some(DegreeMatchingBound { nu_max, delta_max });
    report.best_value = best as f64;
    report.best_graphs = canonical_set(&space, masks);
    report.graphs_scanned = states.iter().map(|s| s.scanned).sum();
    report.evaluations = states.iter().map(|s| s.evals).sum();
    if nu_max >= 1 && delta_max >= 1 {
        let f = crate::formulas::chvatal_hanson(nu_max, delta_max).expect("positive parameters");
        report.formula_matches = f.value.as_integer().map(|v| v == best as i128);
        report.formula = Some(f);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClimbConfig {
    pub seeds: usize,
    /// Move evaluations (exact `rho` or feasibility checks) per seed.
    pub budget: u64,
    pub seed: u64,
    /// Candidates scored by the first-order estimate are evaluated exactly
    /// in batches of this size.
    pub batch: usize,
    pub tol: f64,
}

impl Default for ClimbConfig {
    fn default() -> Self {
        ClimbConfig { seeds: 8, budget: 100_000, seed: 0, batch: 32, tol: DEFAULT_TOL }
    }
}

fn rho_of(g: &Graph, warm: &[f64], tol: f64) -> SpectralResult {
    perron_from(g, warm, tol, DEFAULT_MAX_ITER).expect("non-empty graph converges")
}

/// Random `spec`-free start: edges in random order, kept when feasible,
/// until a random target size between `n` and `3n` is reached.
fn random_free_graph(n: usize, spec: &CycleSpec, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let target = rng.random_range(n..=3 * n);
    let mut g = Graph::empty(n).expect("n within capacity");
    for (u, v) in pairs {
        if g.edge_count() >= target {
            break;
        }
        g.insert_edge(u, v).expect("valid pair");
        if packing_through_edge(&g, spec.t, spec.cycle_len(), u, v).is_some() {
            g.delete_edge(u, v).expect("just added");
        }
    }
    g
}

fn climb(start: Graph, label: &str, spec: &CycleSpec, cfg: &ClimbConfig) -> ClimbResult {
    let mut g = start;
    let mut cur = rho_of(&g, &vec![1.0; g.n()], cfg.tol);
    let start_rho = cur.rho;
    let mut trajectory = vec![cur.rho];
    let mut moves = Vec::new();
    let mut evaluations = 0u64;
    let mut exhausted = false;
    'steps: loop {
        let mut cands: Vec<(f64, Move)> = all_moves(&g).into_iter().map(|m| (m.score(&cur.vector), m)).collect();
        cands.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
        for batch in cands.chunks(cfg.batch.max(1)) {
            let mut better: Vec<(SpectralResult, Move, Graph)> = Vec::new();
            for &(_, m) in batch {
                if evaluations >= cfg.budget {
                    exhausted = true;
                    break;
                }
                evaluations += 1;
                let h = m.apply(&g);
                let r = rho_of(&h, &cur.vector, cfg.tol);
                if r.rho > cur.rho + IMPROVE_TOL {
                    better.push((r, m, h));
                }
            }
            better.sort_by(|a, b| b.0.rho.total_cmp(&a.0.rho).then(a.1.cmp(&b.1)));
            for (r, m, h) in better {
                if evaluations >= cfg.budget {
                    exhausted = true;
                    break;
                }
                evaluations += 1;
                if m.feasible(&h, spec) {
                    debug_assert!(r.rho > cur.rho);
                    g = h;
                    cur = r;
                    trajectory.push(cur.rho);
                    moves.push(m);
                    continue 'steps;
                }
            }
            if exhausted {
                break 'steps;
            }
        }
        break;
    }
    ClimbResult {
        start: label.to_string(),
        start_rho,
        best_rho: cur.rho,
        graph6: crate::graph6::encode(&g),
        moves,
        trajectory,
        evaluations,
        budget_exhausted: exhausted,
        local_max: !exhausted,
    }
}

fn evaluate_candidate(n: usize, spec: &CycleSpec) -> Option<(CandidateEval, Graph)> {
    let f = spec.candidate(n)?;
    let g = f.build().ok()?;
    let rho = perron_default(&g).ok()?.rho;
    Some((
        CandidateEval {
            family: f.to_string(),
            graph6: crate::graph6::encode(&g),
            edges: g.edge_count(),
            rho,
            free: spec.is_free(&g),
        },
        g,
    ))
}

/// Hill climb on `rho` over `spec`-free graphs. Seed 0 starts from the
/// candidate construction (when it exists for this `n`), the others from
/// random free graphs drawn from `ChaCha8Rng` seeded with `cfg.seed` on
/// stream `i`.
pub fn hill_climb_spex(n: usize, spec: CycleSpec, cfg: &ClimbConfig) -> Result<ExtremalReport, SearchError> {
    spec.validate()?;
    if n == 0 || n > crate::graph::CAPACITY {
        return Err(SearchError::Invalid(format!("n = {n} outside 1..={}", crate::graph::CAPACITY)));
    }
    if cfg.seeds == 0 {
        return Err(SearchError::Invalid("at least one seed".into()));
    }
    let cand = evaluate_candidate(n, &spec);
    let climbs: Vec<ClimbResult> = (0..cfg.seeds)
        .into_par_iter()
        .map(|i| match (&cand, i) {
            (Some((c, g)), 0) if c.free => climb(g.clone(), "construction", &spec, cfg),
            _ => {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                rng.set_stream(i as u64);
                climb(random_free_graph(n, &spec, &mut rng), "random", &spec, cfg)
            }
        })
        .collect();
    let best = climbs
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.best_rho.total_cmp(&b.1.best_rho).then(b.0.cmp(&a.0)))
        .map(|(_, c)| c)
        .expect("at least one seed");
    let mut report = ExtremalReport::new(n, Objective::Rho);
    report.forbidden = Some(spec);
    report.best_value = best.best_rho;
    report.best_graphs = vec![best.graph6.clone()];
    report.evaluations = climbs.iter().map(|c| c.evaluations).sum();
    report.graphs_scanned = report.evaluations;
    report.tol = cfg.tol;
    report.seed = Some(cfg.seed);
    report.candidate = cand.map(|(c, _)| c);
    report.climbs = climbs;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocalMaxCertificate {
    pub is_local_max: bool,
    pub free: bool,
    pub rho: f64,
    pub moves_evaluated: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub improving_move: Option<Move>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub improving_rho: Option<f64>,
}

/// Evaluates every add, delete and swap of `g`; `g` is a local maximum when
/// no move that keeps it `spec`-free raises `rho` by more than
/// [`IMPROVE_TOL`]. A graph that is not free is reported as not a local
/// maximum.
pub fn certify_local_max(g: &Graph, spec: CycleSpec) -> Result<LocalMaxCertificate, SearchError> {
    spec.validate()?;
    let base = perron_default(g)?;
    let free = spec.is_free(g);
    if !free {
        return Ok(LocalMaxCertificate {
            is_local_max: false,
            free,
            rho: base.rho,
            moves_evaluated: 0,
            improving_move: None,
            improving_rho: None,
        });
    }
    let moves = all_moves(g);
    let mut better: Vec<(f64, Move)> = moves
        .par_iter()
        .filter_map(|m| {
            let r = rho_of(&m.apply(g), &base.vector, DEFAULT_TOL).rho;
            (r > base.rho + IMPROVE_TOL).then_some((r, *m))
        })
        .collect();
    better.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let hit = better.par_iter().find_first(|(_, m)| m.feasible(&m.apply(g), &spec));
    Ok(LocalMaxCertificate {
        is_local_max: hit.is_none(),
        free,
        rho: base.rho,
        moves_evaluated: moves.len() as u64,
        improving_move: hit.map(|h| h.1),
        improving_rho: hit.map(|h| h.0),
    })
}

/// `rho` of the candidate construction for `spec` on `n` vertices.
pub fn candidate_rho(n: usize, spec: &CycleSpec) -> Option<f64> {
    evaluate_candidate(n, spec).map(|(c, _)| c.rho)
}
