//! The constructive steps behind the odd-cycle extremal argument: growing a
//! triangle into a `(2l+1)`-cycle, peeling low-degree vertices down to a
//! dense core, and trading disjoint triangles for disjoint odd cycles. Also
//! the per-vertex packing property of even-cycle extremal graphs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::ProcedureError;
use crate::formulas::ex_tc3_value;
use crate::graph::{Graph, VertexSet};
use crate::subgraphs::{find_disjoint_cycles_within, validate_cycle, validate_packing, CyclePacking, PackingStatus};

/// Search nodes explored by the growth backtracking before giving up.
const GROW_NODE_LIMIT: usize = 500_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowTrace {
    /// `(u_i, v_i, w_i)` for `i = 0..l`; layer 0 is the starting triangle.
    pub layers: Vec<[usize; 3]>,
    pub closing_vertex: usize,
    /// Which two of the three chains the closing vertex joins.
    pub closing_chains: [usize; 2],
    pub cycle: Vec<usize>,
    /// Arithmetic preconditions that failed but were not enforced.
    pub warnings: Vec<String>,
}

impl GrowTrace {
    /// `|H_i|` for each layer.
    pub fn layer_sizes(&self) -> Vec<usize> {
        (0..self.layers.len()).map(|i| 3 * i + 3).collect()
    }
}

fn precondition(msg: String) -> ProcedureError {
    ProcedureError::Precondition(msg)
}

fn check_triangle(g: &Graph, tri: &[usize; 3], forbidden: &VertexSet) -> Result<(), ProcedureError> {
    let [a, b, c] = *tri;
    if tri.iter().any(|&x| x >= g.n()) {
        return Err(precondition(format!("triangle {tri:?} out of range")));
    }
    if tri.iter().any(|&x| forbidden.contains(x)) {
        return Err(precondition(format!("triangle {tri:?} meets the forbidden set")));
    }
    if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
        return Err(precondition(format!("{tri:?} is not a triangle")));
    }
    Ok(())
}

fn check_min_degree(g: &Graph) -> Result<(), ProcedureError> {
    let need = g.n() / 2;
    if g.min_degree() < need {
        return Err(precondition(format!("min degree {} < floor(n/2) = {need}", g.min_degree())));
    }
    Ok(())
}

struct Grower<'a> {
    g: &'a Graph,
    l: usize,
    allowed: VertexSet,
    nodes: usize,
    deepest: usize,
    reached_top: bool,
}

impl Grower<'_> {
    fn grow(&mut self, layers: &mut Vec<[usize; 3]>, used: VertexSet) -> Option<(usize, [usize; 2])> {
        self.nodes += 1;
        let i = layers.len();
        self.deepest = self.deepest.max(i);
        if i == self.l {
            self.reached_top = true;
            let last = layers[i - 1];
            for y in (self.allowed - used).iter() {
                let hits: Vec<usize> = (0..3).filter(|&k| self.g.has_edge(y, last[k])).collect();
                if hits.len() >= 2 {
                    return Some((y, [hits[0], hits[1]]));
                }
            }
            return None;
        }
        let prev = layers[i - 1];
        let free = self.allowed - used;
        for a in (*self.g.neighbors(prev[0]) & free).iter() {
            for b in (*self.g.neighbors(prev[1]) & free).iter().filter(|&b| b != a) {
                for c in (*self.g.neighbors(prev[2]) & free).iter().filter(|&c| c != a && c != b) {
                    if self.nodes >= GROW_NODE_LIMIT {
                        return None;
                    }
                    let mut next = used;
                    next.insert(a);
                    next.insert(b);
                    next.insert(c);
                    layers.push([a, b, c]);
                    if let Some(hit) = self.grow(layers, next) {
                        return Some(hit);
                    }
                    layers.pop();
                }
            }
        }
        None
    }
}

/// Grows the triangle into a `(2l+1)`-cycle of `g - s` by `l - 1` layers of
/// disjoint matching edges and a closing vertex adjacent to two chain ends.
///
/// `t`, when given, is used only to report the arithmetic preconditions
/// `|S| <= (t-1)(2l+1)` and `n >= 8tl + 4l + 4t - 6` as warnings.
pub fn grow_odd_cycle(
    g: &Graph,
    s: &VertexSet,
    triangle: [usize; 3],
    l: usize,
    t: Option<usize>,
) -> Result<GrowTrace, ProcedureError> {
    if l == 0 {
        return Err(precondition("l must be at least 1".into()));
    }
    check_min_degree(g)?;
    check_triangle(g, &triangle, s)?;
    let mut warnings = Vec::new();
    if let Some(t) = t {
        let cap = t.saturating_sub(1) * (2 * l + 1);
        if s.len() > cap {
            warnings.push(format!("|S| = {} > (t-1)(2l+1) = {cap}", s.len()));
        }
        let need = 8 * t * l + 4 * l + 4 * t - 6;
        if g.n() < need {
            warnings.push(format!("n = {} < 8tl+4l+4t-6 = {need}", g.n()));
        }
    }
    if l == 1 {
        return Ok(GrowTrace {
            layers: vec![triangle],
            closing_vertex: triangle[2],
            closing_chains: [0, 1],
            cycle: triangle.to_vec(),
            warnings,
        });
    }
    let allowed = g.vertices() - *s;
    let mut grower = Grower { g, l, allowed, nodes: 0, deepest: 0, reached_top: false };
    let mut layers = vec![triangle];
    let used: VertexSet = triangle.iter().copied().collect();
    let (y, [p, q]) = match grower.grow(&mut layers, used) {
        Some(hit) => hit,
        None if grower.reached_top => return Err(ProcedureError::NoClosingVertex),
        None => return Err(ProcedureError::GrowthStuck { layer: grower.deepest }),
    };
    let mut cycle = vec![y];
    cycle.extend((0..l).rev().map(|i| layers[i][p]));
    cycle.extend((0..l).map(|i| layers[i][q]));
    validate_cycle(g, &cycle, 2 * l + 1).map_err(|e| precondition(format!("internal: grown cycle invalid: {e}")))?;
    debug_assert!(cycle.iter().all(|&v| !s.contains(v)));
    Ok(GrowTrace { layers, closing_vertex: y, closing_chains: [p, q], cycle, warnings })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelResult {
    pub core: Graph,
    /// Original labels of the core's vertices, ascending.
    pub kept: Vec<usize>,
    /// Original labels in deletion order.
    pub deleted: Vec<usize>,
    /// `e(core) - ex(n', tC_3)`.
    pub edge_surplus: i128,
    /// Whether `n >= floor((k-t)^2 / (4 floor((t+1)/2))) + k + 1`.
    pub order_condition: bool,
}

/// The peeling loop without arithmetic preconditions: repeatedly deletes a
/// minimum-degree vertex (lowest label on ties) while `delta < floor(n'/2)`,
/// stopping with `None` once the order would drop below `k`.
pub fn peel_unchecked(g: &Graph, t: usize, k: usize) -> Option<PeelResult> {
    let mut alive = g.vertices();
    let mut deleted = Vec::new();
    loop {
        let order = alive.len();
        if order < k.max(1) {
            return None;
        }
        let (v, d) = alive
            .iter()
            .map(|u| (u, g.neighbors(u).intersection_len(&alive)))
            .min_by_key(|&(u, d)| (d, u))
            .expect("non-empty");
        if d >= order / 2 {
            let core = g.induced_subgraph(&alive).expect("subset of vertices");
            let edge_surplus = core.edge_count() as i128 - ex_tc3_value(order, t.max(1));
            return Some(PeelResult {
                core,
                kept: alive.iter().collect(),
                deleted,
                edge_surplus,
                order_condition: peel_order_condition(g.n(), t, k),
            });
        }
        if order == k {
            return None;
        }
        alive.remove(v);
        deleted.push(v);
    }
}

pub fn peel_order_condition(n: usize, t: usize, k: usize) -> bool {
    let half = t.div_ceil(2).max(1) as i128;
    let kt = k as i128 - t as i128;
    n as i128 > kt * kt / (4 * half) + k as i128
}

/// Peels `g` to an induced subgraph on at least `k` vertices with
/// `delta >= floor(n'/2)`, after checking `t >= 2`, `e(g) >= ex(n, tC_3)`
/// and `k >= floor((19t-9)/2)`.
pub fn peel_to_dense_core(g: &Graph, t: usize, k: usize) -> Result<Option<PeelResult>, ProcedureError> {
    if t < 2 {
        return Err(precondition(format!("t = {t} < 2")));
    }
    let ex = ex_tc3_value(g.n(), t);
    if (g.edge_count() as i128) < ex {
        return Err(precondition(format!("e(G) = {} < ex(n, tC_3) = {ex}", g.edge_count())));
    }
    let kmin = (19 * t - 9) / 2;
    if k < kmin {
        return Err(precondition(format!("k = {k} < floor((19t-9)/2) = {kmin}")));
    }
    Ok(peel_unchecked(g, t, k))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Replacement {
    pub packing: CyclePacking,
    pub traces: Vec<GrowTrace>,
}

/// Replaces `t` disjoint triangles by `t` disjoint `(2l+1)`-cycles, growing
/// the `j`-th triangle while avoiding the cycles already built and the
/// triangles still waiting.
pub fn replace_triangles_with_odd_cycles(
    g: &Graph,
    t: usize,
    l: usize,
    triangles: &[[usize; 3]],
) -> Result<Replacement, ProcedureError> {
    check_min_degree(g)?;
    if triangles.len() != t {
        return Err(precondition(format!("{} triangles given, expected t = {t}", triangles.len())));
    }
    let sets: Vec<VertexSet> = triangles.iter().map(|c| c.iter().copied().collect()).collect();
    for (i, c) in triangles.iter().enumerate() {
        check_triangle(g, c, &VertexSet::new())?;
        if sets[..i].iter().any(|s| !s.is_disjoint(&sets[i])) {
            return Err(precondition(format!("triangle {i} meets an earlier one")));
        }
    }
    let mut built: Vec<VertexSet> = Vec::new();
    let mut traces = Vec::new();
    for j in 0..t {
        let s = built.iter().chain(&sets[j + 1..]).fold(VertexSet::new(), |acc, x| acc | *x);
        let trace = grow_odd_cycle(g, &s, triangles[j], l, Some(t))?;
        built.push(trace.cycle.iter().copied().collect());
        traces.push(trace);
    }
    let packing = CyclePacking {
        cycles: traces.iter().map(|tr| tr.cycle.clone()).collect(),
        status: PackingStatus::Found,
    };
    validate_packing(g, &packing, t, 2 * l + 1).map_err(|e| precondition(format!("internal: packing invalid: {e}")))?;
    Ok(Replacement { packing, traces })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerVertexPacking {
    pub all_hold: bool,
    /// For each vertex `u`, `t - 1` disjoint `2l`-cycles avoiding `u`, if any.
    pub witnesses: Vec<Option<Vec<Vec<usize>>>>,
}

/// Checks that `g - u` has `t - 1` disjoint `2l`-cycles for every vertex `u`.
pub fn verify_per_vertex_packing(g: &Graph, t: usize, l: usize) -> Result<PerVertexPacking, ProcedureError> {
    if t < 2 {
        return Err(precondition(format!("t = {t} < 2")));
    }
    let witnesses: Vec<Option<Vec<Vec<usize>>>> = (0..g.n())
        .into_par_iter()
        .map(|u| {
            let mut allowed = g.vertices();
            allowed.remove(u);
            let p = find_disjoint_cycles_within(g, &allowed, t - 1, 2 * l);
            p.is_found().then_some(p.cycles)
        })
        .collect();
    Ok(PerVertexPacking { all_hold: witnesses.iter().all(Option::is_some), witnesses })
}
