//! Cycles, disjoint cycle packings, paths, matchings and local max cuts.
//!
//! The packing search recurses on an eligible vertex set `E` and a target
//! count. It trims `E` to its 2-core, then branches on `v = min(E)`: either
//! some cycle of the packing runs through `v`, or no vertex of `v`'s twin
//! class is used. Twins (equal open or closed neighbourhoods inside `E`) can
//! be permuted freely, so a cycle only ever takes the lowest members of each
//! twin class. Failed `(E, count)` states are memoised.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PackingStatus {
    Found,
    ExhaustedNone,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePacking {
    pub cycles: Vec<Vec<usize>>,
    pub status: PackingStatus,
}

impl CyclePacking {
    pub fn is_found(&self) -> bool {
        self.status == PackingStatus::Found
    }

    fn none() -> Self {
        CyclePacking { cycles: Vec::new(), status: PackingStatus::ExhaustedNone }
    }
}

/// Checks that `cycle` is a closed walk on `l` distinct vertices of `g`.
pub fn validate_cycle(g: &Graph, cycle: &[usize], l: usize) -> Result<(), String> {
    if cycle.len() != l || l < 3 {
        return Err(format!("cycle has {} vertices, expected {l} >= 3", cycle.len()));
    }
    let mut seen = VertexSet::new();
    for &v in cycle {
        if v >= g.n() {
            return Err(format!("vertex {v} out of range"));
        }
        if seen.contains(v) {
            return Err(format!("vertex {v} repeated"));
        }
        seen.insert(v);
    }
    for i in 0..l {
        let (a, b) = (cycle[i], cycle[(i + 1) % l]);
        if !g.has_edge(a, b) {
            return Err(format!("{a}-{b} is not an edge"));
        }
    }
    Ok(())
}

/// Checks every cycle of a packing and their pairwise disjointness. A
/// `Found` packing must hold exactly `t` cycles.
pub fn validate_packing(g: &Graph, p: &CyclePacking, t: usize, l: usize) -> Result<(), String> {
    let mut used = VertexSet::new();
    for c in &p.cycles {
        validate_cycle(g, c, l)?;
        let s: VertexSet = c.iter().copied().collect();
        if !s.is_disjoint(&used) {
            return Err("cycles overlap".into());
        }
        used |= s;
    }
    match p.status {
        PackingStatus::Found if p.cycles.len() != t => Err(format!("found {} cycles, expected {t}", p.cycles.len())),
        PackingStatus::ExhaustedNone if !p.cycles.is_empty() => Err("exhausted packing carries cycles".into()),
        _ => Ok(()),
    }
}

/// Restricts `e` to its 2-core in `g`.
fn two_core(g: &Graph, mut e: VertexSet) -> VertexSet {
    loop {
        let weak: VertexSet = e.iter().filter(|&u| g.neighbors(u).intersection_len(&e) < 2).collect();
        if weak.is_empty() {
            return e;
        }
        e = e - weak;
    }
}

/// For each member `u` of `e`, the members of its twin class in `g[e]` that
/// are smaller than `u`. Also returns the full class of `min(e)`.
fn twin_structure(g: &Graph, e: &VertexSet) -> (Vec<VertexSet>, VertexSet) {
    let mut open: HashMap<VertexSet, VertexSet> = HashMap::new();
    let mut closed: HashMap<VertexSet, VertexSet> = HashMap::new();
    for u in e.iter() {
        let nb = *g.neighbors(u) & *e;
        open.entry(nb).or_default().insert(u);
        let mut cl = nb;
        cl.insert(u);
        closed.entry(cl).or_default().insert(u);
    }
    let mut lower = vec![VertexSet::new(); g.n()];
    let mut first_class = VertexSet::new();
    let first = e.first();
    for u in e.iter() {
        let nb = *g.neighbors(u) & *e;
        let class = {
            let c = open[&nb];
            if c.len() > 1 {
                c
            } else {
                let mut cl = nb;
                cl.insert(u);
                closed[&cl]
            }
        };
        lower[u] = class.iter().take_while(|&w| w < u).collect();
        if Some(u) == first {
            first_class = class;
        }
    }
    (lower, first_class)
}

/// BFS distances from `src` inside `allowed`; `u32::MAX` when unreachable.
fn distances(g: &Graph, src: usize, allowed: &VertexSet) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.n()];
    dist[src] = 0;
    let mut seen = VertexSet::singleton(src);
    let mut frontier = seen;
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = VertexSet::new();
        for u in frontier.iter() {
            next |= *g.neighbors(u);
        }
        next = (next & *allowed) - seen;
        for u in next.iter() {
            dist[u] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

/// Depth-first enumeration of `l`-cycles extending a fixed prefix inside
/// `allowed`. Each vertex set is reported once.
struct CycleWalk<'a> {
    g: &'a Graph,
    l: usize,
    allowed: VertexSet,
    dist: Vec<u32>,
    lower: Option<&'a [VertexSet]>,
    seen: HashSet<VertexSet>,
    path: Vec<usize>,
}

impl<'a> CycleWalk<'a> {
    fn new(g: &'a Graph, l: usize, prefix: &[usize], allowed: VertexSet, lower: Option<&'a [VertexSet]>) -> Self {
        let dist = distances(g, prefix[0], &allowed);
        CycleWalk { g, l, allowed, dist, lower, seen: HashSet::new(), path: prefix.to_vec() }
    }

    /// Calls `visit` per cycle until it returns `true`.
    fn run(&mut self, visit: &mut dyn FnMut(&[usize], VertexSet) -> bool) -> bool {
        let on: VertexSet = self.path.iter().copied().collect();
        let req = match self.lower {
            Some(lower) => self.path.iter().fold(VertexSet::new(), |acc, &p| acc | lower[p]),
            None => VertexSet::new(),
        };
        self.dfs(on, req, visit)
    }

    fn dfs(&mut self, on: VertexSet, req: VertexSet, visit: &mut dyn FnMut(&[usize], VertexSet) -> bool) -> bool {
        let d = self.path.len();
        let v = self.path[0];
        let last = self.path[d - 1];
        if d == self.l {
            if !self.g.has_edge(last, v) || !(req - on).is_empty() || !self.seen.insert(on) {
                return false;
            }
            return visit(&self.path, on);
        }
        let mut cand = (*self.g.neighbors(last) & self.allowed) - on;
        if d == self.l - 1 {
            cand &= *self.g.neighbors(v);
        }
        let left = self.l - d;
        for w in cand.iter() {
            if self.dist[w] as usize > left {
                continue;
            }
            // fix orientation: the second vertex is below the last one
            if d == self.l - 1 && d >= 2 && self.lower.is_some() && w < self.path[1] {
                continue;
            }
            let next_req = match self.lower {
                Some(lower) => req | lower[w],
                None => req,
            };
            let mut next_on = on;
            next_on.insert(w);
            if (next_req - next_on).len() > left - 1 {
                continue;
            }
            self.path.push(w);
            let stop = self.dfs(next_on, next_req, visit);
            self.path.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

const MEMO_LIMIT: usize = 4_000_000;

struct Packer<'a> {
    g: &'a Graph,
    l: usize,
    failed: HashSet<(VertexSet, usize)>,
}

impl<'a> Packer<'a> {
    fn new(g: &'a Graph, l: usize) -> Self {
        Packer { g, l, failed: HashSet::new() }
    }

    /// Pushes `t` disjoint cycles inside `e` onto `out` if they exist.
    fn pack(&mut self, e: VertexSet, t: usize, out: &mut Vec<Vec<usize>>) -> bool {
        if t == 0 {
            return true;
        }
        let e = two_core(self.g, e);
        if e.len() < t * self.l || self.failed.contains(&(e, t)) {
            return false;
        }
        let v = e.first().expect("non-empty core");
        let (lower, class) = twin_structure(self.g, &e);
        let (g, l) = (self.g, self.l);
        let mut walk = CycleWalk::new(g, l, &[v], e, Some(&lower));
        let mut found: Option<Vec<usize>> = None;
        walk.run(&mut |cycle, set| {
            if self.pack(e - set, t - 1, out) {
                found = Some(cycle.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(c) = found {
            out.push(c);
            return true;
        }
        if self.pack(e - class, t, out) {
            return true;
        }
        if self.failed.len() >= MEMO_LIMIT {
            self.failed.clear();
        }
        self.failed.insert((e, t));
        false
    }
}

/// `t` vertex-disjoint `l`-cycles, or an exhaustive proof that none exist.
/// Cycles are listed in the order the search fixed them (lowest start first).
pub fn find_disjoint_cycles(g: &Graph, t: usize, l: usize) -> CyclePacking {
    find_disjoint_cycles_within(g, &g.vertices(), t, l)
}

/// As [`find_disjoint_cycles`], restricted to the vertices of `allowed`.
pub fn find_disjoint_cycles_within(g: &Graph, allowed: &VertexSet, t: usize, l: usize) -> CyclePacking {
    if t == 0 {
        return CyclePacking { cycles: Vec::new(), status: PackingStatus::Found };
    }
    if l < 3 {
        return CyclePacking::none();
    }
    let mut out = Vec::new();
    if Packer::new(g, l).pack(*allowed & g.vertices(), t, &mut out) {
        out.reverse();
        let p = CyclePacking { cycles: out, status: PackingStatus::Found };
        debug_assert_eq!(validate_packing(g, &p, t, l), Ok(()));
        p
    } else {
        CyclePacking::none()
    }
}

pub fn find_cycle(g: &Graph, l: usize) -> Option<Vec<usize>> {
    find_disjoint_cycles(g, 1, l).cycles.pop()
}

/// True when `g` has no `t` vertex-disjoint `l`-cycles.
pub fn is_free(g: &Graph, t: usize, l: usize) -> bool {
    !find_disjoint_cycles(g, t, l).is_found()
}

/// `t` disjoint `l`-cycles of which one uses the edge `ab` (which must be
/// present in `g`). Used to test whether adding `ab` to a free graph breaks
/// freeness without re-proving the rest.
pub fn packing_through_edge(g: &Graph, t: usize, l: usize, a: usize, b: usize) -> Option<Vec<Vec<usize>>> {
    if t == 0 || l < 3 || !g.has_edge(a, b) {
        return None;
    }
    let mut packer = Packer::new(g, l);
    let mut walk = CycleWalk::new(g, l, &[a, b], g.vertices(), None);
    let mut result = None;
    walk.run(&mut |cycle, set| {
        let mut rest = Vec::new();
        if packer.pack(g.vertices() - set, t - 1, &mut rest) {
            rest.reverse();
            let mut all = vec![cycle.to_vec()];
            all.extend(rest);
            result = Some(all);
            true
        } else {
            false
        }
    });
    result
}

/// A path on `l` vertices, or `None` after exhaustive search.
pub fn find_path(g: &Graph, l: usize) -> Option<Vec<usize>> {
    if l == 0 {
        return Some(Vec::new());
    }
    fn extend(g: &Graph, l: usize, path: &mut Vec<usize>, on: VertexSet) -> bool {
        if path.len() == l {
            return l == 1 || path[0] < path[l - 1];
        }
        let last = *path.last().expect("non-empty");
        for w in (*g.neighbors(last) - on).iter() {
            let mut next = on;
            next.insert(w);
            path.push(w);
            if extend(g, l, path, next) {
                return true;
            }
            path.pop();
        }
        false
    }
    for comp in g.components() {
        if comp.len() < l {
            continue;
        }
        for s in comp.iter() {
            let mut path = vec![s];
            if extend(g, l, &mut path, VertexSet::singleton(s)) {
                return Some(path);
            }
        }
    }
    None
}

/// Exact matching number by branch and bound.
///
/// Vertices of degree at most one are resolved greedily; otherwise the search
/// branches on a minimum-degree vertex: leave it unmatched, or match it to
/// each neighbour in turn. A branch is cut when even a perfect matching of
/// the remaining non-isolated vertices cannot beat the incumbent.
pub fn matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, mut alive: VertexSet, mut size: usize, best: &mut usize) {
        loop {
            let mut forced = false;
            for u in alive.iter() {
                if !alive.contains(u) {
                    continue;
                }
                let nb = *g.neighbors(u) & alive;
                match nb.len() {
                    0 => alive.remove(u),
                    1 => {
                        alive.remove(u);
                        alive.remove(nb.first().expect("one neighbour"));
                        size += 1;
                    }
                    _ => continue,
                }
                forced = true;
            }
            if !forced {
                break;
            }
        }
        *best = (*best).max(size);
        if alive.is_empty() || size + alive.len() / 2 <= *best {
            return;
        }
        let u = alive
            .iter()
            .min_by_key(|&u| g.neighbors(u).intersection_len(&alive))
            .expect("non-empty");
        for w in (*g.neighbors(u) & alive).iter() {
            let mut rest = alive;
            rest.remove(u);
            rest.remove(w);
            go(g, rest, size + 1, best);
        }
        let mut rest = alive;
        rest.remove(u);
        if size + rest.len() / 2 > *best {
            go(g, rest, size, best);
        }
    }
    let mut best = 0;
    go(g, g.vertices(), 0, &mut best);
    best
}

/// Bipartition that no single vertex move improves, starting from the
/// even/odd split and applying first-improvement moves in index order.
pub fn local_max_cut(g: &Graph) -> (VertexSet, VertexSet) {
    let mut a: VertexSet = (0..g.n()).filter(|v| v % 2 == 0).collect();
    let mut b = g.vertices() - a;
    loop {
        let mut moved = false;
        for u in 0..g.n() {
            let (own, other) = if a.contains(u) { (&mut a, &mut b) } else { (&mut b, &mut a) };
            if g.neighbors(u).intersection_len(own) > g.neighbors(u).intersection_len(other) {
                own.remove(u);
                other.insert(u);
                moved = true;
            }
        }
        if !moved {
            return (a, b);
        }
    }
}

/// `sum_v d(v)^p`.
pub fn degree_power_sum(g: &Graph, p: u32) -> u128 {
    g.degrees().into_iter().map(|d| (d as u128).pow(p)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{disjoint_cycles, erdos_moon_graph, join, s_graph, turan_graph, union};
    use crate::SVariant;
    use rand::{Rng, SeedableRng};

    fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    g.insert_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Vertex sets that carry an `l`-cycle, found by trying every ordering.
    fn naive_cycle_sets(g: &Graph, l: usize) -> Vec<u32> {
        fn perms(items: &mut Vec<usize>, k: usize, g: &Graph, l: usize) -> bool {
            if k == items.len() {
                return (0..l).all(|i| g.has_edge(items[i], items[(i + 1) % l]));
            }
            for i in k..items.len() {
                items.swap(k, i);
                if perms(items, k + 1, g, l) {
                    return true;
                }
                items.swap(k, i);
            }
            false
        }
        let n = g.n();
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == l)
            .filter(|&m| {
                let mut items: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                perms(&mut items, 0, g, l)
            })
            .collect()
    }

    fn naive_packs(sets: &[u32], t: usize, used: u32) -> bool {
        if t == 0 {
            return true;
        }
        sets.iter().any(|&s| s & used == 0 && naive_packs(sets, t - 1, used | s))
    }

    #[test]
    fn find_cycle_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let c = find_cycle(&c5, 5).unwrap();
        assert_eq!(validate_cycle(&c5, &c, 5), Ok(()));
        assert_eq!(find_cycle(&c5, 4), None);
        let g = join(&Graph::empty(1).unwrap(), &turan_graph(9, 2).unwrap()).unwrap();
        let c = find_cycle(&g, 7).unwrap();
        assert_eq!(validate_cycle(&g, &c, 7), Ok(()));
        assert_eq!(find_cycle(&turan_graph(9, 2).unwrap(), 7), None);
        assert_eq!(find_cycle(&Graph::complete(5).unwrap(), 2), None);
    }

    #[test]
    fn packing_examples() {
        let two_c4 = disjoint_cycles(2, 4).unwrap();
        let p = find_disjoint_cycles(&two_c4, 2, 4);
        assert!(p.is_found());
        assert_eq!(validate_packing(&two_c4, &p, 2, 4), Ok(()));

        let spp = s_graph(12, 3, SVariant::PlusPlus).unwrap();
        assert_eq!(find_disjoint_cycles(&spp, 2, 4).status, PackingStatus::ExhaustedNone);

        let k8 = Graph::complete(8).unwrap();
        let p = find_disjoint_cycles(&k8, 2, 4);
        assert!(p.is_found());
        assert_eq!(validate_packing(&k8, &p, 2, 4), Ok(()));
        assert!(find_disjoint_cycles(&k8, 0, 4).is_found());
    }

    #[test]
    fn is_free_examples() {
        assert!(is_free(&s_graph(20, 3, SVariant::Plus).unwrap(), 2, 4));
        let g = join(&Graph::empty(1).unwrap(), &turan_graph(9, 2).unwrap()).unwrap();
        assert!(is_free(&g, 2, 3));
        assert!(!is_free(&Graph::complete(9).unwrap(), 2, 3));
        // S_{n,2t-1}^{++} is tC_4-free, S_{n,lt-1}^+ is tC_{2l}-free
        assert!(is_free(&s_graph(30, 3, SVariant::PlusPlus).unwrap(), 2, 4));
        assert!(is_free(&s_graph(40, 5, SVariant::Plus).unwrap(), 2, 6));
        assert!(is_free(&erdos_moon_graph(40, 3).unwrap(), 3, 7));
        // one more clique vertex breaks it
        assert!(!is_free(&s_graph(30, 4, SVariant::Plain).unwrap(), 2, 4));
    }

    #[test]
    fn agrees_with_naive_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..150 {
            let n = rng.random_range(3..=7);
            let g = random_graph(n, rng.random_range(0.2..0.95), &mut rng);
            for l in 3..=n {
                let sets = naive_cycle_sets(&g, l);
                for t in 1..=2 {
                    let expect = naive_packs(&sets, t, 0);
                    let p = find_disjoint_cycles(&g, t, l);
                    assert_eq!(p.is_found(), expect, "{g:?} t={t} l={l}");
                    assert_eq!(validate_packing(&g, &p, t, l), Ok(()));
                    assert_eq!(is_free(&g, t, l), !expect);
                }
            }
        }
    }

    #[test]
    fn agrees_with_naive_oracle_on_twin_heavy_graphs() {
        // joins of small cliques and independent sets exercise both twin kinds
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let a = rng.random_range(1..=3);
            let b = rng.random_range(1..=4);
            let base = join(&Graph::complete(a).unwrap(), &Graph::empty(b).unwrap()).unwrap();
            let mut g = union(&base, &Graph::empty(7 - a - b).unwrap()).unwrap();
            for _ in 0..rng.random_range(0..4) {
                let (u, v) = (rng.random_range(0..7), rng.random_range(0..7));
                if u != v {
                    g.insert_edge(u, v).unwrap();
                }
            }
            let perm: Vec<usize> = {
                let mut p: Vec<usize> = (0..7).collect();
                for i in (1..7).rev() {
                    p.swap(i, rng.random_range(0..=i));
                }
                p
            };
            let g = g.relabel(&perm);
            for l in 3..=6 {
                let sets = naive_cycle_sets(&g, l);
                for t in 1..=2 {
                    assert_eq!(find_disjoint_cycles(&g, t, l).is_found(), naive_packs(&sets, t, 0), "{g:?} t={t} l={l}");
                }
            }
        }
    }

    #[test]
    fn packing_through_edge_matches_full_search() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..60 {
            let g = random_graph(8, 0.45, &mut rng);
            for l in [3usize, 4] {
                if !is_free(&g, 2, l) {
                    continue;
                }
                for (a, b) in g.non_edges().collect::<Vec<_>>() {
                    let h = g.add_edge(a, b).unwrap();
                    let via = packing_through_edge(&h, 2, l, a, b);
                    assert_eq!(via.is_some(), !is_free(&h, 2, l));
                    if let Some(cs) = via {
                        let p = CyclePacking { cycles: cs, status: PackingStatus::Found };
                        assert_eq!(validate_packing(&h, &p, 2, l), Ok(()));
                    }
                }
            }
        }
    }

    #[test]
    fn find_path_examples() {
        let two_k3 = disjoint_cycles(2, 3).unwrap();
        assert_eq!(find_path(&two_k3, 4), None);
        assert!(find_path(&two_k3, 3).is_some());
        let c4 = Graph::cycle(4).unwrap();
        let p = find_path(&c4, 4).unwrap();
        assert!(p.windows(2).all(|w| c4.has_edge(w[0], w[1])));
        // leaf a - leaf b - centre - leaf c - leaf d uses two matching edges
        let spp = s_graph(10, 1, SVariant::PlusPlus).unwrap();
        let p = find_path(&spp, 5).unwrap();
        assert_eq!(p.len(), 5);
        assert!(p.windows(2).all(|w| spp.has_edge(w[0], w[1])));
        assert_eq!(find_path(&spp, 6), None);
        assert_eq!(find_path(&Graph::empty(3).unwrap(), 1), Some(vec![0]));
    }

    #[test]
    fn matching_examples() {
        assert_eq!(matching_number(&Graph::path(4).unwrap()), 2);
        assert_eq!(matching_number(&Graph::complete(5).unwrap()), 2);
        let spp = s_graph(12, 3, SVariant::PlusPlus).unwrap();
        let indep = spp.induced_subgraph(&(spp.vertices() - crate::constructions::s_clique(3))).unwrap();
        assert_eq!(matching_number(&indep), 4);
        assert_eq!(matching_number(&Graph::empty(4).unwrap()), 0);
        assert_eq!(matching_number(&Graph::complete(40).unwrap()), 20);
    }

    #[test]
    fn matching_agrees_with_brute_force() {
        fn brute(g: &Graph) -> usize {
            let edges: Vec<_> = g.edges().collect();
            fn go(edges: &[(usize, usize)], used: u32) -> usize {
                match edges.split_first() {
                    None => 0,
                    Some((&(u, v), rest)) => {
                        let skip = go(rest, used);
                        if used >> u & 1 == 0 && used >> v & 1 == 0 {
                            skip.max(1 + go(rest, used | 1 << u | 1 << v))
                        } else {
                            skip
                        }
                    }
                }
            }
            go(&edges, 0)
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let n = rng.random_range(1..=9);
            let g = random_graph(n, rng.random_range(0.05..0.8), &mut rng);
            assert_eq!(matching_number(&g), brute(&g), "{g:?}");
        }
    }

    #[test]
    fn max_cut_examples() {
        let k54 = turan_graph(9, 2).unwrap();
        let (a, b) = local_max_cut(&k54);
        assert_eq!(k54.e_between(&a, &b).unwrap(), 20);
        let c5 = Graph::cycle(5).unwrap();
        let (a, b) = local_max_cut(&c5);
        assert_eq!(c5.e_between(&a, &b).unwrap(), 4);
        let k4 = Graph::complete(4).unwrap();
        let (a, b) = local_max_cut(&k4);
        assert_eq!(k4.e_between(&a, &b).unwrap(), 4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let g = random_graph(30, 0.4, &mut rng);
            let (a, b) = local_max_cut(&g);
            assert_eq!((a | b), g.vertices());
            for u in 0..30 {
                let (own, other) = if a.contains(u) { (&a, &b) } else { (&b, &a) };
                assert!(g.neighbors(u).intersection_len(other) >= g.neighbors(u).intersection_len(own));
            }
        }
    }

    #[test]
    fn degree_power_examples() {
        assert_eq!(degree_power_sum(&Graph::complete(4).unwrap(), 2), 36);
        assert_eq!(degree_power_sum(&Graph::cycle(6).unwrap(), 2), 24);
        let g = s_graph(30, 5, SVariant::Plus).unwrap();
        assert!(degree_power_sum(&g, 2) < 9000);
        assert_eq!(degree_power_sum(&g, 1), 2 * g.edge_count() as u128);
    }
}
