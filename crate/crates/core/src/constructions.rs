//! The named graph families: Turán graphs, `K_{t-1} + T_{n-t+1,2}`, the
//! clique-plus-independent-set graphs `S_{n,l}` with their `+`/`++`
//! variants, and disjoint unions of cycles.
//!
//! Layouts are fixed so encodings are reproducible: clique vertices come
//! first, then the remaining vertices in ascending order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{FamilyError, GraphError};
use crate::graph::{Graph, VertexSet};

/// Which edges sit inside the independent part of `S_{n,l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SVariant {
    Plain,
    Plus,
    PlusPlus,
}

/// A parameterised family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyParams {
    /// `T_{n,r}`.
    Turan { n: usize, r: usize },
    /// `K_{t-1} + T_{n-t+1,2}`.
    ErdosMoon { n: usize, t: usize },
    /// `S_{n,l}`, `S_{n,l}^+` or `S_{n,l}^{++}`.
    S { n: usize, l: usize, variant: SVariant },
    /// `t C_l`.
    DisjointCycles { t: usize, l: usize },
    CompleteMultipartite { parts: Vec<usize> },
}

impl FamilyParams {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            FamilyParams::Turan { n, r } => turan_graph(n, r),
            FamilyParams::ErdosMoon { n, t } => erdos_moon_graph(n, t),
            FamilyParams::S { n, l, variant } => s_graph(n, l, variant),
            FamilyParams::DisjointCycles { t, l } => disjoint_cycles(t, l),
            FamilyParams::CompleteMultipartite { ref parts } => complete_multipartite(parts),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilyParams::Turan { n, .. } | FamilyParams::ErdosMoon { n, .. } | FamilyParams::S { n, .. } => n,
            FamilyParams::DisjointCycles { t, l } => t * l,
            FamilyParams::CompleteMultipartite { ref parts } => parts.iter().sum(),
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::Turan { n, r } => write!(f, "turan:n={n},r={r}"),
            FamilyParams::ErdosMoon { n, t } => write!(f, "erdos-moon:n={n},t={t}"),
            FamilyParams::S { n, l, variant } => {
                let tag = match variant {
                    SVariant::Plain => "s",
                    SVariant::Plus => "s+",
                    SVariant::PlusPlus => "s++",
                };
                write!(f, "{tag}:n={n},l={l}")
            }
            FamilyParams::DisjointCycles { t, l } => write!(f, "cycles:t={t},l={l}"),
            FamilyParams::CompleteMultipartite { parts } => {
                let p: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "multipartite:parts={}", p.join("/"))
            }
        }
    }
}

impl FromStr for FamilyParams {
    type Err = FamilyError;

    /// Parses strings such as `erdos-moon:n=10,t=2`, `s++:n=12,l=3`,
    /// `turan:n=9,r=2`, `cycles:t=2,l=4`, `multipartite:parts=3/2/2` or
    /// `complete:n=5`.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let s = s.trim();
        let (tag, rest) = s.split_once(':').ok_or_else(|| FamilyError::Parse(s.to_string()))?;
        let mut kv: BTreeMap<&str, &str> = BTreeMap::new();
        for item in rest.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| FamilyError::Parse(s.to_string()))?;
            kv.insert(k.trim(), v.trim());
        }
        let num = |key: &'static str| -> Result<usize, FamilyError> {
            kv.get(key)
                .ok_or(FamilyError::MissingParam(key))?
                .parse()
                .map_err(|_| FamilyError::Parse(s.to_string()))
        };
        let l_or_ell = || if kv.contains_key("ell") { num("ell") } else { num("l") };
        let fam = match tag.trim().to_ascii_lowercase().as_str() {
            "turan" | "t" => FamilyParams::Turan { n: num("n")?, r: num("r")? },
            "erdos-moon" | "em" => FamilyParams::ErdosMoon { n: num("n")?, t: num("t")? },
            "s" => FamilyParams::S { n: num("n")?, l: l_or_ell()?, variant: SVariant::Plain },
            "s+" => FamilyParams::S { n: num("n")?, l: l_or_ell()?, variant: SVariant::Plus },
            "s++" => FamilyParams::S { n: num("n")?, l: l_or_ell()?, variant: SVariant::PlusPlus },
            "cycles" => FamilyParams::DisjointCycles { t: num("t")?, l: l_or_ell()? },
            "multipartite" => {
                let parts = kv
                    .get("parts")
                    .ok_or(FamilyError::MissingParam("parts"))?
                    .split('/')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| FamilyError::Parse(s.to_string()))?;
                FamilyParams::CompleteMultipartite { parts }
            }
            "complete" => FamilyParams::CompleteMultipartite { parts: vec![1; num("n")?] },
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        Ok(fam)
    }
}

fn infeasible(msg: String) -> GraphError {
    GraphError::Infeasible(msg)
}

/// `T_{n,r}`: vertex `i` lies in part `i mod r`.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph, GraphError> {
    if r == 0 {
        return Err(infeasible("Turán graph needs r >= 1".into()));
    }
    if r > n {
        return Err(infeasible(format!("Turán graph T_{{{n},{r}}} needs r <= n")));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            if u % r != v % r {
                g.insert_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Complete multipartite graph with consecutive blocks of the given sizes.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let n = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                g.insert_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Disjoint union; vertices of `b` are shifted up by `|a|`.
pub fn union(a: &Graph, b: &Graph) -> Result<Graph, GraphError> {
    let off = a.n();
    let mut g = Graph::empty(off + b.n())?;
    for (u, v) in a.edges() {
        g.insert_edge(u, v)?;
    }
    for (u, v) in b.edges() {
        g.insert_edge(u + off, v + off)?;
    }
    Ok(g)
}

/// `a + b`: the union plus every edge between the two vertex sets.
pub fn join(a: &Graph, b: &Graph) -> Result<Graph, GraphError> {
    let mut g = union(a, b)?;
    for u in 0..a.n() {
        for v in 0..b.n() {
            g.insert_edge(u, a.n() + v)?;
        }
    }
    Ok(g)
}

/// `K_{t-1} + T_{n-t+1,2}`, the clique on vertices `0..t-1`.
pub fn erdos_moon_graph(n: usize, t: usize) -> Result<Graph, GraphError> {
    if t == 0 || n < t {
        return Err(infeasible(format!("K_{{t-1}} + T_{{n-t+1,2}} needs n >= t >= 1 (n={n}, t={t})")));
    }
    let clique = Graph::complete(t - 1)?;
    let m = n - t + 1;
    let side = if m >= 2 { turan_graph(m, 2)? } else { Graph::empty(m)? };
    join(&clique, &side)
}

/// `S_{n,l}` and its variants. The clique is `0..l`; the `+` edge joins
/// `l` and `l+1`; the `++` matching pairs `l+2k` with `l+2k+1`.
pub fn s_graph(n: usize, l: usize, variant: SVariant) -> Result<Graph, GraphError> {
    let need = if variant == SVariant::Plus { l + 2 } else { l + 1 };
    if l == 0 || n < need {
        return Err(infeasible(format!("S_{{n,l}} variant {variant:?} needs l >= 1 and n >= {need} (n={n}, l={l})")));
    }
    let mut g = join(&Graph::complete(l)?, &Graph::empty(n - l)?)?;
    match variant {
        SVariant::Plain => {}
        SVariant::Plus => g.insert_edge(l, l + 1)?,
        SVariant::PlusPlus => {
            for k in 0..(n - l) / 2 {
                g.insert_edge(l + 2 * k, l + 2 * k + 1)?;
            }
        }
    }
    Ok(g)
}

/// `t C_l`; cycle `i` occupies vertices `i*l .. (i+1)*l`.
pub fn disjoint_cycles(t: usize, l: usize) -> Result<Graph, GraphError> {
    if l < 3 {
        return Err(infeasible(format!("cycles need length >= 3, got {l}")));
    }
    if t == 0 {
        return Err(infeasible("need t >= 1 cycles".into()));
    }
    let mut g = Graph::empty(t * l)?;
    for i in 0..t {
        for j in 0..l {
            g.insert_edge(i * l + j, i * l + (j + 1) % l)?;
        }
    }
    Ok(g)
}

/// The dominating vertices of `S_{n,l}` in the fixed layout.
pub fn s_clique(l: usize) -> VertexSet {
    VertexSet::full(l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> Graph {
        Graph::cycle(n).unwrap()
    }

    #[test]
    fn turan_examples() {
        let g = turan_graph(10, 2).unwrap();
        assert_eq!(g.edge_count(), 25);
        assert_eq!((g.min_degree(), g.max_degree()), (5, 5));
        let g = turan_graph(9, 2).unwrap();
        assert_eq!(g.edge_count(), 20);
        assert_eq!(turan_graph(7, 3).unwrap().edge_count(), 16);
        assert!(turan_graph(5, 0).is_err());
        assert_eq!(turan_graph(4, 4).unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn turan_matches_multipartite_blocks() {
        let a = turan_graph(7, 3).unwrap();
        let b = complete_multipartite(&[3, 2, 2]).unwrap();
        assert_eq!(a.edge_count(), b.edge_count());
        let mut da = a.degrees();
        let mut db = b.degrees();
        da.sort();
        db.sort();
        assert_eq!(da, db);
    }

    #[test]
    fn join_and_union_examples() {
        let k1 = Graph::empty(1).unwrap();
        let t92 = turan_graph(9, 2).unwrap();
        let j = join(&k1, &t92).unwrap();
        assert_eq!(j.edge_count(), 29);
        assert_eq!(j.degree(0), 9);

        let u = union(&c(3), &c(3)).unwrap();
        assert_eq!((u.n(), u.edge_count()), (6, 6));
        assert_eq!(u, disjoint_cycles(2, 3).unwrap());

        let e2 = Graph::empty(2).unwrap();
        let c4 = join(&e2, &e2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.degrees(), vec![2; 4]);
        assert!(join(&Graph::empty(300).unwrap(), &Graph::empty(300).unwrap()).is_err());
    }

    #[test]
    fn erdos_moon_examples() {
        assert_eq!(erdos_moon_graph(10, 2).unwrap().edge_count(), 29);
        assert_eq!(erdos_moon_graph(14, 3).unwrap().edge_count(), 61);
        assert_eq!(erdos_moon_graph(11, 1).unwrap(), turan_graph(11, 2).unwrap());
        assert!(erdos_moon_graph(3, 4).is_err());
        let g = erdos_moon_graph(12, 4).unwrap();
        for v in 0..3 {
            assert_eq!(g.degree(v), 11);
        }
    }

    #[test]
    fn erdos_moon_edge_identity() {
        for n in 1..=200usize {
            for t in 1..=n.min(40) {
                let m = n - t + 1;
                let expect = (t - 1) * (t.saturating_sub(2)) / 2 + (t - 1) * m + m * m / 4;
                assert_eq!(erdos_moon_graph(n, t).unwrap().edge_count(), expect, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn s_graph_examples() {
        assert_eq!(s_graph(10, 2, SVariant::Plain).unwrap().edge_count(), 17);
        assert_eq!(s_graph(10, 2, SVariant::Plus).unwrap().edge_count(), 18);
        assert_eq!(s_graph(12, 3, SVariant::PlusPlus).unwrap().edge_count(), 34);
        assert!(s_graph(3, 2, SVariant::Plus).is_err());
        assert!(s_graph(3, 2, SVariant::Plain).is_ok());
        assert!(s_graph(2, 2, SVariant::Plain).is_err());
    }

    #[test]
    fn s_graph_degrees() {
        for (n, l) in [(10, 2), (13, 4), (30, 5)] {
            for variant in [SVariant::Plain, SVariant::Plus, SVariant::PlusPlus] {
                let g = s_graph(n, l, variant).unwrap();
                for v in 0..l {
                    assert_eq!(g.degree(v), n - 1);
                }
                for v in l..n {
                    let d = g.degree(v);
                    match variant {
                        SVariant::Plain => assert_eq!(d, l),
                        _ => assert!(d == l || d == l + 1),
                    }
                }
            }
        }
    }

    #[test]
    fn disjoint_cycles_examples() {
        assert_eq!(disjoint_cycles(1, 3).unwrap(), c(3));
        let g = disjoint_cycles(2, 4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 8));
        let g = disjoint_cycles(3, 5).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.components().len()), (15, 15, 3));
        assert!(disjoint_cycles(2, 2).is_err());
    }

    #[test]
    fn family_strings() {
        let f: FamilyParams = "erdos-moon:n=10,t=2".parse().unwrap();
        assert_eq!(f, FamilyParams::ErdosMoon { n: 10, t: 2 });
        let f: FamilyParams = "s++:n=12,l=3".parse().unwrap();
        assert_eq!(f.build().unwrap().edge_count(), 34);
        assert_eq!(f.to_string(), "s++:n=12,l=3");
        for s in ["turan:n=9,r=2", "s+:n=30,l=5", "cycles:t=2,l=4", "multipartite:parts=3/2/2", "s:n=10,l=2"] {
            let f: FamilyParams = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
            assert_eq!(f.build().unwrap().n(), f.vertex_count());
        }
        assert_eq!("complete:n=4".parse::<FamilyParams>().unwrap().build().unwrap(), Graph::complete(4).unwrap());
        assert!(matches!("foo:n=3".parse::<FamilyParams>(), Err(FamilyError::UnknownFamily(_))));
        assert!(matches!("s:n=3".parse::<FamilyParams>(), Err(FamilyError::MissingParam("l"))));
        assert!(matches!("s+n=3".parse::<FamilyParams>(), Err(FamilyError::Parse(_))));
    }

    #[test]
    fn family_serde() {
        let f = FamilyParams::S { n: 12, l: 3, variant: SVariant::PlusPlus };
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(js, r#"{"family":"s","n":12,"l":3,"variant":"plusplus"}"#);
        assert_eq!(serde_json::from_str::<FamilyParams>(&js).unwrap(), f);
    }
}
