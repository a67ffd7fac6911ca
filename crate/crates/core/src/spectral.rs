//! Perron roots and vectors of adjacency matrices.
//!
//! Dense graphs go through a shifted power iteration `x <- (A + I) x`, which
//! keeps the dominant eigenvalue isolated even for bipartite graphs where
//! `-rho` is also an eigenvalue. Structured families of any size go through
//! the symmetrised quotient matrix of their equitable partition.

use serde::{Deserialize, Serialize};

use crate::constructions::{erdos_moon_graph, s_graph, FamilyParams, SVariant};
use crate::error::SpectralError;
use crate::graph::{Graph, VertexSet, CAPACITY};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;
/// Slack applied to every spectral inequality check.
pub const CHECK_SLACK: f64 = 1e-8;

const SHIFT: f64 = 1.0;
const STALL_WINDOW: usize = 5_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Unit Perron vector, zero outside `component` when the graph is
    /// disconnected.
    pub vector: Vec<f64>,
    /// `||A x - rho x||_2`. Iteration stops once this is at most
    /// `tol * max(1, rho)`.
    pub residual: f64,
    pub iterations: usize,
    pub tol: f64,
    /// Vertices of the component that attains `rho`, reported only for
    /// disconnected input.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub component: Option<Vec<usize>>,
}

fn check_tol(tol: f64) -> Result<(), SpectralError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(SpectralError::BadTolerance(tol))
    }
}

/// Power iteration on the component `members` (listed ascending) of `adj`,
/// starting from `start` (indexed by vertex).
fn iterate(
    adj: &[Vec<u32>],
    members: &[usize],
    start: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<(f64, Vec<f64>, f64, usize), SpectralError> {
    let n = adj.len();
    let mut x = vec![0.0; n];
    let mut norm = 0.0;
    for &v in members {
        x[v] = start[v].abs().max(1e-300);
        norm += x[v] * x[v];
    }
    let norm = norm.sqrt();
    for &v in members {
        x[v] /= norm;
    }
    if members.len() == 1 {
        return Ok((0.0, x, 0.0, 0));
    }
    let mut y = vec![0.0; n];
    let mut best = f64::INFINITY;
    let mut best_at = 0;
    let mut residual = f64::INFINITY;
    for it in 1..=max_iter {
        let mut rho = 0.0;
        for &u in members {
            let s: f64 = adj[u].iter().map(|&w| x[w as usize]).sum();
            y[u] = s;
            rho += x[u] * s;
        }
        let mut r2 = 0.0;
        for &u in members {
            let d = y[u] - rho * x[u];
            r2 += d * d;
        }
        residual = r2.sqrt();
        if residual <= tol * rho.max(1.0) {
            return Ok((rho, x, residual, it));
        }
        if residual < 0.5 * best {
            best = residual;
            best_at = it;
        } else if it - best_at > STALL_WINDOW {
            break;
        }
        let mut nrm = 0.0;
        for &u in members {
            let z = y[u] + SHIFT * x[u];
            y[u] = z;
            nrm += z * z;
        }
        let nrm = nrm.sqrt();
        for &u in members {
            x[u] = y[u] / nrm;
        }
    }
    Err(SpectralError::NotConverged {
        iterations: max_iter.min(best_at + STALL_WINDOW + 1),
        residual,
    })
}

/// Perron root and vector with the all-ones start.
///
/// Disconnected graphs are solved per component and the component with the
/// largest root (lowest first vertex on ties) is reported.
pub fn perron(g: &Graph, tol: f64, max_iter: usize) -> Result<SpectralResult, SpectralError> {
    perron_from(g, &vec![1.0; g.n()], tol, max_iter)
}

pub fn perron_default(g: &Graph) -> Result<SpectralResult, SpectralError> {
    perron(g, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

/// As [`perron`], but starting from `start` (absolute values are used, so a
/// previous Perron vector is a valid warm start).
pub fn perron_from(g: &Graph, start: &[f64], tol: f64, max_iter: usize) -> Result<SpectralResult, SpectralError> {
    check_tol(tol)?;
    if g.n() == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    assert_eq!(start.len(), g.n(), "start vector length");
    let adj = g.adjacency_lists();
    let comps = g.components();
    let mut best: Option<(f64, Vec<f64>, f64, usize, usize)> = None;
    let mut total_iters = 0;
    for (ci, comp) in comps.iter().enumerate() {
        let members: Vec<usize> = comp.iter().collect();
        // a component cannot beat the current best if its max degree is below it
        if let Some((rho, ..)) = &best {
            let dmax = members.iter().map(|&v| adj[v].len()).max().unwrap_or(0) as f64;
            if dmax <= *rho {
                continue;
            }
        }
        let (rho, x, res, it) = iterate(&adj, &members, start, tol, max_iter)?;
        total_iters += it;
        if best.as_ref().is_none_or(|b| rho > b.0) {
            best = Some((rho, x, res, it, ci));
        }
    }
    let (rho, vector, residual, _, ci) = best.expect("at least one component");
    let component = (comps.len() > 1).then(|| comps[ci].iter().collect());
    Ok(SpectralResult {
        rho,
        vector,
        residual,
        iterations: total_iters,
        tol,
        component,
    })
}

/// `rho(S_{n,l}) = (l - 1 + sqrt((l-1)^2 + 4 l (n - l))) / 2`.
pub fn rho_s_closed_form(n: usize, l: usize) -> Result<f64, SpectralError> {
    if l == 0 || n <= l {
        return Err(SpectralError::Graph(crate::error::GraphError::Infeasible(format!(
            "closed form needs n > l >= 1 (n={n}, l={l})"
        ))));
    }
    let (n, l) = (n as f64, l as f64);
    Ok((l - 1.0 + ((l - 1.0).powi(2) + 4.0 * l * (n - l)).sqrt()) / 2.0)
}

/// `sqrt((l + 1/(4l)) n)`, the upper bound on `rho(S_{n,l}^{++})` for large `n`.
pub fn rho_spp_upper_bound(n: usize, l: usize) -> f64 {
    let (n, l) = (n as f64, l as f64);
    ((l + 1.0 / (4.0 * l)) * n).sqrt()
}

/// Whether `rho_spp_upper_bound(n, l)` is implied at this `n` by the
/// two-cell eigenvector argument: with `B` the bound, `(B-l+1)(B-1) >= (n-l)l`
/// and `B >= l/2`, so `B` dominates the largest root of that quadratic.
pub fn spp_upper_bound_applicable(n: usize, l: usize) -> bool {
    let b = rho_spp_upper_bound(n, l);
    let (nf, lf) = (n as f64, l as f64);
    b >= lf / 2.0 && (b - lf + 1.0) * (b - 1.0) >= (nf - lf) * lf
}

/// Whether `sqrt(l n) <= rho(S_{n,l})` follows from the closed form, i.e.
/// `l >= 2` and `n (l-1)^2 >= l^3`.
pub fn s_lower_bound_applicable(n: usize, l: usize) -> bool {
    l >= 2 && (n as u128) * ((l - 1) as u128).pow(2) >= (l as u128).pow(3)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// `rho(H) >= rho(K_1 + H) - |H| / rho(K_1 + H)`.
pub fn check_deletion_inequality(h: &Graph) -> Result<InequalityCheck, SpectralError> {
    if h.n() == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let lhs = perron_default(h)?.rho;
    let joined = crate::constructions::join(&Graph::empty(1)?, h)?;
    let top = perron_default(&joined)?.rho;
    let rhs = top - h.n() as f64 / top;
    Ok(InequalityCheck {
        lhs,
        rhs,
        holds: lhs >= rhs - CHECK_SLACK,
    })
}

/// `n/2 + (t-1) - t^2/(2n)`.
pub fn dense_lower_bound(n: usize, t: usize) -> f64 {
    let (n, t) = (n as f64, t as f64);
    n / 2.0 + (t - 1.0) - t * t / (2.0 * n)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound: f64,
    pub rho: f64,
    pub holds: bool,
}

/// Compares `rho(K_{t-1} + T_{n-t+1,2})` with [`dense_lower_bound`].
pub fn check_dense_lower_bound(n: usize, t: usize) -> Result<BoundCheck, SpectralError> {
    if t == 0 || n < t {
        return Err(crate::error::GraphError::Infeasible(format!("need n >= t >= 1 (n={n}, t={t})")).into());
    }
    let bound = dense_lower_bound(n, t);
    let rho = if n <= CAPACITY {
        perron_default(&erdos_moon_graph(n, t)?)?.rho
    } else {
        implicit_family_perron(&FamilyParams::ErdosMoon { n, t })?.rho
    };
    Ok(BoundCheck {
        bound,
        rho,
        holds: rho >= bound - CHECK_SLACK,
    })
}

/// A cell of an equitable partition: its size and the number of neighbours
/// each member has in every cell.
struct Cell {
    size: usize,
    row: Vec<usize>,
}

fn equitable_cells(params: &FamilyParams) -> Result<Vec<Cell>, SpectralError> {
    let unsupported = |why: &str| SpectralError::UnsupportedFamily(format!("{params}: {why}"));
    let cells = match *params {
        FamilyParams::Turan { n, r } => {
            if r == 0 || r > n {
                return Err(unsupported("needs 1 <= r <= n"));
            }
            let (q, rem) = (n / r, n % r);
            // big parts (size q+1) and small parts (size q)
            vec![
                Cell { size: rem * (q + 1), row: vec![(rem.max(1) - 1) * (q + 1), (r - rem) * q] },
                Cell { size: (r - rem) * q, row: vec![rem * (q + 1), (r - rem).max(1).saturating_sub(1) * q] },
            ]
        }
        FamilyParams::ErdosMoon { n, t } => {
            if t == 0 || n < t {
                return Err(unsupported("needs n >= t >= 1"));
            }
            let m = n - t + 1;
            let (a, b) = (m.div_ceil(2), m / 2);
            let k = t - 1;
            vec![
                Cell { size: k, row: vec![k.saturating_sub(1), a, b] },
                Cell { size: a, row: vec![k, 0, b] },
                Cell { size: b, row: vec![k, a, 0] },
            ]
        }
        FamilyParams::S { n, l, variant } => {
            let need = if variant == SVariant::Plus { l + 2 } else { l + 1 };
            if l == 0 || n < need {
                return Err(unsupported("infeasible n"));
            }
            let m = n - l;
            match variant {
                SVariant::Plain => vec![
                    Cell { size: l, row: vec![l - 1, m] },
                    Cell { size: m, row: vec![l, 0] },
                ],
                SVariant::Plus => vec![
                    Cell { size: l, row: vec![l - 1, 2, m - 2] },
                    Cell { size: 2, row: vec![l, 1, 0] },
                    Cell { size: m - 2, row: vec![l, 0, 0] },
                ],
                SVariant::PlusPlus => {
                    let matched = 2 * (m / 2);
                    vec![
                        Cell { size: l, row: vec![l - 1, matched, m - matched] },
                        Cell { size: matched, row: vec![l, 1, 0] },
                        Cell { size: m - matched, row: vec![l, 0, 0] },
                    ]
                }
            }
        }
        FamilyParams::CompleteMultipartite { ref parts } => {
            let n: usize = parts.iter().sum();
            parts
                .iter()
                .map(|&p| Cell {
                    size: p,
                    row: parts.to_vec(),
                })
                .enumerate()
                .map(|(i, mut c)| {
                    c.row[i] = 0;
                    debug_assert_eq!(c.row.iter().sum::<usize>(), n - c.size);
                    c
                })
                .collect()
        }
        FamilyParams::DisjointCycles { .. } => return Err(unsupported("disconnected family")),
    };
    Ok(cells)
}

/// Eigen-decomposition of a small symmetric matrix by cyclic Jacobi
/// rotations. Returns eigenvalues and column eigenvectors (row-major `v[i][j]`
/// is component `i` of vector `j`) plus the sweep count.
fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>, usize) {
    let k = a.len();
    let mut v = vec![vec![0.0; k]; k];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let mut sweeps = 0;
    for _ in 0..100 {
        let off: f64 = (0..k).flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-30 {
            break;
        }
        sweeps += 1;
        for p in 0..k {
            for q in (p + 1)..k {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..k {
                    let (arp, arq) = (a[r][p], a[r][q]);
                    a[r][p] = c * arp - s * arq;
                    a[r][q] = s * arp + c * arq;
                }
                for r in 0..k {
                    let (apr, aqr) = (a[p][r], a[q][r]);
                    a[p][r] = c * apr - s * aqr;
                    a[q][r] = s * apr + c * aqr;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    ((0..k).map(|i| a[i][i]).collect(), v, sweeps)
}

/// Perron root of a structured family from its equitable-partition quotient.
///
/// The quotient `B` (with `B[i][j]` the neighbours a vertex of cell `i` has in
/// cell `j`) is symmetrised as `sqrt(B[i][j] B[j][i])`; its top eigenvector
/// `w` lifts to the unit vector `x_v = w_i / sqrt(|cell_i|)`.
pub fn implicit_family_perron(params: &FamilyParams) -> Result<SpectralResult, SpectralError> {
    let cells: Vec<Cell> = {
        let all = equitable_cells(params)?;
        let keep: Vec<usize> = (0..all.len()).filter(|&i| all[i].size > 0).collect();
        all.iter()
            .filter(|c| c.size > 0)
            .map(|c| Cell { size: c.size, row: keep.iter().map(|&j| c.row[j]).collect() })
            .collect()
    };
    let k = cells.len();
    let sym: Vec<Vec<f64>> = (0..k)
        .map(|i| (0..k).map(|j| ((cells[i].row[j] * cells[j].row[i]) as f64).sqrt()).collect())
        .collect();
    let (vals, vecs, sweeps) = jacobi_eigen(sym.clone());
    let top = (0..k)
        .max_by(|&a, &b| vals[a].total_cmp(&vals[b]))
        .ok_or(SpectralError::EmptyGraph)?;
    let mut w: Vec<f64> = (0..k).map(|i| vecs[i][top]).collect();
    if w.iter().sum::<f64>() < 0.0 {
        w.iter_mut().for_each(|x| *x = -*x);
    }
    let nw = w.iter().map(|x| x * x).sum::<f64>().sqrt();
    w.iter_mut().for_each(|x| *x /= nw);
    let rho = (0..k).map(|i| (0..k).map(|j| w[i] * sym[i][j] * w[j]).sum::<f64>()).sum::<f64>();
    let residual = (0..k)
        .map(|i| {
            let d = (0..k).map(|j| sym[i][j] * w[j]).sum::<f64>() - rho * w[i];
            d * d
        })
        .sum::<f64>()
        .sqrt();
    let mut vector = Vec::with_capacity(params.vertex_count());
    let layout = cell_layout(params)?;
    for cell_index in layout {
        let ci = cells_index_map(params)?[cell_index];
        vector.push(w[ci] / (cells[ci].size as f64).sqrt());
    }
    Ok(SpectralResult {
        rho,
        vector,
        residual,
        iterations: sweeps,
        tol: DEFAULT_TOL,
        component: None,
    })
}

/// Maps original cell indices (before empty cells were dropped) to compacted ones.
fn cells_index_map(params: &FamilyParams) -> Result<Vec<usize>, SpectralError> {
    let all = equitable_cells(params)?;
    let mut next = 0;
    Ok(all
        .iter()
        .map(|c| {
            let i = next;
            if c.size > 0 {
                next += 1;
            }
            i
        })
        .collect())
}

/// Original cell index of every vertex in the family's fixed layout.
fn cell_layout(params: &FamilyParams) -> Result<Vec<usize>, SpectralError> {
    Ok(match *params {
        FamilyParams::Turan { n, r } => {
            let rem = n % r;
            (0..n).map(|v| if v % r < rem { 0 } else { 1 }).collect()
        }
        FamilyParams::ErdosMoon { n, t } => (0..n)
            .map(|v| if v < t - 1 { 0 } else if (v - (t - 1)) % 2 == 0 { 1 } else { 2 })
            .collect(),
        FamilyParams::S { n, l, variant } => {
            let m = n - l;
            (0..n)
                .map(|v| {
                    if v < l {
                        0
                    } else {
                        match variant {
                            SVariant::Plain => 1,
                            SVariant::Plus => if v < l + 2 { 1 } else { 2 },
                            SVariant::PlusPlus => if v - l < 2 * (m / 2) { 1 } else { 2 },
                        }
                    }
                })
                .collect()
        }
        FamilyParams::CompleteMultipartite { ref parts } => parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| std::iter::repeat_n(i, p))
            .collect(),
        FamilyParams::DisjointCycles { .. } => return Err(SpectralError::UnsupportedFamily(params.to_string())),
    })
}

/// Perron root of a family member, dense when it fits and implicit otherwise.
pub fn family_rho(params: &FamilyParams) -> Result<f64, SpectralError> {
    match params {
        FamilyParams::DisjointCycles { .. } => Ok(perron_default(&params.build()?)?.rho),
        _ if params.vertex_count() > CAPACITY => Ok(implicit_family_perron(params)?.rho),
        _ => Ok(implicit_family_perron(params)?.rho),
    }
}

/// Perron root of `S_{n,l}` in the given variant.
pub fn rho_s(n: usize, l: usize, variant: SVariant) -> Result<f64, SpectralError> {
    if n <= CAPACITY {
        Ok(perron_default(&s_graph(n, l, variant)?)?.rho)
    } else {
        Ok(implicit_family_perron(&FamilyParams::S { n, l, variant })?.rho)
    }
}

/// `sum_v x_v` over a vertex set, used by callers that inspect Perron weights.
pub fn weight(x: &[f64], s: &VertexSet) -> f64 {
    s.iter().map(|v| x[v]).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{join, turan_graph};
    use rand::{Rng, SeedableRng};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    /// Dense symmetric eigenvalues by Jacobi, independent of the power iteration.
    fn dense_top_eigenvalue(g: &Graph) -> f64 {
        let n = g.n();
        let a = (0..n).map(|i| (0..n).map(|j| g.has_edge(i, j) as u8 as f64).collect()).collect();
        let (vals, _, _) = jacobi_eigen(a);
        vals.into_iter().fold(f64::MIN, f64::max)
    }

    #[test]
    fn perron_examples() {
        let k55 = turan_graph(10, 2).unwrap();
        let r = perron_default(&k55).unwrap();
        assert!(close(r.rho, 5.0, 1e-9), "{}", r.rho);
        assert!(r.residual <= DEFAULT_TOL * r.rho);
        assert!(r.vector.iter().all(|&x| x > 0.0));

        let s = s_graph(10, 2, SVariant::Plain).unwrap();
        let r = perron_default(&s).unwrap();
        assert!(close(r.rho, (1.0 + 65f64.sqrt()) / 2.0, 1e-9));
        assert!(close(r.rho, 4.531128874, 1e-9));

        let r = perron_default(&Graph::cycle(4).unwrap()).unwrap();
        assert!(close(r.rho, 2.0, 1e-9));
    }

    #[test]
    fn perron_errors_and_edge_cases() {
        assert_eq!(perron_default(&Graph::empty(0).unwrap()), Err(SpectralError::EmptyGraph));
        assert_eq!(perron(&Graph::cycle(4).unwrap(), 0.0, 10), Err(SpectralError::BadTolerance(0.0)));
        let r = perron_default(&Graph::empty(5).unwrap()).unwrap();
        assert_eq!(r.rho, 0.0);
        assert!(matches!(
            perron(&Graph::path(40).unwrap(), 1e-14, 3),
            Err(SpectralError::NotConverged { .. })
        ));
    }

    #[test]
    fn disconnected_reports_best_component() {
        // C_4 on 0..4, K_4 on 4..8
        let g = crate::constructions::union(&Graph::cycle(4).unwrap(), &Graph::complete(4).unwrap()).unwrap();
        let r = perron_default(&g).unwrap();
        assert!(close(r.rho, 3.0, 1e-9));
        assert_eq!(r.component, Some(vec![4, 5, 6, 7]));
        assert!(r.vector[..4].iter().all(|&x| x == 0.0));
    }

    #[test]
    fn closed_form_examples() {
        assert!(close(rho_s_closed_form(10, 2).unwrap(), (1.0 + 65f64.sqrt()) / 2.0, 1e-15));
        for n in [2usize, 5, 17, 100] {
            assert!(close(rho_s_closed_form(n, 1).unwrap(), ((n - 1) as f64).sqrt(), 1e-12));
        }
        let v = rho_s_closed_form(100, 3).unwrap();
        assert!(close(v, (2.0 + 1168f64.sqrt()) / 2.0, 1e-12));
        assert!(close(v, 18.088, 1e-3));
        assert!(close(perron_default(&s_graph(100, 3, SVariant::Plain).unwrap()).unwrap().rho, v, 1e-9));
        assert!(rho_s_closed_form(3, 3).is_err());
        assert!(rho_s_closed_form(3, 0).is_err());
    }

    #[test]
    fn spp_upper_bound_examples() {
        assert!(close(rho_spp_upper_bound(12, 3), 37f64.sqrt(), 1e-12));
        assert!(close(rho_spp_upper_bound(100, 1), 125f64.sqrt(), 1e-12));
        assert!(close(rho_spp_upper_bound(50, 2), (2.125f64 * 50.0).sqrt(), 1e-12));
        let r = perron_default(&s_graph(100, 1, SVariant::PlusPlus).unwrap()).unwrap().rho;
        assert!(r <= rho_spp_upper_bound(100, 1) + CHECK_SLACK);
    }

    #[test]
    fn spp_upper_bound_applicability_is_sound() {
        // wherever the bound is declared applicable it must hold
        for l in 1..=5 {
            for n in (l + 2..=CAPACITY).step_by(7) {
                if spp_upper_bound_applicable(n, l) {
                    let r = rho_s(n, l, SVariant::PlusPlus).unwrap();
                    assert!(r <= rho_spp_upper_bound(n, l) + CHECK_SLACK, "n={n} l={l}");
                }
            }
        }
        assert!(spp_upper_bound_applicable(100, 1));
        assert!(!spp_upper_bound_applicable(200, 2));
        // large n via the quotient path
        assert!(spp_upper_bound_applicable(100_000, 3));
        let r = implicit_family_perron(&FamilyParams::S { n: 100_000, l: 3, variant: SVariant::PlusPlus }).unwrap().rho;
        assert!(r <= rho_spp_upper_bound(100_000, 3));
    }

    #[test]
    fn deletion_inequality_examples() {
        let c = check_deletion_inequality(&turan_graph(9, 2).unwrap()).unwrap();
        assert!(c.holds);
        let c = check_deletion_inequality(&Graph::empty(5).unwrap()).unwrap();
        assert_eq!(c.lhs, 0.0);
        assert!(c.rhs.abs() < 1e-12);
        assert!(c.holds);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut h = Graph::empty(50).unwrap();
            for (u, v) in (0..50).flat_map(|u| ((u + 1)..50).map(move |v| (u, v))) {
                if rng.random_bool(0.3) {
                    h.insert_edge(u, v).unwrap();
                }
            }
            assert!(check_deletion_inequality(&h).unwrap().holds);
        }
    }

    #[test]
    fn dense_lower_bound_examples() {
        let c = check_dense_lower_bound(10, 2).unwrap();
        assert!(close(c.bound, 5.8, 1e-12));
        assert!(c.holds && c.rho >= 5.8);
        for n in [4usize, 10, 31, 64] {
            let c = check_dense_lower_bound(n, 1).unwrap();
            let exact = ((n.div_ceil(2) * (n / 2)) as f64).sqrt();
            assert!(close(c.rho, exact, 1e-9));
            assert!(c.holds);
        }
        let c = check_dense_lower_bound(20, 3).unwrap();
        assert!(close(c.bound, 11.775, 1e-12));
        assert!(c.holds);
        assert!(check_dense_lower_bound(2, 3).is_err());
        assert!(check_dense_lower_bound(10_000, 4).unwrap().holds);
    }

    #[test]
    fn implicit_examples() {
        let r = implicit_family_perron(&FamilyParams::S { n: 100_000, l: 4, variant: SVariant::Plain }).unwrap();
        let cf = rho_s_closed_form(100_000, 4).unwrap();
        assert!(close(r.rho, cf, 1e-9 * cf.max(1.0)), "{} vs {cf}", r.rho);
        let r = implicit_family_perron(&FamilyParams::Turan { n: 100_000, r: 2 }).unwrap();
        assert!(close(r.rho, 50_000.0, 1e-9 * 50_000.0));
        let spp = FamilyParams::S { n: 12, l: 3, variant: SVariant::PlusPlus };
        let a = implicit_family_perron(&spp).unwrap();
        let b = perron_default(&spp.build().unwrap()).unwrap();
        assert!(close(a.rho, b.rho, 1e-9));
        assert!(a.vector.iter().zip(&b.vector).all(|(x, y)| close(*x, *y, 1e-6)));
        assert!(matches!(
            implicit_family_perron(&FamilyParams::DisjointCycles { t: 2, l: 4 }),
            Err(SpectralError::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn implicit_matches_dense_on_every_family() {
        let mut fams = Vec::new();
        for n in [5usize, 9, 16, 33, 64] {
            for r in 1..=4.min(n) {
                fams.push(FamilyParams::Turan { n, r });
            }
            for t in 1..=3.min(n) {
                fams.push(FamilyParams::ErdosMoon { n, t });
            }
            for l in 1..=4 {
                for variant in [SVariant::Plain, SVariant::Plus, SVariant::PlusPlus] {
                    if n >= l + 2 {
                        fams.push(FamilyParams::S { n, l, variant });
                    }
                }
            }
        }
        fams.push(FamilyParams::CompleteMultipartite { parts: vec![3, 2, 2, 5] });
        for f in fams {
            let g = f.build().unwrap();
            if g.edge_count() == 0 {
                continue;
            }
            let a = implicit_family_perron(&f).unwrap().rho;
            let b = perron_default(&g).unwrap().rho;
            assert!(close(a, b, 1e-9), "{f}: {a} vs {b}");
        }
    }

    #[test]
    fn s_chain_monotone() {
        for (n, l) in [(10usize, 2usize), (30, 3), (41, 5)] {
            let a = rho_s(n, l, SVariant::Plain).unwrap();
            let b = rho_s(n, l, SVariant::Plus).unwrap();
            let c = rho_s(n, l, SVariant::PlusPlus).unwrap();
            assert!(a < b && b < c, "n={n} l={l}: {a} {b} {c}");
        }
    }

    #[test]
    fn power_iteration_matches_jacobi_on_random_graphs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.random_range(2..25);
            let p = rng.random_range(0.1..0.9);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(p) {
                        g.insert_edge(u, v).unwrap();
                    }
                }
            }
            let a = perron_default(&g).unwrap().rho;
            let b = dense_top_eigenvalue(&g);
            assert!(close(a, b, 1e-9), "{a} vs {b}");
        }
    }

    #[test]
    fn adding_an_edge_increases_rho() {
        let g = join(&Graph::empty(1).unwrap(), &Graph::path(6).unwrap()).unwrap();
        let before = perron_default(&g).unwrap().rho;
        for (u, v) in g.non_edges() {
            assert!(perron_default(&g.add_edge(u, v).unwrap()).unwrap().rho > before + 1e-9);
        }
    }

    proptest::proptest! {
        #[test]
        fn rayleigh_and_degree_bounds(n in 1usize..40, seed in proptest::prelude::any::<u64>(), p in 0.0f64..1.0) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(p) {
                        g.insert_edge(u, v).unwrap();
                    }
                }
            }
            let r = perron_default(&g).unwrap();
            let tol = 1e-9;
            proptest::prop_assert!(r.rho >= 2.0 * g.edge_count() as f64 / n as f64 - tol);
            proptest::prop_assert!(r.rho <= g.max_degree() as f64 + tol);
            proptest::prop_assert!(r.residual <= DEFAULT_TOL * r.rho.max(1.0));
            proptest::prop_assert!(r.vector.iter().all(|&x| x >= 0.0));
        }
    }
}
