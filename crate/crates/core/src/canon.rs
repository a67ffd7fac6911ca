//! Canonical labelling by individualisation and equitable refinement.
//!
//! The canonical form is the relabelling with the lexicographically smallest
//! graph6 string among all leaves of the search tree. There is no
//! automorphism pruning, so cost grows with the symmetry of the graph; it is
//! meant for the small graphs produced by exhaustive search.

use crate::graph::{Graph, VertexSet};
use crate::graph6::encode_bytes;

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into every cell until stable. Cells are
/// split in order of their count signature, so the result depends only on
/// the graph structure and the incoming cell order.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let sets: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| (sets.iter().map(|s| g.neighbors(v).intersection_len(s)).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let cells = refine(g, cells);
    let target = cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i));
    match target {
        None => {
            let mut perm = vec![0; g.n()];
            for (pos, cell) in cells.iter().enumerate() {
                perm[cell[0]] = pos;
            }
            let code = encode_bytes(&g.relabel(&perm));
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, perm));
            }
        }
        Some((i, cell)) => {
            for &v in cell {
                let mut next = cells.clone();
                let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
                next.splice(i..=i, [vec![v], rest]);
                search(g, next, best);
            }
        }
    }
}

/// Canonical relabelling: `perm[v]` is the canonical label of `v`.
pub fn canonical_labelling(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut best = None;
    search(g, vec![(0..g.n()).collect()], &mut best);
    best.expect("at least one leaf").1
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labelling(g))
}

pub fn canonical_graph6(g: &Graph) -> String {
    crate::graph6::encode(&canonical_form(g))
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}
