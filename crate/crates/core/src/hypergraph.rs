//! Hypergraphs of arithmetic progressions and their palindromic quotients.
//!
//! `arithp(t, n)` has vertices `1..=n` and one hyperedge per arithmetic
//! progression of length `t` inside `1..=n`. `pdarithp(t, n)` folds that
//! hypergraph through the reflection `v -> n + 1 - v` onto the vertices
//! `1..=ceil(n/2)` and keeps only the inclusion-minimal images.
//!
//! Hyperedges are kept in colexicographic order (compare the largest
//! elements first), which is also the clause order of the DIMACS encodings.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A vertex count together with a set of strictly increasing hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    num_vertices: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting and deduplicating the edges.
    ///
    /// Fails if an edge mentions a vertex outside `1..=num_vertices`.
    pub fn new(num_vertices: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut out = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if let Some(&v) = e.iter().find(|&&v| v == 0 || v > num_vertices) {
                return Err(Error::input(format!(
                    "vertex {v} outside 1..={num_vertices}"
                )));
            }
            out.push(e);
        }
        Ok(Self::from_sorted_edges(num_vertices, out))
    }

    fn from_sorted_edges(num_vertices: usize, mut edges: Vec<Vec<usize>>) -> Self {
        edges.sort_unstable_by(|a, b| colex_cmp(a, b));
        edges.dedup();
        Hypergraph { num_vertices, edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Hyperedges in colexicographic order.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Textual dump: a header line followed by one hyperedge per line.
    pub fn dump(&self, header: &str) -> String {
        let mut s = String::new();
        s.push_str(header);
        s.push('\n');
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} vertices, {{", self.num_vertices)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e:?}")?;
        }
        write!(f, "}})")
    }
}

/// Colexicographic order on strictly increasing vertex lists: compare
/// from the largest element downwards, a proper suffix-prefix being smaller.
pub fn colex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Parameters `(t, n)` of a progression hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProgressionParams {
    pub t: usize,
    pub n: usize,
}

impl ProgressionParams {
    pub fn new(t: usize, n: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::input("progression length must be at least 1"));
        }
        Ok(ProgressionParams { t, n })
    }
}

/// Iterates all arithmetic progressions `(a, d)` of length `t` in `1..=n`
/// in colexicographic order of the vertex sets: by last element, then by
/// decreasing difference. For `t == 1` only `d == 1` is produced so that
/// each singleton appears once.
pub(crate) fn progressions(t: usize, n: usize) -> impl Iterator<Item = (usize, usize)> {
    let span = t.saturating_sub(1);
    (1..=n).flat_map(move |last| {
        let max_d = (last - 1).checked_div(span).unwrap_or(1);
        (1..=max_d).rev().map(move |d| (last - span * d, d))
    })
}

/// The hypergraph of arithmetic progressions of length `t` in `1..=n`.
pub fn arithp(t: usize, n: usize) -> Result<Hypergraph> {
    let p = ProgressionParams::new(t, n)?;
    let edges: Vec<Vec<usize>> = progressions(p.t, p.n)
        .map(|(a, d)| (0..p.t).map(|i| a + i * d).collect())
        .collect();
    // Generated already in colex order and without duplicates.
    Ok(Hypergraph { num_vertices: n, edges })
}

/// Number of vertices of the palindromic quotient, `ceil(n/2)`.
pub fn half_len(n: usize) -> usize {
    n.div_ceil(2)
}

/// Folds vertex `v` of `1..=n` onto `1..=ceil(n/2)`.
pub fn mirror(n: usize, v: usize) -> Result<usize> {
    if v == 0 || v > n {
        return Err(Error::input(format!("vertex {v} outside 1..={n}")));
    }
    Ok(mirror_unchecked(n, v))
}

#[inline]
pub(crate) fn mirror_unchecked(n: usize, v: usize) -> usize {
    if v <= half_len(n) {
        v
    } else {
        n + 1 - v
    }
}

/// The palindromic progression hypergraph: images of the progressions of
/// `arithp(t, n)` under [`mirror`], reduced to the inclusion-minimal sets.
pub fn pdarithp(t: usize, n: usize) -> Result<Hypergraph> {
    let p = ProgressionParams::new(t, n)?;
    let half = half_len(p.n);
    let mut seen = HashSet::new();
    let mut images = Vec::new();
    for (a, d) in progressions(p.t, p.n) {
        let mut img: Vec<usize> = (0..p.t).map(|i| mirror_unchecked(p.n, a + i * d)).collect();
        img.sort_unstable();
        img.dedup();
        if seen.insert(img.clone()) {
            images.push(img);
        }
    }
    let edges = minimal_sets(half, images);
    Ok(Hypergraph::from_sorted_edges(half, edges))
}

/// Drops every set having a proper subset in the family. Sets must be
/// sorted and pairwise distinct.
///
/// A candidate subset `s` of `e` has `min(s)` in `e`, so sets are indexed
/// by their minimum and only those buckets are searched.
fn minimal_sets(num_vertices: usize, mut sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    sets.sort_by_key(|s| s.len());
    let mut by_min: Vec<Vec<usize>> = vec![Vec::new(); num_vertices + 1];
    let mut kept: Vec<Vec<usize>> = Vec::with_capacity(sets.len());
    let mut mark = vec![false; num_vertices + 1];
    for e in sets {
        for &v in &e {
            mark[v] = true;
        }
        let subsumed = e.iter().any(|&v| {
            by_min[v]
                .iter()
                .any(|&k| kept[k].len() < e.len() && kept[k].iter().all(|&u| mark[u]))
        });
        for &v in &e {
            mark[v] = false;
        }
        if !subsumed {
            if let Some(&m) = e.first() {
                by_min[m].push(kept.len());
            }
            kept.push(e);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(h: &Hypergraph) -> Vec<Vec<usize>> {
        h.edges().to_vec()
    }

    #[test]
    fn arithp_small_example() {
        let h = arithp(3, 5).unwrap();
        assert_eq!(h.num_vertices(), 5);
        assert_eq!(
            edges(&h),
            vec![vec![1, 2, 3], vec![2, 3, 4], vec![1, 3, 5], vec![3, 4, 5]]
        );
    }

    #[test]
    fn arithp_empty() {
        let h = arithp(3, 0).unwrap();
        assert_eq!(h.num_vertices(), 0);
        assert_eq!(h.num_edges(), 0);
        assert_eq!(arithp(3, 2).unwrap().num_edges(), 0);
    }

    #[test]
    fn arithp_count_nine() {
        // Brute force over all (a, d).
        let mut count = 0;
        for a in 1..=9 {
            for d in 1..=9 {
                if a + 2 * d <= 9 {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 16);
        assert_eq!(arithp(3, 9).unwrap().num_edges(), 16);
    }

    #[test]
    fn zero_length_rejected() {
        assert!(arithp(0, 4).is_err());
        assert!(pdarithp(0, 4).is_err());
    }

    #[test]
    fn mirror_values() {
        assert_eq!(mirror(5, 4).unwrap(), 2);
        assert_eq!(mirror(5, 3).unwrap(), 3);
        assert_eq!(mirror(6, 6).unwrap(), 1);
        assert!(mirror(5, 0).is_err());
        assert!(mirror(5, 6).is_err());
    }

    #[test]
    fn pdarithp_examples() {
        assert_eq!(edges(&pdarithp(3, 5).unwrap()), vec![vec![1, 3], vec![2, 3]]);
        assert_eq!(
            edges(&pdarithp(4, 9).unwrap()),
            vec![vec![2, 4], vec![1, 3, 5], vec![3, 4, 5]]
        );
        assert_eq!(
            edges(&pdarithp(3, 9).unwrap()),
            vec![
                vec![1, 2, 3],
                vec![2, 4],
                vec![1, 3, 4],
                vec![1, 5],
                vec![2, 5],
                vec![3, 5],
                vec![4, 5]
            ]
        );
        let empty = pdarithp(3, 0).unwrap();
        assert_eq!(empty.num_vertices(), 0);
        assert_eq!(empty.num_edges(), 0);
    }

    #[test]
    fn dump_format() {
        let h = pdarithp(3, 5).unwrap();
        assert_eq!(
            h.dump("palindromised hypergraph t=3 n=5"),
            "palindromised hypergraph t=3 n=5\n1 3\n2 3\n"
        );
    }

    #[test]
    fn new_rejects_out_of_range() {
        assert!(Hypergraph::new(3, vec![vec![1, 4]]).is_err());
        let h = Hypergraph::new(3, vec![vec![3, 1], vec![1, 3], vec![2]]).unwrap();
        assert_eq!(edges(&h), vec![vec![2], vec![1, 3]]);
    }

    #[test]
    fn singletons_and_pairs() {
        assert_eq!(arithp(1, 3).unwrap().num_edges(), 3);
        assert_eq!(arithp(2, 4).unwrap().num_edges(), 6);
    }
}
