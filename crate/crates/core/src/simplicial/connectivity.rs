//! Join decomposition and connectivity verdicts up to simple connectivity.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::homology::{h1, HomologyH1};
use super::SimplicialComplex;
use crate::Verdict;

/// Largest number of candidate groups for which coarsening is searched
/// exhaustively.
const MAX_GROUPS_SEARCHED: usize = 14;

/// Finest partition of the vertices such that the complex is the join of
/// the full subcomplexes on the parts. Parts are sorted and ordered by
/// smallest vertex; the empty complex has no parts.
pub fn join_decompose<L>(complex: &SimplicialComplex<L>) -> Vec<Vec<usize>> {
    let n = complex.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    // Vertices not joined by an edge must share a part.
    let adj = complex.adjacency();
    let mut group_of = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if group_of[start] != usize::MAX {
            continue;
        }
        let g = groups.len();
        group_of[start] = g;
        let mut stack = vec![start];
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for w in 0..n {
                if w != v && group_of[w] == usize::MAX && !adj[v].contains(&w) {
                    group_of[w] = g;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        groups.push(members);
    }
    let total = complex.count_within(&vec![true; n]);
    let mut out = split_groups(complex, groups, total);
    out.sort();
    out
}

fn mask_of(n: usize, groups: &[Vec<usize>], chosen: impl Iterator<Item = usize>) -> Vec<bool> {
    let mut keep = vec![false; n];
    for g in chosen {
        for &v in &groups[g] {
            keep[v] = true;
        }
    }
    keep
}

fn split_groups<L>(complex: &SimplicialComplex<L>, groups: Vec<Vec<usize>>, total: usize) -> Vec<Vec<usize>> {
    let k = groups.len();
    let n = complex.vertex_count();
    if k <= 1 {
        return groups;
    }
    let counts: Vec<usize> = (0..k).map(|g| complex.count_within(&mask_of(n, &groups, [g].into_iter()))).collect();
    if counts.iter().try_fold(1usize, |acc, &c| acc.checked_mul(c)) == Some(total) {
        return groups;
    }
    let merged = || vec![groups.iter().flatten().copied().collect::<Vec<_>>()];
    if k > MAX_GROUPS_SEARCHED {
        return merged();
    }
    // The smallest union of groups containing group 0 that splits off as a
    // join factor is itself irreducible.
    let mut masks: Vec<u32> = (0..(1u32 << (k - 1))).map(|m| (m << 1) | 1).filter(|&m| m != (1u32 << k) - 1).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for m in masks {
        let inside = mask_of(n, &groups, (0..k).filter(|g| m & (1 << g) != 0));
        let outside = mask_of(n, &groups, (0..k).filter(|g| m & (1 << g) == 0));
        let a = complex.count_within(&inside);
        let b = complex.count_within(&outside);
        if a.checked_mul(b) == Some(total) {
            let first: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
            let rest: Vec<Vec<usize>> = (0..k).filter(|g| m & (1 << g) == 0).map(|g| groups[g].clone()).collect();
            let mut out = vec![first];
            out.extend(split_groups(complex, rest, b));
            return out;
        }
    }
    merged()
}

/// The factors of [`join_decompose`] as complexes.
pub fn join_factors<L: Clone>(complex: &SimplicialComplex<L>) -> Vec<SimplicialComplex<L>> {
    join_decompose(complex).iter().map(|g| complex.full_subcomplex(g)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConnLevel {
    Empty,
    Nonempty,
    Connected,
    SimplyConnected,
}

impl ConnLevel {
    /// Connectivity in the usual numbering: empty is −2, nonempty −1,
    /// connected 0, simply connected 1.
    pub fn value(self) -> i8 {
        match self {
            ConnLevel::Empty => -2,
            ConnLevel::Nonempty => -1,
            ConnLevel::Connected => 0,
            ConnLevel::SimplyConnected => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConnLevel::Empty => "empty",
            ConnLevel::Nonempty => "nonempty",
            ConnLevel::Connected => "connected",
            ConnLevel::SimplyConnected => "simply_connected",
        }
    }
}

impl fmt::Display for ConnLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConnMethod {
    Bfs,
    JoinCriterion,
    H1PlusJoin,
    Inconclusive,
}

impl ConnMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            ConnMethod::Bfs => "bfs",
            ConnMethod::JoinCriterion => "join_criterion",
            ConnMethod::H1PlusJoin => "h1_plus_join",
            ConnMethod::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityVerdict {
    /// Proven lower bound on the connectivity.
    pub level: ConnLevel,
    /// Whether the complex is known not to reach the next level.
    pub exact: bool,
    pub method: ConnMethod,
    /// H1 vanishes but no join certificate was found.
    pub acyclic_only: bool,
    pub components: usize,
    pub join_factors: usize,
    pub h1: Option<HomologyH1>,
}

impl ConnectivityVerdict {
    /// Homotopical verdict for `target` (−1, 0 or 1).
    pub fn meets(&self, target: i8) -> Verdict {
        if self.level.value() >= target {
            Verdict::Pass
        } else if self.exact {
            Verdict::Fail
        } else {
            Verdict::Inconclusive
        }
    }

    /// Homological verdict: (target)-acyclic in reduced integral homology.
    pub fn meets_homological(&self, target: i8) -> Verdict {
        if self.level.value() >= target {
            return Verdict::Pass;
        }
        match target {
            1 if self.level == ConnLevel::Connected => match &self.h1 {
                Some(h) => Verdict::from_bool(h.is_zero()),
                None => Verdict::Inconclusive,
            },
            _ if self.exact => Verdict::Fail,
            _ => Verdict::Inconclusive,
        }
    }
}

/// Lower bound on the connectivity of a join-irreducible piece without
/// homology: a simplex is contractible, counted here as 1.
fn factor_bound<L>(factor: &SimplicialComplex<L>) -> i32 {
    if factor.is_empty() {
        -2
    } else if factor.facets().len() == 1 {
        1
    } else if factor.components().len() == 1 {
        0
    } else {
        -1
    }
}

/// Decides connectivity up to `target` (−1, 0 or 1). Simple connectivity
/// is certified only by the join criterion; vanishing H1 alone yields an
/// acyclic-only verdict.
pub fn connectivity<L>(complex: &SimplicialComplex<L>, target: i8) -> ConnectivityVerdict {
    let mut verdict = ConnectivityVerdict {
        level: ConnLevel::Empty,
        exact: true,
        method: ConnMethod::Bfs,
        acyclic_only: false,
        components: 0,
        join_factors: 0,
        h1: None,
    };
    if complex.is_empty() {
        return verdict;
    }
    verdict.level = ConnLevel::Nonempty;
    if target < 0 {
        verdict.exact = false;
        return verdict;
    }
    verdict.components = complex.components().len();
    if verdict.components > 1 {
        return verdict;
    }
    verdict.level = ConnLevel::Connected;
    if target < 1 {
        verdict.exact = false;
        return verdict;
    }
    let groups = join_decompose(complex);
    verdict.join_factors = groups.len();
    let bound: i32 = groups
        .iter()
        .map(|g| {
            let keep: Vec<bool> = {
                let mut k = vec![false; complex.vertex_count()];
                for &v in g {
                    k[v] = true;
                }
                k
            };
            factor_bound(&restrict_unlabeled(complex, &keep))
        })
        .sum::<i32>()
        + 2 * (groups.len() as i32 - 1);
    if bound >= 1 {
        verdict.level = ConnLevel::SimplyConnected;
        verdict.exact = false;
        verdict.method = ConnMethod::JoinCriterion;
        return verdict;
    }
    let h = h1(complex);
    verdict.method = ConnMethod::H1PlusJoin;
    if h.is_zero() {
        verdict.acyclic_only = true;
        verdict.exact = false;
    }
    verdict.h1 = Some(h);
    verdict
}

fn restrict_unlabeled<L>(complex: &SimplicialComplex<L>, keep: &[bool]) -> SimplicialComplex<()> {
    let verts: Vec<usize> = (0..keep.len()).filter(|&v| keep[v]).collect();
    let unlabeled = SimplicialComplex::<()> { labels: vec![(); complex.vertex_count()], faces: complex.faces.clone() };
    unlabeled.full_subcomplex(&verts)
}
