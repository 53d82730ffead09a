//! Finite simplicial complexes as they arise as vertex links.
//!
//! A complex stores every nonempty face explicitly as a sorted vertex list.
//! Vertices carry an arbitrary label that survives links, restrictions and
//! joins.

mod connectivity;
mod homology;

pub use connectivity::{connectivity, join_decompose, join_factors, ConnLevel, ConnMethod, ConnectivityVerdict};
pub use homology::{h1, HomologyH1};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub type Simplex = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicialError {
    VertexOutOfRange { vertex: usize, count: usize },
    NotASimplex(Simplex),
}

impl fmt::Display for SimplicialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplicialError::VertexOutOfRange { vertex, count } => {
                write!(f, "vertex {vertex} out of range for a complex on {count} vertices")
            }
            SimplicialError::NotASimplex(s) => write!(f, "{s:?} is not a simplex of the complex"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex<L> {
    labels: Vec<L>,
    faces: BTreeSet<Simplex>,
}

fn normalize(mut s: Simplex) -> Simplex {
    s.sort_unstable();
    s.dedup();
    s
}

fn subsets(s: &[usize], out: &mut BTreeSet<Simplex>) {
    let k = s.len();
    for mask in 1u32..(1u32 << k) {
        let face: Simplex = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
        out.insert(face);
    }
}

impl<L> SimplicialComplex<L> {
    /// Builds the downward closure of `simplices`. Every vertex is present as
    /// a 0-simplex whether or not it is listed.
    pub fn new<I>(labels: Vec<L>, simplices: I) -> Result<Self, SimplicialError>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let count = labels.len();
        let mut faces = BTreeSet::new();
        for v in 0..count {
            faces.insert(vec![v]);
        }
        for s in simplices {
            let s = normalize(s);
            if let Some(&vertex) = s.iter().find(|&&v| v >= count) {
                return Err(SimplicialError::VertexOutOfRange { vertex, count });
            }
            if s.len() > 24 {
                // Faces of huge simplices are never materialized in links.
                return Err(SimplicialError::NotASimplex(s));
            }
            if !faces.contains(&s) {
                subsets(&s, &mut faces);
            }
        }
        Ok(SimplicialComplex { labels, faces })
    }

    /// The flag complex of a graph: every clique spans a simplex. Cliques
    /// are taken up to `max_dim`.
    pub fn flag_completion(labels: Vec<L>, edges: &[(usize, usize)], max_dim: usize) -> Result<Self, SimplicialError> {
        let count = labels.len();
        let mut adj = vec![BTreeSet::new(); count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= count {
                    return Err(SimplicialError::VertexOutOfRange { vertex: w, count });
                }
            }
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        let mut faces = BTreeSet::new();
        let mut frontier: Vec<Simplex> = (0..count).map(|v| vec![v]).collect();
        for _ in 0..max_dim {
            let mut next = Vec::new();
            for s in &frontier {
                let last = *s.last().unwrap();
                for &w in adj[last].range(last + 1..) {
                    if s.iter().all(|u| adj[*u].contains(&w)) {
                        let mut t = s.clone();
                        t.push(w);
                        next.push(t);
                    }
                }
            }
            faces.extend(frontier);
            frontier = next;
        }
        faces.extend(frontier);
        Ok(SimplicialComplex { labels, faces })
    }

    pub fn empty() -> Self {
        SimplicialComplex { labels: Vec::new(), faces: BTreeSet::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> &L {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        s.is_empty() || self.faces.contains(s)
    }

    /// All nonempty simplices in lexicographic order.
    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.faces.iter()
    }

    pub fn simplices_of_dim(&self, dim: usize) -> impl Iterator<Item = &Simplex> {
        self.faces.iter().filter(move |s| s.len() == dim + 1)
    }

    /// Number of simplices of each dimension, starting at 0.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for s in &self.faces {
            let d = s.len() - 1;
            if f.len() <= d {
                f.resize(d + 1, 0);
            }
            f[d] += 1;
        }
        f
    }

    /// Dimension, or `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.faces.iter().map(|s| s.len() - 1).max()
    }

    pub fn facets(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        'outer: for s in &self.faces {
            for v in 0..self.labels.len() {
                if s.binary_search(&v).is_err() {
                    let mut t = s.clone();
                    t.push(v);
                    t.sort_unstable();
                    if self.faces.contains(&t) {
                        continue 'outer;
                    }
                }
            }
            out.push(s.clone());
        }
        out
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.simplices_of_dim(1).map(|s| (s[0], s[1])).collect()
    }

    pub fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.labels.len()];
        for (u, v) in self.edges() {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    /// Connected components of the 1-skeleton, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.labels.len()];
        let mut out = Vec::new();
        for start in 0..self.labels.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether every clique of the 1-skeleton spans a simplex. On failure
    /// returns a minimal clique that is missing.
    pub fn flag_violation(&self) -> Option<Simplex> {
        let adj = self.adjacency();
        for s in &self.faces {
            let last = *s.last().unwrap();
            for &w in adj[last].range(last + 1..) {
                if s.iter().all(|u| adj[*u].contains(&w)) {
                    let mut t = s.clone();
                    t.push(w);
                    if !self.faces.contains(&t) {
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    pub fn is_flag(&self) -> bool {
        self.flag_violation().is_none()
    }

    /// Checks that `sub`, a set of simplices of this complex, is the full
    /// subcomplex on its own vertex set. Returns a simplex of the complex
    /// spanned by vertices of `sub` but missing from it.
    pub fn fullness_violation(&self, sub: &BTreeSet<Simplex>) -> Option<Simplex> {
        let verts: BTreeSet<usize> = sub.iter().flatten().copied().collect();
        self.faces
            .iter()
            .find(|s| s.iter().all(|v| verts.contains(v)) && !sub.contains(*s))
            .cloned()
    }

    pub fn is_full_subcomplex(&self, sub: &BTreeSet<Simplex>) -> bool {
        self.fullness_violation(sub).is_none()
    }

    /// Number of simplices with all vertices in `keep`, counting the empty
    /// simplex.
    pub fn count_within(&self, keep: &[bool]) -> usize {
        1 + self.faces.iter().filter(|s| s.iter().all(|&v| keep[v])).count()
    }
}

impl<L: Clone> SimplicialComplex<L> {
    /// Full subcomplex on the given vertices, renumbered in increasing order.
    pub fn full_subcomplex(&self, vertices: &[usize]) -> Self {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let faces = self
            .faces
            .iter()
            .filter(|s| s.iter().all(|v| index.contains_key(v)))
            .map(|s| s.iter().map(|v| index[v]).collect())
            .collect();
        SimplicialComplex { labels, faces }
    }

    pub fn full_subcomplex_where<F: Fn(usize, &L) -> bool>(&self, keep: F) -> (Self, Vec<usize>) {
        let verts: Vec<usize> = (0..self.labels.len()).filter(|&v| keep(v, &self.labels[v])).collect();
        (self.full_subcomplex(&verts), verts)
    }

    /// `Lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ L}`, with the surviving vertices
    /// renumbered in increasing order. The empty simplex gives `L` back.
    pub fn link_of_simplex(&self, sigma: &[usize]) -> Result<Self, SimplicialError> {
        Ok(self.link_with_map(sigma)?.0)
    }

    /// As [`Self::link_of_simplex`], also returning the original index of
    /// each link vertex.
    pub fn link_with_map(&self, sigma: &[usize]) -> Result<(Self, Vec<usize>), SimplicialError> {
        let sigma = normalize(sigma.to_vec());
        if !self.contains(&sigma) {
            return Err(SimplicialError::NotASimplex(sigma));
        }
        let verts: Vec<usize> = (0..self.labels.len())
            .filter(|v| sigma.binary_search(v).is_err())
            .filter(|&v| {
                let mut t = sigma.clone();
                t.push(v);
                t.sort_unstable();
                self.faces.contains(&t)
            })
            .collect();
        let index: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut faces = BTreeSet::new();
        for s in &self.faces {
            if !s.iter().all(|v| index.contains_key(v)) {
                continue;
            }
            let mut t = s.clone();
            t.extend_from_slice(&sigma);
            t.sort_unstable();
            if self.faces.contains(&t) {
                faces.insert(s.iter().map(|v| index[v]).collect());
            }
        }
        let labels = verts.iter().map(|&v| self.labels[v].clone()).collect();
        Ok((SimplicialComplex { labels, faces }, verts))
    }

    /// Simplicial join; vertices of `other` are shifted past those of `self`.
    pub fn join(&self, other: &Self) -> Self {
        let shift = self.labels.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut faces = self.faces.clone();
        for t in &other.faces {
            let t2: Simplex = t.iter().map(|v| v + shift).collect();
            for s in &self.faces {
                let mut u = s.clone();
                u.extend_from_slice(&t2);
                faces.insert(u);
            }
            faces.insert(t2);
        }
        SimplicialComplex { labels, faces }
    }

    pub fn map_labels<M, F: Fn(&L) -> M>(&self, f: F) -> SimplicialComplex<M> {
        SimplicialComplex { labels: self.labels.iter().map(f).collect(), faces: self.faces.clone() }
    }
}

impl<L: Ord> SimplicialComplex<L> {
    /// Whether two complexes with distinct labels are equal after matching
    /// vertices by label.
    pub fn same_by_labels(&self, other: &Self) -> bool {
        if self.labels.len() != other.labels.len() || self.faces.len() != other.faces.len() {
            return false;
        }
        let pos: BTreeMap<&L, usize> = other.labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        if pos.len() != other.labels.len() {
            return false;
        }
        let mut map = Vec::with_capacity(self.labels.len());
        for l in &self.labels {
            match pos.get(l) {
                Some(&i) => map.push(i),
                None => return false,
            }
        }
        self.faces.iter().all(|s| other.faces.contains(&normalize(s.iter().map(|&v| map[v]).collect())))
    }
}
