//! Cube complexes inside a product of three graphs.
//!
//! A [`ProductCubeComplex`] is the subcomplex of `G₁ × G₂ × G₃` induced by
//! the vertices that satisfy a [`MembershipRule`]. Cells are never stored;
//! they are tested on demand from their corners.

mod counts;

pub use counts::{
    cell_counts, closed_form_counts, euler_formula_xgamma, euler_formula_y, euler_y_cover_decomposition,
    xgamma_counts_exact, xgamma_counts_from_stats, CellCounts, CountMode,
};

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bigraph::{BlockId, MorseGraph, Side};
use crate::simplicial::SimplicialComplex;
use crate::Budget;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CubeError {
    ThetaRank(u32),
    NotAVertex([usize; 3]),
    BudgetExceeded { needed: u128, budget: u64 },
    Overflow,
    Unsupported(&'static str),
}

impl fmt::Display for CubeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CubeError::ThetaRank(n) => write!(f, "theta graphs need rank at least 2, got {n}"),
            CubeError::NotAVertex(v) => write!(f, "{v:?} is not a vertex of the complex"),
            CubeError::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration needs {needed} steps, budget is {budget}")
            }
            CubeError::Overflow => f.write_str("cell counts exceed the 128-bit range"),
            CubeError::Unsupported(what) => write!(f, "unsupported: {what}"),
        }
    }
}

/// A factor graph. Edges have a tail and a head; for the complete
/// bipartite graph the tail is on side A, for the theta graph `x` edges run
/// `0 → 1` and `y` edges `1 → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// Two vertices `0, 1` and edges `x₁..x_n, y₁..y_n`; edge `i < n` is
    /// `x_{i+1}`, edge `n + i` is `y_{i+1}`.
    Theta { n: u32 },
    /// Complete bipartite graph `A * B`: vertices `0..a` form `A`,
    /// `a..a+b` form `B`; edge `i·b + j` joins `i` and `a + j`.
    Join { a: usize, b: usize },
    /// Any loopless multigraph.
    Graph { vertices: usize, edges: Vec<(usize, usize)> },
}

impl Factor {
    pub fn vertex_count(&self) -> usize {
        match self {
            Factor::Theta { .. } => 2,
            Factor::Join { a, b } => a + b,
            Factor::Graph { vertices, .. } => *vertices,
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            Factor::Theta { n } => 2 * *n as usize,
            Factor::Join { a, b } => a * b,
            Factor::Graph { edges, .. } => edges.len(),
        }
    }

    /// `(tail, head)` of an edge.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        match self {
            Factor::Theta { n } => {
                if e < *n as usize {
                    (0, 1)
                } else {
                    (1, 0)
                }
            }
            Factor::Join { a, b } => (e / b, a + e % b),
            Factor::Graph { edges, .. } => edges[e],
        }
    }

    /// Edges at `v` with their other endpoint, in edge order.
    pub fn edges_at(&self, v: usize) -> Vec<(usize, usize)> {
        match self {
            Factor::Theta { n } => (0..2 * *n as usize).map(|e| (e, 1 - v)).collect(),
            Factor::Join { a, b } => {
                if v < *a {
                    (0..*b).map(|j| (v * b + j, a + j)).collect()
                } else {
                    (0..*a).map(|i| (i * b + (v - a), i)).collect()
                }
            }
            Factor::Graph { edges, .. } => edges
                .iter()
                .enumerate()
                .filter_map(|(e, &(s, t))| {
                    if s == v {
                        Some((e, t))
                    } else if t == v {
                        Some((e, s))
                    } else {
                        None
                    }
                })
                .collect(),
        }
    }

    pub fn edge_name(&self, e: usize) -> String {
        match self {
            Factor::Theta { n } => {
                let n = *n as usize;
                if e < n {
                    format!("x{}", e + 1)
                } else {
                    format!("y{}", e - n + 1)
                }
            }
            _ => {
                let (s, t) = self.endpoints(e);
                format!("{s}-{t}")
            }
        }
    }

    pub fn euler(&self) -> i128 {
        self.vertex_count() as i128 - self.edge_count() as i128
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipRule {
    FullProduct,
    /// Vertex `v` belongs iff for every cyclic position `i` with
    /// `v_i ∈ A` and `v_{i+1} ∈ B`, the two are adjacent in the graph.
    XGamma(MorseGraph),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorCell {
    Vertex(usize),
    Edge(usize),
}

/// A link vertex: the edge of the complex leaving the center in factor
/// `factor` (0-based) along factor edge `edge` towards `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkVertexLabel {
    pub factor: u8,
    pub target: usize,
    pub edge: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCubeComplex {
    factors: [Factor; 3],
    rule: MembershipRule,
}

pub fn build_x_gamma(graph: &MorseGraph) -> ProductCubeComplex {
    let a = graph.side_len(Side::A);
    let b = graph.side_len(Side::B);
    let f = Factor::Join { a, b };
    ProductCubeComplex { factors: [f.clone(), f.clone(), f], rule: MembershipRule::XGamma(graph.clone()) }
}

pub fn build_theta_cube(n: u32) -> Result<ProductCubeComplex, CubeError> {
    if n < 2 {
        return Err(CubeError::ThetaRank(n));
    }
    let f = Factor::Theta { n };
    Ok(ProductCubeComplex { factors: [f.clone(), f.clone(), f], rule: MembershipRule::FullProduct })
}

impl ProductCubeComplex {
    pub fn full_product(factors: [Factor; 3]) -> Self {
        ProductCubeComplex { factors, rule: MembershipRule::FullProduct }
    }

    pub fn factors(&self) -> &[Factor; 3] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &Factor {
        &self.factors[i]
    }

    pub fn rule(&self) -> &MembershipRule {
        &self.rule
    }

    pub fn graph(&self) -> Option<&MorseGraph> {
        match &self.rule {
            MembershipRule::XGamma(g) => Some(g),
            MembershipRule::FullProduct => None,
        }
    }

    /// For the X_Γ family: the side and index of a factor vertex.
    pub fn side_of(&self, v: usize) -> Option<(Side, usize)> {
        let g = self.graph()?;
        let a = g.side_len(Side::A);
        Some(if v < a { (Side::A, v) } else { (Side::B, v - a) })
    }

    pub fn block_of(&self, v: usize) -> Option<BlockId> {
        let g = self.graph()?;
        let (side, i) = self.side_of(v)?;
        g.block_of(crate::bigraph::Vertex { side, index: i })
    }

    pub fn ambient_vertex_count(&self) -> u128 {
        self.factors.iter().map(|f| f.vertex_count() as u128).product()
    }

    pub fn contains(&self, v: [usize; 3]) -> bool {
        if (0..3).any(|i| v[i] >= self.factors[i].vertex_count()) {
            return false;
        }
        match &self.rule {
            MembershipRule::FullProduct => true,
            MembershipRule::XGamma(g) => {
                let a = g.side_len(Side::A);
                (0..3).all(|i| {
                    let (x, y) = (v[i], v[(i + 1) % 3]);
                    !(x < a && y >= a) || g.has_edge(x, y - a)
                })
            }
        }
    }

    pub fn corners(&self, cell: [FactorCell; 3]) -> Vec<[usize; 3]> {
        let options: Vec<Vec<usize>> = cell
            .iter()
            .enumerate()
            .map(|(i, c)| match *c {
                FactorCell::Vertex(v) => vec![v],
                FactorCell::Edge(e) => {
                    let (s, t) = self.factors[i].endpoints(e);
                    vec![s, t]
                }
            })
            .collect();
        let mut out = Vec::new();
        for &x in &options[0] {
            for &y in &options[1] {
                for &z in &options[2] {
                    out.push([x, y, z]);
                }
            }
        }
        out
    }

    /// A product cell is present iff all its corners are vertices.
    pub fn contains_cell(&self, cell: [FactorCell; 3]) -> bool {
        self.corners(cell).into_iter().all(|v| self.contains(v))
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        let [n0, n1, n2] = [0, 1, 2].map(|i| self.factors[i].vertex_count());
        (0..n0)
            .flat_map(move |x| (0..n1).flat_map(move |y| (0..n2).map(move |z| [x, y, z])))
            .filter(move |&v| self.contains(v))
    }

    pub fn vertex_name(&self, v: [usize; 3]) -> String {
        let names: Vec<String> = (0..3).map(|i| self.factor_vertex_name(v[i])).collect();
        format!("({}, {}, {})", names[0], names[1], names[2])
    }

    pub fn factor_vertex_name(&self, x: usize) -> String {
        match self.graph() {
            Some(g) => {
                let (side, i) = self.side_of(x).unwrap();
                String::from(g.name(crate::bigraph::Vertex { side, index: i }))
            }
            None => format!("{x}"),
        }
    }

    pub fn link_vertex_name(&self, l: &LinkVertexLabel) -> String {
        let f = &self.factors[l.factor as usize];
        match f {
            Factor::Theta { .. } => format!("f{}:{}", l.factor + 1, f.edge_name(l.edge)),
            _ => format!("f{}:{}", l.factor + 1, self.factor_vertex_name(l.target)),
        }
    }

    fn moved(v: [usize; 3], changes: &[(usize, usize)]) -> [usize; 3] {
        let mut u = v;
        for &(i, w) in changes {
            u[i] = w;
        }
        u
    }

    /// The link of a vertex: one link vertex per edge at `v`, an edge per
    /// square and a triangle per 3-cube containing `v`.
    pub fn vertex_link(&self, v: [usize; 3]) -> Result<SimplicialComplex<LinkVertexLabel>, CubeError> {
        if !self.contains(v) {
            return Err(CubeError::NotAVertex(v));
        }
        let mut labels = Vec::new();
        for i in 0..3 {
            for (edge, target) in self.factors[i].edges_at(v[i]) {
                if self.contains(Self::moved(v, &[(i, target)])) {
                    labels.push(LinkVertexLabel { factor: i as u8, target, edge });
                }
            }
        }
        let by_factor: Vec<Vec<usize>> =
            (0..3).map(|i| (0..labels.len()).filter(|&k| labels[k].factor as usize == i).collect()).collect();
        let mut simplices = Vec::new();
        let square = |p: usize, q: usize| {
            let (lp, lq) = (labels[p], labels[q]);
            self.contains(Self::moved(v, &[(lp.factor as usize, lp.target), (lq.factor as usize, lq.target)]))
        };
        let mut edge_ok = alloc::collections::BTreeSet::new();
        for i in 0..3 {
            for j in i + 1..3 {
                for &p in &by_factor[i] {
                    for &q in &by_factor[j] {
                        if square(p, q) {
                            edge_ok.insert((p, q));
                            simplices.push(vec![p, q]);
                        }
                    }
                }
            }
        }
        for &p in &by_factor[0] {
            for &q in &by_factor[1] {
                if !edge_ok.contains(&(p, q)) {
                    continue;
                }
                for &r in &by_factor[2] {
                    if edge_ok.contains(&(p, r)) && edge_ok.contains(&(q, r)) {
                        let (lp, lq, lr) = (labels[p], labels[q], labels[r]);
                        let corner = Self::moved(v, &[(0, lp.target), (1, lq.target), (2, lr.target)]);
                        if self.contains(corner) {
                            simplices.push(vec![p, q, r]);
                        }
                    }
                }
            }
        }
        Ok(SimplicialComplex::new(labels, simplices).expect("link simplices index the label list"))
    }

    /// The block triple of an X_Γ vertex.
    pub fn block_type(&self, v: [usize; 3]) -> Option<[BlockId; 3]> {
        Some([self.block_of(v[0])?, self.block_of(v[1])?, self.block_of(v[2])?])
    }

    /// One representative vertex for every block triple that occurs, in
    /// block order. Only for the X_Γ family.
    pub fn type_representatives(&self) -> Vec<([BlockId; 3], [usize; 3])> {
        let Some(g) = self.graph() else { return Vec::new() };
        let n = g.rank();
        let a = g.side_len(Side::A);
        let all: Vec<BlockId> = BlockId::all(Side::A, n).chain(BlockId::all(Side::B, n)).collect();
        let offset = |b: BlockId| if b.side == Side::A { 0 } else { a };
        let mut out = Vec::new();
        for &b0 in &all {
            for &b1 in &all {
                for &b2 in &all {
                    let blocks = [b0, b1, b2];
                    if blocks.iter().any(|b| g.block(*b).is_empty()) {
                        continue;
                    }
                    // Coordinates in a required adjacency come from an edge.
                    let mut v = [0usize; 3];
                    let mut chosen = [false; 3];
                    let mut ok = true;
                    for i in 0..3 {
                        let j = (i + 1) % 3;
                        if blocks[i].side == Side::A && blocks[j].side == Side::B {
                            let found = g.block(blocks[i]).iter().find_map(|&x| {
                                g.neighbors(crate::bigraph::Vertex::a(x))
                                    .iter()
                                    .find(|&&y| g.block(blocks[j]).binary_search(&y).is_ok())
                                    .map(|&y| (x, y))
                            });
                            match found {
                                Some((x, y)) => {
                                    v[i] = x;
                                    v[j] = a + y;
                                    chosen[i] = true;
                                    chosen[j] = true;
                                }
                                None => ok = false,
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    for i in 0..3 {
                        if !chosen[i] {
                            v[i] = offset(blocks[i]) + g.block(blocks[i])[0];
                        }
                    }
                    debug_assert!(self.contains(v));
                    out.push((blocks, v));
                }
            }
        }
        out
    }
}

/// First vertex whose link is not flag, with the missing clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCounterexample {
    pub vertex: [usize; 3],
    pub clique: Vec<LinkVertexLabel>,
}

/// Checks every vertex link for the flag condition.
pub fn check_flag_links(x: &ProductCubeComplex, budget: &Budget) -> Result<Option<FlagCounterexample>, CubeError> {
    let needed = x.ambient_vertex_count();
    if needed > budget.vertices as u128 {
        return Err(CubeError::BudgetExceeded { needed, budget: budget.vertices });
    }
    for v in x.vertices() {
        let link = x.vertex_link(v)?;
        if let Some(clique) = link.flag_violation() {
            return Ok(Some(FlagCounterexample { vertex: v, clique: clique.iter().map(|&i| *link.label(i)).collect() }));
        }
    }
    Ok(None)
}
