//! Bipartite Morse-suited graphs.
//!
//! A [`MorseGraph`] is a simple bipartite graph on `A ⊔ B` together with
//! blocks `A_i^±`, `B_j^±` for `i, j ∈ 1..=n`. The modular construction in
//! [`modular`] produces such graphs from residue sets, and [`sizeable`]
//! decides whether a graph (or a modular spec, arithmetically) is sizeable.

mod block;
pub mod modular;
pub mod sizeable;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

pub use block::{BlockId, BlockPair, ParseBlockError, Side, Sign};
pub use modular::{build_modular_spec, template_edge_order, ModularSpec, SpecError};
pub use sizeable::{
    verify_morse_suited, verify_sizeable, Backend, FourCycle, MorseSuitedViolation, SizeabilityReport,
    SizeableInput, SpanCheck, SpanWitness,
};

/// A vertex of a bipartite graph: its side and its index on that side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub fn a(index: usize) -> Self {
        Vertex { side: Side::A, index }
    }

    pub fn b(index: usize) -> Self {
        Vertex { side: Side::B, index }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    ZeroRank,
    BlockOutOfRange { block: BlockId, rank: u32 },
    SideConflict { name: String },
    DuplicateEdge { a: String, b: String },
    UnknownVertex { index: usize, side: Side },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::ZeroRank => f.write_str("rank must be at least 1"),
            GraphError::BlockOutOfRange { block, rank } => {
                write!(f, "block {block} has index outside 1..={rank}")
            }
            GraphError::SideConflict { name } => {
                write!(f, "vertex {name:?} appears on both sides of the bipartition")
            }
            GraphError::DuplicateEdge { a, b } => write!(f, "edge {a:?}-{b:?} listed twice"),
            GraphError::UnknownVertex { index, side } => {
                write!(f, "vertex index {index} does not exist on side {side}")
            }
        }
    }
}

/// Simple bipartite graph with a block structure on each side.
///
/// Blocks are stored as given, so overlapping or empty blocks can be
/// represented; [`verify_morse_suited`] decides whether they form a valid
/// partition. Operations that need a unique block per vertex use
/// [`MorseGraph::block_of`], which returns the first block containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseGraph {
    rank: u32,
    names: [Vec<String>; 2],
    blocks: BTreeMap<BlockId, Vec<usize>>,
    edges: Vec<(usize, usize)>,
    adj: [Vec<Vec<usize>>; 2],
    block_of: [Vec<Option<BlockId>>; 2],
}

impl MorseGraph {
    /// Builds a graph from index-based parts. Edges are `(a, b)` pairs of
    /// indices into `a_names` and `b_names`.
    pub fn from_parts(
        rank: u32,
        a_names: Vec<String>,
        b_names: Vec<String>,
        blocks: BTreeMap<BlockId, Vec<usize>>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self, GraphError> {
        if rank == 0 {
            return Err(GraphError::ZeroRank);
        }
        let sizes = [a_names.len(), b_names.len()];
        let mut block_of = [alloc::vec![None; sizes[0]], alloc::vec![None; sizes[1]]];
        let mut blocks_norm = BTreeMap::new();
        for (block, mut members) in blocks {
            if block.index == 0 || block.index > rank {
                return Err(GraphError::BlockOutOfRange { block, rank });
            }
            members.sort_unstable();
            members.dedup();
            let s = block.side as usize;
            for &v in &members {
                if v >= sizes[s] {
                    return Err(GraphError::UnknownVertex { index: v, side: block.side });
                }
                block_of[s][v].get_or_insert(block);
            }
            blocks_norm.insert(block, members);
        }
        let mut adj = [alloc::vec![Vec::new(); sizes[0]], alloc::vec![Vec::new(); sizes[1]]];
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            if a >= sizes[0] {
                return Err(GraphError::UnknownVertex { index: a, side: Side::A });
            }
            if b >= sizes[1] {
                return Err(GraphError::UnknownVertex { index: b, side: Side::B });
            }
            if !seen.insert((a, b)) {
                return Err(GraphError::DuplicateEdge { a: a_names[a].clone(), b: b_names[b].clone() });
            }
            adj[0][a].push(b);
            adj[1][b].push(a);
        }
        for list in adj.iter_mut().flatten() {
            list.sort_unstable();
        }
        let edges = seen.into_iter().collect();
        Ok(MorseGraph { rank, names: [a_names, b_names], blocks: blocks_norm, edges, adj, block_of })
    }

    /// Builds a graph from vertex names. Each edge is `(a, b)` with `a` on
    /// side A; a vertex's side comes from the blocks or edges it appears in.
    pub fn from_named(
        rank: u32,
        blocks: Vec<(BlockId, Vec<String>)>,
        edges: Vec<(String, String)>,
    ) -> Result<Self, GraphError> {
        let mut index: [BTreeMap<String, usize>; 2] = [BTreeMap::new(), BTreeMap::new()];
        let mut names: [Vec<String>; 2] = [Vec::new(), Vec::new()];
        let mut intern = |side: Side, name: &str| -> Result<usize, GraphError> {
            let s = side as usize;
            if index[1 - s].contains_key(name) {
                return Err(GraphError::SideConflict { name: name.to_string() });
            }
            if let Some(&i) = index[s].get(name) {
                return Ok(i);
            }
            let i = names[s].len();
            names[s].push(name.to_string());
            index[s].insert(name.to_string(), i);
            Ok(i)
        };
        let mut block_map: BTreeMap<BlockId, Vec<usize>> = BTreeMap::new();
        for (block, members) in &blocks {
            let entry = block_map.entry(*block).or_default();
            for name in members {
                entry.push(intern(block.side, name)?);
            }
        }
        let mut edge_idx = Vec::with_capacity(edges.len());
        for (a, b) in &edges {
            edge_idx.push((intern(Side::A, a)?, intern(Side::B, b)?));
        }
        let [a_names, b_names] = names;
        Self::from_parts(rank, a_names, b_names, block_map, edge_idx)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn side_len(&self, side: Side) -> usize {
        self.names[side as usize].len()
    }

    pub fn vertex_count(&self) -> usize {
        self.names[0].len() + self.names[1].len()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.side as usize][v.index]
    }

    pub fn names(&self, side: Side) -> &[String] {
        &self.names[side as usize]
    }

    /// Sorted `(a, b)` edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn blocks(&self) -> &BTreeMap<BlockId, Vec<usize>> {
        &self.blocks
    }

    /// Members of a block (empty if the block was never given).
    pub fn block(&self, id: BlockId) -> &[usize] {
        self.blocks.get(&id).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn block_of(&self, v: Vertex) -> Option<BlockId> {
        self.block_of[v.side as usize][v.index]
    }

    /// Sorted neighbours of `v` (they lie on the other side).
    pub fn neighbors(&self, v: Vertex) -> &[usize] {
        &self.adj[v.side as usize][v.index]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[0].get(a).is_some_and(|n| n.binary_search(&b).is_ok())
    }

    /// Dense adjacency matrix indexed `[a * |B| + b]`.
    pub fn adjacency_matrix(&self) -> Vec<bool> {
        let nb = self.side_len(Side::B);
        let mut m = alloc::vec![false; self.side_len(Side::A) * nb];
        for &(a, b) in &self.edges {
            m[a * nb + b] = true;
        }
        m
    }
}
