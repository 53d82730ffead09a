//! Modular Morse-suited graphs: blocks are copies of `ℤ/p` and
//! `a_i^s(k) ~ b_j^t(l)` iff `l - k mod p` lies in the residue set attached to
//! the block pair.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{BlockId, BlockPair, GraphError, MorseGraph, Side};
use crate::arith::{is_prime, next_prime_above};
use crate::Budget;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecError {
    ZeroRank,
    NotPrime(u128),
    /// The construction's integers no longer fit in a `u128`.
    Overflow { rank: u32 },
    BadOrder,
    MissingPair(BlockPair),
    EmptyResidues(BlockPair),
    BudgetExceeded { vertices: u128, budget: u64 },
    Graph(GraphError),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::ZeroRank => f.write_str("rank must be at least 1"),
            SpecError::NotPrime(p) => write!(f, "modulus {p} is not prime"),
            SpecError::Overflow { rank } => {
                write!(f, "construction for rank {rank} overflows 128-bit integers")
            }
            SpecError::BadOrder => {
                f.write_str("edge order must list every block pair of the template exactly once")
            }
            SpecError::MissingPair(pair) => write!(f, "no residue set for block pair {pair}"),
            SpecError::EmptyResidues(pair) => write!(f, "residue set for {pair} is empty"),
            SpecError::BudgetExceeded { vertices, budget } => {
                write!(f, "realization needs {vertices} vertices, budget is {budget}")
            }
            SpecError::Graph(e) => write!(f, "{e}"),
        }
    }
}

/// The `(2n)²` block pairs of the template graph, lexicographic on
/// `(A-block, B-block)` with `A1- < A1+ < A2- < …`.
pub fn template_edge_order(rank: u32) -> Vec<BlockPair> {
    BlockId::all(Side::A, rank)
        .flat_map(|a| BlockId::all(Side::B, rank).map(move |b| BlockPair::new(a, b)))
        .collect()
}

/// Residue data defining a modular Morse-suited graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularSpec {
    rank: u32,
    modulus: u128,
    order: Vec<BlockPair>,
    sigma: BTreeMap<BlockPair, Vec<u128>>,
}

impl ModularSpec {
    /// Validates and normalizes a spec: residues are reduced mod `p`,
    /// sorted and deduplicated.
    pub fn new(
        rank: u32,
        modulus: u128,
        order: Vec<BlockPair>,
        sigma: BTreeMap<BlockPair, Vec<u128>>,
    ) -> Result<Self, SpecError> {
        if rank == 0 {
            return Err(SpecError::ZeroRank);
        }
        if !is_prime(modulus) {
            return Err(SpecError::NotPrime(modulus));
        }
        let mut expected = template_edge_order(rank);
        let mut given = order.clone();
        given.sort();
        expected.sort();
        if given != expected {
            return Err(SpecError::BadOrder);
        }
        let mut reduced = BTreeMap::new();
        for pair in &expected {
            let raw = sigma.get(pair).ok_or(SpecError::MissingPair(*pair))?;
            if raw.is_empty() {
                return Err(SpecError::EmptyResidues(*pair));
            }
            let mut rs: Vec<u128> = raw.iter().map(|r| r % modulus).collect();
            rs.sort_unstable();
            rs.dedup();
            reduced.insert(*pair, rs);
        }
        Ok(ModularSpec { rank, modulus, order, sigma: reduced })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    pub fn order(&self) -> &[BlockPair] {
        &self.order
    }

    /// Reduced residue set of a block pair.
    pub fn residues(&self, pair: BlockPair) -> &[u128] {
        &self.sigma[&pair]
    }

    /// Number of vertices of the realized graph, `4n·p`.
    pub fn vertex_count(&self) -> u128 {
        4 * self.rank as u128 * self.modulus
    }

    /// Implicit adjacency: is `a(k) ~ b(l)`?
    pub fn adjacent(&self, a: BlockId, k: u128, b: BlockId, l: u128) -> bool {
        let p = self.modulus;
        let diff = (l % p + p - k % p) % p;
        self.sigma[&BlockPair::new(a, b)].binary_search(&diff).is_ok()
    }

    /// Vertex name used in file formats, e.g. `A1+:3`.
    pub fn vertex_name(block: BlockId, k: u128) -> alloc::string::String {
        format!("{block}:{k}")
    }

    /// Materializes the graph. Vertex `block(k)` gets index
    /// `block.position() * p + k` on its side.
    pub fn realize(&self, budget: &Budget) -> Result<MorseGraph, SpecError> {
        let total = self.vertex_count();
        if total > budget.vertices as u128 {
            return Err(SpecError::BudgetExceeded { vertices: total, budget: budget.vertices });
        }
        let p = self.modulus as usize;
        let width = 2 * self.rank as usize;
        let mut names = [Vec::with_capacity(width * p), Vec::with_capacity(width * p)];
        let mut blocks = BTreeMap::new();
        for side in [Side::A, Side::B] {
            for block in BlockId::all(side, self.rank) {
                let start = block.position() * p;
                blocks.insert(block, (start..start + p).collect::<Vec<_>>());
                for k in 0..p {
                    names[side as usize].push(Self::vertex_name(block, k as u128));
                }
            }
        }
        let mut edges = Vec::new();
        for (pair, residues) in &self.sigma {
            let (ia, ib) = (pair.a.position() * p, pair.b.position() * p);
            for k in 0..p {
                for &r in residues {
                    let l = (k + r as usize) % p;
                    edges.push((ia + k, ib + l));
                }
            }
        }
        let [a_names, b_names] = names;
        MorseGraph::from_parts(self.rank, a_names, b_names, blocks, edges).map_err(SpecError::Graph)
    }
}

/// Residue sets of the construction: `σ(e₁) = {0, 1}` and
/// `σ(e_i) = {2m_i, 4m_i}` where `m_i` sums all earlier residues.
/// Returns unreduced integers in template order together with the final
/// `m_{(2n)²}`.
pub fn construction_residues(rank: u32) -> Result<(Vec<[u128; 2]>, u128), SpecError> {
    let order = template_edge_order(rank);
    let mut sets = Vec::with_capacity(order.len());
    let mut running: u128 = 0;
    let mut last_m = 0;
    for i in 0..order.len() {
        let set = if i == 0 {
            [0, 1]
        } else {
            last_m = running;
            let two = running.checked_mul(2).ok_or(SpecError::Overflow { rank })?;
            let four = running.checked_mul(4).ok_or(SpecError::Overflow { rank })?;
            [two, four]
        };
        running = running
            .checked_add(set[0])
            .and_then(|x| x.checked_add(set[1]))
            .ok_or(SpecError::Overflow { rank })?;
        sets.push(set);
    }
    Ok((sets, last_m))
}

/// Builds the construction's spec. Without an override the modulus is the
/// smallest prime above `8·m_{(2n)²}`.
pub fn build_modular_spec(rank: u32, p_override: Option<u128>) -> Result<ModularSpec, SpecError> {
    if rank == 0 {
        return Err(SpecError::ZeroRank);
    }
    let (sets, last_m) = construction_residues(rank)?;
    let modulus = match p_override {
        Some(p) => {
            if !is_prime(p) {
                return Err(SpecError::NotPrime(p));
            }
            p
        }
        None => {
            let bound = last_m.checked_mul(8).ok_or(SpecError::Overflow { rank })?;
            next_prime_above(bound).ok_or(SpecError::Overflow { rank })?
        }
    };
    let order = template_edge_order(rank);
    let sigma = order.iter().zip(&sets).map(|(pair, set)| (*pair, set.to_vec())).collect();
    ModularSpec::new(rank, modulus, order, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn pair(s: &str) -> BlockPair {
        s.parse().unwrap()
    }

    #[test]
    fn rank_one_construction() {
        let spec = build_modular_spec(1, None).unwrap();
        assert_eq!(spec.modulus(), 397);
        let order: Vec<_> = spec.order().iter().map(|p| p.to_string()).collect();
        assert_eq!(order, ["A1-|B1-", "A1-|B1+", "A1+|B1-", "A1+|B1+"]);
        assert_eq!(spec.residues(pair("A1-|B1-")), [0, 1]);
        assert_eq!(spec.residues(pair("A1-|B1+")), [2, 4]);
        assert_eq!(spec.residues(pair("A1+|B1-")), [14, 28]);
        assert_eq!(spec.residues(pair("A1+|B1+")), [98, 196]);
        let (_, m) = construction_residues(1).unwrap();
        assert_eq!(m, 49);
    }

    #[test]
    fn override_reduces_residues() {
        let spec = build_modular_spec(1, Some(5)).unwrap();
        assert_eq!(spec.residues(pair("A1+|B1-")), [3, 4]);
        assert_eq!(spec.residues(pair("A1+|B1+")), [1, 3]);
        assert_eq!(build_modular_spec(1, Some(4)), Err(SpecError::NotPrime(4)));
        assert_eq!(build_modular_spec(0, None), Err(SpecError::ZeroRank));
    }

    #[test]
    fn higher_ranks_fit_and_four_overflows() {
        // m grows by a factor 7 per edge after the second: m_k = 7^(k-2)
        let (_, m2) = construction_residues(2).unwrap();
        assert_eq!(m2, 7u128.pow(14));
        let spec2 = build_modular_spec(2, None).unwrap();
        assert!(spec2.modulus() > 8 * m2);
        let (_, m3) = construction_residues(3).unwrap();
        assert_eq!(m3, 7u128.pow(34));
        assert!(build_modular_spec(3, None).is_ok());
        assert_eq!(build_modular_spec(4, None), Err(SpecError::Overflow { rank: 4 }));
    }

    #[test]
    fn realization_matches_residue_rule() {
        let spec = build_modular_spec(1, None).unwrap();
        let g = spec.realize(&Budget::default()).unwrap();
        let p = 397;
        assert_eq!(g.edges().len(), 8 * p);
        for v in 0..g.side_len(Side::A) {
            assert_eq!(g.degree(super::super::Vertex::a(v)), 4);
        }
        // a1-(0) ~ b1-(0)
        assert!(g.has_edge(0, 0));
        let a: BlockId = "A1+".parse().unwrap();
        let b: BlockId = "B1-".parse().unwrap();
        for k in 0..p as u128 {
            for l in 0..p as u128 {
                let ia = a.position() * p + k as usize;
                let ib = b.position() * p + l as usize;
                assert_eq!(g.has_edge(ia, ib), spec.adjacent(a, k, b, l));
            }
        }
    }

    #[test]
    fn realization_respects_budget() {
        let spec = build_modular_spec(2, None).unwrap();
        assert!(matches!(spec.realize(&Budget::default()), Err(SpecError::BudgetExceeded { .. })));
    }

    #[test]
    fn spec_validation() {
        let order = template_edge_order(1);
        let mut sigma: BTreeMap<_, _> = order.iter().map(|p| (*p, vec![0u128])).collect();
        assert!(ModularSpec::new(1, 5, order.clone(), sigma.clone()).is_ok());
        sigma.insert(order[0], vec![]);
        assert!(matches!(ModularSpec::new(1, 5, order.clone(), sigma.clone()), Err(SpecError::EmptyResidues(_))));
        sigma.remove(&order[0]);
        assert!(matches!(ModularSpec::new(1, 5, order.clone(), sigma), Err(SpecError::MissingPair(_))));
        assert_eq!(
            ModularSpec::new(1, 5, order[..3].to_vec(), BTreeMap::new()),
            Err(SpecError::BadOrder)
        );
    }
}
