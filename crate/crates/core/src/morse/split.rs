//! Link-vertex weights and the dead / ascending / descending split.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::character::{Character, EdgeClass, ThetaEdge};
use super::MorseError;
use crate::bigraph::BlockPair;
use crate::cubeworld::{Factor, LinkVertexLabel, ProductCubeComplex};
use crate::simplicial::{Simplex, SimplicialComplex};
use crate::{Budget, Verdict};

/// Edge class of a factor edge.
pub fn factor_edge_class(x: &ProductCubeComplex, factor: usize, edge: usize) -> Result<EdgeClass, MorseError> {
    match x.factor(factor) {
        Factor::Theta { n } => Ok(EdgeClass::Theta(ThetaEdge::from_position(edge, *n))),
        Factor::Join { .. } => {
            let (tail, head) = x.factor(factor).endpoints(edge);
            match (x.block_of(tail), x.block_of(head)) {
                (Some(a), Some(b)) => Ok(EdgeClass::Block(BlockPair::new(a, b))),
                _ => Err(MorseError::Unsupported("join factor without a block structure")),
            }
        }
        Factor::Graph { .. } => Err(MorseError::Unsupported("weights on a general factor graph")),
    }
}

/// Height change along each link vertex of `v`: the class weight when the
/// edge leaves `v` at its tail, its negative otherwise.
pub fn link_weights(
    x: &ProductCubeComplex,
    v: [usize; 3],
    link: &SimplicialComplex<LinkVertexLabel>,
    lambda: &Character,
) -> Result<Vec<BigRational>, MorseError> {
    link.labels()
        .iter()
        .map(|l| {
            let i = l.factor as usize;
            let class = factor_edge_class(x, i, l.edge)?;
            let w = super::character::edge_weight(class, lambda);
            let (tail, _) = x.factor(i).endpoints(l.edge);
            Ok(if v[i] == tail { w } else { -w })
        })
        .collect()
}

/// The three full subcomplexes on dead, ascending and descending link
/// vertices, with the original indices of their vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkSplit<L> {
    pub dead: SimplicialComplex<L>,
    pub ascending: SimplicialComplex<L>,
    pub descending: SimplicialComplex<L>,
    pub dead_vertices: Vec<usize>,
    pub ascending_vertices: Vec<usize>,
    pub descending_vertices: Vec<usize>,
}

pub fn signs(weights: &[BigRational]) -> Vec<i8> {
    weights.iter().map(super::character::sign_of).collect()
}

pub fn living_dead_split<L: Clone>(link: &SimplicialComplex<L>, weights: &[BigRational]) -> LinkSplit<L> {
    let s = signs(weights);
    let pick = |target: i8| -> Vec<usize> { (0..s.len()).filter(|&v| s[v] == target).collect() };
    let (dead_vertices, ascending_vertices, descending_vertices) = (pick(0), pick(1), pick(-1));
    LinkSplit {
        dead: link.full_subcomplex(&dead_vertices),
        ascending: link.full_subcomplex(&ascending_vertices),
        descending: link.full_subcomplex(&descending_vertices),
        dead_vertices,
        ascending_vertices,
        descending_vertices,
    }
}

/// Link simplices whose cube is flat: every corner has the height of the
/// center.
pub fn flat_simplices<L>(link: &SimplicialComplex<L>, weights: &[BigRational]) -> BTreeSet<Simplex> {
    link.simplices()
        .filter(|s| {
            (1u32..(1 << s.len())).all(|mask| {
                let mut h = BigRational::zero();
                for (k, &v) in s.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        h += &weights[v];
                    }
                }
                h.is_zero()
            })
        })
        .cloned()
        .collect()
}

/// A vertex whose flat link simplices do not form a full subcomplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullnessViolation {
    pub vertex: [usize; 3],
    pub simplex: Vec<LinkVertexLabel>,
}

/// Checks at every vertex that the simplices of flat cubes form a full
/// subcomplex of the link.
///
/// X_Γ complexes are checked at one vertex per block triple unless
/// `exhaustive` is set; other complexes at every vertex.
pub fn check_dead_links_full(
    x: &ProductCubeComplex,
    lambda: &Character,
    exhaustive: bool,
    budget: &Budget,
) -> Result<(Verdict, Option<FullnessViolation>), MorseError> {
    let needed = x.ambient_vertex_count();
    if needed > budget.vertices as u128 {
        return Err(MorseError::Cube(crate::cubeworld::CubeError::BudgetExceeded { needed, budget: budget.vertices }));
    }
    let vertices: Vec<[usize; 3]> = if exhaustive || x.graph().is_none() {
        x.vertices().collect()
    } else {
        x.type_representatives().into_iter().map(|(_, v)| v).collect()
    };
    for v in vertices {
        let link = x.vertex_link(v).map_err(MorseError::Cube)?;
        let weights = link_weights(x, v, &link, lambda)?;
        let flat = flat_simplices(&link, &weights);
        if let Some(s) = link.fullness_violation(&flat) {
            let simplex = s.iter().map(|&i| *link.label(i)).collect();
            return Ok((Verdict::Fail, Some(FullnessViolation { vertex: v, simplex })));
        }
    }
    Ok((Verdict::Pass, None))
}
