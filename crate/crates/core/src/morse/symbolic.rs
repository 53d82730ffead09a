//! Block-level engine for X_Γ: links are described by which opposite
//! blocks each factor can move into, how many vertices that gives, and the
//! sign of the class weight. The sizeability certificate supplies the two
//! facts the arguments need: every block-pair span is connected and every
//! vertex has at least one neighbour in every opposite block.
//!
//! A vertex whose cyclic word has no `B → A` step (types `AAA`, `BBB`) has
//! the join of three discrete sets as link. Otherwise there is exactly one
//! step `v_i ∈ B`, `v_{i+1} ∈ A`, and the link is `Γ ∗ D`: factor `i` moves
//! into all of `A`, factor `i + 1` into all of `B`, joined along Γ, and the
//! third factor contributes a discrete set.
//!
//! Characters with zero coordinates need no separate routing: dead classes
//! are whatever block pairs have weight zero, and every check below only
//! asks for some living class of the right sign.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::character::{edge_weight, sign_of, Character, EdgeClass};
use super::check::{block_type_name, validate_target, Direction, Engine, SimplexCheck, VertexTypeReport, Witness};
use super::MorseError;
use crate::bigraph::{BlockId, BlockPair, ModularSpec, MorseGraph, Side, SizeabilityReport};
use crate::simplicial::ConnLevel;
use crate::Verdict;

/// Block sizes and neighbour-count ranges backed by a sizeability
/// certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicModel {
    rank: u32,
    sizes: BTreeMap<BlockId, u128>,
    /// `(X, Y) ↦ (min, max)` of `|N(x) ∩ Y|` over `x ∈ X`.
    ranges: BTreeMap<(BlockId, BlockId), (u128, u128)>,
}

impl SymbolicModel {
    pub fn from_certificate(
        rank: u32,
        report: &SizeabilityReport,
        sizes: BTreeMap<BlockId, u128>,
    ) -> Result<Self, MorseError> {
        if !report.spans_certified() {
            return Err(MorseError::MissingCertificate);
        }
        for side in [Side::A, Side::B] {
            for x in BlockId::all(side, rank) {
                if sizes.get(&x).copied().unwrap_or(0) == 0 {
                    return Err(MorseError::MissingCertificate);
                }
                for y in BlockId::all(side.opposite(), rank) {
                    if !report.neighbor_counts.contains_key(&(x, y)) {
                        return Err(MorseError::MissingCertificate);
                    }
                }
            }
        }
        Ok(SymbolicModel { rank, sizes, ranges: report.neighbor_counts.clone() })
    }

    pub fn for_graph(graph: &MorseGraph, report: &SizeabilityReport) -> Result<Self, MorseError> {
        let sizes = graph.blocks().iter().map(|(b, v)| (*b, v.len() as u128)).collect();
        SymbolicModel::from_certificate(graph.rank(), report, sizes)
    }

    pub fn for_spec(spec: &ModularSpec, report: &SizeabilityReport) -> Result<Self, MorseError> {
        let n = spec.rank();
        let sizes = BlockId::all(Side::A, n).chain(BlockId::all(Side::B, n)).map(|b| (b, spec.modulus())).collect();
        SymbolicModel::from_certificate(n, report, sizes)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    fn size(&self, b: BlockId) -> u128 {
        self.sizes[&b]
    }

    fn range(&self, x: BlockId, y: BlockId) -> (u128, u128) {
        self.ranges[&(x, y)]
    }
}

/// The link vertices of one factor moving into one opposite block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Class {
    factor: usize,
    block: BlockId,
    lo: u128,
    hi: u128,
    sign: i8,
}

impl Class {
    fn name(&self) -> String {
        format!("f{}:{}", self.factor + 1, self.block)
    }
}

/// Class sign: moving `A → B` along a class of weight `c` changes the
/// height by `c`, moving `B → A` by `−c`.
fn class_sign(lambda: &Character, from: BlockId, to: BlockId) -> i8 {
    let (a, b, s) = if from.side == Side::A { (from, to, 1) } else { (to, from, -1) };
    s * sign_of(&edge_weight(EdgeClass::Block(BlockPair::new(a, b)), lambda))
}

/// Discrete factor `f`: targets restricted to a neighbourhood when the
/// cyclic neighbour imposes an adjacency.
fn discrete_classes(model: &SymbolicModel, t: &[BlockId; 3], f: usize, lambda: &Character) -> Vec<Class> {
    let here = t[f];
    let restrict = if here.side == Side::A { t[(f + 2) % 3] } else { t[(f + 1) % 3] };
    let restricted = restrict.side == here.side;
    BlockId::all(here.side.opposite(), model.rank)
        .map(|y| {
            let (lo, hi) = if restricted { model.range(restrict, y) } else { (model.size(y), model.size(y)) };
            Class { factor: f, block: y, lo, hi, sign: class_sign(lambda, here, y) }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Shape {
    Empty,
    Point,
    /// Connected with at least two vertices; `cycle` when a cycle is forced.
    Connected { cycle: bool },
    /// At least two components.
    Disconnected,
    /// Nonempty, connectivity unknown.
    Nonempty,
}

/// A join factor: its shape and a human-readable description.
pub(crate) struct Piece {
    pub(crate) shape: Shape,
    pub(crate) text: String,
}

fn describe(classes: &[&Class]) -> String {
    if classes.is_empty() {
        return String::from("{}");
    }
    let parts: Vec<String> = classes
        .iter()
        .map(|c| if c.lo == c.hi { format!("{}[{}]", c.name(), c.lo) } else { format!("{}[{}..{}]", c.name(), c.lo, c.hi) })
        .collect();
    parts.join(" ")
}

fn discrete(classes: &[&Class]) -> Piece {
    let lo: u128 = classes.iter().map(|c| c.lo).sum();
    let hi: u128 = classes.iter().map(|c| c.hi).sum();
    Piece { shape: discrete_shape(lo, hi), text: format!("discrete {}", describe(classes)) }
}

/// Shape of a discrete set whose size lies in `[lo, hi]`.
pub(crate) fn discrete_shape(lo: u128, hi: u128) -> Shape {
    if hi == 0 {
        Shape::Empty
    } else if lo == 1 && hi == 1 {
        Shape::Point
    } else if lo >= 2 {
        Shape::Disconnected
    } else {
        Shape::Nonempty
    }
}

/// The subgraph of Γ on whole blocks `xs ⊆ A` and `ys ⊆ B`.
fn gamma(model: &SymbolicModel, xs: &[&Class], ys: &[&Class]) -> Piece {
    if xs.is_empty() || ys.is_empty() {
        let mut p = discrete(if xs.is_empty() { ys } else { xs });
        p.text = format!("edgeless part of Γ: {}", p.text);
        return p;
    }
    // Connected: each span is connected and spans (X,Y), (X',Y') meet
    // through (X,Y'). A cycle is forced once edges reach vertices.
    let verts: u128 = xs.iter().chain(ys).map(|c| c.lo).sum();
    let edges: u128 = xs.iter().map(|x| ys.iter().map(|y| x.lo.saturating_mul(model.range(x.block, y.block).0)).fold(0u128, u128::saturating_add)).fold(0, u128::saturating_add);
    let all: Vec<&Class> = xs.iter().chain(ys).copied().collect();
    Piece { shape: Shape::Connected { cycle: edges >= verts }, text: format!("Γ on {}", describe(&all)) }
}

/// Neighbours of a vertex of block `from` inside the given whole blocks.
fn neighbourhood(model: &SymbolicModel, from: BlockId, within: &[&Class]) -> Piece {
    let restricted: Vec<Class> = within
        .iter()
        .map(|c| {
            let (lo, hi) = model.range(from, c.block);
            Class { lo, hi, ..**c }
        })
        .collect();
    let refs: Vec<&Class> = restricted.iter().collect();
    let mut p = discrete(&refs);
    p.text = format!("neighbours of a {from} vertex: {}", p.text);
    p
}

/// Verdict for the join of `pieces` against `required`.
pub(crate) fn join_verdict(pieces: &[Piece], required: i8) -> (Verdict, ConnLevel, &'static str) {
    let live: Vec<Shape> = pieces.iter().map(|p| p.shape).filter(|s| *s != Shape::Empty).collect();
    let k = live.len();
    if k == 0 {
        return (Verdict::from_bool(required < -1), ConnLevel::Empty, "empty");
    }
    let connected = k >= 2 || matches!(live[0], Shape::Point | Shape::Connected { .. });
    let simply = k >= 3
        || live.contains(&Shape::Point)
        || (k == 2 && live.iter().any(|s| matches!(s, Shape::Connected { .. })));
    let level = if simply {
        ConnLevel::SimplyConnected
    } else if connected {
        ConnLevel::Connected
    } else {
        ConnLevel::Nonempty
    };
    if level.value() >= required {
        return (Verdict::Pass, level, "join_criterion");
    }
    let fails = match required {
        0 => k == 1 && live[0] == Shape::Disconnected,
        _ => {
            (k == 1 && matches!(live[0], Shape::Disconnected | Shape::Connected { cycle: true }))
                || (k == 2 && live.iter().all(|s| *s == Shape::Disconnected))
        }
    };
    (if fails { Verdict::Fail } else { Verdict::Inconclusive }, level, "block_level")
}

pub(crate) struct TypeChecker<'a> {
    pub(crate) report: VertexTypeReport,
    pub(crate) vertex: &'a str,
}

impl TypeChecker<'_> {
    pub(crate) fn run(&mut self, sigma: Vec<String>, dir: Direction, required: i8, pieces: Vec<Piece>) {
        let (verdict, level, method) = join_verdict(&pieces, required);
        let witness = if verdict.is_pass() {
            None
        } else if level == ConnLevel::Empty {
            Some(Witness::Empty)
        } else {
            let parts: Vec<String> = pieces.iter().map(|p| p.text.clone()).collect();
            Some(Witness::Reason(format!("living link is the join of: {}", parts.join("; "))))
        };
        self.report.checks_run += 1;
        self.report.record(SimplexCheck {
            vertex: String::from(self.vertex),
            sigma,
            direction: dir,
            required,
            verdict,
            homological: verdict,
            level,
            method,
            witness,
        });
    }
}

fn filter(classes: &[Class], sign: i8) -> Vec<&Class> {
    classes.iter().filter(|c| c.sign == sign).collect()
}

/// Symbolic checks for one block triple.
pub fn check_block_type(
    model: &SymbolicModel,
    t: [BlockId; 3],
    lambda: &Character,
    m: i8,
) -> Result<VertexTypeReport, MorseError> {
    validate_target(m)?;
    let name = block_type_name(&t);
    let mut ck = TypeChecker { report: VertexTypeReport::new(name.clone(), name.clone(), Engine::Symbolic), vertex: &name };
    ck.report.vertices_checked = 1;
    let step = (0..3).find(|&i| t[i].side == Side::B && t[(i + 1) % 3].side == Side::A);
    let mut dead_count = 1;
    let dirs = [Direction::Ascending, Direction::Descending];
    let sgn = |d: Direction| if d == Direction::Ascending { 1i8 } else { -1 };
    match step {
        None => {
            let d: Vec<Vec<Class>> = (0..3).map(|f| discrete_classes(model, &t, f, lambda)).collect();
            for dir in dirs {
                let pieces = (0..3).map(|f| discrete(&filter(&d[f], sgn(dir)))).collect();
                ck.run(Vec::new(), dir, m, pieces);
            }
            if m >= 0 {
                for f in 0..3 {
                    for c in filter(&d[f], 0) {
                        dead_count += 1;
                        for dir in dirs {
                            let others = [(f + 1) % 3, (f + 2) % 3];
                            let pieces = others.iter().map(|&g| discrete(&filter(&d[g], sgn(dir)))).collect();
                            ck.run(vec![c.name()], dir, m - 1, pieces);
                        }
                    }
                }
            }
            if m >= 1 {
                for f in 0..3 {
                    for g in f + 1..3 {
                        let h = 3 - f - g;
                        for c in filter(&d[f], 0) {
                            for e in filter(&d[g], 0) {
                                dead_count += 1;
                                for dir in dirs {
                                    let pieces = vec![discrete(&filter(&d[h], sgn(dir)))];
                                    ck.run(vec![c.name(), e.name()], dir, m - 2, pieces);
                                }
                            }
                        }
                    }
                }
            }
        }
        Some(i) => {
            let (fa, fb, fd) = (i, (i + 1) % 3, (i + 2) % 3);
            let a: Vec<Class> = BlockId::all(Side::A, model.rank)
                .map(|x| Class { factor: fa, block: x, lo: model.size(x), hi: model.size(x), sign: class_sign(lambda, t[fa], x) })
                .collect();
            let b: Vec<Class> = BlockId::all(Side::B, model.rank)
                .map(|y| Class { factor: fb, block: y, lo: model.size(y), hi: model.size(y), sign: class_sign(lambda, t[fb], y) })
                .collect();
            let d = discrete_classes(model, &t, fd, lambda);
            for dir in dirs {
                let s = sgn(dir);
                ck.run(Vec::new(), dir, m, vec![gamma(model, &filter(&a, s), &filter(&b, s)), discrete(&filter(&d, s))]);
            }
            if m >= 0 {
                for c in filter(&d, 0) {
                    dead_count += 1;
                    for dir in dirs {
                        let s = sgn(dir);
                        ck.run(vec![c.name()], dir, m - 1, vec![gamma(model, &filter(&a, s), &filter(&b, s))]);
                    }
                }
                for (own, other) in [(&a, &b), (&b, &a)] {
                    for c in filter(own, 0) {
                        dead_count += 1;
                        for dir in dirs {
                            let s = sgn(dir);
                            let pieces = vec![neighbourhood(model, c.block, &filter(other, s)), discrete(&filter(&d, s))];
                            ck.run(vec![c.name()], dir, m - 1, pieces);
                        }
                    }
                }
            }
            if m >= 1 {
                for x in filter(&a, 0) {
                    for y in filter(&b, 0) {
                        dead_count += 1;
                        for dir in dirs {
                            ck.run(vec![x.name(), y.name()], dir, m - 2, vec![discrete(&filter(&d, sgn(dir)))]);
                        }
                    }
                }
                for (own, other) in [(&a, &b), (&b, &a)] {
                    for x in filter(own, 0) {
                        for e in filter(&d, 0) {
                            dead_count += 1;
                            for dir in dirs {
                                let pieces = vec![neighbourhood(model, x.block, &filter(other, sgn(dir)))];
                                ck.run(vec![x.name(), e.name()], dir, m - 2, pieces);
                            }
                        }
                    }
                }
            }
        }
    }
    ck.report.dead_simplices = dead_count;
    Ok(ck.report)
}

/// Symbolic checks for every block triple, in block order.
pub fn check_xgamma_symbolic(model: &SymbolicModel, lambda: &Character, m: i8) -> Result<Vec<VertexTypeReport>, MorseError> {
    let n = model.rank;
    let all: Vec<BlockId> = BlockId::all(Side::A, n).chain(BlockId::all(Side::B, n)).collect();
    let mut out = Vec::new();
    for &b0 in &all {
        for &b1 in &all {
            for &b2 in &all {
                out.push(check_block_type(model, [b0, b1, b2], lambda, m)?);
            }
        }
    }
    Ok(out)
}
