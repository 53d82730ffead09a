//! Morse-suitedness and sizeability checks.
//!
//! The explicit backend works on a materialized [`MorseGraph`]: 4-cycles are
//! found by common-neighbour counting and block-pair spans by graph search.
//! The arithmetic backend works on a [`ModularSpec`] alone and decides the
//! same properties from residues, following the four cases of the
//! construction's 4-cycle argument.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{BlockId, BlockPair, ModularSpec, MorseGraph, Side, Vertex};
use crate::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Backend {
    Explicit,
    Arithmetic,
}

impl Backend {
    pub fn as_str(self) -> &'static str {
        match self {
            Backend::Explicit => "explicit",
            Backend::Arithmetic => "arithmetic",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum SizeableInput<'a> {
    Graph(&'a MorseGraph),
    Spec(&'a ModularSpec),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackendMismatch {
    pub backend: Backend,
}

impl fmt::Display for BackendMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.backend {
            Backend::Explicit => f.write_str("the explicit backend needs a realized graph"),
            Backend::Arithmetic => f.write_str("the arithmetic backend needs a modular spec"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorseSuitedViolation {
    EmptyBlock(BlockId),
    Overlap { first: BlockId, second: BlockId, vertex: String },
    Uncovered { side: Side, vertex: String },
}

impl fmt::Display for MorseSuitedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorseSuitedViolation::EmptyBlock(b) => write!(f, "block {b} is empty"),
            MorseSuitedViolation::Overlap { first, second, vertex } => {
                write!(f, "vertex {vertex} lies in both {first} and {second}")
            }
            MorseSuitedViolation::Uncovered { side, vertex } => {
                write!(f, "vertex {vertex} on side {side} lies in no block")
            }
        }
    }
}

/// An embedded 4-cycle `a – b – a' – b' – a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourCycle {
    pub vertices: [String; 4],
    /// Which case of the construction argument produced it (1–4); 0 for the
    /// explicit backend.
    pub case: u8,
}

/// A connected component of a block-pair span that misses part of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanWitness {
    pub component: Vec<String>,
    pub outside: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanCheck {
    pub pair: BlockPair,
    pub verdict: Verdict,
    pub witness: Option<SpanWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeabilityReport {
    pub backend: Backend,
    pub morse_suited: Verdict,
    pub morse_violation: Option<MorseSuitedViolation>,
    pub four_cycle_free: Verdict,
    pub four_cycle: Option<FourCycle>,
    pub spans: Vec<SpanCheck>,
    /// For an ordered block pair `(X, Y)` on opposite sides, the minimum and
    /// maximum of `|N(v) ∩ Y|` over `v ∈ X`.
    pub neighbor_counts: BTreeMap<(BlockId, BlockId), (u128, u128)>,
}

impl SizeabilityReport {
    pub fn span_connectivity(&self) -> Verdict {
        Verdict::all(self.spans.iter().map(|s| s.verdict))
    }

    pub fn overall(&self) -> Verdict {
        self.morse_suited.and(self.four_cycle_free).and(self.span_connectivity())
    }

    /// Whether every block-pair span is connected and every vertex meets
    /// every opposite block; this is what the link arguments consume.
    pub fn spans_certified(&self) -> bool {
        self.morse_suited.is_pass()
            && self.span_connectivity().is_pass()
            && self.neighbor_counts.values().all(|&(lo, _)| lo >= 1)
    }
}

/// Checks that the blocks on each side are nonempty, pairwise disjoint and
/// cover the side.
pub fn verify_morse_suited(graph: &MorseGraph) -> (Verdict, Option<MorseSuitedViolation>) {
    let n = graph.rank();
    for side in [Side::A, Side::B] {
        for block in BlockId::all(side, n) {
            if graph.block(block).is_empty() {
                return (Verdict::Fail, Some(MorseSuitedViolation::EmptyBlock(block)));
            }
        }
    }
    for side in [Side::A, Side::B] {
        let mut owner: Vec<Option<BlockId>> = vec![None; graph.side_len(side)];
        for block in BlockId::all(side, n) {
            for &v in graph.block(block) {
                if let Some(first) = owner[v] {
                    let vertex = graph.name(Vertex { side, index: v }).to_string();
                    return (Verdict::Fail, Some(MorseSuitedViolation::Overlap { first, second: block, vertex }));
                }
                owner[v] = Some(block);
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            let vertex = graph.name(Vertex { side, index: v }).to_string();
            return (Verdict::Fail, Some(MorseSuitedViolation::Uncovered { side, vertex }));
        }
    }
    (Verdict::Pass, None)
}

pub fn verify_sizeable(input: SizeableInput<'_>, backend: Backend) -> Result<SizeabilityReport, BackendMismatch> {
    match (input, backend) {
        (SizeableInput::Graph(g), Backend::Explicit) => Ok(explicit(g)),
        (SizeableInput::Spec(s), Backend::Arithmetic) => Ok(arithmetic(s)),
        _ => Err(BackendMismatch { backend }),
    }
}

fn explicit(graph: &MorseGraph) -> SizeabilityReport {
    let (morse_suited, morse_violation) = verify_morse_suited(graph);
    let four_cycle = find_four_cycle(graph);
    let n = graph.rank();
    let mut spans = Vec::new();
    let mut neighbor_counts = BTreeMap::new();
    for a_block in BlockId::all(Side::A, n) {
        for b_block in BlockId::all(Side::B, n) {
            let pair = BlockPair::new(a_block, b_block);
            spans.push(span_component_check(graph, pair));
        }
    }
    for side in [Side::A, Side::B] {
        for x in BlockId::all(side, n) {
            for y in BlockId::all(side.opposite(), n) {
                let mut in_y = vec![false; graph.side_len(side.opposite())];
                for &w in graph.block(y) {
                    in_y[w] = true;
                }
                let counts = graph
                    .block(x)
                    .iter()
                    .map(|&v| graph.neighbors(Vertex { side, index: v }).iter().filter(|&&w| in_y[w]).count() as u128);
                let range = counts.fold(None, |acc: Option<(u128, u128)>, c| match acc {
                    None => Some((c, c)),
                    Some((lo, hi)) => Some((lo.min(c), hi.max(c))),
                });
                neighbor_counts.insert((x, y), range.unwrap_or((0, 0)));
            }
        }
    }
    SizeabilityReport {
        backend: Backend::Explicit,
        morse_suited,
        morse_violation,
        four_cycle_free: Verdict::from_bool(four_cycle.is_none()),
        four_cycle,
        spans,
        neighbor_counts,
    }
}

/// First embedded 4-cycle in canonical order: two A-vertices sharing two
/// neighbours.
pub fn find_four_cycle(graph: &MorseGraph) -> Option<FourCycle> {
    let na = graph.side_len(Side::A);
    let mut first_common: Vec<Option<usize>> = vec![None; na];
    let mut touched = Vec::new();
    for a in 0..na {
        for &b in graph.neighbors(Vertex::a(a)) {
            for &a2 in graph.neighbors(Vertex::b(b)) {
                if a2 <= a {
                    continue;
                }
                match first_common[a2] {
                    Some(b0) => {
                        return Some(FourCycle {
                            vertices: [
                                graph.name(Vertex::a(a)).to_string(),
                                graph.name(Vertex::b(b0)).to_string(),
                                graph.name(Vertex::a(a2)).to_string(),
                                graph.name(Vertex::b(b)).to_string(),
                            ],
                            case: 0,
                        })
                    }
                    None => {
                        first_common[a2] = Some(b);
                        touched.push(a2);
                    }
                }
            }
        }
        for a2 in touched.drain(..) {
            first_common[a2] = None;
        }
    }
    None
}

fn span_component_check(graph: &MorseGraph, pair: BlockPair) -> SpanCheck {
    let xs = graph.block(pair.a);
    let ys = graph.block(pair.b);
    if xs.is_empty() || ys.is_empty() {
        return SpanCheck {
            pair,
            verdict: Verdict::Fail,
            witness: Some(SpanWitness { component: Vec::new(), outside: None }),
        };
    }
    let mut in_y = vec![false; graph.side_len(Side::B)];
    for &b in ys {
        in_y[b] = true;
    }
    let mut in_x = vec![false; graph.side_len(Side::A)];
    for &a in xs {
        in_x[a] = true;
    }
    let mut seen_a = vec![false; in_x.len()];
    let mut seen_b = vec![false; in_y.len()];
    let mut stack = vec![Vertex::a(xs[0])];
    seen_a[xs[0]] = true;
    let mut component = Vec::new();
    while let Some(v) = stack.pop() {
        component.push(v);
        for &w in graph.neighbors(v) {
            let (inside, seen, next) = match v.side {
                Side::A => (in_y[w], &mut seen_b, Vertex::b(w)),
                Side::B => (in_x[w], &mut seen_a, Vertex::a(w)),
            };
            if inside && !seen[w] {
                seen[w] = true;
                stack.push(next);
            }
        }
    }
    let missing = xs
        .iter()
        .map(|&a| Vertex::a(a))
        .find(|v| !seen_a[v.index])
        .or_else(|| ys.iter().map(|&b| Vertex::b(b)).find(|v| !seen_b[v.index]));
    match missing {
        None => SpanCheck { pair, verdict: Verdict::Pass, witness: None },
        Some(out) => {
            component.sort();
            let component = component.into_iter().map(|v| graph.name(v).to_string()).collect();
            SpanCheck {
                pair,
                verdict: Verdict::Fail,
                witness: Some(SpanWitness { component, outside: Some(graph.name(out).to_string()) }),
            }
        }
    }
}

fn sub_mod(a: u128, b: u128, p: u128) -> u128 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

fn add_mod(a: u128, b: u128, p: u128) -> u128 {
    if a >= p - b {
        a - (p - b)
    } else {
        a + b
    }
}

fn arithmetic(spec: &ModularSpec) -> SizeabilityReport {
    let n = spec.rank();
    let mut spans = Vec::new();
    for &pair in &template_pairs(n) {
        let rs = spec.residues(pair);
        // With two distinct residues r ≠ s, walking X(k) → Y(k + r) → X(k + r - s)
        // steps by r - s, which generates ℤ/p since p is prime. One residue
        // leaves a perfect matching.
        let check = match rs {
            [r] => SpanCheck {
                pair,
                verdict: Verdict::Fail,
                witness: Some(SpanWitness {
                    component: vec![ModularSpec::vertex_name(pair.a, 0), ModularSpec::vertex_name(pair.b, *r)],
                    outside: Some(ModularSpec::vertex_name(pair.a, 1)),
                }),
            },
            _ => SpanCheck { pair, verdict: Verdict::Pass, witness: None },
        };
        spans.push(check);
    }
    let mut neighbor_counts = BTreeMap::new();
    for &pair in &template_pairs(n) {
        let c = spec.residues(pair).len() as u128;
        neighbor_counts.insert((pair.a, pair.b), (c, c));
        neighbor_counts.insert((pair.b, pair.a), (c, c));
    }
    let four_cycle = arithmetic_four_cycle(spec);
    SizeabilityReport {
        backend: Backend::Arithmetic,
        morse_suited: Verdict::Pass,
        morse_violation: None,
        four_cycle_free: Verdict::from_bool(four_cycle.is_none()),
        four_cycle,
        spans,
        neighbor_counts,
    }
}

fn template_pairs(n: u32) -> Vec<BlockPair> {
    super::template_edge_order(n)
}

/// A 4-cycle `a(k) – b(l) – a'(k') – b'(l')` uses residues
/// `r1 = l - k ∈ σ(X,Y)`, `r2 = l - k' ∈ σ(X',Y)`, `r3 = l' - k' ∈ σ(X',Y')`,
/// `r4 = l' - k ∈ σ(X,Y')` with `r1 - r2 + r3 - r4 ≡ 0`, and it is embedded
/// iff `a ≠ a'` and `b ≠ b'`. Any such residue choice is realized with
/// `k = 0`. The loop is grouped by the four block-coincidence cases.
fn arithmetic_four_cycle(spec: &ModularSpec) -> Option<FourCycle> {
    let n = spec.rank();
    let p = spec.modulus();
    let a_blocks: Vec<BlockId> = BlockId::all(Side::A, n).collect();
    let b_blocks: Vec<BlockId> = BlockId::all(Side::B, n).collect();
    let sig = |x: BlockId, y: BlockId| spec.residues(BlockPair::new(x, y));
    for case in 1..=4u8 {
        for &x in &a_blocks {
            for &x2 in &a_blocks {
                let same_a = x == x2;
                for &y in &b_blocks {
                    for &y2 in &b_blocks {
                        let same_b = y == y2;
                        let this_case = match (same_a, same_b) {
                            (true, true) => 1,
                            (true, false) => 2,
                            (false, true) => 3,
                            (false, false) => 4,
                        };
                        if this_case != case {
                            continue;
                        }
                        for &r1 in sig(x, y) {
                            for &r2 in sig(x2, y) {
                                if same_a && r1 == r2 {
                                    continue;
                                }
                                for &r3 in sig(x2, y2) {
                                    if same_b && r2 == r3 {
                                        continue;
                                    }
                                    let partial = add_mod(sub_mod(r1, r2, p), r3, p);
                                    if sig(x, y2).binary_search(&partial).is_ok() {
                                        let k2 = sub_mod(r1, r2, p);
                                        return Some(FourCycle {
                                            vertices: [
                                                ModularSpec::vertex_name(x, 0),
                                                ModularSpec::vertex_name(y, r1),
                                                ModularSpec::vertex_name(x2, k2),
                                                ModularSpec::vertex_name(y2, partial),
                                            ],
                                            case,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::build_modular_spec;
    use crate::Budget;

    fn both(spec: &ModularSpec) -> (SizeabilityReport, SizeabilityReport) {
        let g = spec.realize(&Budget::default()).unwrap();
        (
            verify_sizeable(SizeableInput::Graph(&g), Backend::Explicit).unwrap(),
            verify_sizeable(SizeableInput::Spec(spec), Backend::Arithmetic).unwrap(),
        )
    }

    #[test]
    fn construction_is_sizeable_at_rank_one() {
        let spec = build_modular_spec(1, None).unwrap();
        let (e, a) = both(&spec);
        assert_eq!(e.overall(), Verdict::Pass);
        assert_eq!(a.overall(), Verdict::Pass);
        assert!(e.spans_certified());
    }

    #[test]
    fn k22_has_a_four_cycle() {
        let g = MorseGraph::from_named(
            1,
            vec![
                ("A1+".parse().unwrap(), vec!["a".into()]),
                ("A1-".parse().unwrap(), vec!["a'".into()]),
                ("B1+".parse().unwrap(), vec!["b".into()]),
                ("B1-".parse().unwrap(), vec!["b'".into()]),
            ],
            vec![("a".into(), "b".into()), ("a".into(), "b'".into()), ("a'".into(), "b".into()), ("a'".into(), "b'".into())],
        )
        .unwrap();
        let r = verify_sizeable(SizeableInput::Graph(&g), Backend::Explicit).unwrap();
        assert_eq!(r.four_cycle_free, Verdict::Fail);
        let w = r.four_cycle.unwrap();
        let mut names = w.vertices.to_vec();
        names.sort();
        assert_eq!(names, ["a", "a'", "b", "b'"]);
    }

    #[test]
    fn constant_residue_spec_is_disconnected() {
        let order = super::super::template_edge_order(1);
        let sigma = order.iter().map(|p| (*p, vec![0u128])).collect();
        let spec = ModularSpec::new(1, 5, order, sigma).unwrap();
        let (e, a) = both(&spec);
        assert_eq!(e.span_connectivity(), Verdict::Fail);
        let w = e.spans[0].witness.as_ref().unwrap();
        assert_eq!(w.component.len(), 2);
        assert_eq!(a.span_connectivity(), Verdict::Fail);
        assert_eq!(a.spans, e.spans);
        assert_eq!(e.overall(), Verdict::Fail);
    }

    #[test]
    fn small_prime_construction_has_a_four_cycle() {
        let spec = build_modular_spec(1, Some(5)).unwrap();
        let (e, a) = both(&spec);
        assert_eq!(e.four_cycle_free, Verdict::Fail);
        assert_eq!(a.four_cycle_free, Verdict::Fail);
        assert_eq!(e.span_connectivity(), Verdict::Pass);
        assert!(e.spans_certified());
    }

    #[test]
    fn morse_suited_violations() {
        let spec = build_modular_spec(1, Some(5)).unwrap();
        let g = spec.realize(&Budget::default()).unwrap();
        assert_eq!(verify_morse_suited(&g).0, Verdict::Pass);

        let base = |a_plus: Vec<String>, a_minus: Vec<String>| {
            MorseGraph::from_named(
                1,
                vec![
                    ("A1+".parse().unwrap(), a_plus),
                    ("A1-".parse().unwrap(), a_minus),
                    ("B1+".parse().unwrap(), vec!["b".into()]),
                    ("B1-".parse().unwrap(), vec!["b2".into()]),
                ],
                vec![("a".into(), "b".into())],
            )
            .unwrap()
        };
        let empty = base(vec![], vec!["a".into()]);
        assert_eq!(
            verify_morse_suited(&empty),
            (Verdict::Fail, Some(MorseSuitedViolation::EmptyBlock("A1+".parse().unwrap())))
        );
        let overlap = base(vec!["a".into()], vec!["a".into()]);
        assert!(matches!(verify_morse_suited(&overlap), (Verdict::Fail, Some(MorseSuitedViolation::Overlap { .. }))));
        let g = MorseGraph::from_named(
            1,
            vec![
                ("A1+".parse().unwrap(), vec!["a".into()]),
                ("A1-".parse().unwrap(), vec!["a2".into()]),
                ("B1+".parse().unwrap(), vec!["b".into()]),
                ("B1-".parse().unwrap(), vec!["b2".into()]),
            ],
            vec![("stray".into(), "b".into())],
        )
        .unwrap();
        assert!(matches!(verify_morse_suited(&g), (Verdict::Fail, Some(MorseSuitedViolation::Uncovered { .. }))));
    }

    #[test]
    fn backend_mismatch() {
        let spec = build_modular_spec(1, Some(5)).unwrap();
        let g = spec.realize(&Budget::default()).unwrap();
        assert!(verify_sizeable(SizeableInput::Graph(&g), Backend::Arithmetic).is_err());
        assert!(verify_sizeable(SizeableInput::Spec(&spec), Backend::Explicit).is_err());
    }
}
