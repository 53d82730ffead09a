//! Voltage covers of the join of two theta links, and the checks at the
//! vertices of the ramified cover of `Θ³`.
//!
//! At a vertex of `Θ³` each factor contributes a discrete link `F_i` of
//! `2n` edge ends, labelled `x₁..x_n, y₁..y_n`. Vertices of the cover away
//! from the ramification locus have link `F₁ ∗ F₂ ∗ F₃`; over the six locus
//! vertices the link is `Γ ∗ F_r`, where `F_r` runs along the locus and Γ
//! is a connected `p`-fold cover of the complete bipartite graph on the
//! other two factors in which every 4-cycle unwinds to a single `4p`-cycle.
//! Here Γ is the derived graph of a `ℤ/p` voltage assignment.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use crate::arith::is_prime;
use crate::morse::character::{edge_weight, sign_of, Character, EdgeClass, Family, ThetaEdge};
use crate::morse::check::{check_link, validate_target, Direction, Engine, VertexTypeReport};
use crate::morse::symbolic::{discrete_shape, Piece, Shape, TypeChecker};
use crate::morse::MorseError;
use crate::simplicial::SimplicialComplex;
use crate::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverError {
    Rank(u32),
    Modulus { p: u64, n: u32 },
    TableShape { expected: usize, found: usize },
    VoltageRange { voltage: u64, p: u64 },
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::Rank(n) => write!(f, "theta rank must be at least 2, got {n}"),
            CoverError::Modulus { p, n } => write!(f, "modulus {p} must be a prime greater than {}", 2 * n),
            CoverError::TableShape { expected, found } => {
                write!(f, "voltage table needs {expected} entries, found {found}")
            }
            CoverError::VoltageRange { voltage, p } => write!(f, "voltage {voltage} is not reduced mod {p}"),
        }
    }
}

/// `Γ` over the complete bipartite graph `F₁ ∗ F₂`, `|F₁| = |F₂| = 2n`.
/// Derived vertex `(s, u, k)` (side `s`, base vertex `u`, sheet `k`) has
/// index `(s·2n + u)·p + k`; `(0, u, k)` is joined to
/// `(1, v, k + voltage(u, v))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoltageCover {
    n: u32,
    p: u64,
    voltage: Vec<Vec<u64>>,
}

impl VoltageCover {
    /// Any table of residues mod `p ≥ 2`; properties are checked by
    /// [`verify_cover_properties`], not assumed.
    pub fn from_table(n: u32, p: u64, voltage: Vec<Vec<u64>>) -> Result<Self, CoverError> {
        if n < 2 {
            return Err(CoverError::Rank(n));
        }
        if p < 2 {
            return Err(CoverError::Modulus { p, n });
        }
        let m = 2 * n as usize;
        let found = voltage.iter().map(Vec::len).sum::<usize>();
        if voltage.len() != m || voltage.iter().any(|r| r.len() != m) {
            return Err(CoverError::TableShape { expected: m * m, found });
        }
        if let Some(&v) = voltage.iter().flatten().find(|&&v| v >= p) {
            return Err(CoverError::VoltageRange { voltage: v, p });
        }
        Ok(VoltageCover { n, p, voltage })
    }

    pub fn zero(n: u32, p: u64) -> Result<Self, CoverError> {
        VoltageCover::from_table(n, p, vec![vec![0; 2 * n as usize]; 2 * n as usize])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Base vertices per side.
    pub fn base_size(&self) -> usize {
        2 * self.n as usize
    }

    pub fn voltage(&self, u: usize, v: usize) -> u64 {
        self.voltage[u][v]
    }

    pub fn table(&self) -> &[Vec<u64>] {
        &self.voltage
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.base_size() * self.p as usize
    }

    pub fn index(&self, side: usize, u: usize, k: u64) -> usize {
        (side * self.base_size() + u) * self.p as usize + k as usize
    }

    /// `(side, base vertex, sheet)` of a derived vertex.
    pub fn locate(&self, i: usize) -> (usize, usize, u64) {
        let p = self.p as usize;
        let (b, k) = (i / p, i % p);
        (b / self.base_size(), b % self.base_size(), k as u64)
    }

    pub fn base_name(&self, u: usize) -> String {
        format!("{}", ThetaEdge::from_position(u, self.n))
    }

    /// Derived edges as index pairs, side 0 first.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let m = self.base_size();
        let mut out = Vec::with_capacity(m * m * self.p as usize);
        for u in 0..m {
            for v in 0..m {
                for k in 0..self.p {
                    out.push((self.index(0, u, k), self.index(1, v, (k + self.voltage[u][v]) % self.p)));
                }
            }
        }
        out
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (a, b) in self.edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// The deck translation `k ↦ k + 1` on every fiber.
    pub fn deck(&self, i: usize) -> usize {
        let (s, u, k) = self.locate(i);
        self.index(s, u, (k + 1) % self.p)
    }
}

/// `voltage(i, j) = i·j mod p` with base vertices numbered `1..2n` on each
/// side; a base 4-cycle `(i, j, i', j')` then has net voltage
/// `(i − i')(j − j')`, nonzero for a prime `p > 2n`.
pub fn build_voltage_cover(n: u32, p: u64) -> Result<VoltageCover, CoverError> {
    if n < 2 {
        return Err(CoverError::Rank(n));
    }
    if p <= 2 * n as u64 || !is_prime(p as u128) {
        return Err(CoverError::Modulus { p, n });
    }
    let m = 2 * n as u64;
    let table = (1..=m).map(|i| (1..=m).map(|j| (i * j) % p).collect()).collect();
    VoltageCover::from_table(n, p, table)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverWitness {
    /// A derived vertex without exactly one neighbour over a base neighbour.
    LocalBijectivity { vertex: String, base_neighbor: String, found: usize },
    /// One component of a disconnected cover.
    Disconnected { components: usize, component_size: usize },
    /// A base 4-cycle whose lift closes up too early.
    FourCycle { base: [String; 4], net_voltage: u64, lift_length: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverProperties {
    pub local_bijectivity: Verdict,
    pub connected: Verdict,
    pub four_cycles: Verdict,
    pub base_four_cycles: usize,
    pub witnesses: Vec<CoverWitness>,
}

impl CoverProperties {
    pub fn overall(&self) -> Verdict {
        self.local_bijectivity.and(self.connected).and(self.four_cycles)
    }
}

/// Brute-force checks on the derived graph: one neighbour in each
/// neighbouring fiber, connectivity, and every base 4-cycle lifting to a
/// single `4p`-cycle.
pub fn verify_cover_properties(cover: &VoltageCover) -> CoverProperties {
    let m = cover.base_size();
    let p = cover.p;
    let adj = cover.adjacency();
    let mut witnesses = Vec::new();
    let vname = |i: usize| {
        let (s, u, k) = cover.locate(i);
        format!("f{}:{}#{}", s + 1, cover.base_name(u), k)
    };

    let mut local = Verdict::Pass;
    'outer: for i in 0..cover.vertex_count() {
        let (s, _, _) = cover.locate(i);
        let mut per_base = vec![0usize; m];
        for &j in &adj[i] {
            per_base[cover.locate(j).1] += 1;
        }
        for (v, &c) in per_base.iter().enumerate() {
            if c != 1 {
                local = Verdict::Fail;
                let side = 1 - s;
                witnesses.push(CoverWitness::LocalBijectivity {
                    vertex: vname(i),
                    base_neighbor: format!("f{}:{}", side + 1, cover.base_name(v)),
                    found: c,
                });
                break 'outer;
            }
        }
    }

    let comps = components(&adj, &vec![true; cover.vertex_count()]);
    let connected = Verdict::from_bool(comps.len() == 1);
    if comps.len() > 1 {
        witnesses.push(CoverWitness::Disconnected { components: comps.len(), component_size: comps[0].len() });
    }

    // Follow the lift of i → j → i' → j' → i from sheet 0 until it returns.
    let step = |from: usize, base: usize| -> usize {
        adj[from].iter().copied().find(|&w| cover.locate(w).1 == base).expect("every fiber is reached")
    };
    let mut four = Verdict::Pass;
    let mut count = 0;
    for i in 0..m {
        for i2 in i + 1..m {
            for j in 0..m {
                for j2 in j + 1..m {
                    count += 1;
                    if local != Verdict::Pass {
                        continue;
                    }
                    let start = cover.index(0, i, 0);
                    let mut at = start;
                    let mut length = 0;
                    loop {
                        at = step(at, j);
                        at = step(at, i2);
                        at = step(at, j2);
                        at = step(at, i);
                        length += 4;
                        if at == start || length > 4 * p as usize {
                            break;
                        }
                    }
                    if length != 4 * p as usize && four == Verdict::Pass {
                        four = Verdict::Fail;
                        let net = (cover.voltage(i, j) + p - cover.voltage(i2, j) + cover.voltage(i2, j2) + p
                            - cover.voltage(i, j2))
                            % p;
                        witnesses.push(CoverWitness::FourCycle {
                            base: [
                                format!("f1:{}", cover.base_name(i)),
                                format!("f2:{}", cover.base_name(j)),
                                format!("f1:{}", cover.base_name(i2)),
                                format!("f2:{}", cover.base_name(j2)),
                            ],
                            net_voltage: net,
                            lift_length: length,
                        });
                    }
                }
            }
        }
    }
    if local != Verdict::Pass {
        four = Verdict::Inconclusive;
    }
    CoverProperties { local_bijectivity: local, connected, four_cycles: four, base_four_cycles: count, witnesses }
}

fn components(adj: &[Vec<usize>], keep: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if !keep[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adj[v] {
                if keep[w] && !seen[w] {
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

/// Whether the preimage of the join of base subsets `s ⊆ F₁`, `t ⊆ F₂`
/// is connected.
pub fn preimage_connected(cover: &VoltageCover, s: &[usize], t: &[usize]) -> bool {
    let keep = preimage_mask(cover, s, t);
    components(&cover.adjacency(), &keep).len() == 1
}

fn preimage_mask(cover: &VoltageCover, s: &[usize], t: &[usize]) -> Vec<bool> {
    (0..cover.vertex_count())
        .map(|i| {
            let (side, u, _) = cover.locate(i);
            if side == 0 {
                s.contains(&u)
            } else {
                t.contains(&u)
            }
        })
        .collect()
}

/// Whether the deck translation is an automorphism of Γ mapping the
/// preimage of `s ∗ t` onto itself.
pub fn deck_invariant(cover: &VoltageCover, s: &[usize], t: &[usize]) -> bool {
    let keep = preimage_mask(cover, s, t);
    let edges: alloc::collections::BTreeSet<(usize, usize)> = cover.edges().into_iter().collect();
    edges.iter().all(|&(a, b)| edges.contains(&(cover.deck(a), cover.deck(b))))
        && (0..cover.vertex_count()).all(|i| keep[i] == keep[cover.deck(i)])
}

/// The six vertices of `Θ³` on the ramification locus with their
/// ramified factor `r` and the ordered pair of covered factors.
pub const TYPE2_VERTICES: [([usize; 3], usize, (usize, usize)); 6] = [
    ([0, 1, 0], 2, (0, 1)),
    ([0, 1, 1], 2, (0, 1)),
    ([0, 0, 1], 0, (1, 2)),
    ([1, 0, 1], 0, (1, 2)),
    ([1, 0, 0], 1, (2, 0)),
    ([1, 1, 0], 1, (2, 0)),
];

/// A vertex of a Type-2 link: a sheet of a covered factor's edge end, or
/// an edge end of the ramified factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Type2Label {
    Sheet { factor: u8, edge: usize, sheet: u64 },
    Ramified { factor: u8, edge: usize },
}

/// The link `Γ ∗ F_r` at a Type-2 vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Type2Link {
    pub vertex: [usize; 3],
    pub ramified: usize,
    pub covered: (usize, usize),
    pub complex: SimplicialComplex<Type2Label>,
}

pub fn type2_link(cover: &VoltageCover, vertex: [usize; 3], ramified: usize, covered: (usize, usize)) -> Type2Link {
    let m = cover.base_size();
    let labels: Vec<Type2Label> = (0..cover.vertex_count())
        .map(|i| {
            let (s, u, k) = cover.locate(i);
            let factor = if s == 0 { covered.0 } else { covered.1 };
            Type2Label::Sheet { factor: factor as u8, edge: u, sheet: k }
        })
        .collect();
    let edges: Vec<Vec<usize>> = cover.edges().into_iter().map(|(a, b)| vec![a, b]).collect();
    let gamma = SimplicialComplex::new(labels, edges).expect("derived edges index derived vertices");
    let f: SimplicialComplex<Type2Label> = SimplicialComplex::new(
        (0..m).map(|e| Type2Label::Ramified { factor: ramified as u8, edge: e }).collect(),
        (0..m).map(|e| vec![e]),
    )
    .expect("discrete factor");
    Type2Link { vertex, ramified, covered, complex: gamma.join(&f) }
}

pub fn type2_label_name(cover: &VoltageCover, l: &Type2Label) -> String {
    match *l {
        Type2Label::Sheet { factor, edge, sheet } => format!("f{}:{}#{}", factor + 1, cover.base_name(edge), sheet),
        Type2Label::Ramified { factor, edge } => format!("f{}:{}", factor + 1, cover.base_name(edge)),
    }
}

fn check_theta(lambda: &Character, n: u32) -> Result<(), MorseError> {
    match lambda.family() {
        Family::Theta { n: k } if k == n => Ok(()),
        _ => Err(MorseError::FamilyMismatch),
    }
}

/// Height change leaving vertex `at ∈ {0, 1}` of a theta factor along
/// edge position `e`.
fn theta_delta(lambda: &Character, n: u32, at: usize, e: usize) -> BigRational {
    let edge = ThetaEdge::from_position(e, n);
    let w = edge_weight(EdgeClass::Theta(edge), lambda);
    if edge.tail() == at {
        w
    } else {
        -w
    }
}

fn theta_signs(lambda: &Character, n: u32, at: usize) -> Vec<i8> {
    (0..2 * n as usize).map(|e| sign_of(&theta_delta(lambda, n, at, e))).collect()
}

/// Explicit engine on the six Type-2 links.
pub fn check_type2_explicit(cover: &VoltageCover, lambda: &Character, m: i8) -> Result<Vec<VertexTypeReport>, MorseError> {
    validate_target(m)?;
    check_theta(lambda, cover.n)?;
    let mut out = Vec::new();
    for (v, r, covered) in TYPE2_VERTICES {
        let link = type2_link(cover, v, r, covered);
        let weights: Vec<BigRational> = link
            .complex
            .labels()
            .iter()
            .map(|l| match *l {
                Type2Label::Sheet { factor, edge, .. } | Type2Label::Ramified { factor, edge } => {
                    theta_delta(lambda, cover.n, v[factor as usize], edge)
                }
            })
            .collect();
        let vname = format!("({},{},{})", v[0], v[1], v[2]);
        let mut report = VertexTypeReport::new(format!("type2 {vname}"), vname.clone(), Engine::Explicit);
        let name = |i: usize| type2_label_name(cover, link.complex.label(i));
        report.absorb(check_link(&link.complex, &weights, m, &vname, &name));
        out.push(report);
    }
    Ok(out)
}

fn count_piece(count: usize, text: String) -> Piece {
    Piece { shape: discrete_shape(count as u128, count as u128), text }
}

fn names_with_sign(lambda: &Character, n: u32, factor: usize, at: usize, sign: i8) -> (usize, String) {
    let s = theta_signs(lambda, n, at);
    let names: Vec<String> =
        (0..s.len()).filter(|&e| s[e] == sign).map(|e| format!("{}", ThetaEdge::from_position(e, n))).collect();
    (names.len(), format!("F{}{{{}}}", factor + 1, names.join(",")))
}

/// Block-level checks on `F₁ ∗ F₂ ∗ F₃` at the eight vertices of `Θ³`:
/// the empty simplex needs all three living factors nonempty, a dead
/// vertex the other two, a dead edge the third.
pub fn check_type1_hypotheses(n: u32, lambda: &Character, m: i8) -> Result<Vec<VertexTypeReport>, MorseError> {
    validate_target(m)?;
    check_theta(lambda, n)?;
    let mut out = Vec::new();
    for v in [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1], [1, 0, 0], [1, 0, 1], [1, 1, 0], [1, 1, 1]] {
        let vname = format!("({},{},{})", v[0], v[1], v[2]);
        let mut ck = TypeChecker {
            report: VertexTypeReport::new(format!("type1 {vname}"), vname.clone(), Engine::Symbolic),
            vertex: &vname,
        };
        ck.report.vertices_checked = 1;
        let signs: Vec<Vec<i8>> = (0..3).map(|f| theta_signs(lambda, n, v[f])).collect();
        let piece = |f: usize, dir: Direction| {
            let sign = if dir == Direction::Ascending { 1 } else { -1 };
            let (c, t) = names_with_sign(lambda, n, f, v[f], sign);
            count_piece(c, t)
        };
        let name = |f: usize, e: usize| format!("f{}:{}", f + 1, ThetaEdge::from_position(e, n));
        let mut dead = 1;
        for dir in [Direction::Ascending, Direction::Descending] {
            ck.run(Vec::new(), dir, m, (0..3).map(|f| piece(f, dir)).collect());
        }
        for f in 0..3 {
            for e in (0..signs[f].len()).filter(|&e| signs[f][e] == 0) {
                dead += 1;
                for dir in [Direction::Ascending, Direction::Descending] {
                    let pieces = vec![piece((f + 1) % 3, dir), piece((f + 2) % 3, dir)];
                    ck.run(vec![name(f, e)], dir, m - 1, pieces);
                }
            }
        }
        if m >= 1 {
            for f in 0..3 {
                for g in f + 1..3 {
                    let h = 3 - f - g;
                    for e in (0..signs[f].len()).filter(|&e| signs[f][e] == 0) {
                        for e2 in (0..signs[g].len()).filter(|&e2| signs[g][e2] == 0) {
                            dead += 1;
                            for dir in [Direction::Ascending, Direction::Descending] {
                                ck.run(vec![name(f, e), name(g, e2)], dir, m - 2, vec![piece(h, dir)]);
                            }
                        }
                    }
                }
            }
        }
        ck.report.dead_simplices = dead;
        out.push(ck.report);
    }
    Ok(out)
}

/// Shape of the subgraph of Γ over the base sets `s ∗ t`, by graph search.
fn gamma_piece(cover: &VoltageCover, adj: &[Vec<usize>], s: &[usize], t: &[usize], covered: (usize, usize)) -> Piece {
    let keep = preimage_mask(cover, s, t);
    let verts = keep.iter().filter(|&&k| k).count();
    let edges = s.len() * t.len() * cover.p as usize;
    let comps = components(adj, &keep);
    let shape = match comps.len() {
        0 => Shape::Empty,
        1 if verts == 1 => Shape::Point,
        1 => Shape::Connected { cycle: edges >= verts },
        _ => Shape::Disconnected,
    };
    let names = |f: usize, set: &[usize]| -> String {
        let v: Vec<String> = set.iter().map(|&u| cover.base_name(u)).collect();
        format!("F{}{{{}}}", f + 1, v.join(","))
    };
    Piece {
        shape,
        text: format!(
            "preimage of {} * {} ({} vertices, {} components)",
            names(covered.0, s),
            names(covered.1, t),
            verts,
            comps.len()
        ),
    }
}

/// Checks on `Γ ∗ F_r` at the six locus vertices following the covering
/// argument: the living part of Γ is the full preimage of the living base
/// join and is searched directly; a dead sheet vertex sees its neighbours
/// in the other covered factor (one per base vertex) joined with `F_r`.
pub fn check_type2_hypotheses(cover: &VoltageCover, lambda: &Character, m: i8) -> Result<Vec<VertexTypeReport>, MorseError> {
    validate_target(m)?;
    let n = cover.n;
    check_theta(lambda, n)?;
    let adj = cover.adjacency();
    let mut out = Vec::new();
    for (v, r, covered) in TYPE2_VERTICES {
        let vname = format!("({},{},{})", v[0], v[1], v[2]);
        let mut ck = TypeChecker {
            report: VertexTypeReport::new(format!("type2 {vname}"), vname.clone(), Engine::Symbolic),
            vertex: &vname,
        };
        ck.report.vertices_checked = 1;
        let sa = theta_signs(lambda, n, v[covered.0]);
        let sb = theta_signs(lambda, n, v[covered.1]);
        let sr = theta_signs(lambda, n, v[r]);
        let with = |s: &[i8], sign: i8| -> Vec<usize> { (0..s.len()).filter(|&e| s[e] == sign).collect() };
        let sgn = |d: Direction| if d == Direction::Ascending { 1i8 } else { -1 };
        let ramified = |dir: Direction| {
            let (c, t) = names_with_sign(lambda, n, r, v[r], sgn(dir));
            count_piece(c, t)
        };
        let gamma = |dir: Direction| gamma_piece(cover, &adj, &with(&sa, sgn(dir)), &with(&sb, sgn(dir)), covered);
        // A sheet over a base vertex has exactly one neighbour over each
        // base vertex of the other covered factor.
        let neighbours = |f: usize, dir: Direction| {
            let (c, t) = names_with_sign(lambda, n, f, v[f], sgn(dir));
            count_piece(c, format!("neighbours of a dead sheet over {t}"))
        };
        let sheet_name = |f: usize, e: usize| format!("f{}:{}#0", f + 1, cover.base_name(e));
        let ram_name = |e: usize| format!("f{}:{}", r + 1, cover.base_name(e));
        let dirs = [Direction::Ascending, Direction::Descending];
        let mut dead = 1;
        for dir in dirs {
            ck.run(Vec::new(), dir, m, vec![gamma(dir), ramified(dir)]);
        }
        for e in with(&sr, 0) {
            dead += 1;
            for dir in dirs {
                ck.run(vec![ram_name(e)], dir, m - 1, vec![gamma(dir)]);
            }
        }
        for (own, f, g) in [(&sa, covered.0, covered.1), (&sb, covered.1, covered.0)] {
            for e in with(own, 0) {
                dead += 1;
                for dir in dirs {
                    ck.run(vec![sheet_name(f, e)], dir, m - 1, vec![neighbours(g, dir), ramified(dir)]);
                }
            }
        }
        if m >= 1 {
            for e in with(&sa, 0) {
                for e2 in with(&sb, 0) {
                    dead += 1;
                    for dir in dirs {
                        let sigma = vec![sheet_name(covered.0, e), sheet_name(covered.1, e2)];
                        ck.run(sigma, dir, m - 2, vec![ramified(dir)]);
                    }
                }
            }
            for (own, f, g) in [(&sa, covered.0, covered.1), (&sb, covered.1, covered.0)] {
                for e in with(own, 0) {
                    for e2 in with(&sr, 0) {
                        dead += 1;
                        for dir in dirs {
                            ck.run(vec![sheet_name(f, e), ram_name(e2)], dir, m - 2, vec![neighbours(g, dir)]);
                        }
                    }
                }
            }
        }
        ck.report.dead_simplices = dead;
        out.push(ck.report);
    }
    Ok(out)
}

/// Dead, ascending and descending edge ends at a theta vertex.
pub fn theta_split(lambda: &Character, n: u32, at: usize) -> BTreeMap<i8, Vec<String>> {
    let s = theta_signs(lambda, n, at);
    let mut out: BTreeMap<i8, Vec<String>> = BTreeMap::new();
    for (e, &sign) in s.iter().enumerate() {
        out.entry(sign).or_default().push(format!("{}", ThetaEdge::from_position(e, n)));
    }
    out
}
