//! Connectivity checks on living links of dead simplices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use super::character::{Character, Family};
use super::split::{link_weights, signs};
use super::MorseError;
use crate::bigraph::BlockId;
use crate::cubeworld::ProductCubeComplex;
use crate::simplicial::{connectivity, ConnLevel, SimplicialComplex};
use crate::{Budget, Verdict};

/// Failing or undecided checks kept per vertex type.
pub const MAX_ISSUES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Ascending,
    Descending,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Ascending => "ascending",
            Direction::Descending => "descending",
        }
    }

    fn sign(self) -> i8 {
        match self {
            Direction::Ascending => 1,
            Direction::Descending => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Engine {
    Explicit,
    Symbolic,
}

impl Engine {
    pub fn as_str(self) -> &'static str {
        match self {
            Engine::Explicit => "explicit",
            Engine::Symbolic => "symbolic",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence attached to a check that did not pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The living link is empty.
    Empty,
    /// The living link is disconnected; its components by vertex name.
    Components(Vec<Vec<String>>),
    /// Connected with nonvanishing first homology.
    Homology { rank: usize, torsion: Vec<String> },
    /// Why no decision was reached, or a block-level description.
    Reason(String),
}

/// One (dead simplex, direction) check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexCheck {
    pub vertex: String,
    /// Names of the dead link vertices; empty for the empty simplex.
    pub sigma: Vec<String>,
    pub direction: Direction,
    /// Required connectivity: 1 simply connected, 0 connected, −1 nonempty.
    pub required: i8,
    pub verdict: Verdict,
    pub homological: Verdict,
    pub level: ConnLevel,
    pub method: &'static str,
    pub witness: Option<Witness>,
}

/// Aggregated checks for one vertex type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexTypeReport {
    pub vertex_type: String,
    pub representative: String,
    pub engine: Engine,
    pub vertices_checked: usize,
    /// Dead simplices examined, the empty simplex included.
    pub dead_simplices: usize,
    pub checks_run: usize,
    pub verdict: Verdict,
    pub homological: Verdict,
    /// The first non-passing checks, at most [`MAX_ISSUES`].
    pub issues: Vec<SimplexCheck>,
}

impl VertexTypeReport {
    pub fn new(vertex_type: String, representative: String, engine: Engine) -> Self {
        VertexTypeReport {
            vertex_type,
            representative,
            engine,
            vertices_checked: 0,
            dead_simplices: 0,
            checks_run: 0,
            verdict: Verdict::Pass,
            homological: Verdict::Pass,
            issues: Vec::new(),
        }
    }

    pub fn absorb(&mut self, outcome: LinkOutcome) {
        self.vertices_checked += 1;
        self.dead_simplices += outcome.dead_simplices;
        self.checks_run += outcome.checks.len();
        for c in outcome.checks {
            self.record(c);
        }
    }

    pub fn record(&mut self, c: SimplexCheck) {
        self.verdict = self.verdict.and(c.verdict);
        self.homological = self.homological.and(c.homological);
        if (!c.verdict.is_pass() || !c.homological.is_pass()) && self.issues.len() < MAX_ISSUES {
            self.issues.push(c);
        }
    }
}

/// All vertex types for one character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberReport {
    pub signs: String,
    pub lambda: Character,
    pub vertex_types: Vec<VertexTypeReport>,
    pub verdict: Verdict,
    pub homological: Verdict,
}

impl ChamberReport {
    pub fn new(signs: String, lambda: Character, vertex_types: Vec<VertexTypeReport>) -> Self {
        let verdict = Verdict::all(vertex_types.iter().map(|t| t.verdict));
        let homological = Verdict::all(vertex_types.iter().map(|t| t.homological));
        ChamberReport { signs, lambda, vertex_types, verdict, homological }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub family: Family,
    pub target: i8,
    pub engine: Engine,
    pub chambers: Vec<ChamberReport>,
    pub verdict: Verdict,
    pub homological: Verdict,
}

impl VerificationReport {
    pub fn new(family: Family, target: i8, engine: Engine, chambers: Vec<ChamberReport>) -> Self {
        let verdict = Verdict::all(chambers.iter().map(|c| c.verdict));
        let homological = Verdict::all(chambers.iter().map(|c| c.homological));
        VerificationReport { family, target, engine, chambers, verdict, homological }
    }

    /// First non-passing check, for summaries.
    pub fn first_issue(&self) -> Option<(&ChamberReport, &VertexTypeReport, &SimplexCheck)> {
        self.chambers.iter().find_map(|c| {
            c.vertex_types.iter().find_map(|t| t.issues.first().map(|i| (c, t, i)))
        })
    }
}

/// A (chamber, vertex type) where one engine passes and the other fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub signs: String,
    pub vertex_type: String,
    pub explicit: Verdict,
    pub symbolic: Verdict,
}

/// Compares two reports over the same characters, type by type.
pub fn engine_disagreements(explicit: &VerificationReport, symbolic: &VerificationReport) -> Vec<Disagreement> {
    let mut out = Vec::new();
    for (ce, cs) in explicit.chambers.iter().zip(&symbolic.chambers) {
        let by_type: BTreeMap<&str, Verdict> =
            cs.vertex_types.iter().map(|t| (t.vertex_type.as_str(), t.verdict)).collect();
        for t in &ce.vertex_types {
            if let Some(&s) = by_type.get(t.vertex_type.as_str()) {
                let clash = matches!((t.verdict, s), (Verdict::Pass, Verdict::Fail) | (Verdict::Fail, Verdict::Pass));
                if clash {
                    out.push(Disagreement {
                        signs: ce.signs.clone(),
                        vertex_type: t.vertex_type.clone(),
                        explicit: t.verdict,
                        symbolic: s,
                    });
                }
            }
        }
    }
    out
}

/// Checks of one link, before aggregation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkOutcome {
    pub dead_simplices: usize,
    pub checks: Vec<SimplexCheck>,
}

pub fn validate_target(m: i8) -> Result<(), MorseError> {
    if (0..=1).contains(&m) {
        Ok(())
    } else {
        Err(MorseError::UnsupportedTarget(m))
    }
}

/// Runs every check at one vertex: for each dead simplex `σ` of dimension
/// at most `m` (the empty simplex included) and each direction, the living
/// part of `Lk(σ)` must be `(m − dim σ − 1)`-connected.
///
/// Names come from `name`; the link need not be flag.
pub fn check_link<L: Clone>(
    link: &SimplicialComplex<L>,
    weights: &[BigRational],
    m: i8,
    vertex: &str,
    name: &dyn Fn(usize) -> String,
) -> LinkOutcome {
    let s = signs(weights);
    let dead: Vec<usize> = (0..s.len()).filter(|&v| s[v] == 0).collect();
    let mut sigmas: Vec<Vec<usize>> = vec![Vec::new()];
    if m >= 0 {
        sigmas.extend(dead.iter().map(|&d| vec![d]));
    }
    if m >= 1 {
        for (i, &a) in dead.iter().enumerate() {
            for &b in &dead[i + 1..] {
                if link.contains(&[a, b]) {
                    sigmas.push(vec![a, b]);
                }
            }
        }
    }
    let mut checks = Vec::new();
    for sigma in &sigmas {
        let required = m - sigma.len() as i8;
        for dir in [Direction::Ascending, Direction::Descending] {
            checks.push(check_one(link, &s, sigma, dir, required, vertex, name));
        }
    }
    LinkOutcome { dead_simplices: sigmas.len(), checks }
}

fn check_one<L: Clone>(
    link: &SimplicialComplex<L>,
    s: &[i8],
    sigma: &[usize],
    dir: Direction,
    required: i8,
    vertex: &str,
    name: &dyn Fn(usize) -> String,
) -> SimplexCheck {
    let with = |extra: &[usize]| {
        let mut t: Vec<usize> = sigma.iter().chain(extra).copied().collect();
        t.sort_unstable();
        link.contains(&t)
    };
    let living: Vec<usize> = (0..s.len()).filter(|&u| s[u] == dir.sign() && with(&[u])).collect();
    let mut check = SimplexCheck {
        vertex: String::from(vertex),
        sigma: sigma.iter().map(|&v| name(v)).collect(),
        direction: dir,
        required,
        verdict: Verdict::Pass,
        homological: Verdict::Pass,
        level: ConnLevel::Empty,
        method: "bfs",
        witness: None,
    };
    if living.is_empty() {
        let v = Verdict::from_bool(required < -1);
        check.verdict = v;
        check.homological = v;
        if !v.is_pass() {
            check.witness = Some(Witness::Empty);
        }
        return check;
    }
    check.level = ConnLevel::Nonempty;
    if required <= -1 {
        return check;
    }
    if sigma.is_empty() {
        let sub = link.full_subcomplex(&living);
        let conn = connectivity(&sub, required);
        check.level = conn.level;
        check.method = conn.method.as_str();
        check.verdict = conn.meets(required);
        check.homological = conn.meets_homological(required);
        if !check.verdict.is_pass() || !check.homological.is_pass() {
            check.witness = Some(if conn.components > 1 {
                Witness::Components(components_named(&sub.components(), &living, name))
            } else if let Some(h) = conn.h1.as_ref().filter(|h| !h.is_zero()) {
                Witness::Homology { rank: h.rank, torsion: h.torsion.iter().map(|t| t.to_string()).collect() }
            } else {
                Witness::Reason(String::from("first homology vanishes but no join certificate was found"))
            });
        }
        return check;
    }
    // Connectivity of the 1-skeleton of the living link of σ.
    let mut comp = vec![usize::MAX; living.len()];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..living.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let c = comps.len();
        comp[start] = c;
        let mut stack = vec![start];
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(i);
            for j in 0..living.len() {
                if comp[j] == usize::MAX && with(&[living[i], living[j]]) {
                    comp[j] = c;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    if comps.len() == 1 {
        check.level = ConnLevel::Connected;
        return check;
    }
    check.verdict = Verdict::Fail;
    check.homological = Verdict::Fail;
    check.witness = Some(Witness::Components(components_named(&comps, &living, name)));
    check
}

fn components_named(comps: &[Vec<usize>], index: &[usize], name: &dyn Fn(usize) -> String) -> Vec<Vec<String>> {
    comps.iter().map(|c| c.iter().map(|&i| name(index[i])).collect()).collect()
}

/// The block triple written as `A1+ B1- A1+`.
pub fn block_type_name(t: &[BlockId; 3]) -> String {
    format!("{} {} {}", t[0], t[1], t[2])
}

/// Explicit engine on a product complex with block structure. With
/// `exhaustive`, every vertex is checked and grouped by block triple;
/// otherwise one representative per triple.
pub fn check_xgamma_explicit(
    x: &ProductCubeComplex,
    lambda: &Character,
    m: i8,
    exhaustive: bool,
    budget: &Budget,
) -> Result<Vec<VertexTypeReport>, MorseError> {
    validate_target(m)?;
    if x.graph().is_none() {
        return Err(MorseError::Unsupported("explicit block-type checks need an X_Γ complex"));
    }
    let needed = x.ambient_vertex_count();
    if needed > budget.vertices as u128 {
        return Err(MorseError::Cube(crate::cubeworld::CubeError::BudgetExceeded { needed, budget: budget.vertices }));
    }
    let reps = x.type_representatives();
    let mut reports: BTreeMap<[BlockId; 3], VertexTypeReport> = BTreeMap::new();
    for (t, v) in &reps {
        reports.insert(*t, VertexTypeReport::new(block_type_name(t), x.vertex_name(*v), Engine::Explicit));
    }
    let mut visit = |v: [usize; 3]| -> Result<(), MorseError> {
        let t = x.block_type(v).expect("X_Γ vertices have block types");
        let link = x.vertex_link(v).map_err(MorseError::Cube)?;
        let weights = link_weights(x, v, &link, lambda)?;
        let vname = x.vertex_name(v);
        let outcome = check_link(&link, &weights, m, &vname, &|i| x.link_vertex_name(link.label(i)));
        reports.get_mut(&t).expect("every block triple has a representative").absorb(outcome);
        Ok(())
    };
    if exhaustive {
        for v in x.vertices() {
            visit(v)?;
        }
    } else {
        for (_, v) in &reps {
            visit(*v)?;
        }
    }
    Ok(reports.into_values().collect())
}

/// Explicit engine at the eight vertices of `Θ³`, where every link is the
/// join of the three factor links.
pub fn check_theta_type1_explicit(n: u32, lambda: &Character, m: i8) -> Result<Vec<VertexTypeReport>, MorseError> {
    validate_target(m)?;
    let x = crate::cubeworld::build_theta_cube(n).map_err(MorseError::Cube)?;
    let mut out = Vec::new();
    for v in x.vertices() {
        let link = x.vertex_link(v).map_err(MorseError::Cube)?;
        let weights = link_weights(&x, v, &link, lambda)?;
        let vname = format!("({},{},{})", v[0], v[1], v[2]);
        let mut report = VertexTypeReport::new(format!("type1 {vname}"), vname.clone(), Engine::Explicit);
        report.absorb(check_link(&link, &weights, m, &vname, &|i| x.link_vertex_name(link.label(i))));
        out.push(report);
    }
    Ok(out)
}
