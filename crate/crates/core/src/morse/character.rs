//! Characters, edge classes and their weights.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bigraph::{BlockId, BlockPair, Side};

/// The two families of cube complexes and their character coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Coordinates `λ₁..λ_n`.
    XGamma { n: u32 },
    /// Coordinates `λ₂..λ_n`.
    Theta { n: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharacterError {
    WrongLength { expected: usize, found: usize },
    Zero,
    Parse(String),
    BadRank,
}

impl fmt::Display for CharacterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterError::WrongLength { expected, found } => {
                write!(f, "expected {expected} coordinates, found {found}")
            }
            CharacterError::Zero => f.write_str("the zero character is excluded"),
            CharacterError::Parse(s) => write!(f, "cannot parse {s:?} as a rational"),
            CharacterError::BadRank => f.write_str("rank out of range for this family"),
        }
    }
}

impl Family {
    pub fn rank(self) -> u32 {
        match self {
            Family::XGamma { n } | Family::Theta { n } => n,
        }
    }

    /// Number of character coordinates.
    pub fn dim(self) -> usize {
        match self {
            Family::XGamma { n } => n as usize,
            Family::Theta { n } => n as usize - 1,
        }
    }

    pub fn validate(self) -> Result<(), CharacterError> {
        match self {
            Family::XGamma { n } if n >= 1 => Ok(()),
            Family::Theta { n } if n >= 2 => Ok(()),
            _ => Err(CharacterError::BadRank),
        }
    }

    pub fn coordinate_name(self, i: usize) -> String {
        match self {
            Family::XGamma { .. } => format!("l{}", i + 1),
            Family::Theta { .. } => format!("l{}", i + 2),
        }
    }

    /// The linear forms whose signs decide every edge-class sign:
    /// `λᵢ` and `λᵢ + λⱼ` for X_Γ, `λ₂..λ_n` and their sum for Θ.
    pub fn functionals(self) -> Vec<Vec<i64>> {
        let d = self.dim();
        let unit = |i: usize| {
            let mut v = vec![0; d];
            v[i] = 1;
            v
        };
        let mut out: Vec<Vec<i64>> = (0..d).map(unit).collect();
        match self {
            Family::XGamma { .. } => {
                for i in 0..d {
                    for j in i + 1..d {
                        let mut v = unit(i);
                        v[j] = 1;
                        out.push(v);
                    }
                }
            }
            Family::Theta { .. } => out.push(vec![1; d]),
        }
        out
    }

    pub fn functional_name(self, f: &[i64]) -> String {
        let parts: Vec<String> = f
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, _)| self.coordinate_name(i))
            .collect();
        parts.join("+")
    }

    /// Every edge class with its coefficient vector.
    pub fn edge_classes(self) -> Vec<(EdgeClass, Vec<i64>)> {
        match self {
            Family::XGamma { n } => {
                let mut out = Vec::new();
                for a in BlockId::all(Side::A, n) {
                    for b in BlockId::all(Side::B, n) {
                        let class = EdgeClass::Block(BlockPair::new(a, b));
                        let w = class.coefficients(self);
                        out.push((class, w));
                    }
                }
                out
            }
            Family::Theta { n } => {
                let mut out = Vec::new();
                for kind in [ThetaKind::X, ThetaKind::Y] {
                    for index in 1..=n {
                        let class = EdgeClass::Theta(ThetaEdge { kind, index });
                        let w = class.coefficients(self);
                        out.push((class, w));
                    }
                }
                out
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThetaKind {
    X,
    Y,
}

/// Edge `x_index` or `y_index` of the theta graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThetaEdge {
    pub kind: ThetaKind,
    pub index: u32,
}

impl ThetaEdge {
    /// Position among the factor edges `x₁..x_n, y₁..y_n`.
    pub fn position(self, n: u32) -> usize {
        let base = if self.kind == ThetaKind::X { 0 } else { n as usize };
        base + self.index as usize - 1
    }

    pub fn from_position(position: usize, n: u32) -> Self {
        let n = n as usize;
        if position < n {
            ThetaEdge { kind: ThetaKind::X, index: position as u32 + 1 }
        } else {
            ThetaEdge { kind: ThetaKind::Y, index: (position - n) as u32 + 1 }
        }
    }

    /// Tail of the auxiliary orientation: `x` runs `0 → 1`, `y` runs `1 → 0`.
    pub fn tail(self) -> usize {
        match self.kind {
            ThetaKind::X => 0,
            ThetaKind::Y => 1,
        }
    }
}

impl fmt::Display for ThetaEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = if self.kind == ThetaKind::X { "x" } else { "y" };
        write!(f, "{k}{}", self.index)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeClass {
    Block(BlockPair),
    Theta(ThetaEdge),
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeClass::Block(p) => write!(f, "{p}"),
            EdgeClass::Theta(e) => write!(f, "{e}"),
        }
    }
}

impl EdgeClass {
    /// Coefficients `w` with signed weight `Σ wᵢλᵢ`, measured along the
    /// edge's orientation (A to B for block classes).
    pub fn coefficients(self, family: Family) -> Vec<i64> {
        let d = family.dim();
        let mut w = vec![0i64; d];
        match self {
            EdgeClass::Block(BlockPair { a, b }) => {
                let st = a.sign.value() * b.sign.value();
                w[a.index as usize - 1] = st;
                w[b.index as usize - 1] = st;
            }
            EdgeClass::Theta(e) => {
                if e.index == 1 {
                    w.iter_mut().for_each(|x| *x = 1);
                } else {
                    w[e.index as usize - 2] = 1;
                }
            }
        }
        w
    }
}

/// A nonzero character in canonical scaling: the first nonzero entry is ±1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    family: Family,
    lambda: Vec<BigRational>,
}

impl Character {
    pub fn new(family: Family, lambda: Vec<BigRational>) -> Result<Self, CharacterError> {
        family.validate()?;
        if lambda.len() != family.dim() {
            return Err(CharacterError::WrongLength { expected: family.dim(), found: lambda.len() });
        }
        let Some(lead) = lambda.iter().find(|x| !x.is_zero()).cloned() else {
            return Err(CharacterError::Zero);
        };
        let scale = lead.abs();
        let lambda = lambda.into_iter().map(|x| x / &scale).collect();
        Ok(Character { family, lambda })
    }

    pub fn from_integers(family: Family, lambda: &[i64]) -> Result<Self, CharacterError> {
        Character::new(family, lambda.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    /// Parses comma-separated rationals such as `1,-2/3,0`.
    pub fn parse(family: Family, text: &str) -> Result<Self, CharacterError> {
        let mut out = Vec::new();
        for part in text.split(',') {
            out.push(parse_rational(part.trim())?);
        }
        Character::new(family, out)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn lambda(&self) -> &[BigRational] {
        &self.lambda
    }

    pub fn scaled(&self, factor: &BigRational) -> Result<Self, CharacterError> {
        Character::new(self.family, self.lambda.iter().map(|x| x * factor).collect())
    }

    pub fn negated(&self) -> Self {
        Character { family: self.family, lambda: self.lambda.iter().map(|x| -x).collect() }
    }

    pub fn eval(&self, w: &[i64]) -> BigRational {
        let mut acc = BigRational::zero();
        for (c, x) in w.iter().zip(&self.lambda) {
            if *c != 0 {
                acc += x * BigRational::from_integer(BigInt::from(*c));
            }
        }
        acc
    }

    /// Signs of the family's functionals.
    pub fn sign_vector(&self) -> Vec<i8> {
        self.family.functionals().iter().map(|f| sign_of(&self.eval(f))).collect()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.lambda.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, CharacterError> {
    let err = || CharacterError::Parse(String::from(s));
    match s.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num.trim()).map_err(|_| err())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| err())?;
            if den.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| err())?)),
    }
}

pub fn sign_of(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Signed weight of an edge class.
pub fn edge_weight(class: EdgeClass, lambda: &Character) -> BigRational {
    lambda.eval(&class.coefficients(lambda.family()))
}

/// Smallest absolute nonzero weight over all edge classes.
pub fn compute_cmin(lambda: &Character) -> BigRational {
    lambda
        .family()
        .edge_classes()
        .iter()
        .map(|(_, w)| lambda.eval(w).abs())
        .filter(|x| !x.is_zero())
        .min()
        .expect("a nonzero character gives some class a nonzero weight")
}

