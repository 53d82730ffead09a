//! Sign chambers of the central arrangement given by a family's functionals.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::character::{Character, CharacterError, Family};

/// Largest rank for which chambers are enumerated.
pub const MAX_CHAMBER_RANK: u32 = 4;

/// A realizable sign vector over the family's functionals with an interior
/// representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignChamber {
    pub signs: Vec<i8>,
    pub representative: Character,
}

impl SignChamber {
    pub fn family(&self) -> Family {
        self.representative.family()
    }

    pub fn sign_string(&self) -> alloc::string::String {
        self.signs
            .iter()
            .map(|s| match s {
                1 => '+',
                -1 => '-',
                _ => '0',
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChamberError {
    RankTooLarge(u32),
    Character(CharacterError),
}

impl core::fmt::Display for ChamberError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ChamberError::RankTooLarge(n) => {
                write!(f, "chamber enumeration is limited to rank {MAX_CHAMBER_RANK}, got {n}")
            }
            ChamberError::Character(e) => write!(f, "{e}"),
        }
    }
}

/// One constraint `a·x = 0` or `a·x ≥ 1`.
#[derive(Clone, Debug)]
struct Constraint {
    a: Vec<BigRational>,
    equality: bool,
    rhs: BigRational,
}

/// Every realizable nonzero sign vector, in lexicographic order with
/// `+ < - < 0` per functional.
pub fn enumerate_chambers(family: Family) -> Result<Vec<SignChamber>, ChamberError> {
    family.validate().map_err(ChamberError::Character)?;
    if family.rank() > MAX_CHAMBER_RANK {
        return Err(ChamberError::RankTooLarge(family.rank()));
    }
    let functionals = family.functionals();
    let mut out = Vec::new();
    let mut signs = Vec::new();
    search(family, &functionals, &mut signs, &mut out)?;
    Ok(out)
}

fn search(
    family: Family,
    functionals: &[Vec<i64>],
    signs: &mut Vec<i8>,
    out: &mut Vec<SignChamber>,
) -> Result<(), ChamberError> {
    let Some(point) = feasible_point(family.dim(), functionals, signs) else { return Ok(()) };
    if signs.len() == functionals.len() {
        if signs.iter().any(|&s| s != 0) {
            let representative = Character::new(family, point).map_err(ChamberError::Character)?;
            debug_assert_eq!(&representative.sign_vector(), signs);
            out.push(SignChamber { signs: signs.clone(), representative });
        }
        return Ok(());
    }
    for s in [1i8, -1, 0] {
        signs.push(s);
        search(family, functionals, signs, out)?;
        signs.pop();
    }
    Ok(())
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// A point realizing a prefix of signs, or `None` when infeasible.
fn feasible_point(dim: usize, functionals: &[Vec<i64>], signs: &[i8]) -> Option<Vec<BigRational>> {
    let constraints: Vec<Constraint> = signs
        .iter()
        .zip(functionals)
        .map(|(&s, f)| {
            // Sign 0 is an equality; a strict sign becomes `s·f ≥ 1`.
            let m = if s == 0 { 1 } else { s as i64 };
            let rhs = if s == 0 { BigRational::zero() } else { BigRational::one() };
            Constraint { a: f.iter().map(|&c| rat(c * m)).collect(), equality: s == 0, rhs }
        })
        .collect();
    solve(dim, constraints)
}

/// Exact feasibility of a system of equalities and `≥` inequalities, by
/// Gaussian elimination of the equalities followed by Fourier–Motzkin
/// elimination; returns a witness built by back substitution.
fn solve(dim: usize, constraints: Vec<Constraint>) -> Option<Vec<BigRational>> {
    // Each equality pins one variable as an affine function of the others.
    let mut pinned: Vec<Option<(Vec<BigRational>, BigRational)>> = vec![None; dim];
    let mut ineqs: Vec<Constraint> = Vec::new();
    let mut eqs: Vec<Constraint> = Vec::new();
    for c in constraints {
        if c.equality {
            eqs.push(c);
        } else {
            ineqs.push(c);
        }
    }
    while let Some(mut eq) = eqs.pop() {
        substitute_all(&mut eq, &pinned);
        let Some(pivot) = eq.a.iter().position(|x| !x.is_zero()) else {
            if eq.rhs.is_zero() {
                continue;
            }
            return None;
        };
        // x_pivot = (rhs - Σ_{j≠pivot} a_j x_j) / a_pivot
        let lead = eq.a[pivot].clone();
        let coeffs: Vec<BigRational> =
            eq.a.iter().enumerate().map(|(j, x)| if j == pivot { BigRational::zero() } else { -x / &lead }).collect();
        pinned[pivot] = Some((coeffs, &eq.rhs / &lead));
        for slot in 0..dim {
            if slot != pivot {
                if let Some((c, r)) = pinned[slot].clone() {
                    let mut tmp = Constraint { a: c, equality: true, rhs: -r };
                    // Re-express earlier pins without the new pivot variable.
                    substitute_one(&mut tmp, pivot, &pinned[pivot].clone().unwrap());
                    pinned[slot] = Some((tmp.a, -tmp.rhs));
                }
            }
        }
    }
    for c in ineqs.iter_mut() {
        substitute_all(c, &pinned);
    }
    let free: Vec<usize> = (0..dim).filter(|&j| pinned[j].is_none()).collect();
    // Fourier–Motzkin over the free variables, keeping every stage.
    let mut stages: Vec<Vec<Constraint>> = vec![ineqs];
    for &var in free.iter().rev() {
        let current = stages.last().unwrap();
        let mut next = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for c in current {
            let a = &c.a[var];
            if a.is_zero() {
                next.push(c.clone());
            } else if a.is_positive() {
                pos.push(c);
            } else {
                neg.push(c);
            }
        }
        for p in &pos {
            for q in &neg {
                let (ap, aq) = (p.a[var].clone(), -q.a[var].clone());
                let a: Vec<BigRational> = p.a.iter().zip(&q.a).map(|(x, y)| x * &aq + y * &ap).collect();
                let rhs = &p.rhs * &aq + &q.rhs * &ap;
                next.push(normalize(Constraint { a, equality: false, rhs }));
            }
        }
        next.sort_by(|x, y| (&x.a, &x.rhs).cmp(&(&y.a, &y.rhs)));
        next.dedup_by(|x, y| x.a == y.a && x.rhs == y.rhs);
        stages.push(next);
    }
    if stages.last().unwrap().iter().any(|c| c.rhs.is_positive()) {
        return None;
    }
    let mut x: Vec<BigRational> = vec![BigRational::zero(); dim];
    for (k, &var) in free.iter().enumerate() {
        // Stage `free.len() - 1 - k` still mentions `var` but none of the
        // variables eliminated before it, all of which are unset.
        let stage = &stages[free.len() - 1 - k];
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for c in stage {
            let a = &c.a[var];
            if a.is_zero() {
                continue;
            }
            let rest: BigRational = c
                .a
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != var)
                .map(|(j, aj)| aj * &x[j])
                .fold(BigRational::zero(), |acc, t| acc + t);
            let bound = (&c.rhs - rest) / a;
            if a.is_positive() {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
        x[var] = pick(lower, upper);
    }
    for j in (0..dim).rev() {
        if let Some((c, r)) = &pinned[j] {
            let mut v = r.clone();
            for (i, ci) in c.iter().enumerate() {
                v += ci * &x[i];
            }
            x[j] = v;
        }
    }
    Some(x)
}

/// Simplest value in `[lower, upper]`: an integer of least absolute value
/// when there is one, otherwise the midpoint.
fn pick(lower: Option<BigRational>, upper: Option<BigRational>) -> BigRational {
    let zero = BigRational::zero();
    match (lower, upper) {
        (None, None) => zero,
        (Some(l), None) => {
            if l <= zero {
                zero
            } else {
                l.ceil()
            }
        }
        (None, Some(u)) => {
            if u >= zero {
                zero
            } else {
                u.floor()
            }
        }
        (Some(l), Some(u)) => {
            if l <= zero && zero <= u {
                zero
            } else if l > zero && l.ceil() <= u {
                l.ceil()
            } else if u < zero && u.floor() >= l {
                u.floor()
            } else {
                (l + u) / BigRational::from_integer(BigInt::from(2))
            }
        }
    }
}

fn substitute_one(c: &mut Constraint, var: usize, pin: &(Vec<BigRational>, BigRational)) {
    let a = core::mem::replace(&mut c.a[var], BigRational::zero());
    if a.is_zero() {
        return;
    }
    for (j, cj) in pin.0.iter().enumerate() {
        if !cj.is_zero() {
            c.a[j] += &a * cj;
        }
    }
    c.rhs -= &a * &pin.1;
}

fn substitute_all(c: &mut Constraint, pinned: &[Option<(Vec<BigRational>, BigRational)>]) {
    for (var, pin) in pinned.iter().enumerate() {
        if let Some(pin) = pin {
            substitute_one(c, var, pin);
        }
    }
}

/// Scales an inequality to integer coefficients with unit content.
fn normalize(mut c: Constraint) -> Constraint {
    let mut den = BigInt::one();
    for x in c.a.iter().chain(core::iter::once(&c.rhs)) {
        den = den.lcm(x.denom());
    }
    let mut g = BigInt::zero();
    for x in c.a.iter().chain(core::iter::once(&c.rhs)) {
        g = g.gcd(&(x.numer() * (&den / x.denom())));
    }
    if g.is_zero() {
        return c;
    }
    let scale = BigRational::new(den, g);
    for x in c.a.iter_mut() {
        *x = &*x * &scale;
    }
    c.rhs = &c.rhs * &scale;
    c
}

/// The chamber whose sign vector `lambda` realizes.
pub fn chamber_of<'a>(chambers: &'a [SignChamber], lambda: &Character) -> Option<&'a SignChamber> {
    let signs = lambda.sign_vector();
    chambers.iter().find(|c| c.signs == signs)
}
