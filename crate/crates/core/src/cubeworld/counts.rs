//! Cell counts and Euler characteristics.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{CubeError, MembershipRule, ProductCubeComplex};
use crate::bigraph::Side;
use crate::Budget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CellCounts {
    pub v: i128,
    pub e: i128,
    pub f: i128,
    pub c: i128,
}

impl CellCounts {
    pub fn chi(&self) -> i128 {
        self.v - self.e + self.f - self.c
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CountMode {
    /// Visit every cell.
    Enumerate,
    /// Closed formulas in terms of graph statistics.
    ClosedForm,
}

pub fn cell_counts(x: &ProductCubeComplex, mode: CountMode, budget: &Budget) -> Result<CellCounts, CubeError> {
    match mode {
        CountMode::Enumerate => enumerate(x, budget),
        CountMode::ClosedForm => closed_form_counts(x),
    }
}

fn enumerate(x: &ProductCubeComplex, budget: &Budget) -> Result<CellCounts, CubeError> {
    let needed: u128 = x.factors().iter().map(|f| (f.vertex_count() + f.edge_count()) as u128).product();
    if needed > budget.cells as u128 {
        return Err(CubeError::BudgetExceeded { needed, budget: budget.cells });
    }
    let mut counts = [0i128; 4];
    for v in x.vertices() {
        // Each cell is counted at its corner with the smallest coordinates.
        let options: Vec<Vec<Option<usize>>> = (0..3)
            .map(|i| {
                let mut o = alloc::vec![None];
                o.extend(x.factor(i).edges_at(v[i]).into_iter().filter(|&(_, w)| w > v[i]).map(|(_, w)| Some(w)));
                o
            })
            .collect();
        for &c0 in &options[0] {
            for &c1 in &options[1] {
                for &c2 in &options[2] {
                    let choice = [c0, c1, c2];
                    let dim = choice.iter().filter(|c| c.is_some()).count();
                    let present = (1u8..8).all(|mask| {
                        let mut u = v;
                        for i in 0..3 {
                            if mask & (1 << i) != 0 {
                                match choice[i] {
                                    Some(w) => u[i] = w,
                                    None => return true,
                                }
                            }
                        }
                        x.contains(u)
                    });
                    if present {
                        counts[dim] += 1;
                    }
                }
            }
        }
    }
    Ok(CellCounts { v: counts[0], e: counts[1], f: counts[2], c: counts[3] })
}

/// Counts without enumeration: product formulas for full products, and
/// the statistics `|A|`, `|B|`, `|E(Γ)|` for the X_Γ family.
pub fn closed_form_counts(x: &ProductCubeComplex) -> Result<CellCounts, CubeError> {
    match x.rule() {
        MembershipRule::XGamma(g) => {
            xgamma_counts_from_stats(g.side_len(Side::A) as i128, g.side_len(Side::B) as i128, g.edges().len() as i128)
        }
        MembershipRule::FullProduct => {
            let vs: Vec<i128> = x.factors().iter().map(|f| f.vertex_count() as i128).collect();
            let es: Vec<i128> = x.factors().iter().map(|f| f.edge_count() as i128).collect();
            let mul = |a: i128, b: i128| a.checked_mul(b).ok_or(CubeError::Overflow);
            let add = |a: i128, b: i128| a.checked_add(b).ok_or(CubeError::Overflow);
            let mut c = [0i128; 4];
            for mask in 0u8..8 {
                let mut term = 1i128;
                for i in 0..3 {
                    term = mul(term, if mask & (1 << i) != 0 { es[i] } else { vs[i] })?;
                }
                let d = mask.count_ones() as usize;
                c[d] = add(c[d], term)?;
            }
            Ok(CellCounts { v: c[0], e: c[1], f: c[2], c: c[3] })
        }
    }
}

/// Cell counts of X_Γ from `a = |A|`, `b = |B|` and `m = |E(Γ)|`.
///
/// A cell is a triple of cells of `A * B`, each a vertex in `A`, a vertex in
/// `B` or an edge. Walking the three coordinates cyclically, the only
/// constraint is a Γ-edge for each `A` followed by `B`; an edge coordinate
/// behaves like `A` towards its successor and like `B` towards its
/// predecessor. Summing over the 27 kind patterns gives the formulas below.
pub fn xgamma_counts_from_stats(a: i128, b: i128, m: i128) -> Result<CellCounts, CubeError> {
    let [v, e, f, c] = xgamma_counts_exact(&BigInt::from(a), &BigInt::from(b), &BigInt::from(m));
    let fit = |x: BigInt| i128::try_from(x).map_err(|_| CubeError::Overflow);
    Ok(CellCounts { v: fit(v)?, e: fit(e)?, f: fit(f)?, c: fit(c)? })
}

/// `[V, E, F, C]` of X_Γ without a size limit.
pub fn xgamma_counts_exact(a: &BigInt, b: &BigInt, m: &BigInt) -> [BigInt; 4] {
    let three = BigInt::from(3);
    let v = a * a * a + b * b * b + &three * m * (a + b);
    let e = &three * m * (a * a + a * b + b * b) + &three * m * m;
    let f = &three * m * m * (a + b);
    let c = m * m * m;
    [v, e, f, c]
}

/// `2p³(1 − 36n² + 192n⁴ − 256n⁶) + 48p²(n² − 4n⁴)`.
pub fn euler_formula_xgamma(n: u32, p: u128) -> BigInt {
    let n = BigInt::from(n);
    let p = BigInt::from(p);
    let n2 = &n * &n;
    let n4 = &n2 * &n2;
    let n6 = &n4 * &n2;
    let p2 = &p * &p;
    let p3 = &p2 * &p;
    BigInt::from(2) * p3 * (BigInt::from(1) - 36 * &n2 + 192 * &n4 - 256 * &n6) + 48 * p2 * (&n2 - 4 * &n4)
}

/// `p³(2 − 18n + 24n² − 8n³) − 3p²(2n − 2)`.
pub fn euler_formula_y(n: u32, p: u128) -> BigInt {
    let n = BigInt::from(n);
    let p = BigInt::from(p);
    let p2 = &p * &p;
    let p3 = &p2 * &p;
    p3 * (BigInt::from(2) - 18 * &n + 24 * &n * &n - 8 * &n * &n * &n) - 3 * p2 * (2 * &n - 2)
}

/// `p³(2 − 2n)³ − 3(p³ − p²)(2 − 2n)`: `p³` copies of the base cube
/// complex, corrected along the ramification locus.
pub fn euler_y_cover_decomposition(n: u32, p: u128) -> BigInt {
    let n = BigInt::from(n);
    let p = BigInt::from(p);
    let p2 = &p * &p;
    let p3 = &p2 * &p;
    let chi_theta = BigInt::from(2) - 2 * &n;
    &p3 * &chi_theta * &chi_theta * &chi_theta - 3 * (&p3 - &p2) * chi_theta
}
