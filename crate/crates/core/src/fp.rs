//! Membership deciders for the positivity cones: ratios of polynomials with
//! nonnegative coefficients in one parameter, and rational functions
//! nonnegative on the region where both Macdonald parameters exceed 1.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{Poly, Vars};
use crate::rat::{rat, rat_int, Rat};
use crate::ratfunc::RatFunc;
use crate::sturm::{count_roots_dense, Bound};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    InCone,
    NotInCone,
    Zero,
    Unknown,
}

/// Constructive witness that a function is a ratio of nonnegative-coefficient
/// polynomials: multiplier exponents together with the shifted numerator and
/// denominator, both coefficientwise nonnegative.
#[derive(Debug, Clone)]
pub struct PolyaCertificate {
    /// One exponent per multiplier factor, numerator side.
    pub num_exponents: Vec<u32>,
    /// One exponent per multiplier factor, denominator side.
    pub den_exponents: Vec<u32>,
    /// The multiplier factors, e.g. `1 + tau`, or `1 + u` and `1 + v`.
    pub multipliers: Vec<Poly>,
    pub shifted_num: Poly,
    pub shifted_den: Poly,
}

impl PolyaCertificate {
    /// Re-expand the certificate and compare with the claimed fraction.
    pub fn verifies(&self, num: &Poly, den: &Poly) -> bool {
        if !self.shifted_num.coeffs_nonneg() || !self.shifted_den.coeffs_nonneg() {
            return false;
        }
        let mut n = num.clone();
        for (m, &e) in self.multipliers.iter().zip(&self.num_exponents) {
            n = n.mul(&m.pow(e));
        }
        let mut d = den.clone();
        for (m, &e) in self.multipliers.iter().zip(&self.den_exponents) {
            d = d.mul(&m.pow(e));
        }
        n == self.shifted_num && d == self.shifted_den
    }
}

#[derive(Debug, Clone)]
pub struct PositivityVerdict {
    pub kind: VerdictKind,
    pub certificate: Option<PolyaCertificate>,
    /// A rational point in the domain where the value is negative.
    pub witness: Option<Vec<Rat>>,
    /// The search bound in force.
    pub effort: u32,
    /// InCone verdict whose explicit certificate search exceeded the bound.
    pub certificate_bound_exceeded: bool,
}

impl PositivityVerdict {
    pub fn in_cone(&self) -> bool {
        matches!(self.kind, VerdictKind::InCone | VerdictKind::Zero)
    }

    fn plain(kind: VerdictKind, effort: u32) -> Self {
        PositivityVerdict {
            kind,
            certificate: None,
            witness: None,
            effort,
            certificate_bound_exceeded: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FpOptions {
    /// Cap on multiplier exponents in certificate searches.
    pub polya_bound: u32,
    /// Sample values used on each axis when refuting two-parameter queries.
    pub qt_grid: Vec<Rat>,
    /// Bisection depth near sign changes during refutation.
    pub refine_depth: u32,
}

impl Default for FpOptions {
    fn default() -> Self {
        let mut grid: Vec<Rat> = (0..=6)
            .map(|k| rat_int(1) + rat(1, 1 << k))
            .collect();
        for v in [2, 3, 5] {
            grid.push(rat_int(v));
        }
        FpOptions { polya_bound: 64, qt_grid: grid, refine_depth: 8 }
    }
}

/// Smallest exponent `n <= bound` such that `p * mult^n` has nonnegative
/// coefficients, together with the shifted polynomial.
fn polya_search(p: &Poly, mult: &Poly, bound: u32) -> Option<(u32, Poly)> {
    let mut cur = p.clone();
    for n in 0..=bound {
        if cur.coeffs_nonneg() {
            return Some((n, cur));
        }
        if n < bound {
            cur = cur.mul(mult);
        }
    }
    None
}

/// A support monomial minimal under divisibility keeps its coefficient when
/// multiplied by any polynomial with constant term 1; a negative coefficient
/// there rules out every multiplier.
fn has_negative_corner(p: &Poly) -> bool {
    let support: Vec<(&Vec<u32>, &Rat)> = p.terms().collect();
    'outer: for (e, c) in &support {
        if !c.is_negative() {
            continue;
        }
        for (f, _) in &support {
            if *f != *e && f.iter().zip(e.iter()).all(|(a, b)| a <= b) {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

/// Decide membership in the one-parameter cone of positivity: ratios of
/// nonnegative-coefficient polynomials in the parameter. Exact both ways.
pub fn fp_membership_tau(f: &RatFunc, opts: &FpOptions) -> PositivityVerdict {
    assert_eq!(f.vars().len(), 1, "one-parameter cone query needs a univariate function");
    if f.is_zero() {
        return PositivityVerdict::plain(VerdictKind::Zero, opts.polya_bound);
    }
    let num = f.numer().clone();
    let den = f.denom().clone();

    // Clear parameter powers; tau^k and 1/tau^k are cone members.
    let num1 = num.div_monomial(&num.monomial_content());
    let den1 = den.div_monomial(&den.monomial_content());

    let zero = Bound::Finite(Rat::zero());
    let ok = |p: &Poly| -> bool {
        if p.constant_term().is_negative() || p.constant_term().is_zero() {
            return false;
        }
        if p.leading_coeff().is_negative() {
            return false;
        }
        if p.is_constant() {
            return true;
        }
        let dense = p.to_univar(0).expect("univariate");
        count_roots_dense(&dense, &zero, &Bound::PosInf).expect("nonzero") == 0
    };

    if ok(&num1) && ok(&den1) {
        let mult = one_plus_var(f.vars());
        let found_n = polya_search(&num, &mult, opts.polya_bound);
        let found_d = polya_search(&den, &mult, opts.polya_bound);
        match (found_n, found_d) {
            (Some((n, sn)), Some((m, sd))) => PositivityVerdict {
                kind: VerdictKind::InCone,
                certificate: Some(PolyaCertificate {
                    num_exponents: vec![n],
                    den_exponents: vec![m],
                    multipliers: vec![mult],
                    shifted_num: sn,
                    shifted_den: sd,
                }),
                witness: None,
                effort: opts.polya_bound,
                certificate_bound_exceeded: false,
            },
            _ => PositivityVerdict {
                kind: VerdictKind::InCone,
                certificate: None,
                witness: None,
                effort: opts.polya_bound,
                certificate_bound_exceeded: true,
            },
        }
    } else {
        let witness = find_negative_point_1d(f);
        PositivityVerdict {
            kind: VerdictKind::NotInCone,
            certificate: None,
            witness,
            effort: opts.polya_bound,
            certificate_bound_exceeded: false,
        }
    }
}

fn one_plus_var(vars: &Vars) -> Poly {
    Poly::one(vars).add(&Poly::var(vars, 0))
}

fn find_negative_point_1d(f: &RatFunc) -> Option<Vec<Rat>> {
    for k in 1..=512u32 {
        let x = rat(k as i64, 8);
        if let Ok(v) = f.eval(std::slice::from_ref(&x)) {
            if v.is_negative() {
                return Some(vec![x]);
            }
        }
    }
    for k in 7..=20u32 {
        let x = rat_int(1 << k);
        if let Ok(v) = f.eval(std::slice::from_ref(&x)) {
            if v.is_negative() {
                return Some(vec![x]);
            }
        }
        let x = rat(1, 1 << k);
        if let Ok(v) = f.eval(std::slice::from_ref(&x)) {
            if v.is_negative() {
                return Some(vec![x]);
            }
        }
    }
    None
}

/// Semi-decide membership in the two-parameter cone: nonnegative whenever
/// both parameters exceed 1. Certification substitutes `q = 1+u, t = 1+v`
/// and searches multiplier exponents; refutation samples rational points.
pub fn fp_membership_qt(f: &RatFunc, opts: &FpOptions) -> PositivityVerdict {
    let vars = f.vars().clone();
    assert_eq!(vars.len(), 2, "two-parameter cone query needs two variables");
    if f.is_zero() {
        return PositivityVerdict::plain(VerdictKind::Zero, opts.polya_bound);
    }

    let shifted = Vars::new(&["u", "v"]);
    let images = [
        Poly::one(&shifted).add(&Poly::var(&shifted, 0)),
        Poly::one(&shifted).add(&Poly::var(&shifted, 1)),
    ];
    let mut gnum = f.numer().compose(&shifted, &images);
    let mut gden = f.denom().compose(&shifted, &images);
    // Orient the pair so the denominator is positive deep inside the region.
    let probe = [rat_int(1), rat_int(1)];
    if gden.eval(&probe).is_negative() {
        gnum = gnum.neg();
        gden = gden.neg();
    }

    if !has_negative_corner(&gnum) && !has_negative_corner(&gden) {
        let m_u = Poly::one(&shifted).add(&Poly::var(&shifted, 0));
        let m_v = Poly::one(&shifted).add(&Poly::var(&shifted, 1));
        if let Some((ne, sn)) = polya_search2(&gnum, &m_u, &m_v, opts.polya_bound) {
            if let Some((de, sd)) = polya_search2(&gden, &m_u, &m_v, opts.polya_bound) {
                return PositivityVerdict {
                    kind: VerdictKind::InCone,
                    certificate: Some(PolyaCertificate {
                        num_exponents: vec![ne.0, ne.1],
                        den_exponents: vec![de.0, de.1],
                        multipliers: vec![m_u, m_v],
                        shifted_num: sn,
                        shifted_den: sd,
                    }),
                    witness: None,
                    effort: opts.polya_bound,
                    certificate_bound_exceeded: false,
                };
            }
        }
    }

    if let Some(w) = find_negative_point_2d(f, opts) {
        return PositivityVerdict {
            kind: VerdictKind::NotInCone,
            certificate: None,
            witness: Some(w),
            effort: opts.polya_bound,
            certificate_bound_exceeded: false,
        };
    }

    PositivityVerdict::plain(VerdictKind::Unknown, opts.polya_bound)
}

/// Minimal-total-exponent search for `(1+u)^a (1+v)^b * p` nonnegative.
fn polya_search2(p: &Poly, m_u: &Poly, m_v: &Poly, bound: u32) -> Option<((u32, u32), Poly)> {
    let mut rows: Vec<Poly> = vec![p.clone()];
    let mut v_pows: Vec<Poly> = vec![Poly::one(p.vars())];
    for total in 0..=bound {
        for a in 0..=total {
            let b = total - a;
            while rows.len() <= a as usize {
                let next = rows.last().unwrap().mul(m_u);
                rows.push(next);
            }
            while v_pows.len() <= b as usize {
                let next = v_pows.last().unwrap().mul(m_v);
                v_pows.push(next);
            }
            let cand = rows[a as usize].mul(&v_pows[b as usize]);
            if cand.coeffs_nonneg() {
                return Some(((a, b), cand));
            }
        }
    }
    None
}

fn find_negative_point_2d(f: &RatFunc, opts: &FpOptions) -> Option<Vec<Rat>> {
    let grid = &opts.qt_grid;
    let mut values: Vec<Vec<Option<Rat>>> = Vec::new();
    for qa in grid {
        let mut row = Vec::new();
        for tb in grid {
            row.push(f.eval(&[qa.clone(), tb.clone()]).ok());
        }
        values.push(row);
    }
    for (i, qa) in grid.iter().enumerate() {
        for (j, tb) in grid.iter().enumerate() {
            if let Some(v) = &values[i][j] {
                if v.is_negative() {
                    return Some(vec![qa.clone(), tb.clone()]);
                }
            }
        }
    }
    // Bisect along grid segments whose endpoint signs differ.
    let sign = |o: &Option<Rat>| o.as_ref().map(|v| if v.is_negative() { -1 } else { 1 });
    let mut segments: Vec<([Rat; 2], [Rat; 2])> = Vec::new();
    for i in 0..grid.len() {
        for j in 0..grid.len() {
            if j + 1 < grid.len() && sign(&values[i][j]) != sign(&values[i][j + 1]) {
                segments.push((
                    [grid[i].clone(), grid[j].clone()],
                    [grid[i].clone(), grid[j + 1].clone()],
                ));
            }
            if i + 1 < grid.len() && sign(&values[i][j]) != sign(&values[i + 1][j]) {
                segments.push((
                    [grid[i].clone(), grid[j].clone()],
                    [grid[i + 1].clone(), grid[j].clone()],
                ));
            }
        }
    }
    for (a, b) in segments {
        let mut lo = a;
        let hi = b;
        for _ in 0..opts.refine_depth {
            let mid = [
                (lo[0].clone() + hi[0].clone()) / rat_int(2),
                (lo[1].clone() + hi[1].clone()) / rat_int(2),
            ];
            if let Ok(v) = f.eval(&mid) {
                if v.is_negative() {
                    return Some(mid.to_vec());
                }
            }
            lo = mid;
        }
    }
    None
}
