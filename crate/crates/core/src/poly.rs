//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are stored in a map keyed by exponent vector; the canonical term
//! order everywhere (leading terms, printing) is graded lexicographic with
//! the variable order fixed at construction.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::rat::{rat_text, Rat};

/// An ordered, immutable list of indeterminate names shared by the
/// polynomials of one coefficient field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new(names: &[&str]) -> Self {
        Vars(Arc::new(names.iter().map(|s| s.to_string()).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn names(&self) -> Vec<&str> {
        self.0.iter().map(|s| s.as_str()).collect()
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vars{:?}", self.0)
    }
}

pub fn vars_tau() -> Vars {
    Vars::new(&["tau"])
}

pub fn vars_sigma() -> Vars {
    Vars::new(&["sigma"])
}

pub fn vars_qt() -> Vars {
    Vars::new(&["q", "t"])
}

pub fn vars_tau_sigma() -> Vars {
    Vars::new(&["tau", "sigma"])
}

pub fn vars_tau_r_s() -> Vars {
    Vars::new(&["tau", "r", "s"])
}

/// Graded lexicographic comparison of exponent vectors.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(vars: &Vars) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: Rat) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Poly::constant(vars, Rat::one())
    }

    pub fn int(vars: &Vars, n: i64) -> Self {
        Poly::constant(vars, crate::rat::rat_int(n))
    }

    /// The monomial `c * x_i^e`.
    pub fn monomial(vars: &Vars, i: usize, e: u32, c: Rat) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            let mut exps = vec![0; vars.len()];
            exps[i] = e;
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        Poly::monomial(vars, i, 1, Rat::one())
    }

    pub fn var_named(vars: &Vars, name: &str) -> Self {
        let i = vars.index_of(name).expect("unknown variable name");
        Poly::var(vars, i)
    }

    /// Build from raw (exponent, coefficient) pairs, summing duplicates.
    pub fn from_terms(vars: &Vars, terms: Vec<(Vec<u32>, Rat)>) -> Self {
        let mut p = Poly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            p.insert_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&vec![0u32; self.vars.len()])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    fn insert_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars, "variable set mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars, "variable set mismatch");
        let mut out = Poly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        let mut out = Poly::zero(&self.vars);
        for (e, a) in &self.terms {
            out.terms.insert(e.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.vars);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Leading exponent vector under graded lex.
    pub fn leading_exps(&self) -> Option<&Vec<u32>> {
        self.terms.keys().max_by(|a, b| grlex(a, b))
    }

    pub fn leading_coeff(&self) -> Rat {
        match self.leading_exps() {
            Some(e) => self.terms[e].clone(),
            None => Rat::zero(),
        }
    }

    /// Fully evaluate at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term *= pow_rat(&point[i], k);
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitute each variable by a polynomial over a (possibly different)
    /// variable set, expanding the result.
    pub fn compose(&self, target: &Vars, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.vars.len());
        for im in images {
            assert_eq!(im.vars, *target);
        }
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&images[i].pow(k));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Re-embed into a larger variable set; every current variable must
    /// appear in `target`.
    pub fn embed(&self, target: &Vars) -> Poly {
        let map: Vec<usize> = (0..self.vars.len())
            .map(|i| {
                target
                    .index_of(self.vars.name(i))
                    .expect("embed: missing variable in target")
            })
            .collect();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (i, &k) in e.iter().enumerate() {
                exps[map[i]] = k;
            }
            out.terms.insert(exps, c.clone());
        }
        out
    }

    /// Project onto a smaller variable set; every variable actually occurring
    /// must appear in `target`.
    pub fn restrict(&self, target: &Vars) -> Poly {
        let map: Vec<Option<usize>> = (0..self.vars.len())
            .map(|i| target.index_of(self.vars.name(i)))
            .collect();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let j = map[i].expect("restrict: dropped variable occurs in polynomial");
                    exps[j] = k;
                }
            }
            out.terms.insert(exps, c.clone());
        }
        out
    }

    /// Partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[var] -= 1;
            out.insert_term(exps, c.clone() * crate::rat::rat_int(e[var] as i64));
        }
        out
    }

    /// Dense coefficient list `[c_0, c_1, ...]` when the polynomial involves
    /// only variable `var`. Returns None if another variable appears.
    pub fn to_univar(&self, var: usize) -> Option<Vec<Rat>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (e, c) in &self.terms {
            for (i, &k) in e.iter().enumerate() {
                if i != var && k != 0 {
                    return None;
                }
            }
            coeffs[e[var] as usize] = c.clone();
        }
        Some(coeffs)
    }

    pub fn from_univar(vars: &Vars, var: usize, coeffs: &[Rat]) -> Poly {
        let mut p = Poly::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0u32; vars.len()];
                exps[var] = k as u32;
                p.terms.insert(exps, c.clone());
            }
        }
        p
    }

    /// Largest monomial `x^a` dividing every term; zero polynomial gives 0s.
    pub fn monomial_content(&self) -> Vec<u32> {
        let mut m: Option<Vec<u32>> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(prev) => prev.iter().zip(e).map(|(a, b)| (*a).min(*b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.vars.len()])
    }

    /// Divide by the monomial `x^a`; every term must be divisible.
    pub fn div_monomial(&self, a: &[u32]) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            let exps: Vec<u32> = e
                .iter()
                .zip(a)
                .map(|(x, y)| x.checked_sub(*y).expect("monomial does not divide"))
                .collect();
            out.terms.insert(exps, c.clone());
        }
        out
    }

    /// All coefficients nonnegative (and the polynomial may be zero).
    pub fn coeffs_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Rational content: positive rational `c` such that `self / c` has
    /// coprime integer coefficients. Zero polynomial gives 1.
    pub fn content(&self) -> Rat {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.terms.is_empty() {
            return Rat::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// `self / content()`, with integer coprime coefficients.
    pub fn primitive_part(&self) -> Poly {
        if self.terms.is_empty() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Exact division; returns None when the division leaves a remainder.
    /// Multivariate long division by a single divisor under graded lex.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert_eq!(self.vars, divisor.vars);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dlead = divisor.leading_exps().unwrap().clone();
        let dcoeff = divisor.terms[&dlead].clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.vars);
        while !rem.is_zero() {
            let rlead = rem.leading_exps().unwrap().clone();
            if !exps_divides(&dlead, &rlead) {
                return None;
            }
            let qexp: Vec<u32> = rlead.iter().zip(&dlead).map(|(a, b)| a - b).collect();
            let qc = rem.terms[&rlead].clone() / dcoeff.clone();
            let mut mono = Poly::zero(&self.vars);
            mono.terms.insert(qexp, qc);
            quot = quot.add(&mono);
            rem = rem.sub(&mono.mul(divisor));
        }
        Some(quot)
    }

    /// Canonical text: terms in ascending graded lex, "+/-" separated,
    /// coefficients as `p/q`, exponents always explicit.
    pub fn text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(a, b));
        let mut out = String::new();
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = self.monomial_text(e);
            if mono.is_empty() {
                out.push_str(&rat_text(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", rat_text(&mag), mono));
            }
        }
        out
    }

    fn monomial_text(&self, exps: &[u32]) -> String {
        let mut parts = Vec::new();
        for (i, &k) in exps.iter().enumerate() {
            if k > 0 {
                parts.push(format!("{}^{}", self.vars.name(i), k));
            }
        }
        parts.join("*")
    }
}

fn exps_divides(d: &[u32], e: &[u32]) -> bool {
    d.iter().zip(e).all(|(a, b)| a <= b)
}

pub fn pow_rat(base: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    let mut b = base.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc *= b.clone();
        }
        k >>= 1;
        if k > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn arith_and_text() {
        let vs = vars_tau();
        let tau = Poly::var_named(&vs, "tau");
        let p = tau.mul(&tau).sub(&Poly::one(&vs)); // tau^2 - 1
        assert_eq!(p.text(), "-1 + tau^2");
        let q = p.mul(&p);
        assert_eq!(q.text(), "1 - 2*tau^2 + tau^4");
        assert_eq!(q.eval(&[rat_int(2)]), rat_int(9));
    }

    #[test]
    fn exact_division() {
        let vs = vars_qt();
        let q = Poly::var_named(&vs, "q");
        let t = Poly::var_named(&vs, "t");
        let a = q.add(&t);
        let b = q.sub(&t);
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(prod.add(&Poly::one(&vs)).div_exact(&a).is_none());
    }

    #[test]
    fn compose_shift() {
        let vs = vars_qt();
        let uv = Vars::new(&["u", "v"]);
        let q = Poly::var_named(&vs, "q");
        let images = [
            Poly::var_named(&uv, "u").add(&Poly::one(&uv)),
            Poly::var_named(&uv, "v").add(&Poly::one(&uv)),
        ];
        // 1 - q -> -u
        let p = Poly::one(&vs).sub(&q);
        assert_eq!(p.compose(&uv, &images).text(), "-u^1");
    }

    #[test]
    fn content_primitive() {
        let vs = vars_tau();
        let tau = Poly::var_named(&vs, "tau");
        let p = tau.scale(&rat(4, 3)).add(&Poly::constant(&vs, rat(2, 3)));
        let c = p.content();
        assert_eq!(c, rat(2, 3));
        assert_eq!(p.primitive_part().text(), "1 + 2*tau^1");
    }
}
