//! Rational functions: reduced fractions of multivariate polynomials.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::gcd::poly_gcd;
use crate::poly::{Poly, Vars};
use crate::rat::{rat_int, Rat};

/// A rational function `num/den` in lowest terms. The denominator is
/// nonzero, has coprime integer coefficients, and its graded-lex leading
/// coefficient is positive.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        assert_eq!(num.vars(), den.vars(), "variable set mismatch");
        if num.is_zero() {
            return RatFunc { num, den: Poly::one(den.vars()) };
        }
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        // Scale so den has coprime integer coefficients and positive lead.
        let mut c = den.content();
        if den.leading_coeff().is_negative() {
            c = -c;
        }
        let inv = c.recip();
        den = den.scale(&inv);
        num = num.scale(&inv);
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        let one = Poly::one(p.vars());
        RatFunc { num: p, den: one }
    }

    pub fn from_rat(vars: &Vars, r: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(vars, r))
    }

    pub fn zero(vars: &Vars) -> Self {
        RatFunc::from_poly(Poly::zero(vars))
    }

    pub fn one(vars: &Vars) -> Self {
        RatFunc::from_poly(Poly::one(vars))
    }

    pub fn int(vars: &Vars, n: i64) -> Self {
        RatFunc::from_poly(Poly::int(vars, n))
    }

    pub fn var(vars: &Vars, name: &str) -> Self {
        RatFunc::from_poly(Poly::var_named(vars, name))
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Some(p) when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.is_constant() && self.den.constant_term().is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_rat(&self) -> Option<Rat> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::reduced(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        RatFunc::reduced(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        // Cross-reduce before multiplying to keep intermediates small.
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFunc::reduced(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, Error> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&RatFunc { num: other.den.clone(), den: other.num.clone() }.canonicalized()))
    }

    fn canonicalized(&self) -> RatFunc {
        RatFunc::reduced(self.num.clone(), self.den.clone())
    }

    pub fn recip(&self) -> Result<RatFunc, Error> {
        RatFunc::one(self.vars()).div(self)
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        RatFunc::reduced(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, k: i64) -> Result<RatFunc, Error> {
        if k < 0 {
            return self.recip()?.pow(-k);
        }
        let mut acc = RatFunc::one(self.vars());
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Evaluate at a rational point; errors at a pole.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat, Error> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::PoleEvaluation);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Substitute rational functions for every variable.
    pub fn substitute_all(&self, target: &Vars, images: &[RatFunc]) -> Result<RatFunc, Error> {
        let n = poly_subst(&self.num, target, images);
        let d = poly_subst(&self.den, target, images);
        if d.is_zero() {
            return Err(Error::PoleEvaluation);
        }
        n.div(&d)
    }

    /// Substitute one variable (by name), keeping the others fixed.
    pub fn substitute(&self, name: &str, image: &RatFunc) -> Result<RatFunc, Error> {
        let vars = self.vars().clone();
        assert_eq!(image.vars(), &vars, "substitute: image must share the variable set");
        let images: Vec<RatFunc> = (0..vars.len())
            .map(|i| {
                if vars.name(i) == name {
                    image.clone()
                } else {
                    RatFunc::var(&vars, vars.name(i))
                }
            })
            .collect();
        self.substitute_all(&vars, &images)
    }

    /// Re-embed into a larger variable set.
    pub fn embed(&self, target: &Vars) -> RatFunc {
        RatFunc { num: self.num.embed(target), den: self.den.embed(target) }
    }

    /// Project onto a smaller variable set; every occurring variable must
    /// appear in `target`.
    pub fn restrict(&self, target: &Vars) -> RatFunc {
        RatFunc { num: self.num.restrict(target), den: self.den.restrict(target) }
    }

    /// Rising factorial: self (self+1) ... (self+k-1); empty product is 1.
    pub fn pochhammer(&self, k: u32) -> RatFunc {
        let mut acc = RatFunc::one(self.vars());
        for i in 0..k {
            acc = acc.mul(&self.add(&RatFunc::int(self.vars(), i as i64)));
        }
        acc
    }

    /// Limit as the single variable of a univariate function goes to +infinity,
    /// when finite: 0 if deg num < deg den, ratio of leading coefficients if
    /// equal, None if the limit is infinite.
    pub fn limit_at_infinity(&self) -> Option<Rat> {
        assert_eq!(self.vars().len(), 1, "limit_at_infinity needs a univariate function");
        if self.num.is_zero() {
            return Some(Rat::zero());
        }
        let dn = self.num.degree_in(0).unwrap_or(0);
        let dd = self.den.degree_in(0).unwrap_or(0);
        match dn.cmp(&dd) {
            std::cmp::Ordering::Less => Some(Rat::zero()),
            std::cmp::Ordering::Equal => {
                let cn = self.num.to_univar(0).unwrap()[dn as usize].clone();
                let cd = self.den.to_univar(0).unwrap()[dd as usize].clone();
                Some(cn / cd)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Canonical text: `num` when the denominator is 1, else `(num)/(den)`.
    pub fn text(&self) -> String {
        if self.as_poly().is_some() {
            self.num.text()
        } else {
            format!("({})/({})", self.num.text(), self.den.text())
        }
    }
}

fn poly_subst(p: &Poly, target: &Vars, images: &[RatFunc]) -> RatFunc {
    let mut acc = RatFunc::zero(target);
    for (e, c) in p.terms() {
        let mut term = RatFunc::from_rat(target, c.clone());
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                term = term.mul(&images[i].pow(k as i64).expect("nonnegative power"));
            }
        }
        acc = acc.add(&term);
    }
    acc
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

/// q-Pochhammer (a; q)_k = prod_{i=0}^{k-1} (1 - a q^i).
pub fn q_pochhammer(a: &RatFunc, qname: &str, k: u32) -> RatFunc {
    let vars = a.vars().clone();
    let q = RatFunc::var(&vars, qname);
    let one = RatFunc::one(&vars);
    let mut acc = one.clone();
    let mut qi = one.clone();
    for _ in 0..k {
        acc = acc.mul(&one.sub(&a.mul(&qi)));
        qi = qi.mul(&q);
    }
    acc
}

/// q-integer [k] = 1 + q + ... + q^{k-1}.
pub fn q_integer(vars: &Vars, qname: &str, k: u32) -> RatFunc {
    let q = RatFunc::var(vars, qname);
    let mut acc = RatFunc::zero(vars);
    let mut qi = RatFunc::one(vars);
    for _ in 0..k {
        acc = acc.add(&qi);
        qi = qi.mul(&q);
    }
    acc
}

/// q-factorial [k]! = [1][2]...[k].
pub fn q_factorial(vars: &Vars, qname: &str, k: u32) -> RatFunc {
    let mut acc = RatFunc::one(vars);
    for i in 1..=k {
        acc = acc.mul(&q_integer(vars, qname, i));
    }
    acc
}

/// Gaussian binomial [m choose n]_q = [m]! / ([n]! [m-n]!); requires m >= n.
pub fn q_binomial(vars: &Vars, qname: &str, m: u32, n: u32) -> Result<RatFunc, Error> {
    if n > m {
        return Err(Error::Precondition("q_binomial requires m >= n".into()));
    }
    let num = q_factorial(vars, qname, m);
    let den = q_factorial(vars, qname, n).mul(&q_factorial(vars, qname, m - n));
    num.div(&den)
}

/// Rising factorial of a rational scalar.
pub fn pochhammer_rat(base: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= base.clone() + rat_int(i as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{vars_qt, vars_tau};
    use crate::rat::rat;

    fn tau_rf() -> RatFunc {
        RatFunc::var(&vars_tau(), "tau")
    }

    #[test]
    fn add_cancels() {
        let vs = vars_tau();
        let tau = tau_rf();
        let one = RatFunc::one(&vs);
        let den = tau.add(&one);
        let a = tau.div(&den).unwrap();
        let b = one.div(&den).unwrap();
        assert!(a.add(&b).is_one());
    }

    #[test]
    fn eval_and_pole() {
        let vs = vars_tau();
        let tau = tau_rf();
        // 2(2 tau + 1)/(tau + 1) at tau=1 -> 3
        let f = tau
            .scale(&rat(2, 1))
            .add(&RatFunc::one(&vs))
            .scale(&rat(2, 1))
            .div(&tau.add(&RatFunc::one(&vs)))
            .unwrap();
        assert_eq!(f.eval(&[rat(1, 1)]).unwrap(), rat(3, 1));
        assert!(f.eval(&[rat(-1, 1)]).is_err());
    }

    #[test]
    fn substitute_reciprocal() {
        // tau -> 1/tau in (1-tau)/(1+tau) gives (tau-1)/(tau+1)
        let vs = vars_tau();
        let tau = tau_rf();
        let one = RatFunc::one(&vs);
        let f = one.sub(&tau).div(&one.add(&tau)).unwrap();
        let g = f.substitute("tau", &tau.recip().unwrap()).unwrap();
        let expect = tau.sub(&one).div(&tau.add(&one)).unwrap();
        assert_eq!(g, expect);
        assert_eq!(g.text(), "(-1 + tau^1)/(1 + tau^1)");
    }

    #[test]
    fn pochhammer_basics() {
        let tau = tau_rf();
        let p = tau.pochhammer(3);
        // tau(tau+1)(tau+2) = 2 tau + 3 tau^2 + tau^3
        assert_eq!(p.text(), "2*tau^1 + 3*tau^2 + tau^3");
        assert_eq!(tau.pochhammer(0).text(), "1");
        assert_eq!(pochhammer_rat(&rat(2, 1), 4), rat(120, 1));
    }

    #[test]
    fn q_series_basics() {
        let vs = vars_qt();
        let t = RatFunc::var(&vs, "t");
        let p = q_pochhammer(&t, "q", 2);
        // (1-t)(1-tq)
        let one = RatFunc::one(&vs);
        let q = RatFunc::var(&vs, "q");
        assert_eq!(p, one.sub(&t).mul(&one.sub(&t.mul(&q))));
        assert_eq!(q_pochhammer(&t, "q", 0).text(), "1");
        let qb = q_binomial(&vs, "q", 2, 1).unwrap();
        assert_eq!(qb.text(), "1 + q^1");
    }
}
