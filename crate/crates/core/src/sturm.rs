//! Exact real-root counting for univariate rational polynomials via Sturm
//! sequences.

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::poly::Poly;
use crate::rat::{rat_int, Rat};

/// Interval endpoint for root counting.
#[derive(Debug, Clone, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

fn trim(p: &mut Vec<Rat>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    if p.len() == 1 && p[0].is_zero() {
        p.clear();
    }
}

fn deg(p: &[Rat]) -> usize {
    p.len().saturating_sub(1)
}

fn eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

fn derivative(p: &[Rat]) -> Vec<Rat> {
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(p.len() - 1);
    for (k, c) in p.iter().enumerate().skip(1) {
        out.push(c.clone() * rat_int(k as i64));
    }
    let mut out = out;
    trim(&mut out);
    out
}

/// Remainder of polynomial division.
fn rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert!(!b.is_empty());
    let mut r: Vec<Rat> = a.to_vec();
    trim(&mut r);
    let db = deg(b);
    let lb = b[db].clone();
    while !r.is_empty() && deg(&r) >= db {
        let dr = deg(&r);
        let factor = r[dr].clone() / lb.clone();
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            let idx = i + shift;
            let v = r[idx].clone() - factor.clone() * bc.clone();
            r[idx] = v;
        }
        r[dr] = Rat::zero();
        trim(&mut r);
        if r.len() == 1 && r[0].is_zero() {
            r.clear();
        }
    }
    r
}

fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut f = a.to_vec();
    let mut g = b.to_vec();
    trim(&mut f);
    trim(&mut g);
    while !g.is_empty() {
        let r = rem(&f, &g);
        f = g;
        g = r;
    }
    // Make monic for stability.
    if let Some(lead) = f.last().cloned() {
        for c in f.iter_mut() {
            *c = c.clone() / lead.clone();
        }
    }
    f
}

fn div_exact(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r: Vec<Rat> = a.to_vec();
    trim(&mut r);
    let db = deg(b);
    let lb = b[db].clone();
    let mut q = vec![Rat::zero(); r.len()];
    while !r.is_empty() && deg(&r) >= db {
        let dr = deg(&r);
        let factor = r[dr].clone() / lb.clone();
        let shift = dr - db;
        q[shift] = factor.clone();
        for (i, bc) in b.iter().enumerate() {
            let idx = i + shift;
            let v = r[idx].clone() - factor.clone() * bc.clone();
            r[idx] = v;
        }
        r[dr] = Rat::zero();
        trim(&mut r);
        if r.len() == 1 && r[0].is_zero() {
            r.clear();
        }
    }
    assert!(r.is_empty(), "division was not exact");
    let mut q = q;
    trim(&mut q);
    q
}

fn sturm_chain(p: &[Rat]) -> Vec<Vec<Rat>> {
    let mut chain = vec![p.to_vec()];
    let d = derivative(p);
    if d.is_empty() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.iter().map(|c| -c.clone()).collect());
    }
    chain
}

fn sign_at(p: &[Rat], b: &Bound) -> i32 {
    if p.is_empty() {
        return 0;
    }
    match b {
        Bound::Finite(x) => {
            let v = eval(p, x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        }
        Bound::PosInf => {
            let l = p.last().unwrap();
            if l.is_positive() {
                1
            } else {
                -1
            }
        }
        Bound::NegInf => {
            let l = p.last().unwrap();
            let s = if l.is_positive() { 1 } else { -1 };
            if deg(p) % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }
}

fn variations(chain: &[Vec<Rat>], b: &Bound) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in chain {
        let s = sign_at(p, b);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
/// Endpoint roots are excluded. Errors on the zero polynomial.
pub fn count_roots_dense(p: &[Rat], a: &Bound, b: &Bound) -> Result<usize, Error> {
    let mut p = p.to_vec();
    trim(&mut p);
    if p.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    if deg(&p) == 0 {
        return Ok(0);
    }
    // Squarefree part: distinct roots only.
    let g = gcd(&p, &derivative(&p));
    let mut sf = if deg(&g) > 0 { div_exact(&p, &g) } else { p };
    // Remove endpoint roots so the open interval is counted.
    for bound in [a, b] {
        if let Bound::Finite(x) = bound {
            while !sf.is_empty() && deg(&sf) >= 1 && eval(&sf, x).is_zero() {
                let linear = vec![-x.clone(), Rat::from_integer(1.into())];
                sf = div_exact(&sf, &linear);
            }
        }
    }
    if deg(&sf) == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&sf);
    let va = variations(&chain, a);
    let vb = variations(&chain, b);
    Ok(va.saturating_sub(vb))
}

/// Number of distinct real roots of a univariate `Poly` in `(a, b)`.
pub fn sturm_root_count(p: &Poly, a: &Bound, b: &Bound) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let var = single_var(p)?;
    let dense = p.to_univar(var).expect("checked univariate");
    count_roots_dense(&dense, a, b)
}

/// Index of the unique occurring variable (or 0 for constants); errors when
/// two or more variables occur.
fn single_var(p: &Poly) -> Result<usize, Error> {
    let mut found: Option<usize> = None;
    for (e, _) in p.terms() {
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                match found {
                    None => found = Some(i),
                    Some(j) if j == i => {}
                    Some(_) => {
                        return Err(Error::Precondition(
                            "root counting needs a univariate polynomial".into(),
                        ))
                    }
                }
            }
        }
    }
    Ok(found.unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars_tau;
    use crate::rat::{rat, rat_int};

    fn poly_from(coeffs: &[i64]) -> Poly {
        let vs = vars_tau();
        Poly::from_univar(&vs, 0, &coeffs.iter().map(|&c| rat_int(c)).collect::<Vec<_>>())
    }

    #[test]
    fn spec_examples() {
        // tau^2 - 1 on (0, inf) -> 1
        let p = poly_from(&[-1, 0, 1]);
        assert_eq!(
            sturm_root_count(&p, &Bound::Finite(rat(0, 1)), &Bound::PosInf).unwrap(),
            1
        );
        // tau^2 + 1 on (-inf, inf) -> 0
        let p = poly_from(&[1, 0, 1]);
        assert_eq!(sturm_root_count(&p, &Bound::NegInf, &Bound::PosInf).unwrap(), 0);
        // tau^3 - 2 tau^2 - tau + 2 = (tau-1)(tau+1)(tau-2) on (0, inf) -> 2
        let p = poly_from(&[2, -1, -2, 1]);
        assert_eq!(
            sturm_root_count(&p, &Bound::Finite(rat(0, 1)), &Bound::PosInf).unwrap(),
            2
        );
    }

    #[test]
    fn endpoint_roots_excluded() {
        // tau (tau - 1) on (0, 1): open interval excludes both roots.
        let p = poly_from(&[0, -1, 1]);
        assert_eq!(
            sturm_root_count(&p, &Bound::Finite(rat(0, 1)), &Bound::Finite(rat(1, 1))).unwrap(),
            0
        );
        assert_eq!(
            sturm_root_count(&p, &Bound::Finite(rat(-1, 1)), &Bound::Finite(rat(2, 1))).unwrap(),
            2
        );
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (tau - 1)^2
        let p = poly_from(&[1, -2, 1]);
        assert_eq!(sturm_root_count(&p, &Bound::NegInf, &Bound::PosInf).unwrap(), 1);
    }

    #[test]
    fn zero_polynomial_errors() {
        let vs = vars_tau();
        let z = Poly::zero(&vs);
        assert!(matches!(
            sturm_root_count(&z, &Bound::NegInf, &Bound::PosInf),
            Err(Error::ZeroPolynomial)
        ));
    }
}
