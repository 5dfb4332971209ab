//! Polynomial GCD over the rationals.
//!
//! Strategy: cheap structural fast paths (constants, monomials, disjoint
//! variable sets), then a modular-evaluation coprimality filter, then exact
//! computation - integer primitive PRS for univariate inputs, monic Euclid
//! over the fraction field of the remaining variables for multivariate ones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Poly;
use crate::rat::Rat;
use crate::ratfunc::RatFunc;

const FILTER_PRIME: u64 = 0xFFFF_FFFF_0000_0001; // 2^64 - 2^32 + 1

/// Primitive gcd with positive graded-lex leading coefficient.
/// gcd(0, 0) = 0.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let g = gcd_inner(a, b);
    normalize(&g)
}

fn normalize(p: &Poly) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    let prim = p.primitive_part();
    if prim.leading_coeff().is_negative() {
        prim.neg()
    } else {
        prim
    }
}

fn occurring_vars(p: &Poly) -> Vec<usize> {
    let n = p.vars().len();
    let mut seen = vec![false; n];
    for (e, _) in p.terms() {
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                seen[i] = true;
            }
        }
    }
    (0..n).filter(|&i| seen[i]).collect()
}

fn gcd_inner(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.vars());
    }
    // Monomial fast path: gcd(x^m, f) = x^min(m, monomial content of f).
    if a.num_terms() == 1 || b.num_terms() == 1 {
        let ca = a.monomial_content();
        let cb = b.monomial_content();
        let exps: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (*x).min(*y)).collect();
        let mut out = Poly::one(a.vars());
        for (i, &k) in exps.iter().enumerate() {
            if k > 0 {
                out = out.mul(&Poly::monomial(a.vars(), i, k, crate::rat::rat_one()));
            }
        }
        return out;
    }

    let occ_a = occurring_vars(a);
    let occ_b = occurring_vars(b);
    if occ_a.iter().all(|v| !occ_b.contains(v)) {
        return Poly::one(a.vars());
    }
    let mut occ = occ_a;
    for v in occ_b {
        if !occ.contains(&v) {
            occ.push(v);
        }
    }
    if occ.len() == 1 {
        return univariate_gcd(a, b, occ[0]);
    }
    let main = *occ.iter().max().unwrap();

    if modular_coprime_in_main(a, b, main) {
        // The primitive-in-main parts are coprime; only content survives.
        let da = to_dense(a, main);
        let db = to_dense(b, main);
        let (ca, _) = split_content(&da);
        let (cb, _) = split_content(&db);
        return gcd_inner(&ca, &cb);
    }

    let da = to_dense(a, main);
    let db = to_dense(b, main);
    let (ca, pa) = split_content(&da);
    let (cb, pb) = split_content(&db);
    let cont_gcd = gcd_inner(&ca, &cb);

    // Monic Euclid in the main variable over the fraction field of the rest.
    let vars = a.vars().clone();
    let to_fracs =
        |v: &[Poly]| -> Vec<RatFunc> { v.iter().map(|p| RatFunc::from_poly(p.clone())).collect() };
    let mut f = to_fracs(&pa);
    let mut g = to_fracs(&pb);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if frac_is_zero(&g) {
            break;
        }
        if g.len() == 1 {
            f = vec![RatFunc::one(&vars)];
            break;
        }
        let r = frac_rem(&f, &g);
        f = g;
        g = r;
    }
    // Clear denominators of f and take the primitive part.
    let mut cleared = Poly::zero(&vars);
    let mut common_den = Poly::one(&vars);
    for c in &f {
        let g = gcd_inner(&common_den, c.denom());
        common_den = common_den.mul(&c.denom().div_exact(&g).expect("gcd divides"));
    }
    for (k, c) in f.iter().enumerate() {
        let scaled = c
            .numer()
            .mul(&common_den.div_exact(c.denom()).expect("denominator divides"));
        cleared = cleared.add(&scaled.mul(&Poly::monomial(
            &vars,
            main,
            k as u32,
            crate::rat::rat_one(),
        )));
    }
    let pp = primitive_in_main(&cleared, main);
    cont_gcd.mul(&pp)
}

// ---------------------------------------------------------------------------
// Modular coprimality filter.

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(mod_pow(a, p - 2, p))
    }
}

fn rat_mod(r: &Rat, p: u64) -> Option<u64> {
    let pn = BigInt::from(p);
    let num = r.numer().mod_floor(&pn).to_u64()?;
    let den = r.denom().mod_floor(&pn).to_u64()?;
    let dinv = mod_inv(den, p)?;
    Some(((num as u128 * dinv as u128) % p as u128) as u64)
}

/// Evaluate all variables except `main` at small points mod p and return the
/// dense univariate image, or None if any coefficient's denominator vanishes.
fn eval_mod(poly: &Poly, main: usize, assign: &[u64], p: u64) -> Option<Vec<u64>> {
    let deg = poly.degree_in(main).unwrap_or(0) as usize;
    let mut out = vec![0u64; deg + 1];
    for (e, c) in poly.terms() {
        let mut v = rat_mod(c, p)?;
        for (i, &k) in e.iter().enumerate() {
            if i != main && k > 0 {
                v = ((v as u128 * mod_pow(assign[i], k as u64, p) as u128) % p as u128) as u64;
            }
        }
        let idx = e[main] as usize;
        out[idx] = ((out[idx] as u128 + v as u128) % p as u128) as u64;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    Some(out)
}

fn mod_gcd_degree(mut f: Vec<u64>, mut g: Vec<u64>, p: u64) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
        if v.len() == 1 && v[0] == 0 {
            v.clear();
        }
    };
    trim(&mut f);
    trim(&mut g);
    while !g.is_empty() {
        let dg = g.len() - 1;
        let linv = mod_inv(g[dg], p).expect("trimmed leading coefficient");
        while !f.is_empty() && f.len() - 1 >= dg {
            let df = f.len() - 1;
            let factor = ((f[df] as u128 * linv as u128) % p as u128) as u64;
            let shift = df - dg;
            for (i, &gc) in g.iter().enumerate() {
                let sub = (factor as u128 * gc as u128) % p as u128;
                let cur = f[i + shift] as u128;
                f[i + shift] = ((cur + p as u128 - sub % p as u128) % p as u128) as u64;
            }
            trim(&mut f);
            if f.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut f, &mut g);
    }
    if f.is_empty() {
        usize::MAX
    } else {
        f.len() - 1
    }
}

/// Sound one-sided test: specializing the non-main variables mod p can only
/// raise the gcd degree in the main variable (when the leading coefficient
/// survives), so a degree-0 modular gcd proves the primitive parts coprime.
fn modular_coprime_in_main(a: &Poly, b: &Poly, main: usize) -> bool {
    let nvars = a.vars().len();
    let da = a.degree_in(main).unwrap_or(0) as usize;
    let db = b.degree_in(main).unwrap_or(0) as usize;
    if da == 0 || db == 0 {
        return false;
    }
    let p = FILTER_PRIME;
    for trial in 0..4u64 {
        let assign: Vec<u64> = (0..nvars)
            .map(|i| 3 + trial * 17 + (i as u64) * 7 + trial * (i as u64))
            .collect();
        let (Some(fa), Some(fb)) = (eval_mod(a, main, &assign, p), eval_mod(b, main, &assign, p))
        else {
            return false;
        };
        // Leading coefficients must survive the specialization.
        if fa.len() - 1 != da || fb.len() - 1 != db {
            continue;
        }
        if mod_gcd_degree(fa, fb, p) == 0 {
            return true;
        }
        return false;
    }
    false
}

// ---------------------------------------------------------------------------
// Univariate gcd: integer primitive PRS.

fn univariate_gcd(a: &Poly, b: &Poly, var: usize) -> Poly {
    let fa = to_int_primitive(&a.to_univar(var).expect("single variable"));
    let fb = to_int_primitive(&b.to_univar(var).expect("single variable"));
    let mut f = fa;
    let mut g = fb;
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        if g.len() == 1 {
            g = vec![BigInt::one()];
            std::mem::swap(&mut f, &mut g);
            break;
        }
        let r = int_pseudo_rem(&f, &g);
        f = g;
        g = int_primitive(&r);
    }
    // Normalize sign and convert back with unit content.
    if let Some(last) = f.last() {
        if last.is_negative() {
            for c in f.iter_mut() {
                *c = -c.clone();
            }
        }
    }
    let coeffs: Vec<Rat> = f.iter().map(|c| Rat::from_integer(c.clone())).collect();
    Poly::from_univar(a.vars(), var, &coeffs)
}

fn to_int_primitive(coeffs: &[Rat]) -> Vec<BigInt> {
    let mut den_lcm = BigInt::one();
    for c in coeffs {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut v: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    while v.len() > 0 && v.last().unwrap().is_zero() {
        v.pop();
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &content;
        }
    }
    v
}

fn int_primitive(v: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = v.to_vec();
    while out.len() > 0 && out.last().unwrap().is_zero() {
        out.pop();
    }
    let mut content = BigInt::zero();
    for c in &out {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in out.iter_mut() {
            *c = &*c / &content;
        }
    }
    out
}

/// Pseudo-remainder over the integers: lc(g)^(deg f - deg g + 1) f mod g.
fn int_pseudo_rem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let dg = g.len() - 1;
    let lg = g[dg].clone();
    let mut r: Vec<BigInt> = f.to_vec();
    loop {
        while r.len() > 0 && r.last().unwrap().is_zero() {
            r.pop();
        }
        if r.is_empty() || r.len() - 1 < dg {
            return r;
        }
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lg;
        }
        let shift = dr - dg;
        for (i, gc) in g.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(&lead * gc);
        }
    }
}

// ---------------------------------------------------------------------------
// Multivariate helpers.

fn frac_is_zero(v: &[RatFunc]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn frac_trim(v: &mut Vec<RatFunc>) {
    while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

/// Remainder of dense main-variable polynomials with field coefficients.
fn frac_rem(a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut r: Vec<RatFunc> = a.to_vec();
    frac_trim(&mut r);
    while r.len() - 1 >= db && !frac_is_zero(&r) {
        let dr = r.len() - 1;
        let factor = r[dr].div(&lead).expect("nonzero leading coefficient");
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            if bc.is_zero() {
                continue;
            }
            r[i + shift] = r[i + shift].sub(&factor.mul(bc));
        }
        r.truncate(dr);
        frac_trim(&mut r);
        if (r.len() == 1 && r[0].is_zero()) || r.len() - 1 < db {
            break;
        }
    }
    r
}

/// Dense coefficient list in `var`: index = exponent, entries are polynomials
/// with zero exponent in `var`. Trailing zero coefficients trimmed.
fn to_dense(p: &Poly, var: usize) -> Vec<Poly> {
    let deg = p.degree_in(var).unwrap_or(0) as usize;
    let mut rows: Vec<Vec<(Vec<u32>, Rat)>> = vec![Vec::new(); deg + 1];
    for (e, c) in p.terms() {
        let k = e[var] as usize;
        let mut exps = e.clone();
        exps[var] = 0;
        rows[k].push((exps, c.clone()));
    }
    let mut out: Vec<Poly> = rows
        .into_iter()
        .map(|row| Poly::from_terms(p.vars(), row))
        .collect();
    while out.len() > 1 && out.last().map(|p| p.is_zero()).unwrap_or(false) {
        out.pop();
    }
    out
}

/// Divide out the content across main-variable coefficients.
fn primitive_in_main(p: &Poly, main: usize) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    let dense = to_dense(p, main);
    let (c, _) = split_content(&dense);
    if c.is_constant() {
        return p.clone();
    }
    p.div_exact(&c).expect("content divides")
}

/// (content, primitive part) of a dense main-variable representation.
fn split_content(coeffs: &[Poly]) -> (Poly, Vec<Poly>) {
    let vars = coeffs[0].vars().clone();
    let mut cont = Poly::zero(&vars);
    for c in coeffs {
        cont = gcd_inner(&cont, c);
        if cont.is_constant() && !cont.is_zero() {
            cont = Poly::one(&vars);
            break;
        }
    }
    if cont.is_zero() {
        return (Poly::one(&vars), coeffs.to_vec());
    }
    let cont = normalize(&cont);
    if cont.is_constant() {
        return (Poly::one(&vars), coeffs.to_vec());
    }
    let prim: Vec<Poly> = coeffs
        .iter()
        .map(|c| c.div_exact(&cont).expect("content must divide"))
        .collect();
    (cont, prim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{vars_qt, vars_tau, vars_tau_r_s, Poly};

    #[test]
    fn univariate_gcd_works() {
        let vs = vars_tau();
        let tau = Poly::var_named(&vs, "tau");
        let one = Poly::one(&vs);
        let a = tau.sub(&one).mul(&tau.add(&one));
        let b = tau.sub(&one).mul(&tau.add(&Poly::int(&vs, 2)));
        assert_eq!(poly_gcd(&a, &b).text(), "-1 + tau^1");
    }

    #[test]
    fn bivariate_gcd() {
        let vs = vars_qt();
        let q = Poly::var_named(&vs, "q");
        let t = Poly::var_named(&vs, "t");
        let g = q.sub(&t);
        let a = g.mul(&q.add(&Poly::one(&vs)));
        let b = g.mul(&t.mul(&t).add(&Poly::one(&vs)));
        let got = poly_gcd(&a, &b);
        assert_eq!(got, normalize(&g));
    }

    #[test]
    fn coprime_gcd_is_one() {
        let vs = vars_qt();
        let q = Poly::var_named(&vs, "q");
        let t = Poly::var_named(&vs, "t");
        let a = q.mul(&q).add(&Poly::one(&vs));
        let b = t.add(&Poly::int(&vs, 3));
        assert_eq!(poly_gcd(&a, &b).text(), "1");
    }

    #[test]
    fn gcd_with_monomial() {
        let vs = vars_tau();
        let tau = Poly::var_named(&vs, "tau");
        let a = tau.pow(3).add(&tau.pow(2));
        let m = tau.pow(5).scale(&crate::rat::rat(3, 2));
        assert_eq!(poly_gcd(&a, &m).text(), "tau^2");
    }

    #[test]
    fn trivariate_pochhammer_products() {
        let vs = vars_tau_r_s();
        let tau = Poly::var_named(&vs, "tau");
        let r = Poly::var_named(&vs, "r");
        let s = Poly::var_named(&vs, "s");
        let f1 = tau.add(&r);
        let f2 = tau.scale(&crate::rat::rat(2, 1)).add(&r).add(&s);
        let f3 = tau.add(&s).add(&Poly::one(&vs));
        let f4 = r.add(&s);
        let a = f1.mul(&f2).mul(&f3);
        let b = f1.mul(&f2).mul(&f4);
        let g = poly_gcd(&a, &b);
        assert_eq!(g, normalize(&f1.mul(&f2)));
    }

    #[test]
    fn content_is_extracted() {
        let vs = crate::poly::Vars::new(&["q", "t", "tau"]);
        let q = Poly::var_named(&vs, "q");
        let t = Poly::var_named(&vs, "t");
        let tau = Poly::var_named(&vs, "tau");
        let a = tau.mul(&q.add(&t));
        let b = tau.pow(2).mul(&q.sub(&t));
        assert_eq!(poly_gcd(&a, &b).text(), "tau^1");
    }

    #[test]
    fn repeated_factor_powers() {
        let vs = vars_tau();
        let tau = Poly::var_named(&vs, "tau");
        let one = Poly::one(&vs);
        let f = tau.add(&one);
        let a = f.pow(4).mul(&tau.sub(&one));
        let b = f.pow(2).mul(&tau.add(&Poly::int(&vs, 5)));
        assert_eq!(poly_gcd(&a, &b), normalize(&f.pow(2)));
    }
}
