//! Jack polynomials over a rational-function field and the computations the
//! library builds on them: principal specializations, normalized differences,
//! generalized binomial coefficients, parameter-transition matrices, the
//! normalized Kadell integral, and integral-Jack Schur coefficients.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::field::{Field, FracField, QQ};
use crate::fp::{fp_membership_tau, FpOptions, PositivityVerdict};
use crate::partitions::{enumerate, find_raising_indices, Partition};
use crate::poly::{Poly, Vars};
use crate::rat::{binomial, factorial, rat_int, Rat};
use crate::ratfunc::RatFunc;
use crate::orth::{expand_in_triangular_basis, hall_inner, orthogonal_basis};
use crate::symfunc::{monomial, normalized_monomial, to_basis, Basis, SymPoly};

/// A Jack polynomial: monic dominance-triangular, orthogonal under the
/// one-parameter Hall inner product.
#[derive(Clone, Debug)]
pub struct JackP {
    pub lam: Partition,
    pub n: usize,
    pub expansion: SymPoly<FracField>,
}

/// The inner-product weight tau^(-length).
fn jack_weight(field: &FracField) -> impl Fn(&Partition) -> RatFunc + '_ {
    move |nu: &Partition| {
        let tau_pow = Poly::monomial(field.vars(), 0, nu.length() as u32, crate::rat::rat_one());
        RatFunc::new(Poly::one(field.vars()), tau_pow).expect("tau^l nonzero")
    }
}

type JackBasisMap = BTreeMap<Partition, SymPoly<FracField>>;

fn jack_cache() -> &'static Mutex<HashMap<(u32, usize, String), Arc<JackBasisMap>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize, String), Arc<JackBasisMap>>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All Jack polynomials of degree d in n variables over Q(param), memoized.
///
/// The monomial coefficients do not depend on the variable count, so the
/// Gram-Schmidt runs with ambient max(n, d) variables (where every power sum
/// of degree d is an independent basis element) and the result is restricted
/// to n variables by dropping long monomials.
pub fn jack_basis(d: u32, n: usize, param: &str) -> Arc<JackBasisMap> {
    let key = (d, n, param.to_string());
    if let Some(hit) = jack_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let work = (d as usize).max(1);
    let arc = if n >= work {
        let field = FracField::new(Vars::new(&[param]));
        let w = jack_weight(&field);
        Arc::new(orthogonal_basis(d, n, &field, &w))
    } else {
        let full = jack_basis(d, work, param);
        let restricted: JackBasisMap = full
            .iter()
            .filter(|(lam, _)| lam.length() <= n)
            .map(|(lam, p)| (lam.clone(), p.restrict_nvars(n)))
            .collect();
        Arc::new(restricted)
    };
    jack_cache().lock().unwrap().insert(key, arc.clone());
    arc
}

/// P_lambda(x; tau) in n variables over Q(tau).
pub fn jack_p(lam: &Partition, n: usize) -> Result<JackP, Error> {
    jack_p_param(lam, n, "tau")
}

pub fn jack_p_param(lam: &Partition, n: usize, param: &str) -> Result<JackP, Error> {
    if lam.length() > n {
        return Err(Error::Precondition(format!(
            "partition {} has more than {} parts",
            lam.text(),
            n
        )));
    }
    let basis = jack_basis(lam.size(), n, param);
    Ok(JackP {
        lam: lam.clone(),
        n,
        expansion: basis[lam].clone(),
    })
}

/// Principal specialization by the arm/leg product formula:
/// P_lambda(1^n) = prod over cells (coarm + (n - coleg) tau) / (arm + (leg+1) tau).
pub fn principal_specialization(lam: &Partition, n: usize) -> Result<RatFunc, Error> {
    principal_specialization_param(lam, n, "tau")
}

pub fn principal_specialization_param(
    lam: &Partition,
    n: usize,
    param: &str,
) -> Result<RatFunc, Error> {
    if lam.length() > n {
        return Err(Error::Precondition(format!(
            "partition {} has more than {} parts",
            lam.text(),
            n
        )));
    }
    let vars = Vars::new(&[param]);
    let tau = Poly::var(&vars, 0);
    let mut num = Poly::one(&vars);
    let mut den = Poly::one(&vars);
    for cell in lam.cells() {
        let a = lam.arm(cell)? as i64;
        let l = lam.leg(cell)? as i64;
        let ap = lam.coarm(cell)? as i64;
        let lp = lam.coleg(cell)? as i64;
        num = num.mul(&tau.scale(&rat_int(n as i64 - lp)).add(&Poly::int(&vars, ap)));
        den = den.mul(&tau.scale(&rat_int(l + 1)).add(&Poly::int(&vars, a)));
    }
    RatFunc::new(num, den)
}

/// P_lambda / P_lambda(1^n), exact.
pub fn normalized_jack(lam: &Partition, n: usize, param: &str) -> Result<SymPoly<FracField>, Error> {
    let p = jack_p_param(lam, n, param)?;
    let ones = p.expansion.eval_ones();
    Ok(p.expansion.scale(&ones.recip().expect("nonzero specialization")))
}

/// Normalized Jack difference, optionally with the all-ones argument shift.
pub fn normalized_diff(
    lam: &Partition,
    mu: &Partition,
    n: usize,
    shifted: bool,
) -> Result<SymPoly<FracField>, Error> {
    normalized_diff_param(lam, mu, n, shifted, "tau")
}

pub fn normalized_diff_param(
    lam: &Partition,
    mu: &Partition,
    n: usize,
    shifted: bool,
    param: &str,
) -> Result<SymPoly<FracField>, Error> {
    let a = normalized_jack(lam, n, param)?;
    let b = normalized_jack(mu, n, param)?;
    let diff = a.sub(&b);
    Ok(if shifted { diff.shift_ones() } else { diff })
}

/// Generalized binomial coefficients: the expansion of the shifted normalized
/// Jack polynomial in the normalized Jack basis, one coefficient per nu
/// contained in lambda. Memoized per (lambda, n).
pub fn binomial_table(lam: &Partition, n: usize) -> Result<Arc<BTreeMap<Partition, RatFunc>>, Error> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), Arc<BTreeMap<Partition, RatFunc>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (lam.clone(), n);
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let shifted = normalized_jack(lam, n, "tau")?.shift_ones();
    let mut out = BTreeMap::new();
    for (d, comp) in shifted.homogeneous_components() {
        let basis = jack_basis(d, n, "tau");
        let coeffs = expand_in_triangular_basis(&comp, &basis);
        for (nu, c) in coeffs {
            // Convert from the monic basis to the normalized basis.
            let ones = principal_specialization(&nu, n)?;
            out.insert(nu, c.mul(&ones));
        }
    }
    let arc = Arc::new(out);
    cache.lock().unwrap().insert(key, arc.clone());
    Ok(arc)
}

/// binom(lambda, nu): coefficient of the normalized Jack P_nu in the shifted
/// normalized P_lambda. Errors when nu is not contained in lambda.
pub fn generalized_binomial(lam: &Partition, nu: &Partition, n: usize) -> Result<RatFunc, Error> {
    if !lam.contains(nu, n.max(lam.length()).max(nu.length())) {
        return Err(Error::Precondition(format!(
            "{} does not contain {}",
            lam.text(),
            nu.text()
        )));
    }
    let table = binomial_table(lam, n)?;
    let field = FracField::new(Vars::new(&["tau"]));
    Ok(table.get(nu).cloned().unwrap_or_else(|| field.zero()))
}

/// Expansion coefficients of the shifted normalized difference for a
/// containment pair, each with its cone verdict.
pub fn containment_positivity(
    lam: &Partition,
    mu: &Partition,
    n: usize,
    opts: &FpOptions,
) -> Result<Vec<(Partition, RatFunc, PositivityVerdict)>, Error> {
    if !lam.contains(mu, n) {
        return Err(Error::Precondition(format!(
            "{} does not contain {}",
            lam.text(),
            mu.text()
        )));
    }
    let ta = binomial_table(lam, n)?;
    let tb = binomial_table(mu, n)?;
    let field = FracField::new(Vars::new(&["tau"]));
    let mut nus: Vec<Partition> = ta.keys().cloned().collect();
    for nu in tb.keys() {
        if !nus.contains(nu) {
            nus.push(nu.clone());
        }
    }
    nus.sort();
    let mut out = Vec::new();
    for nu in nus {
        let a = ta.get(&nu).cloned().unwrap_or_else(|| field.zero());
        let b = tb.get(&nu).cloned().unwrap_or_else(|| field.zero());
        let c = a.sub(&b);
        let verdict = fp_membership_tau(&c, opts);
        out.push((nu, c, verdict));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Two-variable transition matrices between Jack parameters.

fn rf(vars: &Vars, p: Poly) -> RatFunc {
    RatFunc::from_poly(p)
        .embed(vars)
}

/// Transition matrix M_d(P(theta), m) for n = 2: row i, column j over
/// 0..=floor(d/2), entry C(d-2i, j-i) <theta>_{j-i} <theta>_{d-j-i} / <theta>_{d-2i}.
pub fn transition_forward(d: u32, vars: &Vars, theta: &str) -> Vec<Vec<RatFunc>> {
    let m = (d / 2) as usize;
    let th = RatFunc::var(vars, theta);
    let mut out = vec![vec![RatFunc::zero(vars); m + 1]; m + 1];
    for i in 0..=m {
        for j in i..=m {
            let ji = (j - i) as u32;
            let num = th
                .pochhammer(ji)
                .mul(&th.pochhammer(d - (j + i) as u32))
                .scale(&binomial(d - 2 * i as u32, ji));
            let den = th.pochhammer(d - 2 * i as u32);
            out[i][j] = num.div(&den).expect("nonzero pochhammer");
        }
    }
    out
}

/// The explicit inverse of the forward matrix, as displayed:
/// entry (i,j) = (-1)^(j-i) C(d-i-j, j-i) * (d-2i)/(d-i-j)
///             * <theta+i-j+1>_{d-i-j} <theta+d-i-j+1>_{j-i} / <theta+1>_{d-2i},
/// with the middle factor read as 1 when i = j = d/2.
pub fn transition_inverse_explicit(d: u32, vars: &Vars, theta: &str) -> Vec<Vec<RatFunc>> {
    let m = (d / 2) as usize;
    let th = RatFunc::var(vars, theta);
    let one = RatFunc::one(vars);
    let mut out = vec![vec![RatFunc::zero(vars); m + 1]; m + 1];
    for i in 0..=m {
        for j in i..=m {
            let ji = (j - i) as u32;
            let dij = d as i64 - i as i64 - j as i64;
            let sign = if ji % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            let mid = if dij == 0 {
                Rat::from_integer(1.into())
            } else {
                Rat::new((d as i64 - 2 * i as i64).into(), dij.into())
            };
            let base1 = th.add(&one.scale(&rat_int(i as i64 - j as i64 + 1)));
            let base2 = th.add(&one.scale(&rat_int(dij + 1)));
            let num = base1
                .pochhammer(dij as u32)
                .mul(&base2.pochhammer(ji))
                .scale(&(binomial(dij as u32, ji) * mid * sign));
            let den = th.add(&one).pochhammer(d - 2 * i as u32);
            out[i][j] = num.div(&den).expect("nonzero pochhammer");
        }
    }
    out
}

/// Closed form for M_d(P(tau), P(sigma)):
/// entry (i,j) = (d-2i)!/((d-2j)!(j-i)!) * <tau-sigma>_{j-i}
///             / (<tau+d-i-j>_{j-i} <sigma+d-2j+1>_{j-i}).
pub fn transition_closed(d: u32, vars: &Vars, tau: &str, sigma: &str) -> Vec<Vec<RatFunc>> {
    let m = (d / 2) as usize;
    let t = RatFunc::var(vars, tau);
    let s = RatFunc::var(vars, sigma);
    let one = RatFunc::one(vars);
    let mut out = vec![vec![RatFunc::zero(vars); m + 1]; m + 1];
    for i in 0..=m {
        for j in i..=m {
            let ji = (j - i) as u32;
            let fac = factorial(d - 2 * i as u32)
                / (factorial(d - 2 * j as u32) * factorial(ji));
            let num = t.sub(&s).pochhammer(ji).scale(&fac);
            let den = t
                .add(&one.scale(&rat_int(d as i64 - i as i64 - j as i64)))
                .pochhammer(ji)
                .mul(
                    &s.add(&one.scale(&rat_int(d as i64 - 2 * j as i64 + 1)))
                        .pochhammer(ji),
                );
            out[i][j] = num.div(&den).expect("nonzero pochhammer");
        }
    }
    out
}

/// Fully normalized transition matrix between normalized Jack families:
/// row factor <tau>_{d-2i}/<2tau>_{d-2i}, column factor <2sigma>_{d-2j}/<sigma>_{d-2j}
/// around the closed form.
pub fn transition_normalized_closed(d: u32, vars: &Vars, tau: &str, sigma: &str) -> Vec<Vec<RatFunc>> {
    let m = (d / 2) as usize;
    let t = RatFunc::var(vars, tau);
    let s = RatFunc::var(vars, sigma);
    let closed = transition_closed(d, vars, tau, sigma);
    let mut out = closed;
    for i in 0..=m {
        let row = t
            .pochhammer(d - 2 * i as u32)
            .div(&t.scale(&rat_int(2)).pochhammer(d - 2 * i as u32))
            .expect("nonzero");
        for (j, entry) in out[i].iter_mut().enumerate() {
            if j < i {
                continue;
            }
            let col = s
                .scale(&rat_int(2))
                .pochhammer(d - 2 * j as u32)
                .div(&s.pochhammer(d - 2 * j as u32))
                .expect("nonzero");
            *entry = entry.mul(&row).mul(&col);
        }
    }
    out
}

pub fn mat_mul(a: &[Vec<RatFunc>], b: &[Vec<RatFunc>], vars: &Vars) -> Vec<Vec<RatFunc>> {
    let n = a.len();
    let mut out = vec![vec![RatFunc::zero(vars); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = RatFunc::zero(vars);
            for (k, ab) in a[i].iter().enumerate() {
                if !ab.is_zero() && !b[k][j].is_zero() {
                    acc = acc.add(&ab.mul(&b[k][j]));
                }
            }
            out[i][j] = acc;
        }
    }
    out
}

/// The sign-analysis quadratic from the two-parameter example:
/// a_j = 2(2 tau - 1) j^2 - 2 (2 tau - 1)(d + sigma) j + d(d-1)(tau - sigma - 1).
pub fn transition_sign_quadratic(d: u32, vars: &Vars, tau: &str, sigma: &str, j: u32) -> RatFunc {
    let t = RatFunc::var(vars, tau);
    let s = RatFunc::var(vars, sigma);
    let one = RatFunc::one(vars);
    let two_t_minus_1 = t.scale(&rat_int(2)).sub(&one);
    let jj = rat_int(j as i64);
    let term1 = two_t_minus_1.scale(&(jj.clone() * jj.clone() * rat_int(2)));
    let term2 = two_t_minus_1
        .mul(&s.add(&one.scale(&rat_int(d as i64))))
        .scale(&(jj * rat_int(2)));
    let term3 = t
        .sub(&s)
        .sub(&one)
        .scale(&rat_int((d as i64) * (d as i64 - 1)));
    term1.sub(&term2).add(&term3)
}

// ---------------------------------------------------------------------------
// Toy example: lambda = (d, 0), mu = (d-1, 1), n = 2.

/// Coefficients f_i of s^i in the normalized Jack difference at x = (1, s),
/// and the bridge sequence g_i with f_i = g_{i-2} - 2 g_{i-1} + g_i.
pub struct ToyExample {
    pub d: u32,
    pub f: Vec<RatFunc>,
    pub g: Vec<RatFunc>,
}

pub fn toy_example(d: u32) -> Result<ToyExample, Error> {
    if d < 2 {
        return Err(Error::Precondition("toy example needs d >= 2".into()));
    }
    let vars = Vars::new(&["tau"]);
    let tau = RatFunc::var(&vars, "tau");
    let poch2d = tau.scale(&rat_int(2)).pochhammer(d);
    let poch2d2 = tau.scale(&rat_int(2)).pochhammer(d - 2);
    let mut f = Vec::new();
    for i in 0..=d {
        let lead = tau
            .pochhammer(i)
            .mul(&tau.pochhammer(d - i))
            .scale(&binomial(d, i))
            .div(&poch2d)?;
        let trail = if i >= 1 && d - i >= 1 {
            tau.pochhammer(i - 1)
                .mul(&tau.pochhammer(d - i - 1))
                .scale(&binomial(d - 2, i - 1))
                .div(&poch2d2)?
        } else {
            RatFunc::zero(&vars)
        };
        f.push(lead.sub(&trail));
    }
    let factor = tau
        .add(&RatFunc::int(&vars, d as i64 - 1))
        .div(&tau)?;
    let mut g = Vec::new();
    for i in 0..=(d - 2) {
        let v = tau
            .pochhammer(i + 1)
            .mul(&tau.pochhammer(d - i - 1))
            .scale(&binomial(d - 2, i))
            .mul(&factor)
            .div(&poch2d)?;
        g.push(v);
    }
    Ok(ToyExample { d, f, g })
}

impl ToyExample {
    fn g_at(&self, i: i64) -> RatFunc {
        if i < 0 || i as usize >= self.g.len() {
            RatFunc::zero(self.f[0].vars())
        } else {
            self.g[i as usize].clone()
        }
    }

    /// f_i = g_{i-2} - 2 g_{i-1} + g_i for all i.
    pub fn second_difference_identity(&self) -> bool {
        for (i, fi) in self.f.iter().enumerate() {
            let i = i as i64;
            let rhs = self
                .g_at(i - 2)
                .sub(&self.g_at(i - 1).scale(&rat_int(2)))
                .add(&self.g_at(i));
            if *fi != rhs {
                return false;
            }
        }
        true
    }

    /// sum_{j > i} (j - i - 1) f_j = g_i for 0 <= i <= d-2.
    pub fn telescoped_identity(&self) -> bool {
        let vars = self.f[0].vars().clone();
        for i in 0..=(self.d as i64 - 2) {
            let mut acc = RatFunc::zero(&vars);
            for j in (i + 1)..=(self.d as i64) {
                let w = rat_int(j - i - 1);
                acc = acc.add(&self.f[j as usize].scale(&w));
            }
            if acc != self.g_at(i) {
                return false;
            }
        }
        true
    }

    /// f(s) = (s-1)^2 g(s) as an identity over Q(tau)[s].
    pub fn square_factor_identity(&self) -> bool {
        let vars2 = Vars::new(&["tau", "s"]);
        let s = RatFunc::var(&vars2, "s");
        let one = RatFunc::one(&vars2);
        let mut fs = RatFunc::zero(&vars2);
        for (i, fi) in self.f.iter().enumerate() {
            let si = s.pow(i as i64).expect("positive power");
            fs = fs.add(&fi.embed(&vars2).mul(&si));
        }
        let mut gs = RatFunc::zero(&vars2);
        for (i, gi) in self.g.iter().enumerate() {
            let si = s.pow(i as i64).expect("positive power");
            gs = gs.add(&gi.embed(&vars2).mul(&si));
        }
        let sq = s.sub(&one).pow(2).expect("square");
        fs == gs.mul(&sq)
    }
}

/// Partial sums of the two-variable telescoping: for lambda = (d,0) vs
/// mu = (d-1,1), sum_{j<=i} a_j with a_j = 2 f_j (and the middle term
/// unhalved), against the closed form
/// 2 C(d-1,i) (d-1-2i)/(d-1) <tau>_i <tau>_{d-i-1} / <2tau>_d (tau+d-1).
pub struct TelescopedSums {
    pub d: u32,
    pub a: Vec<RatFunc>,
    pub partial_sums: Vec<RatFunc>,
}

pub fn telescoped_sums(d: u32) -> Result<TelescopedSums, Error> {
    let toy = toy_example(d)?;
    let half = d / 2;
    let mut a = Vec::new();
    for i in 0..=half {
        let ai = if d % 2 == 0 && i == half {
            toy.f[i as usize].clone()
        } else {
            toy.f[i as usize].scale(&rat_int(2))
        };
        a.push(ai);
    }
    let vars = toy.f[0].vars().clone();
    let mut sums = Vec::new();
    let mut acc = RatFunc::zero(&vars);
    for ai in &a {
        acc = acc.add(ai);
        sums.push(acc.clone());
    }
    Ok(TelescopedSums { d, a, partial_sums: sums })
}

/// The closed form the partial sums must match for i <= floor(d/2) - 1.
pub fn telescoped_closed_form(d: u32, i: u32) -> RatFunc {
    let vars = Vars::new(&["tau"]);
    let tau = RatFunc::var(&vars, "tau");
    let c = binomial(d - 1, i)
        * Rat::new((d as i64 - 1 - 2 * i as i64).into(), (d as i64 - 1).into())
        * rat_int(2);
    tau.pochhammer(i)
        .mul(&tau.pochhammer(d - i - 1))
        .mul(&tau.add(&RatFunc::int(&vars, d as i64 - 1)))
        .scale(&c)
        .div(&tau.scale(&rat_int(2)).pochhammer(d))
        .expect("nonzero")
}

// ---------------------------------------------------------------------------
// Kadell's normalized integral.

#[derive(Clone, Debug)]
pub struct KadellValue {
    pub lam: Partition,
    pub n: usize,
    /// Rational function in (tau, r, s).
    pub value: RatFunc,
}

/// Normalized Kadell integral:
/// prod_{i=1..n} <(n-i) tau + r>_{lambda_i} / <(2n-i-1) tau + r + s>_{lambda_i}.
pub fn kadell_normalized(lam: &Partition, n: usize) -> Result<KadellValue, Error> {
    if lam.length() > n {
        return Err(Error::Precondition(format!(
            "partition {} has more than {} parts",
            lam.text(),
            n
        )));
    }
    let vars = crate::poly::vars_tau_r_s();
    let tau = RatFunc::var(&vars, "tau");
    let r = RatFunc::var(&vars, "r");
    let s = RatFunc::var(&vars, "s");
    let mut acc = RatFunc::one(&vars);
    for i in 1..=n {
        let li = lam.part(i - 1);
        if li == 0 {
            continue;
        }
        let num = tau.scale(&rat_int((n - i) as i64)).add(&r).pochhammer(li);
        let den = tau
            .scale(&rat_int((2 * n - i - 1) as i64))
            .add(&r)
            .add(&s)
            .pochhammer(li);
        acc = acc.mul(&num.div(&den)?);
    }
    Ok(KadellValue { lam: lam.clone(), n, value: acc })
}

/// The displayed closed form for the adjacent ratio minus one, for
/// lambda = R_ij(mu):
/// ((j-i) tau + lambda_i - lambda_j - 1)((n-1) tau + s)
/// / (((n-j) tau + lambda_j + r)((2n-i-1) tau + lambda_i + r + s - 1)).
pub fn kadell_adjacent_ratio(lam: &Partition, mu: &Partition, n: usize) -> Result<RatFunc, Error> {
    let (i, j) = find_raising_indices(lam, mu, n).ok_or_else(|| {
        Error::Precondition(format!(
            "{} is not a raising of {}",
            lam.text(),
            mu.text()
        ))
    })?;
    let vars = crate::poly::vars_tau_r_s();
    let tau = RatFunc::var(&vars, "tau");
    let r = RatFunc::var(&vars, "r");
    let s = RatFunc::var(&vars, "s");
    let li = lam.part(i - 1) as i64;
    let lj = lam.part(j - 1) as i64;
    let num = tau
        .scale(&rat_int((j - i) as i64))
        .add(&RatFunc::int(&vars, li - lj - 1))
        .mul(&tau.scale(&rat_int(n as i64 - 1)).add(&s));
    let den = tau
        .scale(&rat_int(n as i64 - j as i64))
        .add(&RatFunc::int(&vars, lj))
        .add(&r)
        .mul(
            &tau.scale(&rat_int(2 * n as i64 - i as i64 - 1))
                .add(&RatFunc::int(&vars, li - 1))
                .add(&r)
                .add(&s),
        );
    num.div(&den)
}

/// Check the ratio identity symbolically in (tau, r, s).
pub fn kadell_ratio_identity_holds(lam: &Partition, mu: &Partition, n: usize) -> Result<bool, Error> {
    let a = kadell_normalized(lam, n)?;
    let b = kadell_normalized(mu, n)?;
    let lhs = a.value.div(&b.value)?.sub(&RatFunc::one(a.value.vars()));
    let rhs = kadell_adjacent_ratio(lam, mu, n)?;
    Ok(lhs == rhs)
}

/// The difference of normalized Kadell integrals at fixed rational r, s,
/// as a univariate function of tau.
pub fn kadell_difference_at(
    lam: &Partition,
    mu: &Partition,
    n: usize,
    r0: &Rat,
    s0: &Rat,
) -> Result<RatFunc, Error> {
    let a = kadell_normalized(lam, n)?;
    let b = kadell_normalized(mu, n)?;
    let diff = a.value.sub(&b.value);
    let vars = diff.vars().clone();
    let images = vec![
        RatFunc::var(&vars, "tau"),
        RatFunc::from_rat(&vars, r0.clone()),
        RatFunc::from_rat(&vars, s0.clone()),
    ];
    let fixed = diff.substitute_all(&vars, &images)?;
    Ok(fixed.restrict(&crate::poly::vars_tau()))
}

// ---------------------------------------------------------------------------
// Integral Jack polynomials and their Schur coefficients.

/// c_lambda(tau) = prod over cells (arm + tau (leg + 1)).
pub fn hook_c(lam: &Partition, vars: &Vars, param: &str) -> Poly {
    let tau = Poly::var_named(vars, param);
    let mut acc = Poly::one(vars);
    for cell in lam.cells() {
        let a = lam.arm(cell).expect("cell in diagram") as i64;
        let l = lam.leg(cell).expect("cell in diagram") as i64;
        acc = acc.mul(&tau.scale(&rat_int(l + 1)).add(&Poly::int(vars, a)));
    }
    acc
}

/// J_lambda = c_lambda(tau) P_lambda.
pub fn integral_jack(lam: &Partition, n: usize) -> Result<SymPoly<FracField>, Error> {
    let p = jack_p(lam, n)?;
    let c = hook_c(lam, &crate::poly::vars_tau(), "tau");
    Ok(p.expansion.scale(&RatFunc::from_poly(c)))
}

/// AHW expansion data for one (lambda, mu) pair of equal size d:
/// v = <J_lambda, s_mu> as a polynomial in tau, with the two binomial-basis
/// coefficient lists.
#[derive(Clone, Debug)]
pub struct AhwData {
    pub lam: Partition,
    pub mu: Partition,
    pub v: Poly,
    /// a_k for k = 0..d-1 in v = sum a_k C(tau+k, d).
    pub a: Vec<Rat>,
    /// b_j for j = 0..d-1 in v = sum_{k=1..d} b_{d-k} tau(tau-1)...(tau-k+1).
    pub b: Vec<Rat>,
}

pub fn ahw_coeffs(lam: &Partition, mu: &Partition) -> Result<AhwData, Error> {
    let d = lam.size();
    if d != mu.size() {
        return Err(Error::Precondition("partitions must have equal size".into()));
    }
    if d == 0 {
        return Err(Error::Precondition("need a positive size".into()));
    }
    let n = d as usize;
    let j = integral_jack(lam, n)?;
    let sexp = to_basis(&j, &Basis::S)?;
    let field = j.field().clone();
    let v = sexp.terms.get(mu).cloned().unwrap_or_else(|| field.zero());
    let vpoly = v
        .as_poly()
        .cloned()
        .ok_or_else(|| Error::Precondition("Schur coefficient is not polynomial".into()))?;
    let vars = vpoly.vars().clone();
    let vdense = dense_coeffs(&vpoly, (d + 1) as usize);

    // a-basis: C(tau+k, d) = <tau+k-d+1>_d / d!
    let tau = RatFunc::var(&vars, "tau");
    let dfact = factorial(d).recip();
    let mut acols = Vec::new();
    for k in 0..d {
        let base = tau.add(&RatFunc::int(&vars, k as i64 - d as i64 + 1));
        let p = base.pochhammer(d).scale(&dfact);
        acols.push(dense_coeffs(p.as_poly().unwrap(), (d + 1) as usize));
    }
    let a = solve_dense(&acols, &vdense)?;

    // b-basis: column k (1-based) is tau (tau-1) ... (tau-k+1).
    let mut bcols = Vec::new();
    for k in 1..=d {
        let mut acc = RatFunc::one(&vars);
        for i in 0..k {
            acc = acc.mul(&tau.sub(&RatFunc::int(&vars, i as i64)));
        }
        bcols.push(dense_coeffs(acc.as_poly().unwrap(), (d + 1) as usize));
    }
    let x = solve_dense(&bcols, &vdense)?;
    // x[k-1] multiplies the k-th column and equals b_{d-k}.
    let mut b = vec![Rat::zero(); d as usize];
    for (k, val) in x.iter().enumerate() {
        b[d as usize - (k + 1)] = val.clone();
    }
    Ok(AhwData { lam: lam.clone(), mu: mu.clone(), v: vpoly, a, b })
}

fn dense_coeffs(p: &Poly, len: usize) -> Vec<Rat> {
    let mut out = p.to_univar(0).expect("univariate in tau");
    out.resize(len, Rat::zero());
    out
}

fn solve_dense(cols: &[Vec<Rat>], rhs: &[Rat]) -> Result<Vec<Rat>, Error> {
    let rows = rhs.len();
    let matrix: Vec<Vec<Rat>> = (0..rows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    crate::symfunc::solve_rational_system(&matrix, rhs, &QQ)
}

/// Numeric real-rootedness via Durand-Kerner iteration: every root's
/// imaginary part must fall below the tolerance.
pub fn real_rooted_numeric(coeffs: &[Rat], tol: f64) -> bool {
    let mut c: Vec<f64> = coeffs.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect();
    while c.last().map(|v| *v == 0.0).unwrap_or(false) {
        c.pop();
    }
    if c.len() <= 1 {
        return true;
    }
    let deg = c.len() - 1;
    let lead = c[deg];
    let monic: Vec<f64> = c.iter().map(|v| v / lead).collect();
    let evaluate = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (0..=deg).rev() {
            acc = acc * z + Complex64::new(monic[k], 0.0);
        }
        acc
    };
    // Initial guesses on a non-real circle.
    let radius = 1.0
        + monic
            .iter()
            .take(deg)
            .map(|v| v.abs())
            .fold(0.0f64, f64::max);
    let mut roots: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    for _ in 0..500 {
        let mut shift = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-12, 0.0);
            }
            let delta = evaluate(roots[i]) / denom;
            roots[i] -= delta;
            shift = shift.max(delta.norm());
        }
        if shift < 1e-13 {
            break;
        }
    }
    roots.iter().all(|z| z.im.abs() < tol * (1.0 + z.norm()))
}

// ---------------------------------------------------------------------------
// Jack polynomials with a second parameter.

/// Expand a SymPoly over Q(tau, sigma) in the sigma-Jack basis (monic),
/// degree by degree.
pub fn expand_in_sigma_jack(
    f: &SymPoly<FracField>,
    n: usize,
    sigma: &str,
) -> BTreeMap<Partition, RatFunc> {
    let vars = f.field().vars().clone();
    let mut out = BTreeMap::new();
    for (d, comp) in f.homogeneous_components() {
        let basis = jack_basis(d, n, sigma);
        let embedded: JackBasisMap = basis
            .iter()
            .map(|(lam, p)| {
                let lifted = p.map_scalars(f.field(), |c| c.embed(&vars));
                (lam.clone(), lifted)
            })
            .collect();
        for (lam, c) in expand_in_triangular_basis(&comp, &embedded) {
            out.insert(lam, c);
        }
    }
    out
}

/// Normalized Jack difference over Q(tau, sigma) for the named parameter.
pub fn normalized_diff_embedded(
    lam: &Partition,
    mu: &Partition,
    n: usize,
    param: &str,
    target: &Vars,
) -> Result<SymPoly<FracField>, Error> {
    let diff = normalized_diff_param(lam, mu, n, false, param)?;
    let field = FracField::new(target.clone());
    Ok(diff.map_scalars(&field, |c| c.embed(target)))
}

/// The collapse identity for lambda = (2, 1^{n-2}, 0), mu = (1^n): the
/// normalized Jack difference equals (1 + (n-1) tau)/(1 + n tau) times the
/// normalized monomial difference.
pub fn one_column_collapse_holds(n: usize) -> Result<bool, Error> {
    let mut lam_parts = vec![1u32; n - 1];
    lam_parts[0] = 2;
    let lam = Partition::new(&lam_parts);
    let mu = Partition::new(&vec![1u32; n]);
    let field = crate::field::field_tau();
    let vars = field.vars().clone();
    let tau = RatFunc::var(&vars, "tau");
    let one = RatFunc::one(&vars);
    let diff = normalized_diff(&lam, &mu, n, false)?;
    let m_l = normalized_monomial(&lam, n, &field)?;
    let m_m = normalized_monomial(&mu, n, &field)?;
    let factor = one
        .add(&tau.scale(&rat_int(n as i64 - 1)))
        .div(&one.add(&tau.scale(&rat_int(n as i64))))?;
    Ok(diff == m_l.sub(&m_m).scale(&factor))
}

/// The two-parameter identity: the tau-difference equals
/// (1+(n-1)tau)(1+n sigma) / ((1+n tau)(1+(n-1) sigma)) times the
/// sigma-difference, for the same pair as above.
pub fn two_parameter_collapse_holds(n: usize) -> Result<bool, Error> {
    let mut lam_parts = vec![1u32; n - 1];
    lam_parts[0] = 2;
    let lam = Partition::new(&lam_parts);
    let mu = Partition::new(&vec![1u32; n]);
    let vars = crate::poly::vars_tau_sigma();
    let dt = normalized_diff_embedded(&lam, &mu, n, "tau", &vars)?;
    let ds = normalized_diff_embedded(&lam, &mu, n, "sigma", &vars)?;
    let tau = RatFunc::var(&vars, "tau");
    let sigma = RatFunc::var(&vars, "sigma");
    let one = RatFunc::one(&vars);
    let nn = rat_int(n as i64);
    let n1 = rat_int(n as i64 - 1);
    let factor = one
        .add(&tau.scale(&n1))
        .mul(&one.add(&sigma.scale(&nn)))
        .div(&one.add(&tau.scale(&nn)).mul(&one.add(&sigma.scale(&n1))))?;
    Ok(dt == ds.scale(&factor))
}

/// Expansion of P_lambda(tau) in the sigma-Jack basis over Q(tau, sigma),
/// used for the varying-parameter counterexample displays.
pub fn jack_tau_in_sigma_basis(
    lam: &Partition,
    n: usize,
) -> Result<BTreeMap<Partition, RatFunc>, Error> {
    let vars = crate::poly::vars_tau_sigma();
    let field = FracField::new(vars.clone());
    let p = jack_p_param(lam, n, "tau")?;
    let lifted = p.expansion.map_scalars(&field, |c| c.embed(&vars));
    Ok(expand_in_sigma_jack(&lifted, n, "sigma"))
}

/// Expand a rational (or tau-) polynomial in the normalized Schur basis
/// S_nu = s_nu / s_nu(1): solve in the monic Schur basis, then scale.
pub fn expand_in_normalized_schur(
    f: &SymPoly<FracField>,
    n: usize,
) -> Result<BTreeMap<Partition, RatFunc>, Error> {
    let exp = to_basis(f, &Basis::S)?;
    let mut out = BTreeMap::new();
    for (nu, c) in exp.terms {
        let field = f.field().clone();
        let s = crate::symfunc::schur(&nu, n, &field)?;
        let ones = s.eval_ones();
        out.insert(nu, c.mul(&ones));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ratfunc;
    use crate::poly::vars_tau;
    use crate::rat::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts)
    }

    #[test]
    fn jack_examples() {
        // P_(2,0) (n=2) = m_(2) + (2 tau / (1+tau)) m_(1,1)
        let j = jack_p(&p(&[2]), 2).unwrap();
        assert_eq!(
            j.expansion.coeff(&p(&[1, 1])).text(),
            "(2*tau^1)/(1 + tau^1)"
        );
        // P_(3,0) (n=2) = m_(3) + (3 tau / (2+tau)) m_(2,1); at tau = 1 the
        // coefficient must be the Kostka number 1.
        let j = jack_p(&p(&[3]), 2).unwrap();
        assert_eq!(
            j.expansion.coeff(&p(&[2, 1])).text(),
            "(3*tau^1)/(2 + tau^1)"
        );
        // P_(1^n) = e_n
        let j = jack_p(&p(&[1, 1, 1]), 3).unwrap();
        assert_eq!(j.expansion.num_terms(), 1);
        assert!(!j.expansion.coeff(&p(&[1, 1, 1])).is_zero());
    }

    #[test]
    fn principal_specialization_examples() {
        // lambda = (d, 0), n = 2: <2 tau>_d / <tau>_d; d = 2 gives 2(2tau+1)/(tau+1)
        let ps = principal_specialization(&p(&[2]), 2).unwrap();
        let expect = parse_ratfunc("2*(2*tau+1)/(tau+1)", &vars_tau()).unwrap();
        assert_eq!(ps, expect);
        // lambda = (1^n): 1
        let ps = principal_specialization(&p(&[1, 1, 1]), 3).unwrap();
        assert!(ps.is_one());
        // product formula equals direct evaluation
        for d in 1..=5u32 {
            for lam in enumerate(d, 3) {
                let ps = principal_specialization(&lam, 3).unwrap();
                let direct = jack_p(&lam, 3).unwrap().expansion.eval_ones();
                assert_eq!(ps, direct, "lambda = {lam:?}");
            }
        }
    }

    #[test]
    fn one_row_formula_cross_check() {
        // Prop one-row formula: P_(d,0^(n-1)) = d!/<tau>_d sum <tau>_eta/eta! x^eta
        let field = crate::field::field_tau();
        let tau = field.var("tau");
        for (d, n) in [(3u32, 2usize), (4, 3), (3, 3)] {
            let direct = jack_p(&p(&[d]), n).unwrap().expansion;
            let mut formula = SymPoly::zero(n, &field);
            let scale = tau.pochhammer(d).recip().unwrap().scale(&factorial(d));
            for lam in enumerate(d, n) {
                // coefficient of m_lambda: value at the sorted representative
                let mut c = RatFunc::one(field.vars());
                for &part in lam.parts() {
                    c = c.mul(&tau.pochhammer(part).scale(&factorial(part).recip()));
                }
                formula.set_coeff(lam.clone(), c.mul(&scale));
            }
            assert_eq!(direct, formula, "d={d} n={n}");
        }
    }

    #[test]
    fn column_removal() {
        // P_lambda = x1...xn P_(lambda - 1) when all parts positive
        let j = jack_p(&p(&[2, 1]), 2).unwrap().expansion;
        let j0 = jack_p(&p(&[1]), 2).unwrap().expansion;
        let field = crate::field::field_tau();
        let e2 = crate::symfunc::elementary(2, 2, &field);
        assert_eq!(j, e2.mul(&j0));
    }

    #[test]
    fn specialization_collapse_small() {
        // tau = 0 -> monomial; tau = 1 -> Schur
        for d in 1..=4u32 {
            for lam in enumerate(d, 3) {
                let j = jack_p(&lam, 3).unwrap().expansion;
                for (mu, c) in j.terms() {
                    let at0 = c.eval(&[rat(0, 1)]).unwrap();
                    let expect0 = if mu == &lam { rat(1, 1) } else { rat(0, 1) };
                    assert_eq!(at0, expect0);
                }
                let schur = crate::symfunc::schur(&lam, 3, &QQ).unwrap();
                for (mu, c) in j.terms() {
                    let at1 = c.eval(&[rat(1, 1)]).unwrap();
                    assert_eq!(at1, schur.coeff(mu), "lam {lam:?} mu {mu:?}");
                }
            }
        }
    }

    #[test]
    fn binomial_examples() {
        // binom(lambda, lambda) = 1, binom((1),(0)) = 1
        let b = generalized_binomial(&p(&[2, 1]), &p(&[2, 1]), 2).unwrap();
        assert!(b.is_one());
        let b = generalized_binomial(&p(&[1]), &Partition::empty(), 2).unwrap();
        assert!(b.is_one());
        assert!(generalized_binomial(&p(&[1]), &p(&[2]), 2).is_err());
    }

    #[test]
    fn containment_positivity_examples() {
        let opts = FpOptions::default();
        let rows = containment_positivity(&p(&[2]), &p(&[1]), 2, &opts).unwrap();
        assert!(rows
            .iter()
            .all(|(_, _, v)| v.in_cone()));
        let rows = containment_positivity(&p(&[2, 1]), &p(&[1, 1]), 2, &opts).unwrap();
        assert!(rows.iter().all(|(_, _, v)| v.in_cone()));
    }

    #[test]
    fn toy_identities_small() {
        for d in 2..=6 {
            let toy = toy_example(d).unwrap();
            assert!(toy.second_difference_identity(), "d={d}");
            assert!(toy.telescoped_identity(), "d={d}");
            assert!(toy.square_factor_identity(), "d={d}");
        }
    }

    #[test]
    fn toy_f_matches_jack_construction() {
        // f_i are the s^i coefficients of the normalized difference at (1, s).
        for d in 2..=5u32 {
            let toy = toy_example(d).unwrap();
            let diff = normalized_diff(&p(&[d]), &p(&[d - 1, 1]), 2, false).unwrap();
            let vars2 = Vars::new(&["tau", "s"]);
            let field2 = FracField::new(vars2.clone());
            let lifted = diff.map_scalars(&field2, |c| c.embed(&vars2));
            let s = RatFunc::var(&vars2, "s");
            let value = lifted.eval(&[RatFunc::one(&vars2), s.clone()]);
            let mut expect = RatFunc::zero(&vars2);
            for (i, fi) in toy.f.iter().enumerate() {
                expect = expect.add(&fi.embed(&vars2).mul(&s.pow(i as i64).unwrap()));
            }
            assert_eq!(value, expect, "d={d}");
        }
    }

    #[test]
    fn telescoped_partial_sums_match_closed_form() {
        let opts = FpOptions::default();
        for d in 2..=7u32 {
            let t = telescoped_sums(d).unwrap();
            for i in 0..=(d / 2).saturating_sub(1) {
                let closed = telescoped_closed_form(d, i);
                assert_eq!(t.partial_sums[i as usize], closed, "d={d} i={i}");
                let v = fp_membership_tau(&closed, &opts);
                assert!(v.in_cone(), "d={d} i={i}");
            }
            if d % 2 == 0 {
                assert!(t.partial_sums[(d / 2) as usize].is_zero(), "d={d} total");
            }
        }
    }

    #[test]
    fn transition_matrices_small() {
        let vars = crate::poly::vars_tau_sigma();
        for d in 2..=6u32 {
            let fwd_t = transition_forward(d, &vars, "tau");
            let inv_s = transition_inverse_explicit(d, &vars, "sigma");
            let fwd_s = transition_forward(d, &vars, "sigma");
            // explicit inverse really inverts
            let prod = mat_mul(&fwd_s, &inv_s, &vars);
            for (i, row) in prod.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    if i == j {
                        assert!(e.is_one(), "d={d} diag");
                    } else {
                        assert!(e.is_zero(), "d={d} off-diag {i},{j}");
                    }
                }
            }
            // closed form equals the product
            let closed = transition_closed(d, &vars, "tau", "sigma");
            let prod = mat_mul(&fwd_t, &inv_s, &vars);
            assert_eq!(prod, closed, "d={d}");
        }
        // M_2 entry as displayed; the M_3 entry follows the general formula
        // (and the tau = 1 Kostka value), giving 3 tau / (2 + tau).
        let vars_t = crate::poly::vars_tau_sigma();
        let m2 = transition_forward(2, &vars_t, "tau");
        assert_eq!(m2[0][1].text(), "(2*tau^1)/(1 + tau^1)");
        let m3 = transition_forward(3, &vars_t, "tau");
        assert_eq!(m3[0][1].text(), "(3*tau^1)/(2 + tau^1)");
    }

    #[test]
    fn transition_tau_equals_sigma_is_identity() {
        let vars = crate::poly::vars_tau_sigma();
        let d = 5;
        let closed = transition_closed(d, &vars, "tau", "tau");
        for (i, row) in closed.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if i == j {
                    assert!(e.is_one());
                } else {
                    assert!(e.is_zero());
                }
            }
        }
    }

    #[test]
    fn sign_quadratic_middle_entry() {
        // d = 2k: a_k = -2k (tau + k - 1)(2 sigma + 1)
        let vars = crate::poly::vars_tau_sigma();
        let tau = RatFunc::var(&vars, "tau");
        let sigma = RatFunc::var(&vars, "sigma");
        let one = RatFunc::one(&vars);
        for k in 1..=4u32 {
            let a = transition_sign_quadratic(2 * k, &vars, "tau", "sigma", k);
            let expect = tau
                .add(&one.scale(&rat_int(k as i64 - 1)))
                .mul(&sigma.scale(&rat_int(2)).add(&one))
                .scale(&rat_int(-2 * k as i64));
            assert_eq!(a, expect, "even d = {}", 2 * k);
            // d = 2k+1: a_k = -2k (tau + k)(2 sigma + 1)
            let a = transition_sign_quadratic(2 * k + 1, &vars, "tau", "sigma", k);
            let expect = tau
                .add(&one.scale(&rat_int(k as i64)))
                .mul(&sigma.scale(&rat_int(2)).add(&one))
                .scale(&rat_int(-2 * k as i64));
            assert_eq!(a, expect, "odd d = {}", 2 * k + 1);
        }
    }

    #[test]
    fn kadell_basics() {
        // I_(0^n) = 1
        let k = kadell_normalized(&Partition::empty(), 3).unwrap();
        assert!(k.value.is_one());
        // ratio identity for an adjacent pair
        assert!(kadell_ratio_identity_holds(&p(&[2]), &p(&[1, 1]), 2).unwrap());
        // non-raising pair rejected
        assert!(kadell_adjacent_ratio(&p(&[1]), &Partition::empty(), 2).is_err());
        // r = s = 1 difference is in the cone
        let d = kadell_difference_at(&p(&[2]), &p(&[1, 1]), 2, &rat(1, 1), &rat(1, 1)).unwrap();
        let v = fp_membership_tau(&d, &FpOptions::default());
        assert!(v.in_cone());
    }

    #[test]
    fn integral_jack_single_cell() {
        // J_(1) = tau p_1 and v_(1),(1) = tau
        let j = integral_jack(&p(&[1]), 1).unwrap();
        let c = j.coeff(&p(&[1]));
        assert_eq!(c.text(), "tau^1");
        let data = ahw_coeffs(&p(&[1]), &p(&[1])).unwrap();
        assert_eq!(data.v.text(), "tau^1");
        assert_eq!(data.a, vec![rat(1, 1)]);
        assert_eq!(data.b, vec![rat(1, 1)]);
    }

    #[test]
    fn ahw_small_nonneg_integers() {
        for d in 1..=4u32 {
            for lam in enumerate(d, d as usize) {
                for mu in enumerate(d, d as usize) {
                    let data = ahw_coeffs(&lam, &mu).unwrap();
                    for v in data.a.iter().chain(data.b.iter()) {
                        assert!(
                            crate::rat::is_nonneg_integer(v),
                            "lam {lam:?} mu {mu:?}: {v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn real_rooted_numeric_works() {
        // (z-1)(z-2)(z-3)
        let coeffs = vec![rat_int(-6), rat_int(11), rat_int(-6), rat_int(1)];
        assert!(real_rooted_numeric(&coeffs, 1e-9));
        // z^2 + 1
        let coeffs = vec![rat_int(1), rat_int(0), rat_int(1)];
        assert!(!real_rooted_numeric(&coeffs, 1e-9));
    }

    #[test]
    fn collapse_identities() {
        for n in 3..=5 {
            assert!(one_column_collapse_holds(n).unwrap(), "n={n}");
            assert!(two_parameter_collapse_holds(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn sigma_basis_counterexample_display() {
        // P_(3,3)(tau) in the sigma-Jack basis, n = 3.
        let coeffs = jack_tau_in_sigma_basis(&p(&[3, 3]), 3).unwrap();
        let vars = crate::poly::vars_tau_sigma();
        let c321 = &coeffs[&p(&[3, 2, 1])];
        let expect = parse_ratfunc("6(tau-sigma)/((2+sigma)(2+tau))", &vars).unwrap();
        assert_eq!(c321, &expect);
        let c222 = &coeffs[&p(&[2, 2, 2])];
        let expect = parse_ratfunc(
            "6(tau-2sigma)(tau-sigma)/((1+sigma)(1+2sigma)(1+tau)(2+tau))",
            &vars,
        )
        .unwrap();
        assert_eq!(c222, &expect);
        assert!(coeffs[&p(&[3, 3])].is_one());
    }

    #[test]
    fn normalized_schur_counterexample() {
        // M_(3) - M_(21) = (10/3) S_3 - 4 S_21 + (2/3) S_111 at n = 3.
        let field = crate::field::field_tau();
        let a = normalized_monomial(&p(&[3]), 3, &field).unwrap();
        let b = normalized_monomial(&p(&[2, 1]), 3, &field).unwrap();
        let coeffs = expand_in_normalized_schur(&a.sub(&b), 3).unwrap();
        assert_eq!(coeffs[&p(&[3])], RatFunc::from_rat(field.vars(), rat(10, 3)));
        assert_eq!(coeffs[&p(&[2, 1])], RatFunc::from_rat(field.vars(), rat(-4, 1)));
        assert_eq!(coeffs[&p(&[1, 1, 1])], RatFunc::from_rat(field.vars(), rat(2, 3)));
    }
}
