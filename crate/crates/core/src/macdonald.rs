//! Macdonald polynomials over Q(q, t): construction by orthogonalization,
//! principal specializations at the all-ones point and at powers of t, the
//! two-variable closed-form machinery (b_k, c_k, partial sums), duality, and
//! the numeric Jack degeneration.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::ToPrimitive;

use crate::error::Error;
use crate::field::{Field, FracField};
use crate::fp::{fp_membership_qt, FpOptions, PositivityVerdict};
use crate::partitions::Partition;
use crate::poly::{vars_qt, Vars};
use crate::rat::{rat_int, rat_to_f64, Rat};
use crate::ratfunc::{q_pochhammer, RatFunc};
use crate::orth::orthogonal_basis;
use crate::symfunc::{normalized_monomial, SymPoly};

/// A Macdonald polynomial: monic dominance-triangular, orthogonal under the
/// two-parameter Hall inner product.
#[derive(Clone, Debug)]
pub struct MacP {
    pub lam: Partition,
    pub n: usize,
    pub expansion: SymPoly<FracField>,
}

/// Inner-product weight prod_i (1 - q^{nu_i}) / (1 - t^{nu_i}).
fn mac_weight(field: &FracField) -> impl Fn(&Partition) -> RatFunc + '_ {
    move |nu: &Partition| {
        let q = field.var("q");
        let t = field.var("t");
        let one = field.one();
        let mut acc = field.one();
        for &part in nu.parts() {
            let num = one.sub(&q.pow(part as i64).expect("positive power"));
            let den = one.sub(&t.pow(part as i64).expect("positive power"));
            acc = acc.mul(&num.div(&den).expect("nonzero"));
        }
        acc
    }
}

type MacBasisMap = BTreeMap<Partition, SymPoly<FracField>>;

fn mac_cache() -> &'static Mutex<HashMap<(u32, usize), Arc<MacBasisMap>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize), Arc<MacBasisMap>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All Macdonald polynomials of degree d in n variables, memoized. As with
/// the one-parameter family, coefficients are computed with ambient max(n, d)
/// variables and restricted.
pub fn mac_basis(d: u32, n: usize) -> Arc<MacBasisMap> {
    let key = (d, n);
    if let Some(hit) = mac_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let work = (d as usize).max(1);
    let arc = if n >= work {
        let field = FracField::new(vars_qt());
        let w = mac_weight(&field);
        Arc::new(orthogonal_basis(d, n, &field, &w))
    } else {
        let full = mac_basis(d, work);
        let restricted: MacBasisMap = full
            .iter()
            .filter(|(lam, _)| lam.length() <= n)
            .map(|(lam, p)| (lam.clone(), p.restrict_nvars(n)))
            .collect();
        Arc::new(restricted)
    };
    mac_cache().lock().unwrap().insert(key, arc.clone());
    arc
}

pub fn mac_p(lam: &Partition, n: usize) -> Result<MacP, Error> {
    if lam.length() > n {
        return Err(Error::Precondition(format!(
            "partition {} has more than {} parts",
            lam.text(),
            n
        )));
    }
    let basis = mac_basis(lam.size(), n);
    Ok(MacP { lam: lam.clone(), n, expansion: basis[lam].clone() })
}

/// Evaluation at the all-ones point, by exact substitution.
pub fn principal_spec_ones(lam: &Partition, n: usize) -> Result<RatFunc, Error> {
    Ok(mac_p(lam, n)?.expansion.eval_ones())
}

/// Evaluation at (t^{n-1}, ..., t, 1), by exact substitution.
pub fn principal_spec_tdelta(lam: &Partition, n: usize) -> Result<RatFunc, Error> {
    let p = mac_p(lam, n)?;
    let field = p.expansion.field().clone();
    let t = field.var("t");
    let point: Vec<RatFunc> = (0..n)
        .map(|i| t.pow((n - 1 - i) as i64).expect("nonnegative power"))
        .collect();
    Ok(p.expansion.eval(&point))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MacNormalization {
    Ones,
    TDelta,
}

/// Normalized Macdonald difference in the requested normalization; the shift
/// substitutes x -> x + 1 first.
pub fn normalized_mac_diff(
    lam: &Partition,
    mu: &Partition,
    n: usize,
    normalization: MacNormalization,
    shifted: bool,
) -> Result<SymPoly<FracField>, Error> {
    let pl = mac_p(lam, n)?.expansion;
    let pm = mac_p(mu, n)?.expansion;
    let (dl, dm) = match normalization {
        MacNormalization::Ones => (pl.eval_ones(), pm.eval_ones()),
        MacNormalization::TDelta => (
            principal_spec_tdelta(lam, n)?,
            principal_spec_tdelta(mu, n)?,
        ),
    };
    let diff = pl
        .scale(&dl.recip()?)
        .sub(&pm.scale(&dm.recip()?));
    Ok(if shifted { diff.shift_ones() } else { diff })
}

/// The one-row two-variable combinatorial expansion:
/// P_(d,0)(x1, x2) = (q;q)_d/(t;q)_d * sum_i c_i c_{d-i} x1^i x2^{d-i}
/// with c_k = (t;q)_k / (q;q)_k.
pub fn mac_onerow_two_vars(d: u32) -> SymPoly<FracField> {
    let field = FracField::new(vars_qt());
    let c = c_sequence(d, field.vars());
    let t = field.var("t");
    let q = field.var("q");
    let scale = q_pochhammer(&q, "q", d)
        .div(&q_pochhammer(&t, "q", d))
        .expect("nonzero");
    let mut out = SymPoly::zero(2, &field);
    for i in 0..=d {
        let hi = i.max(d - i);
        let lo = i.min(d - i);
        if (i as i64) < (d - i) as i64 {
            continue; // count each orbit once
        }
        let coeff = c[i as usize].mul(&c[(d - i) as usize]).mul(&scale);
        out.set_coeff(Partition::new(&[hi, lo]), coeff);
    }
    out
}

fn b_sequence(d: u32, vars: &Vars) -> Vec<RatFunc> {
    let q = RatFunc::var(vars, "q");
    let t = RatFunc::var(vars, "t");
    let one = RatFunc::one(vars);
    let mut out = vec![RatFunc::one(vars)]; // placeholder for index 0
    for k in 1..=d {
        let num = one.sub(&t.mul(&q.pow(k as i64 - 1).unwrap()));
        let den = one.sub(&q.pow(k as i64).unwrap());
        out.push(num.div(&den).expect("nonzero"));
    }
    out
}

fn c_sequence(d: u32, vars: &Vars) -> Vec<RatFunc> {
    let b = b_sequence(d, vars);
    let mut out = vec![RatFunc::one(vars)];
    for k in 1..=d as usize {
        let prev = out[k - 1].clone();
        out.push(prev.mul(&b[k]));
    }
    out
}

/// The two-variable telescoping data: b_k, c_k, the monomial-difference
/// coefficients a_i built from c-products (separate even/odd displays),
/// their partial sums, and per-index cone verdicts.
pub struct TwoVarSeq {
    pub d: u32,
    /// b_1..b_d at indices 1..=d (index 0 unused).
    pub b: Vec<RatFunc>,
    /// c_0..c_d.
    pub c: Vec<RatFunc>,
    /// a_0..a_{floor(d/2)}.
    pub a: Vec<RatFunc>,
    pub partial_sums: Vec<RatFunc>,
    pub verdicts: Vec<PositivityVerdict>,
}

pub fn twovar_partial_sums(d: u32, opts: &FpOptions) -> Result<TwoVarSeq, Error> {
    if d < 2 {
        return Err(Error::Precondition("need d >= 2".into()));
    }
    let vars = vars_qt();
    let b = b_sequence(d, &vars);
    let c = c_sequence(d, &vars);
    let sum_open: RatFunc = {
        // sum_{j=1}^{d-1} c_{j-1} c_{d-j-1}
        let mut acc = RatFunc::zero(&vars);
        for j in 1..=(d - 1) as usize {
            acc = acc.add(&c[j - 1].mul(&c[d as usize - j - 1]));
        }
        acc
    };
    let sum_closed: RatFunc = {
        // sum_{j=0}^{d} c_j c_{d-j}
        let mut acc = RatFunc::zero(&vars);
        for j in 0..=d as usize {
            acc = acc.add(&c[j].mul(&c[d as usize - j]));
        }
        acc
    };

    let half = (d / 2) as usize;
    let k = half;
    let mut a = Vec::with_capacity(half + 1);
    if d % 2 == 0 {
        // Even displays fold the symmetric sums to j <= k-1.
        let sum_open_half: RatFunc = {
            let mut acc = RatFunc::zero(&vars);
            for j in 1..=(k.saturating_sub(1)) {
                acc = acc.add(&c[j - 1].mul(&c[d as usize - j - 1]));
            }
            acc
        };
        let sum_closed_half: RatFunc = {
            let mut acc = RatFunc::zero(&vars);
            for j in 1..=(k.saturating_sub(1)) {
                acc = acc.add(&c[j].mul(&c[d as usize - j]));
            }
            acc
        };
        let cd = c[d as usize].clone();
        let ck1sq = c[k - 1].mul(&c[k - 1]);
        let cksq = c[k].mul(&c[k]);
        a.push(
            cd.mul(&sum_open_half)
                .scale(&rat_int(4))
                .add(&ck1sq.mul(&cd).scale(&rat_int(2))),
        );
        for i in 1..k {
            let t1 = c[i].mul(&c[d as usize - i]).mul(&sum_open_half).scale(&rat_int(4));
            let t2 = c[i - 1]
                .mul(&c[d as usize - i - 1])
                .mul(&sum_closed_half)
                .scale(&rat_int(4));
            let t3 = c[i - 1].mul(&c[d as usize - i - 1]).mul(&cd).scale(&rat_int(4));
            let t4 = c[i].mul(&ck1sq).mul(&c[d as usize - i]).scale(&rat_int(2));
            let t5 = c[i - 1].mul(&cksq).mul(&c[d as usize - i - 1]).scale(&rat_int(2));
            a.push(t1.sub(&t2).sub(&t3).add(&t4).sub(&t5));
        }
        a.push(
            cksq.mul(&sum_open_half)
                .scale(&rat_int(2))
                .sub(&ck1sq.mul(&sum_closed_half).scale(&rat_int(2)))
                .sub(&ck1sq.mul(&cd).scale(&rat_int(2))),
        );
    } else {
        // Odd displays fold to j <= k.
        let sum_open_half: RatFunc = {
            let mut acc = RatFunc::zero(&vars);
            for j in 1..=k {
                acc = acc.add(&c[j - 1].mul(&c[d as usize - j - 1]));
            }
            acc
        };
        let sum_closed_half: RatFunc = {
            let mut acc = RatFunc::zero(&vars);
            for j in 1..=k {
                acc = acc.add(&c[j].mul(&c[d as usize - j]));
            }
            acc
        };
        let cd = c[d as usize].clone();
        a.push(cd.mul(&sum_open_half).scale(&rat_int(4)));
        for i in 1..=k {
            let t1 = c[i].mul(&c[d as usize - i]).mul(&sum_open_half).scale(&rat_int(4));
            let t2 = c[i - 1]
                .mul(&c[d as usize - i - 1])
                .mul(&sum_closed_half)
                .scale(&rat_int(4));
            let t3 = c[i - 1].mul(&c[d as usize - i - 1]).mul(&cd).scale(&rat_int(4));
            a.push(t1.sub(&t2).sub(&t3));
        }
    }

    // Cross-check against the generic displays (before the even/odd split).
    let mut generic = Vec::with_capacity(half + 1);
    generic.push(c[d as usize].mul(&sum_open).scale(&rat_int(2)));
    let top = if d % 2 == 0 { half - 1 } else { half };
    for i in 1..=top {
        let t1 = c[i].mul(&c[d as usize - i]).mul(&sum_open).scale(&rat_int(2));
        let t2 = c[i - 1]
            .mul(&c[d as usize - i - 1])
            .mul(&sum_closed)
            .scale(&rat_int(2));
        generic.push(t1.sub(&t2));
    }
    if d % 2 == 0 {
        let t1 = c[half].mul(&c[half]).mul(&sum_open);
        let t2 = c[half - 1].mul(&c[half - 1]).mul(&sum_closed);
        generic.push(t1.sub(&t2));
    }
    if a != generic {
        return Err(Error::Precondition(
            "even/odd displays disagree with the generic coefficient displays".into(),
        ));
    }

    let mut partial_sums = Vec::with_capacity(a.len());
    let mut acc = RatFunc::zero(&vars);
    for ai in &a {
        acc = acc.add(ai);
        partial_sums.push(acc.clone());
    }
    let verdicts = partial_sums
        .iter()
        .map(|s| fp_membership_qt(s, opts))
        .collect();
    Ok(TwoVarSeq { d, b, c, a, partial_sums, verdicts })
}

/// Scale factor relating the coefficient displays to the true normalized
/// difference: (sum_j c_j c_{d-j}) * (sum_{j=1}^{d-1} c_{j-1} c_{d-1-j}).
pub fn twovar_scale(d: u32) -> RatFunc {
    let vars = vars_qt();
    let c = c_sequence(d, &vars);
    let mut s1 = RatFunc::zero(&vars);
    for j in 0..=d as usize {
        s1 = s1.add(&c[j].mul(&c[d as usize - j]));
    }
    let mut s2 = RatFunc::zero(&vars);
    for j in 1..=(d - 1) as usize {
        s2 = s2.add(&c[j - 1].mul(&c[d as usize - 1 - j]));
    }
    s1.mul(&s2)
}

/// The scaled normalized difference equals sum_i a_i M_(d-i, i); this checks
/// that identity exactly against the Gram-Schmidt construction.
pub fn twovar_a_matches_difference(d: u32, opts: &FpOptions) -> Result<bool, Error> {
    let seq = twovar_partial_sums(d, opts)?;
    let lam = Partition::new(&[d]);
    let mu = Partition::new(&[d - 1, 1]);
    let diff = normalized_mac_diff(&lam, &mu, 2, MacNormalization::Ones, false)?;
    let field = diff.field().clone();
    let scaled = diff.scale(&twovar_scale(d));
    let mut expect = SymPoly::zero(2, &field);
    for (i, ai) in seq.a.iter().enumerate() {
        let m = normalized_monomial(&Partition::new(&[d - i as u32, i as u32]), 2, &field)?;
        expect = expect.add(&m.scale(ai));
    }
    Ok(scaled == expect)
}

/// The (2l+1)-term bracket from the partial-sum positivity argument, with a
/// constant middle index: prod_{m=d-l}^d b_m
/// + sum_{i=1}^l prod_{m=1}^{i-1} b_m (b_i b_{d-i} - mid_i) prod_{m=d-l}^{d-i-1} b_m,
/// where mid_i = b_s b_{d-s} for the open-sum terms or b_k^2 for the middle.
pub fn twovar_bracket(d: u32, l: u32, mid: &RatFunc) -> RatFunc {
    let vars = vars_qt();
    let b = b_sequence(d, &vars);
    let prod = |from: u32, to_incl: i64| -> RatFunc {
        let mut acc = RatFunc::one(&vars);
        let mut m = from as i64;
        while m <= to_incl {
            acc = acc.mul(&b[m as usize]);
            m += 1;
        }
        acc
    };
    let mut acc = prod(d - l, d as i64);
    for i in 1..=l {
        let pre = prod(1, i as i64 - 1);
        let mids = b[i as usize]
            .mul(&b[(d - i) as usize])
            .sub(mid);
        let post = prod(d - l, d as i64 - i as i64 - 1);
        acc = acc.add(&pre.mul(&mids).mul(&post));
    }
    acc
}

/// b_s b__{d-s} for a middle index s.
pub fn twovar_mid(d: u32, s: u32) -> RatFunc {
    let vars = vars_qt();
    let b = b_sequence(d, &vars);
    b[s as usize].mul(&b[(d - s) as usize])
}

/// Substitute t = q; the bracket must collapse to 1.
pub fn bracket_collapses_at_q_eq_t(bracket: &RatFunc) -> bool {
    let vars = bracket.vars().clone();
    let q = RatFunc::var(&vars, "q");
    let images = vec![q.clone(), q];
    match bracket.substitute_all(&vars, &images) {
        Ok(v) => v.is_one(),
        Err(_) => false,
    }
}

/// Duality: P(x; 1/q, 1/t) = P(x; q, t), coefficientwise.
pub fn duality_holds(lam: &Partition, n: usize) -> Result<bool, Error> {
    let p = mac_p(lam, n)?;
    let field = p.expansion.field().clone();
    let vars = field.vars().clone();
    let qinv = field.var("q").recip()?;
    let tinv = field.var("t").recip()?;
    for (_, cval) in p.expansion.terms() {
        let sub = cval.substitute_all(&vars, &[qinv.clone(), tinv.clone()])?;
        if &sub != cval {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Numeric Jack degeneration: along q = t^{1/tau0} (parametrized rationally
/// as q = u^a, t = u^b), the Macdonald monomial coefficients approach the
/// Jack coefficients at tau0. Exact rational evaluation along u -> 1 with one
/// Richardson step; returns the largest deviation.
pub fn jack_limit_deviation(lam: &Partition, n: usize, tau0: &Rat) -> Result<f64, Error> {
    // tau0 = b/a with q = u^a, t = u^b.
    let a = tau0.denom().to_u32().ok_or_else(|| {
        Error::Precondition("tau0 denominator too large".into())
    })?;
    let b = tau0.numer().to_u32().ok_or_else(|| {
        Error::Precondition("tau0 must be a positive rational".into())
    })?;
    let mac = mac_p(lam, n)?;
    let jack = crate::jack::jack_p(lam, n)?;
    let uvars = Vars::new(&["u"]);
    let qtvars = vars_qt();
    let u = RatFunc::var(&uvars, "u");
    let qu = u.pow(a as i64)?.embed(&qtvars);
    let tu = u.pow(b as i64)?.embed(&qtvars);
    let mut worst: f64 = 0.0;
    for (mu, c) in mac.expansion.terms() {
        let curve = c
            .substitute_all(&qtvars, &[qu.clone(), tu.clone()])?
            .restrict(&uvars);
        let target = {
            let jc = jack.expansion.coeff(mu);
            let v = jc.eval(std::slice::from_ref(tau0))?;
            rat_to_f64(&v)
        };
        // Exact values at u = 1 + 2^-k, then one Richardson step.
        let eval_at = |k: u32| -> Result<f64, Error> {
            let point = rat_int(1) + crate::rat::rat(1, 1i64 << k);
            Ok(rat_to_f64(&curve.eval(std::slice::from_ref(&point))?))
        };
        let v1 = eval_at(12)?;
        let v2 = eval_at(13)?;
        let extrapolated = 2.0 * v2 - v1;
        worst = worst.max((extrapolated - target).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::QQ;
    use crate::parse::parse_ratfunc;
    use crate::partitions::enumerate;
    use crate::rat::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts)
    }

    #[test]
    fn mac_basics() {
        // P_(1,1) (n=2) = m_(1,1)
        let m = mac_p(&p(&[1, 1]), 2).unwrap();
        assert_eq!(m.expansion.num_terms(), 1);
        // P_(2,0) (n=2) = m_2 + (1+q)(1-t)/(1-qt) m_11
        let m = mac_p(&p(&[2]), 2).unwrap();
        let c = m.expansion.coeff(&p(&[1, 1]));
        let expect = parse_ratfunc("(1+q)(1-t)/(1-q*t)", &vars_qt()).unwrap();
        assert_eq!(c, expect);
    }

    #[test]
    fn onerow_formula_matches_construction() {
        for d in 1..=4u32 {
            let formula = mac_onerow_two_vars(d);
            let direct = mac_p(&p(&[d]), 2).unwrap().expansion;
            assert_eq!(formula, direct, "d={d}");
        }
    }

    #[test]
    fn column_removal() {
        let field = FracField::new(vars_qt());
        let j = mac_p(&p(&[2, 1]), 2).unwrap().expansion;
        let j0 = mac_p(&p(&[1]), 2).unwrap().expansion;
        let e2 = crate::symfunc::elementary(2, 2, &field);
        assert_eq!(j, e2.mul(&j0));
    }

    #[test]
    fn q_eq_t_gives_schur() {
        for d in 1..=4u32 {
            for lam in enumerate(d, 3) {
                let m = mac_p(&lam, 3).unwrap();
                let s = crate::symfunc::schur(&lam, 3, &QQ).unwrap();
                let vars = vars_qt();
                let q = RatFunc::var(&vars, "q");
                for (mu, c) in m.expansion.terms() {
                    let collapsed = c
                        .substitute_all(&vars, &[q.clone(), q.clone()])
                        .unwrap();
                    let expect = RatFunc::from_rat(&vars, s.coeff(mu));
                    assert_eq!(collapsed, expect, "lam {lam:?} mu {mu:?}");
                }
            }
        }
    }

    #[test]
    fn tdelta_specializations() {
        // P_(d,0)(t^delta) = (t^2;q)_d/(t;q)_d for n = 2
        let vars = vars_qt();
        let t = RatFunc::var(&vars, "t");
        for d in 1..=4u32 {
            let got = principal_spec_tdelta(&p(&[d]), 2).unwrap();
            let t2 = t.mul(&t);
            let expect = q_pochhammer(&t2, "q", d)
                .div(&q_pochhammer(&t, "q", d))
                .unwrap();
            assert_eq!(got, expect, "d={d}");
        }
        // P_(1,1)(t^delta) = t
        let got = principal_spec_tdelta(&p(&[1, 1]), 2).unwrap();
        assert_eq!(got, RatFunc::var(&vars, "t"));
        // P_(1^n)(1^n) = 1
        let got = principal_spec_ones(&p(&[1, 1, 1]), 3).unwrap();
        assert!(got.is_one());
    }

    #[test]
    fn example_d2_tdelta_factorization() {
        // diff = (1-qt)/(t(t+1)(1-qt^2)) (t x1 - x2)(x1 - t x2)
        let diff = normalized_mac_diff(&p(&[2]), &p(&[1, 1]), 2, MacNormalization::TDelta, false)
            .unwrap();
        let vars = vars_qt();
        let field = FracField::new(vars.clone());
        let pref = parse_ratfunc("(1-q*t)/(t*(t+1)*(1-q*t^2))", &vars).unwrap();
        // (t x1 - x2)(x1 - t x2) = t m_2 - (1 + t^2) m_11
        let t = RatFunc::var(&vars, "t");
        let one = RatFunc::one(&vars);
        let m2 = crate::symfunc::monomial(&p(&[2]), 2, &field).unwrap();
        let m11 = crate::symfunc::monomial(&p(&[1, 1]), 2, &field).unwrap();
        let expect = m2
            .scale(&t.mul(&pref))
            .sub(&m11.scale(&one.add(&t.mul(&t)).mul(&pref)));
        assert_eq!(diff, expect);
    }

    #[test]
    fn twovar_sequences_small() {
        let opts = FpOptions::default();
        for d in 2..=5u32 {
            let seq = twovar_partial_sums(d, &opts).unwrap();
            // total sum is zero
            assert!(seq.partial_sums.last().unwrap().is_zero(), "d={d}");
            // all partial sums before the last certify nonnegative
            for (l, v) in seq.verdicts.iter().enumerate() {
                if l + 1 < seq.verdicts.len() {
                    assert!(v.in_cone(), "d={d} l={l}");
                }
            }
            assert!(twovar_a_matches_difference(d, &opts).unwrap(), "d={d}");
        }
    }

    #[test]
    fn bracket_collapse() {
        for d in [4u32, 5, 6] {
            let l = (d - 1) / 2;
            for s in (l + 1)..d.div_ceil(2) {
                let mid = twovar_mid(d, s);
                let br = twovar_bracket(d, l.min(d / 2 - 1).max(1), &mid);
                assert!(bracket_collapses_at_q_eq_t(&br), "d={d} s={s}");
            }
        }
    }

    #[test]
    fn duality_small() {
        for d in 1..=4u32 {
            for lam in enumerate(d, 2) {
                assert!(duality_holds(&lam, 2).unwrap(), "lam {lam:?}");
            }
        }
    }

    #[test]
    fn monomial_positivity_qt() {
        let opts = FpOptions::default();
        for d in 1..=3u32 {
            for lam in enumerate(d, 2) {
                let m = mac_p(&lam, 2).unwrap();
                for (_, c) in m.expansion.terms() {
                    let v = fp_membership_qt(c, &opts);
                    assert!(v.in_cone(), "lam {lam:?}");
                }
            }
        }
    }

    #[test]
    fn jack_limit_small() {
        for tau0 in [rat(1, 2), rat(2, 1)] {
            for lam in [p(&[2]), p(&[2, 1])] {
                let dev = jack_limit_deviation(&lam, 2, &tau0).unwrap();
                assert!(dev < 1e-6, "lam {lam:?} tau0 {tau0}: {dev}");
            }
        }
    }
}
