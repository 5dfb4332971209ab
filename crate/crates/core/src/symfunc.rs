//! Symmetric polynomials in n variables over an exact coefficient field,
//! stored in the monomial basis, with products, basis conversions, the
//! all-ones shift, and evaluations.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::{Field, QQ};
use crate::partitions::{distinct_permutations, enumerate, Partition};
use crate::rat::{binomial, Rat};

/// A symmetric polynomial in `n` variables: map from partitions (sorted
/// exponent vectors) to coefficients in an exact field.
#[derive(Clone, PartialEq, Debug)]
pub struct SymPoly<F: Field> {
    n: usize,
    field: F,
    coeffs: BTreeMap<Partition, F::Elem>,
}

impl<F: Field> SymPoly<F> {
    pub fn zero(n: usize, field: &F) -> Self {
        SymPoly { n, field: field.clone(), coeffs: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lam: &Partition) -> F::Elem {
        self.coeffs
            .get(lam)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &F::Elem)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn support(&self) -> Vec<Partition> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn set_coeff(&mut self, lam: Partition, c: F::Elem) {
        assert!(lam.length() <= self.n, "partition longer than variable count");
        if self.field.is_zero(&c) {
            self.coeffs.remove(&lam);
        } else {
            self.coeffs.insert(lam, c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable count mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = self.clone();
        for (lam, c) in &other.coeffs {
            let cur = out.coeff(lam);
            out.set_coeff(lam.clone(), self.field.add(&cur, c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable count mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = self.clone();
        for (lam, c) in &other.coeffs {
            let cur = out.coeff(lam);
            out.set_coeff(lam.clone(), self.field.sub(&cur, c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = SymPoly::zero(self.n, &self.field);
        for (lam, c) in &self.coeffs {
            out.coeffs.insert(lam.clone(), self.field.neg(c));
        }
        out
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let mut out = SymPoly::zero(self.n, &self.field);
        if self.field.is_zero(s) {
            return out;
        }
        for (lam, c) in &self.coeffs {
            let v = self.field.mul(c, s);
            if !self.field.is_zero(&v) {
                out.coeffs.insert(lam.clone(), v);
            }
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        let mut out = SymPoly::zero(self.n, &self.field);
        if r.is_zero() {
            return out;
        }
        for (lam, c) in &self.coeffs {
            let v = self.field.mul_rat(c, r);
            if !self.field.is_zero(&v) {
                out.coeffs.insert(lam.clone(), v);
            }
        }
        out
    }

    /// Exact product via orbit expansion of the monomial basis.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable count mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = SymPoly::zero(self.n, &self.field);
        for (la, ca) in &self.coeffs {
            for (lb, cb) in &other.coeffs {
                let prod = monomial_product_table(la, lb, self.n);
                let c = self.field.mul(ca, cb);
                for (nu, count) in prod {
                    let cur = out.coeff(&nu);
                    let add = self.field.mul_rat(&c, &count);
                    out.set_coeff(nu, self.field.add(&cur, &add));
                }
            }
        }
        out
    }

    /// Evaluate by substituting field scalars for the variables.
    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.n, "point length mismatch");
        let f = &self.field;
        let mut acc = f.zero();
        let maxdeg = self.coeffs.keys().map(|l| l.part(0)).max().unwrap_or(0) as usize;
        let mut pows: Vec<Vec<F::Elem>> = Vec::with_capacity(self.n);
        for x in point {
            let mut row = Vec::with_capacity(maxdeg + 1);
            row.push(f.one());
            for k in 1..=maxdeg {
                let next = f.mul(&row[k - 1], x);
                row.push(next);
            }
            pows.push(row);
        }
        for (lam, c) in &self.coeffs {
            let mut orbit_sum = f.zero();
            for perm in distinct_permutations(lam, self.n) {
                let mut term = f.one();
                for (i, &e) in perm.iter().enumerate() {
                    if e > 0 {
                        term = f.mul(&term, &pows[i][e as usize]);
                    }
                }
                orbit_sum = f.add(&orbit_sum, &term);
            }
            acc = f.add(&acc, &f.mul(c, &orbit_sum));
        }
        acc
    }

    /// Evaluate at the all-ones point.
    pub fn eval_ones(&self) -> F::Elem {
        let mut acc = self.field.zero();
        for (lam, c) in &self.coeffs {
            let t = self.field.mul_rat(c, &lam.orbit_size(self.n));
            acc = self.field.add(&acc, &t);
        }
        acc
    }

    /// Substitute x_i -> x_i + 1 and re-expand in the monomial basis.
    pub fn shift_ones(&self) -> Self {
        let mut out = SymPoly::zero(self.n, &self.field);
        for (lam, c) in &self.coeffs {
            for (nu, count) in shift_ones_table(lam, self.n) {
                let cur = out.coeff(&nu);
                let add = self.field.mul_rat(c, &count);
                out.set_coeff(nu, self.field.add(&cur, &add));
            }
        }
        out
    }

    /// Split into homogeneous components by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, SymPoly<F>> {
        let mut out: BTreeMap<u32, SymPoly<F>> = BTreeMap::new();
        for (lam, c) in &self.coeffs {
            let d = lam.size();
            let entry = out
                .entry(d)
                .or_insert_with(|| SymPoly::zero(self.n, &self.field));
            entry.coeffs.insert(lam.clone(), c.clone());
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_components().len() <= 1
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|l| l.size()).max()
    }

    /// Restrict to fewer variables: drop monomials with too many parts.
    pub fn restrict_nvars(&self, n: usize) -> SymPoly<F> {
        let mut out = SymPoly::zero(n, &self.field);
        for (lam, c) in &self.coeffs {
            if lam.length() <= n {
                out.coeffs.insert(lam.clone(), c.clone());
            }
        }
        out
    }

    /// Map coefficients into another field.
    pub fn map_scalars<G: Field>(
        &self,
        field: &G,
        f: impl Fn(&F::Elem) -> G::Elem,
    ) -> SymPoly<G> {
        let mut out = SymPoly::zero(self.n, field);
        for (lam, c) in &self.coeffs {
            let v = f(c);
            if !field.is_zero(&v) {
                out.coeffs.insert(lam.clone(), v);
            }
        }
        out
    }
}

/// m_lambda in n variables.
pub fn monomial<F: Field>(lam: &Partition, n: usize, field: &F) -> Result<SymPoly<F>, Error> {
    if lam.length() > n {
        return Err(Error::Precondition(format!(
            "partition {} has more than {} parts",
            lam.text(),
            n
        )));
    }
    let mut p = SymPoly::zero(n, field);
    p.coeffs.insert(lam.clone(), field.one());
    Ok(p)
}

/// M_lambda = m_lambda / m_lambda(1,...,1).
pub fn normalized_monomial<F: Field>(
    lam: &Partition,
    n: usize,
    field: &F,
) -> Result<SymPoly<F>, Error> {
    let m = monomial(lam, n, field)?;
    let inv = lam.orbit_size(n).recip();
    Ok(m.scale_rat(&inv))
}

/// k-th elementary symmetric polynomial; zero when k > n.
pub fn elementary<F: Field>(k: u32, n: usize, field: &F) -> SymPoly<F> {
    if k as usize > n {
        return SymPoly::zero(n, field);
    }
    let ones = Partition::new(&vec![1; k as usize]);
    monomial(&ones, n, field).expect("length checked")
}

/// k-th power sum; p_0 = n.
pub fn powersum<F: Field>(k: u32, n: usize, field: &F) -> SymPoly<F> {
    if k == 0 {
        let mut p = SymPoly::zero(n, field);
        p.set_coeff(Partition::empty(), field.int(n as i64));
        return p;
    }
    monomial(&Partition::new(&[k]), n, field).expect("single part")
}

/// e_lambda = product of e over the parts.
pub fn e_lambda<F: Field>(lam: &Partition, n: usize, field: &F) -> SymPoly<F> {
    let mut acc = monomial(&Partition::empty(), n, field).unwrap();
    for &part in lam.parts() {
        acc = acc.mul(&elementary(part, n, field));
    }
    acc
}

/// p_lambda = product of power sums over the parts.
pub fn p_lambda<F: Field>(lam: &Partition, n: usize, field: &F) -> SymPoly<F> {
    let mut acc = monomial(&Partition::empty(), n, field).unwrap();
    for &part in lam.parts() {
        acc = acc.mul(&powersum(part, n, field));
    }
    acc
}

/// Schur polynomial via the dual Jacobi-Trudi determinant over the
/// elementary basis: s_lambda = det(e_{lambda'_i - i + j}).
pub fn schur<F: Field>(lam: &Partition, n: usize, field: &F) -> Result<SymPoly<F>, Error> {
    if lam.length() > n {
        return Err(Error::Precondition(format!(
            "partition {} has more than {} parts",
            lam.text(),
            n
        )));
    }
    let table = schur_m_table(lam, n);
    let mut out = SymPoly::zero(n, field);
    for (nu, c) in table {
        out.set_coeff(nu, field.from_rat(&c));
    }
    Ok(out)
}

fn schur_m_table(lam: &Partition, n: usize) -> BTreeMap<Partition, Rat> {
    let key = (lam.clone(), n);
    {
        let cache = schur_cache().lock().unwrap();
        if let Some(hit) = cache.get(&key) {
            return hit.clone();
        }
    }
    let conj = lam.conjugate();
    let ell = conj.length();
    let mut acc: SymPoly<QQ> = SymPoly::zero(n, &QQ);
    if ell == 0 {
        acc.set_coeff(Partition::empty(), Rat::one());
    } else {
        // Permutation expansion of det(e_{conj_i - i + j}), grouping repeated
        // index multisets.
        let mut groups: HashMap<Vec<u32>, Rat> = HashMap::new();
        let perms = all_permutations(ell);
        'perm: for (perm, sign) in perms {
            let mut idx = Vec::with_capacity(ell);
            for i in 0..ell {
                let v = conj.part(i) as i64 - (i as i64 + 1) + (perm[i] as i64 + 1);
                if v < 0 || v as usize > n {
                    continue 'perm;
                }
                idx.push(v as u32);
            }
            idx.sort_unstable_by(|a, b| b.cmp(a));
            let entry = groups.entry(idx).or_insert_with(Rat::zero);
            *entry += Rat::from_integer(sign.into());
        }
        for (idx, c) in groups {
            if c.is_zero() {
                continue;
            }
            let part = Partition::from_exponents(&idx);
            let e = e_lambda(&part, n, &QQ);
            acc = acc.add(&e.scale_rat(&c));
        }
    }
    let table: BTreeMap<Partition, Rat> = acc.coeffs.into_iter().collect();
    schur_cache().lock().unwrap().insert(key, table.clone());
    table
}

fn all_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut v: Vec<usize> = (0..k).collect();
    permute(&mut v, 0, 1, &mut out);
    out
}

fn permute(v: &mut Vec<usize>, start: usize, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
    if start == v.len() {
        out.push((v.clone(), sign));
        return;
    }
    for i in start..v.len() {
        let s = if i == start { sign } else { -sign };
        v.swap(start, i);
        permute(v, start + 1, s, out);
        v.swap(start, i);
    }
}

type ProductTable = BTreeMap<Partition, Rat>;

fn monomial_product_table(la: &Partition, lb: &Partition, n: usize) -> ProductTable {
    let key = (la.clone(), lb.clone(), n);
    {
        let cache = product_cache().lock().unwrap();
        if let Some(hit) = cache.get(&key) {
            return hit.clone();
        }
    }
    let mut bucket: BTreeMap<Partition, u64> = BTreeMap::new();
    let pa = distinct_permutations(la, n);
    let pb = distinct_permutations(lb, n);
    for a in &pa {
        for b in &pb {
            let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            *bucket.entry(Partition::from_exponents(&sum)).or_insert(0) += 1;
        }
    }
    let mut table = ProductTable::new();
    for (nu, cnt) in bucket {
        let orbit = nu.orbit_size(n);
        table.insert(nu, Rat::from_integer(cnt.into()) / orbit);
    }
    product_cache().lock().unwrap().insert(key, table.clone());
    table
}

fn shift_ones_table(lam: &Partition, n: usize) -> ProductTable {
    let key = (lam.clone(), n);
    {
        let cache = shift_cache().lock().unwrap();
        if let Some(hit) = cache.get(&key) {
            return hit.clone();
        }
    }
    let mut bucket: BTreeMap<Partition, Rat> = BTreeMap::new();
    for eta in distinct_permutations(lam, n) {
        // Expand prod_i (x_i + 1)^{eta_i} over sub-exponents.
        let mut stack: Vec<(usize, Vec<u32>, Rat)> = vec![(0, Vec::new(), Rat::one())];
        while let Some((i, exps, coef)) = stack.pop() {
            if i == n {
                *bucket
                    .entry(Partition::from_exponents(&exps))
                    .or_insert_with(Rat::zero) += coef;
                continue;
            }
            for b in 0..=eta[i] {
                let mut e2 = exps.clone();
                e2.push(b);
                stack.push((i + 1, e2, coef.clone() * binomial(eta[i], b)));
            }
        }
    }
    let mut table = ProductTable::new();
    for (nu, total) in bucket {
        if total.is_zero() {
            continue;
        }
        let orbit = nu.orbit_size(n);
        table.insert(nu, total / orbit);
    }
    shift_cache().lock().unwrap().insert(key, table.clone());
    table
}

type PartitionPairKey = (Partition, Partition, usize);

fn product_cache() -> &'static Mutex<HashMap<PartitionPairKey, ProductTable>> {
    static CACHE: std::sync::OnceLock<Mutex<HashMap<PartitionPairKey, ProductTable>>> =
        std::sync::OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn shift_cache() -> &'static Mutex<HashMap<(Partition, usize), ProductTable>> {
    static CACHE: std::sync::OnceLock<Mutex<HashMap<(Partition, usize), ProductTable>>> =
        std::sync::OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn schur_cache() -> &'static Mutex<HashMap<(Partition, usize), BTreeMap<Partition, Rat>>> {
    static CACHE: std::sync::OnceLock<Mutex<HashMap<(Partition, usize), BTreeMap<Partition, Rat>>>> =
        std::sync::OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Named bases for expansions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    M,
    E,
    P,
    S,
    /// Jack basis with the named parameter.
    JackP(String),
    MacP,
}

impl Basis {
    pub fn name(&self) -> String {
        match self {
            Basis::M => "m".into(),
            Basis::E => "e".into(),
            Basis::P => "p".into(),
            Basis::S => "s".into(),
            Basis::JackP(p) => format!("jack({p})"),
            Basis::MacP => "mac".into(),
        }
    }
}

/// An expansion of a symmetric polynomial in a named basis.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisExpansion<F: Field> {
    pub basis: Basis,
    pub n: usize,
    pub terms: BTreeMap<Partition, F::Elem>,
}

/// Index set of a basis in degree d with n variables:
/// m, s: partitions of d with at most n parts;
/// e, p: partitions of d with no part exceeding n.
pub fn basis_index(basis: &Basis, d: u32, n: usize) -> Vec<Partition> {
    match basis {
        Basis::M | Basis::S | Basis::JackP(_) | Basis::MacP => enumerate(d, n),
        Basis::E | Basis::P => enumerate(d, d.max(1) as usize)
            .into_iter()
            .filter(|p| p.part(0) as usize <= n)
            .collect(),
    }
}

/// The m-expansion of one classical basis element, over the rationals.
pub fn basis_element_m(basis: &Basis, lam: &Partition, n: usize) -> SymPoly<QQ> {
    match basis {
        Basis::M => monomial(lam, n, &QQ).expect("valid index"),
        Basis::E => e_lambda(lam, n, &QQ),
        Basis::P => p_lambda(lam, n, &QQ),
        Basis::S => schur(lam, n, &QQ).expect("valid index"),
        _ => panic!("parameterized bases are expanded by their own modules"),
    }
}

/// Convert a homogeneous symmetric polynomial to the given classical basis
/// by an exact linear solve.
pub fn to_basis<F: Field>(f: &SymPoly<F>, basis: &Basis) -> Result<BasisExpansion<F>, Error> {
    if matches!(basis, Basis::M) {
        return Ok(BasisExpansion {
            basis: basis.clone(),
            n: f.nvars(),
            terms: f.coeffs.clone(),
        });
    }
    if !f.is_homogeneous() {
        return Err(Error::Precondition(
            "basis conversion needs homogeneous input".into(),
        ));
    }
    let n = f.nvars();
    let mut terms = BTreeMap::new();
    if f.is_zero() {
        return Ok(BasisExpansion { basis: basis.clone(), n, terms });
    }
    let d = f.degree().unwrap();
    let idx = basis_index(basis, d, n);
    let row_index = enumerate(d, n);
    let cols: Vec<SymPoly<QQ>> = idx.iter().map(|lam| basis_element_m(basis, lam, n)).collect();
    let matrix: Vec<Vec<Rat>> = row_index
        .iter()
        .map(|row| cols.iter().map(|c| c.coeff(row)).collect())
        .collect();
    let rhs: Vec<F::Elem> = row_index.iter().map(|row| f.coeff(row)).collect();
    let sol = solve_rational_system(&matrix, &rhs, f.field())?;
    for (lam, c) in idx.into_iter().zip(sol) {
        if !f.field().is_zero(&c) {
            terms.insert(lam, c);
        }
    }
    Ok(BasisExpansion { basis: basis.clone(), n, terms })
}

/// Re-expand a basis expansion into the monomial basis.
pub fn from_basis<F: Field>(exp: &BasisExpansion<F>, field: &F) -> SymPoly<F> {
    let mut acc = SymPoly::zero(exp.n, field);
    for (lam, c) in &exp.terms {
        let m = basis_element_m(&exp.basis, lam, exp.n);
        let lifted = m.map_scalars(field, |r| field.from_rat(r));
        acc = acc.add(&lifted.scale(c));
    }
    acc
}

/// Solve A x = b exactly, A rational and b in the scalar field, allowing
/// redundant consistent rows; errors on inconsistency.
pub fn solve_rational_system<F: Field>(
    a: &[Vec<Rat>],
    b: &[F::Elem],
    field: &F,
) -> Result<Vec<F::Elem>, Error> {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut rhs: Vec<F::Elem> = b.to_vec();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut used = vec![false; rows];
    for c in 0..cols {
        let mut piv = None;
        for r in 0..rows {
            if !used[r] && !m[r][c].is_zero() {
                piv = Some(r);
                break;
            }
        }
        let Some(p) = piv else {
            continue;
        };
        used[p] = true;
        pivot_of_col[c] = Some(p);
        let inv = m[p][c].clone().recip();
        for cc in 0..cols {
            m[p][cc] = m[p][cc].clone() * inv.clone();
        }
        rhs[p] = field.mul_rat(&rhs[p], &inv);
        for r in 0..rows {
            if r != p && !m[r][c].is_zero() {
                let factor = m[r][c].clone();
                for cc in 0..cols {
                    let delta = m[p][cc].clone() * factor.clone();
                    m[r][cc] = m[r][cc].clone() - delta;
                }
                let delta = field.mul_rat(&rhs[p], &factor);
                rhs[r] = field.sub(&rhs[r], &delta);
            }
        }
    }
    for r in 0..rows {
        if !used[r] && !field.is_zero(&rhs[r]) {
            return Err(Error::Precondition("inconsistent linear system".into()));
        }
    }
    let mut out = Vec::with_capacity(cols);
    for c in 0..cols {
        match pivot_of_col[c] {
            Some(p) => out.push(rhs[p].clone()),
            None => out.push(field.zero()),
        }
    }
    Ok(out)
}

/// z_lambda = prod_i i^{m_i} m_i!, the cycle-type symmetrizer order.
pub fn z_lambda(lam: &Partition) -> Rat {
    let mut acc: Rat = Rat::one();
    let mut mult: HashMap<u32, u32> = HashMap::new();
    for &p in lam.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (part, m) in mult {
        for _ in 0..m {
            acc *= Rat::from_integer(part.into());
        }
        acc *= crate::rat::factorial(m);
    }
    acc
}

/// Result of dividing a two-variable symmetric polynomial by (x1 - x2)^2.
pub enum VandermondeQuotient<F: Field> {
    Quotient(BasisExpansion<F>),
    NotDivisible {
        /// Value at a point with equal coordinates witnessing the nonzero
        /// remainder.
        remainder_witness: F::Elem,
    },
}

pub fn divide_by_vandermonde_sq<F: Field>(f: &SymPoly<F>) -> Result<VandermondeQuotient<F>, Error> {
    let field = f.field().clone();
    if f.nvars() != 2 {
        return Err(Error::Precondition(
            "Vandermonde-square division is a two-variable operation".into(),
        ));
    }
    if f.is_zero() {
        return Ok(VandermondeQuotient::Quotient(BasisExpansion {
            basis: Basis::S,
            n: 2,
            terms: BTreeMap::new(),
        }));
    }
    let one = field.one();
    let witness_point = [one.clone(), one];
    let mut parts: BTreeMap<Partition, F::Elem> = BTreeMap::new();
    for (_d, comp) in f.homogeneous_components() {
        match divide_component(&comp) {
            Some(q) => {
                let exp = to_basis(&q, &Basis::S)?;
                for (lam, c) in exp.terms {
                    parts.insert(lam, c);
                }
            }
            None => {
                let w = f.eval(&witness_point);
                return Ok(VandermondeQuotient::NotDivisible { remainder_witness: w });
            }
        }
    }
    Ok(VandermondeQuotient::Quotient(BasisExpansion { basis: Basis::S, n: 2, terms: parts }))
}

fn divide_component<F: Field>(f: &SymPoly<F>) -> Option<SymPoly<F>> {
    let field = f.field().clone();
    let mut dense: BTreeMap<(u32, u32), F::Elem> = BTreeMap::new();
    for (lam, c) in f.terms() {
        let a = lam.part(0);
        let b = lam.part(1);
        dense.insert((a, b), c.clone());
        if a != b {
            dense.insert((b, a), c.clone());
        }
    }
    for _ in 0..2 {
        dense = divide_linear(&dense, &field)?;
    }
    let mut out = SymPoly::zero(2, &field);
    for ((a, b), c) in dense {
        if a < b {
            continue;
        }
        let lam = Partition::from_exponents(&[a, b]);
        out.set_coeff(lam, c);
    }
    Some(out)
}

/// Divide a bivariate polynomial by (x1 - x2); None when not divisible.
fn divide_linear<F: Field>(
    dense: &BTreeMap<(u32, u32), F::Elem>,
    field: &F,
) -> Option<BTreeMap<(u32, u32), F::Elem>> {
    let mut rem = dense.clone();
    let mut quot: BTreeMap<(u32, u32), F::Elem> = BTreeMap::new();
    loop {
        let Some((&(a, b), _)) = rem.iter().next_back() else {
            return Some(quot);
        };
        if a == 0 {
            return None;
        }
        let c = rem.get(&(a, b)).unwrap().clone();
        let qd = (a - 1, b);
        let cur = quot.get(&qd).cloned().unwrap_or_else(|| field.zero());
        quot.insert(qd, field.add(&cur, &c));
        sub_term(&mut rem, (a, b), &c, field);
        let neg = field.neg(&c);
        sub_term(&mut rem, (a - 1, b + 1), &neg, field);
    }
}

fn sub_term<F: Field>(
    map: &mut BTreeMap<(u32, u32), F::Elem>,
    key: (u32, u32),
    c: &F::Elem,
    field: &F,
) {
    let cur = map.get(&key).cloned().unwrap_or_else(|| field.zero());
    let next = field.sub(&cur, c);
    if field.is_zero(&next) {
        map.remove(&key);
    } else {
        map.insert(key, next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts)
    }

    #[test]
    fn monomial_basics() {
        let m11 = monomial(&p(&[1, 1]), 2, &QQ).unwrap();
        assert_eq!(m11.eval_ones(), rat_int(1));
        let m21 = monomial(&p(&[2, 1]), 3, &QQ).unwrap();
        assert_eq!(m21.eval_ones(), rat_int(6));
        let nm = normalized_monomial(&p(&[2]), 2, &QQ).unwrap();
        assert_eq!(nm.eval(&[rat_int(4), rat_int(1)]), rat(17, 2));
        assert!(monomial(&p(&[1, 1, 1]), 2, &QQ).is_err());
    }

    #[test]
    fn products() {
        let m1 = monomial(&p(&[1]), 2, &QQ).unwrap();
        let sq = m1.mul(&m1);
        assert_eq!(sq.coeff(&p(&[2])), rat_int(1));
        assert_eq!(sq.coeff(&p(&[1, 1])), rat_int(2));
        let e2 = elementary(2, 2, &QQ);
        assert_eq!(e2.coeff(&p(&[1, 1])), rat_int(1));
        assert_eq!(e2.eval(&[rat_int(1), rat_int(1)]), rat_int(1));
        assert!(elementary(3, 2, &QQ).is_zero());
    }

    #[test]
    fn powersum_ones() {
        for k in 1..=4 {
            for n in 1..=4 {
                let pk = powersum(k, n, &QQ);
                assert_eq!(pk.eval_ones(), rat_int(n as i64));
            }
        }
    }

    #[test]
    fn schur_small() {
        let s3 = schur(&p(&[3]), 3, &QQ).unwrap();
        assert_eq!(s3.coeff(&p(&[3])), rat_int(1));
        assert_eq!(s3.coeff(&p(&[2, 1])), rat_int(1));
        assert_eq!(s3.coeff(&p(&[1, 1, 1])), rat_int(1));
        let s111 = schur(&p(&[1, 1, 1]), 3, &QQ).unwrap();
        assert_eq!(s111, elementary(3, 3, &QQ));
        let s21 = schur(&p(&[2, 1]), 2, &QQ).unwrap();
        assert_eq!(s21.coeff(&p(&[2, 1])), rat_int(1));
        assert_eq!(s21.eval(&[rat_int(2), rat_int(1)]), rat_int(6));
    }

    #[test]
    fn shift_ones_examples() {
        let m1 = monomial(&p(&[1]), 2, &QQ).unwrap();
        let sh = m1.shift_ones();
        assert_eq!(sh.coeff(&p(&[1])), rat_int(1));
        assert_eq!(sh.coeff(&Partition::empty()), rat_int(2));
        let e2 = elementary(2, 2, &QQ);
        let sh = e2.shift_ones();
        assert_eq!(sh.coeff(&p(&[1, 1])), rat_int(1));
        assert_eq!(sh.coeff(&p(&[1])), rat_int(1));
        assert_eq!(sh.coeff(&Partition::empty()), rat_int(1));
        let p2 = powersum(2, 2, &QQ);
        let sh = p2.shift_ones();
        assert_eq!(sh.coeff(&p(&[2])), rat_int(1));
        assert_eq!(sh.coeff(&p(&[1])), rat_int(2));
        assert_eq!(sh.coeff(&Partition::empty()), rat_int(2));
    }

    #[test]
    fn to_basis_round_trips() {
        let m11 = monomial(&p(&[1, 1]), 2, &QQ).unwrap();
        let exp = to_basis(&m11, &Basis::P).unwrap();
        assert_eq!(exp.terms[&p(&[1, 1])], rat(1, 2));
        assert_eq!(exp.terms[&p(&[2])], rat(-1, 2));
        let back = from_basis(&exp, &QQ);
        assert_eq!(back, m11);
        let e2 = elementary(2, 2, &QQ);
        let exp = to_basis(&e2, &Basis::P).unwrap();
        assert_eq!(exp.terms[&p(&[1, 1])], rat(1, 2));
        assert_eq!(exp.terms[&p(&[2])], rat(-1, 2));
        let p2 = powersum(2, 2, &QQ);
        let exp = to_basis(&p2, &Basis::M).unwrap();
        assert_eq!(exp.terms.len(), 1);
    }

    #[test]
    fn vandermonde_division() {
        let a = normalized_monomial(&p(&[4, 1]), 2, &QQ).unwrap();
        let b = normalized_monomial(&p(&[3, 2]), 2, &QQ).unwrap();
        let f = a.sub(&b).scale_rat(&rat_int(2));
        match divide_by_vandermonde_sq(&f).unwrap() {
            VandermondeQuotient::Quotient(exp) => {
                assert_eq!(exp.terms.len(), 1);
                assert_eq!(exp.terms[&p(&[2, 1])], rat_int(1));
            }
            _ => panic!("expected divisible"),
        }
        let m2 = monomial(&p(&[2]), 2, &QQ).unwrap();
        match divide_by_vandermonde_sq(&m2).unwrap() {
            VandermondeQuotient::NotDivisible { remainder_witness } => {
                assert!(!remainder_witness.is_zero());
            }
            _ => panic!("expected not divisible"),
        }
    }

    #[test]
    fn z_lambda_values() {
        assert_eq!(z_lambda(&p(&[1, 1])), rat_int(2));
        assert_eq!(z_lambda(&p(&[2])), rat_int(2));
        assert_eq!(z_lambda(&p(&[2, 1])), rat_int(2));
        assert_eq!(z_lambda(&p(&[3, 3, 1])), rat_int(18));
    }
}
