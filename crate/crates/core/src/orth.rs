//! Hall inner products through the power-sum basis, and Gram-Schmidt
//! construction of dominance-triangular orthogonal bases.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::field::{Field, FracField};
use crate::partitions::{enumerate, Partition};
use crate::rat::Rat;
use crate::ratfunc::RatFunc;
use crate::symfunc::{monomial, p_lambda, z_lambda, Basis, basis_index, SymPoly};
use crate::field::QQ;

/// For degree d in n variables: the matrix taking m-basis coordinate vectors
/// to p-basis coordinate vectors, together with the two index lists.
pub struct PowerConversion {
    pub m_index: Vec<Partition>,
    pub p_index: Vec<Partition>,
    /// m_to_p[row over p_index][col over m_index]
    pub m_to_p: Vec<Vec<Rat>>,
}

fn conversion_cache() -> &'static Mutex<HashMap<(u32, usize), Arc<PowerConversion>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize), Arc<PowerConversion>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn power_conversion(d: u32, n: usize) -> Arc<PowerConversion> {
    if let Some(hit) = conversion_cache().lock().unwrap().get(&(d, n)) {
        return hit.clone();
    }
    let m_index = enumerate(d, n);
    let p_index = basis_index(&Basis::P, d, n);
    assert_eq!(m_index.len(), p_index.len(), "basis index sets must match");
    let k = m_index.len();
    // A[row over m_index][col over p_index] = coeff of m_row in p_col.
    let mut a = vec![vec![Rat::zero(); k]; k];
    for (col, nu) in p_index.iter().enumerate() {
        let expansion = p_lambda(nu, n, &QQ);
        for (row, lam) in m_index.iter().enumerate() {
            a[row][col] = expansion.coeff(lam);
        }
    }
    let inv = invert(&a);
    let conv = Arc::new(PowerConversion { m_index, p_index, m_to_p: inv });
    conversion_cache()
        .lock()
        .unwrap()
        .insert((d, n), conv.clone());
    conv
}

fn invert(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let k = a.len();
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { Rat::from_integer(1.into()) } else { Rat::zero() })
                .collect()
        })
        .collect();
    for c in 0..k {
        let pivot = (c..k)
            .find(|&r| !m[r][c].is_zero())
            .expect("singular conversion matrix");
        m.swap(c, pivot);
        inv.swap(c, pivot);
        let d = m[c][c].clone().recip();
        for j in 0..k {
            m[c][j] = m[c][j].clone() * d.clone();
            inv[c][j] = inv[c][j].clone() * d.clone();
        }
        for r in 0..k {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..k {
                    let dm = m[c][j].clone() * f.clone();
                    m[r][j] = m[r][j].clone() - dm;
                    let di = inv[c][j].clone() * f.clone();
                    inv[r][j] = inv[r][j].clone() - di;
                }
            }
        }
    }
    inv
}

/// p-basis coordinates of a homogeneous symmetric polynomial.
pub fn p_coordinates(f: &SymPoly<FracField>) -> (Arc<PowerConversion>, Vec<RatFunc>) {
    let field = f.field().clone();
    let d = f.degree().expect("nonzero homogeneous input");
    let conv = power_conversion(d, f.nvars());
    let m_coords: Vec<RatFunc> = conv.m_index.iter().map(|lam| f.coeff(lam)).collect();
    let mut out = Vec::with_capacity(conv.p_index.len());
    for row in &conv.m_to_p {
        let mut acc = field.zero();
        for (c, coeff) in row.iter().enumerate() {
            if !coeff.is_zero() {
                acc = field.add(&acc, &field.mul_rat(&m_coords[c], coeff));
            }
        }
        out.push(acc);
    }
    (conv, out)
}

/// Hall-type inner product: <p_lam, p_mu> = delta * z_lam * weight(lam).
/// Inputs must be homogeneous of the same degree (or zero).
pub fn hall_inner(
    f: &SymPoly<FracField>,
    g: &SymPoly<FracField>,
    weight: &dyn Fn(&Partition) -> RatFunc,
) -> RatFunc {
    let field = f.field().clone();
    if f.is_zero() || g.is_zero() {
        return field.zero();
    }
    assert_eq!(f.degree(), g.degree(), "inner product needs equal degrees");
    let (conv, fc) = p_coordinates(f);
    let (_, gc) = p_coordinates(g);
    let mut acc = field.zero();
    for (i, nu) in conv.p_index.iter().enumerate() {
        if fc[i].is_zero() || gc[i].is_zero() {
            continue;
        }
        let w = weight(nu);
        let t = fc[i].mul(&gc[i]).mul(&w).scale(&z_lambda(nu));
        acc = acc.add(&t);
    }
    acc
}

/// Monic dominance-triangular orthogonal basis in degree d: Gram-Schmidt over
/// the monomial basis processed along a linear extension of dominance.
pub fn orthogonal_basis(
    d: u32,
    n: usize,
    field: &FracField,
    weight: &dyn Fn(&Partition) -> RatFunc,
) -> BTreeMap<Partition, SymPoly<FracField>> {
    let mut order = enumerate(d, n);
    order.reverse(); // ascending in dominance-compatible lex order
    let mut basis: Vec<(Partition, SymPoly<FracField>, RatFunc)> = Vec::new();
    for lam in order {
        let mut p = monomial(&lam, n, field).expect("valid index");
        for (_, q, norm) in &basis {
            let c = hall_inner(&p, q, weight);
            if !c.is_zero() {
                p = p.sub(&q.scale(&c.div(norm).expect("nonzero norm")));
            }
        }
        let norm = hall_inner(&p, &p, weight);
        assert!(!norm.is_zero(), "degenerate inner product");
        basis.push((lam, p, norm));
    }
    basis.into_iter().map(|(lam, p, _)| (lam, p)).collect()
}

/// Expand a homogeneous polynomial in a monic dominance-triangular basis by
/// back-substitution along descending lex order.
pub fn expand_in_triangular_basis(
    f: &SymPoly<FracField>,
    basis: &BTreeMap<Partition, SymPoly<FracField>>,
) -> BTreeMap<Partition, RatFunc> {
    let field = f.field().clone();
    let mut out = BTreeMap::new();
    if f.is_zero() {
        return out;
    }
    let d = f.degree().unwrap();
    let order = enumerate(d, f.nvars());
    let mut residual = f.clone();
    for lam in order {
        let c = residual.coeff(&lam);
        if !field.is_zero(&c) {
            let b = basis
                .get(&lam)
                .unwrap_or_else(|| panic!("basis missing {}", lam.text()));
            residual = residual.sub(&b.scale(&c));
            out.insert(lam, c);
        }
    }
    assert!(residual.is_zero(), "expansion left a residual");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::field_tau;
    use crate::poly::Poly;

    fn tau_weight(field: &FracField) -> impl Fn(&Partition) -> RatFunc + '_ {
        move |nu: &Partition| {
            let tau_pow = Poly::monomial(field.vars(), 0, nu.length() as u32, crate::rat::rat_one());
            RatFunc::new(Poly::one(field.vars()), tau_pow).unwrap()
        }
    }

    #[test]
    fn jack_degree_two() {
        let field = field_tau();
        let w = tau_weight(&field);
        let basis = orthogonal_basis(2, 2, &field, &w);
        let p2 = &basis[&Partition::new(&[2])];
        // P_(2) = m_(2) + (2 tau / (1 + tau)) m_(1,1)
        let c = p2.coeff(&Partition::new(&[1, 1]));
        assert_eq!(c.text(), "(2*tau^1)/(1 + tau^1)");
        let p11 = &basis[&Partition::new(&[1, 1])];
        assert_eq!(p11.num_terms(), 1);
        // Orthogonality
        assert!(hall_inner(p2, p11, &w).is_zero());
    }

    #[test]
    fn triangular_expansion_round_trip() {
        let field = field_tau();
        let w = tau_weight(&field);
        let basis = orthogonal_basis(3, 2, &field, &w);
        let f = basis[&Partition::new(&[3])]
            .scale(&field.var("tau"))
            .add(&basis[&Partition::new(&[2, 1])]);
        let coeffs = expand_in_triangular_basis(&f, &basis);
        assert_eq!(coeffs[&Partition::new(&[3])], field.var("tau"));
        assert_eq!(coeffs[&Partition::new(&[2, 1])], field.one());
    }
}
