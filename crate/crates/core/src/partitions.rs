//! Integer partitions, diagram statistics, and the three partial orders:
//! containment, weak majorization, majorization.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::rat::{factorial, Rat};

/// A partition: weakly decreasing positive parts, trailing zeros implicit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: &[u32]) -> Self {
        let mut v: Vec<u32> = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        assert!(v.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sort an arbitrary exponent vector into a partition.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut v: Vec<u32> = exps.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        while v.last() == Some(&0) {
            v.pop();
        }
        Partition(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(self.length() <= n, "partition longer than ambient n");
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }

    /// Conjugate partition: column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let max = self.0[0] as usize;
        let mut cols = vec![0u32; max];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Componentwise containment, padded to `n`.
    pub fn contains(&self, other: &Partition, n: usize) -> bool {
        let a = self.padded(n);
        let b = other.padded(n);
        a.iter().zip(&b).all(|(x, y)| x >= y)
    }

    /// Prefix-sum dominance, padded to `n`.
    pub fn weakly_majorizes(&self, other: &Partition, n: usize) -> bool {
        let a = self.padded(n);
        let b = other.padded(n);
        let mut sa = 0i64;
        let mut sb = 0i64;
        for k in 0..n {
            sa += a[k] as i64;
            sb += b[k] as i64;
            if sa < sb {
                return false;
            }
        }
        true
    }

    /// Weak majorization plus equal size.
    pub fn majorizes(&self, other: &Partition, n: usize) -> bool {
        self.size() == other.size() && self.weakly_majorizes(other, n)
    }

    /// Canonical comma form, `0` for the empty partition.
    pub fn text(&self) -> String {
        if self.0.is_empty() {
            "0".to_string()
        } else {
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Parse comma form (`3,1`), exponent form (`2^2 1^3`), `0`, or `()`.
    pub fn parse(s: &str) -> Result<Partition, Error> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "()" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, Error> = if s.contains('^') || s.contains(' ') {
            let mut out = Vec::new();
            for chunk in s.split_whitespace() {
                let (base, mult) = match chunk.split_once('^') {
                    Some((b, m)) => (
                        b.parse::<u32>().map_err(|_| bad(chunk))?,
                        m.parse::<u32>().map_err(|_| bad(chunk))?,
                    ),
                    None => (chunk.parse::<u32>().map_err(|_| bad(chunk))?, 1),
                };
                for _ in 0..mult {
                    out.push(base);
                }
            }
            Ok(out)
        } else {
            s.split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| bad(p)))
                .collect()
        };
        let mut parts = parts?;
        parts.retain(|&p| p > 0);
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("parts not weakly decreasing: {s}")));
        }
        Ok(Partition(parts))
    }

    /// Multiply the diagram rows: arm of a cell.
    pub fn arm(&self, cell: Cell) -> Result<u32, Error> {
        self.check_cell(cell)?;
        Ok(self.0[cell.row - 1] - cell.col as u32)
    }

    pub fn leg(&self, cell: Cell) -> Result<u32, Error> {
        self.check_cell(cell)?;
        Ok(self.conjugate().0[cell.col - 1] - cell.row as u32)
    }

    pub fn coarm(&self, cell: Cell) -> Result<u32, Error> {
        self.check_cell(cell)?;
        Ok(cell.col as u32 - 1)
    }

    pub fn coleg(&self, cell: Cell) -> Result<u32, Error> {
        self.check_cell(cell)?;
        Ok(cell.row as u32 - 1)
    }

    fn check_cell(&self, cell: Cell) -> Result<(), Error> {
        if cell.row == 0 || cell.col == 0 || cell.row > self.length() || cell.col as u32 > self.0[cell.row - 1] {
            return Err(Error::Precondition(format!(
                "cell ({}, {}) outside diagram of {}",
                cell.row,
                cell.col,
                self.text()
            )));
        }
        Ok(())
    }

    /// All cells of the diagram, row by row.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            for j in 1..=p as usize {
                out.push(Cell { row: i + 1, col: j });
            }
        }
        out
    }

    /// Number of distinct permutations of the parts padded to length `n`;
    /// this is m_lambda evaluated at the all-ones point.
    pub fn orbit_size(&self, n: usize) -> Rat {
        assert!(self.length() <= n);
        let mut result = factorial(n as u32);
        let mut run = 1u32;
        let padded = self.padded(n);
        for i in 1..=n {
            if i < n && padded[i] == padded[i - 1] {
                run += 1;
            } else {
                result /= factorial(run);
                run = 1;
            }
        }
        result
    }
}

fn bad(chunk: &str) -> Error {
    Error::Parse(format!("bad partition component '{chunk}'"))
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.text())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.text())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Partition::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A cell (row, col) of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// Raising operator R_ij: move one unit from row j to row i < j (1-based).
pub fn raising(mu: &Partition, i: usize, j: usize) -> Result<Partition, Error> {
    if i == 0 || j == 0 || i >= j {
        return Err(Error::Precondition("raising needs 1 <= i < j".into()));
    }
    if mu.part(j - 1) == 0 {
        return Err(Error::Precondition("raising would create a negative part".into()));
    }
    let len = mu.length().max(i).max(j);
    let mut v = mu.padded(len);
    v[i - 1] += 1;
    v[j - 1] -= 1;
    if !v.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::Precondition("raising result is not a partition".into()));
    }
    Ok(Partition::new(&v))
}

/// All partitions of `d` with at most `n` parts, in descending lex order.
pub fn enumerate(d: u32, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_parts(d, n, d, &mut current, &mut out);
    out
}

fn gen_parts(remaining: u32, slots: usize, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = remaining.min(max);
    let lo = remaining.div_ceil(slots as u32);
    let mut p = hi;
    while p >= lo && p >= 1 {
        current.push(p);
        gen_parts(remaining - p, slots - 1, p, current, out);
        current.pop();
        if p == 1 {
            break;
        }
        p -= 1;
    }
}

/// Hasse edges (lambda covers mu) of the majorization order on partitions of
/// `d` with at most `n` parts. A cover moves one unit from row i to row j
/// where either j = i+1 and the rows differ by at least 2, or the rows differ
/// by exactly 2 and every row strictly between equals their mean.
pub fn adjacent_pairs(d: u32, n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for lam in enumerate(d, n) {
        for mu in covers_of(&lam, n) {
            out.push((lam.clone(), mu));
        }
    }
    out
}

/// Partitions covered by `lam` in the majorization order within `n` rows.
pub fn covers_of(lam: &Partition, n: usize) -> Vec<Partition> {
    let v = lam.padded(n);
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let edge = if j == i + 1 {
                v[i] >= v[j] + 2
            } else {
                v[i] == v[j] + 2 && (i + 1..j).all(|k| v[k] == v[j] + 1)
            };
            if edge {
                let mut w = v.clone();
                w[i] -= 1;
                w[j] += 1;
                out.push(Partition::new(&w));
            }
        }
    }
    out
}

/// Recover (i, j) with lambda = R_ij(mu), 1-based, when one exists.
pub fn find_raising_indices(lam: &Partition, mu: &Partition, n: usize) -> Option<(usize, usize)> {
    let a = lam.padded(n);
    let b = mu.padded(n);
    let mut up = None;
    let mut down = None;
    for k in 0..n {
        if a[k] == b[k] + 1 {
            if up.is_some() {
                return None;
            }
            up = Some(k + 1);
        } else if a[k] + 1 == b[k] {
            if down.is_some() {
                return None;
            }
            down = Some(k + 1);
        } else if a[k] != b[k] {
            return None;
        }
    }
    match (up, down) {
        (Some(i), Some(j)) if i < j => Some((i, j)),
        _ => None,
    }
}

/// Some nu with lambda containing nu and nu majorizing mu, given that lambda
/// weakly majorizes mu. Shrinks lambda from the last row upward, which makes
/// the result lexicographically largest among valid choices.
pub fn intermediate(lam: &Partition, mu: &Partition, n: usize) -> Result<Partition, Error> {
    if !lam.weakly_majorizes(mu, n) {
        return Err(Error::Precondition(format!(
            "{} does not weakly majorize {}",
            lam.text(),
            mu.text()
        )));
    }
    let a = lam.padded(n);
    let b = mu.padded(n);
    let mut nu = a.clone();
    let mut excess = (lam.size() - mu.size()) as i64;
    for i in (0..n).rev() {
        if excess == 0 {
            break;
        }
        // Smallest surplus of prefix sums over mu at positions >= i.
        let mut surplus = i64::MAX;
        let mut pn: i64 = nu.iter().take(i).map(|&x| x as i64).sum();
        let mut pm: i64 = b.iter().take(i).map(|&x| x as i64).sum();
        for j in i..n {
            pn += nu[j] as i64;
            pm += b[j] as i64;
            surplus = surplus.min(pn - pm);
        }
        let floor = if i + 1 < n { nu[i + 1] as i64 } else { 0 };
        let delta = excess.min(surplus).min(nu[i] as i64 - floor);
        if delta > 0 {
            nu[i] -= delta as u32;
            excess -= delta;
        }
    }
    let nu = Partition::new(&nu);
    debug_assert!(lam.contains(&nu, n) && nu.majorizes(mu, n));
    Ok(nu)
}

/// All distinct permutations of the parts padded to length `n`.
pub fn distinct_permutations(lam: &Partition, n: usize) -> Vec<Vec<u32>> {
    let mut v = lam.padded(n);
    v.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(v.clone());
        if !next_permutation(&mut v) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 2, 1, 1, 1]).conjugate(), p(&[5, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn orders() {
        let k = 3;
        let lam = p(&[k + 1, k - 1]);
        let mu = p(&[k, k]);
        assert!(lam.majorizes(&mu, 2));
        assert!(lam.majorizes(&lam, 2));
        assert!(lam.contains(&lam, 2));
        assert!(lam.weakly_majorizes(&lam, 2));
        let a = p(&[2, 2]);
        let b = p(&[3, 1]);
        assert!(!a.majorizes(&b, 2));
        assert!(!a.contains(&b, 2));
        assert!(!a.weakly_majorizes(&b, 2));
        assert!(b.majorizes(&a, 2));
    }

    #[test]
    fn raising_examples() {
        assert_eq!(raising(&p(&[2, 2]), 1, 2).unwrap(), p(&[3, 1]));
        assert_eq!(raising(&p(&[1, 1]), 1, 2).unwrap(), p(&[2]));
        assert_eq!(raising(&p(&[3, 2, 2]), 2, 3).unwrap(), p(&[3, 3, 1]));
        assert!(raising(&p(&[2, 1]), 2, 1).is_err());
        // (3,3) -> add at 1, remove at 2 gives (4,2): fine; but removing from
        // an empty row fails.
        assert!(raising(&p(&[3]), 1, 2).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let e = enumerate(4, 2);
        assert_eq!(e, vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(enumerate(0, 3), vec![Partition::empty()]);
        assert_eq!(enumerate(5, 1), vec![p(&[5])]);
    }

    #[test]
    fn adjacent_examples() {
        let d4 = adjacent_pairs(4, 2);
        assert_eq!(d4, vec![(p(&[4]), p(&[3, 1])), (p(&[3, 1]), p(&[2, 2]))]);
        let d2 = adjacent_pairs(2, 2);
        assert_eq!(d2, vec![(p(&[2]), p(&[1, 1]))]);
    }

    /// Brute-force transitive reduction of the majorization order.
    fn hasse_brute(d: u32, n: usize) -> Vec<(Partition, Partition)> {
        let all = enumerate(d, n);
        let mut out = Vec::new();
        for a in &all {
            for b in &all {
                if a == b || !a.majorizes(b, n) {
                    continue;
                }
                let between = all.iter().any(|c| {
                    c != a && c != b && a.majorizes(c, n) && c.majorizes(b, n)
                });
                if !between {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn adjacent_matches_transitive_reduction() {
        for d in 2..=8 {
            for n in 2..=6 {
                let mut mine = adjacent_pairs(d, n);
                mine.sort();
                assert_eq!(mine, hasse_brute(d, n), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn majorization_is_partial_order() {
        for d in 1..=8 {
            let all = enumerate(d, 6);
            for a in &all {
                assert!(a.majorizes(a, 6));
                for b in &all {
                    if a.majorizes(b, 6) && b.majorizes(a, 6) {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if a.majorizes(b, 6) && b.majorizes(c, 6) {
                            assert!(a.majorizes(c, 6));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn intermediate_valid_for_all_weak_pairs() {
        for d1 in 0..=8u32 {
            for d2 in 0..=d1 {
                let n = 4;
                for lam in enumerate(d1, n) {
                    for mu in enumerate(d2, n) {
                        if lam.weakly_majorizes(&mu, n) {
                            let nu = intermediate(&lam, &mu, n).unwrap();
                            assert!(lam.contains(&nu, n));
                            assert!(nu.majorizes(&mu, n));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn intermediate_examples() {
        // Lexicographically largest valid choice: (2,1) beats (1,1,1).
        let nu = intermediate(&p(&[2, 1, 1]), &p(&[1, 1, 1]), 3).unwrap();
        assert_eq!(nu, p(&[2, 1]));
        assert!(p(&[2, 1, 1]).contains(&nu, 3) && nu.majorizes(&p(&[1, 1, 1]), 3));
        let lam = p(&[3, 2]);
        assert_eq!(intermediate(&lam, &lam, 2).unwrap(), lam);
        // (3,2) weakly majorizes (2,1); the greedy result is (3,0).
        let nu = intermediate(&p(&[3, 2]), &p(&[2, 1]), 2).unwrap();
        assert_eq!(nu, p(&[3]));
        assert!(intermediate(&p(&[1, 1]), &p(&[3]), 2).is_err());
    }

    #[test]
    fn reversed_weak_majorization_characterizes_majorization() {
        // lambda majorizes mu iff lambda weakly majorizes mu and the reversed
        // negated prefix sums dominate as well.
        let n = 5;
        for d in 1..=8u32 {
            let all = enumerate(d, n);
            for a in &all {
                for b in &all {
                    let rev_ok = {
                        let ar = {
                            let mut v = a.padded(n);
                            v.reverse();
                            v
                        };
                        let br = {
                            let mut v = b.padded(n);
                            v.reverse();
                            v
                        };
                        let mut sa = 0i64;
                        let mut sb = 0i64;
                        let mut ok = true;
                        for k in 0..n {
                            sa -= ar[k] as i64;
                            sb -= br[k] as i64;
                            if sa < sb {
                                ok = false;
                                break;
                            }
                        }
                        ok
                    };
                    assert_eq!(
                        a.majorizes(b, n),
                        a.weakly_majorizes(b, n) && rev_ok,
                        "{a:?} vs {b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn conjugate_involution() {
        for d in 0..=12u32 {
            for lam in enumerate(d, d.max(1) as usize) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn arm_leg_examples() {
        let lam = p(&[3, 1]);
        let s = Cell { row: 1, col: 1 };
        assert_eq!(lam.arm(s).unwrap(), 2);
        assert_eq!(lam.leg(s).unwrap(), 1);
        let single = p(&[1]);
        let c = Cell { row: 1, col: 1 };
        assert_eq!(single.arm(c).unwrap(), 0);
        assert_eq!(single.leg(c).unwrap(), 0);
        assert!(lam.arm(Cell { row: 2, col: 2 }).is_err());
    }

    #[test]
    fn parse_print() {
        assert_eq!(Partition::parse("3,1").unwrap(), p(&[3, 1]));
        assert_eq!(Partition::parse("2^2 1^3").unwrap(), p(&[2, 2, 1, 1, 1]));
        assert_eq!(Partition::parse("0").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1]).text(), "3,1");
        assert_eq!(Partition::empty().text(), "0");
        assert!(Partition::parse("1,3").is_err());
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(p(&[2, 1]).orbit_size(3), crate::rat::rat_int(6));
        assert_eq!(p(&[1, 1]).orbit_size(2), crate::rat::rat_int(1));
        assert_eq!(p(&[2]).orbit_size(2), crate::rat::rat_int(2));
    }

    #[test]
    fn distinct_permutation_count() {
        let perms = distinct_permutations(&p(&[2, 1]), 3);
        assert_eq!(perms.len(), 6);
        let perms = distinct_permutations(&p(&[1, 1]), 2);
        assert_eq!(perms, vec![vec![1, 1]]);
    }
}
