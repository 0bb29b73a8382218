use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Exps = SmallVec<[u32; 6]>;

/// A monomial `x_1^{e_1} ... x_n^{e_n}` over a fixed number of variables.
///
/// Ordered graded-lexicographically: lower degree first, and within a degree
/// the larger power of `x_1` comes first (`x^2 < xy < y^2`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn new(exps: impl Into<Vec<u32>>) -> Self {
        Monomial {
            exps: Exps::from_vec(exps.into()),
        }
    }

    pub(crate) fn from_exps(exps: Exps) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, n),
        }
    }

    /// `x_i^e`, with `i` counted from 1.
    pub fn var_power(n: usize, i: usize, e: u32) -> Self {
        let mut m = Monomial::one(n);
        m.exps[i - 1] = e;
        m
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i`, with `i` counted from 1.
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Copy with the exponent of `x_i` replaced.
    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.exps[i - 1] = e;
        m
    }

    /// `m(u)`: the largest index of a variable dividing `u`.
    pub fn m_index(&self) -> Result<usize> {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map(|p| p + 1)
            .ok_or(Error::UnitMonomial)
    }

    /// Indices (from 1) of the variables that divide this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
    }

    /// Same monomial read in the first `k` variables. Panics if a later
    /// variable divides it.
    pub fn restrict(&self, k: usize) -> Monomial {
        assert!(self.exps[k..].iter().all(|&e| e == 0));
        Monomial {
            exps: self.exps[..k].iter().copied().collect(),
        }
    }

    /// Renders with the given variable names, `1` for the unit monomial.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (name, &e) in names.iter().zip(&self.exps) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// All monomials of degree `d` whose exponents are bounded by `bounds`,
/// visited in lexicographically decreasing order of exponent vectors.
pub fn bounded_of_degree(bounds: &[u32], d: u64) -> Vec<Monomial> {
    fn rec(bounds: &[u32], suffix_cap: &[u64], d: u64, cur: &mut Exps, out: &mut Vec<Monomial>) {
        let k = cur.len();
        if k == bounds.len() {
            if d == 0 {
                out.push(Monomial::from_exps(cur.clone()));
            }
            return;
        }
        let rest_cap = suffix_cap[k + 1];
        let hi = d.min(bounds[k] as u64);
        let lo = d.saturating_sub(rest_cap);
        if lo > hi {
            return;
        }
        for e in (lo..=hi).rev() {
            cur.push(e as u32);
            rec(bounds, suffix_cap, d - e, cur, out);
            cur.pop();
        }
    }
    let mut suffix_cap = vec![0u64; bounds.len() + 1];
    for i in (0..bounds.len()).rev() {
        suffix_cap[i] = suffix_cap[i + 1].saturating_add(bounds[i] as u64);
    }
    let mut out = Vec::new();
    rec(bounds, &suffix_cap, d, &mut Exps::new(), &mut out);
    out
}

/// All monomials of degree `d` in `n` variables.
pub fn of_degree(n: usize, d: u64) -> Vec<Monomial> {
    let cap = u32::try_from(d).unwrap_or(u32::MAX);
    bounded_of_degree(&vec![cap; n], d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn graded_lex_order() {
        let x2 = Monomial::new([2, 0]);
        let xy = Monomial::new([1, 1]);
        let y2 = Monomial::new([0, 2]);
        let x = Monomial::new([1, 0]);
        let mut v = vec![y2.clone(), xy.clone(), x.clone(), x2.clone()];
        v.sort();
        assert_eq!(v, vec![x, x2, xy, y2]);
    }

    #[test]
    fn m_index_examples() {
        assert_eq!(Monomial::new([2, 0, 3]).m_index().unwrap(), 3);
        assert_eq!(Monomial::new([5, 0, 0]).m_index().unwrap(), 1);
        assert_eq!(Monomial::one(3).m_index(), Err(Error::UnitMonomial));
    }

    #[test]
    fn degree_enumeration_counts() {
        for n in 1..5usize {
            for d in 0..7u64 {
                let all = of_degree(n, d);
                assert_eq!(all.len() as u64, binom(d + n as u64 - 1, n as u64 - 1));
                assert!(all.iter().all(|m| m.degree() == d));
            }
        }
        let boxed = bounded_of_degree(&[1, 2], 2);
        assert_eq!(boxed, vec![Monomial::new([1, 1]), Monomial::new([0, 2])]);
    }

    #[test]
    fn arithmetic() {
        let a = Monomial::new([2, 0, 1]);
        let b = Monomial::new([1, 3, 0]);
        assert_eq!(a.lcm(&b), Monomial::new([2, 3, 1]));
        assert_eq!(a.gcd(&b), Monomial::new([1, 0, 0]));
        assert_eq!(a.mul(&b), Monomial::new([3, 3, 1]));
        assert_eq!(a.colon(&b), Monomial::new([1, 0, 1]));
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(a.render(&["x".into(), "y".into(), "z".into()]), "x^2*z");
    }
}
