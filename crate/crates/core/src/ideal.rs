//! Monomial ideals stored by their minimal generating set.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{self, Monomial};

/// A monomial ideal in `k[x_1, ..., x_n]`, held as its minimal generators
/// `G(I)` in graded-lex order.
///
/// No generators means the zero ideal; the single generator `1` means the
/// unit ideal. Equality is structural on `(n, G(I))`; variable names are
/// display metadata only.
#[derive(Clone)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
    names: Option<Vec<String>>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl std::hash::Hash for MonomialIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.gens.hash(state);
    }
}

/// Reduces `gens` to the divisibility antichain generating the same ideal.
pub fn minimalize(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut all: Vec<Monomial> = Vec::new();
    for g in gens {
        if g.n() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: g.n(),
            });
        }
        all.push(g);
    }
    Ok(MonomialIdeal::from_checked(n, all))
}

impl MonomialIdeal {
    /// Builds from generators already known to live in `n` variables.
    pub(crate) fn from_checked(n: usize, mut all: Vec<Monomial>) -> MonomialIdeal {
        all.sort();
        all.dedup();
        if all.first().is_some_and(Monomial::is_one) {
            return MonomialIdeal::unit(n);
        }
        // Distinct monomials of equal degree never divide each other, so each
        // candidate only needs checking against strictly lower degrees.
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            let d = m.degree();
            if !kept
                .iter()
                .take_while(|k| k.degree() < d)
                .any(|k| k.divides(&m))
            {
                kept.push(m);
            }
        }
        MonomialIdeal {
            n,
            gens: kept,
            names: None,
        }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
            names: None,
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
            names: None,
        }
    }

    /// The irreducible ideal `(x_i^{b_i} : b_i >= 1)`.
    pub fn pure_powers(b: &[u32]) -> Self {
        let n = b.len();
        let gens = b
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| Monomial::var_power(n, i + 1, e))
            .collect();
        MonomialIdeal::from_checked(n, gens)
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Self {
        MonomialIdeal::pure_powers(&vec![1; n])
    }

    pub fn with_names(mut self, names: Option<Vec<String>>) -> Self {
        if let Some(v) = &names {
            assert_eq!(v.len(), self.n, "one name per variable");
        }
        self.names = names;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn declared_names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Variable names, defaulting to `x1, ..., xn`.
    pub fn names(&self) -> Vec<String> {
        match &self.names {
            Some(v) => v.clone(),
            None => default_names(self.n),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper_nonzero(&self, op: &'static str) -> Result<()> {
        if self.is_zero() {
            Err(Error::Degenerate { op, which: "zero" })
        } else if self.is_unit() {
            Err(Error::Degenerate { op, which: "unit" })
        } else {
            Ok(())
        }
    }

    fn check_dim(&self, other_n: usize) -> Result<()> {
        if self.n == other_n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.n,
                right: other_n,
            })
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.n).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            })
        }
    }

    fn derived(&self, gens: Vec<Monomial>) -> MonomialIdeal {
        let mut out = MonomialIdeal::from_checked(self.n, gens);
        out.names = self.names.clone();
        out
    }

    /// Membership without the dimension check.
    pub(crate) fn contains(&self, u: &Monomial) -> bool {
        let d = u.degree();
        // A generator of the same degree divides `u` only if it equals `u`.
        self.gens
            .iter()
            .take_while(|g| g.degree() < d)
            .any(|g| g.divides(u))
            || self.gens.binary_search(u).is_ok()
    }

    pub fn member(&self, u: &Monomial) -> Result<bool> {
        self.check_dim(u.n())?;
        Ok(self.contains(u))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(self.derived(gens))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        Ok(self.derived(self.gens.iter().chain(&other.gens).cloned().collect()))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(self.derived(gens))
    }

    /// `I : u` for a monomial `u`.
    pub fn colon_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_dim(u.n())?;
        Ok(self.derived(self.gens.iter().map(|g| g.colon(u)).collect()))
    }

    /// `I : x_i`.
    pub fn colon_var(&self, i: usize) -> Result<MonomialIdeal> {
        self.check_index(i)?;
        self.colon_monomial(&Monomial::var_power(self.n, i, 1))
    }

    /// `I : (x_1, ..., x_i) = ∩_{j <= i} I : x_j`.
    pub fn colon_prefix(&self, i: usize) -> Result<MonomialIdeal> {
        self.check_index(i)?;
        let mut acc = self.colon_var(1)?;
        for j in 2..=i {
            acc = acc.intersect(&self.colon_var(j)?)?;
        }
        Ok(acc)
    }

    /// `I : x_i^∞`, obtained by deleting `x_i` from every generator.
    pub fn colon_var_saturate(&self, i: usize) -> Result<MonomialIdeal> {
        self.check_index(i)?;
        Ok(self.derived(self.gens.iter().map(|g| g.with_exp(i, 0)).collect()))
    }

    /// `I : (x_1, ..., x_i)^∞`.
    ///
    /// Computed as `∩_{j <= i} I : x_j^∞`: for `N` at least the largest
    /// exponent, `(x_1..x_i)^{iN} ⊆ (x_1^N, ..., x_i^N) ⊆ (x_1..x_i)^N` and
    /// `I : x_j^N = I : x_j^∞`.
    pub fn colon_prefix_saturate(&self, i: usize) -> Result<MonomialIdeal> {
        self.check_index(i)?;
        let mut acc = self.colon_var_saturate(1)?;
        for j in 2..=i {
            acc = acc.intersect(&self.colon_var_saturate(j)?)?;
        }
        Ok(acc)
    }

    /// `I : (x_1, ..., x_i)^∞` by iterating `J ↦ J : (x_1, ..., x_i)` to its
    /// fixed point. Slow; kept as a reference for
    /// [`colon_prefix_saturate`](Self::colon_prefix_saturate).
    pub fn colon_prefix_saturate_iterated(&self, i: usize) -> Result<MonomialIdeal> {
        self.check_index(i)?;
        let mut cur = self.clone();
        loop {
            let next = cur.colon_prefix(i)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `I^sat = I : (x_1, ..., x_n)^∞`.
    pub fn saturation(&self) -> Result<MonomialIdeal> {
        if self.is_unit() {
            return Err(Error::Degenerate {
                op: "saturation",
                which: "unit",
            });
        }
        if self.n == 0 {
            return Ok(self.clone());
        }
        self.colon_prefix_saturate(self.n)
    }

    /// `I_{>=e}`: generated by the monomials of `I` of degree at least `e`.
    pub fn truncate(&self, e: u64) -> MonomialIdeal {
        let mut fillers: HashMap<u64, Vec<Monomial>> = HashMap::new();
        let mut gens = Vec::new();
        for g in &self.gens {
            let d = g.degree();
            if d >= e {
                gens.push(g.clone());
                continue;
            }
            let pad = fillers
                .entry(e - d)
                .or_insert_with(|| monomial::of_degree(self.n, e - d));
            gens.extend(pad.iter().map(|m| g.mul(m)));
        }
        self.derived(gens)
    }

    /// Number of monomials of degree `d` lying in `I`.
    pub fn hilbert_count(&self, d: u64) -> u64 {
        if self.is_zero() {
            return 0;
        }
        monomial::of_degree(self.n, d)
            .iter()
            .filter(|u| self.contains(u))
            .count() as u64
    }

    /// `m(I) = max{m(u) : u in G(I)}`.
    pub fn m_ideal(&self) -> Result<usize> {
        self.require_proper_nonzero("m_ideal")?;
        self.gens
            .iter()
            .map(Monomial::m_index)
            .try_fold(0, |acc, m| Ok(acc.max(m?)))
    }

    /// `deg(I)`: the largest degree of a minimal generator.
    pub fn max_gen_degree(&self) -> Option<u64> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exps()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// The ideal generated by `G(I)` in the first `k` variables. Panics if a
    /// generator involves a later variable.
    pub fn restrict(&self, k: usize) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.restrict(k)).collect();
        let mut out = MonomialIdeal::from_checked(k, gens);
        out.names = self.names.as_ref().map(|v| v[..k].to_vec());
        out
    }

    /// Generators grouped by `m(u)`; the unit monomial is skipped.
    pub(crate) fn gens_by_m_index(&self) -> BTreeMap<usize, Vec<&Monomial>> {
        let mut out: BTreeMap<usize, Vec<&Monomial>> = BTreeMap::new();
        for g in &self.gens {
            if let Ok(m) = g.m_index() {
                out.entry(m).or_default().push(g);
            }
        }
        out
    }

    /// Generators rendered with the ideal's variable names.
    pub fn render_gens(&self) -> Vec<String> {
        let names = self.names();
        self.gens.iter().map(|g| g.render(&names)).collect()
    }

    /// Exponent vectors of the generators, in canonical order.
    pub fn exponent_vectors(&self) -> Vec<Vec<u32>> {
        self.gens.iter().map(|g| g.exps().to_vec()).collect()
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// The text form accepted by [`crate::parse::parse_ideal`].
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vars {};", self.names().join(","))?;
        if self.is_zero() {
            return f.write_str(" 0");
        }
        write!(f, " {}", self.render_gens().join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(n, gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    fn example_2_7() -> MonomialIdeal {
        ideal(3, &[&[4, 0, 0], &[2, 0, 3], &[0, 4, 0], &[0, 3, 3]])
    }

    #[test]
    fn minimalize_prunes_multiples() {
        let i = ideal(2, &[&[2, 0], &[2, 1], &[0, 3]]);
        assert_eq!(i, ideal(2, &[&[2, 0], &[0, 3]]));
        assert_eq!(i.gens().len(), 2);

        let j = ideal(
            3,
            &[
                &[4, 0, 0],
                &[2, 4, 0],
                &[2, 0, 3],
                &[4, 3, 0],
                &[0, 4, 0],
                &[0, 3, 3],
            ],
        );
        assert_eq!(j, example_2_7());
        assert!(minimalize(2, []).unwrap().is_zero());
    }

    #[test]
    fn minimalize_mixed_dims() {
        let err = minimalize(2, [Monomial::new([1, 0]), Monomial::new([1, 0, 0])]);
        assert_eq!(err, Err(Error::DimensionMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn membership() {
        let i = example_2_7();
        assert!(i.member(&Monomial::new([2, 4, 0])).unwrap());
        assert!(!i.member(&Monomial::new([1, 2, 2])).unwrap());
        assert!(!i.member(&Monomial::one(3)).unwrap());
        assert!(i.member(&Monomial::new([1, 2])).is_err());
    }

    #[test]
    fn intersections() {
        let k = ideal(3, &[&[2, 0, 0], &[0, 3, 0]]);
        let l = MonomialIdeal::pure_powers(&[4, 4, 3]);
        assert_eq!(k.intersect(&l).unwrap(), example_2_7());
        let i = example_2_7();
        assert_eq!(i.intersect(&MonomialIdeal::unit(3)).unwrap(), i);
        let k = MonomialIdeal::pure_powers(&[2, 2, 10]);
        let l = MonomialIdeal::pure_powers(&[4, 4, 0]);
        assert_eq!(k.intersect(&l).unwrap(), l);
        assert!(i.intersect(&MonomialIdeal::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn sums_and_products() {
        let x2 = ideal(2, &[&[2, 0]]);
        let y3 = ideal(2, &[&[0, 3]]);
        assert_eq!(x2.sum(&y3).unwrap(), ideal(2, &[&[2, 0], &[0, 3]]));
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.product(&y).unwrap(), ideal(2, &[&[1, 1]]));
        let k = ideal(3, &[&[2, 0, 0], &[0, 3, 0]]);
        let l = MonomialIdeal::pure_powers(&[4, 4, 3]);
        assert_eq!(
            k.sum(&l).unwrap(),
            ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 3]])
        );
        assert!(x.product(&MonomialIdeal::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn variable_saturation() {
        let i = example_2_7();
        assert_eq!(
            i.colon_var_saturate(3).unwrap(),
            ideal(3, &[&[2, 0, 0], &[0, 3, 0]])
        );
        let k = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(k.colon_var_saturate(2).unwrap().is_unit());
        let x2 = ideal(2, &[&[2, 0]]);
        assert_eq!(x2.colon_var_saturate(2).unwrap(), x2);
        assert_eq!(
            i.colon_var_saturate(4),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
        assert!(i.colon_var_saturate(0).is_err());
    }

    #[test]
    fn prefix_saturation() {
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(y.colon_prefix_saturate(2).unwrap(), y);
        assert_eq!(y.colon_prefix_saturate_iterated(2).unwrap(), y);
        let k = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(k.colon_prefix_saturate(2).unwrap().is_unit());
        assert!(k.colon_prefix_saturate_iterated(2).unwrap().is_unit());
        // x_1 divides no generator: nothing changes
        let z = ideal(3, &[&[0, 0, 2]]);
        assert_eq!(z.colon_prefix_saturate(1).unwrap(), z);
    }

    #[test]
    fn saturations() {
        assert!(MonomialIdeal::pure_powers(&[4, 4, 3])
            .saturation()
            .unwrap()
            .is_unit());
        let k = ideal(3, &[&[2, 0, 0], &[0, 3, 0]]);
        assert_eq!(k.saturation().unwrap(), k);
        assert_eq!(example_2_7().saturation().unwrap(), k);
        assert!(MonomialIdeal::unit(3).saturation().is_err());
    }

    #[test]
    fn truncations() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(m.truncate(2), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        let i = example_2_7();
        assert_eq!(i.truncate(0), i);
        let k = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(k.truncate(3), ideal(2, &[&[3, 0], &[2, 1], &[0, 3]]));
        assert_eq!(MonomialIdeal::unit(2).truncate(1), m);
    }

    #[test]
    fn hilbert_counts() {
        assert_eq!(MonomialIdeal::maximal(2).hilbert_count(1), 2);
        assert_eq!(MonomialIdeal::unit(3).hilbert_count(4), 15);
        let k = ideal(2, &[&[2, 0], &[0, 3]]);
        // x^4, x^3y, x^2y^2, xy^3, y^4
        assert_eq!(k.hilbert_count(4), 5);
        assert_eq!(k.hilbert_count(2), 1);
        assert_eq!(MonomialIdeal::zero(2).hilbert_count(3), 0);
    }

    #[test]
    fn m_of_ideal() {
        assert_eq!(example_2_7().m_ideal().unwrap(), 3);
        assert!(MonomialIdeal::zero(2).m_ideal().is_err());
        assert!(MonomialIdeal::unit(2).m_ideal().is_err());
        assert_eq!(example_2_7().max_gen_degree(), Some(6));
    }

    #[test]
    fn display_form() {
        let i = example_2_7().with_names(Some(vec!["x".into(), "y".into(), "z".into()]));
        assert_eq!(i.to_string(), "vars x,y,z; x^4, y^4, x^2*z^3, y^3*z^3");
        assert_eq!(MonomialIdeal::zero(2).to_string(), "vars x1,x2; 0");
        assert_eq!(MonomialIdeal::unit(1).to_string(), "vars x1; 1");
    }
}
