//! Irredundant irreducible decomposition of monomial ideals.
//!
//! A generator `u = v·w` with coprime non-unit `v, w` splits the ideal as
//! `(G∖{u} ∪ {v}) ∩ (G∖{u} ∪ {w})`. Repeating until every generator is a pure
//! power leaves irreducible ideals `m^b`; the minimal ones under containment
//! form the unique irredundant decomposition.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// The irreducible ideal `m^b = (x_i^{b_i} : b_i >= 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct IrreducibleComponent {
    b: Vec<u32>,
}

impl IrreducibleComponent {
    /// Panics on the zero vector, which would be the unit ideal.
    pub fn new(b: Vec<u32>) -> Self {
        assert!(b.iter().any(|&e| e > 0), "m^0 is not a component");
        IrreducibleComponent { b }
    }

    pub fn b(&self) -> &[u32] {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    /// `|b|`.
    pub fn total(&self) -> u64 {
        self.b.iter().map(|&e| e as u64).sum()
    }

    /// `supp(b)`, indices from 1.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.b.len()).filter(|&i| self.b[i - 1] > 0).collect()
    }

    /// Length `j` if the support is exactly `{1, ..., j}`.
    pub fn initial_segment_len(&self) -> Option<usize> {
        let j = self.b.iter().take_while(|&&e| e > 0).count();
        self.b[j..].iter().all(|&e| e == 0).then_some(j)
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::pure_powers(&self.b)
    }

    /// `m^self ⊆ m^other`.
    pub fn is_contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.b
            .iter()
            .zip(&other.b)
            .all(|(&a, &o)| a == 0 || (o >= 1 && o <= a))
    }
}

/// `I = q_1 ∩ ... ∩ q_r`, components in lexicographic order of `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    components: Vec<IrreducibleComponent>,
    source: MonomialIdeal,
}

impl Decomposition {
    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    /// Pairs arbitrary components with a source without checking anything.
    /// Used to build deliberately broken inputs for route comparisons.
    pub fn from_parts_unchecked(
        mut components: Vec<IrreducibleComponent>,
        source: MonomialIdeal,
    ) -> Self {
        components.sort();
        Decomposition { components, source }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "components": self.components })
    }
}

/// Decomposes a proper nonzero ideal.
pub fn decompose(ideal: &MonomialIdeal) -> Result<Decomposition> {
    ideal.require_proper_nonzero("decompose")?;
    let mut memo = HashMap::new();
    let raw = split(ideal, &mut memo);
    let components = prune(ideal.n(), raw.into_iter().collect());
    Ok(Decomposition {
        components,
        source: ideal.clone(),
    })
}

fn split(
    ideal: &MonomialIdeal,
    memo: &mut HashMap<MonomialIdeal, BTreeSet<Vec<u32>>>,
) -> BTreeSet<Vec<u32>> {
    if let Some(hit) = memo.get(ideal) {
        return hit.clone();
    }
    let gens = ideal.gens();
    let out = match gens.iter().position(|g| g.support().nth(1).is_some()) {
        None => {
            let mut b = vec![0u32; ideal.n()];
            for g in gens {
                for (bi, &e) in b.iter_mut().zip(g.exps()) {
                    *bi += e;
                }
            }
            BTreeSet::from([b])
        }
        Some(pos) => {
            let u = &gens[pos];
            let first = u.support().next().expect("splittable generator");
            let v = Monomial::var_power(u.n(), first, u.exp(first));
            let w = u.with_exp(first, 0);
            let rest = || {
                gens.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != pos)
                    .map(|(_, g)| g.clone())
            };
            let left = MonomialIdeal::from_checked(ideal.n(), rest().chain([v]).collect());
            let right = MonomialIdeal::from_checked(ideal.n(), rest().chain([w]).collect());
            let mut acc = split(&left, memo);
            acc.extend(split(&right, memo));
            acc
        }
    };
    memo.insert(ideal.clone(), out.clone());
    out
}

/// Keeps the containment-minimal components, then drops any component that
/// contains the intersection of the others.
fn prune(n: usize, raw: Vec<Vec<u32>>) -> Vec<IrreducibleComponent> {
    let cands: Vec<IrreducibleComponent> = raw.into_iter().map(IrreducibleComponent::new).collect();
    let mut kept: Vec<IrreducibleComponent> = cands
        .iter()
        .filter(|q| !cands.iter().any(|p| p != *q && p.is_contained_in(q)))
        .cloned()
        .collect();
    while let Some(k) = first_redundant(n, &kept) {
        kept.remove(k);
    }
    kept.sort();
    kept
}

fn first_redundant(n: usize, comps: &[IrreducibleComponent]) -> Option<usize> {
    if comps.len() < 2 {
        return None;
    }
    let ideals: Vec<MonomialIdeal> = comps.iter().map(IrreducibleComponent::ideal).collect();
    let meet = |a: &MonomialIdeal, b: &MonomialIdeal| a.intersect(b).expect("same ambient ring");
    let mut prefix = vec![MonomialIdeal::unit(n)];
    for q in &ideals {
        let next = meet(prefix.last().unwrap(), q);
        prefix.push(next);
    }
    let mut suffix = vec![MonomialIdeal::unit(n); ideals.len() + 1];
    for k in (0..ideals.len()).rev() {
        suffix[k] = meet(&suffix[k + 1], &ideals[k]);
    }
    (0..ideals.len()).find(|&k| {
        let others = meet(&prefix[k], &suffix[k + 1]);
        ideals[k].contains_ideal(&others)
    })
}

/// Intersection of the components.
pub fn recompose(n: usize, components: &[IrreducibleComponent]) -> MonomialIdeal {
    components.iter().fold(MonomialIdeal::unit(n), |acc, q| {
        acc.intersect(&q.ideal()).expect("same ambient ring")
    })
}

impl Decomposition {
    pub fn recompose(&self) -> MonomialIdeal {
        recompose(self.source.n(), &self.components)
    }
}

/// True iff the components intersect to `ideal` and dropping any one of
/// them yields a strictly larger ideal.
pub fn is_irredundant(components: &[IrreducibleComponent], ideal: &MonomialIdeal) -> bool {
    let n = ideal.n();
    if components.iter().any(|q| q.n() != n) || recompose(n, components) != *ideal {
        return false;
    }
    (0..components.len()).all(|k| {
        let mut rest = components.to_vec();
        rest.remove(k);
        recompose(n, &rest) != *ideal
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::parse::parse_ideal;

    fn comp(b: &[u32]) -> IrreducibleComponent {
        IrreducibleComponent::new(b.to_vec())
    }

    #[test]
    fn example_2_7() {
        let i = parse_ideal("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3").unwrap();
        let d = decompose(&i).unwrap();
        assert_eq!(d.components(), &[comp(&[2, 3, 0]), comp(&[4, 4, 3])]);
        assert_eq!(d.recompose(), i);
        assert_eq!(
            d.to_json().to_string(),
            r#"{"components":[[2,3,0],[4,4,3]]}"#
        );
        assert!(is_irredundant(d.components(), &i));
        let padded = [comp(&[2, 3, 0]), comp(&[4, 4, 3]), comp(&[5, 5, 5])];
        assert!(!is_irredundant(&padded, &i));
    }

    #[test]
    fn small_cases() {
        let i = parse_ideal("vars x,y,z; x^5").unwrap();
        assert_eq!(decompose(&i).unwrap().components(), &[comp(&[5, 0, 0])]);
        let xy = parse_ideal("vars x,y; x*y").unwrap();
        let d = decompose(&xy).unwrap();
        assert_eq!(d.components(), &[comp(&[0, 1]), comp(&[1, 0])]);
        let x = parse_ideal("vars x,y; x").unwrap();
        assert!(is_irredundant(&[comp(&[1, 0])], &x));
        assert_eq!(
            recompose(3, &[comp(&[4, 4, 3])]),
            MonomialIdeal::pure_powers(&[4, 4, 3])
        );
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            decompose(&MonomialIdeal::zero(2)),
            Err(Error::Degenerate { which: "zero", .. })
        ));
        assert!(matches!(
            decompose(&MonomialIdeal::unit(2)),
            Err(Error::Degenerate { which: "unit", .. })
        ));
    }

    #[test]
    fn containment_of_components() {
        assert!(comp(&[4, 4, 3]).is_contained_in(&comp(&[2, 3, 3])));
        assert!(!comp(&[2, 3, 0]).is_contained_in(&comp(&[4, 4, 3])));
        assert!(!comp(&[4, 4, 3]).is_contained_in(&comp(&[4, 4, 0])));
        assert!(comp(&[4, 4, 0]).is_contained_in(&comp(&[2, 2, 10])));
        assert_eq!(comp(&[2, 3, 0]).initial_segment_len(), Some(2));
        assert_eq!(comp(&[0, 3, 1]).initial_segment_len(), None);
    }
}
