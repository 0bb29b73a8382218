//! Borel-type and stability predicates, the sequential chain, satiety.

use serde::Serialize;

use crate::degree::{ExtendedDegree, Finite, MinusInfinity};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{self, Monomial};
use crate::parse::ideal_to_json;

/// Outcome of the Borel-type test: the first `i` with
/// `I:(x_1..x_i)^∞ != I:x_i^∞`, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BorelCheck {
    pub borel_type: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_index: Option<usize>,
}

pub fn borel_check(ideal: &MonomialIdeal) -> Result<BorelCheck> {
    ideal.require_proper_nonzero("is_borel_type")?;
    for i in 1..=ideal.n() {
        if ideal.colon_prefix_saturate(i)? != ideal.colon_var_saturate(i)? {
            return Ok(BorelCheck {
                borel_type: false,
                failing_index: Some(i),
            });
        }
    }
    Ok(BorelCheck {
        borel_type: true,
        failing_index: None,
    })
}

pub fn is_borel_type(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(borel_check(ideal)?.borel_type)
}

pub(crate) fn require_borel(ideal: &MonomialIdeal) -> Result<()> {
    match borel_check(ideal)?.failing_index {
        None => Ok(()),
        Some(i) => Err(Error::NotBorelType { failing_index: i }),
    }
}

/// Stable: for every `u` in `G(I)` and `i < m(u)`, `x_i·u/x_{m(u)}` lies in `I`.
pub fn is_stable(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.require_proper_nonzero("is_stable")?;
    for u in ideal.gens() {
        let m = u.m_index()?;
        let base = u.with_exp(m, u.exp(m) - 1);
        for i in 1..m {
            if !ideal.contains(&base.with_exp(i, base.exp(i) + 1)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `I:(x_1, ..., x_i) = I:x_i` for every `i` (single colons, not saturations).
pub fn is_strongly_stable_colon(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.require_proper_nonzero("is_strongly_stable_colon")?;
    for i in 1..=ideal.n() {
        if ideal.colon_prefix(i)? != ideal.colon_var(i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I = I_0 ⊊ I_1 ⊊ ... ⊊ I_r = S` with `I_{l+1} = I_l : x_{n_l}^∞`,
/// `n_l = m(I_l)`, and `J_l` the ideal `G(I_l)` generates in the first `n_l`
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequentialChain {
    pub ideals: Vec<MonomialIdeal>,
    pub indices: Vec<usize>,
    pub restricted: Vec<MonomialIdeal>,
}

impl SequentialChain {
    /// `r`, the number of saturation steps.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "length": self.len(),
            "indices": self.indices,
            "ideals": self.ideals.iter().map(ideal_to_json).collect::<Vec<_>>(),
            "restricted": self.restricted.iter().map(ideal_to_json).collect::<Vec<_>>(),
        })
    }
}

/// Refuses ideals that are not of Borel type.
pub fn sequential_chain(ideal: &MonomialIdeal) -> Result<SequentialChain> {
    require_borel(ideal)?;
    let mut ideals = vec![ideal.clone()];
    let mut indices = Vec::new();
    let mut restricted = Vec::new();
    let mut cur = ideal.clone();
    while !cur.is_unit() {
        let m = cur.m_ideal()?;
        debug_assert!(indices.last().is_none_or(|&p| m < p));
        indices.push(m);
        restricted.push(cur.restrict(m));
        cur = cur.colon_var_saturate(m)?;
        ideals.push(cur.clone());
    }
    Ok(SequentialChain {
        ideals,
        indices,
        restricted,
    })
}

/// `s(I^sat/I)`, the top degree of `H^0_m(S/I)`.
///
/// A monomial of `I^sat ∖ I` lies outside some component `m^b` with full
/// support, so each of its exponents is below the corresponding generator
/// exponent maximum. The box is searched from the top degree down.
pub fn satiety_quotient(ideal: &MonomialIdeal) -> Result<ExtendedDegree> {
    if ideal.is_unit() {
        return Err(Error::Degenerate {
            op: "satiety_quotient",
            which: "unit",
        });
    }
    if ideal.is_zero() {
        return Ok(MinusInfinity);
    }
    let sat = ideal.saturation()?;
    if sat == *ideal {
        return Ok(MinusInfinity);
    }
    let bounds: Vec<u32> = ideal
        .max_exponents()
        .iter()
        .map(|&e| e.saturating_sub(1))
        .collect();
    let top: u64 = bounds.iter().map(|&e| e as u64).sum();
    for d in (0..=top).rev() {
        let witness = monomial::bounded_of_degree(&bounds, d)
            .into_iter()
            .any(|u| sat.contains(&u) && !ideal.contains(&u));
        if witness {
            return Ok(Finite(d as i64));
        }
    }
    debug_assert!(false, "I^sat != I but no witness in the box");
    Ok(MinusInfinity)
}

/// Offset between the largest degree of a minimal generator involving `x_n`
/// and `s(I^sat/I)`, on ideals with `I:(x_1..x_n) = I:x_n`.
pub const BG_SHORTCUT_OFFSET: i64 = -1;

/// `s(I^sat/I)` read off the generators: when `I:(x_1..x_n) = I:x_n` it is
/// the largest degree of a minimal generator divisible by `x_n`, plus
/// [`BG_SHORTCUT_OFFSET`].
pub fn satiety_bg_shortcut(ideal: &MonomialIdeal) -> Result<ExtendedDegree> {
    ideal.require_proper_nonzero("satiety_bg_shortcut")?;
    let n = ideal.n();
    if ideal.colon_prefix(n)? != ideal.colon_var(n)? {
        return Err(Error::Precondition {
            op: "satiety_bg_shortcut",
            detail: format!("I:(x_1..x_{n}) != I:x_{n}"),
        });
    }
    let top = ideal
        .gens()
        .iter()
        .filter(|g| g.exp(n) > 0)
        .map(Monomial::degree)
        .max();
    Ok(match top {
        Some(d) => Finite(d as i64 + BG_SHORTCUT_OFFSET),
        None => MinusInfinity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn p(s: &str) -> MonomialIdeal {
        parse_ideal(s).unwrap()
    }

    const EX27: &str = "vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3";

    #[test]
    fn borel_type_examples() {
        assert!(is_borel_type(&p(EX27)).unwrap());
        assert_eq!(
            borel_check(&p("vars x,y; y")).unwrap(),
            BorelCheck {
                borel_type: false,
                failing_index: Some(2)
            }
        );
        assert!(is_borel_type(&p("vars x,y; x^2, x*y, y^2")).unwrap());
        assert!(is_borel_type(&MonomialIdeal::zero(2)).is_err());
        assert!(is_borel_type(&MonomialIdeal::unit(2)).is_err());
    }

    #[test]
    fn stability_examples() {
        assert!(is_stable(&p("vars x,y; x^2, x*y, y^2")).unwrap());
        assert!(!is_stable(&p("vars x,y; x^2, y^3")).unwrap());
        assert!(is_stable(&p("vars x,y,z; x^7")).unwrap());
    }

    #[test]
    fn strongly_stable_examples() {
        assert!(is_strongly_stable_colon(&p("vars x,y; x^2, x*y, y^3")).unwrap());
        assert!(!is_strongly_stable_colon(&p("vars x,y; y")).unwrap());
        assert!(is_strongly_stable_colon(&p("vars x; x")).unwrap());
    }

    #[test]
    fn chain_of_example_2_7() {
        let c = sequential_chain(&p(EX27)).unwrap();
        assert_eq!(c.indices, vec![3, 2]);
        assert_eq!(c.ideals.len(), 3);
        assert_eq!(c.ideals[1], p("vars x,y,z; x^2, y^3"));
        assert!(c.ideals[2].is_unit());
        assert_eq!(c.restricted[0], p(EX27));
        assert_eq!(c.restricted[1], p("vars x,y; x^2, y^3"));
    }

    #[test]
    fn short_chains() {
        let c = sequential_chain(&MonomialIdeal::pure_powers(&[3, 2, 2])).unwrap();
        assert_eq!(c.indices, vec![3]);
        let c = sequential_chain(&p("vars x,y; x^2")).unwrap();
        assert_eq!(c.indices, vec![1]);
        assert_eq!(c.restricted[0], p("vars x; x^2"));
        assert_eq!(
            sequential_chain(&p("vars x,y; y")),
            Err(Error::NotBorelType { failing_index: 2 })
        );
    }

    #[test]
    fn satiety_examples() {
        assert_eq!(
            satiety_quotient(&MonomialIdeal::pure_powers(&[4, 4, 3])).unwrap(),
            Finite(8)
        );
        assert_eq!(
            satiety_quotient(&p("vars x,y,z; x^2, y^3")).unwrap(),
            MinusInfinity
        );
        assert_eq!(satiety_quotient(&p(EX27)).unwrap(), Finite(8));
        assert_eq!(
            satiety_quotient(&MonomialIdeal::maximal(4)).unwrap(),
            Finite(0)
        );
        assert!(satiety_quotient(&MonomialIdeal::unit(2)).is_err());
        assert_eq!(
            satiety_quotient(&MonomialIdeal::zero(2)).unwrap(),
            MinusInfinity
        );
    }

    #[test]
    fn shortcut_examples() {
        // (x^4,y^4,z^3):(x,y,z) is strictly smaller than (x^4,y^4,z^3):z
        assert!(matches!(
            satiety_bg_shortcut(&MonomialIdeal::pure_powers(&[4, 4, 3])),
            Err(Error::Precondition { .. })
        ));
        assert_eq!(
            satiety_bg_shortcut(&p("vars x,y; x^2")).unwrap(),
            MinusInfinity
        );
        assert_eq!(
            satiety_bg_shortcut(&MonomialIdeal::maximal(3)).unwrap(),
            Finite(0)
        );
        let m2 = p("vars x,y; x^2, x*y, y^2");
        assert_eq!(
            satiety_bg_shortcut(&m2).unwrap(),
            satiety_quotient(&m2).unwrap()
        );
    }
}
