//! Local cohomology degrees `a_k(S/I)` and the partial invariants built on
//! them:
//! `reg_t(M) = max{a_i(M) + i : i <= t}` and `a*_t(M) = max{a_i(M) : i <= t}`.
//!
//! For a Borel-type ideal `I` the vector `a_0(S/I), ..., a_n(S/I)` comes from
//! two independent places: the irredundant irreducible decomposition
//! (`a_k = max{|b| - n : supp(b) = {1..n-k}}`) and the sequential chain
//! (`a_{n-n_l} = s(J_l^sat/J_l) - n + n_l`). The Betti-number oracle in
//! [`crate::oracle`] supplies a third view of `reg_t` and `a*_t`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::borel::{is_stable, require_borel, satiety_quotient, sequential_chain};
use crate::decomposition::{decompose, Decomposition};
use crate::degree::{ExtendedDegree, Finite, MinusInfinity};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::oracle::{a0_direct, betti_table, trung_invariants, trung_invariants_ideal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Decomposition,
    Chain,
    Oracle,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Decomposition, Route::Chain, Route::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Route::Decomposition => "decomposition",
            Route::Chain => "chain",
            Route::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "decomposition" => Ok(Route::Decomposition),
            "chain" => Ok(Route::Chain),
            "oracle" => Ok(Route::Oracle),
            _ => Err(format!("unknown route `{s}`")),
        }
    }
}

/// `a_k(S/I)` for `k = 0..=n` from a decomposition of a Borel-type ideal.
///
/// Every component must have support `{1, ..., j}` for some `j`; anything else
/// is reported as [`Error::InconsistentSupport`].
pub fn a_vector_from_decomposition(d: &Decomposition) -> Result<Vec<ExtendedDegree>> {
    let n = d.source().n();
    let mut a = vec![MinusInfinity; n + 1];
    for q in d.components() {
        let j = q
            .initial_segment_len()
            .ok_or_else(|| Error::InconsistentSupport {
                component: q.b().to_vec(),
            })?;
        let k = n - j;
        a[k] = a[k].max(Finite(q.total() as i64 - n as i64));
    }
    Ok(a)
}

pub fn a_vector_decomposition(ideal: &MonomialIdeal) -> Result<Vec<ExtendedDegree>> {
    require_borel(ideal)?;
    a_vector_from_decomposition(&decompose(ideal)?)
}

pub fn a_vector_chain(ideal: &MonomialIdeal) -> Result<Vec<ExtendedDegree>> {
    let chain = sequential_chain(ideal)?;
    let n = ideal.n();
    let mut a = vec![MinusInfinity; n + 1];
    for (&nl, j) in chain.indices.iter().zip(&chain.restricted) {
        a[n - nl] = satiety_quotient(j)? - n as i64 + nl as i64;
    }
    Ok(a)
}

/// `max{a_i + i : i <= t}` for every `t`.
pub fn running_reg(a: &[ExtendedDegree]) -> Vec<ExtendedDegree> {
    running_max(a.iter().enumerate().map(|(i, &v)| v + i as i64))
}

/// `max{a_i : i <= t}` for every `t`.
pub fn running_astar(a: &[ExtendedDegree]) -> Vec<ExtendedDegree> {
    running_max(a.iter().copied())
}

fn running_max(it: impl Iterator<Item = ExtendedDegree>) -> Vec<ExtendedDegree> {
    let mut acc = MinusInfinity;
    it.map(|v| {
        acc = acc.max(v);
        acc
    })
    .collect()
}

/// `a_i(I)` from `a_i(S/I)` for a proper nonzero ideal: `a_0(I) = -∞`,
/// `a_i(I) = a_{i-1}(S/I)` for `1 <= i < n`, `a_n(I) = max{-n, a_{n-1}(S/I)}`.
pub fn ideal_shift(a_module: &[ExtendedDegree]) -> Vec<ExtendedDegree> {
    let n = a_module.len() - 1;
    let mut out = vec![MinusInfinity; n + 1];
    out[1..].copy_from_slice(&a_module[..n]);
    if n >= 1 {
        out[n] = out[n].max(Finite(-(n as i64)));
    }
    out
}

/// Every invariant for one ideal by one route. Indices run over
/// `t = 0..=n`. The oracle route does not determine individual `a_i`, so its
/// `a_module` and `a_ideal` are absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub route: Route,
    pub a_module: Option<Vec<ExtendedDegree>>,
    pub a_ideal: Option<Vec<ExtendedDegree>>,
    pub reg_t_module: Vec<ExtendedDegree>,
    pub astar_t_module: Vec<ExtendedDegree>,
    pub reg_t_ideal: Vec<ExtendedDegree>,
    pub astar_t_ideal: Vec<ExtendedDegree>,
    pub reg_module: ExtendedDegree,
    pub astar_module: ExtendedDegree,
    pub reg_ideal: ExtendedDegree,
    pub astar_ideal: ExtendedDegree,
    pub sat: ExtendedDegree,
}

impl InvariantReport {
    pub fn from_a_vector(route: Route, a_module: Vec<ExtendedDegree>) -> Self {
        let n = a_module.len() - 1;
        let a_ideal = ideal_shift(&a_module);
        let reg_t_module = running_reg(&a_module);
        let astar_t_module = running_astar(&a_module);
        let reg_t_ideal = running_reg(&a_ideal);
        let astar_t_ideal = running_astar(&a_ideal);
        InvariantReport {
            n,
            route,
            reg_module: reg_t_module[n],
            astar_module: astar_t_module[n],
            reg_ideal: reg_t_ideal[n],
            astar_ideal: astar_t_ideal[n],
            sat: a_module[0],
            a_module: Some(a_module),
            a_ideal: Some(a_ideal),
            reg_t_module,
            astar_t_module,
            reg_t_ideal,
            astar_t_ideal,
        }
    }

    /// Aligned text rendering.
    pub fn table(&self) -> String {
        let mut rows: Vec<(&str, Vec<ExtendedDegree>)> = Vec::new();
        if let Some(a) = &self.a_module {
            rows.push(("a_i(S/I)", a.clone()));
        }
        if let Some(a) = &self.a_ideal {
            rows.push(("a_i(I)", a.clone()));
        }
        rows.push(("reg_t(S/I)", self.reg_t_module.clone()));
        rows.push(("a*_t(S/I)", self.astar_t_module.clone()));
        rows.push(("reg_t(I)", self.reg_t_ideal.clone()));
        rows.push(("a*_t(I)", self.astar_t_ideal.clone()));
        let label_w = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
        let cell_w = rows
            .iter()
            .flat_map(|r| r.1.iter().map(|v| v.pretty().chars().count()))
            .max()
            .unwrap_or(1)
            .max(self.n.to_string().len());
        let mut out = format!("route: {}\n", self.route);
        let pad =
            |s: &str, w: usize| format!("{}{s}", " ".repeat(w.saturating_sub(s.chars().count())));
        out.push_str(&" ".repeat(label_w));
        for i in 0..=self.n {
            out.push_str(&format!("  {}", pad(&i.to_string(), cell_w)));
        }
        out.push('\n');
        for (label, vals) in rows {
            out.push_str(&format!(
                "{label}{}",
                " ".repeat(label_w - label.chars().count())
            ));
            for v in vals {
                out.push_str(&format!("  {}", pad(&v.pretty(), cell_w)));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "reg(S/I) = {}, a*(S/I) = {}, reg(I) = {}, a*(I) = {}, sat = {}\n",
            self.reg_module.pretty(),
            self.astar_module.pretty(),
            self.reg_ideal.pretty(),
            self.astar_ideal.pretty(),
            self.sat.pretty()
        ));
        out
    }
}

pub fn report(ideal: &MonomialIdeal, route: Route) -> Result<InvariantReport> {
    match route {
        Route::Decomposition => Ok(InvariantReport::from_a_vector(
            route,
            a_vector_decomposition(ideal)?,
        )),
        Route::Chain => Ok(InvariantReport::from_a_vector(
            route,
            a_vector_chain(ideal)?,
        )),
        Route::Oracle => oracle_report(ideal),
    }
}

fn oracle_report(ideal: &MonomialIdeal) -> Result<InvariantReport> {
    let table = betti_table(ideal)?;
    let n = table.n();
    let (reg_t_module, astar_t_module) = trung_invariants(&table);
    let (reg_t_ideal, astar_t_ideal) = trung_invariants_ideal(&table);
    Ok(InvariantReport {
        n,
        route: Route::Oracle,
        a_module: None,
        a_ideal: None,
        reg_module: reg_t_module[n],
        astar_module: astar_t_module[n],
        reg_ideal: reg_t_ideal[n],
        astar_ideal: astar_t_ideal[n],
        sat: a0_direct(ideal)?,
        reg_t_module,
        astar_t_module,
        reg_t_ideal,
        astar_t_ideal,
    })
}

/// `reg_t(I)` and `a*_t(I)` for a strongly stable ideal, read off `G(I)`:
///
/// * `reg_t(I) = max{deg u : u in G(I), m(u) > n - t}`
/// * `a*_t(I) = max{deg u - n + m(u) - 1 : u in G(I), m(u) > n - t}`
pub fn strongly_stable_fast(
    ideal: &MonomialIdeal,
) -> Result<(Vec<ExtendedDegree>, Vec<ExtendedDegree>)> {
    if !crate::borel::is_strongly_stable_colon(ideal)? {
        return Err(Error::Precondition {
            op: "strongly_stable_fast",
            detail: "ideal is not strongly stable".into(),
        });
    }
    let n = ideal.n();
    // δ_i: largest degree of a minimal generator with m(u) = i
    let mut delta = vec![MinusInfinity; n + 1];
    for (m, gens) in ideal.gens_by_m_index() {
        delta[m] = ExtendedDegree::max_of(gens.iter().map(|g| Finite(g.degree() as i64)));
    }
    let reg = (0..=n)
        .map(|t| ExtendedDegree::max_of(((n - t + 1)..=n).map(|i| delta[i])))
        .collect();
    let astar = (0..=n)
        .map(|t| {
            ExtendedDegree::max_of(((n - t + 1)..=n).map(|i| delta[i] - n as i64 + i as i64 - 1))
        })
        .collect();
    Ok((reg, astar))
}

/// `min{e >= deg(I) : I_{>=e} is stable}`.
pub fn reg_via_stable_truncation(ideal: &MonomialIdeal) -> Result<ExtendedDegree> {
    require_borel(ideal)?;
    let deg = ideal.max_gen_degree().expect("proper nonzero");
    let cap = deg + ideal.max_exponents().iter().map(|&e| e as u64).sum::<u64>();
    for e in deg..=cap {
        if is_stable(&ideal.truncate(e))? {
            return Ok(Finite(e as i64));
        }
    }
    Err(Error::CapExceeded { cap })
}
