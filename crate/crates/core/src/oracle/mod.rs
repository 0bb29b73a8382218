//! Ground truth independent of the decomposition formulas: graded Betti
//! numbers from upper Koszul simplicial complexes, turned into partial
//! regularities by
//! `reg_t(M) = max{b_i - i : i >= n - t}`, `a*_t(M) = max{b_i : i >= n - t} - n`.

mod linalg;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::borel::satiety_quotient;
use crate::degree::{ExtendedDegree, Finite, MinusInfinity};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub use linalg::{rank_mod_p, rank_rational, Field};

/// Environment variable that raises the oracle's size limits. Accepts
/// `off`, or `N,E` for at most `N` variables and exponents at most `E`.
pub const SCALE_GUARD_ENV: &str = "BOREL_SCALE_GUARD";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScaleGuard {
    pub max_vars: usize,
    pub max_exponent: u32,
}

impl Default for ScaleGuard {
    fn default() -> Self {
        ScaleGuard {
            max_vars: 5,
            max_exponent: 8,
        }
    }
}

impl ScaleGuard {
    pub const OFF: ScaleGuard = ScaleGuard {
        max_vars: usize::MAX,
        max_exponent: u32::MAX,
    };

    pub fn parse(spec: &str) -> Option<ScaleGuard> {
        let spec = spec.trim();
        if spec.eq_ignore_ascii_case("off") {
            return Some(ScaleGuard::OFF);
        }
        let (n, e) = spec.split_once(',')?;
        Some(ScaleGuard {
            max_vars: n.trim().parse().ok()?,
            max_exponent: e.trim().parse().ok()?,
        })
    }

    /// The default guard, or whatever `BOREL_SCALE_GUARD` asks for.
    pub fn from_env() -> ScaleGuard {
        std::env::var(SCALE_GUARD_ENV)
            .ok()
            .and_then(|s| ScaleGuard::parse(&s))
            .unwrap_or_default()
    }

    fn check(&self, ideal: &MonomialIdeal) -> Result<()> {
        if ideal.n() > self.max_vars {
            return Err(Error::ScaleGuard {
                detail: format!("{} variables > {}", ideal.n(), self.max_vars),
            });
        }
        let top = ideal.max_exponents().into_iter().max().unwrap_or(0);
        if top > self.max_exponent {
            return Err(Error::ScaleGuard {
                detail: format!("exponent {top} > {}", self.max_exponent),
            });
        }
        Ok(())
    }
}

/// Graded Betti numbers `β_{i,j}(S/I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field: Field,
    entries: BTreeMap<(usize, u64), u64>,
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn beta(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u64), u64> {
        &self.entries
    }

    /// `Σ_j β_{i,j}(S/I)`.
    pub fn total_rank(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, u64::MAX))
            .map(|(_, &v)| v)
            .sum()
    }

    /// `b_i(S/I)` for `i = 0..=n`: the largest degree of a generator of `F_i`.
    pub fn top_degrees(&self) -> Vec<ExtendedDegree> {
        (0..=self.n)
            .map(|i| {
                self.entries
                    .range((i, 0)..=(i, u64::MAX))
                    .filter(|(_, &v)| v > 0)
                    .map(|(&(_, j), _)| Finite(j as i64))
                    .max()
                    .unwrap_or(MinusInfinity)
            })
            .collect()
    }

    /// `b_i(I) = b_{i+1}(S/I)` for `i = 0..=n`.
    pub fn ideal_top_degrees(&self) -> Vec<ExtendedDegree> {
        let mut b = self.top_degrees();
        b.remove(0);
        b.push(MinusInfinity);
        b
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .entries
            .iter()
            .map(|(&(i, j), &beta)| serde_json::json!({ "i": i, "j": j, "beta": beta }))
            .collect();
        serde_json::json!({
            "n": self.n,
            "field": self.field.label(),
            "entries": entries,
            "top_degrees": self.top_degrees(),
        })
    }
}

/// Betti table of `S/I` over the rationals, under the environment's guard.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_table_with(ideal, Field::Rational, ScaleGuard::from_env())
}

pub fn betti_table_with(
    ideal: &MonomialIdeal,
    field: Field,
    guard: ScaleGuard,
) -> Result<BettiTable> {
    ideal.require_proper_nonzero("betti_table")?;
    guard.check(ideal)?;
    let n = ideal.n();
    let top = ideal.max_exponents();

    let mut multidegrees = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        multidegrees.push(Monomial::new(cur.clone()));
        let Some(k) = (0..n).find(|&k| cur[k] < top[k]) else {
            break;
        };
        cur[k] += 1;
        cur[..k].iter_mut().for_each(|e| *e = 0);
    }

    let per_degree: Vec<Vec<(usize, u64, u64)>> = multidegrees
        .par_iter()
        .map(|b| koszul_betti(ideal, b, field))
        .collect::<Result<_>>()?;

    let mut entries = BTreeMap::from([((0usize, 0u64), 1u64)]);
    for (i, j, beta) in per_degree.into_iter().flatten() {
        *entries.entry((i + 1, j)).or_insert(0) += beta;
    }
    Ok(BettiTable { n, field, entries })
}

/// `β_{i,b}(I) = dim H̃_{i-1}(K^b(I))` where
/// `K^b(I) = {squarefree τ <= b : x^{b-τ} in I}`; returns `(i, |b|, β)` for
/// the nonzero values.
fn koszul_betti(
    ideal: &MonomialIdeal,
    b: &Monomial,
    field: Field,
) -> Result<Vec<(usize, u64, u64)>> {
    if !ideal.contains(b) {
        return Ok(Vec::new());
    }
    // Unless b is the lcm of the generators dividing it, K^b is a cone.
    let lcm = ideal
        .gens()
        .iter()
        .filter(|g| g.divides(b))
        .fold(Monomial::one(b.n()), |acc, g| acc.lcm(g));
    if lcm != *b {
        return Ok(Vec::new());
    }

    let supp: Vec<usize> = b.support().collect();
    let k = supp.len();
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    for mask in 0u32..(1 << k) {
        let mut m = b.clone();
        for (pos, &var) in supp.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                m = m.with_exp(var, m.exp(var) - 1);
            }
        }
        if ideal.contains(&m) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    // faces[s] holds faces with s vertices, i.e. dimension s - 1.
    let boundaries: Vec<Vec<Vec<i64>>> = (1..=k)
        .map(|s| boundary(&faces[s - 1], &faces[s]))
        .collect();
    for w in boundaries.windows(2) {
        if !composes_to_zero(&w[0], &w[1]) {
            return Err(Error::InconsistentHomology(
                "boundary of a boundary is nonzero".into(),
            ));
        }
    }
    let ranks: Vec<usize> = boundaries
        .iter()
        .map(|m| field.rank(m))
        .collect::<Result<_>>()?;
    let rank_of = |s: usize| {
        if (1..=k).contains(&s) {
            ranks[s - 1]
        } else {
            0
        }
    };

    let deg = b.degree();
    let mut out = Vec::new();
    let mut euler_faces = 0i64;
    let mut euler_homology = 0i64;
    for (s, level) in faces.iter().enumerate().take(k + 1) {
        let f = level.len();
        // map out of s-vertex faces has rank rank_of(s); map into them rank_of(s + 1)
        let h = f
            .checked_sub(rank_of(s) + rank_of(s + 1))
            .ok_or_else(|| Error::InconsistentHomology("negative homology rank".into()))?;
        let sign = if s % 2 == 0 { -1 } else { 1 };
        euler_faces += sign * f as i64;
        euler_homology += sign * h as i64;
        if h > 0 {
            // H̃_{s-1} contributes to β_s(I)
            out.push((s, deg, h as u64));
        }
    }
    if euler_faces != euler_homology {
        return Err(Error::InconsistentHomology(
            "Euler characteristic mismatch".into(),
        ));
    }
    Ok(out)
}

/// Matrix of the simplicial boundary from `upper` faces to `lower` faces,
/// one row per lower face.
fn boundary(lower: &[u32], upper: &[u32]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (c, &face) in upper.iter().enumerate() {
        let mut sign = 1;
        for v in 0..32 {
            if face & (1 << v) == 0 {
                continue;
            }
            let r = lower
                .binary_search(&(face & !(1 << v)))
                .expect("simplicial complex is closed under subsets");
            m[r][c] = sign;
            sign = -sign;
        }
    }
    m
}

fn composes_to_zero(lower: &[Vec<i64>], upper: &[Vec<i64>]) -> bool {
    let inner = upper.len();
    lower.iter().all(|row| {
        (0..upper.first().map_or(0, Vec::len))
            .all(|c| (0..inner).map(|k| row[k] * upper[k][c]).sum::<i64>() == 0)
    })
}

/// `reg_t` and `a*_t` for `t = 0..=n` from top degrees `b_0..b_n` of a
/// minimal free resolution.
pub fn trung_from_top_degrees(
    n: usize,
    b: &[ExtendedDegree],
) -> (Vec<ExtendedDegree>, Vec<ExtendedDegree>) {
    let mut reg = Vec::with_capacity(n + 1);
    let mut astar = Vec::with_capacity(n + 1);
    for t in 0..=n {
        let range = (n - t)..=n;
        reg.push(ExtendedDegree::max_of(
            range.clone().map(|i| b[i] - i as i64),
        ));
        astar.push(ExtendedDegree::max_of(range.map(|i| b[i])) - n as i64);
    }
    (reg, astar)
}

/// `reg_t(S/I)` and `a*_t(S/I)` for `t = 0..=n`.
pub fn trung_invariants(table: &BettiTable) -> (Vec<ExtendedDegree>, Vec<ExtendedDegree>) {
    trung_from_top_degrees(table.n, &table.top_degrees())
}

/// `reg_t(I)` and `a*_t(I)`, from the resolution of `I` itself.
pub fn trung_invariants_ideal(table: &BettiTable) -> (Vec<ExtendedDegree>, Vec<ExtendedDegree>) {
    trung_from_top_degrees(table.n, &table.ideal_top_degrees())
}

/// `a_0(S/I)` read directly as the top degree of `I^sat/I`.
pub fn a0_direct(ideal: &MonomialIdeal) -> Result<ExtendedDegree> {
    satiety_quotient(ideal)
}
