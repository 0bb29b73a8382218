//! Deterministic random Borel-type ideals.
//!
//! Samples are built from irreducible ideals `m^b` whose support is an
//! initial segment `{1, ..., s}` and combined by intersections, sums and
//! products, all of which preserve Borel type. Randomness comes from
//! SplitMix64 (see `docs/rng.md`): a master generator seeded with the
//! configured seed emits one 64-bit seed per attempted sample, and each
//! sample is drawn from its own generator.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::borel::is_borel_type;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// SplitMix64 (Steele, Lea, Flood 2014).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (multiply-shift; bias is below 2^-32 for the
    /// small bounds used here).
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() >> 32) * bound) >> 32
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Intersect,
    Sum,
    Product,
}

impl FromStr for Op {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "intersect" => Ok(Op::Intersect),
            "sum" => Ok(Op::Sum),
            "product" => Ok(Op::Product),
            _ => Err(format!("unknown op `{s}`")),
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::Intersect => "intersect",
            Op::Sum => "sum",
            Op::Product => "product",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub n_max: usize,
    pub exp_max: u32,
    pub ops: BTreeSet<Op>,
    pub depth: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 1,
            count: 500,
            n_max: 4,
            exp_max: 5,
            ops: BTreeSet::from([Op::Intersect, Op::Sum]),
            depth: 2,
        }
    }
}

pub const MAX_N: usize = 6;
pub const MAX_EXP: u32 = 8;
pub const MAX_DEPTH: usize = 3;

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_N).contains(&self.n_max) {
            return Err(Error::Config(format!("n_max must be in 1..={MAX_N}")));
        }
        if !(1..=MAX_EXP).contains(&self.exp_max) {
            return Err(Error::Config(format!("exp_max must be in 1..={MAX_EXP}")));
        }
        if self.depth > MAX_DEPTH {
            return Err(Error::Config(format!("depth must be at most {MAX_DEPTH}")));
        }
        if self.ops.is_empty() && self.depth > 0 {
            return Err(Error::Config("ops must be nonempty when depth > 0".into()));
        }
        Ok(())
    }
}

/// Irreducible `m^b` with support `{1, ..., s}` for a random `s`.
fn initial_segment_leaf(rng: &mut SplitMix64, n: usize, exp_max: u32) -> MonomialIdeal {
    let s = rng.range(1, n as u64) as usize;
    let b: Vec<u32> = (0..n)
        .map(|i| {
            if i < s {
                rng.range(1, exp_max as u64) as u32
            } else {
                0
            }
        })
        .collect();
    MonomialIdeal::pure_powers(&b)
}

fn tree(
    rng: &mut SplitMix64,
    cfg: &FuzzConfig,
    ops: &[Op],
    n: usize,
    depth: usize,
) -> MonomialIdeal {
    if depth == 0 {
        return initial_segment_leaf(rng, n, cfg.exp_max);
    }
    let op = ops[rng.below(ops.len() as u64) as usize];
    let left = tree(rng, cfg, ops, n, depth - 1);
    let right = tree(rng, cfg, ops, n, depth - 1);
    match op {
        Op::Intersect => left.intersect(&right),
        Op::Sum => left.sum(&right),
        Op::Product => left.product(&right),
    }
    .expect("same ambient ring")
}

/// Samples with the number of discarded (non-Borel) draws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzOutcome<T> {
    pub samples: Vec<T>,
    pub discarded: usize,
}

fn draw<T>(
    cfg: &FuzzConfig,
    salt: u64,
    mut make: impl FnMut(&mut SplitMix64) -> T,
    valid: impl Fn(&T) -> bool,
) -> Result<FuzzOutcome<T>> {
    cfg.validate()?;
    let mut master = SplitMix64::new(cfg.seed ^ salt);
    let mut samples = Vec::with_capacity(cfg.count);
    let mut discarded = 0;
    while samples.len() < cfg.count {
        let mut rng = SplitMix64::new(master.next_u64());
        let s = make(&mut rng);
        if valid(&s) {
            samples.push(s);
        } else {
            discarded += 1;
            if discarded > 10 * cfg.count + 100 {
                return Err(Error::Config("too many samples failed validation".into()));
            }
        }
    }
    Ok(FuzzOutcome { samples, discarded })
}

fn borel_ok(i: &MonomialIdeal) -> bool {
    i.is_proper_nonzero() && is_borel_type(i).unwrap_or(false)
}

/// `cfg.count` Borel-type ideals.
pub fn fuzz_borel(cfg: &FuzzConfig) -> Result<FuzzOutcome<MonomialIdeal>> {
    let ops: Vec<Op> = cfg.ops.iter().copied().collect();
    draw(
        cfg,
        0,
        |rng| {
            let n = rng.range(1, cfg.n_max as u64) as usize;
            tree(rng, cfg, &ops, n, cfg.depth)
        },
        borel_ok,
    )
}

/// `cfg.count` pairs of Borel-type ideals in a common ring.
pub fn fuzz_borel_pairs(cfg: &FuzzConfig) -> Result<FuzzOutcome<(MonomialIdeal, MonomialIdeal)>> {
    let ops: Vec<Op> = cfg.ops.iter().copied().collect();
    draw(
        cfg,
        0x5041_4952_5300_0000,
        |rng| {
            let n = rng.range(1, cfg.n_max as u64) as usize;
            let k = tree(rng, cfg, &ops, n, cfg.depth);
            let l = tree(rng, cfg, &ops, n, cfg.depth);
            (k, l)
        },
        |(k, l)| borel_ok(k) && borel_ok(l),
    )
}

/// `cfg.count` arbitrary proper nonzero monomial ideals, with up to
/// `n_max + 2` random generators.
pub fn fuzz_general(cfg: &FuzzConfig) -> Result<FuzzOutcome<MonomialIdeal>> {
    draw(
        cfg,
        0x4745_4E45_5241_4C00,
        |rng| {
            let n = rng.range(1, cfg.n_max as u64) as usize;
            let k = rng.range(1, cfg.n_max as u64 + 2);
            random_ideal(rng, n, cfg.exp_max, k as usize)
        },
        MonomialIdeal::is_proper_nonzero,
    )
}

/// `cfg.count` strongly stable ideals: the smallest strongly stable ideal
/// containing one to three random monomials.
pub fn fuzz_strongly_stable(cfg: &FuzzConfig) -> Result<FuzzOutcome<MonomialIdeal>> {
    draw(
        cfg,
        0x5353_5441_424C_4500,
        |rng| {
            let n = rng.range(1, cfg.n_max as u64) as usize;
            let k = rng.range(1, 3);
            let seeds = random_ideal(rng, n, cfg.exp_max.min(3), k as usize);
            strongly_stable_closure(&seeds)
        },
        MonomialIdeal::is_proper_nonzero,
    )
}

fn random_ideal(rng: &mut SplitMix64, n: usize, exp_max: u32, k: usize) -> MonomialIdeal {
    let gens: Vec<Monomial> = (0..k)
        .map(|_| {
            let mut e: Vec<u32> = (0..n)
                .map(|_| rng.range(0, exp_max as u64) as u32)
                .collect();
            if e.iter().all(|&v| v == 0) {
                let i = rng.below(n as u64) as usize;
                e[i] = 1;
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::from_checked(n, gens)
}

/// Closes `G(I)` under the moves `u ↦ x_i·u/x_j` for `i < j`, `x_j | u`.
pub fn strongly_stable_closure(ideal: &MonomialIdeal) -> MonomialIdeal {
    let n = ideal.n();
    let mut seen: BTreeSet<Monomial> = ideal.gens().iter().cloned().collect();
    let mut stack: Vec<Monomial> = seen.iter().cloned().collect();
    while let Some(u) = stack.pop() {
        for j in u.support().collect::<Vec<_>>() {
            for i in 1..j {
                let v = u.with_exp(j, u.exp(j) - 1);
                let v = v.with_exp(i, v.exp(i) + 1);
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
    }
    MonomialIdeal::from_checked(n, seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::is_strongly_stable_colon;

    #[test]
    fn splitmix_reference_values() {
        // first outputs for seed 0 of the reference implementation
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(r.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn same_seed_same_stream() {
        let cfg = FuzzConfig {
            count: 20,
            ..FuzzConfig::default()
        };
        assert_eq!(fuzz_borel(&cfg).unwrap(), fuzz_borel(&cfg).unwrap());
        let other = FuzzConfig {
            seed: 2,
            ..cfg.clone()
        };
        assert_ne!(
            fuzz_borel(&cfg).unwrap().samples,
            fuzz_borel(&other).unwrap().samples
        );
    }

    #[test]
    fn single_intersect_sample() {
        let cfg = FuzzConfig {
            seed: 1,
            count: 1,
            ops: BTreeSet::from([Op::Intersect]),
            ..FuzzConfig::default()
        };
        let out = fuzz_borel(&cfg).unwrap();
        assert_eq!(out.discarded, 0);
        assert!(is_borel_type(&out.samples[0]).unwrap());
    }

    #[test]
    fn depth_zero_is_one_component() {
        let cfg = FuzzConfig {
            count: 50,
            depth: 0,
            ..FuzzConfig::default()
        };
        let out = fuzz_borel(&cfg).unwrap();
        assert_eq!(out.discarded, 0);
        for i in &out.samples {
            assert!(i.gens().iter().all(|g| g.support().count() == 1));
            assert!(is_borel_type(i).unwrap());
        }
    }

    #[test]
    fn closure_is_strongly_stable() {
        let cfg = FuzzConfig {
            count: 50,
            ..FuzzConfig::default()
        };
        for i in fuzz_strongly_stable(&cfg).unwrap().samples {
            assert!(is_strongly_stable_colon(&i).unwrap(), "{i}");
        }
    }

    #[test]
    fn config_bounds() {
        let bad = FuzzConfig {
            depth: 4,
            ..FuzzConfig::default()
        };
        assert!(matches!(fuzz_borel(&bad), Err(Error::Config(_))));
        let bad = FuzzConfig {
            n_max: 0,
            ..FuzzConfig::default()
        };
        assert!(bad.validate().is_err());
        let empty = FuzzConfig {
            count: 0,
            ..FuzzConfig::default()
        };
        assert!(fuzz_borel(&empty).unwrap().samples.is_empty());
    }
}
