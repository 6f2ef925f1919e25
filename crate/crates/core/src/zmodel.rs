//! Symbolic model of `Z^k` (`1 <= k <= 3`) and its ideals
//! `n_1 Z × ... × n_k Z`.
//!
//! Ideals of a finite direct product of unital rings are products of ideals
//! of the factors, so an ideal is just its tuple of nonnegative generators:
//! `0` is the zero factor and `1` the whole factor.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::construct::is_prime_u64;
use crate::outcome::ClaimOutcome;

pub const MAX_ARITY: usize = 3;

/// Generator entries must stay below this bound.
pub const MAX_GENERATOR: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZModelError {
    #[error("arity {0} outside 1..=3")]
    Arity(usize),
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("generator {0} too large")]
    GeneratorTooLarge(u64),
    #[error("cannot parse ideal literal {0:?} (expected e.g. \"Z^2:(1,0)\")")]
    Syntax(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZProductIdeal {
    gens: Vec<u64>,
}

impl ZProductIdeal {
    pub fn new(gens: &[u64]) -> Result<Self, ZModelError> {
        if gens.is_empty() || gens.len() > MAX_ARITY {
            return Err(ZModelError::Arity(gens.len()));
        }
        if let Some(&g) = gens.iter().find(|&&g| g >= MAX_GENERATOR) {
            return Err(ZModelError::GeneratorTooLarge(g));
        }
        Ok(ZProductIdeal {
            gens: gens.to_vec(),
        })
    }

    pub fn arity(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    pub fn is_whole(&self) -> bool {
        self.gens.iter().all(|&g| g == 1)
    }

    /// Set notation: `Z×{0}`, `Z×Z_e`, `3Z×Z`, with `Z_e` the even integers.
    pub fn render_set(&self) -> String {
        self.gens
            .iter()
            .map(|&g| match g {
                0 => "{0}".to_string(),
                1 => "Z".to_string(),
                2 => "Z_e".to_string(),
                n => format!("{n}Z"),
            })
            .collect::<Vec<_>>()
            .join("×")
    }

    /// Membership of an integer tuple.
    pub fn contains_element(&self, x: &[i64]) -> bool {
        x.len() == self.gens.len()
            && self
                .gens
                .iter()
                .zip(x)
                .all(|(&n, &v)| divides(n, v.unsigned_abs()))
    }
}

impl fmt::Display for ZProductIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "Z^{}:({})", self.gens.len(), parts.join(","))
    }
}

impl FromStr for ZProductIdeal {
    type Err = ZModelError;

    /// `Z^k:(n1,...,nk)`; the `Z^k:` prefix may be omitted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || ZModelError::Syntax(s.to_string());
        let t = s.trim();
        let (arity, body) = match t.split_once(':') {
            Some((head, body)) => {
                let k = head
                    .trim()
                    .strip_prefix("Z^")
                    .and_then(|k| k.trim().parse::<usize>().ok())
                    .ok_or_else(syntax)?;
                (Some(k), body.trim())
            }
            None => (None, t),
        };
        let inner = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(syntax)?;
        let gens = inner
            .split(',')
            .map(|g| g.trim().parse::<u64>().map_err(|_| syntax()))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(k) = arity {
            if k != gens.len() {
                return Err(ZModelError::ArityMismatch(k, gens.len()));
            }
        }
        ZProductIdeal::new(&gens)
    }
}

/// `d | m` with `d | 0` for every `d` and `0 | m` only for `m = 0`.
fn divides(d: u64, m: u64) -> bool {
    if d == 0 {
        m == 0
    } else {
        m.is_multiple_of(d)
    }
}

/// `outer ⊇ inner`, i.e. each generator of `outer` divides the matching
/// generator of `inner` (`mZ ⊇ m'Z ⇔ m | m'`).
pub fn z_contains(outer: &ZProductIdeal, inner: &ZProductIdeal) -> Result<bool, ZModelError> {
    if outer.arity() != inner.arity() {
        return Err(ZModelError::ArityMismatch(outer.arity(), inner.arity()));
    }
    Ok(outer
        .gens
        .iter()
        .zip(&inner.gens)
        .all(|(&a, &b)| divides(a, b)))
}

/// Exactly one coordinate is `0` or a prime and the others are `1`, so the
/// quotient is `Z` or `Z_p`.
pub fn z_is_prime(i: &ZProductIdeal) -> bool {
    let non_unit: Vec<u64> = i.gens.iter().copied().filter(|&g| g != 1).collect();
    matches!(non_unit.as_slice(), [g] if *g == 0 || is_prime_u64(*g))
}

/// Exactly one coordinate is a prime and the others are `1`.
pub fn z_is_maximal(i: &ZProductIdeal) -> bool {
    let non_unit: Vec<u64> = i.gens.iter().copied().filter(|&g| g != 1).collect();
    matches!(non_unit.as_slice(), [g] if is_prime_u64(*g))
}

/// The generator tuple itself: `{(n_1 r_1, ..., n_k r_k)}` is the ideal.
pub fn z_principal_witness(i: &ZProductIdeal) -> Vec<i64> {
    i.gens.iter().map(|&g| g as i64).collect()
}

/// Bounded-box check that `witness` generates `i`: the multiples of the
/// witness landing in `[-bound, bound]^k` are exactly the ideal members in
/// that box. Both sets are products over coordinates, so the comparison is
/// done one coordinate at a time.
pub fn z_witness_validates(i: &ZProductIdeal, witness: &[i64], bound: i64) -> bool {
    if witness.len() != i.arity() {
        return false;
    }
    i.gens.iter().zip(witness).all(|(&n, &w)| {
        let mut multiples = vec![false; (2 * bound + 1) as usize];
        if w == 0 {
            multiples[bound as usize] = true;
        } else {
            let mut r = -(bound / w.abs());
            while r * w.abs() <= bound {
                multiples[(r * w.abs() + bound) as usize] = true;
                r += 1;
            }
        }
        (-bound..=bound).all(|x| multiples[(x + bound) as usize] == divides(n, x.unsigned_abs()))
    })
}

/// Default box half-width for witness validation: `10 * max(gens, 1)`.
pub fn default_bound(i: &ZProductIdeal) -> i64 {
    10 * i.gens.iter().copied().max().unwrap_or(1).max(1) as i64
}

/// An ideal strictly between `i` and the ring, if one exists.
pub fn z_intermediate(i: &ZProductIdeal) -> Option<ZProductIdeal> {
    if i.is_whole() {
        return None;
    }
    for (pos, &g) in i.gens.iter().enumerate() {
        let replacement = match g {
            1 => continue,
            0 => 2,
            g if !is_prime_u64(g) => smallest_prime_factor(g),
            _ => continue,
        };
        let mut gens = i.gens.clone();
        gens[pos] = replacement;
        return Some(ZProductIdeal { gens });
    }
    // every non-unit coordinate is prime; with two or more, open one up
    let primes: Vec<usize> = (0..i.arity()).filter(|&p| i.gens[p] != 1).collect();
    if primes.len() >= 2 {
        let mut gens = i.gens.clone();
        gens[primes[1]] = 1;
        return Some(ZProductIdeal { gens });
    }
    None
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..).find(|d| n.is_multiple_of(*d)).unwrap()
}

/// Everything the audit reports about one ideal of `Z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZExamination {
    pub prime: bool,
    pub maximal: bool,
    pub witness: Vec<i64>,
    pub witness_valid: bool,
    /// `I ⊂ J ⊂ Z^k` when `J` is an intermediate ideal.
    pub chain: Option<[ZProductIdeal; 3]>,
}

pub fn examine(i: &ZProductIdeal) -> ZExamination {
    let witness = z_principal_witness(i);
    let witness_valid = z_witness_validates(i, &witness, default_bound(i));
    let chain = z_intermediate(i).map(|mid| {
        let whole = ZProductIdeal {
            gens: vec![1; i.arity()],
        };
        [i.clone(), mid, whole]
    });
    ZExamination {
        prime: z_is_prime(i),
        maximal: z_is_maximal(i),
        witness,
        witness_valid,
        chain,
    }
}

pub fn render_chain(chain: &[ZProductIdeal]) -> String {
    chain
        .iter()
        .map(|i| i.render_set())
        .collect::<Vec<_>>()
        .join(" ⊂ ")
}

/// A prime ideal of the PPRIR `Z×Z` that is not maximal: `Z×{0}`.
pub fn audit_ex2() -> ClaimOutcome {
    let p = ZProductIdeal::new(&[1, 0]).unwrap();
    let ex = examine(&p);
    let chain_ok = ex.chain.as_ref().is_some_and(|c| {
        z_contains(&c[1], &c[0]) == Ok(true)
            && z_contains(&c[0], &c[1]) == Ok(false)
            && z_contains(&c[2], &c[1]) == Ok(true)
            && z_contains(&c[1], &c[2]) == Ok(false)
    });
    let holds = ex.prime && !ex.maximal && ex.witness_valid && chain_ok;
    ClaimOutcome {
        holds,
        // every prime of Z×Z has product form and is generated by its tuple
        hypothesis_met: true,
        cases: 1,
        witness: ex.chain.as_ref().map(|c| render_chain(c)),
    }
}
