//! The lattice of all ideals of a ring, and the ring-level predicates that
//! need it (maximality, spectrum, minimal primes, PPRIR classification).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::ideal::{self, Ideal, IdealError};
use crate::ring::FiniteRing;

/// Every ideal of a ring, deduplicated and in canonical (lexicographic
/// bitset) order. Index 0 is always `{0}` and the last index is `R`.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    order: usize,
    ideals: Vec<Ideal>,
}

/// Enumerates all ideals as the closure of the principal ideals under
/// pairwise sum. Every ideal of a finite ring is a finite sum of principal
/// ideals, so adding one principal ideal at a time reaches all of them.
pub fn all_ideals(ring: &FiniteRing) -> IdealLattice {
    let principals: BTreeSet<Ideal> = ring
        .elements()
        .map(|a| ideal::principal_ideal(ring, a))
        .collect();
    let principals: Vec<Ideal> = principals.into_iter().collect();
    let mut seen: BTreeSet<Ideal> = principals.iter().cloned().collect();
    let mut frontier: Vec<Ideal> = principals.clone();
    while let Some(current) = frontier.pop() {
        for p in &principals {
            if p.is_subset(&current) {
                continue;
            }
            let s = ideal::sum_unchecked(ring, &current, p);
            if !seen.contains(&s) {
                seen.insert(s.clone());
                frontier.push(s);
            }
        }
    }
    seen.insert(Ideal::zero(ring));
    IdealLattice {
        order: ring.order(),
        ideals: seen.into_iter().collect(),
    }
}

impl IdealLattice {
    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.ideals.binary_search(ideal).ok()
    }

    pub fn proper(&self) -> impl Iterator<Item = &Ideal> {
        self.ideals.iter().filter(|i| i.is_proper())
    }

    /// `ideals[i] ⊆ ideals[j]`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.ideals[i].is_subset(&self.ideals[j])
    }

    /// The full containment relation as index pairs, reflexive pairs included.
    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.ideals.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.leq(i, j))
            .collect()
    }

    /// Covering pairs `(i, j)`: `ideals[i] ⊊ ideals[j]` with nothing between.
    pub fn covering_edges(&self) -> Vec<(usize, usize)> {
        let n = self.ideals.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (&self.ideals[i], &self.ideals[j]);
                if a.is_strict_subset(b)
                    && !self
                        .ideals
                        .iter()
                        .any(|m| a.is_strict_subset(m) && m.is_strict_subset(b))
                {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Proper, with no ideal strictly between it and the ring.
    pub fn is_maximal(&self, p: &Ideal) -> bool {
        p.is_proper()
            && !self
                .ideals
                .iter()
                .any(|m| m.is_proper() && p.is_strict_subset(m))
    }

    /// Some ideal strictly between `p` and the ring, if any.
    pub fn intermediate(&self, p: &Ideal) -> Option<&Ideal> {
        self.ideals
            .iter()
            .find(|m| m.is_proper() && p.is_strict_subset(m))
    }

    pub fn maximal_ideals(&self) -> Vec<Ideal> {
        self.ideals
            .iter()
            .filter(|p| self.is_maximal(p))
            .cloned()
            .collect()
    }

    pub fn primes(&self, ring: &FiniteRing) -> Vec<Ideal> {
        self.ideals
            .iter()
            .filter(|p| p.is_proper() && ideal::prime_violation(ring, p).is_none())
            .cloned()
            .collect()
    }

    /// First prime in canonical order that is not principal.
    pub fn pprir_witness(&self, ring: &FiniteRing) -> Option<Ideal> {
        self.primes(ring)
            .into_iter()
            .find(|p| !is_principal_fast(ring, p))
    }

    pub fn minimal_primes_over(
        &self,
        ring: &FiniteRing,
        i: &Ideal,
    ) -> Result<Vec<Ideal>, IdealError> {
        if i.members().universe() != self.order {
            return Err(IdealError::RingMismatch {
                expected: self.order,
                found: i.members().universe(),
            });
        }
        if !i.is_proper() {
            return Err(IdealError::NotProper);
        }
        let over: Vec<Ideal> = self
            .primes(ring)
            .into_iter()
            .filter(|p| i.is_subset(p))
            .collect();
        Ok(over
            .iter()
            .filter(|p| !over.iter().any(|q| q.is_strict_subset(p)))
            .cloned()
            .collect())
    }

    /// Covering edges as lines `<ideal> -> <ideal>`.
    pub fn edge_list(&self, ring: &FiniteRing) -> String {
        let mut out = String::new();
        for (i, j) in self.covering_edges() {
            let _ = writeln!(
                out,
                "{} -> {}",
                self.ideals[i].render(ring),
                self.ideals[j].render(ring)
            );
        }
        out
    }

    pub fn to_dot(&self, ring: &FiniteRing) -> String {
        let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", escape(ring.label()));
        for (k, ideal) in self.ideals.iter().enumerate() {
            let _ = writeln!(out, "  i{k} [label=\"{}\"];", escape(&ideal.render(ring)));
        }
        for (i, j) in self.covering_edges() {
            let _ = writeln!(out, "  i{i} -> i{j};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

// a generator of an ideal I lies in I and its principal ideal has |I| elements
fn is_principal_fast(ring: &FiniteRing, i: &Ideal) -> bool {
    i.iter()
        .any(|a| ideal::principal_ideal(ring, a).len() == i.len())
}

/// Proper, with no ideal strictly between it and the ring.
pub fn is_maximal(ring: &FiniteRing, p: &Ideal) -> Result<bool, IdealError> {
    check(ring, p)?;
    Ok(all_ideals(ring).is_maximal(p))
}

/// All prime ideals in canonical order.
pub fn prime_spectrum(ring: &FiniteRing) -> Vec<Ideal> {
    all_ideals(ring).primes(ring)
}

/// Primes containing `i` that contain no smaller prime containing `i`.
pub fn minimal_primes_over(ring: &FiniteRing, i: &Ideal) -> Result<Vec<Ideal>, IdealError> {
    check(ring, i)?;
    all_ideals(ring).minimal_primes_over(ring, i)
}

pub fn is_pprir(ring: &FiniteRing) -> bool {
    pprir_witness(ring).is_none()
}

/// A non-principal prime, first in canonical order, when the ring is not PPRIR.
pub fn pprir_witness(ring: &FiniteRing) -> Option<Ideal> {
    all_ideals(ring).pprir_witness(ring)
}

fn check(ring: &FiniteRing, i: &Ideal) -> Result<(), IdealError> {
    if i.members().universe() != ring.order() {
        return Err(IdealError::RingMismatch {
            expected: ring.order(),
            found: i.members().universe(),
        });
    }
    Ok(())
}

/// Ring-level flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_domain: bool,
    pub is_field: bool,
    pub is_boolean: bool,
    pub is_pprir: bool,
    /// Non-principal prime refuting PPRIR.
    pub witness: Option<Ideal>,
}

impl Classification {
    pub fn from_lattice(ring: &FiniteRing, lattice: &IdealLattice) -> Self {
        let zero = ring.zero();
        let nonzero = || ring.elements().filter(move |&a| a != zero);
        let is_domain = nonzero().all(|a| nonzero().all(|b| ring.mul(a, b) != zero));
        let is_field = nonzero().all(|a| ring.is_unit(a));
        let is_boolean = ring.elements().all(|a| ring.is_idempotent(a));
        let witness = lattice.pprir_witness(ring);
        Classification {
            is_domain,
            is_field,
            is_boolean,
            is_pprir: witness.is_none(),
            witness,
        }
    }

    /// PPRIR and a domain.
    pub fn is_pprid(&self) -> bool {
        self.is_pprir && self.is_domain
    }
}

pub fn classify_ring(ring: &FiniteRing) -> Classification {
    Classification::from_lattice(ring, &all_ideals(ring))
}
