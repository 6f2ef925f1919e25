//! Ideals as element bitsets, and the per-ideal predicates.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use thiserror::Error;

use crate::bitset::ElementSet;
use crate::names;
use crate::ring::{ElementId, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideal over {found} elements used with a ring of order {expected}")]
    RingMismatch { expected: usize, found: usize },
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("ideal must be proper")]
    NotProper,
    #[error("unknown element {0:?}")]
    UnknownElement(String),
}

/// An ideal of a finite ring, stored as the set of its member indices.
///
/// The ideal does not hold a reference to its ring; functions taking both
/// check that the universe matches the ring order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    members: ElementSet,
}

impl Ideal {
    /// Validates the closure laws; returns the ideal or the first failure.
    pub fn from_set(ring: &FiniteRing, members: ElementSet) -> Result<Self, IdealError> {
        check_universe(ring, &members)?;
        if !members.contains(ring.zero().index()) {
            return Err(IdealError::NotAnIdeal("missing zero".into()));
        }
        let ids: Vec<ElementId> = members.iter().map(|i| ring.element(i).unwrap()).collect();
        for &a in &ids {
            if !members.contains(ring.neg(a).index()) {
                return Err(IdealError::NotAnIdeal(format!("-{} missing", ring.name(a))));
            }
            for &b in &ids {
                let s = ring.add(a, b);
                if !members.contains(s.index()) {
                    return Err(IdealError::NotAnIdeal(format!(
                        "{}+{} missing",
                        ring.name(a),
                        ring.name(b)
                    )));
                }
            }
            for r in ring.elements() {
                if !members.contains(ring.mul(a, r).index()) {
                    return Err(IdealError::NotAnIdeal(format!(
                        "{}*{} missing",
                        ring.name(a),
                        ring.name(r)
                    )));
                }
            }
        }
        Ok(Ideal { members })
    }

    pub(crate) fn from_set_unchecked(members: ElementSet) -> Self {
        Ideal { members }
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        Ideal {
            members: ElementSet::from_indices(ring.order(), [ring.zero().index()]),
        }
    }

    pub fn whole(ring: &FiniteRing) -> Self {
        Ideal {
            members: ElementSet::full(ring.order()),
        }
    }

    /// Parses an element-name list such as `{0,x,y,x+y}` and validates it.
    pub fn parse(ring: &FiniteRing, text: &str) -> Result<Self, IdealError> {
        let set = parse_elements(ring, text)?;
        Ideal::from_set(
            ring,
            ElementSet::from_indices(ring.order(), set.iter().map(|e| e.index())),
        )
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn contains(&self, a: ElementId) -> bool {
        self.members.contains(a.index())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        !self.members.is_full()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_strict_subset(&self, other: &Ideal) -> bool {
        self.members.is_strict_subset(&other.members)
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter().map(ElementId::from_index)
    }

    /// Sorted element-name list, e.g. `{0,x,y,x+y}`.
    pub fn render(&self, ring: &FiniteRing) -> String {
        names::render_list(
            self.members
                .iter()
                .map(|i| ring.element_names()[i].as_str()),
        )
    }
}

/// Resolves a comma-separated element-name list (braces optional). Purely
/// numeric tokens fall back to raw indices when no element has that name.
pub fn parse_elements(ring: &FiniteRing, text: &str) -> Result<Vec<ElementId>, IdealError> {
    names::split_top_level(names::strip_braces(text))
        .into_iter()
        .map(|tok| {
            ring.element_by_name(tok)
                .or_else(|| tok.parse::<usize>().ok().and_then(|i| ring.element(i).ok()))
                .ok_or_else(|| IdealError::UnknownElement(tok.into()))
        })
        .collect()
}

fn check_universe(ring: &FiniteRing, set: &ElementSet) -> Result<(), IdealError> {
    if set.universe() != ring.order() {
        return Err(IdealError::RingMismatch {
            expected: ring.order(),
            found: set.universe(),
        });
    }
    Ok(())
}

fn check_ideal(ring: &FiniteRing, ideal: &Ideal) -> Result<(), IdealError> {
    check_universe(ring, &ideal.members)
}

/// `{a·r : r ∈ R}`.
pub fn principal_ideal(ring: &FiniteRing, a: ElementId) -> Ideal {
    let mut members = ElementSet::empty(ring.order());
    for r in ring.elements() {
        members.insert(ring.mul(a, r).index());
    }
    Ideal { members }
}

/// Smallest ideal containing `gens`: closes `gens ∪ {0}` under addition,
/// negation and multiplication by ring elements.
pub fn ideal_generated(ring: &FiniteRing, gens: &[ElementId]) -> Ideal {
    let mut members = ElementSet::empty(ring.order());
    let mut found: Vec<ElementId> = Vec::new();
    let mut queue: Vec<ElementId> = vec![ring.zero()];
    queue.extend_from_slice(gens);
    while let Some(x) = queue.pop() {
        if !members.insert(x.index()) {
            continue;
        }
        queue.push(ring.neg(x));
        for r in ring.elements() {
            queue.push(ring.mul(x, r));
        }
        for &y in &found {
            queue.push(ring.add(x, y));
        }
        found.push(x);
    }
    Ideal { members }
}

/// `I + J = {i + j}`.
pub fn sum_ideals(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    check_ideal(ring, i)?;
    check_ideal(ring, j)?;
    Ok(sum_unchecked(ring, i, j))
}

pub(crate) fn sum_unchecked(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Ideal {
    if j.is_subset(i) {
        return i.clone();
    }
    if i.is_subset(j) {
        return j.clone();
    }
    let mut members = ElementSet::empty(ring.order());
    let js: Vec<ElementId> = j.iter().collect();
    for a in i.iter() {
        for &b in &js {
            members.insert(ring.add(a, b).index());
        }
    }
    Ideal { members }
}

/// `{a : a^n ∈ I for some 1 <= n <= |R|}`.
///
/// Powers of an element in a ring of order `N` repeat within `N` steps, so
/// no larger exponent can land in `I` first.
pub fn radical(ring: &FiniteRing, ideal: &Ideal) -> Result<Ideal, IdealError> {
    check_ideal(ring, ideal)?;
    let mut members = ElementSet::empty(ring.order());
    for a in ring.elements() {
        let mut power = a;
        for _ in 0..ring.order() {
            if ideal.contains(power) {
                members.insert(a.index());
                break;
            }
            power = ring.mul(power, a);
        }
    }
    Ok(Ideal { members })
}

/// First pair `(x, y)` with `xy ∈ P`, `x ∉ P`, `y ∉ P`.
pub fn prime_violation(ring: &FiniteRing, p: &Ideal) -> Option<(ElementId, ElementId)> {
    let outside: Vec<ElementId> = ring.elements().filter(|&x| !p.contains(x)).collect();
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i..] {
            if p.contains(ring.mul(x, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Proper, and `xy ∈ P` forces `x ∈ P` or `y ∈ P`.
pub fn is_prime(ring: &FiniteRing, p: &Ideal) -> Result<bool, IdealError> {
    check_ideal(ring, p)?;
    Ok(p.is_proper() && prime_violation(ring, p).is_none())
}

/// `x² ∈ I ⇒ x ∈ I`.
pub fn is_semiprime(ring: &FiniteRing, ideal: &Ideal) -> Result<bool, IdealError> {
    check_ideal(ring, ideal)?;
    Ok(ring
        .elements()
        .all(|x| ideal.contains(x) || !ideal.contains(ring.mul(x, x))))
}

/// Proper, and `xy ∈ I` forces `x ∈ I` or `y^n ∈ I` for some `n <= |R|`.
pub fn is_primary(ring: &FiniteRing, ideal: &Ideal) -> Result<bool, IdealError> {
    check_ideal(ring, ideal)?;
    if !ideal.is_proper() {
        return Ok(false);
    }
    let rad = radical(ring, ideal)?;
    for x in ring.elements().filter(|&x| !ideal.contains(x)) {
        for y in ring.elements().filter(|&y| !rad.contains(y)) {
            if ideal.contains(ring.mul(x, y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A generator `a` with `(a) = I`, trying elements in index order.
pub fn is_principal(ring: &FiniteRing, ideal: &Ideal) -> Result<Option<ElementId>, IdealError> {
    check_ideal(ring, ideal)?;
    Ok(ideal.iter().find(|&a| principal_ideal(ring, a) == *ideal))
}

/// Prime and principal.
pub fn is_ppri(ring: &FiniteRing, p: &Ideal) -> Result<bool, IdealError> {
    Ok(is_prime(ring, p)? && is_principal(ring, p)?.is_some())
}
