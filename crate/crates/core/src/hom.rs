//! Unital ring homomorphisms between finite rings.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use thiserror::Error;

use crate::bitset::ElementSet;
use crate::ideal::Ideal;
use crate::lattice::classify_ring;
use crate::outcome::ClaimOutcome;
use crate::ring::{ElementId, FiniteRing};

/// Default ceiling on ring order for the endomorphism search.
pub const DEFAULT_ENDO_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("map has {found} entries but the source has {expected} elements")]
    SizeMismatch { expected: usize, found: usize },
    #[error("image index {index} out of range for target order {order}")]
    ImageOutOfRange { index: usize, order: usize },
    #[error("map is not a unital ring homomorphism")]
    NotAHomomorphism,
    #[error("ring order {order} is above the endomorphism search cap {cap}")]
    AboveCap { order: usize, cap: usize },
}

/// A total element map between two rings.
#[derive(Clone, Debug)]
pub struct RingHom<'a> {
    source: &'a FiniteRing,
    target: &'a FiniteRing,
    map: Vec<ElementId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomKind {
    pub injective: bool,
    pub surjective: bool,
}

impl<'a> RingHom<'a> {
    /// Wraps an index array; laws are not checked here (see [`RingHom::check`]).
    pub fn new(
        source: &'a FiniteRing,
        target: &'a FiniteRing,
        map: &[usize],
    ) -> Result<Self, HomError> {
        if map.len() != source.order() {
            return Err(HomError::SizeMismatch {
                expected: source.order(),
                found: map.len(),
            });
        }
        let map = map
            .iter()
            .map(|&i| {
                target.element(i).map_err(|_| HomError::ImageOutOfRange {
                    index: i,
                    order: target.order(),
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(RingHom {
            source,
            target,
            map,
        })
    }

    pub(crate) fn from_ids(
        source: &'a FiniteRing,
        target: &'a FiniteRing,
        map: Vec<ElementId>,
    ) -> Self {
        RingHom {
            source,
            target,
            map,
        }
    }

    pub fn identity(ring: &'a FiniteRing) -> Self {
        RingHom {
            source: ring,
            target: ring,
            map: ring.elements().collect(),
        }
    }

    pub fn source(&self) -> &'a FiniteRing {
        self.source
    }

    pub fn target(&self) -> &'a FiniteRing {
        self.target
    }

    pub fn apply(&self, a: ElementId) -> ElementId {
        self.map[a.index()]
    }

    pub fn indices(&self) -> Vec<usize> {
        self.map.iter().map(|e| e.index()).collect()
    }

    /// Preserves `+`, `×` and `1`, checked over all pairs.
    pub fn check(&self) -> bool {
        let (s, t) = (self.source, self.target);
        if self.apply(s.one()) != t.one() {
            return false;
        }
        s.elements().all(|a| {
            s.elements().all(|b| {
                self.apply(s.add(a, b)) == t.add(self.apply(a), self.apply(b))
                    && self.apply(s.mul(a, b)) == t.mul(self.apply(a), self.apply(b))
            })
        })
    }

    pub fn kernel(&self) -> Result<Ideal, HomError> {
        if !self.check() {
            return Err(HomError::NotAHomomorphism);
        }
        let zero = self.target.zero();
        let members = ElementSet::from_indices(
            self.source.order(),
            self.source
                .elements()
                .filter(|&a| self.apply(a) == zero)
                .map(|a| a.index()),
        );
        Ok(Ideal::from_set_unchecked(members))
    }

    pub fn image(&self) -> ElementSet {
        ElementSet::from_indices(self.target.order(), self.map.iter().map(|e| e.index()))
    }

    /// Injectivity is read off the kernel, surjectivity off the image.
    pub fn classify(&self) -> Result<HomKind, HomError> {
        let kernel = self.kernel()?;
        Ok(HomKind {
            injective: kernel.is_zero_ideal(),
            surjective: self.image().is_full(),
        })
    }

    /// `source->target:[i0,i1,...]`
    pub fn render(&self) -> String {
        let body: Vec<String> = self.map.iter().map(|e| format!("{}", e.index())).collect();
        format!(
            "{}->{}:[{}]",
            self.source.label(),
            self.target.label(),
            body.join(",")
        )
    }
}

impl PartialEq for RingHom<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.map == other.map
    }
}

/// All unital endomorphisms of `ring`, in lexicographic order of their
/// index arrays.
///
/// Backtracks over images of an additive generating set that starts with
/// `1` (whose image is forced). A candidate image must have additive order
/// dividing the generator's; each partial map is extended additively and
/// pruned on additive conflicts and on multiplicativity within the span.
pub fn endomorphisms(ring: &FiniteRing, cap: usize) -> Result<Vec<RingHom<'_>>, HomError> {
    if ring.order() > cap {
        return Err(HomError::AboveCap {
            order: ring.order(),
            cap,
        });
    }
    let mut gens = vec![ring.one()];
    let mut span = span_of(ring, &gens);
    while let Some(next) = ring.elements().find(|e| !span.contains(e.index())) {
        gens.push(next);
        span = span_of(ring, &gens);
    }
    let orders: Vec<usize> = ring.elements().map(|e| ring.additive_order(e)).collect();

    let mut partial: Vec<Option<ElementId>> = vec![None; ring.order()];
    partial[ring.zero().index()] = Some(ring.zero());
    let mut found = Vec::new();
    search(ring, &gens, &orders, 0, partial, &mut found);
    found.sort();
    Ok(found
        .into_iter()
        .map(|m| RingHom::from_ids(ring, ring, m))
        .collect())
}

fn span_of(ring: &FiniteRing, gens: &[ElementId]) -> ElementSet {
    let mut span = ElementSet::from_indices(ring.order(), [ring.zero().index()]);
    for &g in gens {
        let current: Vec<usize> = span.iter().collect();
        for s in current {
            let mut e = ring.element(s).unwrap();
            loop {
                e = ring.add(e, g);
                if !span.insert(e.index()) {
                    break;
                }
            }
        }
    }
    span
}

fn search(
    ring: &FiniteRing,
    gens: &[ElementId],
    orders: &[usize],
    k: usize,
    partial: Vec<Option<ElementId>>,
    found: &mut Vec<Vec<ElementId>>,
) {
    if k == gens.len() {
        let map: Vec<ElementId> = partial.into_iter().map(|e| e.unwrap()).collect();
        if RingHom::from_ids(ring, ring, map.clone()).check() {
            found.push(map);
        }
        return;
    }
    let g = gens[k];
    let candidates: Vec<ElementId> = if k == 0 {
        vec![ring.one()]
    } else {
        ring.elements()
            .filter(|&t| orders[g.index()].is_multiple_of(orders[t.index()]))
            .collect()
    };
    'candidate: for t in candidates {
        let mut next = partial.clone();
        let assigned: Vec<ElementId> = ring
            .elements()
            .filter(|e| partial[e.index()].is_some())
            .collect();
        for &s in &assigned {
            let (mut e, mut v) = (s, partial[s.index()].unwrap());
            for _ in 1..orders[g.index()] {
                e = ring.add(e, g);
                v = ring.add(v, t);
                match next[e.index()] {
                    Some(old) if old != v => continue 'candidate,
                    Some(_) => {}
                    None => next[e.index()] = Some(v),
                }
            }
        }
        let span: Vec<ElementId> = ring
            .elements()
            .filter(|e| next[e.index()].is_some())
            .collect();
        for &a in &span {
            for &b in &span {
                if let Some(img) = next[ring.mul(a, b).index()] {
                    if img != ring.mul(next[a.index()].unwrap(), next[b.index()].unwrap()) {
                        continue 'candidate;
                    }
                }
            }
        }
        search(ring, gens, orders, k + 1, next, found);
    }
}

/// Every surjective endomorphism is injective.
///
/// The hypothesis (ring is a PPRID) is recorded, not required. Fails with
/// [`HomError::AboveCap`] when the ring is too large to search.
pub fn audit_thm3(ring: &FiniteRing, cap: usize) -> Result<ClaimOutcome, HomError> {
    let endos = endomorphisms(ring, cap)?;
    let mut witness = None;
    for h in &endos {
        let kind = h.classify()?;
        if kind.surjective != kind.injective {
            witness = Some(h.render());
            break;
        }
    }
    Ok(ClaimOutcome {
        holds: witness.is_none(),
        hypothesis_met: classify_ring(ring).is_pprid(),
        cases: endos.len(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_product, make_zn};

    #[test]
    fn identity_and_shift() {
        let z6 = make_zn(6).unwrap();
        assert!(RingHom::identity(&z6).check());
        let shift: Vec<usize> = (0..6).map(|i| (i + 1) % 6).collect();
        assert!(!RingHom::new(&z6, &z6, &shift).unwrap().check());
        assert!(matches!(
            RingHom::new(&z6, &z6, &shift).unwrap().kernel(),
            Err(HomError::NotAHomomorphism)
        ));
    }

    #[test]
    fn map_shape_errors() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(
            RingHom::new(&z6, &z6, &[0, 1]).unwrap_err(),
            HomError::SizeMismatch {
                expected: 6,
                found: 2
            }
        );
        assert!(matches!(
            RingHom::new(&z6, &z6, &[0, 1, 2, 3, 4, 9]),
            Err(HomError::ImageOutOfRange { index: 9, .. })
        ));
    }

    #[test]
    fn diagonal_inclusion() {
        let z2 = make_zn(2).unwrap();
        let z2z2 = make_product(&[z2.clone(), z2.clone()]).unwrap();
        // (0,0) has index 0 and (1,1) index 3
        let h = RingHom::new(&z2, &z2z2, &[0, 3]).unwrap();
        assert_eq!(
            h.classify().unwrap(),
            HomKind {
                injective: true,
                surjective: false
            }
        );
    }

    #[test]
    fn endomorphism_counts() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(endomorphisms(&z6, DEFAULT_ENDO_CAP).unwrap().len(), 1);
        let z2 = make_zn(2).unwrap();
        let z2z2 = make_product(&[z2.clone(), z2]).unwrap();
        let endos = endomorphisms(&z2z2, DEFAULT_ENDO_CAP).unwrap();
        let maps: Vec<Vec<usize>> = endos.iter().map(|h| h.indices()).collect();
        // identity, swap, and the two maps through a coordinate projection
        assert_eq!(
            maps,
            [
                vec![0, 0, 3, 3],
                vec![0, 1, 2, 3],
                vec![0, 2, 1, 3],
                vec![0, 3, 0, 3]
            ]
        );
        let z17 = make_zn(17).unwrap();
        assert_eq!(
            endomorphisms(&z17, DEFAULT_ENDO_CAP).unwrap_err(),
            HomError::AboveCap { order: 17, cap: 16 }
        );
    }

    #[test]
    fn thm3_on_small_rings() {
        for n in 2..=16 {
            let r = make_zn(n).unwrap();
            let out = audit_thm3(&r, DEFAULT_ENDO_CAP).unwrap();
            assert!(out.holds);
            assert_eq!(out.hypothesis_met, crate::construct::is_prime_u64(n as u64));
        }
    }
}
