//! Quotient rings `R/I` with canonical coset representatives.

use alloc::format;
use alloc::vec::Vec;

use crate::hom::RingHom;
use crate::ideal::{self, Ideal, IdealError};
use crate::lattice::{all_ideals, Classification};
use crate::outcome::ClaimOutcome;
use crate::ring::{ElementId, FiniteRing};

/// `R/I` together with the coset partition and the projection.
///
/// Quotient element `k` is the coset whose minimal base index is the `k`-th
/// smallest representative; it is named `[rep]` after that representative.
#[derive(Clone, Debug)]
pub struct QuotientPresentation<'a> {
    base: &'a FiniteRing,
    ideal: Ideal,
    cosets: Vec<Vec<ElementId>>,
    projection: Vec<ElementId>,
    quotient: FiniteRing,
}

/// Builds `R/I`; the zero ring `R/R` is rejected.
pub fn quotient_ring<'a>(
    ring: &'a FiniteRing,
    ideal: &Ideal,
) -> Result<QuotientPresentation<'a>, IdealError> {
    if ideal.members().universe() != ring.order() {
        return Err(IdealError::RingMismatch {
            expected: ring.order(),
            found: ideal.members().universe(),
        });
    }
    if !ideal.is_proper() {
        return Err(IdealError::NotProper);
    }
    let mut coset_of: Vec<Option<usize>> = alloc::vec![None; ring.order()];
    let mut cosets: Vec<Vec<ElementId>> = Vec::new();
    for a in ring.elements() {
        if coset_of[a.index()].is_some() {
            continue;
        }
        let k = cosets.len();
        let mut members: Vec<ElementId> = ideal.iter().map(|i| ring.add(a, i)).collect();
        members.sort();
        for m in &members {
            coset_of[m.index()] = Some(k);
        }
        cosets.push(members);
    }
    let projection: Vec<usize> = coset_of.into_iter().map(|k| k.unwrap()).collect();
    let q = cosets.len();
    let rep = |k: usize| cosets[k][0];
    let mut add = Vec::with_capacity(q * q);
    let mut mul = Vec::with_capacity(q * q);
    for i in 0..q {
        for j in 0..q {
            add.push(projection[ring.add(rep(i), rep(j)).index()] as u16);
            mul.push(projection[ring.mul(rep(i), rep(j)).index()] as u16);
        }
    }
    let names = (0..q).map(|k| format!("[{}]", ring.name(rep(k)))).collect();
    let label = format!("{}/{}", ring.label(), ideal.render(ring));
    let quotient = FiniteRing::from_flat(
        q,
        add,
        mul,
        projection[ring.zero().index()],
        projection[ring.one().index()],
        label,
        names,
    )
    .map_err(|e| IdealError::NotAnIdeal(format!("induced operations invalid: {e}")))?;
    let projection = projection.into_iter().map(ElementId::from_index).collect();
    Ok(QuotientPresentation {
        base: ring,
        ideal: ideal.clone(),
        cosets,
        projection,
        quotient,
    })
}

impl<'a> QuotientPresentation<'a> {
    pub fn base(&self) -> &'a FiniteRing {
        self.base
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Cosets in quotient-element order, members sorted by index.
    pub fn cosets(&self) -> &[Vec<ElementId>] {
        &self.cosets
    }

    pub fn quotient(&self) -> &FiniteRing {
        &self.quotient
    }

    pub fn projection(&self) -> RingHom<'_> {
        RingHom::from_ids(self.base, &self.quotient, self.projection.clone())
    }
}

/// For every proper ideal `P`: `P` prime ⇔ `R/P` is a domain and PPRIR.
///
/// `hypothesis_met` records whether `R` itself is PPRIR; the equivalence is
/// checked on every ring regardless.
pub fn audit_thm1(ring: &FiniteRing) -> ClaimOutcome {
    let lattice = all_ideals(ring);
    let mut cases = 0;
    let mut witness = None;
    for p in lattice.proper() {
        cases += 1;
        let prime = ideal::prime_violation(ring, p).is_none();
        let q = quotient_ring(ring, p).expect("proper ideal from the lattice");
        let qc = Classification::from_lattice(q.quotient(), &all_ideals(q.quotient()));
        if prime != (qc.is_domain && qc.is_pprir) {
            witness = Some(p.render(ring));
            break;
        }
    }
    ClaimOutcome {
        holds: witness.is_none(),
        hypothesis_met: lattice.pprir_witness(ring).is_none(),
        cases,
        witness,
    }
}
