//! Finite commutative rings with nonzero unity, stored as Cayley tables.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use thiserror::Error;

/// Largest ring order accepted by any constructor.
pub const MAX_ORDER: usize = 4096;

/// Index of an element in its owning ring.
///
/// Obtain ids through [`FiniteRing::element`], [`FiniteRing::elements`] or
/// the arithmetic methods; ids are only meaningful for the ring that issued
/// them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u16);

impl ElementId {
    #[inline]
    pub(crate) fn from_index(i: usize) -> Self {
        debug_assert!(i < MAX_ORDER);
        ElementId(i as u16)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A ring axiom checked by the validator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveInverse,
    AdditiveAssociativity,
    Distributivity,
    MultiplicativeAssociativity,
    MultiplicativeCommutativity,
    MultiplicativeIdentity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::AdditiveIdentity => "additive identity (a+0 = a)",
            Axiom::AdditiveCommutativity => "additive commutativity (a+b = b+a)",
            Axiom::AdditiveInverse => "additive inverse (a+(-a) = 0)",
            Axiom::AdditiveAssociativity => "additive associativity ((a+b)+c = a+(b+c))",
            Axiom::Distributivity => "distributivity (a(b+c) = ab+ac)",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity ((ab)c = a(bc))",
            Axiom::MultiplicativeCommutativity => "multiplicative commutativity (ab = ba)",
            Axiom::MultiplicativeIdentity => "multiplicative identity (1a = a)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring order {0} is below 2 (the zero ring is excluded)")]
    OrderTooSmall(usize),
    #[error("ring order {0} exceeds the maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("{table} table has shape mismatch: expected {expected}, found {found}")]
    TableShape {
        table: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{table}[{row}][{col}] = {value} is out of range for order {order}")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element index {index} is out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("unity equals zero")]
    ZeroEqualsOne,
    #[error("axiom violated: {axiom} at {witness:?}")]
    Axiom { axiom: Axiom, witness: Vec<usize> },
    #[error("product of an empty list of rings")]
    EmptyProduct,
    #[error("boolean ring needs at least one atom")]
    NoAtoms,
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("structure constants: {0}")]
    StructureConstants(String),
    #[error("element names: {0}")]
    Names(String),
}

/// A validated finite commutative ring with nonzero unity.
///
/// Elements are the indices `0..order`. Instances are immutable once
/// constructed and every constructor runs the full axiom check.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: u16,
    one: u16,
    label: String,
    names: Vec<String>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

/// Builds a ring from raw Cayley tables, rejecting any axiom violation.
///
/// Element names default to the decimal indices and the label to
/// `table(n=<order>)`.
pub fn make_table_ring(
    order: usize,
    add_table: &[Vec<usize>],
    mul_table: &[Vec<usize>],
    zero: usize,
    one: usize,
) -> Result<FiniteRing, RingError> {
    if order < 2 {
        return Err(RingError::OrderTooSmall(order));
    }
    if order > MAX_ORDER {
        return Err(RingError::OrderTooLarge(order));
    }
    let add = flatten("add", order, add_table)?;
    let mul = flatten("mul", order, mul_table)?;
    for idx in [zero, one] {
        if idx >= order {
            return Err(RingError::IndexOutOfRange { index: idx, order });
        }
    }
    FiniteRing::from_flat(
        order,
        add,
        mul,
        zero,
        one,
        format!("table(n={order})"),
        (0..order).map(|i| i.to_string()).collect(),
    )
}

fn flatten(table: &'static str, order: usize, rows: &[Vec<usize>]) -> Result<Vec<u16>, RingError> {
    if rows.len() != order {
        return Err(RingError::TableShape {
            table,
            expected: order,
            found: rows.len(),
        });
    }
    let mut flat = Vec::with_capacity(order * order);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != order {
            return Err(RingError::TableShape {
                table,
                expected: order,
                found: row.len(),
            });
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= order {
                return Err(RingError::EntryOutOfRange {
                    table,
                    row: r,
                    col: c,
                    value: v,
                    order,
                });
            }
            flat.push(v as u16);
        }
    }
    Ok(flat)
}

fn axiom(axiom: Axiom, witness: &[usize]) -> RingError {
    RingError::Axiom {
        axiom,
        witness: witness.to_vec(),
    }
}

impl FiniteRing {
    /// Flat tables are row-major `order * order`, entries already in range.
    pub(crate) fn from_flat(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        label: String,
        names: Vec<String>,
    ) -> Result<Self, RingError> {
        if order < 2 {
            return Err(RingError::OrderTooSmall(order));
        }
        if order > MAX_ORDER {
            return Err(RingError::OrderTooLarge(order));
        }
        debug_assert_eq!(add.len(), order * order);
        debug_assert_eq!(mul.len(), order * order);
        let mut ring = FiniteRing {
            order,
            add,
            mul,
            neg: Vec::new(),
            zero: zero as u16,
            one: one as u16,
            label,
            names: Vec::new(),
        };
        ring.validate()?;
        ring.set_names(names)?;
        Ok(ring)
    }

    /// Exhaustive axiom check. Also fills the negation table.
    fn validate(&mut self) -> Result<(), RingError> {
        let n = self.order;
        let (z, o) = (self.zero as usize, self.one as usize);
        if z == o {
            return Err(RingError::ZeroEqualsOne);
        }
        let add = |a: usize, b: usize| self.add[a * n + b] as usize;
        let mul = |a: usize, b: usize| self.mul[a * n + b] as usize;

        for a in 0..n {
            if add(a, z) != a || add(z, a) != a {
                return Err(axiom(Axiom::AdditiveIdentity, &[a]));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if add(a, b) != add(b, a) {
                    return Err(axiom(Axiom::AdditiveCommutativity, &[a, b]));
                }
            }
        }
        let mut neg = vec![u16::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| add(a, b) == z) {
                Some(b) => neg[a] = b as u16,
                None => return Err(axiom(Axiom::AdditiveInverse, &[a])),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = add(a, b);
                for c in 0..n {
                    if add(ab, c) != add(a, add(b, c)) {
                        return Err(axiom(Axiom::AdditiveAssociativity, &[a, b, c]));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(a, add(b, c)) != add(ab, mul(a, c)) {
                        return Err(axiom(Axiom::Distributivity, &[a, b, c]));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(axiom(Axiom::MultiplicativeAssociativity, &[a, b, c]));
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if mul(a, b) != mul(b, a) {
                    return Err(axiom(Axiom::MultiplicativeCommutativity, &[a, b]));
                }
            }
        }
        for a in 0..n {
            if mul(o, a) != a {
                return Err(axiom(Axiom::MultiplicativeIdentity, &[a]));
            }
        }
        self.neg = neg;
        Ok(())
    }

    fn set_names(&mut self, names: Vec<String>) -> Result<(), RingError> {
        if names.len() != self.order {
            return Err(RingError::Names(format!(
                "expected {} names, got {}",
                self.order,
                names.len()
            )));
        }
        for (i, a) in names.iter().enumerate() {
            if a.trim().is_empty() || a.trim() != a {
                return Err(RingError::Names(format!(
                    "name of element {i} is blank or padded"
                )));
            }
            if names[..i].contains(a) {
                return Err(RingError::Names(format!("duplicate name {a:?}")));
            }
        }
        self.names = names;
        Ok(())
    }

    /// Replaces the human-readable label.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Replaces the element display names; they must be unique and non-blank.
    pub fn with_element_names(mut self, names: Vec<String>) -> Result<Self, RingError> {
        self.set_names(names)?;
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: ElementId) -> &str {
        &self.names[a.index()]
    }

    pub fn element_by_name(&self, name: &str) -> Option<ElementId> {
        let name = name.trim();
        self.names
            .iter()
            .position(|n| n == name)
            .map(ElementId::from_index)
    }

    /// Checked conversion from a raw index.
    pub fn element(&self, index: usize) -> Result<ElementId, RingError> {
        if index < self.order {
            Ok(ElementId::from_index(index))
        } else {
            Err(RingError::IndexOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = ElementId> + Clone {
        (0..self.order).map(ElementId::from_index)
    }

    #[inline]
    pub fn zero(&self) -> ElementId {
        ElementId(self.zero)
    }

    #[inline]
    pub fn one(&self) -> ElementId {
        ElementId(self.one)
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.add[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        ElementId(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add(a, self.neg(b))
    }

    /// `a^n` by iterated multiplication; `a^0` is unity.
    pub fn pow(&self, a: ElementId, n: u32) -> ElementId {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Smallest `k >= 1` with `k·a = 0`.
    pub fn additive_order(&self, a: ElementId) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != self.zero() {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    /// Add table as nested rows of indices.
    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.table_rows(&self.add)
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.table_rows(&self.mul)
    }

    fn table_rows(&self, flat: &[u16]) -> Vec<Vec<usize>> {
        flat.chunks(self.order)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn is_idempotent(&self, a: ElementId) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_unit(&self, a: ElementId) -> bool {
        self.elements().any(|b| self.mul(a, b) == self.one())
    }

    pub fn is_zero_divisor(&self, a: ElementId) -> bool {
        a != self.zero()
            && self
                .elements()
                .any(|b| b != self.zero() && self.mul(a, b) == self.zero())
    }

    pub fn is_nilpotent(&self, a: ElementId) -> bool {
        self.pow(a, self.order as u32) == self.zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_tables(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let add = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a * b) % n).collect())
            .collect();
        (add, mul)
    }

    #[test]
    fn z3_tables_validate() {
        let (add, mul) = zn_tables(3);
        let r = make_table_ring(3, &add, &mul, 0, 1).unwrap();
        assert_eq!(r.order(), 3);
        assert_eq!(r.label(), "table(n=3)");
    }

    #[test]
    fn corrupted_z3_reports_distributivity_or_associativity() {
        let (add, mut mul) = zn_tables(3);
        mul[1][2] = 1;
        match make_table_ring(3, &add, &mul, 0, 1) {
            Err(RingError::Axiom { axiom, .. }) => assert!(
                matches!(
                    axiom,
                    Axiom::Distributivity | Axiom::MultiplicativeAssociativity
                ),
                "got {axiom:?}"
            ),
            other => panic!("expected axiom error, got {other:?}"),
        }
    }

    #[test]
    fn unity_equal_to_zero_is_rejected() {
        let (add, mul) = zn_tables(3);
        assert_eq!(
            make_table_ring(3, &add, &mul, 0, 0),
            Err(RingError::ZeroEqualsOne)
        );
    }

    #[test]
    fn out_of_range_entry_is_rejected() {
        let (add, mut mul) = zn_tables(3);
        mul[2][2] = 7;
        assert!(matches!(
            make_table_ring(3, &add, &mul, 0, 1),
            Err(RingError::EntryOutOfRange {
                row: 2,
                col: 2,
                value: 7,
                ..
            })
        ));
        assert!(matches!(
            make_table_ring(3, &add[..2], &mul, 0, 1),
            Err(RingError::TableShape { .. })
        ));
    }

    #[test]
    fn noncommutative_tables_are_rejected() {
        // left-zero multiplication on Z_2 fails before commutativity is reached
        let add = [vec![0, 1], vec![1, 0]];
        let mul = [vec![0, 0], vec![1, 1]];
        assert!(make_table_ring(2, &add, &mul, 0, 1).is_err());
    }

    #[test]
    fn element_lookup_is_checked() {
        let (add, mul) = zn_tables(4);
        let r = make_table_ring(4, &add, &mul, 0, 1).unwrap();
        assert!(r.element(3).is_ok());
        assert_eq!(
            r.element(4),
            Err(RingError::IndexOutOfRange { index: 4, order: 4 })
        );
        assert_eq!(r.element_by_name("2"), Some(r.element(2).unwrap()));
    }
}
