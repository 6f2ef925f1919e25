//! Structured ring constructors. Each records its kind and parameters in
//! the ring label so reports can name rings reproducibly.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::ring::{ElementId, FiniteRing, RingError, MAX_ORDER};

/// `Z_n`, integers modulo `n`, labelled `Z_<n>`.
pub fn make_zn(n: usize) -> Result<FiniteRing, RingError> {
    if n < 2 {
        return Err(RingError::OrderTooSmall(n));
    }
    if n > MAX_ORDER {
        return Err(RingError::OrderTooLarge(n));
    }
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u16);
            mul.push(((a * b) % n) as u16);
        }
    }
    FiniteRing::from_flat(
        n,
        add,
        mul,
        0,
        1 % n,
        format!("Z_{n}"),
        (0..n).map(|i| i.to_string()).collect(),
    )
}

/// Power set of `k` atoms under symmetric difference and intersection,
/// labelled `B_<k>`.
///
/// Element `m` is the subset whose bit `i` marks atom `i`; atoms are named
/// `a`, `b`, ... and a subset is named by concatenating its atoms (`0` for
/// the empty set).
pub fn make_boolean(k: usize) -> Result<FiniteRing, RingError> {
    if k < 1 {
        return Err(RingError::NoAtoms);
    }
    if k >= 13 {
        return Err(RingError::OrderTooLarge(
            1usize.checked_shl(k as u32).unwrap_or(usize::MAX),
        ));
    }
    let n = 1usize << k;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push((a ^ b) as u16);
            mul.push((a & b) as u16);
        }
    }
    let names = (0..n)
        .map(|m| {
            if m == 0 {
                "0".to_string()
            } else {
                (0..k)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| (b'a' + i as u8) as char)
                    .collect()
            }
        })
        .collect();
    FiniteRing::from_flat(n, add, mul, 0, n - 1, format!("B_{k}"), names)
}

/// Direct product with componentwise operations.
///
/// Element order is lexicographic with the first factor most significant;
/// element `(a, b)` is named `(name_a,name_b)`.
pub fn make_product(factors: &[FiniteRing]) -> Result<FiniteRing, RingError> {
    if factors.is_empty() {
        return Err(RingError::EmptyProduct);
    }
    let order = factors
        .iter()
        .try_fold(1usize, |acc, f| {
            acc.checked_mul(f.order()).filter(|&o| o <= MAX_ORDER)
        })
        .ok_or_else(|| RingError::OrderTooLarge(factors.iter().map(|f| f.order()).product()))?;

    // mixed-radix digits, first factor most significant
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; factors.len()];
        for (i, f) in factors.iter().enumerate().rev() {
            d[i] = x % f.order();
            x /= f.order();
        }
        d
    };
    let compose = |d: &[usize]| {
        d.iter()
            .zip(factors)
            .fold(0, |acc, (&v, f)| acc * f.order() + v)
    };
    let all_digits: Vec<Vec<usize>> = (0..order).map(digits).collect();

    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    let mut buf_a = vec![0; factors.len()];
    let mut buf_m = vec![0; factors.len()];
    for da in &all_digits {
        for db in &all_digits {
            for (i, f) in factors.iter().enumerate() {
                let (x, y) = (ElementId::from_index(da[i]), ElementId::from_index(db[i]));
                buf_a[i] = f.add(x, y).index();
                buf_m[i] = f.mul(x, y).index();
            }
            add.push(compose(&buf_a) as u16);
            mul.push(compose(&buf_m) as u16);
        }
    }
    let zero = compose(&factors.iter().map(|f| f.zero().index()).collect::<Vec<_>>());
    let one = compose(&factors.iter().map(|f| f.one().index()).collect::<Vec<_>>());
    let names = all_digits
        .iter()
        .map(|d| {
            let parts: Vec<&str> = d
                .iter()
                .zip(factors)
                .map(|(&v, f)| f.element_names()[v].as_str())
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let label = factors
        .iter()
        .map(|f| {
            if f.label().contains('×') {
                format!("({})", f.label())
            } else {
                f.label().to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("×");
    FiniteRing::from_flat(order, add, mul, zero, one, label, names)
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Commutative algebra over `Z_p` given by structure constants.
///
/// `structure[i][j]` is the coefficient vector of `e_i * e_j` in the basis
/// `e_0..e_{dim-1}`, where `e_0` must be the identity. The constants are
/// checked (identity, commutativity, associativity on basis triples) before
/// the tables are built, and the tables then go through the full validator.
///
/// Element index is the coefficient vector read little-endian in base `p`
/// (the coefficient of `e_0` is least significant). Names are sums of
/// basis names such as `1+x` or `2x`.
pub fn make_algebra(
    p: u32,
    basis_names: &[&str],
    structure: &[Vec<Vec<u32>>],
) -> Result<FiniteRing, RingError> {
    if !is_prime_u64(p as u64) {
        return Err(RingError::NotPrime(p));
    }
    let dim = basis_names.len();
    let sc_err = |msg: String| RingError::StructureConstants(msg);
    if dim == 0 {
        return Err(sc_err("empty basis".into()));
    }
    let order = (0..dim).try_fold(1usize, |acc, _| {
        acc.checked_mul(p as usize).filter(|&o| o <= MAX_ORDER)
    });
    let order = order.ok_or(RingError::OrderTooLarge(usize::MAX))?;
    if structure.len() != dim
        || structure
            .iter()
            .any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim))
    {
        return Err(sc_err(format!("expected a {dim}x{dim}x{dim} array")));
    }
    if let Some(v) = structure.iter().flatten().flatten().find(|&&c| c >= p) {
        return Err(sc_err(format!("coefficient {v} not reduced mod {p}")));
    }
    let pm = p as u64;
    let basis_product = |i: usize, j: usize| -> &[u32] { &structure[i][j] };
    let unit = |j: usize| -> Vec<u32> { (0..dim).map(|k| u32::from(k == j)).collect() };
    for j in 0..dim {
        if basis_product(0, j) != unit(j).as_slice() || basis_product(j, 0) != unit(j).as_slice() {
            return Err(sc_err(format!(
                "{} is not an identity for {}",
                basis_names[0], basis_names[j]
            )));
        }
    }
    for i in 0..dim {
        for j in i + 1..dim {
            if structure[i][j] != structure[j][i] {
                return Err(sc_err(format!(
                    "{}*{} != {}*{}",
                    basis_names[i], basis_names[j], basis_names[j], basis_names[i]
                )));
            }
        }
    }
    // bilinear product of coefficient vectors
    let vec_mul = |u: &[u32], v: &[u32]| -> Vec<u32> {
        let mut out = vec![0u64; dim];
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                if vj == 0 {
                    continue;
                }
                let coeff = ui as u64 * vj as u64 % pm;
                for (k, o) in out.iter_mut().enumerate() {
                    *o = (*o + coeff * structure[i][j][k] as u64) % pm;
                }
            }
        }
        out.into_iter().map(|c| c as u32).collect()
    };
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let left = vec_mul(&structure[i][j], &unit(k));
                let right = vec_mul(&unit(i), &structure[j][k]);
                if left != right {
                    return Err(sc_err(format!(
                        "associativity fails on ({}*{})*{}",
                        basis_names[i], basis_names[j], basis_names[k]
                    )));
                }
            }
        }
    }

    let coeffs = |mut x: usize| -> Vec<u32> {
        (0..dim)
            .map(|_| {
                let c = (x % p as usize) as u32;
                x /= p as usize;
                c
            })
            .collect()
    };
    let index = |v: &[u32]| {
        v.iter()
            .rev()
            .fold(0usize, |acc, &c| acc * p as usize + c as usize)
    };
    let all: Vec<Vec<u32>> = (0..order).map(coeffs).collect();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for u in &all {
        for v in &all {
            let s: Vec<u32> = u.iter().zip(v).map(|(&a, &b)| (a + b) % p).collect();
            add.push(index(&s) as u16);
            mul.push(index(&vec_mul(u, v)) as u16);
        }
    }
    let names = all
        .iter()
        .map(|v| combination_name(v, basis_names))
        .collect();
    let label = format!("alg(p={p},basis={})", basis_names.join(","));
    FiniteRing::from_flat(order, add, mul, 0, 1, label, names)
}

fn combination_name(coeffs: &[u32], basis_names: &[&str]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(basis_names)
        .filter(|(&c, _)| c != 0)
        .map(|(&c, &name)| match (c, name) {
            (c, "1") => c.to_string(),
            (1, name) => name.to_string(),
            (c, name) => format!("{c}{name}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Structure constants for `F_p[x]/(x^d)` (independent of `p`) in the basis `1, x, ..., x^{d-1}`.
pub fn truncated_polynomial_constants(d: usize) -> Vec<Vec<Vec<u32>>> {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| u32::from(i + j == k)).collect())
                .collect()
        })
        .collect()
}
