//! Ring description files: one JSON document per ring, discriminated by
//! `kind`. The format is described in `docs/ring-format.md`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use pprir_core::{
    make_algebra, make_boolean, make_product, make_table_ring, make_zn, FiniteRing, RingError,
};

#[derive(Debug, Error)]
pub enum RingFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed ring document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("invalid ring: {0}")]
    Ring(#[from] RingError),
    #[error("algebra: {0}")]
    Algebra(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RingDoc {
    Zn {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    Boolean {
        atoms: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    Product {
        factors: Vec<RingDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    Algebra {
        p: u32,
        basis_names: Vec<String>,
        /// `"xi*xj"` → combination such as `"1+2x"`. Unlisted products of
        /// non-identity basis elements are zero; a key also fixes its mirror
        /// unless the mirror is listed too.
        #[serde(default)]
        mul: BTreeMap<String, String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    Table {
        order: usize,
        zero: usize,
        one: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        element_names: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
}

impl RingDoc {
    pub fn parse(text: &str) -> Result<Self, RingFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<FiniteRing, RingFileError> {
        let (ring, label) = match self {
            RingDoc::Zn { n, label } => (make_zn(*n)?, label),
            RingDoc::Boolean { atoms, label } => (make_boolean(*atoms)?, label),
            RingDoc::Product { factors, label } => {
                let built = factors
                    .iter()
                    .map(RingDoc::build)
                    .collect::<Result<Vec<_>, _>>()?;
                (make_product(&built)?, label)
            }
            RingDoc::Algebra {
                p,
                basis_names,
                mul,
                label,
            } => (build_algebra(*p, basis_names, mul)?, label),
            RingDoc::Table {
                order,
                zero,
                one,
                add,
                mul,
                element_names,
                label,
            } => {
                let mut r = make_table_ring(*order, add, mul, *zero, *one)?;
                if let Some(names) = element_names {
                    r = r.with_element_names(names.clone())?;
                }
                (r, label)
            }
        };
        Ok(match label {
            Some(l) => ring.with_label(l.clone()),
            None => ring,
        })
    }
}

pub fn parse_ring(text: &str) -> Result<FiniteRing, RingFileError> {
    RingDoc::parse(text)?.build()
}

pub fn load_ring_file(path: &Path) -> Result<FiniteRing, RingFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| RingFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_ring(&text)
}

fn build_algebra(
    p: u32,
    basis: &[String],
    mul: &BTreeMap<String, String>,
) -> Result<FiniteRing, RingFileError> {
    let dim = basis.len();
    if dim == 0 {
        return Err(RingFileError::Algebra("empty basis".into()));
    }
    if p == 0 {
        return Err(RingError::NotPrime(0).into());
    }
    let position = |name: &str| {
        basis
            .iter()
            .position(|b| b == name.trim())
            .ok_or_else(|| RingFileError::Algebra(format!("unknown basis element {name:?}")))
    };
    let mut sc = vec![vec![vec![0u32; dim]; dim]; dim];
    for j in 0..dim {
        sc[0][j][j] = 1;
        sc[j][0][j] = 1;
    }
    let mut explicit = vec![vec![false; dim]; dim];
    for (key, value) in mul {
        let (l, r) = key.split_once('*').ok_or_else(|| {
            RingFileError::Algebra(format!("product key {key:?} is not of the form a*b"))
        })?;
        let (i, j) = (position(l)?, position(r)?);
        let coeffs = parse_combination(value, basis, p)?;
        sc[i][j] = coeffs.clone();
        explicit[i][j] = true;
        if !explicit[j][i] {
            sc[j][i] = coeffs;
        }
    }
    let names: Vec<&str> = basis.iter().map(String::as_str).collect();
    Ok(make_algebra(p, &names, &sc)?)
}

/// Parses `"1+2x"`, `"x+y"`, `"2*x"`, `"-y"`, `"0"` into a coefficient
/// vector mod `p`. A bare integer multiplies the first basis element.
pub fn parse_combination(text: &str, basis: &[String], p: u32) -> Result<Vec<u32>, RingFileError> {
    let err = || RingFileError::Algebra(format!("cannot parse combination {text:?}"));
    let mut out = vec![0u64; basis.len()];
    let pm = p as u64;
    let mut by_length: Vec<(usize, &String)> = basis.iter().enumerate().collect();
    by_length.sort_by_key(|(_, b)| std::cmp::Reverse(b.len()));

    for raw in text.split('+') {
        let mut term = raw.trim();
        if term.is_empty() {
            return Err(err());
        }
        let negative = term.starts_with('-');
        if negative {
            term = term[1..].trim();
        }
        let (coeff, idx) = if let Ok(c) = term.parse::<u64>() {
            (c, 0)
        } else {
            let (idx, name) = by_length
                .iter()
                .find(|(_, b)| term.ends_with(b.as_str()))
                .ok_or_else(err)?;
            let prefix = term[..term.len() - name.len()]
                .trim()
                .trim_end_matches('*')
                .trim();
            let c = if prefix.is_empty() {
                1
            } else {
                prefix.parse::<u64>().map_err(|_| err())?
            };
            (c, *idx)
        };
        let c = coeff % pm;
        let c = if negative { (pm - c) % pm } else { c };
        out[idx] = (out[idx] + c) % pm;
    }
    Ok(out.into_iter().map(|c| c as u32).collect())
}
