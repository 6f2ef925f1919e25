//! The ring corpus the claims are audited over.

use std::collections::BTreeSet;
use std::path::Path;

use thiserror::Error;

use pprir_core::construct::truncated_polynomial_constants;
use pprir_core::{make_algebra, make_boolean, make_product, make_zn, FiniteRing};

use crate::ringfile::{load_ring_file, RingFileError};

pub const RING_A_LABEL: &str = "A=F2[x,y]/(x,y)^2";

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{file}: {source}")]
    File { file: String, source: RingFileError },
    #[error("cannot list {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("duplicate ring label {0:?}")]
    DuplicateLabel(String),
    #[error("no ring files (*.json) in {0}")]
    Empty(String),
}

/// Ordered list of validated rings with unique labels.
#[derive(Debug, Clone)]
pub struct Corpus {
    rings: Vec<FiniteRing>,
}

impl Corpus {
    pub fn new(rings: Vec<FiniteRing>) -> Result<Self, CorpusError> {
        let mut seen = BTreeSet::new();
        for r in &rings {
            if !seen.insert(r.label().to_string()) {
                return Err(CorpusError::DuplicateLabel(r.label().to_string()));
            }
        }
        Ok(Corpus { rings })
    }

    pub fn rings(&self) -> &[FiniteRing] {
        &self.rings
    }

    pub fn len(&self) -> usize {
        self.rings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&FiniteRing> {
        self.rings.iter().find(|r| r.label() == label)
    }

    /// Every `*.json` file in `dir`, in file-name order.
    pub fn load_dir(dir: &Path) -> Result<Self, CorpusError> {
        let io = |source| CorpusError::Io {
            path: dir.display().to_string(),
            source,
        };
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(io)?
            .collect::<Result<Vec<_>, _>>()
            .map_err(io)?
            .into_iter()
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|e| e == "json"))
            .collect();
        if paths.is_empty() {
            return Err(CorpusError::Empty(dir.display().to_string()));
        }
        paths.sort();
        let rings = paths
            .iter()
            .map(|p| {
                load_ring_file(p).map_err(|source| CorpusError::File {
                    file: p.display().to_string(),
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Corpus::new(rings)
    }
}

/// `F_2[x,y]/(x,y)^2`: basis `1, x, y` with all products of `x, y` zero.
pub fn ring_a() -> FiniteRing {
    let mut sc = vec![vec![vec![0u32; 3]; 3]; 3];
    for j in 0..3 {
        sc[0][j][j] = 1;
        sc[j][0][j] = 1;
    }
    make_algebra(2, &["1", "x", "y"], &sc)
        .expect("ring A structure constants")
        .with_label(RING_A_LABEL)
}

/// `F_4 = F_2[x]/(x^2+x+1)`.
pub fn f4() -> FiniteRing {
    let sc = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]];
    make_algebra(2, &["1", "x"], &sc)
        .expect("F4 structure constants")
        .with_label("F4=F2[x]/(x^2+x+1)")
}

fn truncated(p: u32, d: usize) -> FiniteRing {
    let names: Vec<String> = (0..d)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            i => format!("x^{i}"),
        })
        .collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    make_algebra(p, &names, &truncated_polynomial_constants(d))
        .expect("truncated polynomial ring")
        .with_label(format!("F{p}[x]/(x^{d})"))
}

/// `Z_2..Z_64`, `B_1..B_4`, four products and five small algebras:
/// 76 rings.
pub fn default_corpus() -> Corpus {
    let z = |n| make_zn(n).expect("Z_n");
    let mut rings: Vec<FiniteRing> = (2..=64).map(z).collect();
    rings.extend((1..=4).map(|k| make_boolean(k).expect("B_k")));
    for factors in [vec![2, 3], vec![2, 4], vec![4, 9], vec![2, 2, 2]] {
        let f: Vec<FiniteRing> = factors.into_iter().map(z).collect();
        rings.push(make_product(&f).expect("product"));
    }
    rings.push(ring_a());
    rings.push(f4());
    rings.push(truncated(2, 2));
    rings.push(truncated(3, 2));
    rings.push(truncated(2, 3));
    Corpus::new(rings).expect("default corpus labels are unique")
}
