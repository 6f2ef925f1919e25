//! Claim checkers. Each claim is a statement about rings; a checker runs it
//! on one ring and reports verified, refuted (with a witness) or skipped.
//!
//! Implications whose hypothesis fails on a ring are reported as verified
//! with a note saying so; the conclusion is still evaluated and the note
//! records whether it would have failed. Claims the audit treats as
//! unconditional (THM1, PROP3, THM2, THM3, THM5, THM6, PROPRAD's `Rad(P) = P`) refute on
//! any ring.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use pprir_core::ideal::{self, Ideal};
use pprir_core::lattice::{all_ideals, Classification, IdealLattice};
use pprir_core::{audit_ex2, audit_thm1, audit_thm3, FiniteRing, HomError, DEFAULT_ENDO_CAP};

use crate::corpus::Corpus;

/// Above this spectrum size THM5(a) samples subsets instead of exhausting.
pub const THM5_EXHAUSTIVE_LIMIT: usize = 4;
pub const THM5_SAMPLES: usize = 100;
pub const THM5_SEED: u64 = 0x7485_0005;

/// Environment variable that raises the endomorphism search cap.
pub const ENDO_CAP_ENV: &str = "PPRIR_ENDO_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClaimId {
    Thm1,
    Prop1,
    Prop2,
    Prop3,
    Prop4,
    PropRad,
    Thm2,
    Thm3,
    Thm5,
    Thm6,
    Ex1Field,
    Ex2,
}

impl ClaimId {
    pub const ALL: [ClaimId; 12] = [
        ClaimId::Thm1,
        ClaimId::Prop1,
        ClaimId::Prop2,
        ClaimId::Prop3,
        ClaimId::Prop4,
        ClaimId::PropRad,
        ClaimId::Thm2,
        ClaimId::Thm3,
        ClaimId::Thm5,
        ClaimId::Thm6,
        ClaimId::Ex1Field,
        ClaimId::Ex2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Thm1 => "THM1",
            ClaimId::Prop1 => "PROP1",
            ClaimId::Prop2 => "PROP2",
            ClaimId::Prop3 => "PROP3",
            ClaimId::Prop4 => "PROP4",
            ClaimId::PropRad => "PROPRAD",
            ClaimId::Thm2 => "THM2",
            ClaimId::Thm3 => "THM3",
            ClaimId::Thm5 => "THM5",
            ClaimId::Thm6 => "THM6",
            ClaimId::Ex1Field => "EX1FIELD",
            ClaimId::Ex2 => "EX2",
        }
    }

    /// One-line statement of what the checker tests.
    pub fn statement(self) -> &'static str {
        match self {
            ClaimId::Thm1 => "P prime <=> R/P is a domain and PPRIR (every proper P)",
            ClaimId::Prop1 => "R PPRIR => every maximal ideal is PPRI",
            ClaimId::Prop2 => "R Boolean and PPRIR => PPRI ideals = maximal ideals",
            ClaimId::Prop3 => "every PPRI is semiprime",
            ClaimId::Prop4 => "R PPRIR => Rad(Q) is PPRI for every primary Q",
            ClaimId::PropRad => "P prime => Rad(P) = P, and PPRI when R is PPRIR",
            ClaimId::Thm2 => "ACC on prime ideals (vacuous for finite R) => R PPRIR",
            ClaimId::Thm3 => "surjective endomorphisms are injective",
            ClaimId::Thm5 => "(a) nonempty sets of primes have a maximal member; (b) hence R PPRIR",
            ClaimId::Thm6 => "finitely many, well-formed minimal primes over each proper ideal",
            ClaimId::Ex1Field => "every field is PPRIR",
            ClaimId::Ex2 => "Z×{0} is a prime, non-maximal ideal of the PPRIR Z×Z",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown claim id {0:?}")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Skipped => "skipped",
        })
    }
}

/// Outcome of one claim on one ring. A refuted report always carries a
/// witness and a skipped one always carries a note with the reason.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub ring: String,
    pub status: Status,
    pub witness: Option<String>,
    pub note: Option<String>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditOptions {
    pub endo_cap: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            endo_cap: DEFAULT_ENDO_CAP,
        }
    }
}

impl AuditOptions {
    /// Defaults, with the endomorphism cap taken from the environment when set.
    pub fn from_env() -> Self {
        let endo_cap = std::env::var(ENDO_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_ENDO_CAP);
        AuditOptions { endo_cap }
    }
}

/// Lattice-level data shared by every claim on one ring.
pub struct RingFacts<'r> {
    pub ring: &'r FiniteRing,
    pub lattice: IdealLattice,
    pub primes: Vec<Ideal>,
    pub maximal: Vec<Ideal>,
    pub class: Classification,
}

impl<'r> RingFacts<'r> {
    pub fn new(ring: &'r FiniteRing) -> Self {
        let lattice = all_ideals(ring);
        let primes = lattice.primes(ring);
        let maximal = lattice.maximal_ideals();
        let class = Classification::from_lattice(ring, &lattice);
        RingFacts {
            ring,
            lattice,
            primes,
            maximal,
            class,
        }
    }

    fn is_ppri(&self, p: &Ideal) -> bool {
        ideal::is_ppri(self.ring, p).expect("ideal of this ring")
    }

    fn render(&self, i: &Ideal) -> String {
        i.render(self.ring)
    }
}

struct Verdict {
    status: Status,
    witness: Option<String>,
    note: Option<String>,
}

impl Verdict {
    fn verified(note: impl Into<Option<String>>) -> Self {
        Verdict {
            status: Status::Verified,
            witness: None,
            note: note.into(),
        }
    }

    fn refuted(witness: String, note: impl Into<Option<String>>) -> Self {
        Verdict {
            status: Status::Refuted,
            witness: Some(witness),
            note: note.into(),
        }
    }

    fn skipped(reason: String) -> Self {
        Verdict {
            status: Status::Skipped,
            witness: None,
            note: Some(reason),
        }
    }

    /// Implication with hypothesis `hyp`: a failing conclusion only refutes
    /// when the hypothesis holds.
    fn implication(hyp: bool, hyp_name: &str, failure: Option<String>) -> Self {
        match (hyp, failure) {
            (true, None) => Verdict::verified(None),
            (true, Some(w)) => Verdict::refuted(w, None),
            (false, None) => {
                Verdict::verified(format!("hypothesis not met ({hyp_name}); conclusion holds"))
            }
            (false, Some(w)) => Verdict::verified(format!(
                "hypothesis not met ({hyp_name}); conclusion fails at {w}"
            )),
        }
    }
}

fn check(claim: ClaimId, facts: &RingFacts<'_>, opts: &AuditOptions) -> Verdict {
    let ring = facts.ring;
    let pprir = facts.class.is_pprir;
    match claim {
        ClaimId::Thm1 => {
            let out = audit_thm1(ring);
            let note = format!(
                "{} proper ideals; hypothesis (R PPRIR) {}",
                out.cases,
                if out.hypothesis_met { "met" } else { "not met" }
            );
            match out.witness {
                None => Verdict::verified(note),
                Some(w) => Verdict::refuted(w, note),
            }
        }
        ClaimId::Prop1 => {
            let failure = facts.maximal.iter().find(|m| !facts.is_ppri(m));
            Verdict::implication(pprir, "R is not PPRIR", failure.map(|m| facts.render(m)))
        }
        ClaimId::Prop2 => {
            let hyp = facts.class.is_boolean && pprir;
            let ppri: Vec<&Ideal> = facts.primes.iter().filter(|p| facts.is_ppri(p)).collect();
            let failure = facts
                .lattice
                .proper()
                .find(|i| ppri.contains(i) != facts.maximal.contains(i));
            let name = if facts.class.is_boolean {
                "R is not PPRIR"
            } else {
                "R is not Boolean"
            };
            Verdict::implication(hyp, name, failure.map(|i| facts.render(i)))
        }
        ClaimId::Prop3 => {
            let failure = facts.primes.iter().find(|p| {
                let semiprime = ideal::is_semiprime(ring, p).unwrap();
                let radical_fixed = ideal::radical(ring, p).unwrap() == **p;
                facts.is_ppri(p) && !(semiprime && radical_fixed)
            });
            match failure {
                None => Verdict::verified(None),
                Some(p) => Verdict::refuted(facts.render(p), "PPRI but not semiprime".to_string()),
            }
        }
        ClaimId::Prop4 => {
            let mut primary = 0;
            let failure = facts
                .lattice
                .proper()
                .filter(|q| ideal::is_primary(ring, q).unwrap())
                .inspect(|_| primary += 1)
                .find(|q| !facts.is_ppri(&ideal::radical(ring, q).unwrap()))
                .map(|q| facts.render(q));
            let mut v = Verdict::implication(pprir, "R is not PPRIR", failure);
            if v.status == Status::Verified && v.note.is_none() {
                v.note = Some(format!("{primary} primary ideals"));
            }
            v
        }
        ClaimId::PropRad => {
            if let Some(p) = facts
                .primes
                .iter()
                .find(|p| ideal::radical(ring, p).unwrap() != **p)
            {
                return Verdict::refuted(facts.render(p), "Rad(P) != P".to_string());
            }
            let failure = facts.primes.iter().find(|p| !facts.is_ppri(p));
            Verdict::implication(pprir, "R is not PPRIR", failure.map(|p| facts.render(p)))
        }
        ClaimId::Thm2 => match &facts.class.witness {
            None => Verdict::verified(None),
            Some(w) => Verdict::refuted(
                facts.render(w),
                "chain condition holds vacuously but this prime is not principal".to_string(),
            ),
        },
        ClaimId::Thm3 => match audit_thm3(ring, opts.endo_cap) {
            Ok(out) => {
                let note = format!(
                    "{} endomorphisms; hypothesis (R PPRID) {}",
                    out.cases,
                    if out.hypothesis_met { "met" } else { "not met" }
                );
                match out.witness {
                    None => Verdict::verified(note),
                    Some(w) => Verdict::refuted(w, note),
                }
            }
            Err(HomError::AboveCap { order, cap }) => Verdict::skipped(format!(
                "order {order} above endomorphism cap {cap} (raise with --endo-cap or {ENDO_CAP_ENV})"
            )),
            Err(e) => Verdict::skipped(e.to_string()),
        },
        ClaimId::Thm5 => check_thm5(facts),
        ClaimId::Thm6 => check_thm6(facts),
        ClaimId::Ex1Field => {
            let failure = facts.class.witness.as_ref().map(|w| facts.render(w));
            Verdict::implication(facts.class.is_field, "R is not a field", failure)
        }
        ClaimId::Ex2 => unreachable!("EX2 is not a per-ring claim"),
    }
}

/// Subsets of the spectrum examined for THM5(a): all nonempty ones when
/// the spectrum is small, otherwise a fixed-seed sample.
pub fn thm5_subsets(spectrum_len: usize) -> (Vec<Vec<usize>>, bool) {
    if spectrum_len <= THM5_EXHAUSTIVE_LIMIT {
        let subsets = (1u32..1 << spectrum_len)
            .map(|mask| (0..spectrum_len).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
        return (subsets, true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(THM5_SEED);
    let subsets = (0..THM5_SAMPLES)
        .map(|_| loop {
            let pick: Vec<usize> = (0..spectrum_len).filter(|_| rng.random_bool(0.5)).collect();
            if !pick.is_empty() {
                break pick;
            }
        })
        .collect();
    (subsets, false)
}

fn check_thm5(facts: &RingFacts<'_>) -> Verdict {
    let primes = &facts.primes;
    let (subsets, exhaustive) = thm5_subsets(primes.len());
    let no_maximal_member = subsets.iter().find(|t| {
        !t.iter()
            .any(|&i| !t.iter().any(|&j| primes[i].is_strict_subset(&primes[j])))
    });
    let part_a = format!(
        "(a) {} subsets {}",
        subsets.len(),
        if exhaustive { "exhaustive" } else { "sampled" }
    );
    if let Some(t) = no_maximal_member {
        let names: Vec<String> = t.iter().map(|&i| facts.render(&primes[i])).collect();
        return Verdict::refuted(
            format!("[{}]", names.join(",")),
            format!("{part_a}; (a) fails"),
        );
    }
    match &facts.class.witness {
        None => Verdict::verified(part_a),
        Some(w) => Verdict::refuted(
            facts.render(w),
            format!("{part_a}, all have a maximal member; (b) fails: prime not principal"),
        ),
    }
}

fn check_thm6(facts: &RingFacts<'_>) -> Verdict {
    let ring = facts.ring;
    let mut ideals = 0;
    let mut hypothesis_met = 0;
    for i in facts.lattice.proper() {
        ideals += 1;
        let minimal = facts
            .lattice
            .minimal_primes_over(ring, i)
            .expect("proper ideal");
        let mut sorted = minimal.clone();
        sorted.dedup();
        let well_formed = !minimal.is_empty()
            && sorted.len() == minimal.len()
            && minimal
                .iter()
                .all(|p| facts.primes.contains(p) && i.is_subset(p))
            && minimal.iter().all(|p| {
                !facts
                    .primes
                    .iter()
                    .any(|q| i.is_subset(q) && q.is_strict_subset(p))
            })
            && facts
                .primes
                .iter()
                .filter(|q| i.is_subset(q))
                .all(|q| minimal.iter().any(|p| p.is_subset(q)));
        if !well_formed {
            return Verdict::refuted(
                facts.render(i),
                "minimal primes over this ideal are malformed".to_string(),
            );
        }
        if minimal.iter().all(|p| facts.is_ppri(p)) {
            hypothesis_met += 1;
        }
    }
    Verdict::verified(format!(
        "{ideals} proper ideals; all minimal primes PPRI for {hypothesis_met}"
    ))
}

fn report(claim: ClaimId, ring: &str, verdict: Verdict, started: Instant) -> ClaimReport {
    ClaimReport {
        claim,
        ring: ring.to_string(),
        status: verdict.status,
        witness: verdict.witness,
        note: verdict.note,
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
    }
}

fn ex2_report() -> ClaimReport {
    let started = Instant::now();
    let out = audit_ex2();
    let verdict = match (out.holds, out.witness) {
        (true, w) => Verdict {
            status: Status::Verified,
            witness: w,
            note: Some("prime, principal with witness (1,0), not maximal".to_string()),
        },
        (false, w) => Verdict::refuted(w.unwrap_or_else(|| "Z^2:(1,0)".to_string()), None),
    };
    report(ClaimId::Ex2, "zmodel", verdict, started)
}

/// Reports for one claim, one per corpus ring (a single `zmodel` report
/// for EX2), in corpus order.
pub fn run_claim(claim: ClaimId, corpus: &Corpus, opts: &AuditOptions) -> Vec<ClaimReport> {
    run_audit(&[claim], corpus, opts)
}

/// Runs `claims` over the corpus. Rings are processed in parallel; the
/// result is ordered by claim (in [`ClaimId::ALL`] order) then by ring.
pub fn run_audit(claims: &[ClaimId], corpus: &Corpus, opts: &AuditOptions) -> Vec<ClaimReport> {
    let mut claims: Vec<ClaimId> = claims.to_vec();
    claims.sort();
    claims.dedup();
    let per_ring: Vec<ClaimId> = claims
        .iter()
        .copied()
        .filter(|&c| c != ClaimId::Ex2)
        .collect();

    let by_ring: Vec<Vec<ClaimReport>> = if per_ring.is_empty() {
        Vec::new()
    } else {
        corpus
            .rings()
            .par_iter()
            .map(|ring| {
                let facts = RingFacts::new(ring);
                per_ring
                    .iter()
                    .map(|&c| {
                        let started = Instant::now();
                        report(c, ring.label(), check(c, &facts, opts), started)
                    })
                    .collect()
            })
            .collect()
    };

    let mut out = Vec::new();
    for &c in &claims {
        if c == ClaimId::Ex2 {
            out.push(ex2_report());
            continue;
        }
        let k = per_ring.iter().position(|&p| p == c).unwrap();
        out.extend(by_ring.iter().map(|reports| reports[k].clone()));
    }
    out
}
