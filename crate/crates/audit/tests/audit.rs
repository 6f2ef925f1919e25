use std::path::PathBuf;

use pprir_audit::claims::{run_audit, run_claim, AuditOptions, ClaimId, Status};
use pprir_audit::corpus::{default_corpus, RING_A_LABEL};
use pprir_audit::report::{parse_json_report, render_report, Format};
use pprir_core::ideal::{self, Ideal};

#[test]
fn verified_claims_on_default_corpus() {
    let corpus = default_corpus();
    let reports = run_audit(&ClaimId::ALL, &corpus, &AuditOptions::default());
    assert_eq!(reports.len(), 11 * 76 + 1);
    for r in &reports {
        match r.claim {
            ClaimId::Thm2 | ClaimId::Thm5 if r.ring == RING_A_LABEL => {
                assert_eq!(r.status, Status::Refuted, "{r:?}")
            }
            ClaimId::Thm3 => assert_ne!(r.status, Status::Refuted, "{r:?}"),
            _ => assert_eq!(r.status, Status::Verified, "{r:?}"),
        }
        if r.status == Status::Refuted {
            assert!(r.witness.is_some());
        }
        if r.status == Status::Skipped {
            assert!(r.note.is_some());
        }
    }
}

#[test]
fn report_order_follows_claims_then_corpus() {
    let corpus = default_corpus();
    let reports = run_audit(
        &[ClaimId::Thm6, ClaimId::Prop1],
        &corpus,
        &AuditOptions::default(),
    );
    let labels: Vec<&str> = corpus.rings().iter().map(|r| r.label()).collect();
    assert!(reports[..76].iter().all(|r| r.claim == ClaimId::Prop1));
    assert!(reports[76..].iter().all(|r| r.claim == ClaimId::Thm6));
    let got: Vec<&str> = reports[..76].iter().map(|r| r.ring.as_str()).collect();
    assert_eq!(got, labels);
}

#[test]
fn refuted_witnesses_revalidate() {
    let corpus = default_corpus();
    for claim in [ClaimId::Thm2, ClaimId::Thm5] {
        for r in run_claim(claim, &corpus, &AuditOptions::default()) {
            if r.status != Status::Refuted {
                continue;
            }
            let ring = corpus.get(&r.ring).unwrap();
            let p = Ideal::parse(ring, r.witness.as_deref().unwrap()).unwrap();
            assert!(ideal::is_prime(ring, &p).unwrap());
            assert_eq!(ideal::is_principal(ring, &p).unwrap(), None);
        }
    }
}

#[test]
fn thm3_above_cap_is_skipped_with_reason() {
    let corpus = default_corpus();
    let reports = run_claim(ClaimId::Thm3, &corpus, &AuditOptions { endo_cap: 4 });
    let z5 = reports.iter().find(|r| r.ring == "Z_5").unwrap();
    assert_eq!(z5.status, Status::Skipped);
    assert!(z5.note.as_deref().unwrap().contains("cap 4"));
}

#[test]
fn json_round_trip_of_full_audit() {
    let reports = run_audit(&ClaimId::ALL, &default_corpus(), &AuditOptions::default());
    let text = render_report(&reports, Format::Json);
    assert_eq!(parse_json_report(&text).unwrap(), reports);
}

/// Text output carries no timings, so it can be compared byte for byte.
/// Regenerate with `UPDATE_GOLDEN=1 cargo test -p pprir-audit --test audit`.
#[test]
fn golden_text_audit() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/audit_default.txt");
    let reports = run_audit(&ClaimId::ALL, &default_corpus(), &AuditOptions::default());
    let text = render_report(&reports, Format::Text);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &text).unwrap();
    }
    let golden = std::fs::read_to_string(&path).expect("golden file present");
    assert_eq!(text, golden);
}
