use alloc::string::String;

/// Result of checking one statement on one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimOutcome {
    /// The checked statement held in every case.
    pub holds: bool,
    /// Whether the statement's hypothesis (e.g. "R is PPRIR") is met by the
    /// ring. Conclusions are checked either way.
    pub hypothesis_met: bool,
    /// Number of individual cases examined.
    pub cases: usize,
    /// Refuting object when `holds` is false, or the exhibited object for
    /// existence statements.
    pub witness: Option<String>,
}
