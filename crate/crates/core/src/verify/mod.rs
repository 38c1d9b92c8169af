//! The `W_n` operators, the first-row/column audit against the matrix
//! oracle, the sup-norm estimate sweep, and the named verification suites.

mod estimates;
mod eta;
mod report;
mod suites;
mod wn;

pub use estimates::{
    coefficient_identity_check, hnset_check, majorization_ratios, HnsetOutcome, MajorizationPoint, HNSET_SAMPLED_TOL,
};
pub use eta::{
    eta12_report, eta_corrected_kernel, eta_entry_oracle, eta_oracle_vector, eta_paper, Eta12Report, EtaEntry, ETA_TOL,
};
pub use report::{CheckReport, Status, SuiteReport};
pub use suites::{run_suite, Mode, Suite, SuiteConfig};
pub use wn::{wn_paper, wn_sequence};

fn as_text<T: std::fmt::Display, Ser: serde::Serializer>(v: &T, s: Ser) -> Result<Ser::Ok, Ser::Error> {
    s.collect_str(v)
}
