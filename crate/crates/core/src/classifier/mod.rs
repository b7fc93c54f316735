//! Closed-form answers for x^7 + a x + b: integral closedness, v_p(i(K)), i(K).

pub mod closedness;
pub mod field;
pub mod monogenic;
pub mod tables;

pub use closedness::{dedekind_divides_index, index_candidate_primes, integral_closed, ClosednessVerdict};
pub use field::{field_index, IndexReport, FIELD_INDEX_VALUES};
pub use monogenic::{
    is_two_eisenstein, monogenic_family_certificate, MonogenicCertificate, MonogenicFamilyParams,
    MonogenicOutcome,
};
pub use tables::{matching_rows, nu2_index, nu3_index, nup_index, row_classes, sample_row, verify_nup};
