//! From splitting types to v_p(i(K)).

pub mod assemble;
pub mod counting;
pub mod engstrom;
pub mod scan;

pub use assemble::{assemble_nu, assemble_nu_with, classifier_nu, AssembleOptions, Evidence};
pub use counting::{count_monic_irreducibles, is_common_index_divisor, tame_dk_valuation};
pub use engstrom::{engstrom_lookup, engstrom_nu, EngstromKey, EngstromMatch};
pub use scan::{generator_scan, ScanResult, DEFAULT_BUDGET};
