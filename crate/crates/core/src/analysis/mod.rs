//! Decision procedures: line minors, density, weak roundness, critical
//! elements, matchings and unstable sets.

mod density;
mod frame;
mod lines;
mod round;
mod skew;

pub use density::{
    critical_dichotomy_check, critical_elements, fullness, lines_through, matching_bound, pg_count,
    Fullness, FullnessParams, GrowthRateOracle,
};
pub use frame::{
    check_pg_restriction, contract_unstable_check, find_matching, find_unstable, long_line_checks,
    long_line_set_check, matching_cover_report, max_matching, spanning_lines, unstable_contraction,
    unstable_lines, CoverRow, LONG_LINE_CAP, MATCHING_NODE_CAP,
};
pub use lines::{
    has_line_restriction, kung_bound, kung_bound_check, line_minor, line_minor_capped,
    line_minor_points, lines_with_points, longest_line,
};
pub use round::{cover_is_valid, dense_round_restriction, phi_bound_holds, round_restriction_bound, weakly_round};
pub use skew::{skew_dense_subset, SkewParams};
