//! Runs each randomized invariant suite as an individual test.

#[path = "common/property_impl.rs"]
mod property_impl;

#[test]
fn frobenius_error_identity() {
    property_impl::frobenius_error_identity();
}

#[test]
fn frobenius_oracle_dominance() {
    property_impl::frobenius_oracle_dominance();
}

#[test]
fn spectral_invariants() {
    property_impl::spectral_invariants();
}

#[test]
fn diag_rank1_oracles() {
    property_impl::diag_rank1_oracles();
}

#[test]
fn projection_properties() {
    property_impl::projection_properties();
}

#[test]
fn cadzow_invariants() {
    property_impl::cadzow_invariants();
}

#[test]
fn reciprocal_symmetry_and_rayleigh_bounds() {
    property_impl::reciprocal_symmetry_and_rayleigh_bounds();
}
