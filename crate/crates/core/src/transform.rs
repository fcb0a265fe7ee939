//! Fast zeta and Möbius transforms on the subset lattice.
//!
//! All four transforms run in place as per-bit sweeps, `O(m·2^m)` for a
//! vector of length `2^m`. The two lattice directions are each other's
//! mirror: subsets accumulate upward from `F`, supersets downward from `T`.
//! Each Möbius transform inverts the zeta transform of the same direction.

use crate::error::{Error, Result};

/// Strides 1, 2, 4, ... up to half of `len` (one per bit position).
pub(crate) fn unit_strides(len: usize) -> impl Iterator<Item = usize> {
    debug_assert!(len.is_power_of_two());
    (0..len.trailing_zeros()).map(|i| 1usize << i)
}

/// For every bit, split the vector into (clear, set) index pairs and apply
/// `step(clear_entry, set_entry)`.
fn bit_sweep(values: &mut [f64], step: impl Fn(&mut f64, &mut f64)) {
    for stride in unit_strides(values.len()) {
        for block in values.chunks_exact_mut(stride * 2) {
            let (lo, hi) = block.split_at_mut(stride);
            for (z, o) in lo.iter_mut().zip(hi.iter_mut()) {
                step(z, o);
            }
        }
    }
}

/// In-place `f(S) = Σ_{S̄ ⊆ S} g(S̄)`.
pub(crate) fn zeta_subsets_in_place(values: &mut [f64]) {
    bit_sweep(values, |z, o| *o += *z);
}

/// In-place `f(S) = Σ_{S̄ ⊆ S} (−1)^{|S|−|S̄|} g(S̄)`; inverts [`zeta_subsets_in_place`].
pub(crate) fn moebius_subsets_in_place(values: &mut [f64]) {
    bit_sweep(values, |z, o| *o -= *z);
}

/// In-place `f(S) = Σ_{S̄ ⊇ S} g(S̄)`.
pub(crate) fn zeta_supersets_in_place(values: &mut [f64]) {
    bit_sweep(values, |z, o| *z += *o);
}

/// In-place `f(S) = Σ_{S̄ ⊇ S} (−1)^{|S̄|−|S|} g(S̄)`; inverts [`zeta_supersets_in_place`].
pub(crate) fn moebius_supersets_in_place(values: &mut [f64]) {
    bit_sweep(values, |z, o| *z -= *o);
}

fn transformed(values: &[f64], run: impl Fn(&mut [f64])) -> Result<Vec<f64>> {
    if !values.len().is_power_of_two() {
        return Err(Error::NotPowerOfTwo(values.len()));
    }
    let mut out = values.to_vec();
    run(&mut out);
    Ok(out)
}

/// Subset sums: `f(S) = Σ_{S̄ ⊆ S} g(S̄)`.
pub fn zeta_over_subsets(values: &[f64]) -> Result<Vec<f64>> {
    transformed(values, zeta_subsets_in_place)
}

/// Möbius inversion over subsets: `f(S) = Σ_{S̄ ⊆ S} (−1)^{|S|−|S̄|} g(S̄)`.
pub fn moebius_over_subsets(values: &[f64]) -> Result<Vec<f64>> {
    transformed(values, moebius_subsets_in_place)
}

/// Superset sums: `f(S) = Σ_{S̄ ⊇ S} g(S̄)`.
pub fn zeta_over_supersets(values: &[f64]) -> Result<Vec<f64>> {
    transformed(values, zeta_supersets_in_place)
}

/// Möbius inversion over supersets: `f(S) = Σ_{S̄ ⊇ S} (−1)^{|S̄|−|S|} g(S̄)`.
pub fn moebius_over_supersets(values: &[f64]) -> Result<Vec<f64>> {
    transformed(values, moebius_supersets_in_place)
}
