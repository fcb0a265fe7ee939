//! Mass functions, belief values, propagation along arguments, and
//! composition of argument kernels.
//!
//! Backward kernels carry mass from an argument's domain to its codomain,
//! forward kernels the other way. Either family composes by matrix product,
//! with the identity argument's kernel as two-sided unit; superficial
//! arguments are refused everywhere.

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraSignature;
use crate::argument::{Argument, Direction, Reconstruction, TransformKernel};
use crate::error::{Error, Result};
use crate::table;
use crate::transform::zeta_over_subsets;
use crate::DEFAULT_TOLERANCE;

/// A map from an algebra's elements to `[0,1]` summing to 1. Normalized
/// when the least element carries no mass; unnormalized mass functions are
/// admitted everywhere and never silently renormalized.
#[derive(Clone, Debug, PartialEq)]
pub struct MassFunction {
    algebra: AlgebraSignature,
    mass: Vec<f64>,
}

impl MassFunction {
    /// Validates entries and total at the default tolerance.
    pub fn new(algebra: AlgebraSignature, mass: Vec<f64>) -> Result<Self> {
        Self::new_with_tolerance(algebra, mass, DEFAULT_TOLERANCE)
    }

    pub fn new_with_tolerance(
        algebra: AlgebraSignature,
        mass: Vec<f64>,
        tol: f64,
    ) -> Result<Self> {
        let sum: f64 = mass.iter().sum();
        let min = mass.iter().copied().fold(f64::INFINITY, f64::min);
        if mass.len() != algebra.element_count()
            || (sum - 1.0).abs() > tol
            || !mass.iter().all(|&v| v >= -tol && v <= 1.0 + tol)
        {
            return Err(Error::InvalidMass { sum, min });
        }
        Ok(Self { algebra, mass })
    }

    /// All mass on a single element.
    pub fn point(algebra: AlgebraSignature, bits: usize) -> Result<Self> {
        let mut mass = vec![0.0; algebra.element_count()];
        *mass
            .get_mut(bits)
            .ok_or(Error::ElementOutOfRange { bits, atoms: algebra.atom_count() })? = 1.0;
        Ok(Self { algebra, mass })
    }

    pub fn algebra(&self) -> &AlgebraSignature {
        &self.algebra
    }

    pub fn values(&self) -> &[f64] {
        &self.mass
    }

    pub fn value(&self, bits: usize) -> f64 {
        self.mass[bits]
    }

    /// Normalized iff the least element carries (numerically) no mass.
    pub fn is_normalized(&self) -> bool {
        self.mass[0] <= DEFAULT_TOLERANCE
    }

    pub fn to_data(&self) -> MassData {
        MassData { algebra: self.algebra.clone(), mass: self.mass.clone() }
    }
}

/// Mass payload on disk: values in bitmask order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MassData {
    pub algebra: AlgebraSignature,
    pub mass: Vec<f64>,
}

impl MassData {
    pub fn into_mass(self) -> Result<MassFunction> {
        MassFunction::new(self.algebra, self.mass)
    }
}

fn check_same_algebra(got: &AlgebraSignature, want: &AlgebraSignature) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch { left: got.to_string(), right: want.to_string() })
    }
}

/// Backward kernel of `arg` if it classifies as an uncertain inference
/// argument; otherwise the refusal that names the failed classification.
fn require_inference(arg: &Argument, tol: f64) -> Result<TransformKernel> {
    let backward = arg.backward_transform();
    let min_backward = backward.min_entry();
    if min_backward >= -tol {
        return Ok(backward);
    }
    let min_forward = arg.forward_transform().min_entry();
    if min_forward < -tol {
        Err(Error::Superficial { min_forward, min_backward })
    } else {
        Err(Error::NotClassified { required: "inference", min: min_backward })
    }
}

/// Forward kernel of `arg` if it classifies as an uncertain implication
/// argument.
fn require_implication(arg: &Argument, tol: f64) -> Result<TransformKernel> {
    let forward = arg.forward_transform();
    let min_forward = forward.min_entry();
    if min_forward >= -tol {
        return Ok(forward);
    }
    let min_backward = arg.backward_transform().min_entry();
    if min_backward < -tol {
        Err(Error::Superficial { min_forward, min_backward })
    } else {
        Err(Error::NotClassified { required: "implication", min: min_forward })
    }
}

/// Carries a mass function on the domain through an inference argument:
/// `m'(B) = Σ_A m(A) · backward(A, B)`. Total mass is conserved.
pub fn propagate_forward(mass: &MassFunction, arg: &Argument, tol: f64) -> Result<MassFunction> {
    check_same_algebra(mass.algebra(), arg.domain())?;
    let kernel = require_inference(arg, tol)?;
    propagate_through_kernel(mass, &kernel, tol)
}

/// Carries a mass function on the codomain back through an implication
/// argument: `m'(A) = Σ_B m(B) · forward(A, B)`.
pub fn propagate_backward(mass: &MassFunction, arg: &Argument, tol: f64) -> Result<MassFunction> {
    check_same_algebra(mass.algebra(), arg.codomain())?;
    let kernel = require_implication(arg, tol)?;
    propagate_through_kernel(mass, &kernel, tol)
}

/// Applies a kernel to a mass function directly: backward kernels map
/// domain mass to codomain mass, forward kernels map codomain mass to
/// domain mass. The output is validated at `tol`, so a kernel that is not
/// (row- or column-) stochastic enough is rejected through
/// [`Error::InvalidMass`].
pub fn propagate_through_kernel(
    mass: &MassFunction,
    kernel: &TransformKernel,
    tol: f64,
) -> Result<MassFunction> {
    match kernel.direction() {
        Direction::Backward => {
            check_same_algebra(mass.algebra(), kernel.domain())?;
            let out = table::vec_times_matrix(mass.values(), kernel.values(), kernel.cols());
            MassFunction::new_with_tolerance(kernel.codomain().clone(), out, tol)
        }
        Direction::Forward => {
            check_same_algebra(mass.algebra(), kernel.codomain())?;
            let out = table::matrix_times_vec(kernel.values(), kernel.cols(), mass.values());
            MassFunction::new_with_tolerance(kernel.domain().clone(), out, tol)
        }
    }
}

/// A composed kernel together with the table it reconstructs to.
#[derive(Clone, Debug)]
pub struct Composition {
    pub kernel: TransformKernel,
    pub reconstruction: Reconstruction,
}

/// Matrix product of two kernels of the same direction whose middle
/// algebras match. This is raw kernel algebra with no classification
/// gating; composing checked arguments should go through
/// [`compose_backward`] or [`compose_forward`].
pub fn kernel_product(
    first: &TransformKernel,
    second: &TransformKernel,
) -> Result<TransformKernel> {
    if first.direction() != second.direction() {
        return Err(Error::AlgebraMismatch {
            left: format!("{} kernel", first.direction()),
            right: format!("{} kernel", second.direction()),
        });
    }
    check_same_algebra(first.codomain(), second.domain())?;
    let product = table::matmul(first.values(), first.cols(), second.values(), second.cols());
    Ok(TransformKernel::from_parts(
        first.direction(),
        first.domain().clone(),
        second.codomain().clone(),
        product,
    ))
}

/// Composes the backward kernels of two inference arguments sharing a
/// middle algebra: `K(A, C) = Σ_B backward₁(A, B) · backward₂(B, C)`.
/// Propagating through `K` equals propagating through both arguments in
/// sequence.
pub fn compose_backward(
    first: &Argument,
    second: &Argument,
    tol: f64,
) -> Result<Composition> {
    check_same_algebra(first.codomain(), second.domain())?;
    let k1 = require_inference(first, tol)?;
    let k2 = require_inference(second, tol)?;
    let product = table::matmul(k1.values(), k1.cols(), k2.values(), k2.cols());
    let kernel = TransformKernel::from_parts(
        Direction::Backward,
        first.domain().clone(),
        second.codomain().clone(),
        product,
    );
    let reconstruction = kernel.reconstruct(tol);
    Ok(Composition { kernel, reconstruction })
}

/// Composes the forward kernels of two implication arguments sharing a
/// middle algebra; the result is column-stochastic and carries codomain
/// mass back to the first argument's domain.
pub fn compose_forward(
    first: &Argument,
    second: &Argument,
    tol: f64,
) -> Result<Composition> {
    check_same_algebra(first.codomain(), second.domain())?;
    let k1 = require_implication(first, tol)?;
    let k2 = require_implication(second, tol)?;
    let product = table::matmul(k1.values(), k1.cols(), k2.values(), k2.cols());
    let kernel = TransformKernel::from_parts(
        Direction::Forward,
        first.domain().clone(),
        second.codomain().clone(),
        product,
    );
    let reconstruction = kernel.reconstruct(tol);
    Ok(Composition { kernel, reconstruction })
}

/// Belief values of a mass function: `Bel(B) = Σ_{B̄ ⊆ B} m(B̄)`, in bitmask
/// order. `Bel(T) = 1` and `Bel` is monotone along set inclusion.
pub fn belief_from_mass(mass: &MassFunction) -> Vec<f64> {
    zeta_over_subsets(mass.values()).expect("mass length is a power of two")
}
