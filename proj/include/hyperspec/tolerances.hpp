#pragma once

namespace hyperspec::tol {

// Input to the eigensolver must be symmetric to this absolute tolerance.
inline constexpr double kSymmetry = 1e-12;

// Jacobi stops once the off-diagonal Frobenius norm drops below kJacobi * ||S||_F.
inline constexpr double kJacobi = 1e-12;
inline constexpr int kJacobiSweepCap = 100;

// Eigenvalues lambda, lambda' share a cluster when |lambda - lambda'| <= kCluster * max(1, |lambda|).
inline constexpr double kCluster = 1e-7;

// Absolute threshold below which an eigenvalue counts as zero.
inline constexpr double kZero = 1e-9;

// Every reported eigenpair satisfies ||Lf - lambda f||_inf <= kEigenpair.
inline constexpr double kEigenpair = 1e-8;

// Residual tolerance for predicted eigenfunctions in the sharpness battery.
inline constexpr double kBatteryResidual = 1e-7;

// |chi - bound| <= kSharp counts as equality.
inline constexpr double kSharp = 1e-6;

// Lambda_1 = lambda_N = 1 (and mu_1 = c/avg deg) detection for the degenerate conventions.
inline constexpr double kConvention = 1e-9;

} // namespace hyperspec::tol
