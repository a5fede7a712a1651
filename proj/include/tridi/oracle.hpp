#pragma once

// Brute-force verification path. Nothing here calls the recurrence, the
// polynomial root finder or the closed-form mappings.

#include "tridi/eigvec.hpp"

namespace tridi::oracle {

struct ResidualReport {
  double max_eigen_residual = 0.0;
  double max_chain_residual = 0.0;
  double spectrum_match_distance = 0.0;
  double square_identity_deviation = 0.0;
  bool passed = true;
};

/// Hessenberg reduction + shifted complex QR, clustered into multiplicities.
/// A non-positive radius selects the default clustering policy.
Spectrum dense_eigen(const DenseMatrix& t, double radius = 0.0);

/// Bottleneck distance between two multisets: the smallest achievable
/// maximum distance over all perfect matchings. Throws TotalMismatch.
double match_spectra(const Spectrum& s1, const Spectrum& s2);

/// Dense A*A against J*J + x^2 I; deviation is stored absolute, and
/// `passed` reflects deviation <= 1e-12 * (max|J| + |x|)^2.
ResidualReport check_square_identity(const TridiagonalMatrix& j, Complex x);

Complex dense_determinant(const DenseMatrix& t);

struct ChainResidual {
  double eigen = 0.0;  // |(T - mu)v_0| / (|T|_F |v_0|)
  double chain = 0.0;  // max_j |(T - mu)v_j - v_{j-1}| / (|T|_F max(|v_j|, |v_{j-1}|))
};

/// Relative residuals of a right chain, or of a left chain when `transpose`
/// is set (checked against T^T).
ChainResidual chain_residual(const DenseMatrix& t, const JordanChain& chain, bool transpose = false);

}  // namespace tridi::oracle
