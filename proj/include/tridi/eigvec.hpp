#pragma once

#include <optional>

#include "tridi/spectra.hpp"

namespace tridi {

/// Eigenvector followed by generalized eigenvectors:
/// (T - mu I) v_0 = 0, (T - mu I) v_j = v_{j-1}.
struct JordanChain {
  Complex eigenvalue;
  std::vector<Vector> vectors;

  std::size_t length() const { return vectors.size(); }
  std::size_t matrix_order() const { return vectors.empty() ? 0 : vectors.front().size(); }
};

/// v_1 = alpha u_1^{(+)} + beta u_1^{(-)} + gamma u_0^{(+)} + delta u_0^{(-)}
struct CombinationCoefficients {
  Complex alpha, beta, gamma, delta;
};

/// Diagonal similarity with T^T = D^{-1} T D: d_1 = 1, d_{k+1} = d_k a_k / c_k.
struct LeftScaling {
  Vector d;
};

/// Relative residual accepted by the recurrence-based constructions.
inline constexpr double kChainTolerance = 1e-8;

/// Scales every vector of the chain so that the first significant component
/// of v_0 becomes exactly 1.
void normalize_chain(JordanChain& chain);

/// Forward recurrence with u_1 = 1; throws NotAnEigenvalue when the last row
/// is not satisfied to `tol` (relative to |T|_F |u|).
Vector eigenvector_j(const TridiagonalMatrix& t, Complex lambda, double tol = kChainTolerance);

/// Chain of the given depth; generalized vectors are fixed by w_1 = 0.
JordanChain jordan_chain_j(const TridiagonalMatrix& t, Complex lambda, std::size_t depth,
                           double tol = kChainTolerance);

/// lambda -> -lambda for a zero-diagonal matrix: v_j -> (-1)^j E v_j.
JordanChain reflect_chain(const JordanChain& chain);

/// sqrt(lambda^2 + x^2) on the branch nearest to lambda.
Complex alternating_mu(Complex lambda, Complex x);

struct Eigenpair {
  Complex mu;
  Vector v;
};

/// Eigenvector of J + xE for +mu (sign = +1) or -mu (sign = -1), built from
/// the J-eigenvectors for +lambda and -lambda. Throws DegenerateMu when
/// x^2 = -lambda^2, where the zero-eigenvalue construction applies.
Eigenpair eigenvector_a_generic(std::span<const Complex> u_plus, std::span<const Complex> u_minus,
                                Complex lambda, Complex x, int sign);

CombinationCoefficients generalized_coefficients(Complex lambda, Complex x, int sign);

/// First generalized eigenvector of J + xE at sign * mu from length-2 chains
/// of J at +lambda and -lambda.
Vector gen_eigenvector_a_generic(const JordanChain& plus, const JordanChain& minus, Complex lambda,
                                 Complex x, int sign);

/// x = imag_sign * i * lambda: eigenvector and first generalized eigenvector
/// of the resulting zero eigenvalue.
JordanChain eigenvector_a_zero_mu(std::span<const Complex> u_plus, std::span<const Complex> u_minus,
                                  Complex lambda, int imag_sign);

/// Chain at +x of J + xE (odd order) from the chain of J at 0. Depth 1 needs
/// one J vector, depth 2 needs three.
JordanChain chain_a_plus_x(const JordanChain& chain0, Complex x, std::size_t depth);
/// Chain at -x; depth 1 needs two J vectors, depth 2 needs four.
JordanChain chain_a_minus_x(const JordanChain& chain0, Complex x, std::size_t depth);

struct PmXChains {
  JordanChain plus_x;
  std::optional<JordanChain> minus_x;
};
/// Longest chains at +-x that the given J chain supports.
PmXChains eigenvector_a_pm_x(const JordanChain& chain0, Complex x);

/// B = (J + x'E) + s I with x' = (x-y)/2 and s = (x+y)/2: same vectors,
/// eigenvalue shifted by s.
JordanChain chains_b_from_a(const JordanChain& a_chain, PerturbationParams p);
std::vector<JordanChain> chains_b_from_a(const std::vector<JordanChain>& a_chains, PerturbationParams p);

LeftScaling left_scaling(const TridiagonalMatrix& t);
/// Left chain: u~_j = D^{-1} u_j satisfies T^T u~_j = mu u~_j + u~_{j-1}.
JordanChain left_chain(const TridiagonalMatrix& t, const JordanChain& chain);

/// One chain (length min(mult, 2)) per distinct eigenvalue of J + xE.
std::vector<JordanChain> alternating_chains(const TridiagonalMatrix& j, const PairedSpectrum& ps, Complex x,
                                            double tol = kChainTolerance);
/// Same for the two-periodic matrix with diagonal (x, y, x, ...).
std::vector<JordanChain> two_periodic_chains(const TridiagonalMatrix& j, const PairedSpectrum& ps,
                                             PerturbationParams p, double tol = kChainTolerance);

}  // namespace tridi
