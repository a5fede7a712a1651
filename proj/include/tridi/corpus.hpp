#pragma once

// Seeded verification corpus. `run_corpus` evaluates instances with OpenMP;
// `run_corpus_serial` is the single-threaded reference it must agree with.

#include <cstdint>
#include <random>
#include <string>

#include "tridi/oracle.hpp"

namespace tridi::corpus {

struct CorpusConfig {
  int count = 200;
  int nmax = 12;
  std::uint64_t seed = 7;
};

/// Acceptance thresholds applied to every instance.
struct Tolerances {
  double spectrum_match = 1e-7;
  double det_closed_form = 1e-9;
  double det_j_even = 1e-12;
  double det_recurrence = 1e-10;
  double square_identity = 1e-12;
  double residual = 1e-8;
  double degenerate_cluster_sum = 1e-6;
  /// Radius used to gather the near-zero eigenvalues of the dense solve in
  /// the x = i*lambda case.
  double degenerate_cluster_radius = 1e-4;
};

struct Instance {
  int index = 0;
  TridiagonalMatrix j;
  PerturbationParams p;
};

using Rng = std::mt19937_64;

/// Complex number with modulus uniform in [rmin, rmax] and uniform phase.
Complex random_annulus(Rng& rng, double rmin, double rmax);
Complex random_disk(Rng& rng, double radius);
/// Zero-diagonal irreducible J with off-diagonals in the annulus 0.1 <= |z| <= 2.
TridiagonalMatrix random_zero_diag(std::size_t n, Rng& rng);

/// Instance `index` depends only on (seed, index).
Instance make_instance(const CorpusConfig& cfg, int index);

struct InstanceResult {
  int index = 0;
  int n = 0;
  double spectrum_match = 0.0;      // mapped sigma(B) vs dense eigensolve of B
  double j_path_match = 0.0;        // recurrence+roots sigma(J) vs dense eigensolve of J
  double det_closed_form = 0.0;     // det_two_periodic vs dense LU, relative
  double det_j_even = 0.0;          // det_j_even vs recurrence determinant, relative (even n)
  double det_recurrence = 0.0;      // recurrence determinant of B vs dense LU, relative
  double square_identity = 0.0;     // |A^2 - J^2 - x^2 I|_max / (max|J| + |x|)^2
  double eigen_residual = 0.0;      // max over every constructed chain
  double chain_residual = 0.0;
  double reflect_residual = 0.0;    // reflected J chains only
  int degenerate_mult = 0;          // mapped multiplicity of 0 at x = i*lambda_1
  int degenerate_expected = 0;
  int degenerate_dense_mult = 0;
  double degenerate_cluster_sum = 0.0;
  bool parity_ok = false;
  std::string error;
  bool passed = false;
};

InstanceResult check_instance(const Instance& inst, const Tolerances& tol = {});

struct CorpusReport {
  std::vector<InstanceResult> results;
  oracle::ResidualReport summary;
};

oracle::ResidualReport summarize(const std::vector<InstanceResult>& results);

CorpusReport run_corpus(const CorpusConfig& cfg, const Tolerances& tol = {});
CorpusReport run_corpus_serial(const CorpusConfig& cfg, const Tolerances& tol = {});

}  // namespace tridi::corpus
