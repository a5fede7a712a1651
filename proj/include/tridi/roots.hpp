#pragma once

#include "tridi/charpoly.hpp"

namespace tridi {

struct SpectrumEntry {
  Complex value;
  int mult = 1;
};

/// Multiset of eigenvalues.
struct Spectrum {
  std::vector<SpectrumEntry> entries;

  int total() const;
  /// Values repeated according to multiplicity.
  Vector expanded() const;
};

struct RootOptions {
  double tol = 1e-12;
  int max_iter = 500;
};

/// All roots of a monic polynomial by Aberth-Ehrlich iteration with a
/// Durand-Kerner fallback, followed by Newton polishing. Exactly vanishing
/// trailing coefficients are deflated and reported as exact zeros.
Vector find_roots(const CharPoly& p, RootOptions opts = {});

/// max(1e-8, 1e-6 * max|root|)
double default_cluster_radius(std::span<const Complex> values);

/// Single-linkage clustering; each cluster becomes its mean with the cluster
/// size as multiplicity. Output is sorted by (real, imag).
Spectrum cluster(std::span<const Complex> roots, double radius);

/// Weighted variant used to merge coincident entries of a spectrum.
Spectrum merge_coincident(const Spectrum& s, double radius);

/// Enforces exact negation symmetry for the spectrum of a zero-diagonal matrix.
Spectrum symmetrize_pm(const Spectrum& s, double tol);

void sort_spectrum(Spectrum& s);

}  // namespace tridi
