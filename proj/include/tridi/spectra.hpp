#pragma once

#include "tridi/roots.hpp"

namespace tridi {

struct SpectralPair {
  Complex lambda;  // representative: Re > 0, or Re == 0 and Im > 0
  int mult = 1;
};

/// Spectrum of a zero-diagonal matrix stored as one representative per
/// {+lambda, -lambda} pair plus the multiplicity of zero.
struct PairedSpectrum {
  std::vector<SpectralPair> pairs;
  int zero_mult = 0;
  int n = 0;

  /// Expands back to a plain spectrum (zero entry last).
  Spectrum expand() const;
  /// lambda_1..lambda_l with multiplicity, zeros included for odd n.
  Vector half_spectrum() const;
  /// Throws ParityError when the order/multiplicity invariants fail.
  void validate() const;
};

/// Gate for detecting x^2 == -lambda^2.
bool is_degenerate(Complex lambda, Complex x);

PairedSpectrum pair_spectrum(const Spectrum& s, int n);

struct SpectrumOptions {
  RootOptions roots;
  bool polish_on_matrix = true;
};

/// char_poly -> parity_split -> roots in w = z^2 -> +-sqrt(w) -> cluster ->
/// symmetrize_pm -> pair_spectrum.
PairedSpectrum zero_diagonal_spectrum(const TridiagonalMatrix& j, SpectrumOptions opts = {});

Spectrum map_to_alternating(const PairedSpectrum& ps, Complex x);
Spectrum map_to_two_periodic(const PairedSpectrum& ps, PerturbationParams p);

/// (-1)^l prod over odd k of a_k c_k.
Complex det_j_even(const TridiagonalMatrix& j);
Complex det_alternating(const PairedSpectrum& ps, Complex x);
Complex det_two_periodic(const PairedSpectrum& ps, PerturbationParams p);

}  // namespace tridi
