#include "tridi/spectra.hpp"

#include <cmath>

namespace tridi {

namespace {

bool is_representative(Complex z) { return z.real() > 0.0 || (z.real() == 0.0 && z.imag() > 0.0); }

// Newton on chi_n evaluated through the matrix recurrence; keeps a step only
// when it lowers |chi_n|.
Complex polish_on_matrix(const TridiagonalMatrix& j, Complex z) {
  CharValue cur = eval_char_poly(j, z);
  for (int step = 0; step < 4; ++step) {
    if (cur.derivative == Complex{} || cur.value == Complex{}) break;
    const Complex cand = z - cur.value / cur.derivative;
    const CharValue next = eval_char_poly(j, cand);
    if (!is_finite(cand) || std::abs(next.value) >= std::abs(cur.value)) break;
    z = cand;
    cur = next;
  }
  return z;
}

// A root of multiplicity m is a simple root of chi^{(m-1)}; Newton there
// recovers the centroid of a split cluster to working precision.
Complex refine_multiple(const CharPoly& chi, Complex z, int mult, double radius) {
  CharPoly d = chi;
  for (int k = 1; k < mult; ++k) {
    Vector next(d.coeffs.size() - 1);
    for (std::size_t i = 1; i < d.coeffs.size(); ++i) next[i - 1] = static_cast<double>(i) * d.coeffs[i];
    d.coeffs = std::move(next);
  }
  const Complex start = z;
  Complex value = d.eval(z);
  for (int step = 0; step < 6; ++step) {
    const Complex slope = d.derivative(z);
    if (slope == Complex{} || value == Complex{}) break;
    const Complex cand = z - value / slope;
    const Complex next = d.eval(cand);
    if (!is_finite(cand) || std::abs(cand - start) > radius || std::abs(next) >= std::abs(value)) break;
    z = cand;
    value = next;
  }
  return z;
}

}  // namespace

Spectrum PairedSpectrum::expand() const {
  Spectrum s;
  for (const auto& p : pairs) {
    s.entries.push_back({p.lambda, p.mult});
    s.entries.push_back({-p.lambda, p.mult});
  }
  if (zero_mult > 0) s.entries.push_back({Complex{}, zero_mult});
  return s;
}

Vector PairedSpectrum::half_spectrum() const {
  Vector out;
  for (const auto& p : pairs) out.insert(out.end(), static_cast<std::size_t>(p.mult), p.lambda);
  out.insert(out.end(), static_cast<std::size_t>(zero_mult / 2), Complex{});
  return out;
}

void PairedSpectrum::validate() const {
  int paired = 0;
  for (const auto& p : pairs) {
    if (p.mult < 1 || p.lambda == Complex{}) throw Error(ErrorCode::ParityError, "invalid pair entry");
    paired += p.mult;
  }
  if (2 * paired + zero_mult != n) throw Error(ErrorCode::ParityError, "multiplicities do not sum to n");
  if (n % 2 == 0 && zero_mult != 0) throw Error(ErrorCode::ParityError, "even order with a zero eigenvalue");
  if (n % 2 == 1 && zero_mult % 2 == 0) throw Error(ErrorCode::ParityError, "odd order needs odd zero multiplicity");
}

bool is_degenerate(Complex lambda, Complex x) {
  return std::abs(x * x + lambda * lambda) <= 1e-10 * (std::norm(x) + std::norm(lambda) + 1.0);
}

PairedSpectrum pair_spectrum(const Spectrum& s, int n) {
  PairedSpectrum ps;
  ps.n = n;
  for (const auto& e : s.entries) {
    if (e.value == Complex{}) {
      ps.zero_mult += e.mult;
    } else if (is_representative(e.value)) {
      bool partnered = false;
      for (const auto& f : s.entries) partnered = partnered || (f.value == -e.value && f.mult == e.mult);
      if (!partnered) throw Error(ErrorCode::ParityError, "spectrum is not negation-symmetric");
      ps.pairs.push_back({e.value, e.mult});
    }
  }
  ps.validate();
  return ps;
}

PairedSpectrum zero_diagonal_spectrum(const TridiagonalMatrix& j, SpectrumOptions opts) {
  if (!j.zero_diagonal()) throw Error(ErrorCode::NonZeroDiagonalInput, "expected a zero main diagonal");
  const std::size_t n = j.order();
  const CharPoly chi = char_poly(j);
  const ParityFactorization pf = parity_split(chi);

  Vector z;
  if (pf.reduced.size() > 1) {
    for (const Complex w : find_roots(CharPoly{pf.reduced}, opts.roots)) {
      Complex r = std::sqrt(w);
      if (opts.polish_on_matrix && r != Complex{}) r = polish_on_matrix(j, r);
      z.push_back(r);
      z.push_back(-r);
    }
  }
  if (pf.odd) z.push_back(Complex{});

  const double radius = default_cluster_radius(z);
  Spectrum s = cluster(z, radius);
  for (auto& e : s.entries) {
    if (e.mult > 1 && e.value != Complex{}) e.value = refine_multiple(chi, e.value, e.mult, radius);
  }
  return pair_spectrum(symmetrize_pm(s, radius), static_cast<int>(n));
}

Spectrum map_to_alternating(const PairedSpectrum& ps, Complex x) {
  Spectrum s;
  for (const auto& p : ps.pairs) {
    if (is_degenerate(p.lambda, x)) {
      s.entries.push_back({Complex{}, 2 * p.mult});
      continue;
    }
    const Complex mu = x == Complex{} ? p.lambda : std::sqrt(p.lambda * p.lambda + x * x);
    s.entries.push_back({mu, p.mult});
    s.entries.push_back({-mu, p.mult});
  }
  if (ps.n % 2 == 1) {
    const int r = (ps.zero_mult - 1) / 2;
    s.entries.push_back({x, r + 1});
    if (r >= 1) s.entries.push_back({-x, r});
  }
  Vector values;
  for (const auto& e : s.entries) values.push_back(e.value);
  return merge_coincident(s, default_cluster_radius(values));
}

Spectrum map_to_two_periodic(const PairedSpectrum& ps, PerturbationParams p) {
  Spectrum s = map_to_alternating(ps, p.half_difference());
  const Complex shift = p.half_sum();
  Vector values;
  for (auto& e : s.entries) {
    e.value += shift;
    values.push_back(e.value);
  }
  return merge_coincident(s, default_cluster_radius(values));
}

Complex det_j_even(const TridiagonalMatrix& j) {
  const std::size_t n = j.order();
  if (n % 2 == 1) throw Error(ErrorCode::OddOrder, "closed-form determinant needs even order");
  if (!j.zero_diagonal()) throw Error(ErrorCode::NonZeroDiagonalInput, "expected a zero main diagonal");
  Complex prod = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  for (std::size_t k = 0; k + 1 < n; k += 2) prod *= j.sub()[k] * j.sup()[k];
  return prod;
}

Complex det_alternating(const PairedSpectrum& ps, Complex x) {
  const Vector half = ps.half_spectrum();
  Complex prod = half.size() % 2 == 0 ? 1.0 : -1.0;
  for (const Complex lam : half) prod *= x * x + lam * lam;
  if (ps.n % 2 == 1) prod *= x;
  return prod;
}

Complex det_two_periodic(const PairedSpectrum& ps, PerturbationParams p) {
  Complex prod = 1.0;
  for (const Complex lam : ps.half_spectrum()) prod *= p.x * p.y - lam * lam;
  if (ps.n % 2 == 1) prod *= p.x;
  return prod;
}

}  // namespace tridi
