#include "tridi/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace tridi {

int Spectrum::total() const {
  int t = 0;
  for (const auto& e : entries) t += e.mult;
  return t;
}

Vector Spectrum::expanded() const {
  Vector out;
  out.reserve(static_cast<std::size_t>(total()));
  for (const auto& e : entries) out.insert(out.end(), static_cast<std::size_t>(e.mult), e.value);
  return out;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Horner value, derivative and the bound sum |c_k| |z|^k.
struct Eval {
  Complex value;
  Complex derivative;
  double scale;
};

Eval evaluate(std::span<const Complex> c, Complex z) {
  Complex p{}, dp{};
  double s = 0.0;
  const double az = std::abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    s = s * az + std::abs(c[k]);
  }
  return {p, dp, s};
}

bool residual_ok(std::span<const Complex> c, Complex z, double tol) {
  const Eval e = evaluate(c, z);
  return std::abs(e.value) <= tol * e.scale;
}

Vector initial_guesses(std::span<const Complex> c) {
  const std::size_t d = c.size() - 1;
  double max_coeff = 0.0;
  for (std::size_t k = 0; k < d; ++k) max_coeff = std::max(max_coeff, std::abs(c[k]));
  const double radius = 1.0 + max_coeff;
  Vector z(d);
  for (std::size_t k = 0; k < d; ++k) {
    // small deterministic angular jitter breaks symmetric stagnation
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4 +
                         0.01 * std::sin(static_cast<double>(3 * k + 1));
    z[k] = std::polar(radius, theta);
  }
  return z;
}

bool aberth(std::span<const Complex> c, Vector& z, const RootOptions& opts) {
  const std::size_t d = z.size();
  std::vector<char> done(d, 0);
  for (int it = 0; it < opts.max_iter; ++it) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      const Eval e = evaluate(c, z[i]);
      if (std::abs(e.value) <= opts.tol * e.scale * 1e-2 || e.value == Complex{}) {
        done[i] = 1;
        continue;
      }
      all_done = false;
      Complex newton = e.derivative == Complex{} ? Complex{1e-3 * (1.0 + std::abs(z[i]))} : e.value / e.derivative;
      Complex repulsion{};
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i && z[i] != z[j]) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = newton / (1.0 - newton * repulsion);
      if (!is_finite(step)) continue;
      z[i] -= step;
      if (std::abs(step) <= 4.0 * kEps * std::abs(z[i])) done[i] = 1;
    }
    if (all_done) break;
  }
  return std::all_of(z.begin(), z.end(), [&](Complex r) { return residual_ok(c, r, opts.tol); });
}

bool durand_kerner(std::span<const Complex> c, Vector& z, const RootOptions& opts) {
  const std::size_t d = z.size();
  for (int it = 0; it < opts.max_iter; ++it) {
    double biggest = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (denom == Complex{}) denom = kEps;
      const Complex step = evaluate(c, z[i]).value / denom;
      if (!is_finite(step)) continue;
      z[i] -= step;
      biggest = std::max(biggest, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (biggest <= 4.0 * kEps) break;
  }
  return std::all_of(z.begin(), z.end(), [&](Complex r) { return residual_ok(c, r, opts.tol); });
}

void polish(std::span<const Complex> c, Vector& z) {
  for (auto& r : z) {
    for (int step = 0; step < 3; ++step) {
      const Eval e = evaluate(c, r);
      if (e.derivative == Complex{} || e.value == Complex{}) break;
      const Complex cand = r - e.value / e.derivative;
      if (!is_finite(cand) || std::abs(evaluate(c, cand).value) >= std::abs(e.value)) break;
      r = cand;
    }
  }
}

}  // namespace

Vector find_roots(const CharPoly& p, RootOptions opts) {
  if (p.coeffs.size() < 2) throw Error(ErrorCode::InvalidArgument, "polynomial degree must be >= 1");
  if (p.coeffs.back() != Complex{1.0}) throw Error(ErrorCode::InvalidArgument, "polynomial must be monic");
  if (!(opts.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "root tolerance must be positive");

  std::size_t zeros = 0;
  while (p.coeffs[zeros] == Complex{}) ++zeros;
  Vector roots(zeros);
  std::span<const Complex> c(p.coeffs.data() + zeros, p.coeffs.size() - zeros);
  const std::size_t d = c.size() - 1;
  if (d == 0) return roots;
  if (d == 1) {
    roots.push_back(-c[0]);
    return roots;
  }

  Vector z = initial_guesses(c);
  bool ok = aberth(c, z, opts);
  if (!ok) {
    z = initial_guesses(c);
    ok = durand_kerner(c, z, opts);
  }
  polish(c, z);
  if (!ok && !std::all_of(z.begin(), z.end(), [&](Complex r) { return residual_ok(c, r, opts.tol); })) {
    throw Error(ErrorCode::NoConvergence, "root iteration did not meet the residual bound");
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

double default_cluster_radius(std::span<const Complex> values) {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return std::max(1e-8, 1e-6 * m);
}

void sort_spectrum(Spectrum& s) {
  std::sort(s.entries.begin(), s.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
}

Spectrum merge_coincident(const Spectrum& s, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "cluster radius must be positive");
  const std::size_t m = s.entries.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (std::abs(s.entries[i].value - s.entries[j].value) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<Complex> sums(m);
  std::vector<int> counts(m, 0);
  std::vector<std::size_t> first(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = find(i);
    sums[r] += static_cast<double>(s.entries[i].mult) * s.entries[i].value;
    counts[r] += s.entries[i].mult;
    if (first[r] == m) first[r] = i;
  }
  Spectrum out;
  for (std::size_t r = 0; r < m; ++r) {
    if (counts[r] == 0) continue;
    // a singleton keeps its value bit-for-bit
    const bool singleton = counts[r] == s.entries[first[r]].mult;
    out.entries.push_back({singleton ? s.entries[first[r]].value : sums[r] / static_cast<double>(counts[r]),
                           counts[r]});
  }
  sort_spectrum(out);
  return out;
}

Spectrum cluster(std::span<const Complex> roots, double radius) {
  Spectrum s;
  for (const auto& r : roots) s.entries.push_back({r, 1});
  return merge_coincident(s, radius);
}

Spectrum symmetrize_pm(const Spectrum& s, double tol) {
  Spectrum out;
  int zero_mult = 0;
  std::vector<SpectrumEntry> rest;
  for (const auto& e : s.entries) {
    if (std::abs(e.value) <= tol) {
      zero_mult += e.mult;
    } else {
      rest.push_back(e);
    }
  }
  std::vector<char> used(rest.size(), 0);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (used[i]) continue;
    std::size_t best = rest.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (j == i || used[j]) continue;
      const double dist = std::abs(rest[i].value + rest[j].value);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == rest.size() || best_dist > tol || rest[best].mult != rest[i].mult) {
      throw Error(ErrorCode::PairingFailure, "eigenvalue has no negation partner");
    }
    used[i] = used[best] = 1;
    const Complex avg = 0.5 * (rest[i].value - rest[best].value);
    out.entries.push_back({avg, rest[i].mult});
    out.entries.push_back({-avg, rest[i].mult});
  }
  if (zero_mult > 0) out.entries.push_back({Complex{}, zero_mult});
  sort_spectrum(out);
  return out;
}

}  // namespace tridi
