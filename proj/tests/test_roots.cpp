#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "tridi/charpoly.hpp"
#include "tridi/corpus.hpp"
#include "tridi/roots.hpp"

using namespace tridi;
using tridi::testing::has_entry;

namespace {

CharPoly from_roots(const Vector& r) {
  Vector c{1.0};
  for (const Complex root : r) {
    Vector next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= root * c[k];
    }
    c = std::move(next);
  }
  return {c};
}

}  // namespace

TEST_CASE("find_roots simple cases") {
  const Vector lin = find_roots(CharPoly{{-2.0, 1.0}});
  REQUIRE(lin.size() == 1);
  CHECK(std::abs(lin[0] - 2.0) < 1e-15);

  Vector quad = find_roots(CharPoly{{4.0, -5.0, 1.0}});
  REQUIRE(quad.size() == 2);
  std::sort(quad.begin(), quad.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
  CHECK(std::abs(quad[0] - 1.0) < 1e-12);
  CHECK(std::abs(quad[1] - 4.0) < 1e-12);
}

TEST_CASE("find_roots on z^5 stays within the multiple-root bound") {
  const Vector r = find_roots(CharPoly{{0.0, 0.0, 0.0, 0.0, 0.0, 1.0}});
  REQUIRE(r.size() == 5);
  for (const Complex z : r) CHECK(std::abs(z) <= 1e-3);
}

TEST_CASE("find_roots on a perturbed quintuple root") {
  // (z - 1)^5 expanded: roots spread by ~eps^(1/5).
  const CharPoly p = from_roots(Vector(5, 1.0));
  const Vector r = find_roots(p);
  REQUIRE(r.size() == 5);
  for (const Complex z : r) {
    CHECK(std::abs(z - 1.0) <= 1e-2);
    double scale = 0.0;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) scale += std::abs(p.coeffs[k]) * std::pow(std::abs(z), k);
    CHECK(std::abs(p.eval(z)) <= 1e-12 * scale);
  }
}

TEST_CASE("find_roots rejects non-monic input") {
  CHECK_THROWS_AS(find_roots(CharPoly{{1.0, 2.0}}), Error);
  CHECK_THROWS_AS(find_roots(CharPoly{{1.0}}), Error);
}

TEST_CASE("find_roots recovers well-separated random roots") {
  corpus::Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 16);
    Vector roots;
    while (roots.size() < d) {
      const Complex c = corpus::random_disk(rng, 10.0);
      const bool separated =
          std::all_of(roots.begin(), roots.end(), [&](Complex r) { return std::abs(r - c) >= 0.1; });
      if (separated) roots.push_back(c);
    }
    const Vector found = find_roots(from_roots(roots));
    REQUIRE(found.size() == d);
    for (const Complex r : roots) {
      double best = 1e300;
      for (const Complex f : found) best = std::min(best, std::abs(f - r));
      CHECK(best <= 1e-8);
    }
  }
}

TEST_CASE("cluster") {
  const Vector pts{1.0, 1.0 + 1e-12, 4.0};
  const Spectrum s = cluster(pts, 1e-8);
  CHECK(s.entries.size() == 2);
  CHECK(has_entry(s, 1.0, 2));
  CHECK(has_entry(s, 4.0, 1));
  CHECK(s.total() == 3);

  const Spectrum sk = cluster(Vector{-3.0, -1.0, 1.0, 3.0}, 1e-8);
  CHECK(sk.entries.size() == 4);

  const Spectrum five = cluster(find_roots(CharPoly{{0.0, 0.0, 0.0, 0.0, 0.0, 1.0}}), 1e-2);
  REQUIRE(five.entries.size() == 1);
  CHECK(five.entries[0].mult == 5);
  CHECK(std::abs(five.entries[0].value) <= 1e-3);

  // Single linkage chains points that are pairwise farther than the radius.
  const Spectrum chained = cluster(Vector{0.0, 0.6, 1.2}, 0.7);
  CHECK(chained.entries.size() == 1);
}

TEST_CASE("default_cluster_radius") {
  CHECK(default_cluster_radius(Vector{1e-3}) == 1e-8);
  CHECK(default_cluster_radius(Vector{1e3, -2.0}) == doctest::Approx(1e-3));
}

TEST_CASE("symmetrize_pm") {
  Spectrum s{{{1.0000001, 1}, {-0.9999999, 1}}};
  const Spectrum sym = symmetrize_pm(s, 1e-6);
  CHECK(has_entry(sym, 1.0, 1, 1e-15));
  CHECK(has_entry(sym, -1.0, 1, 1e-15));
  for (const auto& e : sym.entries) CHECK(has_entry(sym, -e.value, e.mult, 0.0));

  const Spectrum zero = symmetrize_pm(Spectrum{{{1e-9, 1}}}, 1e-8);
  REQUIRE(zero.entries.size() == 1);
  CHECK(zero.entries[0].value == Complex{});

  try {
    symmetrize_pm(Spectrum{{{2.0, 1}, {3.0, 1}}}, 1e-8);
    FAIL("expected PairingFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PairingFailure);
  }
}

TEST_CASE("merge_coincident sums multiplicities") {
  const Spectrum s = merge_coincident(Spectrum{{{2.0, 1}, {2.0 + 1e-12, 2}, {5.0, 1}}}, 1e-8);
  CHECK(s.total() == 4);
  CHECK(has_entry(s, 2.0, 3, 1e-11));
  CHECK(has_entry(s, 5.0, 1, 0.0));
}
