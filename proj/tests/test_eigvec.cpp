#include <doctest.h>

#include "families.hpp"
#include "helpers.hpp"
#include "tridi/corpus.hpp"
#include "tridi/eigvec.hpp"
#include "tridi/oracle.hpp"
#include "tridi/spectra.hpp"

using namespace tridi;
using tridi::testing::max_abs_diff;
using tridi::testing::ones_j;

namespace {

constexpr double kTol = 1e-8;
const Complex I{0.0, 1.0};

double worst(const TridiagonalMatrix& t, const JordanChain& c, bool transpose = false) {
  const auto r = oracle::chain_residual(materialize_dense(t), c, transpose);
  return std::max(r.eigen, r.chain);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("eigenvector_j on small matrices") {
  CHECK(eigenvector_j(ones_j(2), 1.0) == Vector{1.0, 1.0});
  CHECK(eigenvector_j(ones_j(2), -1.0) == Vector{1.0, -1.0});
  CHECK(code_of([] { eigenvector_j(ones_j(2), 0.5); }) == ErrorCode::NotAnEigenvalue);
}

TEST_CASE("eigenvector_j on the nilpotent example") {
  // Null vector of the 5x5 example: (1, 0, -1, 0, 1/2).
  const Vector u = eigenvector_j(nilpotent_example(), 0.0);
  CHECK(u == Vector{1.0, 0.0, -1.0, 0.0, 0.5});
}

TEST_CASE("jordan_chain_j") {
  const JordanChain simple = jordan_chain_j(ones_j(2), 1.0, 1);
  CHECK(simple.length() == 1);
  CHECK(code_of([] { jordan_chain_j(ones_j(2), 1.0, 2); }) == ErrorCode::ChainBreak);

  const TridiagonalMatrix j5 = nilpotent_example();
  const JordanChain full = jordan_chain_j(j5, 0.0, 5);
  REQUIRE(full.length() == 5);
  CHECK(worst(j5, full) <= 1e-15);
  Vector w = full.vectors[4];
  for (int k = 0; k < 5; ++k) w = j5.apply(w);
  CHECK(norm2(w) == 0.0);
  // One more step would need J^5 v_5 = 0 with J^4 v_5 != 0.
  CHECK(code_of([&] { jordan_chain_j(j5, 0.0, 6); }) == ErrorCode::ChainBreak);
}

TEST_CASE("zero-eigenvalue chain has alternating support") {
  const TridiagonalMatrix j5 = nilpotent_example();
  for (const auto& c : {jordan_chain_j(j5, 0.0, 5), reflect_chain(jordan_chain_j(j5, 0.0, 5))}) {
    for (std::size_t k = 0; k < c.length(); ++k) {
      for (std::size_t i = 0; i < 5; ++i) {
        // v_{2j} vanishes at odd 0-based positions, v_{2j+1} at even ones.
        if ((i + k) % 2 == 1) CHECK(std::abs(c.vectors[k][i]) <= 1e-12);
      }
    }
  }
  const JordanChain r = reflect_chain(jordan_chain_j(j5, 0.0, 5));
  CHECK(r.vectors == jordan_chain_j(j5, 0.0, 5).vectors);
}

TEST_CASE("reflect_chain") {
  const JordanChain c = jordan_chain_j(ones_j(2), 1.0, 1);
  const JordanChain r = reflect_chain(c);
  CHECK(r.eigenvalue == Complex{-1.0});
  CHECK(r.vectors[0] == Vector{1.0, -1.0});

  corpus::Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const TridiagonalMatrix j = testing::double_pair(corpus::random_annulus(rng, 0.5, 1.5),
                                                      corpus::random_annulus(rng, 0.5, 1.5), rng);
    const PairedSpectrum ps = zero_diagonal_spectrum(j);
    const JordanChain chain = jordan_chain_j(j, ps.pairs[0].lambda, 2);
    const JordanChain back = reflect_chain(reflect_chain(chain));
    CHECK(back.eigenvalue == chain.eigenvalue);
    CHECK(back.vectors == chain.vectors);
    CHECK(worst(j, reflect_chain(chain)) <= kTol);
  }
}

TEST_CASE("eigenvector_a_generic") {
  const Vector up{1.0, 1.0}, um{1.0, -1.0};
  const Eigenpair e = eigenvector_a_generic(up, um, 1.0, 0.75, +1);
  CHECK(std::abs(e.mu - 1.25) <= 1e-15);
  CHECK(max_abs_diff(e.v, Vector{4.0 / 3.0, 2.0 / 3.0}) <= 1e-15);
  const TridiagonalMatrix a = make_alternating(ones_j(2), 0.75);
  const Vector av = a.apply(e.v);
  CHECK(max_abs_diff(av, scaled(1.25, e.v)) <= 1e-15);

  const Eigenpair minus = eigenvector_a_generic(up, um, 1.0, 0.75, -1);
  CHECK(std::abs(minus.mu + 1.25) <= 1e-15);
  CHECK(max_abs_diff(a.apply(minus.v), scaled(-1.25, minus.v)) <= 1e-15);

  CHECK(eigenvector_a_generic(up, um, 1.0, 0.0, +1).v == up);
  CHECK(eigenvector_a_generic(up, um, 1.0, 0.0, -1).v == um);
  CHECK(code_of([&] { eigenvector_a_generic(up, um, 1.0, I, +1); }) == ErrorCode::DegenerateMu);
}

TEST_CASE("eigenvector_a_zero_mu") {
  const JordanChain c = eigenvector_a_zero_mu(Vector{1.0, 1.0}, Vector{1.0, -1.0}, 1.0, +1);
  REQUIRE(c.length() == 2);
  CHECK(c.eigenvalue == Complex{});
  const TridiagonalMatrix a = make_alternating(ones_j(2), I);
  CHECK(norm2(a.apply(c.vectors[0])) <= 1e-15);
  CHECK(max_abs_diff(a.apply(c.vectors[1]), c.vectors[0]) <= 1e-15);
  // Unnormalized forms (1+i, 1-i) and ((1-i)/2, (1+i)/2) scaled by 1/(1+i).
  const Complex s = 1.0 / Complex{1.0, 1.0};
  CHECK(max_abs_diff(c.vectors[0], scaled(s, Vector{{1.0, 1.0}, {1.0, -1.0}})) <= 1e-15);
  CHECK(max_abs_diff(c.vectors[1], scaled(s, Vector{{0.5, -0.5}, {0.5, 0.5}})) <= 1e-15);

  const JordanChain neg = eigenvector_a_zero_mu(Vector{1.0, 1.0}, Vector{1.0, -1.0}, 1.0, -1);
  const TridiagonalMatrix an = make_alternating(ones_j(2), -I);
  CHECK(worst(an, neg) <= 1e-15);
}

TEST_CASE("gen_eigenvector_a_generic on double pairs") {
  corpus::Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const TridiagonalMatrix j = testing::double_pair(corpus::random_annulus(rng, 0.5, 1.5),
                                                      corpus::random_annulus(rng, 0.5, 1.5), rng);
    const Complex lambda = zero_diagonal_spectrum(j).pairs[0].lambda;
    const JordanChain plus = jordan_chain_j(j, lambda, 2);
    const JordanChain minus = reflect_chain(plus);
    for (const Complex x : {Complex{}, corpus::random_disk(rng, 2.0)}) {
      const TridiagonalMatrix a = make_alternating(j, x);
      for (const int sign : {+1, -1}) {
        const Eigenpair v0 = eigenvector_a_generic(plus.vectors[0], minus.vectors[0], lambda, x, sign);
        const Vector v1 = gen_eigenvector_a_generic(plus, minus, lambda, x, sign);
        CHECK(worst(a, JordanChain{v0.mu, {v0.v, v1}}) <= kTol);
      }
    }
  }
  const JordanChain short_chain = jordan_chain_j(ones_j(2), 1.0, 1);
  CHECK(code_of([&] { gen_eigenvector_a_generic(short_chain, reflect_chain(short_chain), 1.0, 0.5, 1); }) ==
        ErrorCode::InsufficientChain);
}

TEST_CASE("generalized_coefficients at x = 0") {
  const Complex lambda{1.3, -0.4};
  const CombinationCoefficients c = generalized_coefficients(lambda, 0.0, +1);
  CHECK(c.alpha == Complex{1.0});
  CHECK(c.beta == Complex{});
  CHECK(std::abs(c.gamma - 1.0 / (2.0 * lambda)) <= 1e-15);
  CHECK(c.delta == Complex{});
}

TEST_CASE("chains at +-x for odd order") {
  const TridiagonalMatrix j3 = ones_j(3);
  const Complex x{0.6, -0.3};
  const TridiagonalMatrix a3 = make_alternating(j3, x);
  const JordanChain c1 = jordan_chain_j(j3, 0.0, 1);
  const PmXChains simple = eigenvector_a_pm_x(c1, x);
  CHECK(simple.plus_x.length() == 1);
  CHECK_FALSE(simple.minus_x.has_value());
  CHECK(simple.plus_x.eigenvalue == x);
  CHECK(worst(a3, simple.plus_x) <= 1e-15);
  CHECK(code_of([&] { chain_a_minus_x(c1, x, 1); }) == ErrorCode::InsufficientChain);
  CHECK(code_of([&] { chain_a_plus_x(c1, x, 2); }) == ErrorCode::InsufficientChain);

  const TridiagonalMatrix j5 = nilpotent_example();
  const TridiagonalMatrix a5 = make_alternating(j5, x);
  const JordanChain c4 = jordan_chain_j(j5, 0.0, 4);
  const PmXChains both = eigenvector_a_pm_x(c4, x);
  CHECK(both.plus_x.length() == 2);
  REQUIRE(both.minus_x.has_value());
  CHECK(both.minus_x->length() == 2);
  CHECK(both.minus_x->eigenvalue == -x);
  CHECK(worst(a5, both.plus_x) <= kTol);
  CHECK(worst(a5, *both.minus_x) <= kTol);
}

TEST_CASE("chains_b_from_a") {
  const TridiagonalMatrix j = ones_j(2);
  const PerturbationParams p{1.0, 2.0};
  const PairedSpectrum ps = zero_diagonal_spectrum(j);
  const auto a_chains = alternating_chains(j, ps, p.half_difference());
  const auto b_chains = chains_b_from_a(a_chains, p);
  REQUIRE(b_chains.size() == a_chains.size());
  const TridiagonalMatrix b = make_two_periodic(j, p);
  for (std::size_t k = 0; k < b_chains.size(); ++k) {
    CHECK(b_chains[k].vectors == a_chains[k].vectors);
    CHECK(b_chains[k].eigenvalue == a_chains[k].eigenvalue + 1.5);
    CHECK(worst(b, b_chains[k]) <= 1e-15);
  }
  const bool has_top = std::any_of(b_chains.begin(), b_chains.end(), [](const JordanChain& c) {
    return std::abs(c.eigenvalue - (3.0 + std::sqrt(5.0)) / 2.0) <= 1e-15;
  });
  CHECK(has_top);

  // x = y: chains of J shifted by x.
  const auto same = two_periodic_chains(j, ps, {0.5, 0.5});
  for (const auto& c : same) CHECK(worst(make_two_periodic(j, {0.5, 0.5}), c) <= 1e-15);
}

TEST_CASE("left_scaling and left_chain") {
  const TridiagonalMatrix t = make_zero_diag({2.0, 3.0}, {1.0, 1.0});
  CHECK(left_scaling(t).d == Vector{1.0, 2.0, 6.0});
  CHECK(left_scaling(ones_j(4)).d == Vector(4, 1.0));

  const JordanChain right = jordan_chain_j(ones_j(3), std::sqrt(2.0), 1);
  CHECK(left_chain(ones_j(3), right).vectors == right.vectors);

  corpus::Rng rng(57);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 10);
    const TridiagonalMatrix j = corpus::random_zero_diag(n, rng);
    const PerturbationParams p{corpus::random_disk(rng, 2.0), corpus::random_disk(rng, 2.0)};
    const TridiagonalMatrix b = make_two_periodic(j, p);
    for (const auto& c : two_periodic_chains(j, zero_diagonal_spectrum(j), p)) {
      CHECK(worst(b, left_chain(b, c), true) <= kTol);
    }
  }
}

TEST_CASE("alternating_chains cover every distinct eigenvalue") {
  corpus::Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 11);
    const TridiagonalMatrix j = corpus::random_zero_diag(n, rng);
    const Complex x = corpus::random_disk(rng, 2.0);
    const PairedSpectrum ps = zero_diagonal_spectrum(j);
    const Spectrum s = map_to_alternating(ps, x);
    const auto chains = alternating_chains(j, ps, x);
    CHECK(chains.size() == s.entries.size());
    const TridiagonalMatrix a = make_alternating(j, x);
    for (const auto& c : chains) {
      CHECK(worst(a, c) <= kTol);
      // First significant component normalized to exactly 1.
      const auto first = std::find_if(c.vectors[0].begin(), c.vectors[0].end(), [](Complex z) { return z != Complex{}; });
      CHECK(*first == Complex{1.0});
    }
  }
}

TEST_CASE("degenerate construction at x = i lambda") {
  corpus::Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 8);
    const TridiagonalMatrix j = corpus::random_zero_diag(n, rng);
    const PairedSpectrum ps = zero_diagonal_spectrum(j);
    const Complex x = (trial % 2 == 0 ? I : -I) * ps.pairs[0].lambda;
    const TridiagonalMatrix a = make_alternating(j, x);
    const auto chains = alternating_chains(j, ps, x);
    const auto zero = std::find_if(chains.begin(), chains.end(), [](const JordanChain& c) { return c.eigenvalue == Complex{}; });
    REQUIRE(zero != chains.end());
    CHECK(zero->length() == 2);
    for (const auto& c : chains) CHECK(worst(a, c) <= kTol);
  }
}
