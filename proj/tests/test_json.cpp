#include <doctest.h>

#include "tridi/charpoly.hpp"
#include "tridi/json_io.hpp"

using namespace tridi;
using io::Json;

TEST_CASE("matrix JSON round trip") {
  const TridiagonalMatrix t({{0.1, -2.5}, {1.0 / 3.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}, {-7.25, 1e-300}},
                            {{2.0, 2.0}, {3.0, -1.0 / 7.0}});
  const std::string text = io::dump(io::to_json(t));
  CHECK(io::matrix_from_json(Json::parse(text)) == t);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("complex scalars") {
  CHECK(io::complex_from_json(Json::parse("[1.5, -2]")) == Complex{1.5, -2.0});
  CHECK(io::complex_from_json(Json::parse("4")) == Complex{4.0});
  CHECK_THROWS_AS(io::complex_from_json(Json::parse("[1, 2, 3]")), Error);
  CHECK_THROWS_AS(io::complex_from_json(Json::parse("\"x\"")), Error);
}

TEST_CASE("polynomial and spectrum schemas") {
  CHECK(io::dump(io::to_json(CharPoly{{-1.0, 0.0, 1.0}})) == "{\"coeffs\":[[-1,0],[0,0],[1,0]]}");
  CHECK(io::dump(io::to_json(Spectrum{{{Complex{0.5, 0.0}, 2}}})) == "{\"entries\":[{\"value\":[0.5,0],\"mult\":2}]}");
  const oracle::ResidualReport r;
  CHECK(io::dump(io::to_json(r)) ==
        "{\"max_eigen_residual\":0,\"max_chain_residual\":0,\"spectrum_match_distance\":0,"
        "\"square_identity_deviation\":0,\"passed\":true}");
}

TEST_CASE("malformed matrices are rejected") {
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse("[]")), Error);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse("{\"sub\":[],\"diag\":[[0,0]]}")), Error);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse("{\"n\":2,\"sub\":[],\"diag\":[[0,0]],\"sup\":[]}")), Error);
}
