#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tridi/core.hpp"

namespace tridi::cli {

enum class DiagonalShape { Zero, Alternating, TwoPeriodic, Other };

const char* to_string(DiagonalShape s);

/// T = J + diag(x, y, x, ...) with J zero-diagonal.
struct Decomposition {
  DiagonalShape shape;
  TridiagonalMatrix j;
  PerturbationParams p;
};

DiagonalShape detect_shape(const TridiagonalMatrix& t);
std::optional<Decomposition> decompose(const TridiagonalMatrix& t);

/// Parses "re" or "re,im".
Complex parse_complex(const std::string& text);

/// Exit codes: 0 success, 1 verification or numerical failure, 2 usage/input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tridi::cli
