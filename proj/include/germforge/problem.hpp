#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "germforge/invariants.hpp"

namespace germforge {

/// Parsed problem file:
///
///   ring x y;
///   ideal I = x^2, y;
///   poly f = y^2 + x^3;
///   unfolding F params s t = y^2 + x^3 + s*y + t*x^2;
///   option seeds = 11,13;
///
/// `#` starts a comment. Names share one namespace and must be unique;
/// parameter names must not clash with ring variables.
struct ProblemFile {
  RingPtr ring;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, Polynomial> polys;
  std::map<std::string, Unfolding> unfoldings;
  std::map<std::string, std::string> options;
  /// declaration order of ideals, polys and unfoldings
  std::vector<std::string> ideal_names, poly_names, unfolding_names;
};

/// SYNTAX_ERROR / UNKNOWN_VARIABLE / UNKNOWN_NAME as ParseError with the
/// line and column of the offending token. Ideals get `order`.
ProblemFile parse_problem(std::string_view text, const MonomialOrder& order = MonomialOrder::local());

}  // namespace germforge
