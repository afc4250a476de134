#pragma once

#include <string>
#include <vector>

#include "matroidal/betti.hpp"
#include "matroidal/matroid.hpp"
#include "matroidal/monomial.hpp"

namespace matroidal {

// Ground-set cap from MR_MAX_GROUND_SET (default 12).
int ground_set_cap();

// Evaluates a matroid-expression JSON document. Supported ops: bases, uniform,
// fano, dual, delete, restrict, contract, truncate, direct_sum. Schema errors
// carry the JSON-pointer path of the offending node.
Matroid parse_matroid_expr(const std::string& json_text);

// Serializes a matroid as a `bases` expression; parse_matroid_expr round-trips
// it, including the ground set of a minor and the vertex labels.
std::string matroid_to_json(const Matroid& m);

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names);
std::string monomial_to_text(const Monomial& m, const std::vector<std::string>& names);

// Terse ideal text: comma- or newline-separated monomials, `0` for the zero
// ideal, `1` for the unit ideal. Names default to x1..xn; when `names` is
// empty the variable count is inferred from the largest x-index used.
MonomialIdeal ideal_from_text(const std::string& text,
                              const std::vector<std::string>& names = {});
std::string ideal_to_text(const MonomialIdeal& i,
                          const std::vector<std::string>& names = {});

std::string ideal_to_json(const MonomialIdeal& i);
MonomialIdeal ideal_from_json(const std::string& json_text);

std::string betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const std::string& json_text);

// Aligned text table: one row per (homological degree, multidegree) pair.
std::string betti_to_text(const BettiTable& t, const std::vector<std::string>& names = {});

// Default variable names x1..xn.
std::vector<std::string> default_names(int n);

}  // namespace matroidal
