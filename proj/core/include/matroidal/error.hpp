#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace matroidal {

// Structured failure reasons. Input-shaped problems (schema, bound, precondition)
// map to CLI exit code 2; identity/verification mismatches map to exit code 1.
enum class Errc {
  exchange_axiom_violation,
  empty_basis_set,
  contract_dependent_set,
  loop_present,
  not_basic_cover,
  not_a_generator,
  not_a_sub_partition,
  not_a_basis,
  is_minimum_generator,
  zero_ideal,
  height_too_small,
  search_bound_exceeded,
  size_bound_exceeded,
  schema_error,
  decomposition_failure,  // an internal identity failed: always a bug, never an input problem
  invalid_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, std::string where = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        where_(std::move(where)) {}

  Errc code() const { return code_; }
  // JSON pointer for schema errors, empty otherwise.
  const std::string& where() const { return where_; }

 private:
  Errc code_;
  std::string where_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, std::string where = {}) {
  throw Error(code, msg, std::move(where));
}

}  // namespace matroidal
