#pragma once

#include <initializer_list>
#include <optional>
#include <string>

#include "matroidal/error.hpp"
#include "matroidal/formats.hpp"
#include "matroidal/matroid.hpp"
#include "matroidal/monomial.hpp"

namespace testutil {

using namespace matroidal;

inline Mask mk(std::initializer_list<int> verts) {
  Mask m = 0;
  for (int v : verts) m |= bit(v);
  return m;
}

inline Monomial mono(int n, const std::string& text) {
  return parse_monomial(text, default_names(n));
}

inline MonomialIdeal ideal(int n, const std::string& text) {
  return ideal_from_text(text, default_names(n));
}

template <class F>
std::optional<Errc> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testutil
