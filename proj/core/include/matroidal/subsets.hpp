#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace matroidal {

// Vertex subsets of a ground set of size <= 31, one bit per vertex (bit i = vertex i, 0-based).
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1u; }
inline Mask full_mask(int n) { return n == 0 ? 0u : (Mask{1} << n) - 1u; }

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

// Calls f(sub) for every subset of mask, including 0 and mask itself.
template <class F>
void for_each_subset(Mask mask, F&& f) {
  Mask sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

}  // namespace matroidal
