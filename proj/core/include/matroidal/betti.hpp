#pragma once

#include <map>
#include <vector>

#include "matroidal/monomial.hpp"

namespace matroidal {

// Multigraded Betti numbers of R/I: multiplicity per (homological degree h >= 1,
// multidegree). The h=1 row of a minimal table is exactly G(I).
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<int, std::map<Monomial, long>>& rows() const { return rows_; }

  void add(int h, const Monomial& mu, long count = 1) {
    if (count == 0) return;
    auto& row = rows_[h];
    long& c = row[mu];
    c += count;
    if (c == 0) row.erase(mu);
    if (row.empty()) rows_.erase(h);
  }

  long multiplicity(int h, const Monomial& mu) const {
    auto r = rows_.find(h);
    if (r == rows_.end()) return 0;
    auto e = r->second.find(mu);
    return e == r->second.end() ? 0 : e->second;
  }

  // Projective dimension of R/I (largest h with a nonzero entry; 0 if empty).
  int max_h() const { return rows_.empty() ? 0 : rows_.rbegin()->first; }

  std::vector<Monomial> support(int h) const {
    std::vector<Monomial> out;
    auto r = rows_.find(h);
    if (r == rows_.end()) return out;
    out.reserve(r->second.size());
    for (const auto& [mu, c] : r->second) out.push_back(mu);
    return out;
  }

  long total_at(int h) const {
    long t = 0;
    auto r = rows_.find(h);
    if (r == rows_.end()) return 0;
    for (const auto& [mu, c] : r->second) t += c;
    return t;
  }

  bool operator==(const BettiTable& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  int n_ = 0;
  std::map<int, std::map<Monomial, long>> rows_;
};

}  // namespace matroidal
