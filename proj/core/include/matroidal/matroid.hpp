#pragma once

#include <string>
#include <vector>

#include "matroidal/error.hpp"
#include "matroidal/subsets.hpp"

namespace matroidal {

struct DerivedSets {
  std::vector<Mask> circuits;
  std::vector<Mask> cocircuits;
  std::vector<Mask> hyperplanes;
  Mask loops = 0;
};

// A matroid given by its bases, living inside an ambient variable universe of
// size n. `ground` records which vertices the matroid actually uses: minors
// shrink ground but keep the ambient universe, so ideals attached to a matroid
// and to its minors live in one polynomial ring. A vertex of ground lying in
// no basis is a loop; a vertex outside ground was deleted.
class Matroid {
 public:
  // Bases on the full ground set [n]. Validates the exchange axiom.
  static Matroid from_bases(int n, std::vector<Mask> bases,
                            std::vector<std::string> labels = {});
  // Same, but with an explicit ground inside the ambient universe (used to
  // round-trip minors, whose deleted vertices are not loops).
  static Matroid from_bases_on_ground(int n, Mask ground, std::vector<Mask> bases,
                                      std::vector<std::string> labels = {});
  static Matroid uniform(int r, int n);
  static Matroid fano();
  // Disjoint union on a concatenated universe; label clashes are rejected.
  static Matroid direct_sum(const Matroid& a, const Matroid& b);
  // Direct sum of matroids sharing one ambient universe, with pairwise
  // disjoint grounds: bases are all unions of one basis per part.
  static Matroid direct_sum_on_ambient(const std::vector<Matroid>& parts);

  int n() const { return n_; }
  Mask ground() const { return ground_; }
  const std::vector<Mask>& bases() const { return bases_; }
  const std::vector<std::string>& labels() const { return labels_; }

  int rank() const { return popcount(bases_.front()); }
  int rank(Mask s) const;
  bool independent(Mask s) const;
  bool is_basis(Mask s) const;
  Mask loops() const;
  bool loopless() const { return loops() == 0; }

  Matroid dual() const;  // complements are taken inside ground
  Matroid restrict_to(Mask a) const;
  Matroid deletion(Mask a) const;
  Matroid contract(Mask a) const;  // a must be independent
  Matroid truncate(int i) const;   // bases become the independent sets of size i

  std::vector<Mask> independent_sets() const;
  std::vector<Mask> circuits() const;
  std::vector<Mask> cocircuits() const;
  std::vector<Mask> hyperplanes() const;
  DerivedSets derived_sets() const;

  std::string label_of(int v) const { return labels_[v]; }
  std::string set_to_string(Mask s) const;  // "{a,b,c}" with labels

  // Memoization key: ambient size, ground, bases. Labels are display-only.
  std::string canonical_key() const;

  bool operator==(const Matroid& o) const {
    return n_ == o.n_ && ground_ == o.ground_ && bases_ == o.bases_ &&
           labels_ == o.labels_;
  }

 private:
  Matroid(int n, Mask ground, std::vector<Mask> bases,
          std::vector<std::string> labels, bool validate);
  void validate() const;

  int n_ = 0;
  Mask ground_ = 0;
  std::vector<Mask> bases_;  // sorted, deduplicated
  std::vector<std::string> labels_;
};

}  // namespace matroidal
