#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "matroidal/matroid.hpp"

namespace matroidal {

// A monomial in n variables as an exponent vector. The zero polynomial is not
// a monomial; the identity 1 is the all-zero vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : e_(n, 0) {}
  static Monomial one(int n) { return Monomial(n); }
  static Monomial from_mask(int n, Mask s);
  static Monomial from_exponents(std::vector<int> e);

  int n() const { return (int)e_.size(); }
  int deg() const;
  int exp(int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }
  Mask support() const;
  bool is_one() const { return deg() == 0; }
  bool is_squarefree() const;

  Monomial times(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  Monomial colon(const Monomial& o) const;  // truncated subtraction
  Monomial power(int k) const;
  Monomial squarefree_part() const { return from_mask(n(), support()); }
  bool divides(const Monomial& o) const;

  // gamma(A): sum of exponents over a vertex set.
  int value_on(Mask a) const;

  auto operator<=>(const Monomial& o) const = default;

 private:
  std::vector<int> e_;
};

// Canonical generator order: total degree, then exponent vector lexicographically
// descending (so x1^2*x2^2 prints before x2^2*x3^2).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }
  // Minimalizes (divisibility) and sorts the generators canonically.
  static MonomialIdeal from_gens(int n, std::vector<Monomial> gens);

  int n() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_squarefree() const;
  Mask msupp() const;  // union of generator supports

  bool contains(const Monomial& m) const;       // divisibility by some generator
  bool contains(const MonomialIdeal& o) const;  // ideal containment
  bool is_minimal_generator(const Monomial& m) const;

  bool operator==(const MonomialIdeal& o) const = default;

 private:
  MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}
  int n_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal ideal_minimalize(int n, std::vector<Monomial> gens);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_colon(const MonomialIdeal& i, const Monomial& m);
MonomialIdeal ideal_colon(const MonomialIdeal& i, const MonomialIdeal& j);
// Generators whose support lies inside a; the restriction i ∩ K[a] extended back.
MonomialIdeal ideal_restrict(const MonomialIdeal& i, Mask a);

// Unique factorization M = M_1 ... M_s into squarefree parts with nested
// supports: part i is the squarefree monomial on {j : exp_j >= i}.
struct StandardForm {
  std::vector<Monomial> parts;
  Monomial product(int n) const;
};
StandardForm standard_form(const Monomial& m);

// Non-increasing partition (c_1 >= ... >= c_s >= 1).
using SymbolicType = std::vector<int>;

MonomialIdeal cover_ideal(const Matroid& m);            // generated by cocircuits
MonomialIdeal stanley_reisner_ideal(const Matroid& m);  // generated by circuits

// Minimal primes of a nonzero squarefree ideal, as vertex sets of minimal
// hitting sets of the generator supports.
std::vector<Mask> min_primes(const MonomialIdeal& i);
int height(const MonomialIdeal& i);

enum class SymPowerMethod { covers, structure };
// ell-th symbolic power of the cover ideal of a loopless matroid.
MonomialIdeal symbolic_power(const Matroid& m, int ell, SymPowerMethod method);

// Squarefree part of an ideal: the ideal generated by its squarefree members.
MonomialIdeal sf_part(const MonomialIdeal& i);
// SF_a(J(m)) as the cover ideal of the truncation of m to rank r-a+1.
MonomialIdeal sf_ell(const Matroid& m, int a);
// SF_a of a general nonzero squarefree ideal via order counts at its minimal
// primes (independent of any matroid structure).
MonomialIdeal sf_level_of_squarefree(const MonomialIdeal& i, int a);

// Partition (c_1,...,c_s) with part i of the standard form a minimal generator
// of SF_{c_i}(J(m)); fails with NotAGenerator unless n ∈ G(J(m)^(sum c_i)).
SymbolicType symbolic_type(const Matroid& m, const Monomial& n);
// Divisor N | mono with symbolic type c and part i dividing part i of mono;
// returns the lexicographically smallest witness by exponent vector.
Monomial divisor_of_type(const Matroid& m, const Monomial& mono, const SymbolicType& c);

namespace detail {
// All pointwise-minimal gamma >= 0 with gamma(F) >= ell for every facet,
// entries zero outside verts. Basic covers never need entries above ell; the
// enumeration asserts that bound instead of assuming it. pruned=false scans
// the full box [0,ell]^verts (independent cross-check path).
std::vector<std::vector<int>> basic_cover_gammas(int n, Mask verts,
                                                 const std::vector<Mask>& facets,
                                                 int ell, bool pruned);
bool gamma_is_cover(const std::vector<int>& gamma, const std::vector<Mask>& facets, int ell);
bool gamma_is_basic(const std::vector<int>& gamma, const std::vector<Mask>& facets, int ell);
}  // namespace detail

}  // namespace matroidal
