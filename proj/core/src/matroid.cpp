#include "matroidal/matroid.hpp"

#include <algorithm>
#include <sstream>

namespace matroidal {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::exchange_axiom_violation: return "ExchangeAxiomViolation";
    case Errc::empty_basis_set: return "EmptyBasisSet";
    case Errc::contract_dependent_set: return "ContractDependentSet";
    case Errc::loop_present: return "LoopPresent";
    case Errc::not_basic_cover: return "NotBasicCover";
    case Errc::not_a_generator: return "NotAGenerator";
    case Errc::not_a_sub_partition: return "NotASubPartition";
    case Errc::not_a_basis: return "NotABasis";
    case Errc::is_minimum_generator: return "IsMinimumGenerator";
    case Errc::zero_ideal: return "ZeroIdeal";
    case Errc::height_too_small: return "HeightTooSmall";
    case Errc::search_bound_exceeded: return "SearchBoundExceeded";
    case Errc::size_bound_exceeded: return "SizeBoundExceeded";
    case Errc::schema_error: return "SchemaError";
    case Errc::decomposition_failure: return "DecompositionFailure";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

void sort_dedup(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Matroid::Matroid(int n, Mask ground, std::vector<Mask> bases,
                 std::vector<std::string> labels, bool check)
    : n_(n), ground_(ground), bases_(std::move(bases)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_ = default_labels(n);
  sort_dedup(bases_);
  if (check) validate();
}

void Matroid::validate() const {
  if (n_ < 0 || n_ > 31) fail(Errc::invalid_argument, "ground set size out of range");
  if ((int)labels_.size() != n_)
    fail(Errc::invalid_argument, "label count does not match ground set size");
  if (bases_.empty()) fail(Errc::empty_basis_set, "a matroid needs at least one basis");
  int r = popcount(bases_.front());
  for (Mask b : bases_) {
    if ((b & ~ground_) != 0)
      fail(Errc::invalid_argument, "basis " + set_to_string(b) + " leaves the ground set");
    if (popcount(b) != r)
      fail(Errc::exchange_axiom_violation,
           "bases of unequal size: " + set_to_string(bases_.front()) + " and " +
               set_to_string(b));
  }
  // Exchange: for B1, B2 and x in B1-B2 there is y in B2-B1 with B1-x+y a basis.
  for (Mask b1 : bases_) {
    for (Mask b2 : bases_) {
      if (b1 == b2) continue;
      for (int x : bits_of(b1 & ~b2)) {
        bool ok = false;
        for (int y : bits_of(b2 & ~b1)) {
          if (is_basis((b1 & ~bit(x)) | bit(y))) {
            ok = true;
            break;
          }
        }
        if (!ok)
          fail(Errc::exchange_axiom_violation,
               "no exchange for x=" + label_of(x) + " in B1=" + set_to_string(b1) +
                   ", B2=" + set_to_string(b2));
      }
    }
  }
}

Matroid Matroid::from_bases(int n, std::vector<Mask> bases, std::vector<std::string> labels) {
  return Matroid(n, full_mask(n), std::move(bases), std::move(labels), true);
}

Matroid Matroid::from_bases_on_ground(int n, Mask ground, std::vector<Mask> bases,
                                      std::vector<std::string> labels) {
  if ((ground & ~full_mask(n)) != 0)
    fail(Errc::invalid_argument, "ground mask leaves the ambient universe");
  return Matroid(n, ground, std::move(bases), std::move(labels), true);
}

Matroid Matroid::uniform(int r, int n) {
  if (r < 0 || r > n) fail(Errc::invalid_argument, "uniform matroid needs 0 <= r <= n");
  std::vector<Mask> bases;
  for (Mask s = 0; s <= full_mask(n) && n > 0; ++s)
    if (popcount(s) == r) bases.push_back(s);
  if (n == 0) bases.push_back(0);
  return Matroid(n, full_mask(n), std::move(bases), {}, true);
}

Matroid Matroid::fano() {
  // Points 1..7; the seven lines of PG(2,2).
  static const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                  {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  std::vector<Mask> line_masks;
  for (auto& l : lines) line_masks.push_back(bit(l[0] - 1) | bit(l[1] - 1) | bit(l[2] - 1));
  std::vector<Mask> bases;
  for (Mask s = 0; s <= full_mask(7); ++s) {
    if (popcount(s) != 3) continue;
    if (std::find(line_masks.begin(), line_masks.end(), s) == line_masks.end())
      bases.push_back(s);
  }
  return Matroid(7, full_mask(7), std::move(bases), {}, true);
}

Matroid Matroid::direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<std::string> labels = a.labels_;
  labels.insert(labels.end(), b.labels_.begin(), b.labels_.end());
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::invalid_argument, "direct sum with clashing labels");
  }
  int n = a.n_ + b.n_;
  if (n > 31) fail(Errc::invalid_argument, "direct sum exceeds the ground set bound");
  std::vector<Mask> bases;
  for (Mask ba : a.bases_)
    for (Mask bb : b.bases_) bases.push_back(ba | (bb << a.n_));
  Mask ground = a.ground_ | (b.ground_ << a.n_);
  return Matroid(n, ground, std::move(bases), std::move(labels), true);
}

Matroid Matroid::direct_sum_on_ambient(const std::vector<Matroid>& parts) {
  if (parts.empty()) fail(Errc::invalid_argument, "empty direct sum");
  Mask ground = 0;
  for (const auto& p : parts) {
    if (p.n_ != parts.front().n_)
      fail(Errc::invalid_argument, "direct sum parts on different universes");
    if (ground & p.ground_)
      fail(Errc::invalid_argument, "direct sum parts with overlapping grounds");
    ground |= p.ground_;
  }
  std::vector<Mask> bases = {0};
  for (const auto& p : parts) {
    std::vector<Mask> next;
    next.reserve(bases.size() * p.bases_.size());
    for (Mask acc : bases)
      for (Mask b : p.bases_) next.push_back(acc | b);
    bases = std::move(next);
  }
  return Matroid(parts.front().n_, ground, std::move(bases), parts.front().labels_, true);
}

int Matroid::rank(Mask s) const {
  int best = 0;
  for (Mask b : bases_) best = std::max(best, popcount(b & s));
  return best;
}

bool Matroid::independent(Mask s) const {
  for (Mask b : bases_)
    if ((s & ~b) == 0) return true;
  return false;
}

bool Matroid::is_basis(Mask s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

Mask Matroid::loops() const {
  Mask covered = 0;
  for (Mask b : bases_) covered |= b;
  return ground_ & ~covered;
}

Matroid Matroid::dual() const {
  std::vector<Mask> bases;
  bases.reserve(bases_.size());
  for (Mask b : bases_) bases.push_back(ground_ & ~b);
  return Matroid(n_, ground_, std::move(bases), labels_, true);
}

Matroid Matroid::restrict_to(Mask a) const {
  a &= ground_;
  int best = 0;
  for (Mask b : bases_) best = std::max(best, popcount(b & a));
  std::vector<Mask> bases;
  for (Mask b : bases_)
    if (popcount(b & a) == best) bases.push_back(b & a);
  return Matroid(n_, a, std::move(bases), labels_, true);
}

Matroid Matroid::deletion(Mask a) const { return restrict_to(ground_ & ~a); }

Matroid Matroid::contract(Mask a) const {
  a &= ground_;
  if (!independent(a))
    fail(Errc::contract_dependent_set, "contraction along dependent set " + set_to_string(a));
  std::vector<Mask> bases;
  for (Mask b : bases_)
    if ((a & ~b) == 0) bases.push_back(b & ~a);
  return Matroid(n_, ground_ & ~a, std::move(bases), labels_, true);
}

Matroid Matroid::truncate(int i) const {
  if (i < 0 || i > rank())
    fail(Errc::invalid_argument, "truncation rank out of range");
  std::vector<Mask> bases;
  for_each_subset(ground_, [&](Mask s) {
    if (popcount(s) == i && independent(s)) bases.push_back(s);
  });
  return Matroid(n_, ground_, std::move(bases), labels_, true);
}

std::vector<Mask> Matroid::independent_sets() const {
  std::vector<Mask> out;
  for_each_subset(ground_, [&](Mask s) {
    if (independent(s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b);
  });
  return out;
}

std::vector<Mask> Matroid::circuits() const {
  // Minimal dependent subsets of ground.
  std::vector<Mask> all;
  for_each_subset(ground_, [&](Mask s) { all.push_back(s); });
  std::sort(all.begin(), all.end(),
            [](Mask a, Mask b) { return popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b); });
  std::vector<Mask> out;
  for (Mask s : all) {
    if (independent(s)) continue;
    bool minimal = true;
    for (Mask c : out)
      if ((c & ~s) == 0) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> Matroid::cocircuits() const { return dual().circuits(); }

std::vector<Mask> Matroid::hyperplanes() const {
  std::vector<Mask> out;
  for (Mask c : cocircuits()) out.push_back(ground_ & ~c);
  std::sort(out.begin(), out.end());
  return out;
}

DerivedSets Matroid::derived_sets() const {
  DerivedSets d;
  d.circuits = circuits();
  d.cocircuits = cocircuits();
  d.hyperplanes.reserve(d.cocircuits.size());
  for (Mask c : d.cocircuits) d.hyperplanes.push_back(ground_ & ~c);
  std::sort(d.hyperplanes.begin(), d.hyperplanes.end());
  d.loops = loops();
  return d;
}

std::string Matroid::set_to_string(Mask s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : bits_of(s)) {
    if (!first) os << ',';
    first = false;
    os << labels_[v];
  }
  os << '}';
  return os.str();
}

std::string Matroid::canonical_key() const {
  std::ostringstream os;
  os << n_ << '|' << ground_ << '|';
  for (Mask b : bases_) os << b << ',';
  return os.str();
}

}  // namespace matroidal
