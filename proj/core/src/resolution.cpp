#include "matroidal/resolution.hpp"

#include "matroidal/homology.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

namespace matroidal {

namespace {

// Deterministic Fisher-Yates (std::shuffle is implementation-defined).
template <class T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

bool support_list_less(Mask a, Mask b) {
  auto va = bits_of(a);
  auto vb = bits_of(b);
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

std::string ideal_key(const MonomialIdeal& i) {
  std::ostringstream os;
  os << i.n() << '|';
  for (const auto& g : i.gens()) {
    for (int v = 0; v < i.n(); ++v) os << g.exp(v) << ',';
    os << ';';
  }
  return os.str();
}

std::string ordering_name(const ContractionOrdering& ord) {
  std::ostringstream os;
  os << "basis (";
  const auto& b = ord.ordered_basis();
  for (size_t i = 0; i < b.size(); ++i)
    os << (i ? "," : "") << ord.matroid().label_of(b[i]);
  os << ")";
  return os.str();
}

}  // namespace

ContractionOrdering::ContractionOrdering(const Matroid& m, std::vector<int> basis,
                                         TieBreak tie, std::uint64_t seed)
    : matroid_(m), basis_(std::move(basis)) {
  Mask bmask = 0;
  for (int v : basis_) {
    if (v < 0 || v >= m.n() || has_bit(bmask, v))
      fail(Errc::invalid_argument, "ordering basis must list distinct vertices");
    bmask |= bit(v);
  }
  if (!m.is_basis(bmask))
    fail(Errc::not_a_basis, "ordering needs an ordered basis of the matroid");
  int c = (int)basis_.size();

  MonomialIdeal j = cover_ideal(m);
  Mask prefix = 0;
  filtration_.reserve(c + 1);
  for (int i = 0; i <= c; ++i) {
    MonomialIdeal ji = cover_ideal(m.contract(prefix));
    if (!(ji == ideal_restrict(j, m.ground() & ~prefix)))
      fail(Errc::decomposition_failure,
           "contraction cover ideal differs from the generator restriction");
    filtration_.push_back(std::move(ji));
    if (i < c) prefix |= bit(basis_[i]);
  }

  for (const Monomial& g : j.gens()) {
    Mask s = g.support();
    int idx = -1;
    for (int i = 0; i < c && idx < 0; ++i)
      if (has_bit(s, basis_[i])) idx = i;
    if (idx < 0)
      fail(Errc::decomposition_failure, "a generator avoids the ordering basis");
    index_[g] = idx;
  }

  std::mt19937_64 rng(seed);
  for (int idx = c - 1; idx >= 0; --idx) {
    std::vector<Monomial> block;
    for (const Monomial& g : j.gens())
      if (index_[g] == idx) block.push_back(g);
    switch (tie) {
      case TieBreak::lex:
        std::sort(block.begin(), block.end(), [](const Monomial& a, const Monomial& b) {
          return support_list_less(a.support(), b.support());
        });
        break;
      case TieBreak::input_order:
        break;  // canonical generator order of the cover ideal
      case TieBreak::seeded:
        std::sort(block.begin(), block.end(), [](const Monomial& a, const Monomial& b) {
          return support_list_less(a.support(), b.support());
        });
        seeded_shuffle(block, rng);
        break;
    }
    if (idx == c - 1 && block.size() != 1)
      fail(Errc::decomposition_failure, "the minimum of the order is not unique");
    gens_.insert(gens_.end(), block.begin(), block.end());
  }
  for (int p = 0; p < (int)gens_.size(); ++p) position_[gens_[p]] = p;
}

int ContractionOrdering::index_of(const Monomial& n) const {
  auto it = index_.find(n);
  if (it == index_.end())
    fail(Errc::not_a_generator, "monomial is not a minimal generator of the cover ideal");
  return it->second;
}

int ContractionOrdering::position_of(const Monomial& n) const {
  auto it = position_.find(n);
  if (it == position_.end())
    fail(Errc::not_a_generator, "monomial is not a minimal generator of the cover ideal");
  return it->second;
}

ContractionOrdering contraction_order(const Matroid& m, const std::vector<int>& basis,
                                      TieBreak tie, std::uint64_t seed) {
  return ContractionOrdering(m, basis, tie, seed);
}

ColonResult colon_result(const ContractionOrdering& ord, const Monomial& n) {
  int pos = ord.position_of(n);
  if (pos == 0)
    fail(Errc::is_minimum_generator, "the minimum of the order has no colon ideal");
  const Matroid& m = ord.matroid();

  std::vector<Monomial> prefix(ord.ordered_gens().begin(),
                               ord.ordered_gens().begin() + pos);
  MonomialIdeal cn = ideal_colon(MonomialIdeal::from_gens(m.n(), std::move(prefix)), n);

  int i_n = ord.index_of(n);
  if (!(cn == ideal_colon(ord.filtration()[i_n + 1], n)))
    fail(Errc::decomposition_failure,
         "prefix colon differs from the contraction-filtration colon");

  std::vector<Mask> supports;
  supports.reserve(cn.gens().size());
  for (const auto& g : cn.gens()) supports.push_back(g.support());
  if (!circuit_axioms_hold(supports))
    fail(Errc::decomposition_failure, "colon ideal supports fail the circuit axioms");

  Mask contracted = 0;
  for (int i = 0; i < i_n; ++i) contracted |= bit(ord.ordered_basis()[i]);
  Matroid host = m.contract(contracted);
  Matroid cofocal = [&] {
    try {
      return cofocal_matroid(host, Cover{n.exponents(), 1});
    } catch (const Error& e) {
      if (e.code() == Errc::not_basic_cover)
        fail(Errc::decomposition_failure,
             std::string("generator is not a basic cover after contraction: ") + e.what());
      throw;
    }
  }();
  if (!(cn == cover_ideal(cofocal)))
    fail(Errc::decomposition_failure,
         "colon ideal differs from the cofocal matroid's cover ideal");
  return ColonResult{std::move(cn), std::move(cofocal)};
}

MonomialIdeal colon_ideal_CN(const ContractionOrdering& ord, const Monomial& n) {
  return colon_result(ord, n).ideal;
}

bool circuit_axioms_hold(const std::vector<Mask>& supports) {
  for (Mask c : supports)
    if (c == 0) return false;
  for (size_t i = 0; i < supports.size(); ++i)
    for (size_t j = 0; j < supports.size(); ++j)
      if (i != j && (supports[i] & ~supports[j]) == 0) return false;
  for (size_t i = 0; i < supports.size(); ++i)
    for (size_t j = i + 1; j < supports.size(); ++j)
      for (int v : bits_of(supports[i] & supports[j])) {
        Mask u = (supports[i] | supports[j]) & ~bit(v);
        bool found = false;
        for (Mask c : supports)
          if ((c & ~u) == 0) {
            found = true;
            break;
          }
        if (!found) return false;
      }
  return true;
}

bool colon_exchange_property(const MonomialIdeal& i) {
  if (!i.is_squarefree())
    fail(Errc::invalid_argument, "the colon-exchange test expects a squarefree ideal");
  for (int v : bits_of(i.msupp())) {
    std::vector<Monomial> with, without;
    for (const auto& g : i.gens())
      (g.exp(v) > 0 ? with : without).push_back(g);
    MonomialIdeal off_v = MonomialIdeal::from_gens(i.n(), without);
    for (const auto& n1 : with)
      for (const auto& n2 : with) {
        if (n1 == n2) continue;
        if (!off_v.contains(n1.colon(n2).times(n2))) return false;
      }
  }
  return true;
}

MatroidalVerdict matroidal_check(const MonomialIdeal& j) {
  if (!j.is_squarefree())
    fail(Errc::invalid_argument, "the matroidal check expects a squarefree ideal");
  if (height(j) < 2)
    fail(Errc::height_too_small, "the lcm criterion needs height at least 2");
  auto primes = min_primes(j);

  MatroidalVerdict v;
  v.matroidal = true;
  for (size_t a = 0; a < j.gens().size() && v.matroidal; ++a)
    for (size_t b = a + 1; b < j.gens().size() && v.matroidal; ++b) {
      Mask l = j.gens()[a].support() | j.gens()[b].support();
      for (Mask p : primes)
        if (popcount(l & p) < 2) {
          v.matroidal = false;
          v.witness_a = j.gens()[a];
          v.witness_b = j.gens()[b];
          v.witness_prime = p;
          break;
        }
    }

  std::vector<Mask> supports;
  for (const auto& g : j.gens()) supports.push_back(g.support());
  if (circuit_axioms_hold(supports) != v.matroidal ||
      colon_exchange_property(j) != v.matroidal)
    fail(Errc::decomposition_failure,
         "the lcm, circuit-axiom, and colon-exchange criteria disagree");
  return v;
}

BettiTable ResolutionEngine::mapping_cone_betti(const ContractionOrdering& ord) {
  return mapping_cone_betti(ord, ord.ordered_gens().back());
}

BettiTable ResolutionEngine::mapping_cone_betti(const ContractionOrdering& ord,
                                                const Monomial& upto) {
  int stop = ord.position_of(upto);
  BettiTable t(ord.matroid().n());
  t.add(1, ord.min_gen());
  for (int p = 1; p <= stop; ++p) {
    const Monomial& g = ord.ordered_gens()[p];
    ColonResult cr = colon_result(ord, g);
    const BettiTable& ct = betti_of_cover_ideal(cr.cofocal);
    t.add(1, g);
    for (const auto& [h, row] : ct.rows())
      for (const auto& [mu, cnt] : row) t.add(h + 1, mu.times(g), cnt);
  }
  return t;
}

const BettiTable& ResolutionEngine::betti_of_cover_ideal(const Matroid& m) {
  std::string key = m.canonical_key();
  auto it = cone_memo_.find(key);
  if (it != cone_memo_.end()) return it->second;

  MonomialIdeal j = cover_ideal(m);
  BettiTable t(m.n());
  if (j.gens().size() == 1) {
    t.add(1, j.gens()[0]);
  } else if (!j.is_zero()) {
    ContractionOrdering ord(m, bits_of(m.bases().front()), TieBreak::lex, 0);
    t = mapping_cone_betti(ord);
  }
  return cone_memo_.emplace(std::move(key), std::move(t)).first->second;
}

const BettiTable& ResolutionEngine::hochster(const MonomialIdeal& i) {
  std::string key = ideal_key(i);
  auto it = hochster_memo_.find(key);
  if (it != hochster_memo_.end()) return it->second;
  return hochster_memo_.emplace(std::move(key), hochster_betti(i)).first->second;
}

std::vector<ContractionOrdering> standard_ordering_choices(const Matroid& m,
                                                           std::uint64_t seed) {
  std::vector<ContractionOrdering> out;
  out.emplace_back(m, bits_of(m.bases().front()), TieBreak::lex, 0);

  std::vector<int> descending = bits_of(m.bases().back());
  std::reverse(descending.begin(), descending.end());
  out.emplace_back(m, std::move(descending), TieBreak::input_order, 0);

  std::mt19937_64 rng(seed);
  std::vector<int> shuffled = bits_of(m.bases()[rng() % m.bases().size()]);
  seeded_shuffle(shuffled, rng);
  out.emplace_back(m, std::move(shuffled), TieBreak::seeded, rng());
  return out;
}

CheckReport theorem_A_check(const Matroid& m, ResolutionEngine& engine,
                            std::uint64_t seed) {
  CheckReport r;
  const BettiTable oracle = engine.hochster(cover_ideal(m));
  for (const auto& ord : standard_ordering_choices(m, seed)) {
    BettiTable t = engine.mapping_cone_betti(ord);
    if (!(t == oracle)) {
      r.pass = false;
      r.notes.push_back("cone table along " + ordering_name(ord) +
                        " differs from the homology oracle");
    }
  }
  return r;
}

namespace {

std::vector<Monomial> sorted_copy(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

CheckReport theorem_B_check(const Matroid& m, ResolutionEngine& engine) {
  CheckReport r;
  MonomialIdeal j = cover_ideal(m);
  if (j.is_zero()) return r;
  const BettiTable& cone = engine.betti_of_cover_ideal(m);
  const BettiTable& oracle = engine.hochster(j);
  int ht = height(j);
  if (cone.max_h() != ht || oracle.max_h() != ht) {
    r.pass = false;
    r.notes.push_back("projective dimension differs from the height");
  }
  for (int h = 1; h <= ht; ++h) {
    auto engine_sup = sorted_copy(cone.support(h));
    auto sf_sup = sorted_copy(sf_ell(m, h).gens());
    auto oracle_sup = sorted_copy(oracle.support(h));
    if (engine_sup != sf_sup || engine_sup != oracle_sup) {
      r.pass = false;
      r.notes.push_back("multidegree support mismatch at homological degree " +
                        std::to_string(h));
    }
  }
  return r;
}

RegularityReport regularity_and_level(const Matroid& m, ResolutionEngine& engine) {
  MonomialIdeal j = cover_ideal(m);
  if (j.is_zero())
    fail(Errc::invalid_argument, "regularity of the zero cover ideal is out of scope");
  RegularityReport rep;
  int ht = height(j);
  rep.reg = popcount(j.msupp()) - ht;

  const BettiTable& oracle = engine.hochster(j);
  int mx = 0;
  for (const auto& [h, row] : oracle.rows())
    for (const auto& [mu, cnt] : row) mx = std::max(mx, mu.deg() - h);
  rep.oracle_reg = mx;

  if (oracle.max_h() != ht)
    fail(Errc::decomposition_failure, "projective dimension differs from the height");
  rep.top_count = oracle.total_at(ht);
  rep.level = true;
  bool first = true;
  for (const auto& [mu, cnt] : oracle.rows().at(ht)) {
    if (first) {
      rep.top_degree = mu.deg();
      first = false;
    } else if (mu.deg() != rep.top_degree) {
      rep.level = false;
    }
  }
  if (rep.reg != rep.oracle_reg)
    fail(Errc::decomposition_failure, "regularity formula differs from the oracle");
  if (!rep.level)
    fail(Errc::decomposition_failure, "top homological row spreads over degrees");
  return rep;
}

bool linear_quotients_given(const MonomialIdeal& i, const std::vector<Monomial>& order) {
  auto sorted_given = order;
  std::sort(sorted_given.begin(), sorted_given.end());
  auto sorted_gens = i.gens();
  std::sort(sorted_gens.begin(), sorted_gens.end());
  if (sorted_given != sorted_gens)
    fail(Errc::invalid_argument, "order must be a permutation of the generators");
  for (size_t k = 1; k < order.size(); ++k) {
    MonomialIdeal prefix = MonomialIdeal::from_gens(
        i.n(), std::vector<Monomial>(order.begin(), order.begin() + k));
    MonomialIdeal q = ideal_colon(prefix, order[k]);
    for (const auto& g : q.gens())
      if (g.deg() != 1) return false;
  }
  return true;
}

LinearQuotientsResult linear_quotients_search(const MonomialIdeal& i) {
  size_t k = i.gens().size();
  if (k > 16)
    fail(Errc::search_bound_exceeded, "linear-quotient search is bounded to 16 generators");
  if (k == 0) return LinearQuotientsResult{true, {}};

  std::unordered_set<std::uint32_t> dead;
  std::vector<int> picked;
  picked.reserve(k);

  auto variable_colon = [&](std::uint32_t state, int next) {
    std::vector<Monomial> prefix;
    for (size_t g = 0; g < k; ++g)
      if (state & (1u << g)) prefix.push_back(i.gens()[g]);
    MonomialIdeal p = MonomialIdeal::from_gens(i.n(), std::move(prefix));
    MonomialIdeal q = ideal_colon(p, i.gens()[next]);
    for (const auto& g : q.gens())
      if (g.deg() != 1) return false;
    return true;
  };

  auto dfs = [&](auto&& self, std::uint32_t state) -> bool {
    if (state == (k == 32 ? ~0u : (1u << k) - 1u)) return true;
    if (dead.count(state)) return false;
    for (size_t g = 0; g < k; ++g) {
      if (state & (1u << g)) continue;
      if (state != 0 && !variable_colon(state, (int)g)) continue;
      picked.push_back((int)g);
      if (self(self, state | (1u << g))) return true;
      picked.pop_back();
    }
    dead.insert(state);
    return false;
  };

  LinearQuotientsResult out;
  out.found = dfs(dfs, 0);
  if (out.found)
    for (int g : picked) out.order.push_back(i.gens()[g]);
  return out;
}

}  // namespace matroidal
