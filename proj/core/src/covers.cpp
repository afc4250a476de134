#include "matroidal/covers.hpp"

#include <algorithm>
#include <string>

namespace matroidal {

namespace {

void check_shape(const Matroid& m, const Cover& c, const char* where) {
  if (c.n() != m.n())
    fail(Errc::invalid_argument, "cover length does not match the ambient universe", where);
  if (c.level < 1) fail(Errc::invalid_argument, "cover level must be at least 1", where);
  for (int v : c.gamma)
    if (v < 0) fail(Errc::invalid_argument, "cover values must be nonnegative", where);
}

std::string cover_text(const Cover& c) {
  std::string s = "(";
  for (int i = 0; i < c.n(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.gamma[i]);
  }
  s += ") at level " + std::to_string(c.level);
  return s;
}

}  // namespace

Mask Cover::support() const {
  Mask s = 0;
  for (int i = 0; i < (int)gamma.size(); ++i)
    if (gamma[i] > 0) s |= bit(i);
  return s;
}

int Cover::value_on(Mask s) const {
  int v = 0;
  for (int i : bits_of(s)) v += gamma[i];
  return v;
}

Cover Cover::from_monomial(const Monomial& m, int level) {
  return Cover{m.exponents(), level};
}

bool Cover::is_squarefree() const {
  return std::all_of(gamma.begin(), gamma.end(), [](int v) { return v <= 1; });
}

bool is_cover(const std::vector<Mask>& facets, const Cover& c) {
  return detail::gamma_is_cover(c.gamma, facets, c.level);
}

bool is_cover(const Matroid& m, const Cover& c) {
  check_shape(m, c, "is_cover");
  return is_cover(m.bases(), c);
}

bool is_basic_cover(const std::vector<Mask>& facets, const Cover& c) {
  return detail::gamma_is_basic(c.gamma, facets, c.level);
}

bool is_basic_cover(const Matroid& m, const Cover& c) {
  check_shape(m, c, "is_basic_cover");
  return is_basic_cover(m.bases(), c);
}

std::vector<Cover> enumerate_basic_covers(const Matroid& m, int ell) {
  if (ell < 1) fail(Errc::invalid_argument, "cover enumeration needs ell >= 1");
  if (!m.loopless())
    fail(Errc::loop_present, "loops admit no cover of positive level through them");
  auto gammas = detail::basic_cover_gammas(m.n(), m.ground(), m.bases(), ell, true);
  std::vector<Cover> out;
  out.reserve(gammas.size());
  for (auto& g : gammas) out.push_back(Cover{std::move(g), ell});
  return out;
}

std::vector<Mask> focal_facets(const std::vector<Mask>& facets, const Cover& c) {
  std::vector<Mask> out;
  for (Mask f : facets)
    if (c.value_on(f) == c.level) out.push_back(f);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FocalDecomposition focal_matroid(const Matroid& m, const Cover& c) {
  check_shape(m, c, "focal_matroid");
  if (!is_basic_cover(m, c))
    fail(Errc::not_basic_cover, "not a basic cover: " + cover_text(c), "focal_matroid");

  std::vector<Mask> focal_bases = focal_facets(m.bases(), c);
  Matroid focal = [&] {
    try {
      return Matroid::from_bases_on_ground(m.n(), m.ground(), focal_bases, m.labels());
    } catch (const Error& e) {
      if (e.code() == Errc::exchange_axiom_violation)
        fail(Errc::decomposition_failure,
             std::string("focal bases fail the exchange axiom: ") + e.what());
      throw;
    }
  }();
  if (focal.rank() != m.rank())
    fail(Errc::decomposition_failure, "focal rank differs from the host rank");

  int top = *std::max_element(c.gamma.begin(), c.gamma.end());
  std::vector<Mask> blocks(top + 1, 0);
  for (int v : bits_of(m.ground())) blocks[c.gamma[v]] |= bit(v);

  std::vector<Matroid> parts;
  parts.reserve(blocks.size());
  for (Mask a : blocks) parts.push_back(focal.restrict_to(a));
  Matroid rebuilt = Matroid::direct_sum_on_ambient(parts);
  if (rebuilt.bases() != focal.bases() || rebuilt.ground() != focal.ground())
    fail(Errc::decomposition_failure, "level blocks do not reconstruct the focal matroid");

  Mask supp = c.support();
  Matroid zero_part = focal.restrict_to(m.ground() & ~supp);
  Matroid positive_part = focal.restrict_to(supp);
  for (Mask f : positive_part.bases())
    if (c.value_on(f) != c.level)
      fail(Errc::decomposition_failure, "positive part carries a basis off the level");
  for (Mask g : zero_part.bases())
    if (c.value_on(g) != 0)
      fail(Errc::decomposition_failure, "zero part carries a supported basis");

  return FocalDecomposition{c, std::move(focal), std::move(zero_part),
                            std::move(positive_part), std::move(blocks)};
}

Matroid cofocal_matroid(const Matroid& m, const Cover& c) {
  FocalDecomposition fd = focal_matroid(m, c);
  Mask supp = c.support();

  // Valid contraction sets: independent H inside the support attaining the
  // level. They must be exactly the bases of the positive part.
  std::vector<Mask> valid;
  for_each_subset(supp, [&](Mask h) {
    if (fd.focal.independent(h) && c.value_on(h) == c.level) valid.push_back(h);
  });
  std::sort(valid.begin(), valid.end());
  if (valid != fd.positive_part.bases())
    fail(Errc::decomposition_failure,
         "level-attaining independent sets differ from the positive part's bases");

  for (Mask h : valid) {
    Matroid contracted = fd.focal.contract(h);
    if (contracted.bases() != fd.zero_part.bases())
      fail(Errc::decomposition_failure,
           "contraction along " + m.set_to_string(h) + " changes the cofocal bases");
  }

  if (c.is_squarefree()) {
    Matroid host_off_support = m.restrict_to(m.ground() & ~supp);
    if (!(host_off_support == fd.zero_part))
      fail(Errc::decomposition_failure,
           "squarefree cover: restriction off the support differs from the host's");
  }

  return fd.zero_part;
}

void check_focal_exchange(const Matroid& m, const Cover& c) {
  check_shape(m, c, "check_focal_exchange");
  if (!is_cover(m, c))
    fail(Errc::invalid_argument, "exchange checks apply to ell-covers only");
  Mask supp = c.support();
  std::vector<Mask> focal = focal_facets(m.bases(), c);
  auto tight = [&](Mask b) { return std::binary_search(focal.begin(), focal.end(), b); };

  for (Mask f : focal) {
    for (Mask g : m.bases()) {
      Mask fmg = f & ~g, gmf = g & ~f;
      bool g_tight = tight(g);

      // Multi-exchange: every A inside F-G against every feasible B.
      for_each_subset(fmg, [&](Mask a) {
        for_each_subset(gmf, [&](Mask b) {
          if (!m.is_basis((f & ~a) | b)) return;
          if (c.value_on(a) > c.value_on(b))
            fail(Errc::decomposition_failure,
                 "cover value drops along the exchange of " + m.set_to_string(a) +
                     " for " + m.set_to_string(b));
          if ((a & ~supp) == 0 && (b & ~supp) != 0)
            fail(Errc::decomposition_failure,
                 "support containment lost along the exchange of " + m.set_to_string(a) +
                     " for " + m.set_to_string(b));
          if (g_tight && m.is_basis((g & ~b) | a)) {
            if (c.value_on(a) != c.value_on(b))
              fail(Errc::decomposition_failure,
                   "symmetric exchange between tight bases changes the cover value");
            if (((a & ~supp) == 0) != ((b & ~supp) == 0))
              fail(Errc::decomposition_failure,
                   "symmetric exchange between tight bases breaks support containment");
          }
        });
      });

      // Bijective exchange: at least one single-step bijection exists, and all
      // of them are value-monotone (value-preserving when G is tight too).
      std::vector<int> from = bits_of(fmg);
      std::vector<int> to = bits_of(gmf);
      if (from.empty()) continue;
      bool found = false;
      std::sort(to.begin(), to.end());
      do {
        bool valid = true;
        for (size_t i = 0; i < from.size() && valid; ++i)
          valid = m.is_basis((f & ~bit(from[i])) | bit(to[i]));
        if (!valid) continue;
        found = true;
        for (size_t i = 0; i < from.size(); ++i) {
          if (c.gamma[from[i]] > c.gamma[to[i]])
            fail(Errc::decomposition_failure,
                 "a bijective exchange lowers the cover value at vertex " +
                     m.label_of(from[i]));
          if (g_tight && c.gamma[from[i]] != c.gamma[to[i]])
            fail(Errc::decomposition_failure,
                 "a bijective exchange between tight bases changes the value at " +
                     m.label_of(from[i]));
        }
      } while (std::next_permutation(to.begin(), to.end()));
      if (!found)
        fail(Errc::decomposition_failure,
             "no bijective exchange between " + m.set_to_string(f) + " and " +
                 m.set_to_string(g));
    }
  }
}

int detect_cover_level(const Matroid& m, const Monomial& n) {
  if (n.n() != m.n())
    fail(Errc::invalid_argument, "monomial does not match the ambient universe",
         "detect_cover_level");
  int ell = n.value_on(m.bases().front());
  for (Mask b : m.bases()) ell = std::min(ell, n.value_on(b));
  if (ell < 1 || !detail::gamma_is_basic(n.exponents(), m.bases(), ell))
    fail(Errc::not_a_generator,
         "monomial is not a minimal generator of any symbolic power of the cover ideal");
  return ell;
}

MonomialIdeal focal_cover_ideal(const Matroid& m, const Monomial& n, int k) {
  if (k < 1) fail(Errc::invalid_argument, "focal cover ideal needs k >= 1");
  int ell = detect_cover_level(m, n);
  Cover c = Cover::from_monomial(n, ell);
  FocalDecomposition fd = focal_matroid(m, c);

  // On a tight basis the generator has order exactly ell, elsewhere at least
  // ell + 1, so the k-th focal symbolic power is the colon of the host power
  // at level k * (ell + 1) by the k-th power of the generator. (Coloning the
  // (ell + k)-th host power by the generator itself overshoots for k >= 2.)
  MonomialIdeal result = symbolic_power(fd.focal, k, SymPowerMethod::covers);
  MonomialIdeal host_power = symbolic_power(m, k * (ell + 1), SymPowerMethod::covers);
  Monomial nk = n.power(k);
  if (!(result == ideal_colon(host_power, nk)))
    fail(Errc::decomposition_failure,
         "focal symbolic power differs from the colon of the host power");

  MonomialIdeal focal_power = symbolic_power(fd.focal, k * (ell + 1), SymPowerMethod::covers);
  for (const Monomial& l : result.gens()) {
    Monomial ln = l.times(nk);
    if (!focal_power.is_minimal_generator(ln) || !host_power.is_minimal_generator(ln))
      fail(Errc::decomposition_failure,
           "a lifted generator is not minimal in both higher symbolic powers");
  }
  return result;
}

std::vector<DecompositionSummand> focal_ideal_decomposition(const Matroid& m,
                                                            const Monomial& n) {
  int ell = detect_cover_level(m, n);
  Cover c = Cover::from_monomial(n, ell);
  FocalDecomposition fd = focal_matroid(m, c);
  MonomialIdeal j = cover_ideal(m);
  SymbolicType type = symbolic_type(m, n);
  StandardForm form = standard_form(n);
  int s = (int)form.parts.size();

  // Tail products: tail[i] = part_i * ... * part_s, tail[s+1] = 1; the zeroth
  // "part" is the squarefree monomial on the whole ground.
  std::vector<Monomial> tail(s + 2, Monomial::one(m.n()));
  for (int i = s; i >= 1; --i) tail[i] = form.parts[i - 1].times(tail[i + 1]);
  tail[0] = Monomial::from_mask(m.n(), m.ground());

  std::vector<DecompositionSummand> out;
  MonomialIdeal sum = MonomialIdeal::zero(m.n());
  for (int i = 1; i <= s + 1; ++i) {
    int ci = i <= s ? type[i - 1] : 0;
    Mask block = tail[i - 1].support() & ~tail[i].support();
    MonomialIdeal restricted = ideal_restrict(j, tail[i - 1].support());
    MonomialIdeal part = restricted.is_zero()
                             ? restricted
                             : sf_level_of_squarefree(restricted, ci + 1);
    MonomialIdeal summand = ideal_colon(part, tail[i]);
    if (!(summand == cover_ideal(fd.focal.restrict_to(block))))
      fail(Errc::decomposition_failure,
           "summand differs from the focal cover ideal on its level block");
    sum = ideal_sum(sum, summand);
    out.push_back(DecompositionSummand{block, std::move(summand)});
  }
  if (!(sum == cover_ideal(fd.focal)))
    fail(Errc::decomposition_failure, "summands do not add up to the focal cover ideal");
  return out;
}

}  // namespace matroidal
