#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "matroidal/corpus.hpp"
#include "matroidal/covers.hpp"
#include "matroidal/error.hpp"
#include "matroidal/formats.hpp"
#include "matroidal/homology.hpp"
#include "matroidal/resolution.hpp"
#include "matroidal/verify.hpp"

namespace {

using namespace matroidal;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matroid load_matroid(const std::string& path) {
  return parse_matroid_expr(read_file(path));
}

void print_sets(const std::string& title, const Matroid& m, const std::vector<Mask>& sets) {
  std::cout << title << ":";
  for (Mask s : sets) std::cout << " " << m.set_to_string(s);
  std::cout << "\n";
}

int cmd_show(const std::string& file, const std::vector<std::string>& what) {
  Matroid m = load_matroid(file);
  auto wants = [&](const char* s) {
    return what.empty() || std::find(what.begin(), what.end(), s) != what.end();
  };
  if (wants("rank")) std::cout << "rank: " << m.rank() << "\n";
  if (wants("bases")) print_sets("bases", m, m.bases());
  if (wants("circuits")) print_sets("circuits", m, m.circuits());
  if (wants("cocircuits")) print_sets("cocircuits", m, m.cocircuits());
  if (wants("hyperplanes")) print_sets("hyperplanes", m, m.hyperplanes());
  return 0;
}

int cmd_ideal(const std::string& file, bool json, bool stanley_reisner) {
  Matroid m = load_matroid(file);
  MonomialIdeal i = stanley_reisner ? stanley_reisner_ideal(m) : cover_ideal(m);
  std::cout << (json ? ideal_to_json(i) : ideal_to_text(i, m.labels()) + "\n");
  return 0;
}

int cmd_symbolic(const std::string& file, int ell, const std::string& method, bool json) {
  Matroid m = load_matroid(file);
  MonomialIdeal result = MonomialIdeal::zero(m.n());
  if (method == "covers" || method == "both")
    result = symbolic_power(m, ell, SymPowerMethod::covers);
  if (method == "structure" || method == "both") {
    MonomialIdeal structure = symbolic_power(m, ell, SymPowerMethod::structure);
    if (method == "both" && !(structure == result)) {
      std::cerr << "symbolic power methods disagree\n";
      return 1;
    }
    result = structure;
  }
  std::cout << (json ? ideal_to_json(result) : ideal_to_text(result, m.labels()) + "\n");
  return 0;
}

int cmd_sf(const std::string& file, int ell, bool json) {
  Matroid m = load_matroid(file);
  MonomialIdeal i = sf_ell(m, ell);
  std::cout << (json ? ideal_to_json(i) : ideal_to_text(i, m.labels()) + "\n");
  return 0;
}

int cmd_focal(const std::string& file, const std::string& gen) {
  Matroid m = load_matroid(file);
  Monomial n = parse_monomial(gen, m.labels());
  int level = detect_cover_level(m, n);
  FocalDecomposition fd = focal_matroid(m, Cover{n.exponents(), level});
  cofocal_matroid(m, fd.cover);
  std::cout << "level: " << level << "\n";
  print_sets("focal bases", m, fd.focal.bases());
  print_sets("zero-part bases", m, fd.zero_part.bases());
  print_sets("positive-part bases", m, fd.positive_part.bases());
  std::cout << "blocks:";
  for (size_t i = 0; i < fd.level_blocks.size(); ++i)
    std::cout << " " << i << ":" << m.set_to_string(fd.level_blocks[i]);
  std::cout << "\n";
  std::cout << "focal cover ideal: "
            << ideal_to_text(cover_ideal(fd.focal), m.labels()) << "\n";
  return 0;
}

TieBreak parse_tie(const std::string& tie, std::uint64_t& seed) {
  if (tie == "lex") return TieBreak::lex;
  if (tie == "input") return TieBreak::input_order;
  if (tie.rfind("seed:", 0) == 0) {
    try {
      seed = std::stoull(tie.substr(5));
    } catch (const std::exception&) {
      fail(Errc::invalid_argument, "bad tie-break seed '" + tie + "'");
    }
    return TieBreak::seeded;
  }
  fail(Errc::invalid_argument, "tie-break must be lex, input, or seed:N");
}

int cmd_order(const std::string& file, const std::string& basis, const std::string& tie) {
  Matroid m = load_matroid(file);
  std::vector<int> verts;
  std::stringstream ss(basis);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto labels = m.labels();
    auto it = std::find(labels.begin(), labels.end(), tok);
    if (it == labels.end())
      fail(Errc::invalid_argument, "unknown vertex '" + tok + "' in --basis");
    verts.push_back((int)(it - labels.begin()));
  }
  std::uint64_t seed = 0;
  TieBreak tb = parse_tie(tie, seed);
  ContractionOrdering ord = contraction_order(m, verts, tb, seed);
  for (size_t p = 0; p < ord.ordered_gens().size(); ++p) {
    const Monomial& g = ord.ordered_gens()[p];
    std::cout << p << ": " << monomial_to_text(g, m.labels())
              << " (index " << ord.index_of(g) << ")\n";
  }
  return 0;
}

int cmd_betti(const std::string& file, const std::string& engine_name, bool json) {
  Matroid m = load_matroid(file);
  ResolutionEngine engine;
  BettiTable table(m.n());
  if (engine_name == "cones") {
    table = engine.betti_of_cover_ideal(m);
  } else if (engine_name == "hochster") {
    table = engine.hochster(cover_ideal(m));
  } else {
    table = engine.betti_of_cover_ideal(m);
    if (!(table == engine.hochster(cover_ideal(m)))) {
      std::cerr << "cone table differs from the homology oracle\n";
      return 1;
    }
  }
  std::cout << (json ? betti_to_json(table) : betti_to_text(table, m.labels()));
  if (!json && engine_name == "both") std::cout << "engines agree\n";
  return 0;
}

int cmd_check_matroidal(const std::string& file) {
  std::string text = read_file(file);
  size_t first = text.find_first_not_of(" \t\r\n");
  MonomialIdeal i = (first != std::string::npos && text[first] == '{')
                        ? ideal_from_json(text)
                        : ideal_from_text(text);
  MatroidalVerdict v = matroidal_check(i);
  if (v.matroidal) {
    std::cout << "C-matroidal\n";
    return 0;
  }
  auto names = default_names(i.n());
  std::cout << "NOT C-matroidal\n";
  std::cout << "witness pair: " << monomial_to_text(v.witness_a, names) << ", "
            << monomial_to_text(v.witness_b, names) << "\n";
  std::cout << "witness prime: {";
  bool sep = false;
  for (int b : bits_of(v.witness_prime)) {
    if (sep) std::cout << ",";
    std::cout << names[b];
    sep = true;
  }
  std::cout << "}\n";
  return 1;
}

int cmd_linear_quotients(const std::string& file) {
  Matroid m = load_matroid(file);
  LinearQuotientsResult r = linear_quotients_search(cover_ideal(m));
  if (!r.found) {
    std::cout << "no linear quotients\n";
    return 1;
  }
  std::cout << "linear quotients order: ";
  for (size_t i = 0; i < r.order.size(); ++i)
    std::cout << (i ? ", " : "") << monomial_to_text(r.order[i], m.labels());
  std::cout << "\n";
  return 0;
}

int cmd_reg(const std::string& file) {
  Matroid m = load_matroid(file);
  ResolutionEngine engine;
  RegularityReport rep = regularity_and_level(m, engine);
  std::cout << "reg: " << rep.reg << "\n";
  std::cout << "top homological degree count: " << rep.top_count << "\n";
  std::cout << "top total degree: " << rep.top_degree << "\n";
  std::cout << "level: " << (rep.level ? "yes" : "no") << "\n";
  return 0;
}

int cmd_verify(const std::string& theorems, const std::string& corpus_file,
               std::uint64_t seed) {
  std::vector<std::string> selected;
  std::stringstream ss(theorems);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) selected.push_back(tok);
  }
  std::vector<CorpusEntry> corpus;
  std::string corpus_id;
  if (corpus_file.empty()) {
    corpus = bundled_corpus();
    auto extra = random_corpus(seed, 20);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
    corpus_id = "bundled";
  } else {
    // Corpus file: one matroid expression per line (JSONL).
    corpus_id = corpus_file;
    std::stringstream lines(read_file(corpus_file));
    std::string line;
    int index = 0;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      corpus.push_back({"entry-" + std::to_string(++index), parse_matroid_expr(line)});
    }
    if (corpus.empty())
      fail(Errc::invalid_argument, "corpus file has no matroid expressions");
  }
  VerificationReport report = run_verification(corpus, selected, seed, corpus_id);
  std::cout << report_to_json(report);
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid cover ideals, focal decompositions, and minimal resolutions"};
  app.require_subcommand(1);
  int rc = 0;

  std::string file, gen, basis;
  std::vector<std::string> what;
  std::string method = "both", engine = "both", tie = "lex";
  std::string theorems = "A,B,C", corpus_file;
  int ell = 1;
  bool json = false;
  std::uint64_t seed = 2026;

  auto* show = app.add_subcommand("show", "print rank, bases, and derived sets");
  show->add_option("matroid", file)->required();
  show->add_option("--what", what)->check(
      CLI::IsMember({"rank", "bases", "circuits", "cocircuits", "hyperplanes"}));
  show->callback([&] { rc = cmd_show(file, what); });

  auto* cover = app.add_subcommand("cover-ideal", "print the cover ideal");
  cover->add_option("matroid", file)->required();
  cover->add_flag("--json", json);
  cover->callback([&] { rc = cmd_ideal(file, json, false); });

  auto* sr = app.add_subcommand("sr-ideal", "print the Stanley-Reisner ideal");
  sr->add_option("matroid", file)->required();
  sr->add_flag("--json", json);
  sr->callback([&] { rc = cmd_ideal(file, json, true); });

  auto* symbolic = app.add_subcommand("symbolic", "print a symbolic power of the cover ideal");
  symbolic->add_option("matroid", file)->required();
  symbolic->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
  symbolic->add_option("--method", method)->check(CLI::IsMember({"covers", "structure", "both"}));
  symbolic->add_flag("--json", json);
  symbolic->callback([&] { rc = cmd_symbolic(file, ell, method, json); });

  auto* sf = app.add_subcommand("sf", "print the squarefree part of a symbolic power");
  sf->add_option("matroid", file)->required();
  sf->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
  sf->add_flag("--json", json);
  sf->callback([&] { rc = cmd_sf(file, ell, json); });

  auto* focal = app.add_subcommand("focal", "print the focal decomposition of a generator");
  focal->add_option("matroid", file)->required();
  focal->add_option("--gen", gen)->required();
  focal->callback([&] { rc = cmd_focal(file, gen); });

  auto* order = app.add_subcommand("order", "print the contraction ordering of the cover ideal");
  order->add_option("matroid", file)->required();
  order->add_option("--basis", basis)->required();
  order->add_option("--tie", tie);
  order->callback([&] { rc = cmd_order(file, basis, tie); });

  auto* betti = app.add_subcommand("betti", "print the multigraded Betti table");
  betti->add_option("matroid", file)->required();
  betti->add_option("--engine", engine)->check(CLI::IsMember({"cones", "hochster", "both"}));
  betti->add_flag("--json", json);
  betti->callback([&] { rc = cmd_betti(file, engine, json); });

  auto* check = app.add_subcommand("check-matroidal", "test the generator-support circuit axioms");
  check->add_option("ideal", file)->required();
  check->callback([&] { rc = cmd_check_matroidal(file); });

  auto* lq = app.add_subcommand("linear-quotients", "search for a linear-quotients order");
  lq->add_option("matroid", file)->required();
  lq->callback([&] { rc = cmd_linear_quotients(file); });

  auto* reg = app.add_subcommand("reg", "print regularity and the level property");
  reg->add_option("matroid", file)->required();
  reg->callback([&] { rc = cmd_reg(file); });

  auto* verify = app.add_subcommand("verify", "run the theorem checks and emit a report");
  verify->add_option("--theorems", theorems);
  verify->add_option("--corpus", corpus_file);
  verify->add_option("--seed", seed);
  verify->callback([&] { rc = cmd_verify(theorems, corpus_file, seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return e.code() == Errc::decomposition_failure ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
