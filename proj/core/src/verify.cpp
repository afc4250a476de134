#include "matroidal/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>

#include "matroidal/error.hpp"

namespace matroidal {

using nlohmann::json;

bool VerificationReport::pass() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const TheoremOutcome& o) { return o.pass; });
}

namespace {

void merge(TheoremOutcome& out, const std::string& name, const CheckReport& r) {
  ++out.checked;
  if (!r.pass) {
    out.pass = false;
    for (const auto& n : r.notes) out.notes.push_back(name + ": " + n);
  }
}

TheoremOutcome check_A(const std::vector<CorpusEntry>& corpus, ResolutionEngine& engine,
                       std::uint64_t seed) {
  TheoremOutcome out{"A"};
  for (const auto& e : corpus) {
    if (cover_ideal(e.matroid).is_zero()) continue;
    try {
      merge(out, e.name, theorem_A_check(e.matroid, engine, seed));
    } catch (const Error& err) {
      out.pass = false;
      out.notes.push_back(e.name + ": " + err.what());
    }
  }
  return out;
}

TheoremOutcome check_B(const std::vector<CorpusEntry>& corpus, ResolutionEngine& engine) {
  TheoremOutcome out{"B"};
  for (const auto& e : corpus) {
    try {
      merge(out, e.name, theorem_B_check(e.matroid, engine));
    } catch (const Error& err) {
      out.pass = false;
      out.notes.push_back(e.name + ": " + err.what());
    }
  }
  return out;
}

TheoremOutcome check_C(const std::vector<CorpusEntry>& corpus, std::uint64_t seed) {
  TheoremOutcome out{"C"};
  for (const auto& e : corpus) {
    MonomialIdeal j = cover_ideal(e.matroid);
    if (j.is_zero() || height(j) < 2) continue;
    try {
      ++out.checked;
      if (!matroidal_check(j).matroidal) {
        out.pass = false;
        out.notes.push_back(e.name + ": cover ideal flagged as non-matroidal");
      }
    } catch (const Error& err) {
      out.pass = false;
      out.notes.push_back(e.name + ": " + err.what());
    }
  }
  for (const auto& ideal : random_non_matroidal_ideals(seed, 20)) {
    try {
      ++out.checked;
      MatroidalVerdict v = matroidal_check(ideal);
      if (v.matroidal) {
        out.pass = false;
        out.notes.push_back("negative control accepted as matroidal");
      }
    } catch (const Error& err) {
      out.pass = false;
      out.notes.push_back(std::string("negative control: ") + err.what());
    }
  }
  return out;
}

}  // namespace

VerificationReport run_verification(const std::vector<CorpusEntry>& corpus,
                                    const std::vector<std::string>& theorems,
                                    std::uint64_t seed,
                                    const std::string& corpus_id) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.corpus_id = corpus_id;
  report.seed = seed;
  ResolutionEngine engine;
  for (const auto& t : theorems) {
    if (t == "A")
      report.outcomes.push_back(check_A(corpus, engine, seed));
    else if (t == "B")
      report.outcomes.push_back(check_B(corpus, engine));
    else if (t == "C")
      report.outcomes.push_back(check_C(corpus, seed));
    else
      fail(Errc::invalid_argument, "unknown theorem selector '" + t + "'");
  }
  report.notes.push_back(
      "prefix resolutions are validated against the homology oracle, not transcribed");
  report.elapsed_ms = (long)std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::string report_to_json(const VerificationReport& r) {
  json j;
  j["corpus"] = r.corpus_id;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  j["elapsed_ms"] = r.elapsed_ms;
  j["notes"] = r.notes;
  json outs = json::array();
  for (const auto& o : r.outcomes) {
    json oj;
    oj["theorem"] = o.name;
    oj["pass"] = o.pass;
    oj["checked"] = o.checked;
    oj["notes"] = o.notes;
    outs.push_back(oj);
  }
  j["theorems"] = outs;
  return j.dump(2) + "\n";
}

}  // namespace matroidal
