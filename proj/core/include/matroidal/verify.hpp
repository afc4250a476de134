#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matroidal/corpus.hpp"
#include "matroidal/resolution.hpp"

namespace matroidal {

struct TheoremOutcome {
  std::string name;
  bool pass = true;
  int checked = 0;
  std::vector<std::string> notes;
};

struct VerificationReport {
  std::string corpus_id;
  std::uint64_t seed = 0;
  std::vector<TheoremOutcome> outcomes;
  std::vector<std::string> notes;
  long elapsed_ms = 0;
  bool pass() const;
};

// Runs the requested checks ("A": cone tables match the homology oracle under
// several orderings; "B": multidegree supports match the squarefree symbolic
// parts; "C": the generator-support criterion agrees with its seeded negative
// controls) over the given matroids.
VerificationReport run_verification(const std::vector<CorpusEntry>& corpus,
                                    const std::vector<std::string>& theorems,
                                    std::uint64_t seed,
                                    const std::string& corpus_id);

std::string report_to_json(const VerificationReport& r);

}  // namespace matroidal
