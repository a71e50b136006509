#pragma once

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cfx/cfe.hpp"
#include "cfx/regex.hpp"

namespace cfx::testing {

/// Words of L(r) up to length n, computed from the syntax alone (no
/// derivatives), as an oracle independent of the library.
std::set<Word> regex_words(const Regex& r, std::size_t n);

/// Every word over sigma of length at most n, shortest first.
std::vector<Word> all_words(const Alphabet& sigma, std::size_t n);

/// Random regex of depth at most `depth` over sigma.
Regex random_regex(std::mt19937& rng, int depth, const Alphabet& sigma);

struct CorpusPair {
  std::string label;
  std::string e;
  std::string r;
};

/// (e, r) pairs used by the containment, upcast and downcast suites. Negative
/// pairs have counterexamples of length at most 5.
const std::vector<CorpusPair>& corpus();

/// Guarded expressions used by the predictive parser suite.
const std::vector<std::string>& guarded_corpus();

/// Every closed expression of the corpus, deduplicated.
std::vector<std::string> corpus_expressions();

}  // namespace cfx::testing
