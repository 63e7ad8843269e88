#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtg/permrep.hpp"
#include "gtg/poly.hpp"
#include "gtg/word.hpp"

namespace gtg {

// Shape of the run-length list forced by the second and third trace
// coefficients:
//   a=b=1: length 2c+2 with c ones;   a=1,b=0: length 2c+2 with c+1 ones;
//   a=0,b=1: length 2c with c-1 ones; a=b=0:   length 2c with c ones.
struct ShapeRule {
  TargetForm form;
  int list_length;
  int ones_count;
};

// nullopt for forms whose shape the run-length encoding cannot carry
// (c = 0 and other degenerate shapes go through the brute-force path).
std::optional<ShapeRule> shape_rule_for(const TargetForm& f);

struct StageStats {
  uint64_t enumerated = 0;
  uint64_t after_crude = 0;
  uint64_t after_permrep = 0;
  uint64_t after_eval = 0;
  uint64_t exact = 0;
};

struct FoundClass {
  CanonicalKey key;
  Word word;        // canonical representative
  PairList pairs;   // run-length encoding (for case 332: of the pushed word)
  IntPoly tau;      // for case 332 normalized to the a >= b twist
  TargetForm form;  // ditto
};

struct SearchResult {
  TargetForm form;
  StageStats stats;
  std::vector<FoundClass> classes;  // ordered by canonical key
};

struct CaseResult {
  Case kase = Case::C232;
  std::vector<SearchResult> per_form;
  std::vector<FoundClass> classes;  // deduplicated across forms, by key
};

struct SearchOptions {
  int jobs = 1;
  std::optional<int> max_c;
  std::string checkpoint_path;  // empty disables checkpointing
  bool resume = false;
  std::function<void(const std::string&)> progress;  // null disables progress
};

uint64_t binomial(int n, int k);
// number of compositions of n into `parts` positive parts with exactly
// `ones` parts equal to 1: C(n-parts-1, parts-ones-1) * C(parts, ones)
uint64_t enumerate_pairlists_count(int n, int parts, int ones);

// Stream every such composition exactly once. The sink returns false to stop.
void enumerate_pairlists(int n, int parts, int ones,
                         const std::function<bool(const std::vector<int>&)>& sink);

// Lexicographically greatest rotation by whole (b,g) pairs. A candidate
// survives the crude duplicate filter iff it equals its own key; every
// equivalence class keeps at least one member.
std::vector<int> crude_key(const std::vector<int>& list);

SearchResult run_case(Case c, const TargetForm& form, const SearchOptions& opts = {});
CaseResult run_all(Case c, const SearchOptions& opts = {});

// Direct enumeration of all words with at most max_k pairs: no partition
// encoding, no filters; exact trace-polynomial match against every target
// form, canonicalized. Validation oracle for the pipeline. max_k <= 14.
std::vector<std::pair<CanonicalKey, IntPoly>> brute_force_oracle(Case c, int max_k);

}  // namespace gtg
