#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtg/poly.hpp"
#include "gtg/search.hpp"
#include "gtg/word.hpp"

namespace gtg {

// Group-theoretic status of a catalogued word. Finite orders, largeness and
// the abelian-by-finite case are cited facts, never recomputed here;
// FreeViaSC is certified by the small-cancellation machinery; FreeCited marks
// free subgroups known from prior literature without a certificate.
enum class GroupStatus { Finite, Large, AbelianByFinite, FreeViaSC, FreeCited, Open };

const char* status_name(GroupStatus s);

struct CatalogEntry {
  std::string id;
  Case kase;
  std::string word_text;             // corrected text where the source had typos
  std::string printed_as;            // original text when it differs
  TargetForm tau;
  GroupStatus status = GroupStatus::Open;
  long long finite_order = 0;        // meaningful when status == Finite
  std::string source;                // citation; statuses are not recomputed
  int part = 0;                      // table part for the (2,3) case; 0 otherwise
  bool scc = false;                  // small-cancellation column for the (3,3) case
  std::vector<int> bracket_lengths;  // subdivision segment lengths, if any
  int bracket_start = 0;             // syllable offset of the first cut

  Word word() const;
  // cut positions (s, s+l1, s+l1+l2) of the recorded subdivision
  std::optional<std::array<int, 3>> bracket_cuts() const;
};

// 19 entries for case 332, 26 for case 232.
const std::vector<CatalogEntry>& catalog_entries(Case c);

const CatalogEntry* find_by_id(Case c, const std::string& id);

// Lookup by equivalence class; nullptr when the word is not catalogued.
const CatalogEntry* catalog_lookup(const Word& w);

// Published per-form class lists for the (2,3) search, keyed by (a,b,c) with
// c >= 1. Empty optional when the form has no published list (c = 0 forms).
std::optional<std::vector<std::vector<int>>> appendix_lists(const TargetForm& f);

struct Classification {
  enum class Kind { FreeByTrace, Cataloged, Anomaly };
  Kind kind;
  const CatalogEntry* entry = nullptr;  // when Cataloged
  IntPoly tau;
  std::optional<TargetForm> form;
};

// Trace-polynomial test first: no target-form match proves a rank-2 free
// subgroup; matches are resolved through the catalog.
Classification classify_word(const Word& w);

struct VerifyReport {
  bool ok = true;
  int matched = 0;
  int expected = 0;
  std::vector<std::string> lines;       // one per catalogue entry
  std::vector<std::string> mismatches;  // failures
  std::vector<std::string> notes;       // reported but non-failing observations
};

// Bijection between search classes and the catalogue, exact trace equality,
// the certificate column for 332, part membership and published per-form
// lists for 232. Cited statuses (finite orders, largeness) are echoed, not
// verified.
VerifyReport verify_tables(Case c, const CaseResult& results);

}  // namespace gtg
