#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gtg/word.hpp"

namespace gtg {

// The relator U = W^2 of the one-relator product, as a cyclic word.
struct Relator {
  Word base;                       // W
  std::vector<Syllable> u;         // W.W
  std::vector<Syllable> u_inv;     // (W.W)^-1
  int K() const { return static_cast<int>(u.size()); }

  static Relator square_of(const Word& w);
};

// All distinct completions V' such that V.V' is cyclically reduced as written
// and equal to a cyclic conjugate of U or U^-1; V is a piece iff there are at
// least two. Matching is syllable-aligned. Requires 0 < |V| < K.
std::vector<std::vector<Syllable>> completions(const std::vector<Syllable>& v, const Relator& u);

bool is_piece(const std::vector<Syllable>& v, const Relator& u);
// Throws std::invalid_argument when V does not occur in U^{+-1} at all.
bool is_non_piece(const std::vector<Syllable>& v, const Relator& u);

// Syllables [start, start+len) of w read cyclically.
std::vector<Syllable> cyclic_segment(const Word& w, int start, int len);

// Subdivision length bound per case: 4 for (3,3), 8 for (2,3).
int ell_of(Case c);

// First cut triple (lexicographic relative to the word's least rotation)
// splitting W cyclically into three non-pieces of W^2 of length >= ell.
// Returned cut positions index the presentation of w as given.
std::optional<std::array<int, 3>> find_subdivision(const Word& w, int ell);

// Validate a user-supplied subdivision; optionally reports the reason.
bool subdivision_valid(const Word& w, const std::array<int, 3>& cuts, int ell,
                       std::string* why = nullptr);

// Exhaustive mode: every valid cut triple, in the deterministic search order.
// An empty result is the certified negative outcome for the open words.
std::vector<std::array<int, 3>> all_subdivisions(const Word& w, int ell);

// True iff V occurs syllable-aligned in A^M with M = ceil(|V|/|A|) + 1,
// which windows every occurrence in any power of A.
bool is_subword_of_power(const std::vector<Syllable>& v, const Word& a);

// The four candidate words of the corollary proofs (exponent -1 written as 2).
std::vector<Word> ab_candidates(Case c);

bool cyclic_conjugate_of(const Word& a, const Word& b);

// A: first candidate such that no segment is a subword of one of its powers;
// B: first remaining candidate, verified not cyclically conjugate to A^{+-1}.
std::optional<std::pair<Word, Word>> choose_AB(const Word& w, const std::array<int, 3>& cuts,
                                               Case c);

struct SCCertificate {
  Case kase;
  Word word;
  std::array<int, 3> cuts;
  std::array<int, 3> segment_lengths;
  Word a;
  Word b;
  long long n;          // 20 * K * ell + 1
  std::string gen_x;    // A^N B^N
  std::string gen_y;    // B^N A^N
};

// Compose subdivision search and A/B choice into a full certificate. The
// returned certificate has been re-validated by verify_certificate. An empty
// result means no qualifying subdivision exists.
std::optional<SCCertificate> certify(const Word& w, Case c);

// As certify, but validating the given cuts instead of searching.
std::optional<SCCertificate> certify_with_cuts(const Word& w, Case c,
                                               const std::array<int, 3>& cuts);

// Independent checker: re-tests every certificate clause from scratch with
// its own naive occurrence scans. Returns human-readable failures; empty
// means the certificate is valid.
std::vector<std::string> verify_certificate(const SCCertificate& cert);

}  // namespace gtg
