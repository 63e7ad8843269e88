#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtg {

// Which free factor a syllable lives in: First is x (or u), Second is y (or v).
enum class Factor : uint8_t { First = 0, Second = 1 };

// The two settings of the artifact: generalized triangle groups of type
// (3,3,2) over Z3*Z3 and of type (2,3,2) over Z2*Z3.
enum class Case : uint8_t { C332, C232 };

const char* case_name(Case c);                    // "332" / "232"
std::optional<Case> case_from_name(const std::string& s);

// Orders of the two cyclic free factors. Only Z2*Z3 and Z3*Z3 are supported;
// the relator exponent r is fixed to 2 throughout.
struct FactorSpec {
  int p = 3;
  int q = 3;

  static FactorSpec z3z3() { return {3, 3}; }
  static FactorSpec z2z3() { return {2, 3}; }
  static FactorSpec make(int p, int q);
  static FactorSpec of_case(Case c) { return c == Case::C332 ? z3z3() : z2z3(); }

  Case to_case() const { return p == 3 ? Case::C332 : Case::C232; }

  int order_of(Factor f) const { return f == Factor::First ? p : q; }
  bool operator==(const FactorSpec& o) const { return p == o.p && q == o.q; }
  bool operator!=(const FactorSpec& o) const { return !(*this == o); }
};

struct Syllable {
  Factor factor;
  uint8_t exponent;  // in [1, order-1]

  bool operator==(const Syllable& o) const {
    return factor == o.factor && exponent == o.exponent;
  }
  // First < Second, then exponent ascending; this is the canonical-form order.
  bool operator<(const Syllable& o) const {
    if (factor != o.factor) return factor < o.factor;
    return exponent < o.exponent;
  }
};

std::string syllables_to_string(const std::vector<Syllable>& syls, FactorSpec spec,
                                bool pretty = false);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

// A cyclically reduced word in Zp*Zq, stored as one linear presentation.
// Presentations that differ by rotation denote the same cyclic word; parsing
// and all move operations keep words rotated to start with the First factor.
class Word {
 public:
  Word() = default;
  static Word make(std::vector<Syllable> syls, FactorSpec spec);

  const std::vector<Syllable>& syllables() const { return syls_; }
  FactorSpec spec() const { return spec_; }

  size_t syllable_length() const { return syls_.size(); }
  // number of First-factor syllables; the length parameter k of the word
  size_t pair_length() const;
  bool empty() const { return syls_.empty(); }
  // true when the word is an alternating x-first/y-last sequence of pairs
  bool is_alternating_pairs() const;

  bool operator==(const Word& o) const {
    return spec_ == o.spec_ && syls_ == o.syls_;
  }
  bool operator<(const Word& o) const { return syls_ < o.syls_; }

  Word rotated_pairs(size_t r) const;  // rotate left by r syllable pairs
  Word inverse() const;
  Word aut_second() const;             // y -> y^2
  Word aut_first() const;              // x -> x^2 (requires p = 3)
  Word interchanged() const;           // x <-> y (requires p = q)

  std::string to_string(bool pretty = false) const;

 private:
  std::vector<Syllable> syls_;
  FactorSpec spec_;
};

// Lexicographically least presentation over the full equivalence orbit.
struct CanonicalKey {
  std::vector<Syllable> syls;
  FactorSpec spec;

  bool operator==(const CanonicalKey& o) const { return syls == o.syls; }
  bool operator!=(const CanonicalKey& o) const { return !(*this == o); }
  bool operator<(const CanonicalKey& o) const { return syls < o.syls; }
  std::string to_string() const;
  Word word() const { return Word::make(syls, spec); }
};

// Run-length encoding [b1,g1,...,bm,gm] of an alternating word as blocks
// (xy)^b (xy^2)^g. Pure powers (xy)^k and (xy^2)^k carry a degenerate tag.
struct PairList {
  enum class Kind { Standard, PureFirst, PureSecond };
  Kind kind = Kind::Standard;
  std::vector<int> runs;  // Standard: even length; degenerate: single entry k

  size_t pair_count() const { return kind == Kind::Standard ? runs.size() / 2 : 0; }
  int sum() const;
  bool operator==(const PairList& o) const { return kind == o.kind && runs == o.runs; }
  std::string to_string() const;
};

// Grammar (UTF-8): word := term+ ; term := atom | '(' word ')' pow? ;
// atom := letter digit? pow? ; letter := x|y|u|v ; digit := '2' ;
// pow := '^' [1-9][0-9]*.  Letters x,y force (3,3); u,v force (2,3).
// The result is freely and cyclically reduced and rotated to start with the
// First factor. Spec mismatch, vanishing syllables and words reducing to the
// identity are reported as ParseError.
Word parse_word(const std::string& text, std::optional<FactorSpec> expected = {});

// Closure of {w} under pair rotation, inversion, the factor automorphisms and
// (when p = q) generator interchange; every member starts with the First
// factor and has the same pair length. Requires an alternating word.
std::vector<Word> equivalence_orbit(const Word& w);

CanonicalKey canonicalize(const Word& w);

bool equivalent(const Word& a, const Word& b);

// Exponent sequence [a1,b1,...,ak,bk] of an alternating word.
std::vector<uint8_t> exponent_sequence(const Word& w);
Word word_from_exponents(const std::vector<uint8_t>& exps, FactorSpec spec);

// For words whose First-factor exponents are all 1: the sequence [g1..gk] of
// Second-factor exponents, one per uv^g pair.
std::vector<uint8_t> gamma_sequence(const Word& w);
Word word_from_gamma(const std::vector<uint8_t>& gamma, FactorSpec spec);

// Requires the word rotated so it begins with an (xy)-run and ends with an
// (xy^2)-run; pure powers yield the degenerate forms.
PairList pairlist_of_word(const Word& w);
Word word_of_pairlist(const PairList& list, FactorSpec spec);

// Rotation (by pairs) moving w into the position pairlist_of_word accepts.
Word rotate_to_pair_normal(const Word& w);

// Z(u,v) = W(uvu, v) with u^2 = 1 freely reduced; doubles the pair length.
Word push_332_to_232(const Word& w);
// Inverse reading: gamma exponents taken in pairs, parity selecting which
// rotation class supplies the x-exponents. Requires even pair length.
Word lift_232_to_332(const Word& z, int parity);

}  // namespace gtg
