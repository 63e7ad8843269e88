#include "gtg/word.hpp"

#include <algorithm>
#include <set>

namespace gtg {

namespace {

constexpr size_t kMaxSyllables = 1u << 20;

void check_alternating(const std::vector<Syllable>& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i].factor == s[(i + 1) % s.size()].factor && s.size() > 1) {
      throw std::invalid_argument("word is not cyclically reduced");
    }
  }
}

std::vector<Syllable> rotate_left(const std::vector<Syllable>& s, size_t r) {
  std::vector<Syllable> out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) out.push_back(s[(i + r) % s.size()]);
  return out;
}

// rotate so the presentation starts with a First-factor syllable
std::vector<Syllable> to_first_start(std::vector<Syllable> s) {
  if (s.size() >= 2 && s[0].factor == Factor::Second) return rotate_left(s, 1);
  return s;
}

}  // namespace

const char* case_name(Case c) { return c == Case::C332 ? "332" : "232"; }

std::optional<Case> case_from_name(const std::string& s) {
  if (s == "332") return Case::C332;
  if (s == "232") return Case::C232;
  return std::nullopt;
}

FactorSpec FactorSpec::make(int p, int q) {
  if (!((p == 2 && q == 3) || (p == 3 && q == 3))) {
    throw std::invalid_argument("unsupported factor orders: only (2,3) and (3,3)");
  }
  return {p, q};
}

Word Word::make(std::vector<Syllable> syls, FactorSpec spec) {
  FactorSpec::make(spec.p, spec.q);
  for (const auto& s : syls) {
    int ord = spec.order_of(s.factor);
    if (s.exponent < 1 || s.exponent >= ord) {
      throw std::invalid_argument("syllable exponent out of range");
    }
  }
  check_alternating(syls);
  Word w;
  w.syls_ = std::move(syls);
  w.spec_ = spec;
  return w;
}

size_t Word::pair_length() const {
  size_t k = 0;
  for (const auto& s : syls_) k += s.factor == Factor::First;
  return k;
}

bool Word::is_alternating_pairs() const {
  if (syls_.empty() || syls_.size() % 2 != 0) return false;
  return syls_[0].factor == Factor::First;
}

Word Word::rotated_pairs(size_t r) const {
  Word w = *this;
  w.syls_ = rotate_left(syls_, 2 * (r % (syls_.size() / 2 ? syls_.size() / 2 : 1)));
  return w;
}

Word Word::inverse() const {
  std::vector<Syllable> out;
  out.reserve(syls_.size());
  for (size_t i = syls_.size(); i-- > 0;) {
    int ord = spec_.order_of(syls_[i].factor);
    out.push_back({syls_[i].factor, static_cast<uint8_t>(ord - syls_[i].exponent)});
  }
  Word w = *this;
  w.syls_ = to_first_start(std::move(out));
  return w;
}

Word Word::aut_second() const {
  Word w = *this;
  for (auto& s : w.syls_) {
    if (s.factor == Factor::Second) s.exponent = static_cast<uint8_t>(spec_.q - s.exponent);
  }
  return w;
}

Word Word::aut_first() const {
  if (spec_.p != 3) throw std::invalid_argument("x -> x^2 needs p = 3");
  Word w = *this;
  for (auto& s : w.syls_) {
    if (s.factor == Factor::First) s.exponent = static_cast<uint8_t>(spec_.p - s.exponent);
  }
  return w;
}

Word Word::interchanged() const {
  if (spec_.p != spec_.q) throw std::invalid_argument("x <-> y needs p = q");
  std::vector<Syllable> out = syls_;
  for (auto& s : out) s.factor = s.factor == Factor::First ? Factor::Second : Factor::First;
  Word w = *this;
  w.syls_ = to_first_start(std::move(out));
  return w;
}

std::string syllables_to_string(const std::vector<Syllable>& syls, FactorSpec spec, bool pretty) {
  std::string out;
  for (const auto& s : syls) {
    char letter;
    if (spec.p == 2) {
      letter = s.factor == Factor::First ? 'u' : 'v';
    } else {
      letter = s.factor == Factor::First ? 'x' : 'y';
    }
    out += letter;
    if (s.exponent == 2) out += pretty ? "^2" : "2";
  }
  return out;
}

std::string Word::to_string(bool pretty) const { return syllables_to_string(syls_, spec_, pretty); }

std::string CanonicalKey::to_string() const { return word().to_string(); }

int PairList::sum() const {
  if (kind != Kind::Standard) return runs.empty() ? 0 : runs[0];
  int s = 0;
  for (int r : runs) s += r;
  return s;
}

std::string PairList::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(runs[i]);
  }
  if (kind == Kind::PureFirst) out += " | pure-uv";
  if (kind == Kind::PureSecond) out += " | pure-uv2";
  return out + "]";
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct RawSyllable {
  char letter;
  long long exponent;
  size_t pos;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  std::vector<RawSyllable> run() {
    auto out = parse_seq(0);
    if (pos_ != s_.size()) throw ParseError("unexpected token '" + std::string(1, s_[pos_]) + "'", pos_);
    if (out.empty()) throw ParseError("empty word", 0);
    return out;
  }

 private:
  std::vector<RawSyllable> parse_seq(int depth) {
    if (depth > 64) throw ParseError("nesting too deep", pos_);
    std::vector<RawSyllable> out;
    while (pos_ < s_.size() && s_[pos_] != ')') {
      char c = s_[pos_];
      if (c == '(') {
        size_t open = pos_++;
        auto inner = parse_seq(depth + 1);
        if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("unbalanced '('", open);
        ++pos_;
        long long pow = parse_pow_opt();
        if (inner.empty()) throw ParseError("empty group", open);
        if (inner.size() * pow + out.size() > kMaxSyllables) throw ParseError("word too long", open);
        for (long long i = 0; i < pow; ++i) out.insert(out.end(), inner.begin(), inner.end());
      } else if (c == 'x' || c == 'y' || c == 'u' || c == 'v') {
        size_t at = pos_++;
        long long digit = 1;
        if (pos_ < s_.size() && s_[pos_] == '2') {
          digit = 2;
          ++pos_;
        }
        long long pow = parse_pow_opt();
        out.push_back({c, digit * pow, at});
        if (out.size() > kMaxSyllables) throw ParseError("word too long", at);
      } else if (c == ' ' || c == '\t') {
        ++pos_;
      } else {
        throw ParseError("unexpected token '" + std::string(1, c) + "'", pos_);
      }
    }
    return out;
  }

  long long parse_pow_opt() {
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    size_t at = pos_++;
    if (pos_ >= s_.size() || s_[pos_] < '1' || s_[pos_] > '9') {
      throw ParseError("exponent expected after '^'", at);
    }
    long long v = 0;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      v = v * 10 + (s_[pos_] - '0');
      if (v > static_cast<long long>(kMaxSyllables)) throw ParseError("exponent too large", at);
      ++pos_;
    }
    return v;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, std::optional<FactorSpec> expected) {
  auto raw = Parser(text).run();

  bool has_xy = false;
  bool has_uv = false;
  for (const auto& r : raw) {
    if (r.letter == 'x' || r.letter == 'y') has_xy = true;
    if (r.letter == 'u' || r.letter == 'v') has_uv = true;
  }
  if (has_xy && has_uv) throw ParseError("cannot mix x,y with u,v", raw[0].pos);
  FactorSpec spec = has_uv ? FactorSpec::z2z3() : FactorSpec::z3z3();
  if (expected && *expected != spec) {
    throw ParseError(has_uv ? "letters u,v require case 232" : "letters x,y require case 332",
                     raw[0].pos);
  }

  // atom-level exponent reduction
  std::vector<Syllable> syls;
  std::vector<size_t> positions;
  syls.reserve(raw.size());
  for (const auto& r : raw) {
    Factor f = (r.letter == 'x' || r.letter == 'u') ? Factor::First : Factor::Second;
    int ord = spec.order_of(f);
    int e = static_cast<int>(r.exponent % ord);
    if (e == 0) {
      throw ParseError(std::string("vanishing syllable: ") + r.letter + "^" +
                           std::to_string(r.exponent) + " is trivial",
                       r.pos);
    }
    syls.push_back({f, static_cast<uint8_t>(e)});
    positions.push_back(r.pos);
  }

  // free reduction
  std::vector<Syllable> red;
  for (const auto& s : syls) {
    if (!red.empty() && red.back().factor == s.factor) {
      int ord = spec.order_of(s.factor);
      int e = (red.back().exponent + s.exponent) % ord;
      if (e == 0) {
        red.pop_back();
      } else {
        red.back().exponent = static_cast<uint8_t>(e);
      }
    } else {
      red.push_back(s);
    }
  }

  // cyclic reduction: merge last syllable into first while they share a factor
  while (red.size() >= 2 && red.front().factor == red.back().factor) {
    int ord = spec.order_of(red.front().factor);
    int e = (red.front().exponent + red.back().exponent) % ord;
    red.pop_back();
    if (e == 0) {
      red.erase(red.begin());
    } else {
      red.front().exponent = static_cast<uint8_t>(e);
    }
  }

  if (red.empty()) throw ParseError("trivial word", positions.empty() ? 0 : positions[0]);
  return Word::make(to_first_start(std::move(red)), spec);
}

// ---------------------------------------------------------------------------
// equivalence

namespace {

void require_pairs(const Word& w, const char* who) {
  if (!w.is_alternating_pairs()) {
    throw std::invalid_argument(std::string(who) + ": word must be an alternating pair word");
  }
}

}  // namespace

std::vector<Word> equivalence_orbit(const Word& w) {
  require_pairs(w, "equivalence_orbit");
  const FactorSpec spec = w.spec();
  std::set<std::vector<Syllable>> seen;
  std::vector<Word> queue{w};
  seen.insert(w.syllables());
  const bool pq = spec.p == spec.q;
  const bool p3 = spec.p == 3;
  for (size_t head = 0; head < queue.size(); ++head) {
    Word cur = queue[head];
    std::vector<Word> next;
    next.push_back(cur.rotated_pairs(1));
    next.push_back(cur.inverse());
    next.push_back(cur.aut_second());
    if (p3) next.push_back(cur.aut_first());
    if (pq) next.push_back(cur.interchanged());
    for (auto& n : next) {
      if (seen.insert(n.syllables()).second) queue.push_back(std::move(n));
    }
  }
  return queue;
}

CanonicalKey canonicalize(const Word& w) {
  require_pairs(w, "canonicalize");
  auto orbit = equivalence_orbit(w);
  const Word* best = &orbit[0];
  for (const auto& m : orbit) {
    if (m.syllables() < best->syllables()) best = &m;
  }
  return CanonicalKey{best->syllables(), w.spec()};
}

bool equivalent(const Word& a, const Word& b) {
  if (a.spec() != b.spec()) return false;
  return canonicalize(a) == canonicalize(b);
}

// ---------------------------------------------------------------------------
// sequences, pair lists, transfer

std::vector<uint8_t> exponent_sequence(const Word& w) {
  require_pairs(w, "exponent_sequence");
  std::vector<uint8_t> out;
  out.reserve(w.syllable_length());
  for (const auto& s : w.syllables()) out.push_back(s.exponent);
  return out;
}

Word word_from_exponents(const std::vector<uint8_t>& exps, FactorSpec spec) {
  if (exps.empty() || exps.size() % 2 != 0) {
    throw std::invalid_argument("exponent sequence must have even positive length");
  }
  std::vector<Syllable> syls;
  syls.reserve(exps.size());
  for (size_t i = 0; i < exps.size(); ++i) {
    syls.push_back({i % 2 == 0 ? Factor::First : Factor::Second, exps[i]});
  }
  return Word::make(std::move(syls), spec);
}

std::vector<uint8_t> gamma_sequence(const Word& w) {
  require_pairs(w, "gamma_sequence");
  std::vector<uint8_t> out;
  out.reserve(w.pair_length());
  for (const auto& s : w.syllables()) {
    if (s.factor == Factor::First) {
      if (s.exponent != 1) {
        throw std::invalid_argument("gamma_sequence: word has x^2 syllables");
      }
    } else {
      out.push_back(s.exponent);
    }
  }
  return out;
}

Word word_from_gamma(const std::vector<uint8_t>& gamma, FactorSpec spec) {
  if (gamma.empty()) throw std::invalid_argument("empty gamma sequence");
  std::vector<uint8_t> exps;
  exps.reserve(2 * gamma.size());
  for (uint8_t g : gamma) {
    exps.push_back(1);
    exps.push_back(g);
  }
  return word_from_exponents(exps, spec);
}

PairList pairlist_of_word(const Word& w) {
  auto gamma = gamma_sequence(w);
  bool all1 = std::all_of(gamma.begin(), gamma.end(), [](uint8_t g) { return g == 1; });
  bool all2 = std::all_of(gamma.begin(), gamma.end(), [](uint8_t g) { return g == 2; });
  if (all1) return PairList{PairList::Kind::PureFirst, {static_cast<int>(gamma.size())}};
  if (all2) return PairList{PairList::Kind::PureSecond, {static_cast<int>(gamma.size())}};
  if (gamma.front() != 1 || gamma.back() != 2) {
    throw std::invalid_argument(
        "pairlist_of_word: rotate the word to start with an (xy)-run and end "
        "with an (xy^2)-run first (see rotate_to_pair_normal)");
  }
  PairList out;
  size_t i = 0;
  while (i < gamma.size()) {
    int run = 0;
    uint8_t v = gamma[i];
    while (i < gamma.size() && gamma[i] == v) {
      ++run;
      ++i;
    }
    out.runs.push_back(run);
  }
  return out;
}

Word word_of_pairlist(const PairList& list, FactorSpec spec) {
  std::vector<uint8_t> gamma;
  if (list.kind == PairList::Kind::PureFirst) {
    gamma.assign(static_cast<size_t>(list.runs.at(0)), 1);
  } else if (list.kind == PairList::Kind::PureSecond) {
    gamma.assign(static_cast<size_t>(list.runs.at(0)), 2);
  } else {
    if (list.runs.empty() || list.runs.size() % 2 != 0) {
      throw std::invalid_argument("pair list must have even positive length");
    }
    for (size_t i = 0; i < list.runs.size(); ++i) {
      if (list.runs[i] <= 0) throw std::invalid_argument("pair list entries must be positive");
      for (int j = 0; j < list.runs[i]; ++j) gamma.push_back(i % 2 == 0 ? 1 : 2);
    }
  }
  return word_from_gamma(gamma, spec);
}

Word rotate_to_pair_normal(const Word& w) {
  auto gamma = gamma_sequence(w);
  size_t k = gamma.size();
  for (size_t r = 0; r < k; ++r) {
    if (gamma[r] == 1 && gamma[(r + k - 1) % k] == 2) return w.rotated_pairs(r);
  }
  return w;  // pure power: any rotation is normal
}

Word push_332_to_232(const Word& w) {
  if (w.spec() != FactorSpec::z3z3()) {
    throw std::invalid_argument("push_332_to_232: word must be in Z3*Z3");
  }
  // x -> uvu and x^2 -> uv^2u, so the exponent string carries over verbatim
  return word_from_gamma(exponent_sequence(w), FactorSpec::z2z3());
}

Word lift_232_to_332(const Word& z, int parity) {
  if (z.spec() != FactorSpec::z2z3()) {
    throw std::invalid_argument("lift_232_to_332: word must be in Z2*Z3");
  }
  if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  auto gamma = gamma_sequence(z);
  if (gamma.size() % 2 != 0) {
    throw std::invalid_argument("lift_232_to_332: pair length must be even");
  }
  if (parity == 1) std::rotate(gamma.begin(), gamma.begin() + 1, gamma.end());
  return word_from_exponents(gamma, FactorSpec::z3z3());
}

}  // namespace gtg
