#include "gtg/smallcancel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gtg {

namespace {

std::vector<Syllable> invert_syllables(const std::vector<Syllable>& s, FactorSpec spec) {
  std::vector<Syllable> out;
  out.reserve(s.size());
  for (size_t i = s.size(); i-- > 0;) {
    int ord = spec.order_of(s[i].factor);
    out.push_back({s[i].factor, static_cast<uint8_t>(ord - s[i].exponent)});
  }
  return out;
}

bool occurs_at(const std::vector<Syllable>& hay, size_t pos, const std::vector<Syllable>& needle) {
  size_t n = hay.size();
  for (size_t j = 0; j < needle.size(); ++j) {
    if (!(hay[(pos + j) % n] == needle[j])) return false;
  }
  return true;
}

void collect_completions(const std::vector<Syllable>& hay, const std::vector<Syllable>& v,
                         std::set<std::vector<Syllable>>& out) {
  size_t n = hay.size();
  for (size_t pos = 0; pos < n; ++pos) {
    if (!occurs_at(hay, pos, v)) continue;
    std::vector<Syllable> comp;
    comp.reserve(n - v.size());
    for (size_t j = v.size(); j < n; ++j) comp.push_back(hay[(pos + j) % n]);
    out.insert(std::move(comp));
  }
}

}  // namespace

Relator Relator::square_of(const Word& w) {
  if (w.empty()) throw std::invalid_argument("relator of empty word");
  Relator r;
  r.base = w;
  r.u = w.syllables();
  r.u.insert(r.u.end(), w.syllables().begin(), w.syllables().end());
  r.u_inv = invert_syllables(r.u, w.spec());
  return r;
}

std::vector<std::vector<Syllable>> completions(const std::vector<Syllable>& v, const Relator& u) {
  if (v.empty() || static_cast<int>(v.size()) >= u.K()) {
    throw std::invalid_argument("completions: need 0 < |V| < K");
  }
  std::set<std::vector<Syllable>> out;
  collect_completions(u.u, v, out);
  collect_completions(u.u_inv, v, out);
  return {out.begin(), out.end()};
}

bool is_piece(const std::vector<Syllable>& v, const Relator& u) {
  return completions(v, u).size() >= 2;
}

bool is_non_piece(const std::vector<Syllable>& v, const Relator& u) {
  auto cs = completions(v, u);
  if (cs.empty()) throw std::invalid_argument("is_non_piece: not a subword of the relator");
  return cs.size() == 1;
}

std::vector<Syllable> cyclic_segment(const Word& w, int start, int len) {
  int n = static_cast<int>(w.syllable_length());
  if (n == 0 || len <= 0 || len > n) throw std::invalid_argument("bad cyclic segment");
  std::vector<Syllable> out;
  out.reserve(static_cast<size_t>(len));
  for (int j = 0; j < len; ++j) out.push_back(w.syllables()[static_cast<size_t>((start + j) % n)]);
  return out;
}

int ell_of(Case c) { return c == Case::C332 ? 4 : 8; }

namespace {

// non-piece status of every cyclic segment of W with length in [ell, maxlen]
struct PieceTable {
  int n;
  int ell;
  int maxlen;
  std::vector<char> np;  // [start][len-ell]

  bool non_piece(int start, int len) const {
    return np[static_cast<size_t>(start) * static_cast<size_t>(maxlen - ell + 1) +
              static_cast<size_t>(len - ell)] != 0;
  }
};

PieceTable build_piece_table(const Word& w, int ell, int maxlen) {
  Relator rel = Relator::square_of(w);
  int n = static_cast<int>(w.syllable_length());
  PieceTable t{n, ell, maxlen, {}};
  if (maxlen < ell) return t;
  t.np.assign(static_cast<size_t>(n) * static_cast<size_t>(maxlen - ell + 1), 0);
  for (int start = 0; start < n; ++start) {
    for (int len = ell; len <= maxlen; ++len) {
      auto seg = cyclic_segment(w, start, len);
      bool np = completions(seg, rel).size() == 1;  // segments always occur
      t.np[static_cast<size_t>(start) * static_cast<size_t>(maxlen - ell + 1) +
           static_cast<size_t>(len - ell)] = np ? 1 : 0;
    }
  }
  return t;
}

size_t least_rotation_offset(const Word& w) {
  size_t k = w.pair_length();
  size_t best = 0;
  for (size_t r = 1; r < k; ++r) {
    if (w.rotated_pairs(r).syllables() < w.rotated_pairs(best).syllables()) best = r;
  }
  return best;
}

}  // namespace

namespace {

// shared scan: first == true stops at the first valid triple
std::vector<std::array<int, 3>> scan_subdivisions(const Word& w, int ell, bool first) {
  std::vector<std::array<int, 3>> out;
  int n = static_cast<int>(w.syllable_length());
  if (n < 3 * ell) return out;
  // search relative to the least rotation so the answer depends only on the
  // cyclic word, then translate back to the caller's presentation
  size_t rot = w.is_alternating_pairs() ? least_rotation_offset(w) : 0;
  Word base = w.rotated_pairs(rot);
  int shift = static_cast<int>(2 * rot);

  PieceTable t = build_piece_table(base, ell, n - 2 * ell);
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = i1 + ell; i2 < n; ++i2) {
      if (!t.non_piece(i1, i2 - i1)) continue;
      for (int i3 = i2 + ell; i3 < n && i3 <= i1 + n - ell; ++i3) {
        if (!t.non_piece(i2, i3 - i2)) continue;
        if (!t.non_piece(i3, i1 + n - i3)) continue;
        std::array<int, 3> cuts{(i1 + shift) % n, (i2 + shift) % n, (i3 + shift) % n};
        std::sort(cuts.begin(), cuts.end());
        out.push_back(cuts);
        if (first) return out;
      }
    }
  }
  return out;
}

}  // namespace

std::optional<std::array<int, 3>> find_subdivision(const Word& w, int ell) {
  auto found = scan_subdivisions(w, ell, true);
  if (found.empty()) return std::nullopt;
  return found[0];
}

std::vector<std::array<int, 3>> all_subdivisions(const Word& w, int ell) {
  return scan_subdivisions(w, ell, false);
}

bool subdivision_valid(const Word& w, const std::array<int, 3>& cuts, int ell, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  int n = static_cast<int>(w.syllable_length());
  if (!(0 <= cuts[0] && cuts[0] < cuts[1] && cuts[1] < cuts[2] && cuts[2] < n)) {
    return fail("cuts must be strictly increasing positions in the word");
  }
  Relator rel = Relator::square_of(w);
  int lens[3] = {cuts[1] - cuts[0], cuts[2] - cuts[1], cuts[0] + n - cuts[2]};
  for (int i = 0; i < 3; ++i) {
    if (lens[i] < ell) {
      return fail("segment " + std::to_string(i + 1) + " shorter than " + std::to_string(ell));
    }
    auto seg = cyclic_segment(w, cuts[static_cast<size_t>(i)], lens[i]);
    if (completions(seg, rel).size() != 1) {
      return fail("segment " + std::to_string(i + 1) + " is a piece of W^2");
    }
  }
  return true;
}

bool is_subword_of_power(const std::vector<Syllable>& v, const Word& a) {
  if (v.empty()) throw std::invalid_argument("empty subword");
  size_t al = a.syllable_length();
  size_t m = (v.size() + al - 1) / al + 1;
  std::vector<Syllable> hay;
  hay.reserve(al * m);
  for (size_t i = 0; i < m; ++i) {
    hay.insert(hay.end(), a.syllables().begin(), a.syllables().end());
  }
  if (v.size() > hay.size()) return false;
  for (size_t pos = 0; pos + v.size() <= hay.size(); ++pos) {
    if (std::equal(v.begin(), v.end(), hay.begin() + static_cast<long>(pos))) return true;
  }
  return false;
}

std::vector<Word> ab_candidates(Case c) {
  auto spec = FactorSpec::of_case(c);
  std::vector<std::string> texts;
  if (c == Case::C332) {
    texts = {"xyxy", "xy2xy2", "xyxy2", "xyx2y2"};
  } else {
    texts = {"uvuvuvuv", "uvuv2uvuv2", "uvuvuvuv2", "uvuvuv2uv2"};
  }
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_word(t, spec));
  return out;
}

bool cyclic_conjugate_of(const Word& a, const Word& b) {
  if (a.spec() != b.spec() || a.syllable_length() != b.syllable_length()) return false;
  size_t n = b.syllable_length();
  for (size_t r = 0; r < n; ++r) {
    bool eq = true;
    for (size_t j = 0; j < n && eq; ++j) {
      eq = a.syllables()[j] == b.syllables()[(j + r) % n];
    }
    if (eq) return true;
  }
  return false;
}

std::optional<std::pair<Word, Word>> choose_AB(const Word& w, const std::array<int, 3>& cuts,
                                               Case c) {
  int n = static_cast<int>(w.syllable_length());
  int lens[3] = {cuts[1] - cuts[0], cuts[2] - cuts[1], cuts[0] + n - cuts[2]};
  std::vector<std::vector<Syllable>> segs;
  for (int i = 0; i < 3; ++i) {
    segs.push_back(cyclic_segment(w, cuts[static_cast<size_t>(i)], lens[i]));
  }
  auto cands = ab_candidates(c);
  for (size_t ia = 0; ia < cands.size(); ++ia) {
    bool blocked = false;
    for (const auto& seg : segs) {
      if (is_subword_of_power(seg, cands[ia])) {
        blocked = true;
        break;
      }
    }
    if (blocked) continue;
    for (size_t ib = 0; ib < cands.size(); ++ib) {
      if (ib == ia) continue;
      const Word& b = cands[ib];
      if (!cyclic_conjugate_of(cands[ia], b) && !cyclic_conjugate_of(cands[ia], b.inverse())) {
        return std::make_pair(cands[ia], b);
      }
    }
  }
  return std::nullopt;
}

namespace {

std::optional<SCCertificate> build_certificate(const Word& w, Case c,
                                               const std::array<int, 3>& cuts) {
  auto ab = choose_AB(w, cuts, c);
  if (!ab) {
    // the corollary proofs rule this out for a valid subdivision
    throw std::logic_error("certify: no A/B candidate qualifies for a valid subdivision");
  }
  int n = static_cast<int>(w.syllable_length());
  int ell = ell_of(c);
  SCCertificate cert;
  cert.kase = c;
  cert.word = w;
  cert.cuts = cuts;
  cert.segment_lengths = {cuts[1] - cuts[0], cuts[2] - cuts[1], cuts[0] + n - cuts[2]};
  cert.a = ab->first;
  cert.b = ab->second;
  cert.n = 20ll * (2 * n) * ell + 1;
  std::string an = "(" + cert.a.to_string() + ")^" + std::to_string(cert.n);
  std::string bn = "(" + cert.b.to_string() + ")^" + std::to_string(cert.n);
  cert.gen_x = an + bn;
  cert.gen_y = bn + an;
  auto problems = verify_certificate(cert);
  if (!problems.empty()) {
    throw std::logic_error("certify: produced certificate failed re-validation: " + problems[0]);
  }
  return cert;
}

void check_case_spec(const Word& w, Case c) {
  if (w.spec() != FactorSpec::of_case(c)) {
    throw std::invalid_argument("certify: word does not match the case's factor spec");
  }
}

}  // namespace

std::optional<SCCertificate> certify(const Word& w, Case c) {
  check_case_spec(w, c);
  auto cuts = find_subdivision(w, ell_of(c));
  if (!cuts) return std::nullopt;
  return build_certificate(w, c, *cuts);
}

std::optional<SCCertificate> certify_with_cuts(const Word& w, Case c,
                                               const std::array<int, 3>& cuts) {
  check_case_spec(w, c);
  if (!subdivision_valid(w, cuts, ell_of(c))) return std::nullopt;
  return build_certificate(w, c, cuts);
}

// ---------------------------------------------------------------------------
// independent checker: naive re-implementation of every clause

namespace {

// all distinct completions of v against the doubled word, by brute scan
int naive_completion_count(const std::vector<Syllable>& v, const Word& w) {
  std::vector<Syllable> u = w.syllables();
  u.insert(u.end(), w.syllables().begin(), w.syllables().end());
  std::vector<Syllable> ui = invert_syllables(u, w.spec());
  std::set<std::vector<Syllable>> comps;
  for (const auto* hay : {&u, &ui}) {
    size_t n = hay->size();
    for (size_t pos = 0; pos < n; ++pos) {
      bool hit = true;
      for (size_t j = 0; j < v.size() && hit; ++j) {
        hit = (*hay)[(pos + j) % n] == v[j];
      }
      if (!hit) continue;
      std::vector<Syllable> comp;
      for (size_t j = v.size(); j < n; ++j) comp.push_back((*hay)[(pos + j) % n]);
      comps.insert(std::move(comp));
    }
  }
  return static_cast<int>(comps.size());
}

}  // namespace

std::vector<std::string> verify_certificate(const SCCertificate& cert) {
  std::vector<std::string> bad;
  auto complain = [&bad](const std::string& s) { bad.push_back(s); };

  const Word& w = cert.word;
  int n = static_cast<int>(w.syllable_length());
  int ell = ell_of(cert.kase);
  if (w.spec() != FactorSpec::of_case(cert.kase)) complain("word/case mismatch");
  if (!(0 <= cert.cuts[0] && cert.cuts[0] < cert.cuts[1] && cert.cuts[1] < cert.cuts[2] &&
        cert.cuts[2] < n)) {
    complain("cuts out of order");
    return bad;
  }
  int lens[3] = {cert.cuts[1] - cert.cuts[0], cert.cuts[2] - cert.cuts[1],
                 cert.cuts[0] + n - cert.cuts[2]};
  for (int i = 0; i < 3; ++i) {
    if (lens[i] != cert.segment_lengths[static_cast<size_t>(i)]) complain("segment length mismatch");
    if (lens[i] < ell) complain("segment " + std::to_string(i + 1) + " shorter than ell");
  }

  std::vector<std::vector<Syllable>> segs;
  for (int i = 0; i < 3; ++i) {
    segs.push_back(cyclic_segment(w, cert.cuts[static_cast<size_t>(i)], lens[i]));
  }
  for (int i = 0; i < 3; ++i) {
    int count = naive_completion_count(segs[static_cast<size_t>(i)], w);
    if (count == 0) complain("segment " + std::to_string(i + 1) + " does not occur in W^2");
    if (count >= 2) complain("segment " + std::to_string(i + 1) + " is a piece of W^2");
  }

  for (const Word* g : {&cert.a, &cert.b}) {
    if (static_cast<int>(g->syllable_length()) != ell) complain("A/B length is not ell");
    if (g->spec() != w.spec()) complain("A/B spec mismatch");
  }
  for (int i = 0; i < 3; ++i) {
    // naive window scan against powers of A
    const auto& v = segs[static_cast<size_t>(i)];
    size_t m = (v.size() + cert.a.syllable_length() - 1) / cert.a.syllable_length() + 1;
    std::vector<Syllable> hay;
    for (size_t r = 0; r < m; ++r) {
      hay.insert(hay.end(), cert.a.syllables().begin(), cert.a.syllables().end());
    }
    for (size_t pos = 0; pos + v.size() <= hay.size(); ++pos) {
      if (std::equal(v.begin(), v.end(), hay.begin() + static_cast<long>(pos))) {
        complain("segment " + std::to_string(i + 1) + " is a subword of a power of A");
        break;
      }
    }
  }
  if (cyclic_conjugate_of(cert.a, cert.b) || cyclic_conjugate_of(cert.a, cert.b.inverse())) {
    complain("A is a cyclic conjugate of B or B^-1");
  }
  long long expected_n = 20ll * (2 * n) * ell + 1;
  if (cert.n != expected_n) complain("N != 20*K*ell + 1");
  if (cert.n <= 20ll * (2 * n) * ell) complain("N does not exceed 20*K*ell");

  std::string an = "(" + cert.a.to_string() + ")^" + std::to_string(cert.n);
  std::string bn = "(" + cert.b.to_string() + ")^" + std::to_string(cert.n);
  if (cert.gen_x != an + bn) complain("generator X is not A^N B^N");
  if (cert.gen_y != bn + an) complain("generator Y is not B^N A^N");
  return bad;
}

}  // namespace gtg
