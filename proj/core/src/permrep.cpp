#include "gtg/permrep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gtg {

const char* fin_group_name(FinGroup g) {
  switch (g) {
    case FinGroup::A4: return "A4";
    case FinGroup::S4: return "S4";
    default: return "A5";
  }
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::array<bool, 5> seen{};
  for (int i = 0; i < 5; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

Perm compose(const Perm& p, const Perm& q) {
  Perm r;
  for (int i = 0; i < 5; ++i) r[i] = p[q[i]];
  return r;
}

bool is_even(const Perm& p, int degree) {
  int inv = 0;
  for (int i = 0; i < degree; ++i) {
    for (int j = i + 1; j < degree; ++j) inv += p[i] > p[j];
  }
  return inv % 2 == 0;
}

std::vector<Perm> make_elements(FinGroup g) {
  int degree = g == FinGroup::A5 ? 5 : 4;
  Perm base{0, 1, 2, 3, 4};
  std::vector<Perm> out;
  Perm p = base;
  do {
    bool keep = g == FinGroup::S4 || is_even(p, degree);
    if (keep) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + degree));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GroupTable::GroupTable(FinGroup g) : group_(g), perms_(make_elements(g)) {
  size_t n = perms_.size();
  std::map<Perm, uint16_t> index;
  for (size_t i = 0; i < n; ++i) index[perms_[i]] = static_cast<uint16_t>(i);
  table_.resize(n * n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      table_[a * n + b] = index.at(compose(perms_[a], perms_[b]));
    }
  }
  orders_.resize(n);
  by_order_.resize(8);
  for (size_t a = 0; a < n; ++a) {
    int ord = 1;
    uint16_t cur = static_cast<uint16_t>(a);
    while (cur != 0) {
      cur = mul(cur, static_cast<uint16_t>(a));
      ++ord;
    }
    orders_[a] = ord;
    by_order_[static_cast<size_t>(ord)].push_back(static_cast<uint16_t>(a));
  }
  int expected = g == FinGroup::A4 ? 12 : (g == FinGroup::S4 ? 24 : 60);
  if (static_cast<int>(n) != expected) throw std::logic_error("group table size mismatch");
}

const GroupTable& GroupTable::get(FinGroup g) {
  static const GroupTable a4(FinGroup::A4);
  static const GroupTable s4(FinGroup::S4);
  static const GroupTable a5(FinGroup::A5);
  switch (g) {
    case FinGroup::A4: return a4;
    case FinGroup::S4: return s4;
    default: return a5;
  }
}

const std::vector<uint16_t>& GroupTable::elements_of_order(int n) const {
  static const std::vector<uint16_t> kEmpty;
  if (n < 1 || n >= static_cast<int>(by_order_.size())) return kEmpty;
  return by_order_[static_cast<size_t>(n)];
}

std::vector<RepRequirement> requirements_of(const TargetForm& f) {
  std::vector<RepRequirement> out;
  if (f.kase == Case::C232) {
    if (f.a) out.push_back({FinGroup::A4, 3});
    if (f.b) out.push_back({FinGroup::S4, 4});
    if (f.c) out.push_back({FinGroup::A5, 5});
  } else {
    // roots 0 and 1 of the (3,3) form force A4 with xy of order 2 resp. 3;
    // the golden roots force A5
    if (f.a) out.push_back({FinGroup::A4, 2});
    if (f.b) out.push_back({FinGroup::A4, 3});
    if (f.c) out.push_back({FinGroup::A5, 5});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::vector<RepWitness>> passes_filter(const Word& w,
                                                     const std::vector<RepRequirement>& reqs) {
  if (!w.is_alternating_pairs()) {
    throw std::invalid_argument("passes_filter: word must be an alternating pair word");
  }
  int p = w.spec().p;
  int q = w.spec().q;
  std::vector<RepWitness> witnesses;
  for (const auto& req : reqs) {
    const GroupTable& t = GroupTable::get(req.group);
    bool found = false;
    for (uint16_t x : t.elements_of_order(p)) {
      for (uint16_t y : t.elements_of_order(q)) {
        if (t.element_order(t.mul(x, y)) != req.xy_order) continue;
        uint16_t m = 0;
        for (const auto& s : w.syllables()) {
          uint16_t g = s.factor == Factor::First ? x : y;
          for (int e = 0; e < s.exponent; ++e) m = t.mul(m, g);
        }
        if (m != 0 && t.mul(m, m) == 0) {
          witnesses.push_back({req, t.perm(x), t.perm(y)});
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  return witnesses;
}

namespace {

Perm conj_perm(const Perm& g, const Perm& x) {
  // g x g^-1
  Perm gi;
  for (int i = 0; i < 5; ++i) gi[g[i]] = static_cast<uint8_t>(i);
  Perm r;
  for (int i = 0; i < 5; ++i) r[i] = g[x[gi[i]]];
  return r;
}

}  // namespace

RepFilter::RepFilter(const std::vector<RepRequirement>& reqs) {
  for (const auto& req : reqs) {
    const GroupTable& t = GroupTable::get(req.group);
    CompiledReq cr;
    cr.table = &t;
    // Candidate pairs (U,V) with |U| = 2, |V| = 3, |UV| = required order,
    // reduced modulo the automorphism group (conjugation by S4 resp. S5),
    // which preserves element orders and word images. Each surviving pair is
    // compiled into branch-free step tables over the images of uv and uv^2.
    int degree = req.group == FinGroup::A5 ? 5 : 4;
    std::vector<Perm> conjugators;
    {
      Perm p{0, 1, 2, 3, 4};
      do {
        conjugators.push_back(p);
      } while (std::next_permutation(p.begin(), p.begin() + degree));
    }
    std::map<Perm, uint16_t> index;
    for (uint16_t i = 0; i < t.order(); ++i) index[t.perm(i)] = i;

    size_t n = static_cast<size_t>(t.order());
    std::vector<bool> seen_pair(n * n, false);
    for (uint16_t u : t.elements_of_order(2)) {
      for (uint16_t v : t.elements_of_order(3)) {
        if (t.element_order(t.mul(u, v)) != req.xy_order) continue;
        if (seen_pair[static_cast<size_t>(u) * n + v]) continue;
        for (const Perm& g : conjugators) {
          auto cu = index.find(conj_perm(g, t.perm(u)));
          auto cv = index.find(conj_perm(g, t.perm(v)));
          if (cu != index.end() && cv != index.end()) {
            seen_pair[static_cast<size_t>(cu->second) * n + cv->second] = true;
          }
        }
        uint16_t a = t.mul(u, v);
        uint16_t b = t.mul(a, v);
        PairStep ps;
        ps.step[0].resize(n);
        ps.step[1].resize(n);
        for (uint16_t m = 0; m < n; ++m) {
          ps.step[0][m] = static_cast<uint8_t>(t.mul(m, a));
          ps.step[1][m] = static_cast<uint8_t>(t.mul(m, b));
        }
        std::fill(std::begin(ps.involution_bit), std::end(ps.involution_bit), 0);
        for (uint16_t m = 1; m < n; ++m) {
          if (t.mul(m, m) == 0) ps.involution_bit[m >> 3] |= static_cast<uint8_t>(1u << (m & 7));
        }
        cr.pairs.push_back(std::move(ps));
      }
    }
    reqs_.push_back(std::move(cr));
  }
}

std::vector<size_t> RepFilter::pair_counts() const {
  std::vector<size_t> out;
  for (const auto& cr : reqs_) out.push_back(cr.pairs.size());
  return out;
}

bool RepFilter::passes_codes(const uint8_t* codes, int k) const {
  // all product chains are advanced in one pass; they are independent, so the
  // loads pipeline across requirements
  constexpr size_t kMaxChains = 12;
  const PairStep* chain[kMaxChains];
  const uint8_t* s0[kMaxChains];
  const uint8_t* s1[kMaxChains];
  size_t nchain = 0;
  for (const auto& cr : reqs_) {
    for (const auto& ps : cr.pairs) {
      if (nchain == kMaxChains) return passes_codes_general(codes, k);
      chain[nchain] = &ps;
      s0[nchain] = ps.step[0].data();
      s1[nchain] = ps.step[1].data();
      ++nchain;
    }
  }
  uint8_t m[kMaxChains] = {0};
  for (int i = 0; i < k; ++i) {
    const uint8_t* const* s = codes[i] ? s1 : s0;
    for (size_t j = 0; j < nchain; ++j) m[j] = s[j][m[j]];
  }
  size_t at = 0;
  for (const auto& cr : reqs_) {
    bool ok = false;
    for (size_t p = 0; p < cr.pairs.size(); ++p, ++at) {
      uint8_t v = m[at];
      ok = ok || (chain[at]->involution_bit[v >> 3] & (1u << (v & 7))) != 0;
    }
    if (!ok) return false;
  }
  return true;
}

bool RepFilter::passes_codes_general(const uint8_t* codes, int k) const {
  for (const auto& cr : reqs_) {
    bool ok = false;
    for (const auto& ps : cr.pairs) {
      const uint8_t* s0 = ps.step[0].data();
      const uint8_t* s1 = ps.step[1].data();
      uint8_t m = 0;
      for (int i = 0; i < k; ++i) m = codes[i] ? s1[m] : s0[m];
      if (ps.involution_bit[m >> 3] & (1u << (m & 7))) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace gtg
