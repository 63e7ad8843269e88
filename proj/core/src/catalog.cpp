#include "gtg/catalog.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "gtg/smallcancel.hpp"

namespace gtg {

const char* status_name(GroupStatus s) {
  switch (s) {
    case GroupStatus::Finite: return "finite";
    case GroupStatus::Large: return "large";
    case GroupStatus::AbelianByFinite: return "abelian-by-finite";
    case GroupStatus::FreeViaSC: return "free-via-small-cancellation";
    case GroupStatus::FreeCited: return "free-subgroup-cited";
    default: return "open";
  }
}

Word CatalogEntry::word() const { return parse_word(word_text, FactorSpec::of_case(kase)); }

std::optional<std::array<int, 3>> CatalogEntry::bracket_cuts() const {
  if (bracket_lengths.size() != 3) return std::nullopt;
  return std::array<int, 3>{bracket_start, bracket_start + bracket_lengths[0],
                            bracket_start + bracket_lengths[0] + bracket_lengths[1]};
}

namespace {

constexpr const char* kSrcClassicalFinite = "classical classification of finite cases";
constexpr const char* kSrcShortFree = "free subgroups known from prior work on short relators";
constexpr const char* kSrcLargeIdx12 = "large: an index-12 subgroup maps onto Z * Z_2";
constexpr const char* kSrcLargeVia232 = "large via the corresponding (2,3,2) group";
constexpr const char* kSrcSC = "small-cancellation certificate (this toolkit)";
constexpr const char* kSrcFiniteCited = "finite; order cited from prior work";
constexpr const char* kSrcIndex2 = "free subgroups: its index-2 subgroup is entry 4 of the (3,3) catalogue";
constexpr const char* kSrcAbelByFin =
    "abelian-by-finite: the normal closure of (uv)^10 is free abelian of rank 6 and index 7680";
constexpr const char* kSrcLarge232 = "large: the normal closure of (uv)^5 maps onto a free group of rank 3";
constexpr const char* kSrcOpen = "no method known";

std::vector<CatalogEntry> build_332() {
  auto F = [](int a, int b, int c) { return TargetForm{Case::C332, a, b, c}; };
  std::vector<CatalogEntry> t;
  auto add = [&t](std::string id, std::string word, TargetForm tau, GroupStatus st,
                  long long order, std::string source, bool scc, std::vector<int> brackets) {
    CatalogEntry e;
    e.id = std::move(id);
    e.kase = Case::C332;
    e.word_text = std::move(word);
    e.tau = tau;
    e.status = st;
    e.finite_order = order;
    e.source = std::move(source);
    e.scc = scc;
    e.bracket_lengths = std::move(brackets);
    t.push_back(std::move(e));
  };
  add("1", "xy", F(1, 0, 0), GroupStatus::Finite, 12, kSrcClassicalFinite, false, {});
  add("2", "xyxy2", F(0, 0, 1), GroupStatus::Finite, 180, kSrcClassicalFinite, false, {});
  add("3", "xyx2y2", F(1, 1, 0), GroupStatus::Finite, 288, kSrcClassicalFinite, false, {});
  add("4", "xyxyx2y2", F(1, 0, 1), GroupStatus::FreeCited, 0, kSrcShortFree, false, {});
  add("5", "xyxyx2yx2y2", F(0, 0, 2), GroupStatus::FreeCited, 0, kSrcShortFree, false, {});
  add("6", "xyxy2x2yx2y2", F(1, 1, 1), GroupStatus::FreeCited, 0, kSrcShortFree, false, {});
  add("7", "xyxyx2y2x2yxy2", F(1, 0, 2), GroupStatus::Large, 0, kSrcLargeIdx12, false, {});
  add("8", "xyxyx2y2x2yx2yxy2", F(0, 0, 3), GroupStatus::Large, 0, kSrcLargeVia232, false, {});
  add("9", "xyxyxy2x2y2xyx2yx2y2", F(1, 0, 3), GroupStatus::FreeViaSC, 0, kSrcSC, true, {5, 4, 5});
  add("10", "xyxyx2y2x2yxy2x2yx2y2xy2", F(1, 1, 3), GroupStatus::FreeViaSC, 0, kSrcSC, true,
      {4, 5, 7});
  add("11", "xyxyx2y2x2yx2y2xy2xyx2y2", F(1, 1, 3), GroupStatus::FreeViaSC, 0, kSrcSC, true,
      {4, 5, 7});
  add("12", "xyxyx2y2xy2x2y2xyx2yx2y2", F(1, 1, 3), GroupStatus::FreeViaSC, 0, kSrcSC, true,
      {4, 6, 6});
  add("13", "xyxyx2y2x2y2xy2x2y2xyx2yx2y2", F(1, 0, 4), GroupStatus::FreeViaSC, 0, kSrcSC, true,
      {4, 4, 10});
  add("14", "xyxyx2y2xy2x2yxyx2y2x2yx2y2xy2", F(1, 1, 4), GroupStatus::FreeViaSC, 0, kSrcSC, true,
      {4, 8, 8});
  add("15", "xyxyx2y2x2y2xy2x2yx2y2x2yxyx2y2xy2", F(1, 0, 5), GroupStatus::FreeViaSC, 0, kSrcSC,
      true, {4, 4, 14});
  add("16", "xyxyx2y2x2yxy2xy2x2y2x2yxy2xyx2yx2y2x2yxy2", F(1, 1, 6), GroupStatus::FreeViaSC, 0,
      kSrcSC, true, {6, 9, 13});
  add("17", "xyxyx2y2x2yxy2xyx2yx2y2x2yxy2xy2x2y2x2yxy2", F(1, 1, 6), GroupStatus::FreeViaSC, 0,
      kSrcSC, true, {7, 14, 7});
  // the printed entry 18 is not equivalent to any word of the restricted
  // trace form; the word is recovered by lifting entry 18 of the (2,3) table,
  // whose class is the unique one among the four (1,1,6) classes that pushes
  // onto it. The subdivision below anchors the recovered word instead of the
  // unusable printed bracketing.
  {
    CatalogEntry e;
    e.id = "18";
    e.kase = Case::C332;
    e.word_text = "xyxyx2y2x2yx2yxy2xyx2y2xyxy2x2y2x2yx2y2xy2";
    e.printed_as = "xyxy2x2yxyx2y2xy2xyxy2x2y2x2yx2yxy2xyxy";
    e.tau = F(1, 1, 6);
    e.status = GroupStatus::FreeViaSC;
    e.source = kSrcSC;
    e.scc = true;
    e.bracket_lengths = {9, 6, 13};
    t.push_back(std::move(e));
  }
  // the printed bracketing of entry 19 starts with a piece (its first segment
  // also occurs in the inverse relator with a different completion); the word
  // itself is sound, so a valid subdivision found by the cut search is
  // recorded instead, offset 2 into the printed rotation
  add("19", "xyx2y2x2yx2y2xy2xyxy2x2y2x2yxy2x2yx2yxy2xy", F(1, 1, 6), GroupStatus::FreeViaSC, 0,
      kSrcSC, true, {11, 6, 11});
  t.back().bracket_start = 2;
  return t;
}

std::vector<CatalogEntry> build_232() {
  auto F = [](int a, int b, int c) { return TargetForm{Case::C232, a, b, c}; };
  std::vector<CatalogEntry> t;
  auto add = [&t](std::string id, int part, std::string word, TargetForm tau, GroupStatus st,
                  long long order, std::string source, std::vector<int> brackets,
                  std::string printed = {}) {
    CatalogEntry e;
    e.id = std::move(id);
    e.kase = Case::C232;
    e.word_text = std::move(word);
    e.printed_as = std::move(printed);
    e.tau = tau;
    e.status = st;
    e.finite_order = order;
    e.source = std::move(source);
    e.part = part;
    e.bracket_lengths = std::move(brackets);
    t.push_back(std::move(e));
  };

  // part 1: short words
  add("1a", 1, "uvuv", F(0, 1, 0), GroupStatus::Finite, 24, kSrcFiniteCited, {});
  add("1b", 1, "uvuv2", F(1, 0, 0), GroupStatus::Finite, 24, kSrcFiniteCited, {});
  add("2", 1, "uvuvuvuv2", F(0, 0, 1), GroupStatus::Finite, 120, kSrcFiniteCited, {});
  add("3", 1, "uvuvuv2uv2", F(1, 1, 0), GroupStatus::Finite, 576, kSrcFiniteCited, {});
  add("4a", 1, "uvuvuvuvuv2uv2", F(0, 1, 1), GroupStatus::Finite, 2880, kSrcFiniteCited, {});
  add("4b", 1, "uvuvuv2uv2uvuv2", F(1, 0, 1), GroupStatus::FreeCited, 0, kSrcIndex2, {});
  add("5", 1, "uvuvuvuvuv2uv2uvuv2", F(0, 0, 2), GroupStatus::AbelianByFinite, 0, kSrcAbelByFin,
      {});
  add("6", 1, "uvuvuvuv2uv2uvuv2uv2", F(1, 1, 1), GroupStatus::Finite, 424673280, kSrcFiniteCited,
      {});
  add("8", 1, "uvuvuvuvuv2uv2uv2uvuv2uvuvuv2", F(0, 0, 3), GroupStatus::Large, 0, kSrcLarge232,
      {});

  // part 2: small-cancellation words with their printed subdivisions
  add("9b", 2, "uvuvuvuvuv2uv2uvuv2uv2uvuv2uvuv2uv2", F(1, 0, 3), GroupStatus::FreeViaSC, 0,
      kSrcSC, {8, 10, 10});
  add("10", 2, "uvuvuvuvuv2uv2uv2uvuvuv2uv2uvuv2uv2uvuv2", F(1, 1, 3), GroupStatus::FreeViaSC, 0,
      kSrcSC, {8, 10, 14});
  add("11", 2, "uvuvuvuvuv2uv2uv2uvuv2uv2uvuv2uvuvuv2uv2", F(1, 1, 3), GroupStatus::FreeViaSC, 0,
      kSrcSC, {8, 10, 14});
  add("13b", 2, "uvuvuvuvuv2uv2uvuv2uv2uv2uvuv2uvuvuv2uvuv2uv2", F(1, 0, 4),
      GroupStatus::FreeViaSC, 0, kSrcSC, {8, 10, 18});
  add("14a", 2, "uvuvuvuvuv2uv2uvuv2uv2uvuvuvuv2uv2uv2uvuv2uv2uvuv2", F(1, 1, 4),
      GroupStatus::FreeViaSC, 0, kSrcSC, {8, 14, 18});
  add("14b", 2, "uvuvuvuvuv2uv2uv2uvuv2uv2uvuv2uv2uvuvuvuv2uv2uvuv2", F(1, 1, 4),
      GroupStatus::FreeViaSC, 0, kSrcSC, {8, 12, 20});
  add("15b", 2, "uvuvuvuvuv2uv2uvuv2uv2uvuv2uv2uv2uvuvuvuv2uvuv2uv2uvuv2", F(1, 0, 5),
      GroupStatus::FreeViaSC, 0, kSrcSC, {8, 12, 24});
  add("16", 2, "uvuvuvuvuv2uv2uv2uvuvuv2uvuv2uv2uv2uv2uvuvuv2uvuvuv2uvuv2uv2uv2uvuvuv2",
      F(1, 1, 6), GroupStatus::FreeViaSC, 0, kSrcSC, {12, 18, 26});
  add("17", 2, "uvuvuvuvuv2uv2uv2uvuvuv2uvuvuv2uvuv2uv2uv2uvuvuv2uvuv2uv2uv2uv2uvuvuv2",
      F(1, 1, 6), GroupStatus::FreeViaSC, 0, kSrcSC, {14, 28, 14});
  add("18", 2, "uv2uv2uv2uvuvuv2uv2uvuv2uv2uvuv2uvuvuvuv2uv2uv2uv2uvuv2uvuvuv2uvuvuvuv",
      F(1, 1, 6), GroupStatus::FreeViaSC, 0, kSrcSC, {14, 18, 24});
  add("19", 2, "uvuv2uvuvuv2uvuvuvuvuv2uv2uv2uvuv2uv2uvuv2uvuvuvuv2uv2uv2uv2uvuvuv2uv2",
      F(1, 1, 6), GroupStatus::FreeViaSC, 0, kSrcSC, {18, 22, 16});

  // part 3: open cases; entries 12 and 13a are stored with corrected words,
  // recovered from the search and the transfer of the (3,3) entries
  add("7a", 3, "uvuvuvuvuv2uv2uv2uvuvuv2", F(0, 1, 2), GroupStatus::Open, 0, kSrcOpen, {});
  add("7b", 3, "uvuvuvuv2uv2uvuv2uv2uvuv2", F(1, 0, 2), GroupStatus::Open, 0, kSrcOpen, {});
  add("9a", 3, "uvuvuvuvuvuv2uv2uv2uvuvuv2uvuv2uv2", F(0, 1, 3), GroupStatus::Open, 0, kSrcOpen,
      {});
  add("12", 3, "uvuvuvuvuv2uv2uvuv2uv2uv2uvuvuv2uvuv2uv2", F(1, 1, 3), GroupStatus::Open, 0,
      kSrcOpen, {}, "uvuvuvuvuv2vu2uvuv2uv2uv2uvuvuv2uvuv2uv2");
  add("13a", 3, "uvuvuvuvuv2uv2uv2uv2uvuv2uv2uv2uvuvuv2uvuv2uv2", F(0, 1, 4), GroupStatus::Open, 0,
      kSrcOpen, {}, "uvuvuvuvuv2uv2uv2uv2uvu2v2uv2uvuvuv2uvuv2uv2");
  add("15a", 3, "uvuvuvuvuv2uv2uv2uv2uvuv2uv2uvuv2uv2uv2uvuvuvuv2uv2uvuv2", F(0, 1, 5),
      GroupStatus::Open, 0, kSrcOpen, {});
  return t;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries(Case c) {
  static const std::vector<CatalogEntry> t332 = build_332();
  static const std::vector<CatalogEntry> t232 = build_232();
  return c == Case::C332 ? t332 : t232;
}

const CatalogEntry* find_by_id(Case c, const std::string& id) {
  for (const auto& e : catalog_entries(c)) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

namespace {

const std::map<CanonicalKey, const CatalogEntry*>& catalog_index(Case c) {
  static std::map<CanonicalKey, const CatalogEntry*> idx[2];
  static std::once_flag flags[2];
  int i = c == Case::C332 ? 0 : 1;
  std::call_once(flags[i], [&, c] {
    for (const auto& e : catalog_entries(c)) {
      auto key = canonicalize(e.word());
      if (!idx[i].emplace(key, &e).second) {
        throw std::logic_error("catalogue entries " + e.id + " not pairwise inequivalent");
      }
    }
  });
  return idx[i];
}

}  // namespace

const CatalogEntry* catalog_lookup(const Word& w) {
  const auto& idx = catalog_index(w.spec().to_case());
  auto it = idx.find(canonicalize(w));
  return it == idx.end() ? nullptr : it->second;
}

std::optional<std::vector<std::vector<int>>> appendix_lists(const TargetForm& f) {
  if (f.kase != Case::C232 || f.c < 1) return std::nullopt;
  using L = std::vector<std::vector<int>>;
  if (f.a == 0 && f.b == 0) {
    static const std::array<L, 3> lists = {
        L{{3, 1}}, L{{4, 1, 1, 2}}, L{{4, 3, 1, 1, 2, 1}}};
    return lists[static_cast<size_t>(f.c - 1)];
  }
  if (f.a == 1 && f.b == 0) {
    static const std::array<L, 6> lists = {
        L{{2, 1, 1, 2}},
        L{{3, 1, 1, 2, 1, 2}},
        L{{4, 2, 1, 1, 1, 2, 1, 2}},
        L{{4, 2, 1, 1, 2, 1, 1, 3, 1, 2}},
        L{{4, 2, 1, 2, 1, 3, 3, 1, 1, 2, 1, 1}},
        L{}};
    return lists[static_cast<size_t>(f.c - 1)];
  }
  if (f.a == 0 && f.b == 1) {
    static const std::array<L, 6> lists = {
        L{{4, 2}},
        L{{4, 3, 2, 1}},
        L{{5, 3, 2, 1, 1, 2}},
        L{{4, 4, 2, 1, 1, 2, 3, 1}},
        L{{4, 4, 1, 1, 2, 3, 3, 1, 2, 1}},
        L{}};
    return lists[static_cast<size_t>(f.c - 1)];
  }
  static const std::array<L, 9> lists = {
      L{{3, 2, 1, 2}},
      L{},
      L{{4, 2, 1, 1, 2, 3, 1, 2}, {4, 3, 1, 2, 1, 1, 2, 2}, {4, 3, 2, 2, 1, 2, 1, 1}},
      L{{4, 2, 1, 2, 3, 3, 1, 2, 1, 1}, {4, 3, 1, 2, 1, 2, 3, 2, 1, 1}},
      L{},
      L{{4, 2, 1, 2, 1, 1, 3, 2, 1, 4, 3, 2, 1, 1},
        {4, 1, 1, 2, 3, 1, 1, 2, 1, 2, 3, 4, 1, 2},
        {4, 3, 1, 1, 2, 1, 2, 2, 3, 4, 1, 2, 1, 1},
        {4, 3, 1, 1, 2, 1, 3, 4, 1, 2, 1, 1, 2, 2}},
      L{},
      L{},
      L{}};
  return lists[static_cast<size_t>(f.c - 1)];
}

Classification classify_word(const Word& w) {
  Classification out{Classification::Kind::FreeByTrace, nullptr, trace_polynomial(w), {}};
  Case c = w.spec().to_case();
  auto form = match_target(out.tau, c);
  if (!form && c == Case::C332) {
    form = match_target(twist_332(out.tau, static_cast<int>(w.pair_length())), c);
  }
  if (!form) return out;
  out.form = form;
  const CatalogEntry* entry = catalog_lookup(w);
  if (!entry) {
    out.kind = Classification::Kind::Anomaly;
    return out;
  }
  out.kind = Classification::Kind::Cataloged;
  out.entry = entry;
  return out;
}

VerifyReport verify_tables(Case c, const CaseResult& results) {
  VerifyReport rep;
  const auto& entries = catalog_entries(c);
  rep.expected = static_cast<int>(entries.size());

  std::map<CanonicalKey, const FoundClass*> by_key;
  for (const auto& fc : results.classes) by_key.emplace(fc.key, &fc);

  std::map<std::string, bool> entry_seen;
  for (const auto& e : entries) {
    Word w = e.word();
    CanonicalKey key = canonicalize(w);
    auto it = by_key.find(key);
    std::string line = "entry " + e.id + ": ";
    if (it == by_key.end()) {
      rep.mismatches.push_back("entry " + e.id + " not produced by the search");
      rep.lines.push_back(line + "MISSING");
      continue;
    }
    ++rep.matched;
    const FoundClass& fc = *it->second;
    entry_seen[fc.key.to_string()] = true;

    if (fc.form != e.tau) {
      rep.mismatches.push_back("entry " + e.id + ": form mismatch (search " +
                               fc.form.abc_string() + ", catalogue " + e.tau.abc_string() + ")");
    }
    if (fc.tau != expand_target(e.tau)) {
      rep.mismatches.push_back("entry " + e.id + ": trace polynomial mismatch");
    }
    line += "matched, tau = " + e.tau.factored_string();

    if (c == Case::C332) {
      bool has_cert = certify(w, Case::C332).has_value();
      if (has_cert != e.scc) {
        rep.mismatches.push_back("entry " + e.id + ": certificate " +
                                 (has_cert ? "found" : "absent") + " but catalogue says " +
                                 (e.scc ? "YES" : "NO"));
      }
      line += e.scc ? ", SCC=YES" : ", SCC=NO";
    } else {
      if (e.part == 2 || e.part == 3) {
        bool has_cert = certify(w, Case::C232).has_value();
        if (e.part == 2 && !has_cert) {
          rep.mismatches.push_back("entry " + e.id + ": part 2 word without a certificate");
        }
        if (e.part == 3 && has_cert) {
          // an unexpected certificate would strengthen the result; report it
          rep.notes.push_back("entry " + e.id + ": part 3 word unexpectedly certified");
        }
      }
      line += ", part " + std::to_string(e.part);
      if (e.status == GroupStatus::Finite) {
        line += ", order " + std::to_string(e.finite_order) + " (cited, not verified)";
      } else if (e.status == GroupStatus::Large || e.status == GroupStatus::AbelianByFinite) {
        line += std::string(", ") + status_name(e.status) + " (cited, not verified)";
      }
    }
    rep.lines.push_back(line);
  }

  for (const auto& fc : results.classes) {
    if (!entry_seen.count(fc.key.to_string())) {
      rep.mismatches.push_back("search produced a class not in the catalogue: " +
                               fc.key.to_string());
    }
  }

  if (c == Case::C232) {
    // published per-form class lists
    for (const auto& r : results.per_form) {
      auto lists = appendix_lists(r.form);
      if (!lists) continue;
      if (lists->size() != r.classes.size()) {
        rep.mismatches.push_back("form " + r.form.abc_string() + ": " +
                                 std::to_string(r.classes.size()) + " classes, published " +
                                 std::to_string(lists->size()));
        continue;
      }
      for (const auto& lst : *lists) {
        PairList pl;
        pl.runs = lst;
        CanonicalKey key = canonicalize(word_of_pairlist(pl, FactorSpec::z2z3()));
        bool found = false;
        for (const auto& fc : r.classes) found = found || fc.key == key;
        if (!found) {
          rep.mismatches.push_back("form " + r.form.abc_string() +
                                   ": published list not equivalent to any found class");
        }
      }
    }
  }

  rep.ok = rep.mismatches.empty() && rep.matched == rep.expected;
  return rep;
}

}  // namespace gtg
