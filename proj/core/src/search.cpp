#include "gtg/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "trace_kernel.hpp"

namespace gtg {

// ---------------------------------------------------------------------------
// combinatorics

uint64_t binomial(int n, int k) {
  static const auto table = [] {
    std::array<std::array<uint64_t, 65>, 65> t{};
    for (int i = 0; i <= 64; ++i) {
      t[static_cast<size_t>(i)][0] = 1;
      for (int j = 1; j <= i; ++j) {
        t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            t[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
            (j <= i - 1 ? t[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] : 0);
      }
    }
    return t;
  }();
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > 64) throw std::invalid_argument("binomial: n too large");
  return table[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

namespace {

// number of compositions of n into p positive parts
uint64_t composition_count(int n, int p) {
  if (p == 0) return n == 0 ? 1 : 0;
  if (n < p) return 0;
  return binomial(n - 1, p - 1);
}

// idx-th composition of n into p positive parts, lexicographic
void unrank_composition(int n, int p, uint64_t idx, int* out) {
  for (int i = 0; i < p - 1; ++i) {
    int v = 1;
    while (true) {
      uint64_t cnt = composition_count(n - v, p - i - 1);
      if (idx < cnt) break;
      idx -= cnt;
      ++v;
    }
    out[i] = v;
    n -= v;
  }
  out[p - 1] = n;
}

// lexicographic successor; false at the last composition
bool next_composition(int* a, int p) {
  if (p <= 1) return false;
  if (a[p - 1] > 1) {
    a[p - 2] += 1;
    a[p - 1] -= 1;
    return true;
  }
  int suffix = a[p - 1];
  for (int j = p - 2; j >= 1; --j) {
    suffix += a[j];
    if (suffix > p - 1 - (j - 1) - 1 + 1) {  // some element beyond j-1 exceeds 1
      // move one unit onto a[j-1], minimize the rest
      if (a[j] > 1 || suffix - a[j] > p - 1 - j) {
        a[j - 1] += 1;
        int rest = suffix - 1;
        for (int t = j; t < p - 1; ++t) {
          a[t] = 1;
          rest -= 1;
        }
        a[p - 1] = rest;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

uint64_t enumerate_pairlists_count(int n, int parts, int ones) {
  if (parts < 0 || ones < 0 || ones > parts || n < parts) return 0;
  int nb = parts - ones;
  uint64_t outer = nb == 0 ? (n == parts ? 1 : 0) : composition_count(n - parts, nb);
  return outer * binomial(parts, ones);
}

void enumerate_pairlists(int n, int parts, int ones,
                         const std::function<bool(const std::vector<int>&)>& sink) {
  if (parts <= 0 || ones < 0 || ones > parts || n < parts) return;
  int nb = parts - ones;
  uint64_t outer_total = nb == 0 ? (n == parts ? 1 : 0) : composition_count(n - parts, nb);
  std::vector<int> bigs(static_cast<size_t>(std::max(nb, 1)));
  std::vector<int> gaps(static_cast<size_t>(ones + 1));
  std::vector<int> list(static_cast<size_t>(parts));
  for (uint64_t oi = 0; oi < outer_total; ++oi) {
    if (nb > 0) unrank_composition(n - parts, nb, oi, bigs.data());
    std::fill(gaps.begin(), gaps.end(), 1);
    gaps.back() = parts + 1 - ones;
    while (true) {
      size_t pos = 0;
      size_t bi = 0;
      for (int j = 0; j <= ones; ++j) {
        for (int t = 1; t < gaps[static_cast<size_t>(j)]; ++t) {
          list[pos++] = bigs[bi++] + 1;
        }
        if (j < ones) list[pos++] = 1;
      }
      if (!sink(list)) return;
      if (!next_composition(gaps.data(), ones + 1)) break;
    }
  }
}

std::vector<int> crude_key(const std::vector<int>& list) {
  if (list.empty() || list.size() % 2 != 0) {
    throw std::invalid_argument("crude_key: list must have even positive length");
  }
  size_t len = list.size();
  std::vector<int> best = list;
  for (size_t r = 2; r < len; r += 2) {
    std::vector<int> rot(len);
    for (size_t i = 0; i < len; ++i) rot[i] = list[(i + r) % len];
    if (rot > best) best = rot;
  }
  return best;
}

std::optional<ShapeRule> shape_rule_for(const TargetForm& f) {
  int len, ones;
  if (f.a == 1 && f.b == 1) {
    len = 2 * f.c + 2;
    ones = f.c;
  } else if (f.a == 1 && f.b == 0) {
    len = 2 * f.c + 2;
    ones = f.c + 1;
  } else if (f.a == 0 && f.b == 1) {
    len = 2 * f.c;
    ones = f.c - 1;
  } else {
    len = 2 * f.c;
    ones = f.c;
  }
  if (len < 2 || ones < 0 || ones > len) return std::nullopt;
  return ShapeRule{f, len, ones};
}

// ---------------------------------------------------------------------------
// checkpointing

namespace {

struct CheckpointData {
  TargetForm form{Case::C232, 0, 0, 0};
  int64_t idx = -1;
  StageStats stats;
  std::vector<std::vector<int>> finds;
};

std::optional<CheckpointData> read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  CheckpointData d;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  long long a, b, c, idx;
  if (std::sscanf(line.c_str(), "form=%lld,%lld,%lld idx=%lld", &a, &b, &c, &idx) != 4) {
    return std::nullopt;
  }
  d.form = TargetForm{Case::C232, static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
  d.idx = idx;
  while (std::getline(in, line)) {
    if (line.rfind("stats=", 0) == 0) {
      unsigned long long s[5];
      if (std::sscanf(line.c_str(), "stats=%llu,%llu,%llu,%llu,%llu", &s[0], &s[1], &s[2], &s[3],
                      &s[4]) == 5) {
        d.stats = {s[0], s[1], s[2], s[3], s[4]};
      }
    } else if (line.rfind("class=", 0) == 0) {
      std::vector<int> lst;
      std::stringstream ss(line.substr(6));
      std::string tok;
      while (std::getline(ss, tok, ',')) lst.push_back(std::stoi(tok));
      if (!lst.empty()) d.finds.push_back(std::move(lst));
    }
  }
  return d;
}

void write_checkpoint_file(const std::string& path, const CheckpointData& d) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << "form=" << d.form.a << "," << d.form.b << "," << d.form.c << " idx=" << d.idx << "\n";
    out << "stats=" << d.stats.enumerated << "," << d.stats.after_crude << ","
        << d.stats.after_permrep << "," << d.stats.after_eval << "," << d.stats.exact << "\n";
    for (const auto& f : d.finds) {
      out << "class=";
      for (size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
      out << "\n";
    }
  }
  std::rename(tmp.c_str(), path.c_str());
}

// Hands out outer-composition indices, folds per-index results in index order
// so the checkpoint always reflects a contiguous completed prefix, and fires
// throttled progress reports.
class OuterManager {
 public:
  OuterManager(const TargetForm& form232, uint64_t outer_total, uint64_t inner_per_outer,
               const SearchOptions& opts, const CheckpointData* seed)
      : form_(form232), outer_total_(outer_total), inner_per_outer_(inner_per_outer), opts_(opts) {
    if (seed && seed->form == form_) {
      watermark_ = seed->idx;
      committed_ = seed->stats;
      finds_ = seed->finds;
    }
    next_.store(static_cast<uint64_t>(watermark_ + 1));
  }

  std::optional<uint64_t> next() {
    uint64_t i = next_.fetch_add(1);
    if (i >= outer_total_) return std::nullopt;
    return i;
  }

  void complete(uint64_t idx, const StageStats& delta, std::vector<std::vector<int>>&& finds) {
    std::lock_guard<std::mutex> lock(mu_);
    pending_.emplace(idx, Pending{delta, std::move(finds)});
    while (!pending_.empty() && pending_.begin()->first == static_cast<uint64_t>(watermark_ + 1)) {
      auto& p = pending_.begin()->second;
      committed_.enumerated += p.stats.enumerated;
      committed_.after_crude += p.stats.after_crude;
      committed_.after_permrep += p.stats.after_permrep;
      committed_.after_eval += p.stats.after_eval;
      committed_.exact += p.stats.exact;
      for (auto& f : p.finds) finds_.push_back(std::move(f));
      ++watermark_;
      pending_.erase(pending_.begin());
    }
    maybe_report_locked(false);
  }

  void finish() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!pending_.empty()) throw std::logic_error("search: incomplete fold");
    maybe_report_locked(true);
  }

  const StageStats& stats() const { return committed_; }
  const std::vector<std::vector<int>>& finds() const { return finds_; }

 private:
  struct Pending {
    StageStats stats;
    std::vector<std::vector<int>> finds;
  };

  void maybe_report_locked(bool final) {
    if (!opts_.checkpoint_path.empty()) {
      auto now = std::chrono::steady_clock::now();
      if (final || now - last_write_ > std::chrono::seconds(2)) {
        write_checkpoint_file(opts_.checkpoint_path, {form_, watermark_, committed_, finds_});
        last_write_ = now;
      }
    }
    if (opts_.progress &&
        (final || committed_.enumerated - last_progress_ >= 10000000ull)) {
      last_progress_ = committed_.enumerated;
      uint64_t total = outer_total_ * inner_per_outer_;
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "form=%d,%d,%d %llu/%llu candidates (%.1f%%), exact=%llu", form_.a, form_.b,
                    form_.c, static_cast<unsigned long long>(committed_.enumerated),
                    static_cast<unsigned long long>(total),
                    total ? 100.0 * static_cast<double>(committed_.enumerated) /
                                static_cast<double>(total)
                          : 100.0,
                    static_cast<unsigned long long>(committed_.exact));
      opts_.progress(buf);
    }
  }

  TargetForm form_;
  uint64_t outer_total_;
  uint64_t inner_per_outer_;
  const SearchOptions& opts_;
  std::mutex mu_;
  std::atomic<uint64_t> next_{0};
  int64_t watermark_ = -1;
  StageStats committed_;
  std::vector<std::vector<int>> finds_;
  std::map<uint64_t, Pending> pending_;
  std::chrono::steady_clock::time_point last_write_ = std::chrono::steady_clock::now();
  uint64_t last_progress_ = 0;
};

// ---------------------------------------------------------------------------
// the (2,3) pipeline

struct PipeCtx {
  TargetForm form;
  int n, parts, ones, nb;
  uint64_t inner_total;
  IntPoly target_poly;
  std::vector<uint64_t> eval_targets;
  const RepFilter* filter;
  // with more big entries than odd slots, a list led by a 1 cannot be
  // rotation-maximal; the whole gaps[0] = 1 prefix of the inner enumeration
  // is then skipped in one jump
  bool skip_head_one = false;
};

// rotation-maximality with the anchor set precomputed: only rotations whose
// leading entry equals list[0] can compete
bool rotation_max_at(const uint8_t* list, int len, const int* starts, int nstarts) {
  uint8_t dbl[128];
  std::memcpy(dbl, list, static_cast<size_t>(len));
  std::memcpy(dbl + len, list, static_cast<size_t>(len));
  for (int s = 0; s < nstarts; ++s) {
    const uint8_t* p = dbl + starts[s];
    for (int i = 1; i < len; ++i) {
      if (p[i] != list[i]) {
        if (p[i] > list[i]) return false;
        break;
      }
    }
  }
  return true;
}

void process_outer(const PipeCtx& ctx, uint64_t oidx, StageStats& st,
                   std::vector<std::vector<int>>& finds) {
  int bigs[64];
  unrank_composition(ctx.n - ctx.parts, ctx.nb, oidx, bigs);
  int gaps[64];
  if (ctx.skip_head_one && ctx.ones >= 1) {
    gaps[0] = 2;
    for (int j = 1; j < ctx.ones; ++j) gaps[j] = 1;
    gaps[ctx.ones] = ctx.parts - ctx.ones;
  } else {
    for (int j = 0; j < ctx.ones; ++j) gaps[j] = 1;
    gaps[ctx.ones] = ctx.parts + 1 - ctx.ones;
  }

  uint8_t list[64];
  uint8_t codes[64];
  int starts[32];
  const int parts = ctx.parts;
  const int n = ctx.n;

  while (true) {
    // build the list, aborting as soon as an even-position entry exceeds the
    // head (such a list cannot be rotation-maximal)
    const uint8_t head = gaps[0] > 1 ? static_cast<uint8_t>(bigs[0] + 1) : 1;
    int nstarts = 0;
    int pos = 0;
    int bi = 0;
    bool viable = true;
    for (int j = 0; j <= ctx.ones && viable; ++j) {
      for (int t = 1; t < gaps[j]; ++t) {
        uint8_t v = static_cast<uint8_t>(bigs[bi++] + 1);
        if ((pos & 1) == 0 && pos > 0) {
          if (v > head) {
            viable = false;
            break;
          }
          if (v == head) starts[nstarts++] = pos;
        }
        list[pos++] = v;
      }
      if (j < ctx.ones && viable) {
        if ((pos & 1) == 0 && pos > 0) {
          if (1 > head) {
            viable = false;
            break;
          }
          if (head == 1) starts[nstarts++] = pos;
        }
        list[pos++] = 1;
      }
    }

    if (viable && rotation_max_at(list, parts, starts, nstarts)) {
      ++st.after_crude;
      int kk = 0;
      for (int i = 0; i < parts; ++i) {
        uint8_t fill = static_cast<uint8_t>(i & 1);
        for (int t = 0; t < list[i]; ++t) codes[kk++] = fill;
      }
      if (ctx.filter->passes_codes(codes, n)) {
        ++st.after_permrep;
        bool ok = true;
        for (int j = 0; j <= n; ++j) {
          if (kernel::eval_fold_wrap(Case::C232, codes, n, static_cast<uint64_t>(2 + j)) !=
              ctx.eval_targets[static_cast<size_t>(j)]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          ++st.after_eval;
          std::vector<uint8_t> gamma(static_cast<size_t>(n));
          for (int i = 0; i < n; ++i) gamma[static_cast<size_t>(i)] = static_cast<uint8_t>(codes[i] + 1);
          Word w = word_from_gamma(gamma, FactorSpec::z2z3());
          if (trace_polynomial(w) == ctx.target_poly) {
            ++st.exact;
            finds.emplace_back(list, list + parts);
          }
        }
      }
    }
    if (!next_composition(gaps, ctx.ones + 1)) break;
  }
  st.enumerated += ctx.inner_total;
}

std::vector<FoundClass> fold_finds_232(const std::vector<std::vector<int>>& finds,
                                       const TargetForm& form, const IntPoly& target_poly) {
  std::map<CanonicalKey, FoundClass> classes;
  for (const auto& lst : finds) {
    PairList pl;
    pl.runs = lst;
    Word w = word_of_pairlist(pl, FactorSpec::z2z3());
    CanonicalKey key = canonicalize(w);
    if (classes.count(key)) continue;
    Word canon = key.word();
    FoundClass fc{key, canon, pairlist_of_word(rotate_to_pair_normal(canon)), target_poly, form};
    classes.emplace(key, std::move(fc));
  }
  std::vector<FoundClass> out;
  out.reserve(classes.size());
  for (auto& [k, v] : classes) out.push_back(std::move(v));
  return out;
}

SearchResult brute_small_232(const TargetForm& form) {
  SearchResult res;
  res.form = form;
  int k = form.degree();
  if (k <= 0 || k > 20) throw std::logic_error("brute-force path expects a small form");
  IntPoly target = expand_target(form);
  std::vector<std::vector<int>> finds;
  uint64_t total = 1ull << k;
  for (uint64_t bits = 0; bits < total; ++bits) {
    std::vector<uint8_t> gamma(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) gamma[static_cast<size_t>(i)] = static_cast<uint8_t>(1 + ((bits >> i) & 1));
    Word w = word_from_gamma(gamma, FactorSpec::z2z3());
    if (trace_polynomial(w) == target) {
      ++res.stats.exact;
      CanonicalKey key = canonicalize(w);
      Word canon = key.word();
      bool dup = false;
      for (const auto& c : res.classes) dup = dup || c.key == key;
      if (!dup) {
        res.classes.push_back(FoundClass{
            key, canon, pairlist_of_word(rotate_to_pair_normal(canon)), target, form});
      }
    }
  }
  res.stats.enumerated = total;
  res.stats.after_crude = total;
  res.stats.after_permrep = total;
  res.stats.after_eval = total;
  std::sort(res.classes.begin(), res.classes.end(),
            [](const FoundClass& a, const FoundClass& b) { return a.key < b.key; });
  return res;
}

SearchResult run_case_232(const TargetForm& form, const SearchOptions& opts,
                          const CheckpointData* seed) {
  auto rule = shape_rule_for(form);
  if (form.c == 0 || !rule) return brute_small_232(form);

  SearchResult res;
  res.form = form;
  PipeCtx ctx;
  ctx.form = form;
  ctx.n = form.degree();
  ctx.parts = rule->list_length;
  ctx.ones = rule->ones_count;
  ctx.nb = ctx.parts - ctx.ones;
  ctx.inner_total = binomial(ctx.parts, ctx.ones);
  ctx.target_poly = expand_target(form);
  for (int j = 0; j <= ctx.n; ++j) {
    ctx.eval_targets.push_back(ctx.target_poly.eval_wrap(static_cast<uint64_t>(2 + j)));
  }
  RepFilter filter(requirements_of(form));
  ctx.filter = &filter;
  ctx.skip_head_one = ctx.nb > ctx.parts / 2;

  uint64_t outer_total = composition_count(ctx.n - ctx.parts, ctx.nb);
  OuterManager mgr(form, outer_total, ctx.inner_total, opts, seed);

  auto worker = [&mgr, &ctx] {
    while (auto idx = mgr.next()) {
      StageStats st;
      std::vector<std::vector<int>> finds;
      process_outer(ctx, *idx, st, finds);
      mgr.complete(*idx, st, std::move(finds));
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  mgr.finish();

  res.stats = mgr.stats();
  res.classes = fold_finds_232(mgr.finds(), form, ctx.target_poly);
  return res;
}

SearchResult run_case_332(const TargetForm& form, const SearchOptions& opts,
                          const CheckpointData* seed) {
  // the coefficient rules live in the (2,3) framework: search the transferred
  // form of doubled degree, then lift both parities back
  TargetForm inner{Case::C232, form.b, form.a, form.c};
  SearchResult base = run_case_232(inner, opts, seed);

  SearchResult res;
  res.form = form;
  res.stats = base.stats;
  IntPoly form_poly = expand_target(form);
  std::map<CanonicalKey, FoundClass> classes;
  for (const auto& fc : base.classes) {
    for (int parity : {0, 1}) {
      Word lifted = lift_232_to_332(fc.word, parity);
      CanonicalKey key = canonicalize(lifted);
      if (classes.count(key)) continue;
      Word canon = key.word();
      IntPoly tau = trace_polynomial(canon);
      if (tau != form_poly &&
          twist_332(tau, static_cast<int>(canon.pair_length())) != form_poly) {
        throw std::logic_error("lifted class trace does not match the requested form");
      }
      classes.emplace(key, FoundClass{key, canon,
                                      pairlist_of_word(rotate_to_pair_normal(push_332_to_232(canon))),
                                      form_poly, form});
    }
  }
  for (auto& [k, v] : classes) res.classes.push_back(std::move(v));
  return res;
}

}  // namespace

namespace {

std::optional<CheckpointData> load_resume(const SearchOptions& opts) {
  if (!opts.resume || opts.checkpoint_path.empty()) return std::nullopt;
  return read_checkpoint(opts.checkpoint_path);
}

}  // namespace

SearchResult run_case(Case c, const TargetForm& form, const SearchOptions& opts) {
  if (form.kase != c) throw std::invalid_argument("run_case: form does not belong to the case");
  auto seed = load_resume(opts);
  const CheckpointData* sp = seed ? &*seed : nullptr;
  return c == Case::C232 ? run_case_232(form, opts, sp) : run_case_332(form, opts, sp);
}

CaseResult run_all(Case c, const SearchOptions& opts) {
  CaseResult out;
  out.kase = c;
  // read the resume data once: later forms rewrite the checkpoint file while
  // they run, which must not erase the state of the form being resumed
  auto seed = load_resume(opts);
  std::map<CanonicalKey, FoundClass> classes;
  for (const auto& f : target_forms(c)) {
    if (opts.max_c && f.c > *opts.max_c) continue;
    TargetForm enumerated = c == Case::C232 ? f : TargetForm{Case::C232, f.b, f.a, f.c};
    const CheckpointData* sp = seed && seed->form == enumerated ? &*seed : nullptr;
    SearchResult r =
        c == Case::C232 ? run_case_232(f, opts, sp) : run_case_332(f, opts, sp);
    for (const auto& fc : r.classes) {
      auto it = classes.find(fc.key);
      if (it == classes.end()) {
        classes.emplace(fc.key, fc);
      } else if (c == Case::C332) {
        // the same (3,3) class can match both a<->b twists; present a >= b
        if (fc.form.a >= fc.form.b && it->second.form.a < it->second.form.b) {
          it->second = fc;
        }
      } else {
        throw std::logic_error("duplicate class across distinct (2,3) forms");
      }
    }
    out.per_form.push_back(std::move(r));
  }
  out.classes.reserve(classes.size());
  for (auto& [k, v] : classes) out.classes.push_back(std::move(v));
  return out;
}

// ---------------------------------------------------------------------------
// brute-force oracle

namespace {

int64_t horner_int(const kernel::EPoly& t, int64_t x) {
  int64_t r = 0;
  for (int i = t.n; i-- > 0;) r = r * x + t.re[i];
  return r;
}

}  // namespace

std::vector<std::pair<CanonicalKey, IntPoly>> brute_force_oracle(Case c, int max_k) {
  if (max_k < 0 || max_k > 14) {
    throw std::invalid_argument("brute_force_oracle: max_k must be at most 14");
  }
  std::map<CanonicalKey, IntPoly> found;

  if (c == Case::C232) {
    for (int k = 1; k <= max_k; ++k) {
      std::vector<uint8_t> gamma(static_cast<size_t>(k));
      for (uint64_t bits = 0; bits < (1ull << k); ++bits) {
        for (int i = 0; i < k; ++i) {
          gamma[static_cast<size_t>(i)] = static_cast<uint8_t>(1 + ((bits >> i) & 1));
        }
        Word w = word_from_gamma(gamma, FactorSpec::z2z3());
        IntPoly tau = trace_polynomial(w);
        if (match_target(tau, Case::C232)) {
          found.emplace(canonicalize(w), std::move(tau));
        }
      }
    }
    return {found.begin(), found.end()};
  }

  // (3,3): depth-first over x^a y^b pair codes with cached prefix products
  for (int k = 1; k <= max_k; ++k) {
    std::vector<kernel::EMat> stack(static_cast<size_t>(k) + 1);
    kernel::mat_init_identity(stack[0]);
    std::vector<uint8_t> codes(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int d) -> void {
      if (d == k) {
        kernel::EPoly t;
        kernel::trace_into(stack[static_cast<size_t>(k)], t);
        for (int i = 0; i < t.n; ++i) {
          if (t.om[i] != 0) throw std::logic_error("oracle: nonzero w-component");
        }
        // necessary values of any matching form: tau(2) = 2^a, |tau(-1)| = 2^b
        int64_t v2 = horner_int(t, 2);
        if (v2 != 1 && v2 != 2) return;
        int64_t vm1 = horner_int(t, -1);
        if (vm1 < -2 || vm1 > 2 || vm1 == 0) return;
        std::vector<BigInt> coeffs(static_cast<size_t>(t.n));
        for (int i = 0; i < t.n; ++i) coeffs[static_cast<size_t>(i)] = BigInt(t.re[i]);
        IntPoly tau{std::move(coeffs)};
        auto m = match_target(tau, Case::C332);
        if (!m) return;
        std::vector<uint8_t> exps(static_cast<size_t>(2 * k));
        for (int i = 0; i < k; ++i) {
          exps[static_cast<size_t>(2 * i)] = static_cast<uint8_t>(codes[static_cast<size_t>(i)] / 2 + 1);
          exps[static_cast<size_t>(2 * i + 1)] = static_cast<uint8_t>(codes[static_cast<size_t>(i)] % 2 + 1);
        }
        Word w = word_from_exponents(exps, FactorSpec::z3z3());
        IntPoly norm = m->a >= m->b ? tau : twist_332(tau, k);
        found.emplace(canonicalize(w), std::move(norm));
        return;
      }
      for (uint8_t code = 0; code < 4; ++code) {
        codes[static_cast<size_t>(d)] = code;
        kernel::mat_step(stack[static_cast<size_t>(d) + 1], stack[static_cast<size_t>(d)],
                         kernel::kPair332[code]);
        self(self, d + 1);
      }
    };
    rec(rec, 0);
  }
  return {found.begin(), found.end()};
}

}  // namespace gtg
