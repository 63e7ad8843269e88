// gtg: trace polynomials, word search and small-cancellation certificates for
// generalized triangle groups of types (3,3,2) and (2,3,2).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "gtg/catalog.hpp"
#include "gtg/io.hpp"
#include "gtg/search.hpp"
#include "gtg/smallcancel.hpp"

namespace {

using gtg::io::Json;

enum class Format { Json, Csv, Text };

struct GlobalOpts {
  std::string case_name;
  Format format = Format::Text;
  int jobs = 0;
  unsigned long long seed = 0;
  std::string checkpoint;
  bool resume = false;
  bool progress = false;
  bool pretty = false;
};

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::optional<gtg::Case> selected_case(const GlobalOpts& g) {
  if (g.case_name.empty()) return std::nullopt;
  return gtg::case_from_name(g.case_name);
}

gtg::Case require_case(const GlobalOpts& g) {
  auto c = selected_case(g);
  if (!c) throw CLI::ValidationError("--case", "this command needs --case 332 or --case 232");
  return *c;
}

gtg::Word parse_input_word(const std::string& text, const GlobalOpts& g) {
  std::optional<gtg::FactorSpec> expected;
  if (auto c = selected_case(g)) expected = gtg::FactorSpec::of_case(*c);
  return gtg::parse_word(text, expected);
}

int jobs_of(const GlobalOpts& g) {
  if (g.jobs > 0) return g.jobs;
  if (const char* env = std::getenv("GTG_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

gtg::SearchOptions search_options(const GlobalOpts& g, std::optional<int> max_c) {
  gtg::SearchOptions opts;
  opts.jobs = jobs_of(g);
  opts.max_c = max_c;
  opts.checkpoint_path = g.checkpoint;
  opts.resume = g.resume;
  if (g.progress) {
    opts.progress = [](const std::string& line) { std::fprintf(stderr, "%s\n", line.c_str()); };
  }
  return opts;
}

void emit(const GlobalOpts& g, const Json& doc, const std::string& text_form,
          const std::string& csv_form) {
  switch (g.format) {
    case Format::Json: std::cout << doc.dump(2) << "\n"; break;
    case Format::Csv: std::cout << csv_form; break;
    case Format::Text: std::cout << text_form; break;
  }
}

// ---------------------------------------------------------------------------

int cmd_trace(const GlobalOpts& g, const std::string& text) {
  gtg::Word w = parse_input_word(text, g);
  gtg::Case c = w.spec().to_case();
  gtg::IntPoly tau = gtg::trace_polynomial(w);
  auto form = gtg::match_target(tau, c);

  Json payload{{"word", w.to_string(g.pretty)},
               {"k", w.pair_length()},
               {"tau", gtg::io::poly_json(tau)}};
  payload["form"] = form ? gtg::io::form_json(*form) : Json(nullptr);
  if (form) {
    // audit: the essential finite representations forced by the form
    if (auto ws = gtg::passes_filter(w, gtg::requirements_of(*form))) {
      payload["witnesses"] = gtg::io::witness_json(*ws);
    }
  }

  std::string txt = "word: " + w.to_string(g.pretty) + "\nk: " +
                    std::to_string(w.pair_length()) + "\ntau: " + tau.to_string() + "\n";
  txt += form ? "form: (" + form->abc_string() + ") = " + form->factored_string() + "\n"
              : "form: none (trace polynomial forces a free subgroup)\n";
  std::string csv = "word,k,form,tau\n" + w.to_string() + "," +
                    std::to_string(w.pair_length()) + "," +
                    (form ? form->abc_string() : std::string("none")) + "," +
                    gtg::io::poly_csv(tau) + "\n";
  emit(g, gtg::io::document("trace", c, payload), txt, csv);
  return kExitOk;
}

int cmd_canon(const GlobalOpts& g, const std::string& text) {
  gtg::Word w = parse_input_word(text, g);
  auto key = gtg::canonicalize(w);
  auto orbit = gtg::equivalence_orbit(w);
  Json payload{{"word", w.to_string(g.pretty)},
               {"canonical", key.word().to_string(g.pretty)},
               {"orbit_size", orbit.size()}};
  std::string txt = "canonical: " + key.word().to_string(g.pretty) + "\norbit size: " +
                    std::to_string(orbit.size()) + "\n";
  std::string csv = "word,canonical,orbit_size\n" + w.to_string() + "," + key.to_string() + "," +
                    std::to_string(orbit.size()) + "\n";
  emit(g, gtg::io::document("canon", w.spec().to_case(), payload), txt, csv);
  return kExitOk;
}

int cmd_equiv(const GlobalOpts& g, const std::string& t1, const std::string& t2) {
  gtg::Word a = parse_input_word(t1, g);
  if (t2.empty()) {
    auto orbit = gtg::equivalence_orbit(a);
    Json arr = Json::array();
    std::string txt;
    std::string csv = "member\n";
    for (const auto& m : orbit) {
      arr.push_back(m.to_string());
      txt += m.to_string() + "\n";
      csv += m.to_string() + "\n";
    }
    emit(g, gtg::io::document("equiv", a.spec().to_case(), Json{{"orbit", arr}}), txt, csv);
    return kExitOk;
  }
  gtg::Word b = parse_input_word(t2, g);
  bool eq = gtg::equivalent(a, b);
  Json payload{{"first", a.to_string()}, {"second", b.to_string()}, {"equivalent", eq}};
  emit(g, gtg::io::document("equiv", a.spec().to_case(), payload),
       std::string(eq ? "equivalent" : "not equivalent") + "\n",
       std::string("equivalent\n") + (eq ? "true" : "false") + "\n");
  return kExitOk;
}

int cmd_classify(const GlobalOpts& g, const std::string& text) {
  gtg::Word w = parse_input_word(text, g);
  auto cls = gtg::classify_word(w);
  Json payload = gtg::io::classification_json(cls);
  payload["word"] = w.to_string();

  std::string txt = "word: " + w.to_string() + "\n";
  switch (cls.kind) {
    case gtg::Classification::Kind::FreeByTrace:
      txt += "verdict: contains a rank-2 free subgroup (trace polynomial is not of the restricted form)\n";
      break;
    case gtg::Classification::Kind::Cataloged:
      txt += "verdict: " + std::string(gtg::status_name(cls.entry->status));
      if (cls.entry->status == gtg::GroupStatus::Finite) {
        txt += " of order " + std::to_string(cls.entry->finite_order);
      }
      txt += " (entry " + cls.entry->id + ")\nsource: " + cls.entry->source + "\n";
      break;
    case gtg::Classification::Kind::Anomaly:
      txt += "verdict: anomaly (matching trace polynomial but no catalogue entry)\n";
      break;
  }
  txt += "tau: " + cls.tau.to_string() + "\n";
  std::string csv = "word,verdict,tau\n" + w.to_string() + "," +
                    payload["verdict"].get<std::string>() + "," + gtg::io::poly_csv(cls.tau) + "\n";
  emit(g, gtg::io::document("classify", w.spec().to_case(), payload), txt, csv);
  return kExitOk;
}

int cmd_sc_cert(const GlobalOpts& g, const std::string& text, const std::string& verify_path,
                const std::vector<int>& subdivision, bool all_mode) {
  if (all_mode && verify_path.empty()) {
    gtg::Word w = parse_input_word(text, g);
    gtg::Case c = w.spec().to_case();
    auto subs = gtg::all_subdivisions(w, gtg::ell_of(c));
    Json arr = Json::array();
    std::string txt;
    for (const auto& s : subs) {
      arr.push_back(Json::array({s[0], s[1], s[2]}));
      txt += "  " + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
             std::to_string(s[2]) + "\n";
    }
    Json payload{{"word", w.to_string()},
                 {"ell", gtg::ell_of(c)},
                 {"subdivision_count", subs.size()},
                 {"subdivisions", arr}};
    txt = std::to_string(subs.size()) + " valid subdivision(s) at ell = " +
          std::to_string(gtg::ell_of(c)) + "\n" + txt;
    emit(g, gtg::io::document("sc-cert-all", c, payload), txt,
         "subdivision_count\n" + std::to_string(subs.size()) + "\n");
    return kExitOk;
  }
  if (!verify_path.empty()) {
    std::ifstream in(verify_path);
    if (!in) {
      std::cerr << "cannot open " << verify_path << "\n";
      return kExitUsage;
    }
    Json j = Json::parse(in, nullptr, true);
    gtg::SCCertificate cert = gtg::io::cert_from_json(j);
    auto problems = gtg::verify_certificate(cert);
    bool ok = problems.empty();
    Json payload{{"valid", ok}, {"problems", problems}};
    std::string txt = ok ? "certificate valid\n" : "certificate INVALID\n";
    for (const auto& p : problems) txt += "  - " + p + "\n";
    emit(g, gtg::io::document("sc-cert-verify", cert.kase, payload), txt,
         std::string("valid\n") + (ok ? "true" : "false") + "\n");
    return ok ? kExitOk : kExitMismatch;
  }

  gtg::Word w = parse_input_word(text, g);
  gtg::Case c = w.spec().to_case();
  std::optional<gtg::SCCertificate> cert;
  if (!subdivision.empty()) {
    if (subdivision.size() != 3) {
      throw CLI::ValidationError("--subdivision", "expects three cut positions i1,i2,i3");
    }
    std::array<int, 3> cuts{subdivision[0], subdivision[1], subdivision[2]};
    std::string why;
    if (!gtg::subdivision_valid(w, cuts, gtg::ell_of(c), &why)) {
      Json payload{{"certified", false}, {"reason", why}};
      emit(g, gtg::io::document("sc-cert", c, payload), "no certificate: " + why + "\n",
           "certified\nfalse\n");
      return kExitMismatch;
    }
    cert = gtg::certify_with_cuts(w, c, cuts);
  } else {
    cert = gtg::certify(w, c);
  }

  if (!cert) {
    Json payload{{"certified", false}};
    emit(g, gtg::io::document("sc-cert", c, payload),
         "no certificate: no subdivision into three non-pieces of length >= " +
             std::to_string(gtg::ell_of(c)) + "\n",
         "certified\nfalse\n");
    return kExitOk;
  }
  Json payload{{"certified", true}, {"certificate", gtg::io::cert_json(*cert)}};
  std::string txt = "certificate found (ell = " + std::to_string(gtg::ell_of(c)) + ")\n";
  txt += "  word: " + cert->word.to_string() + "\n";
  txt += "  cuts: " + std::to_string(cert->cuts[0]) + "," + std::to_string(cert->cuts[1]) + "," +
         std::to_string(cert->cuts[2]) + "\n";
  for (int i = 0; i < 3; ++i) {
    auto seg = gtg::cyclic_segment(cert->word, cert->cuts[static_cast<size_t>(i)],
                                   cert->segment_lengths[static_cast<size_t>(i)]);
    txt += "  U" + std::to_string(i + 1) + ": " + gtg::syllables_to_string(seg, w.spec()) + "\n";
  }
  txt += "  A: " + cert->a.to_string() + "\n  B: " + cert->b.to_string() + "\n";
  txt += "  N: " + std::to_string(cert->n) + "\n";
  txt += "  X: " + cert->gen_x + "\n  Y: " + cert->gen_y + "\n";
  emit(g, gtg::io::document("sc-cert", c, payload), txt,
       "certified\ntrue\n");
  return kExitOk;
}

std::string search_text(const gtg::CaseResult& r) {
  std::string txt;
  for (const auto& f : r.per_form) {
    txt += "form (" + f.form.abc_string() + ") " + f.form.factored_string() + ": " +
           std::to_string(f.classes.size()) + " class(es)\n";
    for (const auto& cls : f.classes) {
      txt += "  " + cls.key.to_string() + "  L=" + cls.pairs.to_string() + "\n";
    }
  }
  txt += "total: " + std::to_string(r.classes.size()) + " equivalence classes\n";
  return txt;
}

std::string search_csv(const gtg::CaseResult& r) {
  std::string csv = "form,canonical,pairlist,tau\n";
  for (const auto& cls : r.classes) {
    csv += cls.form.abc_string() + "," + cls.key.to_string() + "," +
           gtg::io::csv_field(cls.pairs.to_string()) + "," + gtg::io::poly_csv(cls.tau) + "\n";
  }
  return csv;
}

int cmd_search(const GlobalOpts& g, bool all, const std::string& form_text,
               std::optional<int> max_c) {
  gtg::Case c = require_case(g);
  auto opts = search_options(g, max_c);
  if (!all && form_text.empty()) {
    throw CLI::ValidationError("search", "pass --all or --form a,b,c");
  }
  if (!form_text.empty()) {
    int a, b, cc;
    if (std::sscanf(form_text.c_str(), "%d,%d,%d", &a, &b, &cc) != 3) {
      throw CLI::ValidationError("--form", "expects a,b,c");
    }
    gtg::TargetForm form{c, a, b, cc};
    gtg::SearchResult r = gtg::run_case(c, form, opts);
    gtg::CaseResult cr;
    cr.kase = c;
    cr.per_form.push_back(r);
    cr.classes = r.classes;
    emit(g, gtg::io::document("search", c, gtg::io::case_result_json(cr)), search_text(cr),
         search_csv(cr));
    return kExitOk;
  }
  gtg::CaseResult r = gtg::run_all(c, opts);
  emit(g, gtg::io::document("search", c, gtg::io::case_result_json(r)), search_text(r),
       search_csv(r));
  return kExitOk;
}

int cmd_verify_tables(const GlobalOpts& g) {
  gtg::Case c = require_case(g);
  gtg::CaseResult r = gtg::run_all(c, search_options(g, std::nullopt));
  gtg::VerifyReport rep = gtg::verify_tables(c, r);
  std::string txt;
  for (const auto& l : rep.lines) txt += l + "\n";
  for (const auto& n : rep.notes) txt += "note: " + n + "\n";
  for (const auto& m : rep.mismatches) txt += "MISMATCH: " + m + "\n";
  txt += std::to_string(rep.matched) + "/" + std::to_string(rep.expected) + " classes matched\n";
  std::string csv = "line\n";
  for (const auto& l : rep.lines) csv += gtg::io::csv_field(l) + "\n";
  emit(g, gtg::io::document("verify-tables", c, gtg::io::verify_report_json(rep)), txt, csv);
  return rep.ok ? kExitOk : kExitMismatch;
}

int cmd_oracle(const GlobalOpts& g, int max_k) {
  gtg::Case c = require_case(g);
  auto classes = gtg::brute_force_oracle(c, max_k);
  Json arr = Json::array();
  std::string txt;
  std::string csv = "canonical,tau\n";
  for (const auto& [key, tau] : classes) {
    arr.push_back(Json{{"canonical", key.to_string()}, {"tau", gtg::io::poly_json(tau)}});
    txt += key.to_string() + "  tau = " + tau.to_string() + "\n";
    csv += key.to_string() + "," + gtg::io::poly_csv(tau) + "\n";
  }
  txt += std::to_string(classes.size()) + " classes with k <= " + std::to_string(max_k) + "\n";
  emit(g, gtg::io::document("oracle", c, Json{{"max_k", max_k}, {"classes", arr}}), txt, csv);
  return kExitOk;
}

int cmd_catalog(const GlobalOpts& g) {
  gtg::Case c = require_case(g);
  Json arr = Json::array();
  std::string txt;
  std::string csv = "id,part,word,form,status,order,source\n";
  for (const auto& e : gtg::catalog_entries(c)) {
    arr.push_back(gtg::io::catalog_entry_json(e));
    txt += e.id + ": " + e.word_text + "\n    tau = " + e.tau.factored_string() +
           ", status = " + gtg::status_name(e.status);
    if (e.status == gtg::GroupStatus::Finite) txt += " (order " + std::to_string(e.finite_order) + ")";
    txt += "\n";
    csv += e.id + "," + std::to_string(e.part) + "," + e.word_text + ",(" + e.tau.abc_string() +
           ")," + gtg::status_name(e.status) + "," +
           (e.status == gtg::GroupStatus::Finite ? std::to_string(e.finite_order) : "") + "," +
           gtg::io::csv_field(e.source) + "\n";
  }
  emit(g, gtg::io::document("catalog", c, Json{{"entries", arr}}), txt, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized triangle group toolkit: trace polynomials, word search, "
               "small-cancellation certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--case", g.case_name, "group case: 332 or 232")
      ->check(CLI::IsMember({"332", "232"}));
  std::string fmt = "text";
  app.add_option("--format", fmt, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", g.jobs, "worker threads (default: GTG_JOBS or hardware)");
  app.add_option("--seed", g.seed, "seed for randomized operations (reserved)");
  app.add_option("--checkpoint", g.checkpoint, "checkpoint file for long searches");
  app.add_flag("--resume", g.resume, "resume from the checkpoint file");
  app.add_flag("--progress", g.progress, "print progress to stderr");
  app.add_flag("--pretty", g.pretty, "write exponents as ^2 in word output");

  std::string word_arg, word_arg2, verify_path, form_text;
  std::vector<int> subdivision;
  bool search_all = false;
  bool cert_all = false;
  int max_k = 8;
  std::optional<int> max_c;
  int max_c_raw = -1;

  auto* trace = app.add_subcommand("trace", "trace polynomial of a word");
  trace->add_option("word", word_arg, "the word")->required();

  auto* canon = app.add_subcommand("canon", "canonical form of a word");
  canon->add_option("word", word_arg, "the word")->required();

  auto* equiv = app.add_subcommand("equiv", "equivalence orbit, or test two words");
  equiv->add_option("word", word_arg, "the word")->required();
  equiv->add_option("other", word_arg2, "optional second word");

  auto* classify = app.add_subcommand("classify", "classify a word via trace polynomial and catalogue");
  classify->add_option("word", word_arg, "the word")->required();

  auto* sc = app.add_subcommand("sc-cert", "small-cancellation certificate");
  sc->add_option("word", word_arg, "the word");
  sc->add_option("--verify", verify_path, "verify a certificate JSON file");
  sc->add_option("--subdivision", subdivision, "comma-separated cut positions i1,i2,i3")
      ->delimiter(',');
  sc->add_flag("--all", cert_all, "list every valid subdivision instead of certifying");

  auto* search = app.add_subcommand("search", "exhaustive search for target-form words");
  search->add_flag("--all", search_all, "search every target form");
  search->add_option("--form", form_text, "single form a,b,c");
  search->add_option("--max-c", max_c_raw, "limit forms to c <= max-c");

  auto* verify = app.add_subcommand("verify-tables", "search and verify against the catalogue");

  auto* oracle = app.add_subcommand("oracle", "brute-force oracle up to a pair length");
  oracle->add_option("--max-k", max_k, "maximum pair length (<= 14)");

  auto* cat = app.add_subcommand("catalog", "print the embedded catalogue");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  g.format = fmt == "json" ? Format::Json : (fmt == "csv" ? Format::Csv : Format::Text);
  if (max_c_raw >= 0) max_c = max_c_raw;

  try {
    if (trace->parsed()) return cmd_trace(g, word_arg);
    if (canon->parsed()) return cmd_canon(g, word_arg);
    if (equiv->parsed()) return cmd_equiv(g, word_arg, word_arg2);
    if (classify->parsed()) return cmd_classify(g, word_arg);
    if (sc->parsed()) {
      if (verify_path.empty() && word_arg.empty()) {
        std::cerr << "sc-cert: pass a word or --verify FILE\n";
        return kExitUsage;
      }
      return cmd_sc_cert(g, word_arg, verify_path, subdivision, cert_all);
    }
    if (search->parsed()) return cmd_search(g, search_all, form_text, max_c);
    if (verify->parsed()) return cmd_verify_tables(g);
    if (oracle->parsed()) return cmd_oracle(g, max_k);
    if (cat->parsed()) return cmd_catalog(g);
  } catch (const gtg::ParseError& e) {
    std::cerr << "word error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
