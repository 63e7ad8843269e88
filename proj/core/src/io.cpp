#include "gtg/io.hpp"

#include <stdexcept>

namespace gtg::io {

Json poly_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_int64()) {
      coeffs.push_back(c.to_int64());
    } else {
      coeffs.push_back(c.to_string());
    }
  }
  return Json{{"coeffs", coeffs}, {"text", p.to_string()}};
}

Json form_json(const TargetForm& f) {
  return Json{{"a", f.a}, {"b", f.b}, {"c", f.c}, {"factored", f.factored_string()}};
}

Json pairlist_json(const PairList& l) {
  Json runs = Json::array();
  for (int r : l.runs) runs.push_back(r);
  Json j{{"runs", runs}};
  if (l.kind == PairList::Kind::PureFirst) j["degenerate"] = "pure-uv";
  if (l.kind == PairList::Kind::PureSecond) j["degenerate"] = "pure-uv2";
  return j;
}

Json witness_json(const std::vector<RepWitness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) {
    out.push_back(Json{{"group", fin_group_name(w.req.group)},
                       {"xy_order", w.req.xy_order},
                       {"x", cycle_string(w.x)},
                       {"y", cycle_string(w.y)}});
  }
  return out;
}

Json class_json(const FoundClass& fc) {
  return Json{{"canonical", fc.key.to_string()},
              {"pairlist", pairlist_json(fc.pairs)},
              {"form", form_json(fc.form)},
              {"tau", poly_json(fc.tau)}};
}

Json stats_json(const StageStats& s) {
  return Json{{"enumerated", s.enumerated},
              {"after_crude", s.after_crude},
              {"after_permrep", s.after_permrep},
              {"after_eval", s.after_eval},
              {"exact", s.exact}};
}

Json search_result_json(const SearchResult& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) classes.push_back(class_json(c));
  return Json{{"form", form_json(r.form)}, {"stats", stats_json(r.stats)}, {"classes", classes}};
}

Json case_result_json(const CaseResult& r) {
  Json forms = Json::array();
  for (const auto& f : r.per_form) forms.push_back(search_result_json(f));
  Json classes = Json::array();
  for (const auto& c : r.classes) classes.push_back(class_json(c));
  return Json{{"case", case_name(r.kase)},
              {"forms", forms},
              {"classes", classes},
              {"total_classes", r.classes.size()}};
}

Json catalog_entry_json(const CatalogEntry& e) {
  Json j{{"id", e.id},
         {"case", case_name(e.kase)},
         {"word", e.word_text},
         {"form", form_json(e.tau)},
         {"status", status_name(e.status)}};
  if (e.status == GroupStatus::Finite) j["order"] = e.finite_order;
  j["source"] = e.source;
  if (e.kase == Case::C232) j["part"] = e.part;
  if (e.kase == Case::C332) j["scc"] = e.scc;
  if (!e.bracket_lengths.empty()) j["subdivision_lengths"] = e.bracket_lengths;
  if (!e.printed_as.empty()) j["printed_as"] = e.printed_as;
  return j;
}

Json verify_report_json(const VerifyReport& r) {
  return Json{{"ok", r.ok},
              {"matched", r.matched},
              {"expected", r.expected},
              {"entries", r.lines},
              {"mismatches", r.mismatches},
              {"notes", r.notes}};
}

Json classification_json(const Classification& c) {
  Json j;
  switch (c.kind) {
    case Classification::Kind::FreeByTrace:
      j["verdict"] = "free-subgroup";
      j["reason"] = "trace polynomial is not of the restricted form";
      break;
    case Classification::Kind::Cataloged: {
      j["verdict"] = status_name(c.entry->status);
      j["entry"] = c.entry->id;
      if (c.entry->status == GroupStatus::Finite) j["order"] = c.entry->finite_order;
      j["source"] = c.entry->source;
      break;
    }
    case Classification::Kind::Anomaly:
      j["verdict"] = "anomaly";
      j["reason"] = "matching trace polynomial but no catalogue entry";
      break;
  }
  j["tau"] = poly_json(c.tau);
  if (c.form) j["form"] = form_json(*c.form);
  return j;
}

Json cert_json(const SCCertificate& c) {
  Json segs = Json::array();
  for (int i = 0; i < 3; ++i) {
    auto seg = cyclic_segment(c.word, c.cuts[static_cast<size_t>(i)],
                              c.segment_lengths[static_cast<size_t>(i)]);
    segs.push_back(syllables_to_string(seg, c.word.spec()));
  }
  return Json{{"case", case_name(c.kase)},
              {"word", c.word.to_string()},
              {"ell", ell_of(c.kase)},
              {"cuts", Json::array({c.cuts[0], c.cuts[1], c.cuts[2]})},
              {"segments", segs},
              {"A", c.a.to_string()},
              {"B", c.b.to_string()},
              {"N", c.n},
              {"generators", Json{{"X", c.gen_x}, {"Y", c.gen_y}}}};
}

SCCertificate cert_from_json(const Json& j) {
  SCCertificate c;
  auto kase = case_from_name(j.at("case").get<std::string>());
  if (!kase) throw std::invalid_argument("certificate: unknown case");
  c.kase = *kase;
  auto spec = FactorSpec::of_case(c.kase);
  c.word = parse_word(j.at("word").get<std::string>(), spec);
  auto cuts = j.at("cuts");
  if (!cuts.is_array() || cuts.size() != 3) throw std::invalid_argument("certificate: bad cuts");
  for (size_t i = 0; i < 3; ++i) c.cuts[i] = cuts[i].get<int>();
  int n = static_cast<int>(c.word.syllable_length());
  if (!(0 <= c.cuts[0] && c.cuts[0] < c.cuts[1] && c.cuts[1] < c.cuts[2] && c.cuts[2] < n)) {
    throw std::invalid_argument("certificate: cuts out of range");
  }
  c.segment_lengths = {c.cuts[1] - c.cuts[0], c.cuts[2] - c.cuts[1], c.cuts[0] + n - c.cuts[2]};
  auto segs = j.at("segments");
  if (!segs.is_array() || segs.size() != 3) throw std::invalid_argument("certificate: bad segments");
  for (size_t i = 0; i < 3; ++i) {
    auto seg = cyclic_segment(c.word, c.cuts[i], c.segment_lengths[i]);
    if (segs[i].get<std::string>() != syllables_to_string(seg, spec)) {
      throw std::invalid_argument("certificate: segment text does not match cuts");
    }
  }
  c.a = parse_word(j.at("A").get<std::string>(), spec);
  c.b = parse_word(j.at("B").get<std::string>(), spec);
  c.n = j.at("N").get<long long>();
  c.gen_x = j.at("generators").at("X").get<std::string>();
  c.gen_y = j.at("generators").at("Y").get<std::string>();
  return c;
}

Json document(const std::string& command, std::optional<Case> c, Json payload) {
  Json j{{"schema_version", "1"}, {"command", command}};
  if (c) j["case"] = case_name(*c);
  j["payload"] = std::move(payload);
  return j;
}

std::string csv_field(const std::string& s) {
  bool quote = s.find_first_of(",\"\n") != std::string::npos;
  if (!quote) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  return out + "\"";
}

std::string poly_csv(const IntPoly& p) {
  std::string out;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ",";
    out += p.coeffs()[i].to_string();
  }
  return csv_field(out);
}

}  // namespace gtg::io
