#include "rdeg/json_io.hpp"

namespace rdeg {

Json mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [ij, v] : table.entries()) entries.push_back({ij.first, ij.second, v});
  return Json{{"t", table.t()}, {"cap", table.cap()}, {"truncated", table.truncated()}, {"entries", entries}};
}

BettiTable betti_from_json(const Json& j) {
  BettiTable t(j.value("t", 0), j.value("cap", 0));
  t.set_truncated(j.value("truncated", false));
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("Betti entry must be [i, j, value]");
    long long v = e[2].get<long long>();
    if (v < 0) throw std::invalid_argument("negative Betti number in JSON");
    t.set(e[0].get<int>(), e[1].get<int>(), v);
  }
  return t;
}

Json to_json(const InvariantReport& r) {
  Json j{{"n", r.n},           {"e", r.e},         {"deg", r.degree},  {"r", r.r},
         {"mu", r.mu},         {"cm", r.cohen_macaulay}, {"depth", r.depth}, {"pd", r.proj_dim},
         {"reg", r.regularity}, {"truncated", r.truncated}, {"field", r.field}};
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  return j;
}

Json to_json(const FormulaTable& t) {
  Json entries = Json::array();
  for (const auto& [ij, v] : t.entries) entries.push_back({ij.first, ij.second, mpz_to_json(v)});
  Json params = Json::object();
  for (const auto& [k, v] : t.params) params[k] = v;
  Json j{{"source", t.source},
         {"params", params},
         {"indexing", t.indexing == FormulaTable::Indexing::Ring ? "ring" : "ideal"},
         {"entries", entries}};
  if (t.has_differences()) {
    Json d = Json::array();
    for (const auto& [i, v] : t.differences) d.push_back({i, mpz_to_json(v)});
    j["difference_row"] = t.difference_row;
    j["differences"] = d;
  }
  return j;
}

Json to_json(const StructurePattern& p) {
  Json v = Json::array();
  for (const auto& m : p.v) v.push_back(m.to_string());
  return Json{{"kind", to_string(p.kind)},
              {"e", p.e},
              {"r", p.r},
              {"u", p.u ? Json(p.u->to_string()) : Json(nullptr)},
              {"v", v}};
}

Json to_json(const ClassificationReport& rep) {
  Json j;
  j["schema"] = kReportSchema;
  j["label"] = to_string(rep.label);
  j["invariants"] = to_json(rep.invariants);
  j["reduction_search"] = Json{{"r", rep.search.r},
                               {"seed", rep.search.seed ? Json(*rep.search.seed) : Json(nullptr)},
                               {"attempts_in_position", rep.search.attempts_in_position},
                               {"trials_disagree", rep.search.trials_disagree}};
  j["initial_ideal"] = rep.initial_ideal;
  j["betti"] = to_json(rep.table);
  j["module_betti"] = to_json(rep.module_table);
  j["pattern"] = rep.pattern ? to_json(*rep.pattern) : Json(nullptr);
  j["formula"] = rep.formula ? to_json(*rep.formula) : Json(nullptr);
  j["formula_match"] = rep.formula ? Json(rep.mismatches.empty()) : Json(nullptr);
  Json mism = Json::array();
  for (const auto& m : rep.mismatches)
    mism.push_back({{"i", m.i}, {"j", m.j}, {"expected", mpz_to_json(m.expected)}, {"actual", m.actual}, {"what", m.what}});
  j["mismatches"] = mism;
  Json audits = Json::array();
  for (const auto& a : rep.audits) audits.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  j["audits"] = audits;
  j["notes"] = rep.notes;
  return j;
}

}  // namespace rdeg
