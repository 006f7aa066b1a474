#include "rdeg/corpus.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "rdeg/points.hpp"

namespace rdeg {

namespace {

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

Expected read_expected(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("value") || !j.contains("provenance"))
    throw std::runtime_error(where + ": expected {\"value\", \"provenance\"}");
  auto tag = j.at("provenance").get<std::string>();
  if (tag != "PAPER" && tag != "DERIVED" && tag != "TRIVIAL")
    throw std::runtime_error(where + ": provenance must be PAPER, DERIVED or TRIVIAL, got " + tag);
  return {j.at("value"), tag};
}

std::vector<long long> module_degrees(const BettiTable& module_table) {
  std::vector<long long> out;
  for (const auto& [ij, v] : module_table.entries())
    if (ij.first == 0) out.insert(out.end(), static_cast<std::size_t>(v), ij.second);
  return out;
}

void check(EntryResult& res, std::string what, bool ok, const std::string& expected, const std::string& actual) {
  EntryCheck c{std::move(what), ok, ok ? "" : "expected " + expected + ", got " + actual};
  res.passed = res.passed && ok;
  res.checks.push_back(std::move(c));
}

template <CoefficientField K>
ClassificationReport classify_entry(const Corpus& corpus, const CorpusEntry& entry, const K& field,
                                    const CorpusRunOptions& options) {
  auto loaded = materialize(corpus, entry, field);
  auto flags = entry_flags(corpus, entry);
  ClassifyOptions opts;
  opts.noether = options.noether;
  opts.koszul = options.koszul;
  opts.prime = flags.prime;
  opts.reduced = flags.reduced;
  return classify(std::span<const Polynomial<K>>(loaded.gens), opts);
}

void check_report(EntryResult& res, const CorpusEntry& entry, const BettiTable& golden,
                  const ClassificationReport& rep, const std::string& field) {
  auto at = "@" + field;
  Json inv = to_json(rep.invariants);
  for (const auto& [key, exp] : entry.expect) {
    if (key == "label") {
      auto got = to_string(rep.label);
      check(res, "label" + at, exp.value == Json(got), exp.value.dump(), got);
    } else if (key == "module_degrees") {
      Json got = module_degrees(rep.module_table);
      check(res, "module_degrees" + at, exp.value == got, exp.value.dump(), got.dump());
    } else {
      check(res, key + at, inv.contains(key) && inv.at(key) == exp.value, exp.value.dump(),
            inv.contains(key) ? inv.at(key).dump() : "nothing");
    }
  }
  check(res, "golden" + at, rep.table.same_entries(golden), to_json(golden).at("entries").dump(),
        to_json(rep.table).at("entries").dump());
  for (const auto& a : rep.audits)
    if (!a.passed) check(res, "audit " + a.name + at, false, "pass", a.detail);
}

void run_formula_entry(EntryResult& res, const CorpusEntry& entry, const BettiTable& golden) {
  const auto& r = entry.recipe;
  auto kind = r.at("case").get<std::string>();
  FormulaTable f;
  if (kind == "nonacm")
    f = betti_nonacm_cases(r.at("e").get<int>(), r.at("r").get<int>(), r.at("reg").get<int>());
  else if (kind == "maximal")
    f = betti_maximal(r.at("e").get<int>(), r.at("r").get<int>());
  else if (kind == "acm-almost-maximal")
    f = betti_acm_almost_max(r.at("e").get<int>(), r.at("r").get<int>());
  else
    throw std::runtime_error("unknown formula case " + kind);
  auto mism = compare_with_formula(f, golden);
  std::string got;
  for (const auto& m : mism) got += (got.empty() ? "" : "; ") + m.what;
  check(res, "formula " + f.source, mism.empty(), "golden table", got);
  res.reports["formula"] = to_json(f);
}

}  // namespace

const CorpusEntry* Corpus::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::filesystem::path default_corpus_dir() {
  if (const char* env = std::getenv("RDEG_CORPUS"); env && *env) return env;
  return RDEG_CORPUS_DIR;
}

Corpus load_corpus(const std::filesystem::path& root) {
  Json m = read_json(root / "manifest.json");
  if (m.value("schema", "") != kCorpusSchema) throw std::runtime_error("manifest schema is not " + std::string(kCorpusSchema));
  Corpus c;
  c.root = root;
  for (const auto& f : m.at("fields")) c.fields.push_back(FieldSpec::parse(f.get<std::string>()));
  for (const auto& j : m.at("entries")) {
    CorpusEntry e;
    e.name = j.at("name").get<std::string>();
    e.source = j.value("source", "");
    if (j.contains("ideal")) {
      e.kind = CorpusEntry::Kind::Ideal;
      e.ideal = j.at("ideal").get<std::string>();
    } else if (j.contains("points")) {
      e.kind = CorpusEntry::Kind::Points;
      e.recipe = j.at("points");
    } else if (j.contains("formula")) {
      e.kind = CorpusEntry::Kind::Formula;
      e.recipe = j.at("formula");
    } else {
      throw std::runtime_error(e.name + ": entry needs one of ideal, points, formula");
    }
    e.qq = j.value("qq", false);
    e.golden = read_expected(j.at("golden"), e.name + ".golden");
    Json expect = j.value("expect", Json::object());
    for (const auto& [key, v] : expect.items())
      e.expect[key] = read_expected(v, e.name + ".expect." + key);
    if (c.find(e.name)) throw std::runtime_error("duplicate corpus entry " + e.name);
    c.entries.push_back(std::move(e));
  }
  return c;
}

BettiTable load_golden(const Corpus& corpus, const CorpusEntry& entry) {
  return betti_from_json(read_json(corpus.root / entry.golden.value.get<std::string>()));
}

IdealFile entry_flags(const Corpus& corpus, const CorpusEntry& entry) {
  if (entry.kind == CorpusEntry::Kind::Ideal) return read_ideal_file(corpus.root / entry.ideal);
  IdealFile f;
  f.reduced = entry.kind == CorpusEntry::Kind::Points;
  f.points = f.reduced;
  return f;
}

template <CoefficientField K>
LoadedIdeal<K> materialize(const Corpus& corpus, const CorpusEntry& entry, const K& field) {
  switch (entry.kind) {
    case CorpusEntry::Kind::Ideal:
      return load_ideal(read_ideal_file(corpus.root / entry.ideal), field);
    case CorpusEntry::Kind::Points: {
      auto sampler = entry.recipe.at("sampler").get<std::string>();
      int count = entry.recipe.at("count").get<int>();
      auto seed = entry.recipe.at("seed").get<std::uint64_t>();
      PointSet<K> pts;
      if (sampler == "general")
        pts = sample_general_points(seed, field, count);
      else if (sampler == "conic")
        pts = sample_conic_points(seed, field, count);
      else
        throw std::runtime_error("unknown point sampler " + sampler);
      auto ring = Ring<K>::make(field, 3);
      return {ring, vanishing_ideal_of_points(ring, pts, count)};
    }
    case CorpusEntry::Kind::Formula:
      break;
  }
  throw std::invalid_argument(entry.name + " is a formula entry and has no ideal");
}

EntryResult run_entry(const Corpus& corpus, const CorpusEntry& entry, const CorpusRunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  EntryResult res;
  res.name = entry.name;
  try {
    auto golden = load_golden(corpus, entry);
    if (entry.kind == CorpusEntry::Kind::Formula) {
      run_formula_entry(res, entry, golden);
    } else {
      auto fields = corpus.fields;
      if (entry.qq) fields.push_back(FieldSpec::rationals());
      std::optional<std::pair<std::string, BettiTable>> first;
      std::string first_label;
      for (const auto& spec : fields) {
        auto rep = visit_field(spec, [&](const auto& k) { return classify_entry(corpus, entry, k, options); });
        check_report(res, entry, golden, rep, spec.name());
        if (!first) {
          first.emplace(spec.name(), rep.table);
          first_label = to_string(rep.label);
        } else {
          check(res, "characteristic-dependence " + spec.name() + " vs " + first->first,
                rep.table.same_entries(first->second) && to_string(rep.label) == first_label,
                "same table and label", "a different table or label");
        }
        res.reports[spec.name()] = to_json(rep);
      }
    }
  } catch (const std::exception& e) {
    res.passed = false;
    res.error = e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<EntryResult> run_corpus(const Corpus& corpus, const std::vector<std::string>& names,
                                    const CorpusRunOptions& options) {
  std::vector<const CorpusEntry*> todo;
  if (names.empty()) {
    for (const auto& e : corpus.entries) todo.push_back(&e);
  } else {
    for (const auto& n : names) {
      const auto* e = corpus.find(n);
      if (!e) throw std::invalid_argument("no corpus entry named " + n);
      todo.push_back(e);
    }
  }
  std::vector<EntryResult> results(todo.size());
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(todo.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) results[i] = run_entry(corpus, *todo[i], options);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

Json to_json(const EntryResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"what", c.what}, {"passed", c.passed}};
    if (!c.passed) j["detail"] = c.detail;
    checks.push_back(j);
  }
  Json j{{"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"checks", checks}};
  if (!r.error.empty()) j["error"] = r.error;
  j["reports"] = r.reports;
  return j;
}

Json corpus_summary(const std::vector<EntryResult>& results) {
  Json entries = Json::array();
  int passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    entries.push_back(to_json(r));
  }
  return Json{{"schema", "rdeg-corpus-run/1"},
              {"passed", passed},
              {"failed", static_cast<int>(results.size()) - passed},
              {"entries", entries}};
}

template LoadedIdeal<PrimeField> materialize(const Corpus&, const CorpusEntry&, const PrimeField&);
template LoadedIdeal<RationalField> materialize(const Corpus&, const CorpusEntry&, const RationalField&);

}  // namespace rdeg
