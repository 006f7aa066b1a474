// rdeg: reduction number, degree and Betti tables of homogeneous ideals.
//
// Exit codes: 0 ok, 1 other error, 2 parse error or invalid input, 3 Noether position not
// found, 4 corpus mismatch, 5 truncated table, 10 + label index for classify.

#include <CLI11.hpp>
#include <iostream>

#include "rdeg/corpus.hpp"

using namespace rdeg;

namespace {

enum Exit { kOk = 0, kError = 1, kParse = 2, kNoether = 3, kGolden = 4, kTruncated = 5, kLabelBase = 10 };

struct Common {
  std::string file;
  std::uint64_t seed = 1;
  int trials = 8;
  std::string field;
  std::optional<int> cap;
  bool allow_truncated = false;

  NoetherOptions noether() const { return {trials, seed}; }
  KoszulOptions koszul() const {
    KoszulOptions k;
    k.cap = cap;
    return k;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_file = true) {
  if (with_file) cmd->add_option("file", c.file, "ideal file")->required();
  cmd->add_option("--seed", c.seed, "seed for random coordinate changes")->capture_default_str();
  cmd->add_option("--trials", c.trials, "random coordinate changes to try")->capture_default_str();
  cmd->add_option("--field", c.field, "gfp, qq or GF(p); overrides the file");
  cmd->add_option("--cap", c.cap, "highest Betti row to compute");
  cmd->add_flag("--allow-truncated", c.allow_truncated, "print truncated tables instead of failing");
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Runs f(field, file) over the chosen field.
template <class F>
int with_file(const Common& c, F&& f) {
  auto file = read_ideal_file(c.file);
  FieldSpec spec = c.field.empty() ? file.field : FieldSpec::parse(c.field);
  return visit_field(spec, [&](const auto& k) { return f(k, file); });
}

int truncated_exit(const BettiTable& t, const Common& c) {
  if (!t.truncated() || c.allow_truncated) return kOk;
  std::cerr << "error: table truncated at row " << t.cap() << "; raise --cap or pass --allow-truncated\n";
  return kTruncated;
}

int cmd_analyze(const Common& c) {
  return with_file(c, [&](const auto& k, const IdealFile& f) {
    using K = std::decay_t<decltype(k)>;
    auto loaded = load_ideal(f, k);
    auto found = minimal_reduction_position(std::span<const Polynomial<K>>(loaded.gens), c.noether());
    auto table = koszul_betti(found.position.basis, 0, c.koszul());
    if (int code = truncated_exit(table, c)) return code;
    print(to_json(invariant_report(found.position, table)));
    return static_cast<int>(kOk);
  });
}

int cmd_betti(const Common& c, int over) {
  return with_file(c, [&](const auto& k, const IdealFile& f) {
    using K = std::decay_t<decltype(k)>;
    auto loaded = load_ideal(f, k);
    std::vector<Polynomial<K>> gens;
    for (auto& g : loaded.gens)
      if (!g.is_zero()) gens.push_back(std::move(g));
    BettiTable table;
    if (over == 0) {
      table = koszul_betti(buchberger(loaded.ring, std::span<const Polynomial<K>>(gens)), 0, c.koszul());
    } else {
      auto np = noether_position(std::span<const Polynomial<K>>(gens), c.noether());
      if (over > np.e) throw std::invalid_argument("--over must be at most the codimension " + std::to_string(np.e));
      table = koszul_betti(np.basis, over, c.koszul());
    }
    if (int code = truncated_exit(table, c)) return code;
    print(to_json(table));
    return static_cast<int>(kOk);
  });
}

int cmd_classify(const Common& c) {
  return with_file(c, [&](const auto& k, const IdealFile& f) {
    using K = std::decay_t<decltype(k)>;
    auto loaded = load_ideal(f, k);
    ClassifyOptions opts;
    opts.noether = c.noether();
    opts.koszul = c.koszul();
    opts.prime = f.prime;
    opts.reduced = f.reduced;
    auto rep = classify(std::span<const Polynomial<K>>(loaded.gens), opts);
    print(to_json(rep));
    return kLabelBase + label_index(rep.label);
  });
}

int cmd_identity(int e, int r, int m, const std::vector<int>& grid) {
  bool ok = true;
  auto one = [&](int ee, int mm, int rr) {
    auto chk = binomial_identity(ee, mm, rr);
    ok = ok && chk.equal;
    std::cout << "e=" << ee << " m=" << mm << " r=" << rr << ": lhs=" << chk.lhs.get_str() << " rhs=" << chk.rhs.get_str()
              << (chk.equal ? " pass" : " FAIL") << '\n';
  };
  if (!grid.empty()) {
    int count = 0;
    for (int ee = 1; ee <= grid[0]; ++ee)
      for (int rr = 0; rr <= grid[1]; ++rr)
        for (int mm = 1; mm <= ee + rr; ++mm, ++count) one(ee, mm, rr);
    std::cout << count << " cases, " << (ok ? "all pass" : "failures above") << '\n';
  } else {
    one(e, m, r);
  }
  return ok ? kOk : kError;
}

int cmd_corpus(const std::string& action, const std::vector<std::string>& names, const std::string& dir,
               const Common& c, unsigned jobs) {
  auto corpus = load_corpus(dir.empty() ? default_corpus_dir() : std::filesystem::path(dir));
  if (action == "list") {
    for (const auto& e : corpus.entries) {
      const char* kind = e.kind == CorpusEntry::Kind::Ideal ? "ideal" : e.kind == CorpusEntry::Kind::Points ? "points" : "formula";
      std::cout << e.name << '\t' << kind << '\t' << e.source << '\n';
    }
    return kOk;
  }
  CorpusRunOptions opts;
  opts.noether = c.noether();
  opts.koszul = c.koszul();
  opts.jobs = jobs;
  auto results = run_corpus(corpus, names, opts);
  for (const auto& r : results) {
    std::cerr << (r.passed ? "pass " : "FAIL ") << r.name << " (" << r.seconds << " s)\n";
    if (!r.error.empty()) std::cerr << "  error: " << r.error << '\n';
    for (const auto& ch : r.checks)
      if (!ch.passed) std::cerr << "  " << ch.what << ": " << ch.detail << '\n';
  }
  auto summary = corpus_summary(results);
  print(summary);
  return summary.at("failed").get<int>() == 0 ? kOk : kGolden;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction number, degree and Betti tables of projective subschemes"};
  app.require_subcommand(1);

  Common analyze_opts, betti_opts, classify_opts, corpus_opts;
  auto* analyze = app.add_subcommand("analyze", "invariants of the ideal as JSON");
  add_common(analyze, analyze_opts);

  int over = 0;
  auto* betti = app.add_subcommand("betti", "graded Betti table over S_t = k[x_t, ..] as JSON");
  add_common(betti, betti_opts);
  betti->add_option("--over", over, "t, with 0 <= t <= codimension")->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "degree case label and audits as JSON; exit 10 + label index");
  add_common(classify_cmd, classify_opts);

  int ie = 0, ir = 0, im = 0;
  std::vector<int> grid;
  auto* identity = app.add_subcommand("identity", "check the alternating binomial identity");
  auto* e_opt = identity->add_option("--e", ie)->check(CLI::PositiveNumber);
  auto* r_opt = identity->add_option("--r", ir)->check(CLI::NonNegativeNumber);
  auto* m_opt = identity->add_option("--m", im)->check(CLI::PositiveNumber);
  auto* grid_opt = identity->add_option("--exhaustive-to", grid, "E R: every 1 <= e <= E, 0 <= r <= R, 1 <= m <= e+r")
                       ->expected(2)
                       ->check(CLI::NonNegativeNumber);
  e_opt->needs(r_opt, m_opt)->excludes(grid_opt);

  std::string action;
  std::vector<std::string> names;
  std::string corpus_dir;
  unsigned jobs = 0;
  auto* corpus = app.add_subcommand("corpus", "list or run the bundled examples");
  corpus->add_option("action", action)->required()->check(CLI::IsMember({"list", "run"}));
  corpus->add_option("names", names, "entries to run (default: all)");
  corpus->add_option("--corpus", corpus_dir, "corpus directory");
  corpus->add_option("--jobs", jobs, "entries run at once (default: hardware threads)");
  add_common(corpus, corpus_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_opts);
    if (*betti) return cmd_betti(betti_opts, over);
    if (*classify_cmd) return cmd_classify(classify_opts);
    if (*identity) {
      if (grid.empty() && !*e_opt) {
        std::cerr << "error: pass --e, --r and --m, or --exhaustive-to E R\n";
        return kParse;
      }
      return cmd_identity(ie, ir, im, grid);
    }
    if (*corpus) return cmd_corpus(action, names, corpus_dir, corpus_opts, jobs);
  } catch (const ParseError& e) {
    const auto& file = *analyze ? analyze_opts.file : *betti ? betti_opts.file : classify_opts.file;
    std::cerr << file << ":" << e.diagnostic() << '\n';
    return kParse;
  } catch (const NoetherFailure& e) {
    std::cerr << "error: " << e.what() << "\n  last initial ideal: " << e.last_initial_ideal() << '\n';
    return kNoether;
  } catch (const TruncatedTable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kTruncated;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kOk;
}
