#include "rdeg/classify.hpp"

#include <stdexcept>

namespace rdeg {

namespace {

constexpr CaseLabel kLabels[] = {CaseLabel::Maximal,          CaseLabel::AlmostMaxAcm,     CaseLabel::AlmostMaxNonAcmA,
                                 CaseLabel::AlmostMaxNonAcmB, CaseLabel::AlmostMaxNonAcmC, CaseLabel::Other};

long long max_degree(const InvariantReport& inv) { return max_degree_bound(inv.e, inv.r).get_si(); }

bool is_linear(const BettiTable& table, int row) {
  for (const auto& [ij, v] : table.entries())
    if (ij != std::pair{0, 0} && ij.second != row) return false;
  return true;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void audit(ClassificationReport& rep, std::string name, bool passed, std::string detail) {
  rep.audits.push_back({std::move(name), passed, std::move(detail)});
}

void mapping_cone_audit(ClassificationReport& rep, const std::vector<BettiTable>& tables, int vars) {
  int e = static_cast<int>(tables.size()) - 1;
  int top = tables[0].regularity() + vars + 1;
  bool ok = true;
  std::string detail;
  for (int t = 0; t < e && ok; ++t) {
    for (int m = 0; m <= top && ok; ++m)
      if (chi(tables[t], m) != chi(tables[t + 1], m) + chi(tables[t + 1], m - 1)) {
        ok = false;
        detail = "chi additivity fails at t = " + std::to_string(t) + ", m = " + std::to_string(m);
      }
  }
  for (int t = 0; t <= e && ok; ++t) {
    if (tables[0].projective_dimension() != tables[t].projective_dimension() + t) {
      ok = false;
      detail = "pd over S_" + std::to_string(t) + " is not pd over S_0 minus " + std::to_string(t);
    } else if (tables[t].regularity() != tables[0].regularity()) {
      ok = false;
      detail = "regularity over S_" + std::to_string(t) + " differs";
    }
  }
  if (ok) detail = "chi additivity, pd shift and regularity checked over S_0..S_" + std::to_string(e);
  audit(rep, "mapping-cone", ok, detail);
}

template <CoefficientField K>
void initial_ideal_audit(ClassificationReport& rep, const GroebnerBasis<K>& gb, const KoszulOptions& koszul) {
  try {
    auto cmp = compare_with_initial(gb, koszul);
    std::string detail = cmp.equal ? "tables of I and in(I) agree"
                                   : std::to_string(cmp.cancellations.size()) + " internal degree(s) with cancellation";
    bool ok = true;
    for (const auto& c : cmp.cancellations) ok = ok && c.alternating_sum == 0;
    audit(rep, "initial-ideal-bound", ok, detail);
  } catch (const std::logic_error& err) {
    audit(rep, "initial-ideal-bound", false, err.what());
  }
}

}  // namespace

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Maximal:
      return "MAXIMAL";
    case CaseLabel::AlmostMaxAcm:
      return "ALMOST_MAX_ACM";
    case CaseLabel::AlmostMaxNonAcmA:
      return "ALMOST_MAX_NONACM_A";
    case CaseLabel::AlmostMaxNonAcmB:
      return "ALMOST_MAX_NONACM_B";
    case CaseLabel::AlmostMaxNonAcmC:
      return "ALMOST_MAX_NONACM_C";
    case CaseLabel::Other:
      return "OTHER";
  }
  return "?";
}

CaseLabel case_label_from_string(const std::string& text) {
  for (auto l : kLabels)
    if (to_string(l) == text) return l;
  throw std::invalid_argument("unknown case label: " + text);
}

int label_index(CaseLabel label) { return static_cast<int>(label); }

bool ClassificationReport::audits_pass() const {
  for (const auto& a : audits)
    if (!a.passed) return false;
  return true;
}

CaseLabel decide_label(const InvariantReport& inv) {
  if (inv.r < 1) return CaseLabel::Other;
  long long bound = max_degree(inv);
  if (inv.degree == bound) return CaseLabel::Maximal;
  if (inv.degree != bound - 1) return CaseLabel::Other;
  if (inv.cohen_macaulay) return CaseLabel::AlmostMaxAcm;
  int gap = inv.regularity - inv.r;
  if (gap == 0) return CaseLabel::AlmostMaxNonAcmA;
  if (gap == 1) return CaseLabel::AlmostMaxNonAcmB;
  return CaseLabel::AlmostMaxNonAcmC;
}

std::optional<FormulaTable> formula_for(CaseLabel label, const InvariantReport& inv) {
  switch (label) {
    case CaseLabel::Maximal:
      return betti_maximal(inv.e, inv.r);
    case CaseLabel::AlmostMaxAcm:
      return betti_acm_almost_max(inv.e, inv.r);
    case CaseLabel::AlmostMaxNonAcmA:
    case CaseLabel::AlmostMaxNonAcmB:
    case CaseLabel::AlmostMaxNonAcmC:
      return betti_nonacm_cases(inv.e, inv.r, inv.regularity);
    case CaseLabel::Other:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<FormulaMismatch> verify_against_formulas(const ClassificationReport& report) {
  if (!report.formula) return {};
  return compare_with_formula(*report.formula, report.table);
}

template <CoefficientField K>
ClassificationReport classify(std::span<const Polynomial<K>> gens, const ClassifyOptions& options) {
  auto found = minimal_reduction_position(gens, options.noether);
  const auto& np = found.position;
  ClassificationReport rep;
  rep.search = found.search;
  rep.initial_ideal = np.basis.initial_ideal().to_string();
  int vars = np.basis.ring()->num_vars();

  rep.table = koszul_betti(np.basis, 0, options.koszul);
  if (rep.table.truncated())
    throw TruncatedTable("Betti table truncated at cap " + std::to_string(rep.table.cap()) +
                         "; raise the cap to classify");
  rep.invariants = invariant_report(np, rep.table);
  const auto& inv = rep.invariants;
  rep.module_table = koszul_betti(np.basis, np.e, options.koszul);
  rep.pattern = match_structure(np.basis.initial_ideal(), np.e);
  rep.label = decide_label(inv);
  rep.formula = formula_for(rep.label, inv);
  if (rep.formula) rep.mismatches = compare_with_formula(*rep.formula, rep.table);

  if (found.search.trials_disagree)
    rep.notes.push_back("reduction number differs between trials; the smallest (r = " + std::to_string(inv.r) +
                        ") is kept");
  if (inv.r < 1) rep.notes.push_back("reduction number 0: the ideal contains linear forms in every Noether position");
  bool variety = options.prime;
  bool almost = rep.label != CaseLabel::Maximal && rep.label != CaseLabel::Other;
  if (!rep.mismatches.empty() && !variety)
    rep.notes.push_back("formula predictions are stated for varieties; the input is not marked prime, so "
                        "mismatches are informational");

  // Audits.
  long long bound = inv.r >= 1 ? max_degree(inv) : 1;
  audit(rep, "degree-chain", inv.degree <= inv.mu && inv.mu <= bound,
        "deg " + std::to_string(inv.degree) + " <= mu " + std::to_string(inv.mu) + " <= C(e+r, r) " +
            std::to_string(bound));
  audit(rep, "reduction-vs-regularity", inv.r <= inv.regularity && (!inv.cohen_macaulay || inv.r == inv.regularity),
        "r " + std::to_string(inv.r) + ", reg " + std::to_string(inv.regularity));
  if (inv.r >= 1) {
    bool maximal = inv.degree == bound;
    bool cm_linear = inv.cohen_macaulay && is_linear(rep.table, inv.r);
    audit(rep, "maximal-iff-cm-linear", maximal == cm_linear,
          "maximal degree: " + yes_no(maximal) + ", CM with (r+1)-linear table: " + yes_no(cm_linear));
    bool acm_almost = inv.degree == bound - 1 && inv.cohen_macaulay;
    bool plus_u = rep.pattern && rep.pattern->kind == PatternKind::PurePowerPlusU;
    audit(rep, "acm-almost-maximal-iff-pattern", acm_almost == plus_u,
          "invariants: " + yes_no(acm_almost) + ", in(I) = (u) + J^{r+1}: " + yes_no(plus_u));
    bool nonacm_almost = inv.degree == bound - 1 && !inv.cohen_macaulay;
    bool plus_uv = rep.pattern && rep.pattern->kind == PatternKind::PurePowerPlusUV;
    audit(rep, "nonacm-almost-maximal-iff-pattern", nonacm_almost == plus_uv,
          "invariants: " + yes_no(nonacm_almost) + ", in(I) = J^{r+1} + u(v_1..v_s): " + yes_no(plus_uv));
  }
  {
    bool ok = true;
    std::string detail = "no N_{d,e} with d <= r";
    for (int d = 2; d <= inv.regularity + 1; ++d)
      if (ndp_property(rep.table, d, inv.e) && !(inv.r < d)) {
        ok = false;
        detail = "N_{" + std::to_string(d) + "," + std::to_string(inv.e) + "} holds but r = " + std::to_string(inv.r);
      }
    audit(rep, "ndp-reduction-bound", ok, detail);
  }
  {
    int pd_s = rep.module_table.projective_dimension();
    bool ok = rep.table.projective_dimension() == pd_s + inv.e;
    // pd_S <= 1 comes from depth >= dim X, known for CM rings and for varieties.
    if (rep.label != CaseLabel::Other && (inv.cohen_macaulay || variety)) ok = ok && pd_s <= 1;
    audit(rep, "module-over-normalization", ok,
          "pd over S " + std::to_string(pd_s) + ", pd over S_0 " + std::to_string(rep.table.projective_dimension()));
  }
  if (almost) {
    if (variety) {
      audit(rep, "variety-depth-bound", inv.depth >= inv.n,
            "depth " + std::to_string(inv.depth) + ", dim X " + std::to_string(inv.n));
    } else {
      std::string note = "input not marked prime: the depth >= dim X bound for varieties of almost maximal degree "
                         "is not applied";
      if (inv.depth < inv.n)
        note += " (depth " + std::to_string(inv.depth) + " < dim X " + std::to_string(inv.n) +
                " is possible for a non-reduced scheme)";
      rep.notes.push_back(note);
    }
  }
  if (options.audit_mapping_cone) {
    std::vector<BettiTable> tables{rep.table};
    for (int t = 1; t < inv.e; ++t) tables.push_back(koszul_betti(np.basis, t, options.koszul));
    tables.push_back(rep.module_table);
    mapping_cone_audit(rep, tables, vars);
  }
  if (options.audit_initial_ideal) initial_ideal_audit(rep, np.basis, options.koszul);
  return rep;
}

template ClassificationReport classify(std::span<const Polynomial<PrimeField>>, const ClassifyOptions&);
template ClassificationReport classify(std::span<const Polynomial<RationalField>>, const ClassifyOptions&);

}  // namespace rdeg
