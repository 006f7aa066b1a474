#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rdeg/formulas.hpp"
#include "rdeg/hilbert.hpp"
#include "rdeg/invariants.hpp"

namespace rdeg {

enum class CaseLabel {
  Maximal,           // deg = C(e+r, r)
  AlmostMaxAcm,      // deg = C(e+r, r) - 1, Cohen-Macaulay
  AlmostMaxNonAcmA,  // deg = C(e+r, r) - 1, not CM, reg = r
  AlmostMaxNonAcmB,  // ... reg = r + 1
  AlmostMaxNonAcmC,  // ... reg >= r + 2
  Other,
};

std::string to_string(CaseLabel label);
CaseLabel case_label_from_string(const std::string& text);
// 0 for Maximal through 5 for Other.
int label_index(CaseLabel label);

struct ClassifyOptions {
  NoetherOptions noether;
  KoszulOptions koszul;
  // Caller asserts the ideal is prime (resp. radical); enables the depth >= n check for
  // varieties of almost maximal degree.
  bool prime = false;
  bool reduced = false;
  // Extra audits that compute more tables: Betti tables over every S_t (mapping cone
  // identities) and the table of in(I) (entrywise bound).
  bool audit_mapping_cone = true;
  bool audit_initial_ideal = true;
};

struct Audit {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ClassificationReport {
  InvariantReport invariants;
  ReductionSearch search;
  std::string initial_ideal;
  BettiTable table;         // over S_0
  BettiTable module_table;  // over S = S_e
  std::optional<StructurePattern> pattern;
  CaseLabel label = CaseLabel::Other;
  std::optional<FormulaTable> formula;
  std::vector<FormulaMismatch> mismatches;
  std::vector<Audit> audits;
  std::vector<std::string> notes;

  bool formula_matches() const { return formula && mismatches.empty(); }
  bool audits_pass() const;
};

// Decides the label from invariants alone.
CaseLabel decide_label(const InvariantReport& inv);

// Formula prediction for a label (none for Other).
std::optional<FormulaTable> formula_for(CaseLabel label, const InvariantReport& inv);

// Noether position with the smallest reduction number over the trials, invariants, Betti
// tables over S_0 and S_e, label, formula comparison, audits and notes. Throws
// NoetherFailure, or std::runtime_error if the S_0 table is truncated.
template <CoefficientField K>
ClassificationReport classify(std::span<const Polynomial<K>> gens, const ClassifyOptions& options = {});

// Re-runs the formula comparison stored in a report.
std::vector<FormulaMismatch> verify_against_formulas(const ClassificationReport& report);

extern template ClassificationReport classify(std::span<const Polynomial<PrimeField>>, const ClassifyOptions&);
extern template ClassificationReport classify(std::span<const Polynomial<RationalField>>, const ClassifyOptions&);

}  // namespace rdeg
