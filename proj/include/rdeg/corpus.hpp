#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdeg/ideal_file.hpp"
#include "rdeg/json_io.hpp"

namespace rdeg {

inline constexpr const char* kCorpusSchema = "rdeg-corpus/1";

struct Expected {
  Json value;
  std::string provenance;  // PAPER, DERIVED or TRIVIAL
};

struct CorpusEntry {
  enum class Kind { Ideal, Points, Formula };

  std::string name;
  std::string source;
  Kind kind = Kind::Ideal;
  std::filesystem::path ideal;  // Kind::Ideal, relative to the corpus root
  Json recipe;                  // Kind::Points or Kind::Formula
  bool qq = false;              // also run over QQ
  Expected golden;              // path of the golden Betti table
  std::map<std::string, Expected> expect;
};

struct Corpus {
  std::filesystem::path root;
  std::vector<FieldSpec> fields;
  std::vector<CorpusEntry> entries;

  const CorpusEntry* find(const std::string& name) const;
};

// $RDEG_CORPUS if set, else the corpus directory of the source tree.
std::filesystem::path default_corpus_dir();

// Reads root/manifest.json; throws std::runtime_error on schema violations, including
// expected values without a PAPER/DERIVED/TRIVIAL tag.
Corpus load_corpus(const std::filesystem::path& root);

BettiTable load_golden(const Corpus& corpus, const CorpusEntry& entry);

// Generators for an Ideal or Points entry over the given field.
template <CoefficientField K>
LoadedIdeal<K> materialize(const Corpus& corpus, const CorpusEntry& entry, const K& field);

// Ideal-file flags of the entry (points entries count as reduced).
IdealFile entry_flags(const Corpus& corpus, const CorpusEntry& entry);

struct CorpusRunOptions {
  NoetherOptions noether;
  KoszulOptions koszul;
  unsigned jobs = 0;  // 0: hardware concurrency
};

struct EntryCheck {
  std::string what;
  bool passed = true;
  std::string detail;  // "expected ..., got ..." on failure
};

struct EntryResult {
  std::string name;
  bool passed = true;
  std::vector<EntryCheck> checks;
  std::map<std::string, Json> reports;  // classification report per field name
  double seconds = 0;
  std::string error;  // set when the pipeline threw
};

EntryResult run_entry(const Corpus& corpus, const CorpusEntry& entry, const CorpusRunOptions& options = {});

// Entries run concurrently; results come back in the order of names (all entries if empty).
std::vector<EntryResult> run_corpus(const Corpus& corpus, const std::vector<std::string>& names = {},
                                    const CorpusRunOptions& options = {});

Json to_json(const EntryResult& result);
// {"schema", "passed", "failed", "entries": [...]}
Json corpus_summary(const std::vector<EntryResult>& results);

extern template LoadedIdeal<PrimeField> materialize(const Corpus&, const CorpusEntry&, const PrimeField&);
extern template LoadedIdeal<RationalField> materialize(const Corpus&, const CorpusEntry&, const RationalField&);

}  // namespace rdeg
