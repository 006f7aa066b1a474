#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdeg/groebner.hpp"

namespace rdeg {

// Text description of an ideal:
//
//   # comment
//   ring: x0 x1 x2 x3 over GF(32003)     (or "ring: 4 over QQ" for x0..x3)
//   order: degrevlex                      (optional; elim(k) eliminates the first k variables)
//   ideal: x0^2, x0*x1,
//          x1^2                           (comma or newline separated)
//   flags: prime, reduced, points, parametrized(s^5; s^4*t + s^3*t^2; s*t^4; t^5)
//
// Without an ideal section, parametrized(...) gives the ideal of the image of the map
// (s, t) -> (f_0 : ... : f_N).
struct IdealFile {
  struct Generator {
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
  };

  std::vector<std::string> variables;
  FieldSpec field;
  std::optional<int> elim_block;
  bool has_ideal = false;
  std::vector<Generator> generators;
  bool prime = false;
  bool reduced = false;
  bool points = false;
  std::vector<std::string> parametrization;

  bool operator==(const IdealFile& other) const;
};

// Throws ParseError with the file line and column, including errors inside polynomials.
IdealFile parse_ideal_file(std::string_view text);
IdealFile read_ideal_file(const std::filesystem::path& path);

// Canonical text form; parse_ideal_file(serialize(f)) == f.
std::string serialize(const IdealFile& file);

template <CoefficientField K>
struct LoadedIdeal {
  RingPtr<K> ring;  // degrevlex ring the generators live in
  std::vector<Polynomial<K>> gens;
};

// Generators over the given field (which may differ from file.field), after elimination
// or implicitization when the file asks for it.
template <CoefficientField K>
LoadedIdeal<K> load_ideal(const IdealFile& file, const K& field);

extern template LoadedIdeal<PrimeField> load_ideal(const IdealFile&, const PrimeField&);
extern template LoadedIdeal<RationalField> load_ideal(const IdealFile&, const RationalField&);

}  // namespace rdeg
