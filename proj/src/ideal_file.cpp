#include "rdeg/ideal_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace rdeg {

namespace {

struct Piece {
  std::string text;
  std::size_t column;  // 1-based column of text[0]
};

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Piece trim(std::string_view s, std::size_t column) {
  std::size_t a = 0, b = s.size();
  while (a < b && is_blank(s[a])) ++a;
  while (b > a && is_blank(s[b - 1])) --b;
  return {std::string(s.substr(a, b - a)), column + a};
}

// Splits on sep at parenthesis depth 0.
std::vector<Piece> split(const Piece& p, char sep) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= p.text.size(); ++i) {
    char c = i < p.text.size() ? p.text[i] : sep;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      auto piece = trim(std::string_view(p.text).substr(start, i - start), p.column + start);
      if (!piece.text.empty()) out.push_back(piece);
      start = i + 1;
    }
  }
  return out;
}

void parse_ring(IdealFile& f, const Piece& value, std::size_t line) {
  auto pos = value.text.rfind(" over ");
  if (pos == std::string::npos) throw ParseError("expected 'ring: <variables> over <GF(p)|QQ>'", line, value.column);
  auto vars = trim(std::string_view(value.text).substr(0, pos), value.column);
  auto field = trim(std::string_view(value.text).substr(pos + 6), value.column + pos + 6);
  try {
    f.field = FieldSpec::parse(field.text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line, field.column);
  }
  f.variables.clear();
  bool numeric = !vars.text.empty() && std::all_of(vars.text.begin(), vars.text.end(),
                                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (numeric) {
    int n = std::stoi(vars.text);
    for (int i = 0; i < n; ++i) f.variables.push_back("x" + std::to_string(i));
  } else {
    std::string cleaned = vars.text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    for (std::string name; in >> name;) f.variables.push_back(name);
  }
  try {
    Ring<PrimeField>::make(PrimeField(), f.variables);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line, vars.column);
  }
}

void parse_order(IdealFile& f, const Piece& value, std::size_t line) {
  if (value.text == "degrevlex") {
    f.elim_block.reset();
    return;
  }
  if (value.text.rfind("elim(", 0) == 0 && value.text.back() == ')') {
    auto inner = value.text.substr(5, value.text.size() - 6);
    if (!inner.empty() && std::all_of(inner.begin(), inner.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      f.elim_block = std::stoi(inner);
      return;
    }
  }
  throw ParseError("order must be 'degrevlex' or 'elim(k)'", line, value.column);
}

void parse_flags(IdealFile& f, const Piece& value, std::size_t line) {
  for (const auto& flag : split(value, ',')) {
    if (flag.text == "prime") {
      f.prime = true;
    } else if (flag.text == "reduced") {
      f.reduced = true;
    } else if (flag.text == "points") {
      f.points = true;
    } else if (flag.text.rfind("parametrized(", 0) == 0 && flag.text.back() == ')') {
      Piece inner{flag.text.substr(13, flag.text.size() - 14), flag.column + 13};
      f.parametrization.clear();
      for (const auto& form : split(inner, ';')) f.parametrization.push_back(form.text);
      if (f.parametrization.empty()) throw ParseError("parametrized() needs forms", line, flag.column);
    } else {
      throw ParseError("unknown flag '" + flag.text + "'", line, flag.column);
    }
  }
}

template <CoefficientField K>
RingPtr<K> file_ring(const IdealFile& f, const K& field) {
  if (f.elim_block)
    return Ring<K>::make(field, f.variables, MonomialOrder::block_elimination(*f.elim_block));
  return Ring<K>::make(field, f.variables);
}

template <CoefficientField K>
std::vector<Polynomial<K>> parse_generators(const IdealFile& f, const RingPtr<K>& ring) {
  std::vector<Polynomial<K>> out;
  for (const auto& g : f.generators) {
    try {
      out.push_back(parse_polynomial(ring, g.text));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), g.line, g.column + e.column() - 1);
    }
  }
  return out;
}

template <CoefficientField K>
void validate(const IdealFile& f, const K& field) {
  if (f.elim_block && (*f.elim_block < 1 || *f.elim_block > static_cast<int>(f.variables.size()) - 2))
    throw ParseError("elim(k) must leave at least two variables", 1, 1);
  auto ring = file_ring(f, field);
  parse_generators(f, ring);
  if (!f.parametrization.empty()) {
    if (f.parametrization.size() != f.variables.size())
      throw ParseError("parametrized() needs one form per variable", 1, 1);
    auto st = Ring<K>::make(field, {"s", "t"});
    for (const auto& form : f.parametrization) {
      auto p = parse_polynomial(st, form);
      if (p.is_zero() || !p.is_homogeneous()) throw ParseError("parametrization forms must be nonzero and homogeneous", 1, 1);
    }
  }
}

}  // namespace

bool IdealFile::operator==(const IdealFile& o) const {
  if (generators.size() != o.generators.size()) return false;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].text != o.generators[i].text) return false;
  return variables == o.variables && field == o.field && elim_block == o.elim_block && has_ideal == o.has_ideal &&
         prime == o.prime && reduced == o.reduced && points == o.points && parametrization == o.parametrization;
}

IdealFile parse_ideal_file(std::string_view text) {
  IdealFile f;
  bool seen_ring = false, seen_order = false, seen_flags = false;
  bool in_ideal = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      auto body = trim(line, 1);
      if (body.text.empty()) continue;
      if (!in_ideal) throw ParseError("expected 'key: value'", line_no, body.column);
      for (const auto& g : split(body, ',')) f.generators.push_back({g.text, line_no, g.column});
      continue;
    }
    auto key = trim(line.substr(0, colon), 1);
    auto value = trim(line.substr(colon + 1), colon + 2);
    in_ideal = false;
    auto once = [&](bool& seen) {
      if (seen) throw ParseError("duplicate key '" + key.text + "'", line_no, key.column);
      seen = true;
    };
    if (key.text == "ring") {
      once(seen_ring);
      parse_ring(f, value, line_no);
    } else if (key.text == "order") {
      once(seen_order);
      parse_order(f, value, line_no);
    } else if (key.text == "ideal") {
      once(f.has_ideal);
      in_ideal = true;
      for (const auto& g : split(value, ',')) f.generators.push_back({g.text, line_no, g.column});
    } else if (key.text == "flags") {
      once(seen_flags);
      parse_flags(f, value, line_no);
    } else {
      throw ParseError("unknown key '" + key.text + "'", line_no, key.column);
    }
    if (end == text.size()) break;
  }
  if (!seen_ring) throw ParseError("missing 'ring:' line", 1, 1);
  if (!f.has_ideal && f.parametrization.empty()) throw ParseError("missing 'ideal:' section", line_no, 1);
  visit_field(f.field, [&](const auto& k) { validate(f, k); });
  return f;
}

IdealFile read_ideal_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_file(ss.str());
}

std::string serialize(const IdealFile& f) {
  std::ostringstream out;
  out << "ring:";
  for (const auto& v : f.variables) out << ' ' << v;
  out << " over " << f.field.name() << '\n';
  if (f.elim_block) out << "order: elim(" << *f.elim_block << ")\n";
  if (f.has_ideal) {
    out << "ideal:";
    for (std::size_t i = 0; i < f.generators.size(); ++i)
      out << (i == 0 ? "\n  " : ",\n  ") << f.generators[i].text;
    out << '\n';
  }
  std::vector<std::string> flags;
  if (f.prime) flags.push_back("prime");
  if (f.reduced) flags.push_back("reduced");
  if (f.points) flags.push_back("points");
  if (!f.parametrization.empty()) {
    std::string p = "parametrized(";
    for (std::size_t i = 0; i < f.parametrization.size(); ++i) p += (i ? "; " : "") + f.parametrization[i];
    flags.push_back(p + ")");
  }
  if (!flags.empty()) {
    out << "flags:";
    for (std::size_t i = 0; i < flags.size(); ++i) out << (i ? ", " : " ") << flags[i];
    out << '\n';
  }
  return out.str();
}

template <CoefficientField K>
LoadedIdeal<K> load_ideal(const IdealFile& f, const K& field) {
  auto ring = file_ring(f, field);
  if (!f.has_ideal) {
    auto target = Ring<K>::make(field, f.variables);
    auto st = Ring<K>::make(field, {"s", "t"});
    std::vector<Polynomial<K>> forms;
    for (const auto& text : f.parametrization) forms.push_back(parse_polynomial(st, text));
    auto gb = implicitize(target, std::span<const Polynomial<K>>(forms));
    return {target, gb.generators()};
  }
  auto gens = parse_generators(f, ring);
  if (!f.elim_block) return {ring, gens};
  auto out = eliminate(std::span<const Polynomial<K>>(gens), *f.elim_block);
  if (!out.empty()) return {out.front().ring(), out};
  std::vector<std::string> rest(f.variables.begin() + *f.elim_block, f.variables.end());
  return {Ring<K>::make(field, rest), out};
}

template LoadedIdeal<PrimeField> load_ideal(const IdealFile&, const PrimeField&);
template LoadedIdeal<RationalField> load_ideal(const IdealFile&, const RationalField&);

}  // namespace rdeg
