#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdeg/field.hpp"
#include "rdeg/monomial.hpp"

namespace rdeg {

// Polynomial ring K[x_0..x_{n-1}] with a monomial order. Optional positive variable
// weights are used only for the sugar degree during Groebner basis computations
// (e.g. weighted-homogeneous graph ideals of parametrizations).
template <CoefficientField K>
class Ring {
 public:
  using Field = K;

  Ring(K field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex(),
       std::vector<int> weights = {});

  static std::shared_ptr<const Ring> make(K field, int nvars,
                                          MonomialOrder order = MonomialOrder::degrevlex()) {
    return std::make_shared<const Ring>(std::move(field), default_variable_names(nvars), order);
  }
  static std::shared_ptr<const Ring> make(K field, std::vector<std::string> names,
                                          MonomialOrder order = MonomialOrder::degrevlex(),
                                          std::vector<int> weights = {}) {
    return std::make_shared<const Ring>(std::move(field), std::move(names), order, std::move(weights));
  }

  const K& field() const { return field_; }
  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }
  std::optional<int> index_of(std::string_view name) const;

  // Structural equality: same field, names, order and weights.
  bool operator==(const Ring& other) const {
    return field_ == other.field_ && names_ == other.names_ && order_ == other.order_ &&
           weights_ == other.weights_;
  }

 private:
  K field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<int> weights_;
};

template <CoefficientField K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <CoefficientField K>
Ring<K>::Ring(K field, std::vector<std::string> names, MonomialOrder order, std::vector<int> weights)
    : field_(std::move(field)), names_(std::move(names)), order_(order), weights_(std::move(weights)) {
  if (names_.size() < 2 || static_cast<int>(names_.size()) > kMaxVariables)
    throw std::invalid_argument("a ring needs between 2 and " + std::to_string(kMaxVariables) + " variables");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
    for (char c : n) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw std::invalid_argument("invalid variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  if (order_.is_elimination() && order_.block_size() >= num_vars())
    throw std::invalid_argument("elimination block must leave at least one variable");
  if (!weights_.empty()) {
    if (static_cast<int>(weights_.size()) != num_vars())
      throw std::invalid_argument("one weight per variable is required");
    for (int w : weights_)
      if (w <= 0) throw std::invalid_argument("variable weights must be positive");
  }
}

template <CoefficientField K>
std::optional<int> Ring<K>::index_of(std::string_view name) const {
  for (int k = 0; k < num_vars(); ++k)
    if (names_[k] == name) return k;
  return std::nullopt;
}

}  // namespace rdeg
