#pragma once

#include <memory>
#include <regex>
#include <string>
#include <vector>

#include "projlat/error.hpp"
#include "projlat/field.hpp"
#include "projlat/monomial.hpp"

namespace projlat {

/// Weighted polynomial ring k[x_1..x_n] with deg x_i = w_i.
///
/// Public construction requires every w_i >= 1. Rings carrying a weight-zero
/// auxiliary variable are produced internally (see `with_auxiliary`) for
/// elimination and radical-membership computations only.
template <Field K>
class GradedRing {
 public:
  using field_type = K;
  using value_type = typename K::value_type;

  GradedRing(K field, std::vector<std::string> names, std::vector<int> weights)
      : GradedRing(std::move(field), std::move(names), std::move(weights), 0) {
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i] < 1) {
        throw ValidationError("weight of " + names_[i] + " must be a positive integer");
      }
    }
  }

  const K& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }
  int max_weight() const {
    int m = 0;
    for (int w : weights_) m = std::max(m, w);
    return m;
  }
  std::size_t auxiliary_count() const { return aux_; }

  /// The canonical order for printing and equality.
  MonomialOrder canonical_order() const { return MonomialOrder::weighted_revlex(weights_); }

  /// Copy of this ring with one extra weight-zero variable appended.
  std::shared_ptr<const GradedRing> with_auxiliary(const std::string& name) const {
    auto names = names_;
    names.push_back(name);
    auto weights = weights_;
    weights.push_back(0);
    return std::shared_ptr<const GradedRing>(
        new GradedRing(field_, std::move(names), std::move(weights), aux_ + 1));
  }

  std::string to_string() const {
    std::string s = field_.name() + "[";
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (i) s += ", ";
      s += names_[i] + ":" + std::to_string(weights_[i]);
    }
    return s + "]";
  }

  int variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return static_cast<int>(i);
    }
    return -1;
  }

  friend bool operator==(const GradedRing& a, const GradedRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  GradedRing(K field, std::vector<std::string> names, std::vector<int> weights, std::size_t aux)
      : field_(std::move(field)), names_(std::move(names)), weights_(std::move(weights)), aux_(aux) {
    if (names_.size() != weights_.size()) {
      throw ValidationError("variable names and weights differ in length");
    }
    static const std::regex ident("[a-zA-Z][a-zA-Z0-9_]*");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!std::regex_match(names_[i], ident)) {
        throw ValidationError("invalid variable name '" + names_[i] + "'");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw ValidationError("duplicate variable name '" + names_[i] + "'");
      }
    }
  }

  K field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::size_t aux_ = 0;
};

template <Field K>
using RingPtr = std::shared_ptr<const GradedRing<K>>;

template <Field K>
RingPtr<K> make_ring(K field, std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const GradedRing<K>>(std::move(field), std::move(names), std::move(weights));
}

/// Rational ring with unit weights over the given variable names.
inline RingPtr<Rationals> make_rational_ring(std::vector<std::string> names,
                                             std::vector<int> weights = {}) {
  if (weights.empty()) weights.assign(names.size(), 1);
  return make_ring(Rationals{}, std::move(names), std::move(weights));
}

template <Field K>
void require_same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
  if (a != b && !(*a == *b)) {
    throw StructuralError("ring mismatch: " + a->to_string() + " vs " + b->to_string());
  }
}

}  // namespace projlat
