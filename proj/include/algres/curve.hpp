#pragma once

#include <vector>

#include "algres/forms.hpp"
#include "algres/upoly.hpp"

namespace algres {

/// Quasi-homogeneous monomial curve t -> (t^l1, ..., t^ls, 0, ..., 0) in R^m.
class MonomialCurve {
 public:
  /// Throws InputError unless the weights are positive, strictly increasing
  /// and no weight is a non-negative integer combination of the others.
  MonomialCurve(std::vector<int> lambda, std::size_t ambient);
  explicit MonomialCurve(std::vector<int> lambda) : MonomialCurve(lambda, lambda.size()) {}

  const Weights& weights() const { return weights_; }
  const std::vector<int>& lambda() const { return weights_.lambda(); }
  std::size_t s() const { return weights_.curve_dim(); }
  std::size_t ambient() const { return weights_.ambient(); }
  MonomialCurve with_ambient(std::size_t m) const { return MonomialCurve(lambda(), m); }

  bool in_semigroup(int n) const;
  int conductor() const { return conductor_; }
  /// Elements of N \ Gamma, increasing.
  std::vector<int> gaps() const;

  /// Components of the curve map as polynomials in t.
  std::vector<UPoly> images() const;
  /// Same curve as a polynomial map from R^1.
  PolyMap as_map() const;
  bool vanishes_on(const Polynomial& p) const;

  /// "4,5,6,7".
  std::string id() const;

  friend bool operator==(const MonomialCurve& a, const MonomialCurve& b) {
    return a.lambda() == b.lambda() && a.ambient() == b.ambient();
  }

 private:
  Weights weights_;
  int conductor_ = 0;
};

/// Parses "4,5,6,7" into a weight list.
std::vector<int> parse_weight_list(const std::string& text);

bool vanishes_on_curve(const Polynomial& p, const MonomialCurve& c);

}  // namespace algres
