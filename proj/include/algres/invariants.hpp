#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algres/restriction.hpp"
#include "algres/symmetry.hpp"

namespace algres {

/// Non-negative integer, infinity, or "not applicable".
struct ExtInt {
  enum class Kind { Finite, Infinite, NotApplicable };
  Kind kind = Kind::Finite;
  int value = 0;

  static ExtInt finite(int v) { return {Kind::Finite, v}; }
  static ExtInt infinite() { return {Kind::Infinite, 0}; }
  static ExtInt not_applicable() { return {Kind::NotApplicable, 0}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  /// "7", "inf" or "n/a".
  std::string to_string() const;
  /// Inverse of to_string.
  static ExtInt parse(const std::string& text);
  friend bool operator==(const ExtInt&, const ExtInt&) = default;
};

int symplectic_multiplicity(const AlgRestriction& a, LiftPolicy policy = LiftPolicy::Grlex);
ExtInt index_of_isotropy(const AlgRestriction& a);
ExtInt lagrangian_tangency_order(const AlgRestriction& a);

/// A quasi-homogeneous 1-form alpha with [d alpha] = a^(d) attaining the
/// optimal order on one graded piece.
struct LtWitness {
  int qdeg;
  DifferentialForm alpha;
  int order;
};
/// Per-piece optimal primitives (only meaningful when the index of isotropy is >= 1).
std::vector<LtWitness> lagrangian_witnesses(const AlgRestriction& a);

/// min_i ord_t(H_i o f); infinite when every composition vanishes.
ExtInt tangency_order(const std::vector<UPoly>& curve, const std::vector<Polynomial>& lagrangian);
ExtInt tangency_order(const MonomialCurve& c, const std::vector<Polynomial>& lagrangian);

struct PmqdVerdict {
  enum class Kind { BothZero, OneZero, Proportional, NotProportional };
  Kind kind;
  Rational constant;
  std::string to_string() const;
};

PmqdVerdict pmqd_compare(const AlgRestriction& a1, const AlgRestriction& a2);

/// Constant 2-form of a closed representative, restricted to the curve
/// coordinates, as an s x s skew matrix.
QMatrix constant_part(const AlgRestriction& a);
/// rank of the constant part >= 2s - 2n.
bool representable_by_symplectic(const AlgRestriction& a, int n);

struct InvariantReport {
  int multiplicity = 0;
  ExtInt isotropy;
  ExtInt tangency;
  std::optional<int> min_qdeg;
  std::optional<AlgRestriction> min_part;
};

InvariantReport invariants(const AlgRestriction& a, LiftPolicy policy = LiftPolicy::Grlex);

}  // namespace algres
