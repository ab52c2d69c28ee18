#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algres/param_linear.hpp"
#include "algres/restriction.hpp"

namespace algres {

enum class LiftPolicy { Grlex, Paper };

LiftPolicy parse_lift_policy(const std::string& text);
std::string to_string(LiftPolicy p);

/// Vector field X_s with X_s o f = t^(s+1) df/dt.
struct LiftableField {
  int s = 0;
  VectorField field;
  LiftPolicy policy = LiftPolicy::Grlex;
};

/// 0 together with every s in 1..bound such that lambda_i + s lies in the
/// semigroup for all i.
std::vector<int> admissible_shifts(const MonomialCurve& c, int bound);
bool is_admissible_shift(const MonomialCurve& c, int s);

/// Monomials in the curve coordinates of weighted degree e (ambient variables).
std::vector<Monomial> curve_monomials(const MonomialCurve& c, int e);

/// Throws InputError("no monomial lift exists ...") for a non-admissible s.
LiftableField liftable_field(const MonomialCurve& c, int s, LiftPolicy policy = LiftPolicy::Grlex);
/// X_s with component i = lambda_i * lifts[i]; lifts[i] must have weighted degree lambda_i + s.
LiftableField liftable_field_from(const MonomialCurve& c, int s, const std::vector<Monomial>& lifts);

/// h with X o f = h * df/dt when X is liftable over the curve in this sense.
std::optional<UPoly> lifting_factor(const MonomialCurve& c, const VectorField& x);

/// [L_X a]; throws InputError when X is not liftable.
AlgRestriction lie_action(const VectorField& x, const AlgRestriction& a);
AlgRestriction lie_action(const LiftableField& x, const AlgRestriction& a);

struct ActionTable {
  std::vector<int> shifts;
  std::vector<LiftableField> fields;
  /// entries[row][col] = L_{X_shifts[row]} (basis element col).
  std::vector<std::vector<AlgRestriction>> entries;
};

ActionTable action_table(const RestrictionBasis& b, LiftPolicy policy = LiftPolicy::Grlex);

struct TangentSpace {
  std::vector<int> shifts;
  std::vector<AlgRestriction> spanning;
  std::size_t dim = 0;
  EchelonBasis echelon{0};
  bool contains(const AlgRestriction& v) const { return echelon.contains(v.coords()); }
};

/// Shifts used for a restriction whose lowest degree is r: admissible s <= K - r.
std::vector<int> orbit_shifts(const RestrictionBasis& b, const AlgRestriction& a);
TangentSpace orbit_tangent_space(const AlgRestriction& a, LiftPolicy policy = LiftPolicy::Grlex);
bool is_modulus(const AlgRestriction& a, const AlgRestriction& direction,
                LiftPolicy policy = LiftPolicy::Grlex);

struct HomotopyResult {
  bool feasible = false;
  std::vector<int> shifts;
  std::vector<RatFunc> coefficients;
  std::vector<int> poles_in_unit_interval;
  /// L_{X_s} a and L_{X_s} kill per shift, coordinates.
  std::vector<QVector> action_on_a, action_on_kill;
};

/// Moser homotopy A_t = a - t kill: solves sum_s b_s(t) L_{X_s} A_t = kill.
/// kill must be zero or one full graded part of a.
HomotopyResult moser_reduce(const AlgRestriction& a, const AlgRestriction& kill,
                            LiftPolicy policy = LiftPolicy::Grlex);

struct SymmetryCheck {
  bool ok = false;
  std::string reason;
  /// Reparametrization phi with Phi o f = f o phi (mod t^order).
  UPoly phi;
  Rational leading;
  int order = 0;
};

/// Checks Phi o f == f o phi modulo t^order for a phi extracted from the first component.
SymmetryCheck check_curve_symmetry(const MonomialCurve& c, const PolyMap& phi, int order);
/// Precision used by pullback_restriction: K + lambda_s + 1.
int symmetry_check_order(const RestrictionBasis& b);

/// [Phi^* a]; throws InputError("not a local symmetry of the curve") otherwise.
AlgRestriction pullback_restriction(const PolyMap& phi, const AlgRestriction& a);

struct ScalingSymmetry {
  /// Diagonal map with x_i -> value^(-lambda_i / r) x_i when the root is rational.
  std::optional<PolyMap> map;
  /// The coefficient reached on the target: +1 or -1.
  int normalized_to = 1;
  std::string verdict;
};

ScalingSymmetry scaling_symmetry(const RestrictionBasis& b, const std::string& label, const Rational& value);

}  // namespace algres
