#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algres/curve.hpp"
#include "algres/forms.hpp"
#include "algres/matrix.hpp"

namespace algres {

/// A monomial k-form x^a dx_I.
struct MonomialForm {
  IndexTuple idx;
  Monomial mono;
  DifferentialForm to_form() const;
  friend bool operator==(const MonomialForm&, const MonomialForm&) = default;
};

/// Quasi-homogeneous k-forms of quasi-degree d, split into the zero-restriction
/// subspace Z and the quotient A = V / Z.
class GradedPiece {
 public:
  GradedPiece(const MonomialCurve& curve, int k, int d);

  int k() const { return k_; }
  int d() const { return d_; }
  std::size_t ambient() const { return ambient_; }
  /// Monomial basis of V, ordered by index tuple, then grlex.
  const std::vector<MonomialForm>& monomials() const { return basis_; }
  std::size_t dim_full() const { return basis_.size(); }
  std::size_t dim_zero() const { return zero_.rank(); }
  std::size_t dim_quotient() const { return basis_.size() - zero_.rank(); }
  /// Z in reduced echelon form, as forms.
  std::vector<DifferentialForm> zero_basis() const;
  /// Non-pivot monomials: the canonical coset representatives of A.
  const std::vector<std::size_t>& quotient_columns() const { return free_; }
  std::vector<DifferentialForm> quotient_representatives() const;

  /// Coordinates in V; throws unless w is homogeneous of this (k, d).
  QVector to_vector(const DifferentialForm& w) const;
  DifferentialForm from_vector(const QVector& v) const;
  /// Coordinates of [w] on the quotient representatives.
  QVector quotient_coords(const DifferentialForm& w) const;
  QVector quotient_coords_of_vector(const QVector& v) const;
  /// Form with the given quotient coordinates built from representatives.
  DifferentialForm quotient_form(const QVector& q) const;
  bool in_zero(const DifferentialForm& w) const;
  const EchelonBasis& zero_echelon() const { return zero_; }

 private:
  int k_, d_;
  std::size_t ambient_;
  std::vector<MonomialForm> basis_;
  std::map<std::pair<IndexTuple, Monomial>, std::size_t> index_;
  EchelonBasis zero_{0};
  std::vector<std::size_t> free_;
};

/// Basis of the weighted-degree-e piece of the vanishing ideal of the curve.
std::vector<Polynomial> ideal_piece(const MonomialCurve& c, int e);

std::vector<DifferentialForm> zero_restriction_basis(const MonomialCurve& c, int k, int d);
GradedPiece restriction_quotient(const MonomialCurve& c, int k, int d);

/// Drops the terms involving off-curve coordinates x_j or dx_j (j > s); they
/// all have zero algebraic restriction. The result lives in R^s.
DifferentialForm strip_off_curve(const DifferentialForm& w, const MonomialCurve& c);

struct BasisElement {
  int qdeg;
  std::string label;
  DifferentialForm representative;
};

struct BasisOptions {
  std::optional<int> max_qdeg;
  /// Use the labelled representatives known for (4,5,6,7), (4,5,6), (4,5,7).
  bool paper_frame = true;
  /// Compute graded pieces in R^s and strip off-curve terms before
  /// reducing. Off only for cross-checks in the full ambient space.
  bool reduce_ambient = true;
};

class AlgRestriction;

/// Basis of the algebraic restrictions of closed 2-forms to a curve.
class RestrictionBasis {
 public:
  const MonomialCurve& curve() const;
  const std::vector<BasisElement>& elements() const;
  std::size_t size() const { return elements().size(); }
  int K() const;
  int bound() const;
  bool paper_frame() const;
  /// Quasi-degrees of the elements, nondecreasing.
  std::vector<int> degrees() const;
  std::optional<std::size_t> index_of(const std::string& label) const;
  const BasisElement& element(const std::string& label) const;

  AlgRestriction zero() const;
  AlgRestriction unit(const std::string& label) const;
  AlgRestriction unit(std::size_t i) const;
  AlgRestriction from_coords(QVector coords) const;

  /// [w]_f; throws InputError on ambient mismatch and when dw has a nonzero
  /// restriction ("not closed as a restriction").
  AlgRestriction project(const DifferentialForm& w) const;
  /// Canonical coordinates of [w^(d)] in the quotient A^k_d for each degree d
  /// where the class is nonzero. Works for any k-form, closed or not.
  std::map<int, QVector> quotient_parts(const DifferentialForm& w) const;
  /// A closed representative of a coordinate vector (frame representatives).
  DifferentialForm representative(const AlgRestriction& a) const;

  /// Space the graded pieces live in: the curve in R^s, or in R^m when
  /// reduce_ambient is off.
  const MonomialCurve& work_curve() const;
  /// w moved into the work space (off-curve terms stripped when reducing).
  DifferentialForm to_work(const DifferentialForm& w) const;
  /// Shared graded piece of the work space.
  const GradedPiece& piece(int k, int d) const;
  /// Closed kernel of A^2_d -> A^3_d in canonical quotient coordinates.
  const std::vector<QVector>& closed_kernel(int d) const;

  friend bool operator==(const RestrictionBasis& a, const RestrictionBasis& b) { return a.impl_ == b.impl_; }

  struct Impl;

 private:
  friend RestrictionBasis closed2_restriction_basis(const MonomialCurve&, const BasisOptions&);
  explicit RestrictionBasis(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

/// Throws InputError with a diagnostic when the scan bound is too small.
RestrictionBasis closed2_restriction_basis(const MonomialCurve& c, const BasisOptions& options = {});

/// conductor + 3 lambda_s + lambda_{s-1}.
int default_degree_bound(const MonomialCurve& c);

/// Class of a closed 2-form: coordinates on a RestrictionBasis.
class AlgRestriction {
 public:
  AlgRestriction(RestrictionBasis basis, QVector coords);

  const RestrictionBasis& basis() const { return basis_; }
  const QVector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational coord(const std::string& label) const;
  bool is_zero() const { return algres::is_zero(coords_); }

  /// Part of quasi-degree d (other coordinates zeroed).
  AlgRestriction graded_part(int d) const;
  /// Degrees with a nonzero part, increasing.
  std::vector<int> support() const;

  AlgRestriction& operator+=(const AlgRestriction& o);
  AlgRestriction& operator-=(const AlgRestriction& o);
  friend AlgRestriction operator+(AlgRestriction a, const AlgRestriction& b) { return a += b; }
  friend AlgRestriction operator-(AlgRestriction a, const AlgRestriction& b) { return a -= b; }
  friend AlgRestriction operator*(const Rational& s, AlgRestriction a);
  friend bool operator==(const AlgRestriction& a, const AlgRestriction& b) {
    return a.basis_ == b.basis_ && a.coords_ == b.coords_;
  }

  /// e.g. "a9 + 2*a11- - 3/2*a13+"; "0" for the zero class.
  std::string to_string() const;

 private:
  RestrictionBasis basis_;
  QVector coords_;
};

AlgRestriction project(const MonomialCurve& c, const DifferentialForm& w, const RestrictionBasis& b);

struct MinPart {
  int r;
  AlgRestriction part;
};
/// Lowest nonzero graded part; nullopt for the zero class.
std::optional<MinPart> min_qdeg_part(const AlgRestriction& a);

}  // namespace algres
