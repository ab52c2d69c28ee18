#include "algres/invariants.hpp"

#include <algorithm>
#include <limits>

namespace algres {

std::string ExtInt::to_string() const {
  switch (kind) {
    case Kind::Infinite: return "inf";
    case Kind::NotApplicable: return "n/a";
    case Kind::Finite: break;
  }
  return std::to_string(value);
}

ExtInt ExtInt::parse(const std::string& text) {
  if (text == "inf") return infinite();
  if (text == "n/a") return not_applicable();
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("expected an integer, 'inf' or 'n/a', got '" + text + "'");
  return finite(std::stoi(text));
}

int symplectic_multiplicity(const AlgRestriction& a, LiftPolicy policy) {
  return static_cast<int>(a.basis().size() - orbit_tangent_space(a, policy).dim);
}

namespace {

/// Linear data of one graded piece d: the primitive 1-forms alpha in V^1_d,
/// the matrix of alpha -> d alpha in V^2_d coordinates and the quotient
/// coordinates q of the target class.
struct PrimitiveSystem {
  const GradedPiece* p1;
  const GradedPiece* p2;
  QMatrix dmat;   // dim V^2 x dim V^1
  QMatrix qmat;   // dim A^2 x dim V^1
  QVector q;
};

PrimitiveSystem primitive_system(const RestrictionBasis& b, int d, const DifferentialForm& part) {
  PrimitiveSystem ps{&b.piece(1, d), &b.piece(2, d), {}, {}, {}};
  std::size_t n1 = ps.p1->dim_full(), n2 = ps.p2->dim_full(), nq = ps.p2->dim_quotient();
  ps.dmat = QMatrix(n2, n1);
  ps.qmat = QMatrix(nq, n1);
  for (std::size_t j = 0; j < n1; ++j) {
    QVector v = ps.p2->to_vector(ext_der(ps.p1->monomials()[j].to_form()));
    QVector qv = ps.p2->quotient_coords_of_vector(v);
    for (std::size_t i = 0; i < n2; ++i) ps.dmat(i, j) = v[i];
    for (std::size_t i = 0; i < nq; ++i) ps.qmat(i, j) = qv[i];
  }
  ps.q = ps.p2->quotient_coords(part);
  return ps;
}

/// Feasibility of qmat * alpha = q together with extra homogeneous rows.
std::optional<QVector> feasible(const PrimitiveSystem& ps, const std::vector<QVector>& extra) {
  std::size_t n1 = ps.p1->dim_full();
  std::vector<QVector> rows;
  QVector rhs;
  for (std::size_t i = 0; i < ps.qmat.rows(); ++i) {
    rows.push_back(ps.qmat.row(i));
    rhs.push_back(ps.q[i]);
  }
  for (const auto& r : extra) {
    rows.push_back(r);
    rhs.emplace_back(0);
  }
  return solve(QMatrix::from_rows(rows, n1), rhs);
}

/// Graded parts of a representative of a, in the work space.
std::map<int, DifferentialForm> work_parts(const AlgRestriction& a) {
  const RestrictionBasis& b = a.basis();
  DifferentialForm rep = b.to_work(b.representative(a));
  return graded_parts(rep, b.work_curve().weights());
}

int piece_isotropy(const PrimitiveSystem& ps) {
  int best = 0;
  int max_deg = 0;
  for (const auto& mf : ps.p2->monomials()) max_deg = std::max(max_deg, mf.mono.total_degree());
  for (int q = 1; q <= max_deg + 1; ++q) {
    std::vector<QVector> extra;
    for (std::size_t i = 0; i < ps.p2->dim_full(); ++i)
      if (ps.p2->monomials()[i].mono.total_degree() < q) extra.push_back(ps.dmat.row(i));
    if (!feasible(ps, extra)) break;
    best = q;
  }
  return best;
}

}  // namespace

ExtInt index_of_isotropy(const AlgRestriction& a) {
  if (a.is_zero()) return ExtInt::infinite();
  const RestrictionBasis& b = a.basis();
  int result = std::numeric_limits<int>::max();
  for (const auto& [d, part] : work_parts(a)) {
    PrimitiveSystem ps = primitive_system(b, d, part);
    if (is_zero(ps.q)) continue;
    result = std::min(result, piece_isotropy(ps));
  }
  return ExtInt::finite(result);
}

std::vector<LtWitness> lagrangian_witnesses(const AlgRestriction& a) {
  const RestrictionBasis& b = a.basis();
  const MonomialCurve& wc = b.work_curve();
  std::vector<LtWitness> out;
  for (const auto& [d, part] : work_parts(a)) {
    PrimitiveSystem ps = primitive_system(b, d, part);
    if (is_zero(ps.q)) continue;
    std::size_t n1 = ps.p1->dim_full();
    // Functional alpha -> (coefficient of dx_i composed with f) / t^(d - w_i).
    auto vanish_row = [&](std::size_t i) {
      QVector r(n1);
      for (std::size_t j = 0; j < n1; ++j) {
        const auto& mf = ps.p1->monomials()[j];
        if (static_cast<std::size_t>(mf.idx[0]) != i) continue;
        bool on_curve = true;
        for (std::size_t k = wc.s(); k < wc.ambient(); ++k) on_curve = on_curve && mf.mono[k] == 0;
        if (on_curve) r[j] = 1;
      }
      return r;
    };
    std::optional<QVector> alpha;
    std::size_t top = 0;
    // Smallest top index j such that every coefficient beyond x_j vanishes on the curve.
    for (std::size_t j = 0; j < wc.s() && !alpha; ++j) {
      std::vector<QVector> extra;
      for (std::size_t i = j + 1; i < wc.ambient(); ++i) extra.push_back(vanish_row(i));
      alpha = feasible(ps, extra);
      top = j;
    }
    if (!alpha) throw std::logic_error("no primitive 1-form found for a nonzero class");
    out.push_back({d, ps.p1->from_vector(*alpha), d - wc.lambda()[top]});
  }
  return out;
}

ExtInt lagrangian_tangency_order(const AlgRestriction& a) {
  if (a.is_zero()) return ExtInt::infinite();
  ExtInt iota = index_of_isotropy(a);
  if (iota.is_finite() && iota.value == 0) return ExtInt::not_applicable();
  int result = std::numeric_limits<int>::max();
  for (const auto& w : lagrangian_witnesses(a)) result = std::min(result, w.order);
  return ExtInt::finite(result);
}

ExtInt tangency_order(const std::vector<UPoly>& curve, const std::vector<Polynomial>& lagrangian) {
  int best = -1;
  for (const auto& h : lagrangian) {
    UPoly c = h.substitute(curve);
    if (c.is_zero()) continue;
    int o = c.order();
    if (best < 0 || o < best) best = o;
  }
  return best < 0 ? ExtInt::infinite() : ExtInt::finite(best);
}

ExtInt tangency_order(const MonomialCurve& c, const std::vector<Polynomial>& lagrangian) {
  return tangency_order(c.images(), lagrangian);
}

std::string PmqdVerdict::to_string() const {
  switch (kind) {
    case Kind::BothZero: return "both-zero";
    case Kind::OneZero: return "one-zero";
    case Kind::Proportional: return "proportional(" + algres::to_string(constant) + ")";
    case Kind::NotProportional: return "not-proportional";
  }
  return "";
}

PmqdVerdict pmqd_compare(const AlgRestriction& a1, const AlgRestriction& a2) {
  if (!(a1.basis() == a2.basis())) throw InputError("restrictions refer to different bases");
  auto m1 = min_qdeg_part(a1), m2 = min_qdeg_part(a2);
  if (!m1 && !m2) return {PmqdVerdict::Kind::BothZero, 0};
  if (!m1 || !m2) return {PmqdVerdict::Kind::OneZero, 0};
  if (m1->r != m2->r) return {PmqdVerdict::Kind::NotProportional, 0};
  const QVector& p1 = m1->part.coords();
  const QVector& p2 = m2->part.coords();
  Rational c = 0;
  for (std::size_t i = 0; i < p1.size(); ++i)
    if (p1[i] != 0) {
      c = p2[i] / p1[i];
      break;
    }
  if (c != 0 && c * p1 == p2) return {PmqdVerdict::Kind::Proportional, c};
  return {PmqdVerdict::Kind::NotProportional, 0};
}

QMatrix constant_part(const AlgRestriction& a) {
  const RestrictionBasis& b = a.basis();
  std::size_t s = b.curve().s();
  DifferentialForm rep = strip_off_curve(b.representative(a), b.curve());
  QMatrix m(s, s);
  Monomial one(s);
  for (const auto& [idx, g] : rep.terms()) {
    Rational c = g.coefficient(one);
    if (c == 0) continue;
    auto i = static_cast<std::size_t>(idx[0]), j = static_cast<std::size_t>(idx[1]);
    m(i, j) = c;
    m(j, i) = -c;
  }
  return m;
}

bool representable_by_symplectic(const AlgRestriction& a, int n) {
  if (n < 1) throw InputError("half-dimension n must be positive");
  int s = static_cast<int>(a.basis().curve().s());
  return static_cast<int>(rank(constant_part(a))) >= 2 * s - 2 * n;
}

InvariantReport invariants(const AlgRestriction& a, LiftPolicy policy) {
  InvariantReport r;
  r.multiplicity = symplectic_multiplicity(a, policy);
  r.isotropy = index_of_isotropy(a);
  r.tangency = lagrangian_tangency_order(a);
  if (auto mp = min_qdeg_part(a)) {
    r.min_qdeg = mp->r;
    r.min_part = mp->part;
  }
  return r;
}

}  // namespace algres
