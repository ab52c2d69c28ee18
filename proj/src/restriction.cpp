#include "algres/restriction.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace algres {

namespace {

void combinations(int m, int k, int start, IndexTuple& cur, std::vector<IndexTuple>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < m; ++i) {
    cur.push_back(i);
    combinations(m, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<IndexTuple> index_tuples(std::size_t m, int k) {
  std::vector<IndexTuple> out;
  IndexTuple cur;
  if (k >= 0) combinations(static_cast<int>(m), k, 0, cur, out);
  return out;
}

int tuple_weight(const IndexTuple& idx, const Weights& w) {
  int s = 0;
  for (int i : idx) s += w[static_cast<std::size_t>(i)];
  return s;
}

}  // namespace

DifferentialForm MonomialForm::to_form() const {
  return DifferentialForm::basic(mono.nvars(), idx, Polynomial::term(mono, 1));
}

std::vector<Polynomial> ideal_piece(const MonomialCurve& c, int e) {
  const auto& w = c.weights().all();
  std::vector<Monomial> monos = monomials_of_weighted_degree(w, e);
  if (monos.empty()) return {};
  // Every curve monomial of weighted degree e maps to t^e, off-curve ones to 0.
  QMatrix sub(1, monos.size());
  for (std::size_t j = 0; j < monos.size(); ++j) {
    bool on_curve = true;
    for (std::size_t i = c.s(); i < c.ambient(); ++i) on_curve = on_curve && monos[j][i] == 0;
    sub(0, j) = on_curve ? 1 : 0;
  }
  std::vector<Polynomial> out;
  for (const auto& v : rref(sub).kernel) {
    Polynomial p(c.ambient());
    for (std::size_t j = 0; j < v.size(); ++j) p.add_term(monos[j], v[j]);
    out.push_back(std::move(p));
  }
  return out;
}

GradedPiece::GradedPiece(const MonomialCurve& curve, int k, int d)
    : k_(k), d_(d), ambient_(curve.ambient()) {
  if (k < 0) throw InputError("negative form degree");
  const Weights& w = curve.weights();
  for (const auto& idx : index_tuples(ambient_, k)) {
    for (const auto& m : monomials_of_weighted_degree(w.all(), d - tuple_weight(idx, w))) {
      index_.emplace(std::make_pair(idx, m), basis_.size());
      basis_.push_back({idx, m});
    }
  }
  zero_ = EchelonBasis(basis_.size());
  std::map<int, std::vector<Polynomial>> ideal_cache;
  auto ideal = [&](int e) -> const std::vector<Polynomial>& {
    auto it = ideal_cache.find(e);
    if (it == ideal_cache.end()) it = ideal_cache.emplace(e, ideal_piece(curve, e)).first;
    return it->second;
  };
  if (!basis_.empty()) {
    for (const auto& idx : index_tuples(ambient_, k))
      for (const auto& g : ideal(d - tuple_weight(idx, w)))
        zero_.insert(to_vector(DifferentialForm::basic(ambient_, idx, g)));
    if (k >= 1)
      for (const auto& idx : index_tuples(ambient_, k - 1))
        for (const auto& g : ideal(d - tuple_weight(idx, w))) {
          DifferentialForm dg = ext_der(DifferentialForm::basic(ambient_, idx, g));
          if (!dg.is_zero()) zero_.insert(to_vector(dg));
        }
  }
  free_ = zero_.free_columns();
}

std::vector<DifferentialForm> GradedPiece::zero_basis() const {
  std::vector<DifferentialForm> out;
  for (const auto& row : zero_.rows()) out.push_back(from_vector(row));
  return out;
}

std::vector<DifferentialForm> GradedPiece::quotient_representatives() const {
  std::vector<DifferentialForm> out;
  for (auto j : free_) out.push_back(basis_[j].to_form());
  return out;
}

QVector GradedPiece::to_vector(const DifferentialForm& w) const {
  if (w.nvars() != ambient_) throw InputError("form lives in a different ambient dimension");
  QVector v(basis_.size());
  if (w.is_zero()) return v;
  if (w.degree() != k_) throw InputError("form has degree " + std::to_string(w.degree()) + ", expected " + std::to_string(k_));
  for (const auto& [idx, g] : w.terms())
    for (const auto& [m, c] : g.terms()) {
      auto it = index_.find({idx, m});
      if (it == index_.end())
        throw InputError("form is not quasi-homogeneous of quasi-degree " + std::to_string(d_));
      v[it->second] += c;
    }
  return v;
}

DifferentialForm GradedPiece::from_vector(const QVector& v) const {
  DifferentialForm out(ambient_, k_);
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) out.add_term(basis_[j].idx, Polynomial::term(basis_[j].mono, v[j]));
  return out;
}

QVector GradedPiece::quotient_coords_of_vector(const QVector& v) const {
  QVector r = zero_.reduce(v);
  QVector q(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) q[i] = r[free_[i]];
  return q;
}

QVector GradedPiece::quotient_coords(const DifferentialForm& w) const {
  return quotient_coords_of_vector(to_vector(w));
}

DifferentialForm GradedPiece::quotient_form(const QVector& q) const {
  QVector v(basis_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = q[i];
  return from_vector(v);
}

bool GradedPiece::in_zero(const DifferentialForm& w) const { return zero_.contains(to_vector(w)); }

std::vector<DifferentialForm> zero_restriction_basis(const MonomialCurve& c, int k, int d) {
  return GradedPiece(c, k, d).zero_basis();
}

GradedPiece restriction_quotient(const MonomialCurve& c, int k, int d) { return GradedPiece(c, k, d); }

DifferentialForm strip_off_curve(const DifferentialForm& w, const MonomialCurve& c) {
  if (w.nvars() != c.ambient())
    throw InputError("form has " + std::to_string(w.nvars()) + " variables, curve ambient is " +
                     std::to_string(c.ambient()));
  return w.restricted(c.s());
}

int default_degree_bound(const MonomialCurve& c) {
  const auto& l = c.lambda();
  int b = c.conductor() + 3 * l.back();
  if (l.size() >= 2) b += l[l.size() - 2];
  return b;
}

// ---------------------------------------------------------------------------
// Labelled frames

namespace {

struct TermSpec {
  long num, den;
  std::vector<int> exps;
  std::vector<int> idx;  // 1-based
};

struct FrameSpec {
  int qdeg;
  const char* label;
  std::vector<TermSpec> terms;
};

const std::vector<FrameSpec>* known_frame(const std::vector<int>& lambda) {
  static const std::vector<FrameSpec> f4567{
      {9, "a9", {{1, 1, {0, 0, 0, 0}, {1, 2}}}},
      {10, "a10", {{1, 1, {0, 0, 0, 0}, {1, 3}}}},
      {11, "a11+", {{1, 1, {0, 0, 0, 0}, {2, 3}}}},
      {11, "a11-", {{1, 1, {0, 0, 0, 0}, {1, 4}}}},
      {12, "a12", {{1, 1, {0, 0, 0, 0}, {2, 4}}}},
      {13, "a13+", {{1, 1, {0, 0, 0, 0}, {3, 4}}}},
      {13, "a13-", {{1, 1, {1, 0, 0, 0}, {1, 2}}}},
      {14, "a14", {{1, 1, {1, 0, 0, 0}, {1, 3}}}},
      {15, "a15-", {{1, 1, {1, 0, 0, 0}, {1, 4}}}},
  };
  static const std::vector<FrameSpec> f456{
      {9, "a9", {{1, 1, {0, 0, 0}, {1, 2}}}},
      {10, "a10", {{1, 1, {0, 0, 0}, {1, 3}}}},
      {11, "a11", {{1, 1, {0, 0, 0}, {2, 3}}}},
      {13, "a13", {{1, 1, {1, 0, 0}, {1, 2}}}},
      {14, "a14", {{1, 1, {1, 0, 0}, {1, 3}}}},
      {15, "a15", {{1, 1, {0, 1, 0}, {1, 3}}, {1, 1, {1, 0, 0}, {2, 3}}}},
      {17, "a17", {{1, 1, {0, 0, 1}, {2, 3}}}},
      {19, "a19", {{1, 1, {0, 2, 0}, {1, 2}}}},
  };
  static const std::vector<FrameSpec> f457{
      {9, "a9", {{1, 1, {0, 0, 0}, {1, 2}}}},
      {11, "a11", {{1, 1, {0, 0, 0}, {1, 3}}}},
      {12, "a12", {{1, 1, {0, 0, 0}, {2, 3}}}},
      {13, "a13", {{1, 1, {1, 0, 0}, {1, 2}}}},
      {14, "a14", {{1, 1, {0, 1, 0}, {1, 2}}}},
      {15, "a15", {{1, 1, {1, 0, 0}, {1, 3}}}},
      {16, "a16", {{1, 1, {0, 1, 0}, {1, 3}}, {1, 1, {1, 0, 0}, {2, 3}}}},
      {17, "a17", {{1, 1, {0, 1, 0}, {2, 3}}}},
      {18, "a18", {{1, 1, {0, 0, 1}, {1, 3}}}},
  };
  if (lambda == std::vector<int>{4, 5, 6, 7}) return &f4567;
  if (lambda == std::vector<int>{4, 5, 6}) return &f456;
  if (lambda == std::vector<int>{4, 5, 7}) return &f457;
  return nullptr;
}

DifferentialForm build(const FrameSpec& spec, std::size_t ambient) {
  DifferentialForm w(ambient, 2);
  for (const auto& t : spec.terms) {
    std::vector<int> e = t.exps;
    e.resize(ambient, 0);
    std::vector<int> idx;
    for (int i : t.idx) idx.push_back(i - 1);
    w += DifferentialForm::basic(ambient, idx, Polynomial::term(Monomial(e), make_rational(t.num, t.den)));
  }
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// RestrictionBasis

struct DegreeBlock {
  std::size_t first = 0, count = 0;
  /// Free columns of the A^2 -> A^3 map; canonical kernel coordinate i is q[kfree[i]].
  std::vector<std::size_t> kfree;
  /// Canonical kernel coordinates -> frame coordinates.
  QMatrix to_frame;
};

struct RestrictionBasis::Impl {
  MonomialCurve curve;
  MonomialCurve work;
  bool reduce_ambient = true;
  bool paper = false;
  int bound = 0;
  int K = 0;
  std::vector<BasisElement> elements;
  std::map<int, DegreeBlock> blocks;

  mutable std::recursive_mutex mu;
  mutable std::map<std::pair<int, int>, std::unique_ptr<GradedPiece>> pieces;
  mutable std::map<int, std::pair<std::vector<QVector>, std::vector<std::size_t>>> kernels;

  Impl(const MonomialCurve& c, bool reduce)
      : curve(c), work(reduce ? c.with_ambient(c.s()) : c), reduce_ambient(reduce) {}

  const GradedPiece& piece(int k, int d) const {
    std::lock_guard lock(mu);
    auto& slot = pieces[{k, d}];
    if (!slot) slot = std::make_unique<GradedPiece>(work, k, d);
    return *slot;
  }

  const std::pair<std::vector<QVector>, std::vector<std::size_t>>& kernel(int d) const {
    std::lock_guard lock(mu);
    auto it = kernels.find(d);
    if (it != kernels.end()) return it->second;
    const GradedPiece& p2 = piece(2, d);
    std::pair<std::vector<QVector>, std::vector<std::size_t>> result;
    std::size_t n2 = p2.dim_quotient();
    if (n2 > 0) {
      const GradedPiece& p3 = piece(3, d);
      QMatrix m(p3.dim_quotient(), n2);
      auto reps = p2.quotient_representatives();
      for (std::size_t j = 0; j < n2; ++j) {
        QVector col = p3.quotient_coords(ext_der(reps[j]));
        for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
      }
      RrefResult r = rref(m);
      result.first = r.kernel;
      std::vector<bool> piv(n2, false);
      for (auto c : r.pivots) piv[c] = true;
      for (std::size_t j = 0; j < n2; ++j)
        if (!piv[j]) result.second.push_back(j);
    }
    return kernels.emplace(d, std::move(result)).first->second;
  }

  DifferentialForm reducible(const DifferentialForm& w) const {
    if (w.nvars() != curve.ambient())
      throw InputError("form has " + std::to_string(w.nvars()) + " variables, curve ambient is " +
                       std::to_string(curve.ambient()));
    return reduce_ambient ? strip_off_curve(w, curve) : w;
  }
};

const MonomialCurve& RestrictionBasis::curve() const { return impl_->curve; }
const std::vector<BasisElement>& RestrictionBasis::elements() const { return impl_->elements; }
int RestrictionBasis::K() const { return impl_->K; }
int RestrictionBasis::bound() const { return impl_->bound; }
bool RestrictionBasis::paper_frame() const { return impl_->paper; }

std::vector<int> RestrictionBasis::degrees() const {
  std::vector<int> out;
  for (const auto& e : impl_->elements) out.push_back(e.qdeg);
  return out;
}

std::optional<std::size_t> RestrictionBasis::index_of(const std::string& label) const {
  std::string key = label;
  auto caret = key.find('^');
  if (caret != std::string::npos && caret + 2 == key.size()) key.erase(caret, 1);
  for (std::size_t i = 0; i < impl_->elements.size(); ++i)
    if (impl_->elements[i].label == key) return i;
  return std::nullopt;
}

const BasisElement& RestrictionBasis::element(const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw InputError("unknown basis label '" + label + "'");
  return impl_->elements[*i];
}

AlgRestriction RestrictionBasis::zero() const { return AlgRestriction(*this, QVector(size())); }

AlgRestriction RestrictionBasis::unit(std::size_t i) const {
  QVector v(size());
  v.at(i) = 1;
  return AlgRestriction(*this, v);
}

AlgRestriction RestrictionBasis::unit(const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw InputError("unknown basis label '" + label + "'");
  return unit(*i);
}

AlgRestriction RestrictionBasis::from_coords(QVector coords) const {
  return AlgRestriction(*this, std::move(coords));
}

const MonomialCurve& RestrictionBasis::work_curve() const { return impl_->work; }

DifferentialForm RestrictionBasis::to_work(const DifferentialForm& w) const { return impl_->reducible(w); }

const GradedPiece& RestrictionBasis::piece(int k, int d) const { return impl_->piece(k, d); }

const std::vector<QVector>& RestrictionBasis::closed_kernel(int d) const { return impl_->kernel(d).first; }

std::map<int, QVector> RestrictionBasis::quotient_parts(const DifferentialForm& w) const {
  DifferentialForm r = impl_->reducible(w);
  std::map<int, QVector> out;
  for (const auto& [d, part] : graded_parts(r, impl_->work.weights())) {
    QVector q = piece(part.degree(), d).quotient_coords(part);
    if (!is_zero(q)) out.emplace(d, std::move(q));
  }
  return out;
}

AlgRestriction RestrictionBasis::project(const DifferentialForm& w) const {
  if (w.degree() != 2 && !w.is_zero()) throw InputError("project expects a 2-form");
  DifferentialForm r = impl_->reducible(w);
  QVector coords(size());
  for (const auto& [d, part] : graded_parts(r, impl_->work.weights())) {
    const GradedPiece& p2 = piece(2, d);
    QVector q = p2.quotient_coords(part);
    if (is_zero(q)) continue;
    QVector dq = piece(3, d).quotient_coords(ext_der(part));
    if (!is_zero(dq))
      throw InputError("not closed as a restriction: the exterior derivative has a nonzero restriction "
                       "in quasi-degree " + std::to_string(d));
    auto bit = impl_->blocks.find(d);
    if (bit == impl_->blocks.end()) {
      if (d <= impl_->bound) throw std::logic_error("closed class outside the computed basis");
      throw InputError("closed restriction at quasi-degree " + std::to_string(d) +
                       " beyond the scan bound " + std::to_string(impl_->bound) + "; raise --max-qdeg");
    }
    const DegreeBlock& blk = bit->second;
    const auto& ker = impl_->kernel(d).first;
    QVector y(blk.count);
    QVector check(q.size());
    for (std::size_t i = 0; i < blk.count; ++i) {
      y[i] = q[blk.kfree[i]];
      check = check + y[i] * ker[i];
    }
    if (check != q) throw std::logic_error("closed class not in the span of the closed kernel");
    QVector z = blk.to_frame * y;
    for (std::size_t i = 0; i < blk.count; ++i) coords[blk.first + i] = z[i];
  }
  return AlgRestriction(*this, std::move(coords));
}

DifferentialForm RestrictionBasis::representative(const AlgRestriction& a) const {
  DifferentialForm w(curve().ambient(), 2);
  for (std::size_t i = 0; i < size(); ++i)
    if (a[i] != 0) w += a[i] * impl_->elements[i].representative;
  return w;
}

RestrictionBasis closed2_restriction_basis(const MonomialCurve& c, const BasisOptions& options) {
  auto impl = std::make_shared<RestrictionBasis::Impl>(c, options.reduce_ambient);
  impl->bound = options.max_qdeg.value_or(default_degree_bound(c));
  const std::vector<FrameSpec>* frame = options.paper_frame ? known_frame(c.lambda()) : nullptr;
  impl->paper = frame != nullptr;

  int top = 0;
  for (int d = 1; d <= impl->bound; ++d)
    if (!impl->kernel(d).first.empty()) top = d;
  impl->K = top;

  int window = 2 * c.lambda().back();
  if (top > impl->bound - window)
    throw InputError("closed restrictions persist at quasi-degree " + std::to_string(top) +
                     ", within " + std::to_string(window) + " of the scan bound " +
                     std::to_string(impl->bound) + "; raise --max-qdeg");

  std::size_t work_m = impl->work.ambient();
  for (int d = 1; d <= impl->bound; ++d) {
    const auto& [ker, kfree] = impl->kernel(d);
    if (ker.empty()) continue;
    const GradedPiece& p2 = impl->piece(2, d);
    DegreeBlock blk;
    blk.first = impl->elements.size();
    blk.count = ker.size();
    blk.kfree = kfree;
    std::vector<std::pair<std::string, DifferentialForm>> reps;
    if (frame) {
      for (const auto& spec : *frame)
        if (spec.qdeg == d) reps.emplace_back(spec.label, build(spec, work_m));
      if (reps.size() != ker.size())
        throw std::logic_error("labelled frame does not match the closed kernel in degree " + std::to_string(d));
      QMatrix canon(blk.count, blk.count);
      for (std::size_t j = 0; j < reps.size(); ++j) {
        QVector q = p2.quotient_coords(reps[j].second);
        for (std::size_t i = 0; i < blk.count; ++i) canon(i, j) = q[kfree[i]];
      }
      RrefResult inv = rref([&] {
        QMatrix aug(blk.count, 2 * blk.count);
        for (std::size_t i = 0; i < blk.count; ++i) {
          for (std::size_t j = 0; j < blk.count; ++j) aug(i, j) = canon(i, j);
          aug(i, blk.count + i) = 1;
        }
        return aug;
      }());
      if (inv.rank != blk.count || inv.pivots.back() >= blk.count)
        throw std::logic_error("labelled frame is dependent in degree " + std::to_string(d));
      blk.to_frame = QMatrix(blk.count, blk.count);
      for (std::size_t i = 0; i < blk.count; ++i)
        for (std::size_t j = 0; j < blk.count; ++j) blk.to_frame(i, j) = inv.reduced(i, blk.count + j);
    } else {
      for (std::size_t i = 0; i < ker.size(); ++i) {
        std::string label = "a" + std::to_string(d);
        if (ker.size() > 1) label += "_" + std::to_string(i + 1);
        reps.emplace_back(label, p2.quotient_form(ker[i]));
      }
      blk.to_frame = QMatrix::identity(blk.count);
    }
    for (auto& [label, rep] : reps)
      impl->elements.push_back({d, label, rep.nvars() == c.ambient() ? rep : rep.embedded(c.ambient())});
    impl->blocks.emplace(d, std::move(blk));
  }
  if (frame && impl->elements.size() != frame->size())
    throw std::logic_error("labelled frame has elements outside the closed basis");
  return RestrictionBasis(impl);
}

// ---------------------------------------------------------------------------
// AlgRestriction

AlgRestriction::AlgRestriction(RestrictionBasis basis, QVector coords)
    : basis_(std::move(basis)), coords_(std::move(coords)) {
  if (coords_.size() != basis_.size())
    throw InputError("restriction has " + std::to_string(coords_.size()) + " coordinates, basis has " +
                     std::to_string(basis_.size()));
}

Rational AlgRestriction::coord(const std::string& label) const {
  auto i = basis_.index_of(label);
  if (!i) throw InputError("unknown basis label '" + label + "'");
  return coords_[*i];
}

AlgRestriction AlgRestriction::graded_part(int d) const {
  QVector v(coords_.size());
  const auto& el = basis_.elements();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (el[i].qdeg == d) v[i] = coords_[i];
  return AlgRestriction(basis_, std::move(v));
}

std::vector<int> AlgRestriction::support() const {
  std::vector<int> out;
  const auto& el = basis_.elements();
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0 && (out.empty() || out.back() != el[i].qdeg)) out.push_back(el[i].qdeg);
  return out;
}

AlgRestriction& AlgRestriction::operator+=(const AlgRestriction& o) {
  if (!(basis_ == o.basis_)) throw InputError("restrictions refer to different bases");
  coords_ = coords_ + o.coords_;
  return *this;
}

AlgRestriction& AlgRestriction::operator-=(const AlgRestriction& o) {
  if (!(basis_ == o.basis_)) throw InputError("restrictions refer to different bases");
  coords_ = coords_ - o.coords_;
  return *this;
}

AlgRestriction operator*(const Rational& s, AlgRestriction a) {
  a.coords_ = s * a.coords_;
  return a;
}

std::string AlgRestriction::to_string() const {
  std::string out;
  const auto& el = basis_.elements();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c == 0) continue;
    if (out.empty()) out += sgn(c) < 0 ? "-" : "";
    else out += sgn(c) < 0 ? " - " : " + ";
    Rational mag = abs(c);
    if (mag != 1) out += algres::to_string(mag) + "*";
    out += el[i].label;
  }
  return out.empty() ? "0" : out;
}

AlgRestriction project(const MonomialCurve& c, const DifferentialForm& w, const RestrictionBasis& b) {
  if (!(c == b.curve())) throw InputError("curve does not match the basis curve");
  return b.project(w);
}

std::optional<MinPart> min_qdeg_part(const AlgRestriction& a) {
  auto sup = a.support();
  if (sup.empty()) return std::nullopt;
  return MinPart{sup.front(), a.graded_part(sup.front())};
}

}  // namespace algres
