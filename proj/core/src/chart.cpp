#include "griemlab/chart.hpp"

#include "griemlab/error.hpp"

#include <array>
#include <random>
#include <utility>

namespace griemlab {

namespace {

constexpr std::array<std::pair<StructureKind, std::string_view>, 5> kKindNames{{
    {StructureKind::generic, "generic"},
    {StructureKind::weak_hermitian, "weak-hermitian"},
    {StructureKind::weak_contact, "weak-contact"},
    {StructureKind::weak_f, "weak-f"},
    {StructureKind::para, "para"},
}};

constexpr std::array<std::pair<TorsionChoice, std::string_view>, 6> kTorsionNames{{
    {TorsionChoice::zero, "zero"},
    {TorsionChoice::nearly_kahler, "nearly-kahler"},
    {TorsionChoice::chern, "chern"},
    {TorsionChoice::bismut, "bismut"},
    {TorsionChoice::eisenhart, "eisenhart"},
    {TorsionChoice::contact, "contact"},
}};

Mat values_of(const JetMatrix& m) {
  Mat r(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r(i, j) = m(i, j).value;
  return r;
}

JetMatrix as_column(const JetVector& v) {
  JetMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

}  // namespace

std::string_view to_string(StructureKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "generic";
}

StructureKind structure_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw ParseError("unknown structure kind '" + std::string(name) + "'");
}

std::string_view to_string(TorsionChoice choice) {
  for (const auto& [c, name] : kTorsionNames)
    if (c == choice) return name;
  return "zero";
}

TorsionChoice torsion_choice_from_string(std::string_view name) {
  for (const auto& [c, n] : kTorsionNames)
    if (n == name) return c;
  throw ParseError("unknown torsion choice '" + std::string(name) + "'");
}

Box Box::cube(std::size_t n, double half_width) {
  return Box{std::vector<double>(n, -half_width), std::vector<double>(n, half_width)};
}

bool Box::contains(std::span<const double> p) const {
  if (p.size() != lo.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(p[i] >= lo[i] && p[i] <= hi[i])) return false;
  return true;
}

ChartManifold::ChartManifold(std::string name, std::size_t dim, Box domain, MatrixFieldFn g, MatrixFieldFn F,
                             StructureKind kind)
    : name_(std::move(name)),
      dim_(dim),
      domain_(std::move(domain)),
      sample_box_(domain_),
      g_(std::move(g)),
      F_(std::move(F)),
      kind_(kind) {
  if (dim_ == 0 || dim_ > kMaxJetDim)
    throw ParseError("chart dimension must be in [1, " + std::to_string(kMaxJetDim) + "]");
  if (domain_.lo.size() != dim_ || domain_.hi.size() != dim_) throw ShapeError("domain box does not match dimension");
  for (std::size_t i = 0; i < dim_; ++i) coordinate_names_.push_back("x" + std::to_string(i + 1));
}

ChartManifold& ChartManifold::with_contact(VectorFieldFn eta, VectorFieldFn xi) {
  eta_ = std::move(eta);
  xi_ = std::move(xi);
  return *this;
}

ChartManifold& ChartManifold::with_sample_box(Box box) {
  if (box.lo.size() != dim_ || box.hi.size() != dim_) throw ShapeError("sample box does not match dimension");
  sample_box_ = std::move(box);
  return *this;
}

ChartManifold& ChartManifold::with_torsion(TorsionChoice choice) {
  torsion_ = choice;
  return *this;
}

ChartManifold& ChartManifold::with_distribution_torsion(DistributionTorsion part) {
  distribution_torsion_ = part;
  return *this;
}

ChartManifold& ChartManifold::with_coordinate_names(std::vector<std::string> names) {
  if (names.size() != dim_) throw ShapeError("coordinate names do not match dimension");
  coordinate_names_ = std::move(names);
  return *this;
}

JetMatrix ChartManifold::eval_matrix(FieldSelector field, std::span<const Jet> x) const {
  switch (field) {
    case FieldSelector::g: return g_(x);
    case FieldSelector::F: return F_(x);
    case FieldSelector::eta:
    case FieldSelector::xi: return as_column(eval_vector(field, x));
  }
  throw NotApplicableError("unknown field selector");
}

JetVector ChartManifold::eval_vector(FieldSelector field, std::span<const Jet> x) const {
  if (field == FieldSelector::eta || field == FieldSelector::xi) {
    if (!has_contact()) throw NotApplicableError("manifold '" + name_ + "' carries no contact data");
    return field == FieldSelector::eta ? eta_(x) : xi_(x);
  }
  throw NotApplicableError("eval_vector: g and F are matrix fields");
}

std::vector<std::vector<double>> ChartManifold::sample_points(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> points;
  points.reserve(count);
  std::size_t attempts = 0;
  while (points.size() < count) {
    if (++attempts > 1000 * (count + 1)) throw SingularMetricError("could not sample regular points on " + name_);
    std::vector<double> p(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      std::uniform_real_distribution<double> u(sample_box_.lo[i], sample_box_.hi[i]);
      p[i] = u(rng);
    }
    const auto x = coordinate_jets(p);
    if (std::abs(values_of(g_(x)).determinant()) < 1e-10) continue;
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<Jet> coordinate_jets(std::span<const double> p) {
  if (p.size() > kMaxJetDim) throw ShapeError("point dimension exceeds jet capacity");
  std::vector<Jet> x;
  x.reserve(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) x.push_back(Jet::variable(p[a], a));
  return x;
}

FieldJet evaluate_jet(const ChartManifold& manifold, FieldSelector field, std::span<const double> p) {
  const std::size_t n = manifold.dim();
  if (p.size() != n) throw ShapeError("point has wrong dimension for chart " + manifold.name());
  if (!manifold.domain().contains(p)) throw DomainError("point outside the domain of chart " + manifold.name());
  const auto x = coordinate_jets(p);
  const JetMatrix m = manifold.eval_matrix(field, x);
  FieldJet out;
  out.value = values_of(m);
  out.partials.assign(n, Mat::Zero(m.rows, m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      for (std::size_t a = 0; a < n; ++a) out.partials[a](i, j) = m(i, j).grad[a];
  if (field == FieldSelector::g) {
    if (out.value.rows() != static_cast<Eigen::Index>(n) || out.value.cols() != static_cast<Eigen::Index>(n))
      throw ShapeError("metric evaluator returned wrong shape");
    if (std::abs(out.value.determinant()) < 1e-10)
      throw SingularMetricError("g is singular at the requested point of " + manifold.name());
  }
  return out;
}

std::vector<Mat> finite_difference_partials(const ChartManifold& manifold, FieldSelector field,
                                            std::span<const double> p, double h) {
  const std::size_t n = manifold.dim();
  std::vector<Mat> out;
  std::vector<double> q(p.begin(), p.end());
  for (std::size_t a = 0; a < n; ++a) {
    q[a] = p[a] + h;
    const Mat plus = values_of(manifold.eval_matrix(field, coordinate_jets(q)));
    q[a] = p[a] - h;
    const Mat minus = values_of(manifold.eval_matrix(field, coordinate_jets(q)));
    q[a] = p[a];
    out.push_back((plus - minus) / (2.0 * h));
  }
  return out;
}

}  // namespace griemlab
