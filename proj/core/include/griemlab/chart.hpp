#pragma once

#include "griemlab/jet.hpp"
#include "griemlab/tensor.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace griemlab {

/// Which family of structure axioms the pair (g, F) is expected to satisfy.
enum class StructureKind { generic, weak_hermitian, weak_contact, weak_f, para };

std::string_view to_string(StructureKind kind);
StructureKind structure_kind_from_string(std::string_view name);

/// Torsion a chart prefers when a suite needs "the" connection of the structure.
enum class TorsionChoice { zero, nearly_kahler, chern, bismut, eisenhart, contact };

std::string_view to_string(TorsionChoice choice);
TorsionChoice torsion_choice_from_string(std::string_view name);

/// Part of the contact torsion living on the contact distribution.
enum class DistributionTorsion { none, nearly_kahler };

/// Axis-aligned box in R^n.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  static Box cube(std::size_t n, double half_width);
  bool contains(std::span<const double> p) const;
};

/// Row-major matrix of jets, the output of a chart field evaluator.
struct JetMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Jet> data;

  JetMatrix() = default;
  JetMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Jet& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Jet& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

using JetVector = std::vector<Jet>;
using MatrixFieldFn = std::function<JetMatrix(std::span<const Jet>)>;
using VectorFieldFn = std::function<JetVector(std::span<const Jet>)>;

enum class FieldSelector { g, F, eta, xi };

/// Value and first coordinate partials of a field at one point.
/// Vectors and covectors are stored as n x 1 columns.
struct FieldJet {
  Mat value;
  std::vector<Mat> partials;  // partials[a] = d/dx^a of value
};

/// A generalized Riemannian manifold (M, G = g + F) on a single coordinate patch.
///
/// Field evaluators are pure functions of the coordinates; a manifold value may
/// be shared read-only between threads.
class ChartManifold {
 public:
  ChartManifold(std::string name, std::size_t dim, Box domain, MatrixFieldFn g, MatrixFieldFn F,
                StructureKind kind);

  ChartManifold& with_contact(VectorFieldFn eta, VectorFieldFn xi);
  ChartManifold& with_sample_box(Box box);
  ChartManifold& with_torsion(TorsionChoice choice);
  ChartManifold& with_distribution_torsion(DistributionTorsion part);
  ChartManifold& with_coordinate_names(std::vector<std::string> names);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  StructureKind kind() const { return kind_; }
  const Box& domain() const { return domain_; }
  const Box& sample_box() const { return sample_box_; }
  bool has_contact() const { return static_cast<bool>(eta_); }
  TorsionChoice preferred_torsion() const { return torsion_; }
  DistributionTorsion distribution_torsion() const { return distribution_torsion_; }
  const std::vector<std::string>& coordinate_names() const { return coordinate_names_; }

  /// Raw jet evaluation without domain or regularity checks.
  JetMatrix eval_matrix(FieldSelector field, std::span<const Jet> x) const;
  JetVector eval_vector(FieldSelector field, std::span<const Jet> x) const;

  /// Seeded points from the sample box; points with |det g| < 1e-10 are rejected.
  std::vector<std::vector<double>> sample_points(std::size_t count, std::uint64_t seed) const;

 private:
  std::string name_;
  std::size_t dim_;
  Box domain_;
  Box sample_box_;
  MatrixFieldFn g_;
  MatrixFieldFn F_;
  VectorFieldFn eta_;
  VectorFieldFn xi_;
  StructureKind kind_;
  TorsionChoice torsion_ = TorsionChoice::zero;
  DistributionTorsion distribution_torsion_ = DistributionTorsion::none;
  std::vector<std::string> coordinate_names_;
};

/// Coordinate jets x^a seeded at p.
std::vector<Jet> coordinate_jets(std::span<const double> p);

/// Value and exact first partials (forward-mode AD) of one field at p.
/// Throws DomainError outside the chart and SingularMetricError when the g
/// selector hits |det g| < 1e-10.
FieldJet evaluate_jet(const ChartManifold& manifold, FieldSelector field, std::span<const double> p);

/// Central finite-difference partials of a field; test and verification oracle.
std::vector<Mat> finite_difference_partials(const ChartManifold& manifold, FieldSelector field,
                                            std::span<const double> p, double h = 1e-5);

}  // namespace griemlab
