#include "griemlab/zoo.hpp"

#include "griemlab/error.hpp"
#include "griemlab/expression.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <set>

namespace griemlab {

namespace {

using nlohmann::json;

// Writes the metric and fundamental form of one factor into the diagonal block at `offset`.
using BlockFill = std::function<void(std::span<const Jet> x, JetMatrix& g, JetMatrix& F, std::size_t offset)>;

struct Factor {
  std::string name;
  std::size_t dim = 0;
  bool kahler = true;
  BlockFill fill;
};

// F block of a conformal Kaehler form phi * (dx_1 ^ dx_2 + ...), so that A d_1 = d_2.
void conformal_blocks(JetMatrix& g, JetMatrix& F, std::size_t offset, std::size_t dim, const Jet& phi) {
  for (std::size_t i = 0; i < dim; ++i) g(offset + i, offset + i) = phi;
  for (std::size_t i = 0; i + 1 < dim; i += 2) {
    F(offset + i, offset + i + 1) = phi;
    F(offset + i + 1, offset + i) = -phi;
  }
}

// Structure constants of the imaginary octonions, e_a e_b = e_c along each oriented triple.
const std::array<std::array<std::array<int, 7>, 7>, 7>& cross_table() {
  static const auto table = [] {
    std::array<std::array<std::array<int, 7>, 7>, 7> eps{};
    constexpr int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
    for (const auto& t : triples) {
      const int a = t[0] - 1, b = t[1] - 1, c = t[2] - 1;
      eps[a][b][c] = eps[b][c][a] = eps[c][a][b] = 1;
      eps[b][a][c] = eps[a][c][b] = eps[c][b][a] = -1;
    }
    return eps;
  }();
  return table;
}

std::array<Jet, 7> cross7(const std::array<Jet, 7>& x, const std::array<Jet, 7>& y) {
  const auto& eps = cross_table();
  std::array<Jet, 7> r{};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        if (eps[i][j][k] != 0) r[k] += static_cast<double>(eps[i][j][k]) * (x[i] * y[j]);
  return r;
}

Jet dot7(const std::array<Jet, 7>& x, const std::array<Jet, 7>& y) {
  Jet s;
  for (int k = 0; k < 7; ++k) s += x[k] * y[k];
  return s;
}

// Stereographic chart of S^6 from (0,...,0,1): p = (2u, |u|^2 - 1) / (1 + |u|^2).
void s6_fill(std::span<const Jet> x, JetMatrix& g, JetMatrix& F, std::size_t offset) {
  Jet r2;
  for (std::size_t i = 0; i < 6; ++i) r2 += x[offset + i] * x[offset + i];
  const Jet d = 1.0 + r2;
  const Jet d2 = d * d;
  std::array<Jet, 7> p{};
  for (std::size_t i = 0; i < 6; ++i) p[i] = 2.0 * x[offset + i] / d;
  p[6] = (r2 - 1.0) / d;
  std::array<std::array<Jet, 7>, 6> e{};  // e[i] = dp/du_i
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t k = 0; k < 6; ++k) {
      e[i][k] = -4.0 * x[offset + k] * x[offset + i] / d2;
      if (k == i) e[i][k] += 2.0 / d;
    }
    e[i][6] = 4.0 * x[offset + i] / d2;
  }
  for (std::size_t i = 0; i < 6; ++i) {
    const auto pe = cross7(p, e[i]);
    for (std::size_t j = 0; j < 6; ++j) {
      g(offset + i, offset + j) = dot7(e[i], e[j]);
      F(offset + i, offset + j) = dot7(pe, e[j]);
    }
  }
}

Factor make_factor(const std::string& name) {
  if (name == "flat2" || name == "flat4") {
    const std::size_t n = name == "flat2" ? 2 : 4;
    return {name, n, true, [n](std::span<const Jet>, JetMatrix& g, JetMatrix& F, std::size_t off) {
              conformal_blocks(g, F, off, n, Jet(1.0));
            }};
  }
  if (name == "s2") {
    return {name, 2, true, [](std::span<const Jet> x, JetMatrix& g, JetMatrix& F, std::size_t off) {
              const Jet d = 1.0 + x[off] * x[off] + x[off + 1] * x[off + 1];
              conformal_blocks(g, F, off, 2, 4.0 / (d * d));
            }};
  }
  if (name == "s6") return {name, 6, false, s6_fill};
  throw ParseError("unknown product factor '" + name + "' (expected flat2, flat4, s2 or s6)");
}

// --- parameter helpers -------------------------------------------------------

json merged(const json& defaults, const json& params, const std::string& entry) {
  if (!params.is_null() && !params.is_object()) throw ParseError("parameters of '" + entry + "' must be an object");
  json out = defaults;
  if (params.is_object()) {
    for (const auto& [k, v] : params.items()) {
      if (!defaults.contains(k)) throw ParseError("unknown parameter '" + k + "' for zoo entry '" + entry + "'");
      out[k] = v;
    }
  }
  return out;
}

double number_param(const json& p, const std::string& key) {
  const json& v = p.at(key);
  if (!v.is_number()) throw ParseError("parameter '" + key + "' must be a number");
  return v.get<double>();
}

std::size_t size_param(const json& p, const std::string& key) {
  const double v = number_param(p, key);
  if (v < 1 || v != std::floor(v) || v > static_cast<double>(kMaxJetDim))
    throw ParseError("parameter '" + key + "' must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::vector<double> number_list(const json& p, const std::string& key) {
  const json& v = p.at(key);
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array()) throw ParseError("parameter '" + key + "' must be a number or a list of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ParseError("parameter '" + key + "' must contain numbers only");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<std::string> string_list(const json& p, const std::string& key) {
  const json& v = p.at(key);
  if (v.is_string()) return {v.get<std::string>()};
  if (!v.is_array()) throw ParseError("parameter '" + key + "' must be a string or a list of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw ParseError("parameter '" + key + "' must contain strings only");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::string label(const std::string& name, const json& params) {
  return params.empty() ? name : name + params.dump();
}

void require_positive(const std::vector<double>& weights) {
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w)) throw ParseError("weights must be strictly positive");
}

void require_distinct(const std::vector<double>& weights) {
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t j = i + 1; j < weights.size(); ++j)
      if (weights[i] == weights[j]) throw ParseError("weights of a weighted product must be pairwise distinct");
}

struct WeightedBlocks {
  std::vector<Factor> factors;
  std::vector<double> roots;  // sqrt(lambda_j)
  std::size_t dim = 0;
  bool kahler = true;
};

WeightedBlocks weighted_blocks(const std::vector<std::string>& names, const std::vector<double>& lambda) {
  if (names.empty()) throw ParseError("a product needs at least one factor");
  if (names.size() != lambda.size()) throw ParseError("need exactly one weight per factor");
  require_positive(lambda);
  WeightedBlocks w;
  for (std::size_t j = 0; j < names.size(); ++j) {
    w.factors.push_back(make_factor(names[j]));
    w.roots.push_back(std::sqrt(lambda[j]));
    w.dim += w.factors.back().dim;
    w.kahler = w.kahler && w.factors.back().kahler;
  }
  return w;
}

// Fill all weighted blocks starting at `offset`; F of factor j is scaled by sqrt(lambda_j).
void fill_weighted(const WeightedBlocks& w, std::span<const Jet> x, JetMatrix& g, JetMatrix& F, std::size_t offset) {
  std::size_t off = offset;
  for (std::size_t j = 0; j < w.factors.size(); ++j) {
    const Factor& f = w.factors[j];
    f.fill(x, g, F, off);
    for (std::size_t a = off; a < off + f.dim; ++a)
      for (std::size_t b = off; b < off + f.dim; ++b) F(a, b) *= w.roots[j];
    off += f.dim;
  }
}

JetVector unit_covector(std::size_t n, std::size_t index) {
  JetVector v(n);
  v[index] = Jet(1.0);
  return v;
}

// --- entries -----------------------------------------------------------------

ChartManifold flat_kahler(const json& params) {
  const json p = merged({{"n", 4}}, params, "flat_kahler");
  const std::size_t n = size_param(p, "n");
  if (n % 2 != 0) throw ParseError("flat_kahler needs an even dimension");
  auto fields = [n](std::span<const Jet>) {
    JetMatrix g(n, n), F(n, n);
    conformal_blocks(g, F, 0, n, Jet(1.0));
    return std::pair{g, F};
  };
  return ChartManifold(
      label("flat_kahler", p), n, Box::cube(n, 1e6), [fields](auto x) { return fields(x).first; },
      [fields](auto x) { return fields(x).second; }, StructureKind::weak_hermitian)
      .with_sample_box(Box::cube(n, 1.0));
}

ChartManifold s2_round(const json& params) {
  const json p = merged({{"r", 1.0}}, params, "s2_round");
  const double r = number_param(p, "r");
  if (!(r > 0.0)) throw ParseError("s2_round needs r > 0");
  auto conformal = [r](std::span<const Jet> x) {
    const Jet d = 1.0 + x[0] * x[0] + x[1] * x[1];
    return 4.0 * r * r / (d * d);
  };
  auto g = [conformal](std::span<const Jet> x) {
    JetMatrix g(2, 2), F(2, 2);
    conformal_blocks(g, F, 0, 2, conformal(x));
    return g;
  };
  auto F = [conformal](std::span<const Jet> x) {
    JetMatrix g(2, 2), F(2, 2);
    conformal_blocks(g, F, 0, 2, conformal(x));
    return F;
  };
  return ChartManifold(label("s2_round", p), 2, Box::cube(2, 1e6), g, F, StructureKind::weak_hermitian)
      .with_sample_box(Box::cube(2, 1.5));
}

ChartManifold s6_nearly_kahler(const json& params) {
  const json p = merged(json::object(), params, "s6_nearly_kahler");
  auto g = [](std::span<const Jet> x) {
    JetMatrix g(6, 6), F(6, 6);
    s6_fill(x, g, F, 0);
    return g;
  };
  auto F = [](std::span<const Jet> x) {
    JetMatrix g(6, 6), F(6, 6);
    s6_fill(x, g, F, 0);
    return F;
  };
  return ChartManifold("s6_nearly_kahler", 6, Box::cube(6, 1e6), g, F, StructureKind::weak_hermitian)
      .with_sample_box(Box::cube(6, 1.0))
      .with_torsion(TorsionChoice::nearly_kahler);
}

ChartManifold weighted_product(const json& params) {
  const json p = merged({{"factors", {"s6", "s2"}}, {"lambda", {1.0, 4.0}}}, params, "weighted_product");
  const auto lambda = number_list(p, "lambda");
  const auto w = std::make_shared<const WeightedBlocks>(weighted_blocks(string_list(p, "factors"), lambda));
  require_distinct(lambda);
  const std::size_t n = w->dim;
  if (n > kMaxJetDim) throw ParseError("weighted product exceeds the maximal chart dimension");
  auto g = [w, n](std::span<const Jet> x) {
    JetMatrix g(n, n), F(n, n);
    fill_weighted(*w, x, g, F, 0);
    return g;
  };
  auto F = [w, n](std::span<const Jet> x) {
    JetMatrix g(n, n), F(n, n);
    fill_weighted(*w, x, g, F, 0);
    return F;
  };
  return ChartManifold(label("weighted_product", p), n, Box::cube(n, 1e6), g, F, StructureKind::weak_hermitian)
      .with_sample_box(Box::cube(n, 1.0))
      .with_torsion(w->kahler ? TorsionChoice::zero : TorsionChoice::nearly_kahler);
}

ChartManifold conformal_hermitian_r4(const json& params) {
  const json p = merged({{"u", "x1"}}, params, "conformal_hermitian_r4");
  if (!p.at("u").is_string()) throw ParseError("parameter 'u' must be an expression string");
  const auto u = std::make_shared<const Expression>(Expression::parse(p.at("u").get<std::string>(), 4));
  auto make = [u](std::span<const Jet> x, bool want_g) {
    JetMatrix g(4, 4), F(4, 4);
    conformal_blocks(g, F, 0, 4, exp(2.0 * u->evaluate(x)));
    return want_g ? g : F;
  };
  return ChartManifold(
             label("conformal_hermitian_r4", p), 4, Box::cube(4, 1e6), [make](auto x) { return make(x, true); },
             [make](auto x) { return make(x, false); }, StructureKind::weak_hermitian)
      .with_sample_box(Box::cube(4, 1.0))
      .with_torsion(TorsionChoice::bismut);
}

// eta = (dz - y dx)/2, xi = 2 d_z, g = (dx^2 + dy^2)/4 + eta (x) eta, F = -d eta / 2.
ChartManifold sasakian_r3(const json& params) {
  const json p = merged(json::object(), params, "sasakian_r3");
  auto eta = [](std::span<const Jet> x) {
    JetVector e(3);
    e[0] = -0.5 * x[1];
    e[2] = Jet(0.5);
    return e;
  };
  auto xi = [](std::span<const Jet>) {
    JetVector v(3);
    v[2] = Jet(2.0);
    return v;
  };
  auto g = [eta](std::span<const Jet> x) {
    const JetVector e = eta(x);
    JetMatrix g(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) g(i, j) = e[i] * e[j];
    g(0, 0) += 0.25;
    g(1, 1) += 0.25;
    return g;
  };
  auto F = [](std::span<const Jet>) {
    // d eta = (1/2) dx ^ dy in the coboundary convention without 1/2.
    JetMatrix F(3, 3);
    F(0, 1) = Jet(-0.25);
    F(1, 0) = Jet(0.25);
    return F;
  };
  return ChartManifold("sasakian_r3", 3, Box::cube(3, 1e6), g, F, StructureKind::weak_contact)
      .with_contact(eta, xi)
      .with_sample_box(Box::cube(3, 1.0))
      .with_torsion(TorsionChoice::contact);
}

ChartManifold product_contact(const json& params) {
  const json p = merged({{"factors", {"flat4"}}, {"lambda", {1.0}}, {"s", 1}}, params, "product_contact");
  const std::size_t s = size_param(p, "s");
  const auto lambda = number_list(p, "lambda");
  const auto w = std::make_shared<const WeightedBlocks>(weighted_blocks(string_list(p, "factors"), lambda));
  if (w->factors.size() > 1) require_distinct(lambda);
  const std::size_t n = s + w->dim;
  if (n > kMaxJetDim) throw ParseError("product_contact exceeds the maximal chart dimension");
  auto make = [w, n, s](std::span<const Jet> x, bool want_g) {
    JetMatrix g(n, n), F(n, n);
    for (std::size_t i = 0; i < s; ++i) g(i, i) = Jet(1.0);
    fill_weighted(*w, x, g, F, s);
    return want_g ? g : F;
  };
  ChartManifold m(label("product_contact", p), n, Box::cube(n, 1e6), [make](auto x) { return make(x, true); },
                  [make](auto x) { return make(x, false); },
                  s == 1 ? StructureKind::weak_contact : StructureKind::weak_f);
  m.with_sample_box(Box::cube(n, 1.0));
  if (s == 1) {
    m.with_contact([n](std::span<const Jet>) { return unit_covector(n, 0); },
                   [n](std::span<const Jet>) { return unit_covector(n, 0); })
        .with_torsion(TorsionChoice::contact)
        .with_distribution_torsion(w->kahler ? DistributionTorsion::none : DistributionTorsion::nearly_kahler);
  }
  return m;
}

ChartManifold eisenhart_r3(const json& params) {
  const json p = merged({{"f12", "0"}, {"f13", "0"}, {"f23", "x1"}}, params, "eisenhart_r3");
  std::array<std::shared_ptr<const Expression>, 3> f;
  const char* keys[3] = {"f12", "f13", "f23"};
  for (int k = 0; k < 3; ++k) {
    if (!p.at(keys[k]).is_string()) throw ParseError(std::string("parameter '") + keys[k] + "' must be an expression");
    f[k] = std::make_shared<const Expression>(Expression::parse(p.at(keys[k]).get<std::string>(), 3));
  }
  auto g = [](std::span<const Jet>) {
    JetMatrix g(3, 3);
    for (std::size_t i = 0; i < 3; ++i) g(i, i) = Jet(1.0);
    return g;
  };
  auto F = [f](std::span<const Jet> x) {
    constexpr std::size_t slots[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    JetMatrix F(3, 3);
    for (int k = 0; k < 3; ++k) {
      const Jet v = f[k]->evaluate(x);
      F(slots[k][0], slots[k][1]) = v;
      F(slots[k][1], slots[k][0]) = -v;
    }
    return F;
  };
  return ChartManifold(label("eisenhart_r3", p), 3, Box::cube(3, 1e6), g, F, StructureKind::generic)
      .with_sample_box(Box::cube(3, 1.0))
      .with_torsion(TorsionChoice::eisenhart);
}

// Neutral blocks g = exp(2u) diag(1, -1), A = sqrt(lambda) [[0, 1], [1, 0]] (A d_1 = sqrt(lambda) d_2).
ChartManifold para_flat(const json& params) {
  const json p = merged({{"n", 4}, {"lambda", 2.0}, {"contact", false}, {"u", "0"}}, params, "para_flat");
  const std::size_t n = size_param(p, "n");
  if (n % 2 != 0) throw ParseError("para_flat needs an even n");
  auto lambda = number_list(p, "lambda");
  if (lambda.size() == 1) lambda.assign(n / 2, lambda.front());
  if (lambda.size() != n / 2) throw ParseError("para_flat needs one lambda or one per 2-block");
  require_positive(lambda);
  if (!p.at("contact").is_boolean()) throw ParseError("parameter 'contact' must be a boolean");
  const bool contact = p.at("contact").get<bool>();
  if (!p.at("u").is_string()) throw ParseError("parameter 'u' must be an expression string");
  const std::size_t dim = n + (contact ? 1 : 0);
  if (dim > kMaxJetDim) throw ParseError("para_flat exceeds the maximal chart dimension");
  const auto u = std::make_shared<const Expression>(Expression::parse(p.at("u").get<std::string>(), dim));
  std::vector<double> roots;
  for (double l : lambda) roots.push_back(std::sqrt(l));
  auto make = [u, n, dim, roots, contact](std::span<const Jet> x, bool want_g) {
    const Jet c = exp(2.0 * u->evaluate(x));
    JetMatrix g(dim, dim), F(dim, dim);
    for (std::size_t b = 0; b < n / 2; ++b) {
      const std::size_t i = 2 * b;
      g(i, i) = c;
      g(i + 1, i + 1) = -c;
      F(i, i + 1) = -roots[b] * c;
      F(i + 1, i) = roots[b] * c;
    }
    if (contact) g(n, n) = Jet(1.0);
    return want_g ? g : F;
  };
  ChartManifold m(label("para_flat", p), dim, Box::cube(dim, 1e6), [make](auto x) { return make(x, true); },
                  [make](auto x) { return make(x, false); }, StructureKind::para);
  m.with_sample_box(Box::cube(dim, 1.0));
  if (contact)
    m.with_contact([dim, n](std::span<const Jet>) { return unit_covector(dim, n); },
                   [dim, n](std::span<const Jet>) { return unit_covector(dim, n); });
  return m;
}

// Kaehler form on R^4 bent by eps: F_12 = 1 + eps x3, F_34 = 1 + eps x1.
ChartManifold perturbed_kahler_r4(const json& params) {
  const json p = merged({{"eps", 0.1}}, params, "perturbed_kahler_r4");
  const double eps = number_param(p, "eps");
  auto g = [](std::span<const Jet>) {
    JetMatrix g(4, 4);
    for (std::size_t i = 0; i < 4; ++i) g(i, i) = Jet(1.0);
    return g;
  };
  auto F = [eps](std::span<const Jet> x) {
    JetMatrix F(4, 4);
    F(0, 1) = 1.0 + eps * x[2];
    F(1, 0) = -F(0, 1);
    F(2, 3) = 1.0 + eps * x[0];
    F(3, 2) = -F(2, 3);
    return F;
  };
  return ChartManifold(label("perturbed_kahler_r4", p), 4, Box::cube(4, 1e6), g, F, StructureKind::weak_hermitian)
      .with_sample_box(Box::cube(4, 1.0))
      .with_torsion(TorsionChoice::nearly_kahler);
}

// Frame e1 = d1, e2 = cos(x1) d2 + sin(x1) d3, e3 = -sin(x1) d2 + cos(x1) d3, e4 = d4 with
// F = e1 ^ e2 + 2 e3 ^ e4: Q has eigenvalues 1 and 4 but span(e1, e2) is not involutive.
ChartManifold twisted_product_r4(const json& params) {
  const json p = merged(json::object(), params, "twisted_product_r4");
  auto g = [](std::span<const Jet>) {
    JetMatrix g(4, 4);
    for (std::size_t i = 0; i < 4; ++i) g(i, i) = Jet(1.0);
    return g;
  };
  auto F = [](std::span<const Jet> x) {
    const Jet c = cos(x[0]);
    const Jet s = sin(x[0]);
    JetMatrix F(4, 4);
    F(0, 1) = c;
    F(0, 2) = s;
    F(1, 3) = -2.0 * s;
    F(2, 3) = 2.0 * c;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < i; ++j) F(i, j) = -F(j, i);
    return F;
  };
  return ChartManifold("twisted_product_r4", 4, Box::cube(4, 1e6), g, F, StructureKind::weak_hermitian)
      .with_sample_box(Box::cube(4, 1.0));
}

struct Entry {
  const char* name;
  const char* summary;
  ChartManifold (*build)(const json&);
  const char* defaults;
};

constexpr Entry kEntries[] = {
    {"flat_kahler", "R^n with the standard Kaehler structure", flat_kahler, R"({"n":4})"},
    {"s2_round", "round 2-sphere of radius r, stereographic chart", s2_round, R"({"r":1.0})"},
    {"s6_nearly_kahler", "nearly Kaehler 6-sphere from the octonion cross product", s6_nearly_kahler, "{}"},
    {"weighted_product", "weighted product of almost Hermitian factors", weighted_product,
     R"({"factors":["s6","s2"],"lambda":[1.0,4.0]})"},
    {"conformal_hermitian_r4", "R^4 with g = exp(2u) delta and the standard complex structure",
     conformal_hermitian_r4, R"({"u":"x1"})"},
    {"sasakian_r3", "Sasakian structure on R^3", sasakian_r3, "{}"},
    {"product_contact", "R^s times a weighted Hermitian factor (contact for s = 1, f-structure otherwise)",
     product_contact, R"({"factors":["flat4"],"lambda":[1.0],"s":1})"},
    {"eisenhart_r3", "R^3 with g = delta and a non-closed F", eisenhart_r3,
     R"({"f12":"0","f13":"0","f23":"x1"})"},
    {"para_flat", "neutral R^n with a weak para-Hermitian (optionally para-contact) structure", para_flat,
     R"({"n":4,"lambda":2.0,"contact":false,"u":"0"})"},
    {"perturbed_kahler_r4", "weak almost Hermitian R^4 that is not nearly Kaehler", perturbed_kahler_r4,
     R"({"eps":0.1})"},
    {"twisted_product_r4", "weak almost Hermitian R^4 whose Q-eigen-distributions are not involutive",
     twisted_product_r4, "{}"},
};

json parse_scalar(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc() && ptr == s.data() + s.size() && !s.empty()) return v;
  return std::string(s);
}

}  // namespace

std::vector<ZooEntryInfo> zoo_catalog() {
  std::vector<ZooEntryInfo> out;
  for (const auto& e : kEntries) out.push_back({e.name, e.summary, json::parse(e.defaults)});
  return out;
}

ChartManifold build_zoo(const ZooSpec& spec) {
  for (const auto& e : kEntries)
    if (spec.name == e.name) return e.build(spec.params);
  throw ParseError("unknown zoo entry '" + spec.name + "'");
}

ZooSpec parse_zoo_spec(std::string_view text) {
  if (text.starts_with("zoo:")) text.remove_prefix(4);
  ZooSpec spec;
  const auto q = text.find('?');
  spec.name = std::string(text.substr(0, q));
  if (spec.name.empty()) throw ParseError("empty zoo entry name");
  if (q == std::string_view::npos) return spec;
  std::string_view rest = text.substr(q + 1);
  while (!rest.empty()) {
    const auto amp = rest.find('&');
    const std::string_view item = rest.substr(0, amp);
    rest = amp == std::string_view::npos ? std::string_view{} : rest.substr(amp + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw ParseError("malformed zoo parameter '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    const std::string_view value = item.substr(eq + 1);
    if (value.find(',') != std::string_view::npos) {
      json list = json::array();
      std::string_view v = value;
      for (;;) {
        const auto comma = v.find(',');
        list.push_back(parse_scalar(v.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        v = v.substr(comma + 1);
      }
      spec.params[key] = list;
    } else {
      spec.params[key] = parse_scalar(value);
    }
  }
  return spec;
}

}  // namespace griemlab
