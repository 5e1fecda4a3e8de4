#include "suite_defs.hpp"

#include "griemlab/algebra.hpp"
#include "griemlab/connections.hpp"
#include "griemlab/structures.hpp"
#include "griemlab/zoo.hpp"

#include <algorithm>
#include <numeric>

namespace griemlab::detail {

namespace {

constexpr double kExact = 1e-12;
constexpr double kConstruction = 1e-11;
constexpr double kFirst = 1e-8;
constexpr double kChained = 1e-7;
constexpr double kControl = 1e-3;
constexpr double kFlag = 0.5;  // 0/1 valued residuals

double scale(const Tensor3& t) { return std::max(1.0, max_abs(t)); }

double iff(double a, double ta, double b, double tb) { return ((a < ta) == (b < tb)) ? 0.0 : 1.0; }

Tensor3 random_skew(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = normal(rng);
  Tensor3 s = alternate(t);
  const double m = max_abs(s);
  return m > 0.0 ? s * (1.0 / m) : s;
}

// r(i, j, k) = sum_m p(k, m) t(i, j, m): apply an endomorphism to the vector output of a (1,2)-tensor.
Tensor3 apply_output(const Tensor3& t, const Mat& p) { return compose(t, 2, p.transpose()); }

// (nabla^g_X P)Y - 1/2 [P T(X,Y) - T(X, PY)] for skew torsion.
double nabla_g_endo_from_torsion(const PointFrame& f, const Mat& p, std::span<const Mat> dp, const Tensor3& torsion) {
  const Tensor3 lhs = covariant_derivative_11(p, dp, f.levi_civita);
  const Tensor3 t = raise_last(torsion, f.g_inv);
  const Tensor3 rhs = (apply_output(t, p) - compose(t, 1, p)) * 0.5;
  return max_abs(lhs - rhs);
}

double nablaF_identity(const PointFrame& f, const Tensor3& torsion) {
  const ConnectionCoeffs c = metric_connection_from_torsion(f, make_torsion(torsion));
  const Tensor3 lhs = nabla_form(f, c) * 2.0;
  const Tensor3 rhs = levi_civita_nabla_form(f) * 2.0 - conn2_rhs(f.A, torsion);
  return max_abs(lhs - rhs) / scale(torsion);
}

// Q-torsion compliant part of T: sum over blocks of T(P_i X, P_i Y, P_i Z).
Tensor3 block_compliant(const Tensor3& t, std::span<const Mat> projectors) {
  Tensor3 out(t.dim());
  for (const Mat& p : projectors) out += compose(compose(compose(t, 0, p), 1, p), 2, p);
  return out;
}

// The vector fields X_a = P d_a span the distribution; dp[m] = d_m P.
struct Distribution {
  Mat p;
  std::vector<Mat> dp;
};

double involutivity(const Distribution& d) {
  const Eigen::Index n = d.p.rows();
  const Mat complement = Mat::Identity(n, n) - d.p;
  double worst = 0.0;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = a + 1; b < n; ++b) {
      Vec bracket = Vec::Zero(n);
      for (Eigen::Index m = 0; m < n; ++m)
        bracket += d.p(m, a) * d.dp[static_cast<std::size_t>(m)].col(b) -
                   d.p(m, b) * d.dp[static_cast<std::size_t>(m)].col(a);
      worst = std::max(worst, (complement * bracket).cwiseAbs().maxCoeff());
    }
  return worst;
}

double totally_geodesic(const Distribution& d, const Tensor3& coeffs) {
  const Eigen::Index n = d.p.rows();
  const Mat complement = Mat::Identity(n, n) - d.p;
  double worst = 0.0;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      Vec v = Vec::Zero(n);
      for (Eigen::Index m = 0; m < n; ++m) {
        const double xm = d.p(m, a);
        if (xm == 0.0) continue;
        Vec dy = d.dp[static_cast<std::size_t>(m)].col(b);
        for (Eigen::Index l = 0; l < n; ++l)
          for (Eigen::Index k = 0; k < n; ++k)
            dy(k) += coeffs(static_cast<std::size_t>(m), static_cast<std::size_t>(l), static_cast<std::size_t>(k)) *
                     d.p(l, b);
        v += xm * dy;
      }
      worst = std::max(worst, (complement * v).cwiseAbs().maxCoeff());
    }
  return worst;
}

Distribution lagrange_distribution(const PointFrame& f, std::span<const double> nodes, std::size_t i) {
  Distribution d;
  d.p = lagrange_projector(f.Q, nodes, i);
  for (const Mat& dq : f.dQ) d.dp.push_back(lagrange_projector_derivative(f.Q, dq, nodes, i));
  return d;
}

// Pi_D = I - xi (x) eta and its partials.
Distribution contact_distribution(const PointFrame& f) {
  const Eigen::Index n = static_cast<Eigen::Index>(f.n);
  Distribution d;
  d.p = Mat::Identity(n, n) - f.xi() * f.eta().transpose();
  for (std::size_t m = 0; m < f.n; ++m)
    d.dp.push_back(-(f.dxi[m] * f.eta().transpose() + f.xi() * f.deta[m].transpose()));
  return d;
}

bool a_invertible(const ChartManifold& m) {
  const PointFrame f = make_frame(m, m.sample_points(1, 7).front());
  return numerical_rank(f.A) == f.n;
}

bool integrable_at_sample(const ChartManifold& m) {
  return max_abs(nijenhuis_form(make_frame(m, m.sample_points(1, 7).front()))) < kFirst;
}

bool kind_is(const ChartManifold& m, StructureKind k, std::string* reason, const char* what) {
  if (m.kind() == k) return true;
  if (reason) *reason = std::string("needs a ") + what + " manifold, got kind '" + std::string(to_string(m.kind())) + "'";
  return false;
}

bool weak_hermitian_invertible(const ChartManifold& m, std::string* reason) {
  if (!kind_is(m, StructureKind::weak_hermitian, reason, "weak-hermitian")) return false;
  if (!a_invertible(m)) {
    if (reason) *reason = "A is singular (rank F < dim M)";
    return false;
  }
  return true;
}

PointFrame probe_frame(const ChartManifold& m) { return make_frame(m, m.sample_points(1, 7).front()); }

// Selection for "all": the preferred torsion is totally skew and its metric connection preserves F.
bool skew_generalized_connection(const ChartManifold& m) {
  if (m.preferred_torsion() == TorsionChoice::eisenhart) return false;
  try {
    const PointFrame f = probe_frame(m);
    const TorsionAtPoint t = torsion_for(f, m.preferred_torsion(), m.distribution_torsion());
    return t.totally_skew && residual_conn2(f, t.components) < kFirst;
  } catch (const NotApplicableError&) {
    return false;
  }
}

bool hermitian_hypotheses(const ChartManifold& m) {
  return m.kind() == StructureKind::weak_hermitian && a_invertible(m) && skew_generalized_connection(m);
}

bool nearly_kahler_hypotheses(const ChartManifold& m) {
  if (m.kind() != StructureKind::weak_hermitian || !a_invertible(m)) return false;
  const PointFrame f = probe_frame(m);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < f.n; ++i) basis.push_back(Vec::Unit(static_cast<Eigen::Index>(f.n), static_cast<Eigen::Index>(i)));
  return nearly_kahler_defect(f, basis).symmetric_part < kFirst;
}

std::optional<ChartManifold> zoo_control(const char* name, nlohmann::json params = nlohmann::json::object()) {
  return build_zoo(ZooSpec{name, std::move(params)});
}

// --- construction ------------------------------------------------------------

SuiteDef construction_suite() {
  SuiteDef s;
  s.id = "construction";
  s.anchor = "structure axioms, Koszul formula, exact jets";
  s.summary = "axioms of the declared structure, Levi-Civita compatibility, AD vs finite differences";
  s.checks = {
      {"structure-axioms", "axioms of the declared kind (A^2 = -Q, g(AX,AY) = g(QX,Y), ...)", kExact},
      {"levi-civita-compatibility", "nabla^g g = 0", kExact},
      {"levi-civita-symmetric", "Gamma^k_ij = Gamma^k_ji", kExact},
      {"jet-vs-finite-difference", "exact partials vs central differences (h = 1e-5), relative", kChained},
      {"dF-total-skew", "dF(X,Y,Z) totally skew", kExact},
      {"nijenhuis-skew", "N_A(X,Y) = -N_A(Y,X)", kExact},
      {"commutator-AQ", "[A, Q] = 0", 1e-10},
      {"control-perturbed-connection", "Levi-Civita plus a random perturbation is not metric", kControl,
       Expect::above},
  };
  s.applicable = [](const ChartManifold&, std::string*) { return true; };
  s.in_all = [](const ChartManifold&) { return true; };
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const StructureReport r = validate_at(f);
    out.set("structure-axioms", r.max_residual());
    out.set("levi-civita-compatibility", max_abs(nabla_metric(f, f.levi_civita)));
    out.set("levi-civita-symmetric", max_abs(f.levi_civita.lc - permute(f.levi_civita.lc, {1, 0, 2})));
    std::vector<FieldSelector> fields{FieldSelector::g, FieldSelector::F};
    if (in.manifold.has_contact()) {
      fields.push_back(FieldSelector::eta);
      fields.push_back(FieldSelector::xi);
    }
    double fd = 0.0;
    for (FieldSelector sel : fields) {
      const FieldJet jet = evaluate_jet(in.manifold, sel, f.x);
      const auto approx = finite_difference_partials(in.manifold, sel, f.x);
      double size = 1.0;
      for (const Mat& m : jet.partials) size = std::max(size, max_abs(m));
      for (std::size_t a = 0; a < f.n; ++a) fd = std::max(fd, max_abs(jet.partials[a] - approx[a]) / size);
    }
    out.set("jet-vs-finite-difference", fd);
    const Tensor3 dF = exterior_derivative_2form(f.dF);
    out.set("dF-total-skew", total_skew_residual(dF) / scale(dF));
    const Tensor3 n = nijenhuis(f.A, f.dA);
    out.set("nijenhuis-skew", skew12_residual(n));
    out.set("commutator-AQ", max_abs(commutator(f.A, f.Q)));
    std::normal_distribution<double> normal;
    Tensor3 bump(f.n);
    for (std::size_t i = 0; i < f.n; ++i)
      for (std::size_t j = 0; j < f.n; ++j)
        for (std::size_t k = 0; k < f.n; ++k) bump(i, j, k) = 0.1 * normal(in.rng);
    out.set("control-perturbed-connection", max_abs(nabla_metric(f, ConnectionCoeffs{f.levi_civita.lc, bump})));
    if (f.kind == StructureKind::weak_hermitian) {
      const SpectrumReport sp = g_selfadjoint_spectrum(f.g, f.Q);
      if (!sp.conformal) out.notes.push_back("Q is not a multiple of the identity (non-conformal weak structure)");
    }
  };
  return s;
}

// --- generalized metric connection ------------------------------------------------

SuiteDef generalized_connection_suite() {
  SuiteDef s;
  s.id = "generalized-connection";
  s.anchor = "nabla G = 0 iff nabla g = nabla F = 0; metric connection from T preserves F iff conn2";
  s.summary = "metric connection built from the structure's torsion: metricity, F-parallelism, Nijenhuis identities";
  s.checks = {
      {"nablaG-split", "(nabla G) symmetric part = nabla g, skew part = nabla F", kExact},
      {"metric", "nabla g = 0 for the connection built from T", kConstruction},
      {"torsion-recovered", "torsion of the built coefficients equals T", kConstruction},
      {"skew-torsion-contorsion", "T(X,Y,Z) = 2g(nabla_X Y,Z) - 2g(nabla^g_X Y,Z) for skew T", kConstruction},
      {"nablaF-identity", "2 nabla F = 2 nabla^g F - conn2 right side, any T", 1e-9},
      {"conn2", "2(nabla^g_X F)(Y,Z) = -T(X,Y,AZ) - T(Z,X,AY) - ...", kFirst},
      {"conn1", "dF(X,Y,Z) = -T(X,Y,AZ) - T(Y,Z,AX) - T(Z,X,AY)", kFirst},
      {"nabla-F", "nabla F = 0", kFirst},
      {"nabla-A", "nabla A = 0", kFirst},
      {"nabla-g-A-from-torsion", "(nabla^g_X A)Y = 1/2 [A T(X,Y) - T(X,AY)]", kFirst},
      {"nabla-g-Q-from-torsion", "(nabla^g_X Q)Y = 1/2 [Q T(X,Y) - T(X,QY)]", kFirst},
      {"nijenhuis-from-torsion", "N_A = -T(AX,AY,Z) - T(X,Y,A^2Z) - T(AX,Y,AZ) - T(X,AY,AZ)", kChained},
      {"tor1-first", "T(AX,AY,Z) = -N_A(X,Y,Z) + dF(X,Y,AZ)", kChained},
      {"tor1-second", "T(AX,Y,Z) = 2(nabla^g_X F)(Y,Z) - dF(X,Y,Z)", kChained},
      {"ndf1", "N_A(X,Y,AZ) + N_A(X,Z,AY) = dF(X,Y,A^2Z) + dF(X,Z,A^2Y)", kChained},
      {"control-random-torsion-conn2", "random skew T violates conn2", kControl, Expect::above},
  };
  s.applicable = [](const ChartManifold& m, std::string* reason) {
    if (m.preferred_torsion() == TorsionChoice::eisenhart) {
      if (reason) *reason = "the Eisenhart connection is metric but does not preserve F; use eisenhart-codazzi";
      return false;
    }
    return true;
  };
  s.in_all = skew_generalized_connection;
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const TorsionAtPoint t = torsion_for(f, in.manifold.preferred_torsion(), in.manifold.distribution_torsion());
    if (!t.note.empty()) out.notes.push_back(t.note);
    const Tensor3& T = t.components;
    const ConnectionCoeffs c = metric_connection_from_torsion(f, t);

    const Mat G = f.g + f.F;
    std::vector<Mat> dG;
    for (std::size_t a = 0; a < f.n; ++a) dG.push_back(f.dg[a] + f.dF[a]);
    const Tensor3 nG = covariant_derivative_02(G, dG, c);
    const Tensor3 ng = nabla_metric(f, c);
    const Tensor3 nF = nabla_form(f, c);
    const Tensor3 nGt = permute(nG, {0, 2, 1});
    out.set("nablaG-split", std::max(max_abs((nG + nGt) * 0.5 - ng), max_abs((nG - nGt) * 0.5 - nF)));
    out.set("metric", max_abs(ng) / scale(T));
    out.set("torsion-recovered", max_abs(torsion_of(c, f.g) - T) / scale(T));
    if (t.totally_skew)
      out.set("skew-torsion-contorsion", max_abs(T - lower_last(c.contorsion, f.g) * 2.0) / scale(T));
    out.set("nablaF-identity", nablaF_identity(f, T));
    if (f.n >= 3) out.set("nablaF-identity", nablaF_identity(f, random_skew(in.rng, f.n)));
    out.set("conn2", residual_conn2(f, T));
    out.set("conn1", residual_conn1(f, T));
    out.set("nabla-F", max_abs(nF));
    out.set("nabla-A", max_abs(covariant_derivative_11(f.A, f.dA, c)));
    if (t.totally_skew) {
      out.set("nabla-g-A-from-torsion", nabla_g_endo_from_torsion(f, f.A, f.dA, T));
      if (f.has_q_jet()) out.set("nabla-g-Q-from-torsion", nabla_g_endo_from_torsion(f, f.Q, f.dQ, T));
      const SkewTorsionResiduals st = residual_tor1_ndf1(f, t);
      if (st.applicable) {
        out.set("tor1-first", st.tor1_first);
        out.set("tor1-second", st.tor1_second);
        out.set("ndf1", st.ndf1);
      }
    }
    out.set("nijenhuis-from-torsion", max_abs(nijenhuis_form(f) - nijenhuis_from_torsion(f.A, T)));
    if (f.n >= 3 && max_abs(f.A) > kFirst)
      out.set("control-random-torsion-conn2", residual_conn2(f, random_skew(in.rng, f.n)));
  };
  return s;
}

// --- Eisenhart / Codazzi -------------------------------------------------------------

SuiteDef eisenhart_suite() {
  SuiteDef s;
  s.id = "eisenhart-codazzi";
  s.anchor = "Eisenhart connection: metric, Codazzi, torsion dF";
  s.summary = "Eisenhart connection from the Koszul formula on G against the metric connection with T = dF";
  s.checks = {
      {"metric", "nabla g = 0", kConstruction},
      {"torsion-is-dF", "T(X,Y,Z) = dF(X,Y,Z)", kConstruction},
      {"half-dF", "g(nabla_X Y,Z) = g(nabla^g_X Y,Z) + 1/2 dF(X,Y,Z)", kConstruction},
      {"matches-metric-connection", "Eisenhart = metric connection with torsion dF", kConstruction},
      {"codazzi", "(nabla_Z g)(X,Y) = (nabla_X g)(Z,Y)", kExact},
      {"cyclic-symmetry", "(nabla_X g)(Y,Z) totally symmetric", kExact},
      {"control-random-coefficients", "random non-metric coefficients break the Codazzi property", kControl,
       Expect::above},
  };
  s.applicable = [](const ChartManifold&, std::string*) { return true; };
  s.in_all = [](const ChartManifold&) { return true; };
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const EisenhartConnection e = eisenhart_connection(f);
    const Tensor3 dF = exterior_derivative_2form(f.dF);
    const double sc = scale(dF);
    const Tensor3 ng = nabla_metric(f, e.coeffs);
    out.set("metric", max_abs(ng) / sc);
    out.set("torsion-is-dF", max_abs(e.torsion.components - dF) / sc);
    out.set("half-dF", max_abs(lower_last(e.coeffs.contorsion, f.g) - dF * 0.5) / sc);
    const ConnectionCoeffs m = metric_connection_from_torsion(f, make_torsion(dF));
    out.set("matches-metric-connection", max_abs(m.total() - e.coeffs.total()) / sc);
    out.set("codazzi", check_codazzi(f, e.coeffs));
    out.set("cyclic-symmetry", std::max(max_abs(ng - permute(ng, {1, 2, 0})), max_abs(ng - permute(ng, {0, 2, 1}))));
    std::normal_distribution<double> normal;
    Tensor3 k(f.n);
    for (std::size_t i = 0; i < f.n; ++i)
      for (std::size_t j = 0; j < f.n; ++j)
        for (std::size_t l = 0; l < f.n; ++l) k(i, j, l) = normal(in.rng);
    out.set("control-random-coefficients", check_codazzi(f, ConnectionCoeffs{f.levi_civita.lc, k}));
  };
  return s;
}

// --- weak nearly Kaehler -------------------------------------------------------------

SuiteDef nearly_kahler_suite() {
  SuiteDef s;
  s.id = "nearly-kahler";
  s.anchor = "A-torsion for skew torsion iff weak nearly Kaehler; T(AX,Y,Z) = -1/3 dF, T(QX,Y,Z) = 1/4 N_A";
  s.summary = "nearly Kaehler defect and the torsion 1/3 dF(A Q^-1 X, Y, Z)";
  s.checks = {
      {"nk-defect", "(nabla^g_X A)X = 0 on random unit X", kFirst},
      {"nk-symmetric-nablaF", "(nabla^g_X F)(X,Y) = 0", kFirst},
      {"torsion-total-skew", "T totally skew", 1e-10},
      {"a-torsion", "T(AX,Y,Z) = T(X,AY,Z)", kFirst},
      {"conn2", "conn2 for the constructed T", kFirst},
      {"conn1", "conn1 for the constructed T", kFirst},
      {"metric", "nabla g = 0", kConstruction},
      {"nabla-F", "nabla F = 0", kFirst},
      {"TA-dF", "T(AX,Y,Z) = -1/3 dF(X,Y,Z)", kFirst},
      {"TQ-dFA", "T(QX,Y,Z) = 1/3 dF(AX,Y,Z)", kFirst},
      {"TQ-nijenhuis", "T(QX,Y,Z) = 1/4 N_A(X,Y,Z)", kFirst},
      {"nijenhuis-total-skew", "N_A totally skew", kFirst},
      {"contorsion-a-torsion", "K(AX,Y,Z) = K(X,AY,Z) = K(X,Y,AZ)", kFirst},
      {"nabla-AX-A-X", "(nabla^g_{AX} A)X = 0", kFirst},
      {"nabla-g-A-from-torsion", "(nabla^g_X A)Y = 1/2 [A T(X,Y) - T(X,AY)]", kFirst},
      {"nabla-g-A-equals-AT", "(nabla^g_X A)Y = A T(X,Y)", kFirst},
      {"q-torsion-implied", "A-torsion with skew T implies Q-torsion", kFirst},
      {"nijenhuis-from-torsion", "N_A from T when nabla A = 0", kChained},
      {"tor1-first", "T(AX,AY,Z) = -N_A(X,Y,Z) + dF(X,Y,AZ)", kChained},
      {"tor1-second", "T(AX,Y,Z) = 2(nabla^g_X F)(Y,Z) - dF(X,Y,Z)", kChained},
      {"ndf1", "N_A(X,Y,AZ) + N_A(X,Z,AY) = dF(X,Y,A^2Z) + dF(X,Z,A^2Y)", kChained},
      {"converse-counterexample", "a Q-torsion skew T that violates A-torsion exists", kControl, Expect::above},
      {"control-conn2", "perturbed non-nearly-Kaehler R^4: conn2 fails for the same construction", kControl,
       Expect::above},
      {"control-nk-defect", "perturbed non-nearly-Kaehler R^4: defect is visible", kControl, Expect::above},
  };
  s.applicable = weak_hermitian_invertible;
  s.in_all = nearly_kahler_hypotheses;
  s.control = [] { return zoo_control("perturbed_kahler_r4"); };
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const NearlyKahlerDefect d = nearly_kahler_defect(f, in.probes);
    out.set("nk-defect", d.defect);
    out.set("nk-symmetric-nablaF", d.symmetric_part);
    const TorsionAtPoint t = nk_torsion(f);
    const Tensor3& T = t.components;
    const double sc = scale(T);
    out.set("torsion-total-skew", skew23_residual(T) / sc);
    out.set("a-torsion", check_a_torsion(T, f.A));
    out.set("conn2", residual_conn2(f, T));
    out.set("conn1", residual_conn1(f, T));
    const ConnectionCoeffs c = metric_connection_from_torsion(f, t);
    out.set("metric", max_abs(nabla_metric(f, c)) / sc);
    out.set("nabla-F", max_abs(nabla_form(f, c)));
    const Tensor3 dF = exterior_derivative_2form(f.dF);
    const Tensor3 NA = nijenhuis_form(f);
    out.set("TA-dF", max_abs(compose(T, 0, f.A) + dF * (1.0 / 3.0)));
    out.set("TQ-dFA", max_abs(compose(T, 0, f.Q) - compose(dF, 0, f.A) * (1.0 / 3.0)));
    out.set("TQ-nijenhuis", max_abs(compose(T, 0, f.Q) - NA * 0.25));
    out.set("nijenhuis-total-skew", total_skew_residual(NA));
    const Tensor3 K = contorsion_from_torsion(T);
    out.set("contorsion-a-torsion",
            std::max(max_abs(compose(K, 0, f.A) - compose(K, 1, f.A)), max_abs(compose(K, 1, f.A) - compose(K, 2, f.A))));
    const Tensor3 na = covariant_derivative_11(f.A, f.dA, f.levi_civita);
    double prop = 0.0;
    for (const Vec& x : in.probes) {
      const Vec ax = f.A * x;
      Vec v = Vec::Zero(static_cast<Eigen::Index>(f.n));
      for (std::size_t i = 0; i < f.n; ++i)
        for (std::size_t j = 0; j < f.n; ++j)
          for (std::size_t k = 0; k < f.n; ++k) v(k) += ax(i) * x(j) * na(i, j, k);
      prop = std::max(prop, v.cwiseAbs().maxCoeff());
    }
    out.set("nabla-AX-A-X", prop);
    out.set("nabla-g-A-from-torsion", nabla_g_endo_from_torsion(f, f.A, f.dA, T));
    out.set("nabla-g-A-equals-AT", max_abs(na - apply_output(raise_last(T, f.g_inv), f.A)));
    out.set("q-torsion-implied", check_q_torsion(T, f.Q));
    out.set("nijenhuis-from-torsion", max_abs(NA - nijenhuis_from_torsion(f.A, T)));
    const SkewTorsionResiduals st = residual_tor1_ndf1(f, t);
    if (st.applicable) {
      out.set("tor1-first", st.tor1_first);
      out.set("tor1-second", st.tor1_second);
      out.set("ndf1", st.ndf1);
    }
    if (f.n >= 3) {
      const SpectrumReport sp = g_selfadjoint_spectrum(f.g, f.Q);
      const Tensor3 compliant = block_compliant(random_skew(in.rng, f.n), sp.projectors);
      if (max_abs(compliant) > kFirst && check_q_torsion(compliant, f.Q) < kFirst) out.set("converse-counterexample", check_a_torsion(compliant, f.A));
    }
    if (in.control) {
      const PointFrame& cf = *in.control;
      out.set("control-conn2", residual_conn2(cf, nk_torsion(cf).components));
      out.set("control-nk-defect", nearly_kahler_defect(cf, in.control_probes).defect);
    }
  };
  return s;
}

// --- Q-parallel (Levi-Civita preserves Q) ------------------------------------------------

SuiteDef q_parallel_suite() {
  SuiteDef s;
  s.id = "q-parallel";
  s.anchor = "Q-torsion iff nabla^g Q = 0; then N_Q = 0";
  s.summary = "Q-torsion condition against Levi-Civita parallelism of Q and integrability of Q";
  s.checks = {
      {"torsion-total-skew", "hypothesis: T totally skew", 1e-10},
      {"generalized-connection", "hypothesis: the metric connection from T preserves F", kFirst},
      {"q-torsion", "T(QX,Y) = T(X,QY) = Q T(X,Y)", 1e-9},
      {"nabla-g-Q", "nabla^g Q = 0", 1e-9},
      {"q-torsion-iff-nabla-g-Q", "both hold or both fail", kFlag},
      {"nabla-g-Q-from-torsion", "(nabla^g_X Q)Y = 1/2 [Q T(X,Y) - T(X,QY)]", 1e-9},
      {"nijenhuis-Q", "N_Q = 0", kFirst},
      {"nijenhuis-Q-from-torsion", "N_Q = -T(QX,QY,Z) - T(X,Y,Q^2Z) + T(QX,Y,QZ) + T(X,QY,QZ)", kChained},
      {"control-q-torsion-violated", "random skew T on a (1,4)-weighted flat product violates Q-torsion", 1e-2,
       Expect::above},
      {"control-nabla-g-Q-deviation", "its predicted nabla^g Q differs from the actual one", kControl,
       Expect::above},
  };
  s.applicable = weak_hermitian_invertible;
  s.in_all = hermitian_hypotheses;
  s.control = [] {
    return zoo_control("weighted_product", {{"factors", {"flat2", "flat2"}}, {"lambda", {1.0, 4.0}}});
  };
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const TorsionAtPoint t = torsion_for(f, in.manifold.preferred_torsion(), in.manifold.distribution_torsion());
    const Tensor3& T = t.components;
    out.set("torsion-total-skew", skew23_residual(T) / scale(T));
    out.set("generalized-connection", max_abs(nabla_form(f, metric_connection_from_torsion(f, t))));
    const double qt = check_q_torsion(T, f.Q);
    const double ngq = max_abs(covariant_derivative_11(f.Q, f.dQ, f.levi_civita));
    out.set("q-torsion", qt);
    out.set("nabla-g-Q", ngq);
    out.set("q-torsion-iff-nabla-g-Q", iff(qt, 1e-9, ngq, 1e-9));
    out.set("nabla-g-Q-from-torsion", nabla_g_endo_from_torsion(f, f.Q, f.dQ, T));
    out.set("nijenhuis-Q", max_abs(nijenhuis_q_form(f)));
    out.set("nijenhuis-Q-from-torsion", max_abs(nijenhuis_q_form(f) - nijenhuis_q_from_torsion(f.Q, T)));
    if (in.control) {
      const PointFrame& cf = *in.control;
      const Tensor3 r = random_skew(in.rng, cf.n);
      out.set("control-q-torsion-violated", check_q_torsion(r, cf.Q));
      out.set("control-nabla-g-Q-deviation", nabla_g_endo_from_torsion(cf, cf.Q, cf.dQ, r));
    }
  };
  return s;
}

// --- eigen-distributions of Q ----------------------------------------------------------

std::map<std::string, double> spectrum_finalize(const std::vector<PointOutput>& outs, SuiteReport& report,
                                                const std::string& constant_id, const std::string& even_id) {
  std::map<std::string, double> r;
  if (outs.empty()) return r;
  const auto& first = outs.front();
  bool same_shape = true;
  for (const auto& o : outs)
    same_shape = same_shape && o.cluster_values.size() == first.cluster_values.size() &&
                 o.cluster_multiplicities == first.cluster_multiplicities;
  SpectrumSummary sum;
  sum.multiplicities = first.cluster_multiplicities;
  double worst = 0.0;
  if (same_shape) {
    const double count = static_cast<double>(outs.size());
    for (std::size_t c = 0; c < first.cluster_values.size(); ++c) {
      double mean = 0.0;
      for (const auto& o : outs) mean += o.cluster_values[c];
      mean /= count;
      double var = 0.0;
      for (const auto& o : outs) var += (o.cluster_values[c] - mean) * (o.cluster_values[c] - mean);
      const double sd = std::sqrt(var / count);
      sum.eigenvalues.push_back(mean);
      sum.stddev.push_back(sd);
      worst = std::max(worst, sd);
    }
  } else {
    worst = std::numeric_limits<double>::infinity();
    report.notes.push_back("number or multiplicities of eigenvalue clusters vary between points");
  }
  double odd = 0.0;
  for (std::size_t m : first.cluster_multiplicities) odd += static_cast<double>(m % 2);
  r[constant_id] = worst;
  r[even_id] = odd;
  report.spectrum = std::move(sum);
  return r;
}

SuiteDef eigen_distributions_suite() {
  SuiteDef s;
  s.id = "eigen-distributions";
  s.anchor = "Q = lambda Id with lambda constant, or constant eigenvalues with involutive totally geodesic "
             "eigen-distributions";
  s.summary = "spectrum of Q, constancy across points, involutivity and total geodesy of eigen-distributions";
  s.checks = {
      {"spectrum-constant", "eigenvalues constant across points (standard deviation)", 1e-9},
      {"multiplicities-even", "even multiplicities", kFlag},
      {"projectors", "Lagrange projectors idempotent, orthogonal, summing to Id", 1e-10},
      {"nabla-g-Q", "nabla^g Q = 0", kFirst},
      {"nijenhuis-Q", "N_Q = 0", kFirst},
      {"involutivity", "(Id - P_i)[P_i X, P_i Y] = 0", kChained},
      {"totally-geodesic", "(Id - P_i) nabla^g_{P_i X} P_i Y = 0", kChained},
      {"totally-geodesic-torsion", "(Id - P_i) nabla_{P_i X} P_i Y = 0 for the torsion connection", kChained},
      {"control-involutivity", "twisted R^4: eigen-distribution not involutive", kControl, Expect::above},
  };
  s.applicable = weak_hermitian_invertible;
  s.in_all = hermitian_hypotheses;
  s.control = [] { return zoo_control("twisted_product_r4"); };
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const SpectrumReport sp = g_selfadjoint_spectrum(f.g, f.Q);
    std::vector<double> nodes;
    for (const auto& c : sp.clusters) {
      nodes.push_back(c.value);
      out.cluster_values.push_back(c.value);
      out.cluster_multiplicities.push_back(c.multiplicity);
    }
    const Eigen::Index n = static_cast<Eigen::Index>(f.n);
    Mat total = Mat::Zero(n, n);
    double proj = 0.0;
    for (std::size_t i = 0; i < sp.projectors.size(); ++i) {
      const Mat& p = sp.projectors[i];
      total += p;
      proj = std::max(proj, max_abs(p * p - p));
      for (std::size_t j = i + 1; j < sp.projectors.size(); ++j) proj = std::max(proj, max_abs(p * sp.projectors[j]));
    }
    proj = std::max(proj, max_abs(total - Mat::Identity(n, n)));
    out.set("projectors", proj);
    out.set("nabla-g-Q", max_abs(covariant_derivative_11(f.Q, f.dQ, f.levi_civita)));
    out.set("nijenhuis-Q", max_abs(nijenhuis_q_form(f)));
    if (nodes.size() > 1) {
      const TorsionAtPoint t = torsion_for(f, in.manifold.preferred_torsion(), in.manifold.distribution_torsion());
      const Tensor3 with_torsion = metric_connection_from_torsion(f, t).total();
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Distribution d = lagrange_distribution(f, nodes, i);
        out.set("involutivity", involutivity(d));
        out.set("totally-geodesic", totally_geodesic(d, f.levi_civita.lc));
        out.set("totally-geodesic-torsion", totally_geodesic(d, with_torsion));
      }
    }
    if (in.control) {
      const PointFrame& cf = *in.control;
      const SpectrumReport csp = g_selfadjoint_spectrum(cf.g, cf.Q);
      std::vector<double> cnodes;
      for (const auto& c : csp.clusters) cnodes.push_back(c.value);
      double worst = 0.0;
      for (std::size_t i = 0; i < cnodes.size() && cnodes.size() > 1; ++i)
        worst = std::max(worst, involutivity(lagrange_distribution(cf, cnodes, i)));
      out.set("control-involutivity", worst);
    }
  };
  s.finalize = [](const std::vector<PointOutput>& outs, SuiteReport& report) {
    auto r = spectrum_finalize(outs, report, "spectrum-constant", "multiplicities-even");
    if (report.spectrum && report.spectrum->eigenvalues.size() == 1)
      report.notes.push_back("Q is conformal: Q = lambda Id with constant lambda");
    return r;
  };
  return s;
}

// --- Chern and Bismut --------------------------------------------------------------------

bool integrable_hermitian(const ChartManifold& m, std::string* reason) {
  if (!weak_hermitian_invertible(m, reason)) return false;
  if (!integrable_at_sample(m)) {
    if (reason) *reason = "N_A does not vanish (the structure is not integrable)";
    return false;
  }
  return true;
}

SuiteDef chern_suite() {
  SuiteDef s;
  s.id = "chern";
  s.anchor = "Chern connection: T(QX,Y,Z) = -1/2 [dF(AX,Y,Z) + dF(X,AY,Z)], T(AX,Y,Z) = (nabla^g_Z F)(X,Y)";
  s.summary = "Chern torsion on an integrable weak Hermitian manifold";
  s.checks = {
      {"defining", "T(QX,Y,Z) = -1/2 [dF(AX,Y,Z) + dF(X,AY,Z)]", kFirst},
      {"metric", "nabla g = 0", kConstruction},
      {"nabla-F", "nabla F = 0", kFirst},
      {"conn2", "conn2", kFirst},
      {"relation", "T(AX,Y,Z) = (nabla^g_Z F)(X,Y)", kFirst},
      {"a-symmetric", "T(AX,Y,Z) = T(X,AY,Z)", kFirst},
      {"opposite-sign", "T(X,AY,Z) = -T(X,Y,AZ)", kFirst},
      {"AA-Q", "T(AX,AY,Z) = -T(QX,Y,Z)", kFirst},
      {"control-random-torsion", "random skew T violates the Chern relation", kControl, Expect::above},
  };
  s.applicable = integrable_hermitian;
  s.in_all = [](const ChartManifold& m) { return integrable_hermitian(m, nullptr); };
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const TorsionAtPoint t = chern_torsion(f);
    const Tensor3& T = t.components;
    const Tensor3 dF = exterior_derivative_2form(f.dF);
    out.set("defining", max_abs(compose(T, 0, f.Q) + (compose(dF, 0, f.A) + compose(dF, 1, f.A)) * 0.5));
    const ConnectionCoeffs c = metric_connection_from_torsion(f, t);
    out.set("metric", max_abs(nabla_metric(f, c)) / scale(T));
    out.set("nabla-F", max_abs(nabla_form(f, c)));
    out.set("conn2", residual_conn2(f, T));
    const Tensor3 nf = levi_civita_nabla_form(f);
    auto relation = [&](const Tensor3& tt) { return max_abs(compose(tt, 0, f.A) - permute(nf, {2, 0, 1})); };
    out.set("relation", relation(T));
    out.set("a-symmetric", check_a_torsion(T, f.A));
    out.set("opposite-sign", max_abs(compose(T, 1, f.A) + compose(T, 2, f.A)));
    out.set("AA-Q", max_abs(compose(compose(T, 0, f.A), 1, f.A) + compose(T, 0, f.Q)));
    if (f.n >= 3) out.set("control-random-torsion", relation(random_skew(in.rng, f.n)));
    if (!t.totally_skew) out.notes.push_back("Chern torsion is not totally skew");
  };
  return s;
}

SuiteDef bismut_suite() {
  SuiteDef s;
  s.id = "bismut";
  s.anchor = "Bismut connection: skew torsion with T(AX,AY,Z) = dF(X,Y,AZ)";
  s.summary = "Bismut torsion on an integrable weak Hermitian manifold";
  s.checks = {
      {"total-skew", "T totally skew", 1e-10},
      {"defining", "T(AX,AY,Z) = dF(X,Y,AZ)", kFirst},
      {"metric", "nabla g = 0", kConstruction},
      {"nabla-F", "nabla F = 0", kFirst},
      {"conn2", "conn2", kFirst},
      {"q-symmetry", "T(QX,Y,Z) = T(X,QY,Z) = T(X,Y,QZ)", kFirst},
      {"q-sum", "T(QX,Y,Z) = T(AX,AY,Z) + T(AX,Y,AZ) + T(X,AY,AZ)", kFirst},
      {"dF-q-symmetry", "dF(QX,Y,Z) = dF(X,QY,Z) = dF(X,Y,QZ)", kFirst},
      {"tor1-first", "T(AX,AY,Z) = -N_A(X,Y,Z) + dF(X,Y,AZ)", kFirst},
      {"tor1-second", "T(AX,Y,Z) = 2(nabla^g_X F)(Y,Z) - dF(X,Y,Z)", kFirst},
      {"ndf1", "N_A(X,Y,AZ) + N_A(X,Z,AY) = dF(X,Y,A^2Z) + dF(X,Z,A^2Y)", kFirst},
      {"control-random-torsion-conn2", "random skew T violates conn2", kControl, Expect::above},
  };
  s.applicable = integrable_hermitian;
  s.in_all = [](const ChartManifold& m) { return integrable_hermitian(m, nullptr); };
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const TorsionAtPoint t = bismut_torsion(f);
    const Tensor3& T = t.components;
    const Tensor3 dF = exterior_derivative_2form(f.dF);
    out.set("total-skew", skew23_residual(T) / scale(T));
    out.set("defining", max_abs(compose(compose(T, 0, f.A), 1, f.A) - compose(dF, 2, f.A)));
    const ConnectionCoeffs c = metric_connection_from_torsion(f, t);
    out.set("metric", max_abs(nabla_metric(f, c)) / scale(T));
    out.set("nabla-F", max_abs(nabla_form(f, c)));
    out.set("conn2", residual_conn2(f, T));
    out.set("q-symmetry", check_q_torsion(T, f.Q));
    const Tensor3 ta = compose(T, 0, f.A);
    const Tensor3 sum = compose(ta, 1, f.A) + compose(ta, 2, f.A) + compose(compose(T, 1, f.A), 2, f.A);
    out.set("q-sum", max_abs(compose(T, 0, f.Q) - sum));
    out.set("dF-q-symmetry", check_q_torsion(dF, f.Q));
    const SkewTorsionResiduals st = residual_tor1_ndf1(f, t);
    if (st.applicable) {
      out.set("tor1-first", st.tor1_first);
      out.set("tor1-second", st.tor1_second);
      out.set("ndf1", st.ndf1);
    }
    if (f.n >= 3) out.set("control-random-torsion-conn2", residual_conn2(f, random_skew(in.rng, f.n)));
  };
  return s;
}

// --- weak almost contact ---------------------------------------------------------------------

SuiteDef contact_suite() {
  SuiteDef s;
  s.id = "contact";
  s.anchor = "weak almost contact with skew torsion: xi geodesic and Killing; Q-torsion iff N^wac totally skew";
  s.summary = "characteristic connection of a weak contact structure and the contact Nijenhuis tensor";
  s.checks = {
      {"torsion-total-skew", "hypothesis: T totally skew", 1e-10},
      {"metric", "hypothesis: nabla g = 0", kConstruction},
      {"nabla-F", "hypothesis: nabla F = 0", kFirst},
      {"nabla-A", "nabla A = 0", kFirst},
      {"nabla-xi", "nabla xi = 0", kFirst},
      {"nabla-eta", "nabla eta = 0", kFirst},
      {"nabla-Q", "nabla Q = 0", kFirst},
      {"reeb-geodesic", "nabla^g_xi xi = 0", kFirst},
      {"reeb-killing", "g(nabla^g_X xi, Y) + g(nabla^g_Y xi, X) = 0", kFirst},
      {"deta-torsion", "d eta(X,Y) = T(X,Y,xi)", 1e-10},
      {"deta-xi", "d eta(X,xi) = 0", kExact},
      {"nijenhuis-Y-xi", "N_A(X,Y,xi) = -d eta(AX,AY)", kFirst},
      {"nijenhuis-xi-Y-Z", "N_A(xi,Y,Z) = d eta(Y,QZ) - d eta(AY,AZ)", kFirst},
      {"deta-QZ", "d eta(Y,QZ) = N_A(xi,Y,Z) - N_A(Y,Z,xi)", kFirst},
      {"wac-identity", "N_A(X,Y,Z) + eta(Z) d eta(X,Y) = T(X,Y,QZ) - T(AX,AY,Z) - T(AX,Y,AZ) - T(X,AY,AZ)", kFirst},
      {"q-torsion-iff-nwac-skew", "Q-torsion and total skewness of N^wac hold or fail together", kFlag},
      {"algebraic-wac-identity", "the same identity with N_A and d eta derived from a random skew T", 1e-9},
      {"compliant-q-torsion", "(1,4)-weighted R x R^4: Q-compliant skew T satisfies Q-torsion", kFirst},
      {"compliant-nwac-skew", "... and its N^wac is totally skew", kFirst},
      {"random-q-torsion", "random skew T violates Q-torsion", kFirst, Expect::above},
      {"random-nwac-skew", "... and its N^wac is not totally skew", kFirst, Expect::above},
      {"control-wrong-sign", "N_A - eta(Z) d eta(X,Y) does not satisfy the identity", kControl, Expect::above},
  };
  s.applicable = [](const ChartManifold& m, std::string* reason) {
    if (!kind_is(m, StructureKind::weak_contact, reason, "weak-contact")) return false;
    if (!m.has_contact()) {
      if (reason) *reason = "no contact data";
      return false;
    }
    return true;
  };
  s.in_all = [](const ChartManifold& m) { return m.kind() == StructureKind::weak_contact; };
  s.control = [] {
    return zoo_control("product_contact", {{"factors", {"flat2", "flat2"}}, {"lambda", {1.0, 4.0}}, {"s", 1}});
  };
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const TorsionAtPoint t = contact_characteristic_torsion(f, in.manifold.distribution_torsion());
    if (!t.note.empty()) out.notes.push_back(t.note);
    const Tensor3& T = t.components;
    const double sc = scale(T);
    out.set("torsion-total-skew", skew23_residual(T) / sc);
    const ConnectionCoeffs c = metric_connection_from_torsion(f, t);
    out.set("metric", max_abs(nabla_metric(f, c)) / sc);
    out.set("nabla-F", max_abs(nabla_form(f, c)));
    out.set("nabla-A", max_abs(covariant_derivative_11(f.A, f.dA, c)));
    const ReebResiduals reeb = reeb_checks(f, c);
    out.set("nabla-xi", reeb.nabla_xi);
    out.set("nabla-eta", reeb.nabla_eta);
    if (f.has_q_jet()) out.set("nabla-Q", reeb.nabla_q);
    out.set("reeb-geodesic", reeb.geodesic);
    out.set("reeb-killing", reeb.killing);
    out.set("deta-xi", reeb.deta_xi);
    const Mat deta = exterior_derivative_1form(f.deta);
    const Vec& xi = f.xi();
    Mat t_xi = Mat::Zero(static_cast<Eigen::Index>(f.n), static_cast<Eigen::Index>(f.n));
    for (std::size_t i = 0; i < f.n; ++i)
      for (std::size_t j = 0; j < f.n; ++j)
        for (std::size_t k = 0; k < f.n; ++k) t_xi(i, j) += T(i, j, k) * xi(k);
    out.set("deta-torsion", max_abs(deta - t_xi));
    const Tensor3 NA = nijenhuis_form(f);
    const Mat aa = f.A.transpose() * deta * f.A;  // d eta(A d_i, A d_j)
    Mat n_xi = Mat::Zero(t_xi.rows(), t_xi.cols());
    Mat xi_n = Mat::Zero(t_xi.rows(), t_xi.cols());
    for (std::size_t i = 0; i < f.n; ++i)
      for (std::size_t j = 0; j < f.n; ++j)
        for (std::size_t k = 0; k < f.n; ++k) {
          n_xi(i, j) += NA(i, j, k) * xi(k);
          xi_n(i, j) += xi(k) * NA(k, i, j);
        }
    const Mat dq = deta * f.Q;  // d eta(d_j, Q d_k)
    out.set("nijenhuis-Y-xi", max_abs(n_xi + aa));
    out.set("nijenhuis-xi-Y-Z", max_abs(xi_n - dq + aa));
    out.set("deta-QZ", max_abs(dq - (xi_n - n_xi)));
    out.set("wac-identity",
            max_abs(contact_nijenhuis(f, ContactVariant::wac) - contact_nijenhuis_rhs(f, T, ContactVariant::wac)));
    const double qt = check_q_torsion(T, f.Q);
    const double skew = total_skew_residual(contact_nijenhuis(f, ContactVariant::wac));
    out.set("q-torsion-iff-nwac-skew", iff(qt, kFirst, skew, kFirst));
    if (max_abs(deta) > kFirst) {
      const Tensor3 wrong = NA - contact_nijenhuis(f, ContactVariant::wac) + NA;  // N_A - d eta (x) eta
      out.set("control-wrong-sign", max_abs(wrong - contact_nijenhuis_rhs(f, T, ContactVariant::wac)));
    }
    if (f.n >= 3) {
      const Tensor3 r = random_skew(in.rng, f.n);
      out.set("algebraic-wac-identity", max_abs(contact_nijenhuis_from_torsion(f, r, ContactVariant::wac) -
                                                contact_nijenhuis_rhs(f, r, ContactVariant::wac)));
    }
    if (in.control) {
      const PointFrame& cf = *in.control;
      const SpectrumReport sp = g_selfadjoint_spectrum(cf.g, cf.Q);
      const Tensor3 r = random_skew(in.rng, cf.n);
      const Tensor3 compliant = block_compliant(r, sp.projectors);
      auto nwac_skew = [&](const Tensor3& tt) {
        return total_skew_residual(contact_nijenhuis_rhs(cf, tt, ContactVariant::wac));
      };
      out.set("compliant-q-torsion", check_q_torsion(compliant, cf.Q));
      out.set("compliant-nwac-skew", nwac_skew(compliant));
      out.set("random-q-torsion", check_q_torsion(r, cf.Q));
      out.set("random-nwac-skew", nwac_skew(r));
    }
  };
  return s;
}

SuiteDef contact_distributions_suite() {
  SuiteDef s;
  s.id = "contact-distributions";
  s.anchor = "Q restricted to the contact distribution: constant eigenvalues, involutive totally geodesic "
             "eigen-distributions";
  s.summary = "spectrum of Q on the contact distribution and its eigen-distributions";
  s.checks = {
      {"spectrum-constant", "eigenvalues of Q on D constant across points (standard deviation)", 1e-9},
      {"multiplicities-even", "even multiplicities on D", kFlag},
      {"nabla-g-Q", "nabla^g Q = 0", kFirst},
      {"nijenhuis-Q", "N_Q = 0", kFirst},
      {"involutivity", "(Id - P_i)[P_i X, P_i Y] = 0 for eigenvalues other than 1", kChained},
      {"totally-geodesic", "(Id - P_i) nabla^g_{P_i X} P_i Y = 0 for eigenvalues other than 1", kChained},
      {"control-sasakian-distribution", "Sasakian R^3: the contact distribution (eigenvalue 1) is not involutive",
       kControl, Expect::above},
  };
  s.applicable = [](const ChartManifold& m, std::string* reason) {
    if (!kind_is(m, StructureKind::weak_contact, reason, "weak-contact")) return false;
    if (!m.has_contact()) {
      if (reason) *reason = "no contact data";
      return false;
    }
    return true;
  };
  s.in_all = [](const ChartManifold& m) { return m.kind() == StructureKind::weak_contact; };
  s.control = [] { return zoo_control("sasakian_r3"); };
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const Mat minus_a2 = -(f.A * f.A);  // Q on D, 0 on xi
    const SpectrumReport sp = g_selfadjoint_spectrum(f.g, minus_a2, 1e-6, true);
    std::vector<double> nodes{1.0};
    std::vector<double> d_nodes;
    for (const auto& c : sp.clusters) {
      out.cluster_values.push_back(c.value);
      out.cluster_multiplicities.push_back(c.multiplicity);
      if (std::abs(c.value - 1.0) > 1e-6 * std::max(1.0, std::abs(c.value))) {
        nodes.push_back(c.value);
        d_nodes.push_back(c.value);
      }
    }
    if (d_nodes.size() < sp.clusters.size()) out.notes.push_back("eigenvalue 1 on D: that part is not asserted to be involutive");
    out.set("nabla-g-Q", max_abs(covariant_derivative_11(f.Q, f.dQ, f.levi_civita)));
    out.set("nijenhuis-Q", max_abs(nijenhuis_q_form(f)));
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      const Distribution d = lagrange_distribution(f, nodes, i);
      out.set("involutivity", involutivity(d));
      out.set("totally-geodesic", totally_geodesic(d, f.levi_civita.lc));
    }
    if (in.control) out.set("control-sasakian-distribution", involutivity(contact_distribution(*in.control)));
  };
  s.finalize = [](const std::vector<PointOutput>& outs, SuiteReport& report) {
    auto r = spectrum_finalize(outs, report, "spectrum-constant", "multiplicities-even");
    report.notes.push_back("the weaker condition nabla G = 0 along D is not examined");
    return r;
  };
  return s;
}

// --- weak f-structure -----------------------------------------------------------------------

SuiteDef weak_f_suite() {
  SuiteDef s;
  s.id = "weak-f";
  s.anchor = "A^3 + AQ = 0, g(AX,A^2Y) = g(QX,AY); D = A(TM), D0 = ker A";
  s.summary = "weak f-structure relations and the splitting TM = D + D0";
  s.checks = {
      {"A3+AQ", "A^3 + AQ = 0", kExact},
      {"g(AX,A2Y)-g(QX,AY)", "g(AX,A^2Y) = g(QX,AY)", kExact},
      {"commutator-AQ", "[A, Q] = 0", kExact},
      {"rank-even", "dim D even", kFlag},
      {"kernel-projector", "P0 = Q + A^2 is the g-orthogonal projector onto ker A", kExact},
      {"control-para-relation", "the para relation A^3 - AQ = 0 fails", kControl, Expect::above},
  };
  s.applicable = [](const ChartManifold& m, std::string* reason) {
    return kind_is(m, StructureKind::weak_f, reason, "weak-f");
  };
  s.in_all = [](const ChartManifold& m) { return m.kind() == StructureKind::weak_f; };
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const FStructureReport r = f_structure_checks(f);
    for (const auto& [k, v] : r.residuals) {
      if (k == "[A,Q]") out.set("commutator-AQ", v);
      else out.set(k, v);
    }
    out.set("rank-even", static_cast<double>(r.dim_distribution % 2));
    const Mat p0 = f.Q + f.A * f.A;
    const double proj = std::max({max_abs(p0 * p0 - p0), max_abs(f.A * p0), max_abs(f.g * p0 - (f.g * p0).transpose())});
    out.set("kernel-projector", proj);
    if (max_abs(f.A) > kFirst) out.set("control-para-relation", max_abs(f.A * f.A * f.A - f.A * f.Q));
    out.notes.push_back("dim D = " + std::to_string(r.dim_distribution) + ", dim D0 = " + std::to_string(r.dim_kernel));
    out.notes.push_back("the weaker condition nabla G = 0 along D is not examined");
  };
  return s;
}

// --- para ------------------------------------------------------------------------------------

SuiteDef para_suite() {
  SuiteDef s;
  s.id = "para";
  s.anchor = "weak almost para-Hermitian / para-contact: A^2 = Q - eta (x) xi; N^wapc = N_A - d eta (x) eta";
  s.summary = "para axioms, para-f relations and the sign convention of the para-contact Nijenhuis identity";
  s.checks = {
      {"axioms", "A^2 = Q - eta (x) xi, g(AX,AY) = -g(QX,Y) + eta(X) eta(Y), A xi = 0, Q xi = xi", kExact},
      {"para-f", "A^3 - AQ = 0, g(AX,A^2Y) = -g(QX,AY)", kExact},
      {"rank", "rank A = dim M - dim(contact part)", kFlag},
      {"wapc-identity",
       "N_A(X,Y,Z) - eta(Z) d eta(X,Y) = -T(X,Y,QZ) - T(AX,AY,Z) - T(AX,Y,AZ) - T(X,AY,AZ), random skew T", 1e-9},
      {"control-wac-sign", "the contact sign +T(X,Y,QZ) fails", kControl, Expect::above},
      {"compliant-q-torsion", "skew T supported on D satisfies Q-torsion", kFirst},
      {"compliant-nwapc-skew", "... and its N^wapc is totally skew", kFirst},
      {"random-q-torsion", "random skew T violates Q-torsion", kFirst, Expect::above},
      {"random-nwapc-skew", "... and its N^wapc is not totally skew", kFirst, Expect::above},
      {"reeb-geodesic", "nabla^g_xi xi = 0", kFirst},
      {"reeb-killing", "xi is Killing", kFirst},
      {"spectral-refusal", "spectral decomposition refuses the indefinite metric", kFlag},
  };
  s.applicable = [](const ChartManifold& m, std::string* reason) {
    return kind_is(m, StructureKind::para, reason, "para");
  };
  s.in_all = [](const ChartManifold& m) { return m.kind() == StructureKind::para; };
  s.evaluate = [](const PointInput& in, PointOutput& out) {
    const PointFrame& f = in.frame;
    const StructureReport r = validate_at(f);
    out.set("axioms", r.max_residual());
    const FStructureReport pf = f_structure_checks(f);
    double para_f = 0.0;
    for (const auto& [k, v] : pf.residuals) para_f = std::max(para_f, v);
    out.set("para-f", para_f);
    const std::size_t expected = f.contact ? f.n - 1 : f.n;
    out.set("rank", numerical_rank(f.A) == expected ? 0.0 : 1.0);

    const Eigen::Index n = static_cast<Eigen::Index>(f.n);
    auto lhs_from_torsion = [&](const Tensor3& tt) {
      Tensor3 lhs = nijenhuis_from_torsion(f.A, tt);
      if (f.contact) {
        for (std::size_t i = 0; i < f.n; ++i)
          for (std::size_t j = 0; j < f.n; ++j) {
            double deta = 0.0;
            for (std::size_t k = 0; k < f.n; ++k) deta += tt(i, j, k) * f.xi()(k);
            for (std::size_t k = 0; k < f.n; ++k) lhs(i, j, k) -= f.eta()(k) * deta;
          }
      }
      return lhs;
    };
    if (f.n >= 3) {
      const Tensor3 r3 = random_skew(in.rng, f.n);
      const Tensor3 lhs = lhs_from_torsion(r3);
      out.set("wapc-identity", max_abs(lhs - contact_nijenhuis_rhs(f, r3, ContactVariant::wapc)));
      out.set("control-wac-sign", max_abs(lhs - contact_nijenhuis_rhs(f, r3, ContactVariant::wac)));
      const Mat pd = f.contact ? Mat(Mat::Identity(n, n) - f.xi() * f.eta().transpose()) : Mat(Mat::Identity(n, n));
      const Tensor3 compliant = compose(compose(compose(r3, 0, pd), 1, pd), 2, pd);
      auto nwapc_skew = [&](const Tensor3& tt) {
        return total_skew_residual(contact_nijenhuis_rhs(f, tt, ContactVariant::wapc));
      };
      // Supported on D only when Q is a multiple of Id there.
      const Mat qd = f.Q * pd;
      const double conformal_d = max_abs(qd - pd * (qd.trace() / std::max(1.0, pd.trace())));
      if (conformal_d < kFirst) {
        out.set("compliant-q-torsion", check_q_torsion(compliant, f.Q));
        out.set("compliant-nwapc-skew", nwapc_skew(compliant));
      } else {
        out.notes.push_back("Q is not conformal on D; the compliant torsion probe is skipped");
      }
      const double qt = check_q_torsion(r3, f.Q);
      if (qt > kFirst) {
        out.set("random-q-torsion", qt);
        out.set("random-nwapc-skew", nwapc_skew(r3));
      }
    }
    if (f.contact) {
      const Mat lc_xi = covariant_derivative_vector(f.xi(), f.dxi, f.levi_civita);
      out.set("reeb-geodesic", (lc_xi.transpose() * f.xi()).cwiseAbs().maxCoeff());
      const Mat lowered = lc_xi * f.g;
      out.set("reeb-killing", max_abs(lowered + lowered.transpose()));
    }
    bool refused = false;
    try {
      (void)g_selfadjoint_spectrum(f.g, f.Q);
    } catch (const NotApplicableError&) {
      refused = true;
    }
    out.set("spectral-refusal", refused ? 0.0 : 1.0);
  };
  return s;
}

}  // namespace

const std::vector<SuiteDef>& suite_registry() {
  static const std::vector<SuiteDef> registry = [] {
    std::vector<SuiteDef> r;
    r.push_back(construction_suite());
    r.push_back(generalized_connection_suite());
    r.push_back(eisenhart_suite());
    r.push_back(nearly_kahler_suite());
    r.push_back(q_parallel_suite());
    r.push_back(eigen_distributions_suite());
    r.push_back(chern_suite());
    r.push_back(bismut_suite());
    r.push_back(contact_suite());
    r.push_back(contact_distributions_suite());
    r.push_back(weak_f_suite());
    r.push_back(para_suite());
    return r;
  }();
  return registry;
}

}  // namespace griemlab::detail
