#include "griemlab/frame.hpp"

namespace griemlab {

namespace {

std::vector<Vec> columns(const std::vector<Mat>& partials) {
  std::vector<Vec> out;
  out.reserve(partials.size());
  for (const auto& m : partials) out.emplace_back(m.col(0));
  return out;
}

}  // namespace

PointFrame make_frame(const ChartManifold& manifold, std::span<const double> p) {
  PointFrame f;
  f.x.assign(p.begin(), p.end());
  f.n = manifold.dim();
  f.kind = manifold.kind();

  FieldJet g = evaluate_jet(manifold, FieldSelector::g, p);
  FieldJet F = evaluate_jet(manifold, FieldSelector::F, p);
  f.g = std::move(g.value);
  f.dg = std::move(g.partials);
  f.g_inv = f.g.inverse();
  f.F = std::move(F.value);
  f.dF = std::move(F.partials);

  f.A = adjoint_from_form(f.g, f.F).components;
  f.dA = adjoint_partials(f.g_inv, f.F, f.dg, f.dF);

  if (manifold.has_contact()) {
    FieldJet eta = evaluate_jet(manifold, FieldSelector::eta, p);
    FieldJet xi = evaluate_jet(manifold, FieldSelector::xi, p);
    f.contact = ContactData{eta.value.col(0), xi.value.col(0)};
    f.deta = columns(eta.partials);
    f.dxi = columns(xi.partials);
  }
  const ContactData* contact = f.contact ? &*f.contact : nullptr;
  f.Q = q_from_a(EndoAtPoint{f.A, Adjointness::skew}, f.kind, contact, &f.g).q.components;
  if (f.kind != StructureKind::weak_f) f.dQ = q_partials(f.A, f.dA, f.kind, contact, f.deta, f.dxi);

  f.levi_civita = levi_civita(f.g, f.g_inv, f.dg);
  return f;
}

}  // namespace griemlab
