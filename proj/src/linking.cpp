#include "groupoidal/linking.hpp"

#include <stdexcept>

#include "groupoidal/errors.hpp"

namespace groupoidal {

std::string_view to_string(Sector s) {
  switch (s) {
    case Sector::GG: return "GG";
    case Sector::GZ: return "GZ";
    case Sector::ZG: return "ZG";
    case Sector::HH: return "HH";
  }
  return "?";
}

namespace {

std::string g_name(const std::string& id) { return "G:" + id; }
std::string h_name(const std::string& id) { return "H:" + id; }
std::string z_name(const std::string& id) { return "Z:" + id; }
std::string zop_name(const std::string& bar_id) { return "Zop:" + bar_id; }

}  // namespace

LinkingGroupoid build_linking(const Bispace& z) {
  if (ValidationReport report = validate_equivalence(z); !report.ok()) {
    throw std::invalid_argument("build_linking: bispace is not an equivalence (" +
                                report.violations().front().axiom + ": " + report.violations().front().detail + ")");
  }
  const FiniteGroupoid& g = z.left_groupoid();
  const FiniteGroupoid& h = z.right_groupoid();
  const Bispace zop = opposite_space(z);
  const std::size_t n = z.point_count();

  // Named arrows of L in sector order; from_tables sorts them afterwards.
  struct Named {
    std::string id;
    Sector sector;
    Index origin;
  };
  std::vector<Named> named;
  auto name_of = [&](Sector s, Index i) -> std::string {
    switch (s) {
      case Sector::GG: return g_name(g.arrow_id(i));
      case Sector::GZ: return z_name(z.point_id(i));
      case Sector::ZG: return zop_name(zop.point_id(i));
      case Sector::HH: return h_name(h.arrow_id(i));
    }
    return {};
  };
  for (Index a = 0; a < g.arrow_count(); ++a) named.push_back({name_of(Sector::GG, a), Sector::GG, a});
  for (Index p = 0; p < n; ++p) named.push_back({name_of(Sector::GZ, p), Sector::GZ, p});
  for (Index p = 0; p < n; ++p) named.push_back({name_of(Sector::ZG, p), Sector::ZG, p});
  for (Index b = 0; b < h.arrow_count(); ++b) named.push_back({name_of(Sector::HH, b), Sector::HH, b});

  GroupoidTables t;
  for (Index u = 0; u < g.unit_count(); ++u) t.units.push_back(g_name(g.unit_id(u)));
  for (Index v = 0; v < h.unit_count(); ++v) t.units.push_back(h_name(h.unit_id(v)));

  auto l_range = [&](Sector s, Index i) -> std::string {
    switch (s) {
      case Sector::GG: return g_name(g.unit_id(g.range(i)));
      case Sector::GZ: return g_name(g.unit_id(z.r(i)));
      case Sector::ZG: return h_name(h.unit_id(z.s(i)));
      case Sector::HH: return h_name(h.unit_id(h.range(i)));
    }
    return {};
  };
  auto l_source = [&](Sector s, Index i) -> std::string {
    switch (s) {
      case Sector::GG: return g_name(g.unit_id(g.source(i)));
      case Sector::GZ: return h_name(h.unit_id(z.s(i)));
      case Sector::ZG: return g_name(g.unit_id(z.r(i)));
      case Sector::HH: return h_name(h.unit_id(h.source(i)));
    }
    return {};
  };
  for (const Named& a : named) t.arrows.push_back({a.id, l_source(a.sector, a.origin), l_range(a.sector, a.origin)});

  for (Index u = 0; u < g.unit_count(); ++u) t.unit_arrows.emplace_back(g_name(g.unit_id(u)), g_name(g.arrow_id(g.unit_arrow(u))));
  for (Index v = 0; v < h.unit_count(); ++v) t.unit_arrows.emplace_back(h_name(h.unit_id(v)), h_name(h.arrow_id(h.unit_arrow(v))));

  // Inverses: inversion on G and H, z <-> z-bar.
  for (Index a = 0; a < g.arrow_count(); ++a) t.inverse.emplace_back(name_of(Sector::GG, a), name_of(Sector::GG, g.inverse(a)));
  for (Index b = 0; b < h.arrow_count(); ++b) t.inverse.emplace_back(name_of(Sector::HH, b), name_of(Sector::HH, h.inverse(b)));
  for (Index p = 0; p < n; ++p) {
    t.inverse.emplace_back(name_of(Sector::GZ, p), name_of(Sector::ZG, p));
    t.inverse.emplace_back(name_of(Sector::ZG, p), name_of(Sector::GZ, p));
  }

  auto add = [&](Sector sa, Index a, Sector sb, Index b, Sector sc, Index c) {
    t.compose.push_back({name_of(sa, a), name_of(sb, b), name_of(sc, c)});
  };
  // GG.GG and GG.GZ
  for (Index a = 0; a < g.arrow_count(); ++a) {
    for (Index b : g.r_fiber(g.source(a))) add(Sector::GG, a, Sector::GG, b, Sector::GG, g.compose(a, b));
    for (Index p : z.left().anchor_fiber(g.source(a))) add(Sector::GG, a, Sector::GZ, p, Sector::GZ, z.act_left(a, p));
  }
  // HH.HH and HH.ZG (eta . z-bar)
  for (Index a = 0; a < h.arrow_count(); ++a) {
    for (Index b : h.r_fiber(h.source(a))) add(Sector::HH, a, Sector::HH, b, Sector::HH, h.compose(a, b));
    for (Index p : zop.left().anchor_fiber(h.source(a))) add(Sector::HH, a, Sector::ZG, p, Sector::ZG, zop.act_left(a, p));
  }
  for (Index p = 0; p < n; ++p) {
    // GZ.HH: z . eta
    for (Index eta : h.r_fiber(z.s(p))) add(Sector::GZ, p, Sector::HH, eta, Sector::GZ, z.act_right(p, eta));
    // GZ.ZG: z y-bar = G[z, y] whenever s(z) = s(y)
    for (Index q : z.right().anchor_fiber(z.s(p))) add(Sector::GZ, p, Sector::ZG, q, Sector::GG, g_bracket(z, p, q));
    // ZG.GZ: y-bar z = [y, z]_H whenever r(y) = r(z)
    for (Index q : z.left().anchor_fiber(z.r(p))) add(Sector::ZG, p, Sector::GZ, q, Sector::HH, h_bracket(z, p, q));
    // ZG.GG: z-bar . gamma
    for (Index gamma : g.r_fiber(zop.s(p))) add(Sector::ZG, p, Sector::GG, gamma, Sector::ZG, zop.act_right(p, gamma));
  }

  LinkingGroupoid link;
  link.groupoid = std::make_shared<const FiniteGroupoid>(FiniteGroupoid::from_tables(t));
  link.space = z;
  link.opposite = zop;
  const FiniteGroupoid& l = *link.groupoid;
  link.sector.resize(l.arrow_count());
  link.origin.resize(l.arrow_count());
  link.from_g.resize(g.arrow_count());
  link.from_z.resize(n);
  link.from_zop.resize(n);
  link.from_h.resize(h.arrow_count());
  for (const Named& a : named) {
    const Index i = l.arrow_index(a.id);
    link.sector[i] = a.sector;
    link.origin[i] = a.origin;
    switch (a.sector) {
      case Sector::GG: link.from_g[a.origin] = i; break;
      case Sector::GZ: link.from_z[a.origin] = i; break;
      case Sector::ZG: link.from_zop[a.origin] = i; break;
      case Sector::HH: link.from_h[a.origin] = i; break;
    }
  }
  for (Index u = 0; u < g.unit_count(); ++u) link.g_unit.push_back(l.unit_index(g_name(g.unit_id(u))));
  for (Index v = 0; v < h.unit_count(); ++v) link.h_unit.push_back(l.unit_index(h_name(h.unit_id(v))));
  return link;
}

HaarSystem build_linking_haar(const LinkingGroupoid& link, const HaarSystem& g_haar, const HaarSystem& h_haar) {
  const Bispace& z = link.space;
  const FiniteGroupoid& g = z.left_groupoid();
  const FiniteGroupoid& h = z.right_groupoid();
  if (g_haar.size() != g.arrow_count() || h_haar.size() != h.arrow_count()) {
    throw CarrierMismatch("build_linking_haar: Haar tables do not match G and H");
  }
  HaarSystem kappa{std::vector<double>(link.l().arrow_count(), 0.0)};
  for (Index a = 0; a < g.arrow_count(); ++a) kappa.weights[link.from_g[a]] = g_haar[a];
  for (Index b = 0; b < h.arrow_count(); ++b) kappa.weights[link.from_h[b]] = h_haar[b];
  for (Index u = 0; u < g.unit_count(); ++u) {
    const FiberMeasure sigma = sigma_measure(z, h_haar, u);
    for (Index p : z.left().anchor_fiber(u)) kappa.weights[link.from_z[p]] = sigma[p];
  }
  for (Index v = 0; v < h.unit_count(); ++v) {
    const FiberMeasure sigma = sigma_measure(link.opposite, g_haar, v);
    for (Index p : link.opposite.left().anchor_fiber(v)) kappa.weights[link.from_zop[p]] = sigma[p];
  }
  return kappa;
}

Blocks block_decompose(const LinkingGroupoid& link, const AlgebraElement& f) {
  if (f.carrier() != Carrier::L || f.size() != link.l().arrow_count()) {
    throw CarrierMismatch("block_decompose: element is not on the linking groupoid");
  }
  const Bispace& z = link.space;
  Blocks b{AlgebraElement(Carrier::G, z.left_groupoid().arrow_count()), AlgebraElement(Carrier::Z, z.point_count()),
           AlgebraElement(Carrier::Zop, z.point_count()), AlgebraElement(Carrier::H, z.right_groupoid().arrow_count())};
  for (Index i = 0; i < f.size(); ++i) {
    switch (link.sector[i]) {
      case Sector::GG: b.gg[link.origin[i]] = f[i]; break;
      case Sector::GZ: b.gz[link.origin[i]] = f[i]; break;
      case Sector::ZG: b.zg[link.origin[i]] = f[i]; break;
      case Sector::HH: b.hh[link.origin[i]] = f[i]; break;
    }
  }
  return b;
}

AlgebraElement block_compose(const LinkingGroupoid& link, const Blocks& b) {
  const Bispace& z = link.space;
  if (b.gg.size() != z.left_groupoid().arrow_count() || b.gz.size() != z.point_count() ||
      b.zg.size() != z.point_count() || b.hh.size() != z.right_groupoid().arrow_count()) {
    throw CarrierMismatch("block_compose: block sizes do not match the equivalence");
  }
  AlgebraElement f(Carrier::L, link.l().arrow_count());
  for (Index i = 0; i < f.size(); ++i) {
    switch (link.sector[i]) {
      case Sector::GG: f[i] = b.gg[link.origin[i]]; break;
      case Sector::GZ: f[i] = b.gz[link.origin[i]]; break;
      case Sector::ZG: f[i] = b.zg[link.origin[i]]; break;
      case Sector::HH: f[i] = b.hh[link.origin[i]]; break;
    }
  }
  return f;
}

AlgebraElement compress(const LinkingGroupoid& link, const AlgebraElement& f, Corner left, Corner right) {
  if (f.carrier() != Carrier::L || f.size() != link.l().arrow_count()) {
    throw CarrierMismatch("compress: element is not on the linking groupoid");
  }
  const Sector keep = left == Corner::G ? (right == Corner::G ? Sector::GG : Sector::GZ)
                                        : (right == Corner::G ? Sector::ZG : Sector::HH);
  AlgebraElement out(Carrier::L, f.size());
  for (Index i = 0; i < f.size(); ++i) {
    if (link.sector[i] == keep) out[i] = f[i];
  }
  return out;
}

AlgebraElement embed_corner(const LinkingGroupoid& link, const AlgebraElement& f, Corner corner) {
  const Bispace& z = link.space;
  Blocks b{AlgebraElement(Carrier::G, z.left_groupoid().arrow_count()), AlgebraElement(Carrier::Z, z.point_count()),
           AlgebraElement(Carrier::Zop, z.point_count()), AlgebraElement(Carrier::H, z.right_groupoid().arrow_count())};
  if (corner == Corner::G) {
    if (f.carrier() != Carrier::G) throw CarrierMismatch("embed_corner: expected an element on G");
    b.gg = f;
  } else {
    if (f.carrier() != Carrier::H) throw CarrierMismatch("embed_corner: expected an element on H");
    b.hh = f;
  }
  return block_compose(link, b);
}

}  // namespace groupoidal
