#include "groupoidal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "groupoidal/algebra.hpp"
#include "groupoidal/detail/format.hpp"
#include "groupoidal/errors.hpp"
#include "groupoidal/io.hpp"
#include "groupoidal/linalg.hpp"
#include "groupoidal/linking.hpp"
#include "groupoidal/representations.hpp"

namespace groupoidal {

using nlohmann::json;

namespace {

// Limits fixed by the algebra rather than the user tolerance.
constexpr double kExactLimit = 1e-12;
constexpr double kImprimitivityLimit = 1e-10;
constexpr double kPositivityLimit = 1e-10;
constexpr double kFactorizationSlack = 1e-9;

constexpr const char* kAmenabilityCaveat =
    "full and reduced norms coincide here because every finite groupoid is amenable; "
    "this suite checks the finite consequences (norm equality, block identity, zero reduced kernels), "
    "not the analytic content of the universal-norm statement";

Check measured(std::string name, double residual, double limit, std::string detail = {}) {
  Check c{std::move(name), residual, limit, residual <= limit, std::move(detail)};
  return c;
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (Complex x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Entrywise difference relative to max(1, size of the reference).
double rel_diff(const AlgebraElement& a, const AlgebraElement& ref) {
  return max_abs_diff(a, ref) / std::max(1.0, max_abs(ref.values()));
}

double rel_diff(const Matrix& a, const Matrix& ref) {
  return max_abs_diff(a, ref) / std::max(1.0, max_abs(ref.data()));
}

std::string hex(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

/// Worst residual over a sampling loop together with what produced it.
struct Worst {
  double residual = 0.0;
  json witness;

  template <class MakeWitness>
  void offer(double r, MakeWitness&& make) {
    if (std::isnan(residual)) return;
    if (witness.is_null() || !(r <= residual)) {
      residual = r;
      witness = make();
    }
  }
};

SuiteReport start(std::string name, const VerifyConfig& config, std::size_t samples) {
  SuiteReport r;
  r.suite = std::move(name);
  r.seed = config.seed;
  r.samples = samples;
  r.tol = config.tol;
  return r;
}

void record_worst(SuiteReport& r, std::string name, const Worst& w, double limit) {
  Check c = measured(std::move(name), w.residual, limit);
  if (!c.ok && !r.witness) r.witness = json{{"check", c.name}, {"at", w.witness}};
  r.record(std::move(c));
}

void record_validation(SuiteReport& r, std::string name, const ValidationReport& v) {
  Check c{std::move(name), static_cast<double>(v.violations().size()), 0.0, v.ok(), {}};
  if (!v.ok()) {
    const Violation& first = v.violations().front();
    c.detail = first.axiom + ": " + first.detail;
    if (!r.witness) r.witness = json{{"check", c.name}, {"axiom", first.axiom}, {"detail", first.detail}};
  }
  for (const std::string& n : v.notes()) r.notes.push_back(n);
  r.record(std::move(c));
}

json element_witness(const AlgebraElement& f, const std::vector<std::string>& ids) {
  return io::element_to_json(f, ids);
}

std::vector<std::string> point_ids(const Bispace& z) { return z.left().point_ids(); }

LinkingAlgebra make_algebra(const Equivalence& e, const VerifyConfig& config) {
  if (config.double_linking_weight) return LinkingAlgebra(e, linking_haar_for(e, config));
  return LinkingAlgebra(e);
}

/// Inner products with the configured fault applied.
struct Products {
  const Equivalence& e;
  bool negate = false;

  AlgebraElement rip(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out = groupoidal::rip(e, a, b);
    if (negate) out *= -1.0;
    return out;
  }
  AlgebraElement lip(const AlgebraElement& a, const AlgebraElement& b) const { return groupoidal::lip(e, a, b); }
};

/// Block matrix [Ind delta_u(inner(phi_i, phi_j))]_ij.
Matrix gram_block(const FiniteGroupoid& g, const HaarSystem& w, Index u, const std::vector<std::vector<AlgebraElement>>& inner) {
  const std::size_t n = inner.size();
  const std::size_t d = g.s_fiber(u).size();
  Matrix out(n * d, n * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RepMatrix m = ind_delta(g, w, u, inner[i][j]);
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) out(i * d + a, j * d + b) = m.entries(a, b);
      }
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::undersampled: return "undersampled";
  }
  return "?";
}

void SuiteReport::record(Check c) {
  if (std::isnan(c.residual) || c.residual > max_residual) max_residual = c.residual;
  if (!c.ok) status = Status::fail;
  checks.push_back(std::move(c));
}

bool Report::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
}

const SuiteReport* Report::find(std::string_view suite) const {
  for (const SuiteReport& s : suites) {
    if (s.suite == suite) return &s;
  }
  return nullptr;
}

json to_json(const SuiteReport& r) {
  json j;
  j["suite"] = r.suite;
  j["seed"] = hex(r.seed);
  j["samples"] = r.samples;
  j["max_residual"] = r.max_residual;
  j["tol"] = r.tol;
  j["status"] = std::string(to_string(r.status));
  if (r.witness) j["witness"] = *r.witness;
  j["checks"] = json::array();
  for (const Check& c : r.checks) {
    json cj{{"name", c.name}, {"residual", c.residual}, {"limit", c.limit}, {"ok", c.ok}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    j["checks"].push_back(std::move(cj));
  }
  j["notes"] = r.notes;
  return j;
}

json to_json(const Report& r) {
  json j;
  j["status"] = r.passed() ? "pass" : "fail";
  j["suites"] = json::array();
  for (const SuiteReport& s : r.suites) j["suites"].push_back(to_json(s));
  return j;
}

std::string render_human(const Report& r) {
  std::ostringstream out;
  char line[256];
  for (const SuiteReport& s : r.suites) {
    std::snprintf(line, sizeof line, "%-18s %-13s max_residual=%-12.3g seed=%s samples=%zu\n", s.suite.c_str(),
                  std::string(to_string(s.status)).c_str(), s.max_residual, hex(s.seed).c_str(), s.samples);
    out << line;
    for (const Check& c : s.checks) {
      std::snprintf(line, sizeof line, "  %-4s %-32s %-12.3g <= %-10.3g", c.ok ? "ok" : "FAIL", c.name.c_str(),
                    c.residual, c.limit);
      out << line;
      if (!c.detail.empty()) out << "  " << c.detail;
      out << '\n';
    }
    for (const std::string& n : s.notes) out << "  note: " << n << '\n';
  }
  out << (r.passed() ? "overall: pass\n" : "overall: FAIL\n");
  return out.str();
}

HaarSystem linking_haar_for(const Equivalence& e, const VerifyConfig& config) {
  const LinkingGroupoid link = build_linking(e.space);
  HaarSystem kappa = build_linking_haar(link, e.left_haar, e.right_haar);
  if (config.double_linking_weight) {
    if (*config.double_linking_weight >= kappa.size()) {
      throw ConfigurationError("fault injection: linking arrow index out of range");
    }
    kappa.weights[*config.double_linking_weight] *= 2.0;
  }
  return kappa;
}

SuiteReport verify_structure(const Equivalence& e, const VerifyConfig& config) {
  SuiteReport r = start("structure", config, 0);
  const ValidationReport v = validate_equivalence(e);
  record_validation(r, "equivalence", v);
  if (!v.ok()) return r;

  const LinkingGroupoid link = build_linking(e.space);
  const HaarSystem kappa = linking_haar_for(e, config);
  record_validation(r, "linking-groupoid", validate_groupoid(link.l()));
  record_validation(r, "linking-haar", validate_haar(link.l(), kappa));

  // kappa_u (the inversion image) splits as lambda_u plus rho over the
  // opposite-side orbit: rho_{Z^op} on G-units, rho_Z on H-units.
  const FiniteGroupoid& l = link.l();
  const Equivalence op = opposite(e);
  ValidationReport image;
  auto compare = [&](Index a, double expected) {
    const double got = kappa[l.inverse(a)];
    if (!masses_equal(got, expected)) {
      image.add("inversion-image", "arrow " + l.arrow_id(a) + ": kappa(a^-1) = " + detail::num(got) +
                                       ", expected " + detail::num(expected));
    }
  };
  for (Index a = 0; a < l.arrow_count(); ++a) {
    const Index o = link.origin[a];
    switch (link.sector[a]) {
      case Sector::GG: compare(a, e.left_haar[e.g().inverse(o)]); break;
      case Sector::HH: compare(a, e.right_haar[e.h().inverse(o)]); break;
      case Sector::ZG: compare(a, rho_measure(op.space.left(), e.right_haar, o)[o]); break;
      case Sector::GZ: compare(a, rho_measure(e.space.left(), e.left_haar, o)[o]); break;
    }
  }
  record_validation(r, "inversion-image", image);
  return r;
}

SuiteReport verify_invariants(const Equivalence& e, const VerifyConfig& config) {
  SuiteReport r = start("invariants", config, config.samples);
  const Bispace& z = e.space;
  const FiniteGroupoid& g = e.g();
  const FiniteGroupoid& h = e.h();

  ValidationReport brackets;
  for (Index p = 0; p < z.point_count(); ++p) {
    for (Index gamma : g.r_fiber(z.r(p))) {
      // gamma^-1 . p is defined, so [p, gamma^-1 . p]_G = gamma
      const Index q = z.act_left(g.inverse(gamma), p);
      if (g_bracket(z, p, q) != gamma) brackets.add("g-bracket", z.point_id(p) + ", " + z.point_id(q));
    }
    for (Index eta : h.r_fiber(z.s(p))) {
      const Index q = z.act_right(p, eta);
      if (h_bracket(z, p, q) != eta) brackets.add("h-bracket", z.point_id(p) + ", " + z.point_id(q));
    }
    for (Index q = 0; q < z.point_count(); ++q) {
      if (z.s(p) == z.s(q) && z.act_left(g_bracket(z, p, q), q) != p) {
        brackets.add("g-bracket", "[y,z].z != y at " + z.point_id(p) + ", " + z.point_id(q));
      }
      if (z.r(p) == z.r(q) && z.act_right(p, h_bracket(z, p, q)) != q) {
        brackets.add("h-bracket", "y.[y,z] != z at " + z.point_id(p) + ", " + z.point_id(q));
      }
    }
  }
  record_validation(r, "brackets", brackets);

  ValidationReport involution_check;
  const BispaceTables once = z.to_tables();
  const BispaceTables twice = opposite_space(opposite_space(z)).to_tables();
  if (once.points != twice.points || once.r != twice.r || once.s != twice.s ||
      once.left_action != twice.left_action || once.right_action != twice.right_action) {
    involution_check.add("opposite-involution", "opposite of the opposite differs from the original");
  }
  record_validation(r, "opposite-involution", involution_check);

  // Both measures recompute from every representative and throw on disagreement.
  ValidationReport measures;
  try {
    for (Index u = 0; u < g.unit_count(); ++u) (void)sigma_measure(z, e.right_haar, u);
    for (Index p = 0; p < z.point_count(); ++p) (void)rho_measure(z.left(), e.left_haar, p);
  } catch (const BrokenEquivalenceError& err) {
    measures.add("representative-independence", err.what());
  }
  record_validation(r, "measure-independence", measures);

  ElementSampler sampler(config.seed);
  Worst star, inorm;
  for (std::size_t i = 0; i < config.samples; ++i) {
    for (const auto* side : {&g, &h}) {
      const HaarSystem& w = side == &g ? e.left_haar : e.right_haar;
      const Carrier c = side == &g ? z.left_carrier() : z.right_carrier();
      const AlgebraElement f = sampler.element(c, side->arrow_count());
      const AlgebraElement fs = involution(f, *side);
      star.offer(max_abs_diff(involution(fs, *side), f), [&] { return json{{"sample", i}}; });
      const double a = i_norm(f, *side, w);
      inorm.offer(std::abs(i_norm(fs, *side, w) - a) / std::max(1.0, a), [&] { return json{{"sample", i}}; });
    }
  }
  record_worst(r, "double-involution", star, 0.0);
  record_worst(r, "i-norm-involution", inorm, kExactLimit);
  return r;
}

SuiteReport verify_block_identity(const Equivalence& e, const VerifyConfig& config) {
  SuiteReport r = start("block-identity", config, config.samples);
  const LinkingAlgebra a = make_algebra(e, config);
  const FiniteGroupoid& l = a.l();
  ElementSampler sampler(config.seed);
  Worst worst;
  for (std::size_t i = 0; i < config.samples; ++i) {
    const AlgebraElement f = sampler.element(Carrier::L, l.arrow_count());
    const AlgebraElement k = sampler.element(Carrier::L, l.arrow_count());
    const AlgebraElement direct = a.convolve(f, k);
    const AlgebraElement blocks = a.convolve_blocks(f, k);
    Index at = 0;
    double diff = 0.0;
    for (Index x = 0; x < l.arrow_count(); ++x) {
      const double d = std::abs(direct[x] - blocks[x]);
      if (!(d <= diff)) {
        diff = d;
        at = x;
      }
    }
    worst.offer(diff, [&] { return json{{"sample", i}, {"arrow", l.arrow_id(at)}}; });
  }
  record_worst(r, "blockwise-vs-direct", worst, kExactLimit);
  return r;
}

SuiteReport verify_theorem_main1(const Equivalence& e, const VerifyConfig& config) {
  return verify_theorem_main1(e, linking_haar_for(e, config), config);
}

SuiteReport verify_theorem_main1(const Equivalence& e, const HaarSystem& kappa, const VerifyConfig& config) {
  SuiteReport r = start("reduced-norms", config, config.samples);
  const LinkingGroupoid link = build_linking(e.space);
  const FiniteGroupoid& l = link.l();
  if (kappa.size() != l.arrow_count()) throw CarrierMismatch("linking Haar system does not match L");
  ElementSampler sampler(config.seed);

  auto corner_side = [&](Corner corner, const char* name) {
    const bool on_g = corner == Corner::G;
    const FiniteGroupoid& grp = on_g ? e.g() : e.h();
    const HaarSystem& w = on_g ? e.left_haar : e.right_haar;
    const Carrier c = on_g ? e.space.left_carrier() : e.space.right_carrier();
    Worst worst;
    for (std::size_t i = 0; i < config.samples; ++i) {
      const AlgebraElement f = sampler.element(c, grp.arrow_count());
      const double ref = reduced_norm(f, grp, w);
      const std::vector<double> per_unit = unit_norms(embed_corner(link, f, corner), l, kappa);
      const auto top = std::max_element(per_unit.begin(), per_unit.end());
      const double got = top == per_unit.end() ? 0.0 : *top;
      worst.offer(std::abs(got - ref) / std::max(1.0, ref), [&] {
        return json{{"sample", i},
                    {"unit", top == per_unit.end() ? std::string() : l.unit_id(top - per_unit.begin())},
                    {"reference", ref},
                    {"linking", got},
                    {"f", element_witness(f, grp.arrow_ids())}};
      });
    }
    record_worst(r, name, worst, config.tol);
  };
  corner_side(Corner::G, "corner-norm-G");
  corner_side(Corner::H, "corner-norm-H");

  const Products products{e, config.negate_rip};
  Worst module;
  for (std::size_t i = 0; i < config.samples; ++i) {
    const AlgebraElement phi = sampler.element(e.space.point_carrier(), e.space.point_count());
    const double right = reduced_norm(products.rip(phi, phi), e.h(), e.right_haar);
    const double left = reduced_norm(products.lip(phi, phi), e.g(), e.left_haar);
    module.offer(std::abs(right - left) / std::max(1.0, left), [&] {
      return json{{"sample", i}, {"rip_norm", right}, {"lip_norm", left},
                  {"phi", element_witness(phi, point_ids(e.space))}};
    });
  }
  record_worst(r, "module-norms", module, config.tol);
  return r;
}

SuiteReport verify_imprimitivity(const Equivalence& e, const VerifyConfig& config) {
  SuiteReport r = start("imprimitivity", config, config.samples);
  const Bispace& z = e.space;
  const FiniteGroupoid& g = e.g();
  const FiniteGroupoid& h = e.h();
  const LinkingAlgebra algebra = make_algebra(e, config);
  const FiniteGroupoid& l = algebra.l();
  const Products products{e, config.negate_rip};
  ElementSampler sampler(config.seed);

  auto draw_g = [&] { return sampler.element(z.left_carrier(), g.arrow_count()); };
  auto draw_h = [&] { return sampler.element(z.right_carrier(), h.arrow_count()); };
  auto draw_z = [&] { return sampler.element(z.point_carrier(), z.point_count()); };
  auto draw_l = [&] { return sampler.element(Carrier::L, l.arrow_count()); };

  Worst assoc_g, assoc_h, assoc_l, anti_g, anti_h, anti_l, bimodule, adj_right, adj_left, hermitian, tilde, imprim;
  Worst gram_h, gram_g;
  for (std::size_t i = 0; i < config.samples; ++i) {
    auto at = [i] { return json{{"sample", i}}; };
    const AlgebraElement f1 = draw_g(), f2 = draw_g(), f3 = draw_g();
    const AlgebraElement b1 = draw_h(), b2 = draw_h(), b3 = draw_h();
    const AlgebraElement phi = draw_z(), psi = draw_z(), chi = draw_z();
    const AlgebraElement k1 = draw_l(), k2 = draw_l(), k3 = draw_l();

    auto cg = [&](const AlgebraElement& x, const AlgebraElement& y) { return convolve(x, y, g, e.left_haar); };
    auto ch = [&](const AlgebraElement& x, const AlgebraElement& y) { return convolve(x, y, h, e.right_haar); };
    auto cl = [&](const AlgebraElement& x, const AlgebraElement& y) { return algebra.convolve(x, y); };

    assoc_g.offer(rel_diff(cg(cg(f1, f2), f3), cg(f1, cg(f2, f3))), at);
    assoc_h.offer(rel_diff(ch(ch(b1, b2), b3), ch(b1, ch(b2, b3))), at);
    assoc_l.offer(rel_diff(cl(cl(k1, k2), k3), cl(k1, cl(k2, k3))), at);
    anti_g.offer(rel_diff(involution(cg(f1, f2), g), cg(involution(f2, g), involution(f1, g))), at);
    anti_h.offer(rel_diff(involution(ch(b1, b2), h), ch(involution(b2, h), involution(b1, h))), at);
    anti_l.offer(rel_diff(involution(cl(k1, k2), l), cl(involution(k2, l), involution(k1, l))), at);

    bimodule.offer(rel_diff(right_action(e, left_action(e, f1, phi), b1), left_action(e, f1, right_action(e, phi, b1))),
                   at);
    adj_right.offer(rel_diff(products.rip(left_action(e, f1, phi), psi),
                             products.rip(phi, left_action(e, involution(f1, g), psi))),
                    at);
    adj_left.offer(rel_diff(products.lip(right_action(e, phi, b1), psi),
                            products.lip(phi, right_action(e, psi, involution(b1, h)))),
                   at);
    hermitian.offer(rel_diff(involution(products.rip(phi, psi), h), products.rip(psi, phi)), at);
    tilde.offer(rel_diff(algebra.opposite_module().rip(op_star(phi), op_star(psi)), products.lip(phi, psi)), at);
    imprim.offer(rel_diff(left_action(e, products.lip(phi, psi), chi), right_action(e, phi, products.rip(psi, chi))),
                 at);

    std::vector<AlgebraElement> family;
    for (std::size_t k = 0; k < config.gram_size; ++k) family.push_back(draw_z());
    std::vector<std::vector<AlgebraElement>> rips(family.size()), lips(family.size());
    for (std::size_t a = 0; a < family.size(); ++a) {
      for (std::size_t b = 0; b < family.size(); ++b) {
        rips[a].push_back(products.rip(family[a], family[b]));
        lips[a].push_back(products.lip(family[a], family[b]));
      }
    }
    auto positivity = [&](Worst& worst, const FiniteGroupoid& grp, const HaarSystem& w,
                          const std::vector<std::vector<AlgebraElement>>& inner) {
      for (Index u = 0; u < grp.unit_count(); ++u) {
        const std::vector<double> ev = hermitian_eigenvalues(gram_block(grp, w, u, inner));
        const double low = ev.empty() ? 0.0 : ev.front();
        worst.offer(std::max(0.0, -low), [&] { return json{{"sample", i}, {"unit", grp.unit_id(u)}, {"min_eigenvalue", low}}; });
      }
    };
    positivity(gram_h, h, e.right_haar, rips);
    positivity(gram_g, g, e.left_haar, lips);
  }
  record_worst(r, "associativity-G", assoc_g, kExactLimit);
  record_worst(r, "associativity-H", assoc_h, kExactLimit);
  record_worst(r, "associativity-L", assoc_l, kExactLimit);
  record_worst(r, "anti-multiplicative-G", anti_g, kExactLimit);
  record_worst(r, "anti-multiplicative-H", anti_h, kExactLimit);
  record_worst(r, "anti-multiplicative-L", anti_l, kExactLimit);
  record_worst(r, "bimodule-compatibility", bimodule, kExactLimit);
  record_worst(r, "adjoint-right", adj_right, kExactLimit);
  record_worst(r, "adjoint-left", adj_left, kExactLimit);
  record_worst(r, "rip-hermitian", hermitian, kExactLimit);
  record_worst(r, "opposite-inner-product", tilde, kExactLimit);
  record_worst(r, "imprimitivity-identity", imprim, kImprimitivityLimit);
  record_worst(r, "gram-positivity-H", gram_h, kPositivityLimit);
  record_worst(r, "gram-positivity-G", gram_g, kPositivityLimit);
  return r;
}

SuiteReport verify_full_projections(const Equivalence& e, const VerifyConfig& config) {
  SuiteReport r = start("full-projections", config, config.generators);
  const Bispace& z = e.space;
  const FiniteGroupoid& g = e.g();
  const FiniteGroupoid& h = e.h();
  const OppositeModule om(e);
  const Products products{e, config.negate_rip};
  ElementSampler sampler(config.seed);

  auto generators = [&](Carrier c, std::size_t n) {
    std::vector<AlgebraElement> out;
    if (config.generators == 0) {
      for (std::size_t i = 0; i < n; ++i) out.push_back(AlgebraElement::delta(c, n, i));
    } else {
      for (std::size_t i = 0; i < config.generators; ++i) out.push_back(sampler.element(c, n));
    }
    return out;
  };
  const auto gen_g = generators(z.left_carrier(), g.arrow_count());
  const auto gen_h = generators(z.right_carrier(), h.arrow_count());
  const auto gen_z = generators(z.point_carrier(), z.point_count());
  const auto gen_zop = generators(Carrier::Zop, z.point_count());

  auto sweep = [&](std::string name, const std::vector<AlgebraElement>& left, const std::vector<AlgebraElement>& right,
                   std::size_t dim, auto&& product) {
    std::vector<std::vector<Complex>> span;
    for (const AlgebraElement& x : left) {
      for (const AlgebraElement& y : right) {
        const AlgebraElement p = product(x, y);
        span.emplace_back(p.values().begin(), p.values().end());
      }
    }
    const std::size_t rank = span_rank(span);
    const std::size_t tried = span.size();
    const std::string detail = "rank " + std::to_string(rank) + " of " + std::to_string(dim) + " from " +
                               std::to_string(tried) + " products";
    if (rank < dim && tried < dim) {
      // too few products to possibly span: flagged, not failed
      Check c{std::move(name), static_cast<double>(dim - rank), 0.0, true, detail + " (undersampled)"};
      if (r.status == Status::pass) r.status = Status::undersampled;
      r.record(std::move(c));
      return rank;
    }
    Check c{name, static_cast<double>(dim - rank), 0.0, rank == dim, detail};
    if (!c.ok && !r.witness) r.witness = json{{"check", name}, {"rank", rank}, {"dimension", dim}};
    r.record(std::move(c));
    return rank;
  };

  // L p_G L, block by block
  const std::size_t rg = sweep("p_G-span-G", gen_g, gen_g, g.arrow_count(),
                               [&](const auto& f, const auto& k) { return convolve(f, k, g, e.left_haar); });
  const std::size_t rz = sweep("p_G-span-Z", gen_g, gen_z, z.point_count(),
                               [&](const auto& f, const auto& k) { return left_action(e, f, k); });
  const std::size_t rzop = sweep("p_G-span-Zop", gen_zop, gen_g, z.point_count(),
                                 [&](const auto& f, const auto& k) { return om.act_right(f, k); });
  const std::size_t rh = sweep("p_G-span-H", gen_zop, gen_z, h.arrow_count(),
                               [&](const auto& f, const auto& k) { return products.rip(op_star(f), k); });
  r.notes.push_back("p_G ranks (" + std::to_string(rg) + "," + std::to_string(rz) + "," + std::to_string(rzop) + "," +
                    std::to_string(rh) + ") against dimensions (" + std::to_string(g.arrow_count()) + "," +
                    std::to_string(z.point_count()) + "," + std::to_string(z.point_count()) + "," +
                    std::to_string(h.arrow_count()) + ")");

  // L p_H L
  sweep("p_H-span-G", gen_z, gen_zop, g.arrow_count(),
        [&](const auto& f, const auto& k) { return om.rip(op_star(f), k); });
  sweep("p_H-span-Z", gen_z, gen_h, z.point_count(), [&](const auto& f, const auto& k) { return right_action(e, f, k); });
  sweep("p_H-span-Zop", gen_h, gen_zop, z.point_count(), [&](const auto& f, const auto& k) { return om.act_left(f, k); });
  sweep("p_H-span-H", gen_h, gen_h, h.arrow_count(),
        [&](const auto& f, const auto& k) { return convolve(f, k, h, e.right_haar); });
  return r;
}

SuiteReport verify_representations(const Equivalence& e, const VerifyConfig& config) {
  SuiteReport r = start("representations", config, config.samples);
  const Equivalence op = opposite(e);
  ElementSampler sampler(config.seed);

  // The G side acts on Z; the H side acts on Z^op.
  auto side = [&](const GSpace& x, const HaarSystem& w, Carrier carrier, const std::string& tag) {
    const FiniteGroupoid& grp = x.groupoid();
    const std::vector<Orbit> orbs = orbits(x);
    std::vector<RegisteredSpace> registered{{tag == "G" ? "Z" : "Zop", x, std::vector<double>(orbs.size(), 1.0)}};

    Worst hom, adj, intertwine, factor, sup, bound;
    for (std::size_t i = 0; i < config.samples; ++i) {
      auto at = [i] { return json{{"sample", i}}; };
      const AlgebraElement f = sampler.element(carrier, grp.arrow_count());
      const AlgebraElement k = sampler.element(carrier, grp.arrow_count());
      const AlgebraElement fk = convolve(f, k, grp, w);
      const AlgebraElement fs = involution(f, grp);
      std::vector<double> per_unit;
      for (Index u = 0; u < grp.unit_count(); ++u) {
        const RepMatrix mf = ind_delta(grp, w, u, f);
        hom.offer(rel_diff(ind_delta(grp, w, u, fk).entries, mf.entries * ind_delta(grp, w, u, k).entries), at);
        adj.offer(rel_diff(ind_delta(grp, w, u, fs).entries, adjoint(mf.entries)), at);
        per_unit.push_back(operator_norm(mf));
      }
      const double ref = per_unit.empty() ? 0.0 : *std::max_element(per_unit.begin(), per_unit.end());

      // transport gamma -> gamma . x0 between L^2(G_u) and the orbit of x0
      for (std::size_t o = 0; o < orbs.size(); ++o) {
        std::vector<double> mu(orbs.size(), 0.0);
        mu[o] = 1.0;
        const RepMatrix rx = r_mu_rep(x, w, mu, f);
        const Index x0 = orbs[o].representative;
        const RepMatrix d = ind_delta(grp, w, x.anchor(x0), f);
        std::vector<std::size_t> to(d.basis.size());
        double residual = 0.0;
        for (std::size_t a = 0; a < d.basis.size(); ++a) {
          const std::string& target = x.point_id(x.act(grp.arrow_index(d.basis[a]), x0));
          to[a] = static_cast<std::size_t>(std::find(rx.basis.begin(), rx.basis.end(), target) - rx.basis.begin());
          if (to[a] >= rx.basis.size()) {
            residual = std::numeric_limits<double>::infinity();
            break;
          }
          residual = std::max(residual, std::abs(rx.masses[to[a]] - d.masses[a]));
        }
        if (std::isfinite(residual)) {
          for (std::size_t a = 0; a < d.basis.size(); ++a) {
            for (std::size_t b = 0; b < d.basis.size(); ++b) {
              residual = std::max(residual, std::abs(rx.entries(to[a], to[b]) - d.entries(a, b)));
            }
          }
        }
        intertwine.offer(residual, [&] { return json{{"sample", i}, {"orbit", x.point_id(x0)}}; });
        factor.offer(std::max(0.0, operator_norm(rx) - ref),
                     [&] { return json{{"sample", i}, {"orbit", x.point_id(x0)}, {"reduced_norm", ref}}; });
      }
      std::vector<double> mu(orbs.size());
      for (double& m : mu) m = sampler.positive(0.1, 2.0);
      factor.offer(std::max(0.0, operator_norm(r_mu_rep(x, w, mu, f)) - ref),
                   [&] { return json{{"sample", i}, {"orbit", "mixed"}, {"reduced_norm", ref}}; });

      // point masses on the units attain the sup over atomic measures
      double best = 0.0;
      for (Index u = 0; u < grp.unit_count(); ++u) {
        std::vector<double> point(grp.unit_count(), 0.0);
        point[u] = 1.0;
        best = std::max(best, operator_norm(ind_mu(grp, w, point, f)));
      }
      std::vector<double> atoms(grp.unit_count());
      for (double& m : atoms) m = sampler.positive(0.1, 2.0);
      const double mixed = operator_norm(ind_mu(grp, w, atoms, f));
      sup.offer(std::max(std::abs(best - ref), mixed - ref) / std::max(1.0, ref),
                [&] { return json{{"sample", i}, {"point_mass_sup", best}, {"reduced_norm", ref}}; });

      const BoundReport b = check_i_norm_bound(grp, w, f, registered);
      double excess = 0.0;
      for (const BoundCheck& c : b.checks) excess = std::max(excess, c.norm - c.bound);
      bound.offer(excess, [&] {
        return json{{"sample", i}, {"i_norm", b.i_norm}, {"reduced_norm", b.reduced_norm}};
      });
    }
    record_worst(r, "star-homomorphism-" + tag, hom, kExactLimit);
    record_worst(r, "star-adjoint-" + tag, adj, kExactLimit);
    record_worst(r, "orbit-intertwining-" + tag, intertwine, kExactLimit);
    record_worst(r, "factorization-bound-" + tag, factor, kFactorizationSlack);
    record_worst(r, "point-mass-sup-" + tag, sup, config.tol);
    record_worst(r, "i-norm-bound-" + tag, bound, kINormSlack);
  };
  side(e.space.left(), e.left_haar, e.space.left_carrier(), "G");
  side(op.space.left(), op.left_haar, op.space.left_carrier(), "H");
  return r;
}

SuiteReport verify_universal_norm_finite(const Equivalence& e, const VerifyConfig& config) {
  SuiteReport r = start("universal-norm", config, config.samples);
  for (const SuiteReport& part : {verify_theorem_main1(e, config), verify_block_identity(e, config)}) {
    for (Check c : part.checks) {
      c.name = part.suite + "/" + c.name;
      r.record(std::move(c));
    }
    if (part.witness && !r.witness) r.witness = part.witness;
  }
  const LinkingGroupoid link = build_linking(e.space);
  const HaarSystem kappa = linking_haar_for(e, config);
  auto kernel = [&](const char* name, const FiniteGroupoid& grp, const HaarSystem& w) {
    const std::size_t dim = reduced_kernel_dimension(grp, w);
    Check c{name, static_cast<double>(dim), 0.0, dim == 0, "dimension " + std::to_string(dim)};
    if (!c.ok && !r.witness) r.witness = json{{"check", name}, {"dimension", dim}};
    r.record(std::move(c));
  };
  kernel("reduced-kernel-G", e.g(), e.left_haar);
  kernel("reduced-kernel-H", e.h(), e.right_haar);
  kernel("reduced-kernel-L", link.l(), kappa);
  r.notes.emplace_back(kAmenabilityCaveat);
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"structure",     "invariants",       "block-identity",
                                              "reduced-norms", "imprimitivity",    "full-projections",
                                              "representations", "universal-norm"};
  return names;
}

SuiteReport run_suite(std::string_view name, const Equivalence& e, const VerifyConfig& config) {
  if (name == "structure") return verify_structure(e, config);
  if (name == "invariants") return verify_invariants(e, config);
  if (name == "block-identity") return verify_block_identity(e, config);
  if (name == "reduced-norms") return verify_theorem_main1(e, config);
  if (name == "imprimitivity") return verify_imprimitivity(e, config);
  if (name == "full-projections") return verify_full_projections(e, config);
  if (name == "representations") return verify_representations(e, config);
  if (name == "universal-norm") return verify_universal_norm_finite(e, config);
  throw ConfigurationError("unknown suite '" + std::string(name) + "'");
}

Report verify_all(const Equivalence& e, const VerifyConfig& config) {
  if (e.space.point_count() == 0 || e.g().unit_count() == 0 || e.h().unit_count() == 0) {
    throw ConfigurationError("verify_all: the bispace is empty");
  }
  if (config.samples == 0) throw ConfigurationError("verify_all: samples must be positive");
  Report report;
  report.suites.push_back(verify_structure(e, config));
  if (!report.suites.front().passed()) {
    report.suites.front().notes.emplace_back("structural failure: numeric suites skipped");
    return report;
  }
  for (std::size_t i = 1; i < suite_names().size(); ++i) report.suites.push_back(run_suite(suite_names()[i], e, config));
  return report;
}

}  // namespace groupoidal
