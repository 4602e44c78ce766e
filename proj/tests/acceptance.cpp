// Acceptance run: one PASS/FAIL line per criterion, each timed against its
// budget. Exit status is non-zero when any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "groupoidal/fixtures.hpp"
#include "groupoidal/linking.hpp"
#include "groupoidal/representations.hpp"
#include "groupoidal/verify.hpp"
#include "support.hpp"

using namespace groupoidal;
namespace fx = groupoidal::fixtures;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Named {
  std::string name;
  Equivalence e;
};

/// FIX-D, FIX-F, pair(n<=5) x trivial, pair(n<=3) x Z/m (m<=4).
std::vector<Named> fixtures_all() {
  std::vector<Named> out{{"FIX-D", fx::fix_d()}, {"FIX-F", fx::fix_f()}};
  for (int n = 1; n <= 5; ++n) out.push_back({"pair" + std::to_string(n) + "xtrivial", fx::pair_trivial_equivalence(n)});
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 4; ++m) {
      out.push_back({"pair" + std::to_string(n) + "xZ" + std::to_string(m), fx::pair_cyclic_equivalence(n, m)});
    }
  }
  return out;
}

std::string first_failure(const SuiteReport& r) {
  for (const auto& c : r.checks) {
    if (!c.ok) return c.name + " residual " + std::to_string(c.residual) + " > " + std::to_string(c.limit);
  }
  return "status " + std::string(to_string(r.status));
}

/// Every named check must have run and passed; undersampled does not count.
void require_suite(Outcome& out, const std::string& fixture, const SuiteReport& r, std::vector<std::string> needed = {}) {
  if (r.status != Status::pass) {
    out.fail(fixture + ": " + r.suite + " " + first_failure(r));
    return;
  }
  for (const auto& n : needed) {
    bool seen = false;
    for (const auto& c : r.checks) seen |= c.name == n && c.ok;
    if (!seen) out.fail(fixture + ": " + r.suite + " missing check " + n);
  }
}

VerifyConfig hundred() {
  VerifyConfig c;
  c.samples = 100;
  return c;
}

Outcome ac1() {
  Outcome out;
  for (const auto& f : fixtures_all()) {
    const LinkingGroupoid link = build_linking(f.e.space);
    const ValidationReport g = validate_groupoid(link.l());
    if (!g.ok()) out.fail(f.name + ": " + g.violations().front().detail);
    const ValidationReport h = validate_haar(link.l(), build_linking_haar(link, f.e.left_haar, f.e.right_haar));
    if (!h.ok()) out.fail(f.name + ": " + h.violations().front().detail);
  }
  return out;
}

Outcome ac2() {
  Outcome out;
  for (const auto& f : fixtures_all()) require_suite(out, f.name, verify_block_identity(f.e, hundred()), {"blockwise-vs-direct"});
  return out;
}

Outcome ac3() {
  Outcome out;
  for (const auto& f : fixtures_all()) {
    require_suite(out, f.name, verify_theorem_main1(f.e, hundred()), {"corner-norm-G", "corner-norm-H", "module-norms"});
  }
  return out;
}

Outcome ac4() {
  Outcome out;
  ElementSampler rng;
  for (int n : {2, 3, 4, 8}) {
    const FiniteGroupoid zn = fx::cyclic_group(n);
    const HaarSystem w = HaarSystem::counting(zn);
    for (int i = 0; i < 100; ++i) {
      const AlgebraElement f = rng.element(Carrier::G, zn.arrow_count());
      const double ref = support::dft_norm(zn, f);
      const double got = reduced_norm(f, zn, w);
      if (std::abs(got - ref) > 1e-9 * std::max(1.0, ref)) {
        out.fail("Z/" + std::to_string(n) + ": " + std::to_string(got) + " vs DFT " + std::to_string(ref));
      }
    }
  }
  return out;
}

Outcome ac5() {
  Outcome out;
  for (const auto& f : fixtures_all()) {
    require_suite(out, f.name, verify_imprimitivity(f.e, hundred()),
                  {"gram-positivity-G", "gram-positivity-H", "imprimitivity-identity", "adjoint-left", "adjoint-right"});
  }
  return out;
}

Outcome ac6() {
  Outcome out;
  const std::vector<Named> cases{{"FIX-D", fx::fix_d()}, {"FIX-F", fx::fix_f()}, {"pair3xtrivial", fx::pair_trivial_equivalence(3)}};
  for (const auto& f : cases) {
    require_suite(out, f.name, verify_full_projections(f.e),
                  {"p_G-span-G", "p_G-span-Z", "p_G-span-Zop", "p_G-span-H"});
  }
  return out;
}

Outcome ac7() {
  Outcome out;
  for (const auto& f : fixtures_all()) require_suite(out, f.name, verify_representations(f.e, hundred()));
  return out;
}

Outcome ac8() {
  Outcome out;
  auto zero = [&](const std::string& what, const FiniteGroupoid& g, const HaarSystem& w) {
    const std::size_t dim = reduced_kernel_dimension(g, w);
    if (dim != 0) out.fail(what + ": kernel dimension " + std::to_string(dim));
  };
  const FiniteGroupoid a = fx::fix_a(), b = fx::fix_b(), ab = fx::disjoint_union(a, b);
  zero("FIX-A", a, HaarSystem::counting(a));
  zero("FIX-B", b, HaarSystem::counting(b));
  zero("FIX-A+FIX-B", ab, HaarSystem::counting(ab));
  zero("FIX-E", a, fx::fix_e_haar(a));
  for (const auto& f : fixtures_all()) {
    zero(f.name + "/G", f.e.g(), f.e.left_haar);
    zero(f.name + "/H", f.e.h(), f.e.right_haar);
    const LinkingGroupoid link = build_linking(f.e.space);
    zero(f.name + "/L", link.l(), build_linking_haar(link, f.e.left_haar, f.e.right_haar));
  }
  return out;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "structural exactness", 5, ac1},
      {"AC2", "block identity", 10, ac2},
      {"AC3", "corner and module norms", 30, ac3},
      {"AC4", "Fourier oracle", 5, ac4},
      {"AC5", "positivity and imprimitivity", 10, ac5},
      {"AC6", "fullness", 5, ac6},
      {"AC7", "representation laws", 10, ac7},
      {"AC8", "kernel triviality", 5, ac8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= c.budget_s) o.fail("over budget");
    std::printf("%s %s  %s (%.2f s, limit %.0f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs, c.budget_s,
                o.ok ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
