#include "groupoidal/fixtures.hpp"

#include <stdexcept>
#include <vector>

namespace groupoidal::fixtures {

namespace {

std::string pair_id(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string cyclic_id(int k, int n) {
  std::string digits = std::to_string(k);
  const std::size_t width = std::to_string(n - 1).size();
  return "g" + std::string(width - digits.size(), '0') + digits;
}

std::string triple_id(int i, int j, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(k) + ")";
}

int mod(int a, int m) { return ((a % m) + m) % m; }

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

FiniteGroupoid pair_groupoid(int n) {
  require_positive(n, "pair groupoid size");
  GroupoidTables t;
  for (int i = 1; i <= n; ++i) t.units.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      t.arrows.push_back({pair_id(i, j), std::to_string(j), std::to_string(i)});
      t.inverse.emplace_back(pair_id(i, j), pair_id(j, i));
      for (int k = 1; k <= n; ++k) t.compose.push_back({pair_id(i, j), pair_id(j, k), pair_id(i, k)});
    }
  return FiniteGroupoid::from_tables(t);
}

FiniteGroupoid cyclic_group(int n) {
  require_positive(n, "cyclic group order");
  GroupoidTables t;
  t.units = {"e"};
  for (int a = 0; a < n; ++a) {
    t.arrows.push_back({cyclic_id(a, n), "e", "e"});
    t.inverse.emplace_back(cyclic_id(a, n), cyclic_id(mod(-a, n), n));
    for (int b = 0; b < n; ++b) t.compose.push_back({cyclic_id(a, n), cyclic_id(b, n), cyclic_id(mod(a + b, n), n)});
  }
  return FiniteGroupoid::from_tables(t);
}

FiniteGroupoid trivial_group() {
  GroupoidTables t;
  t.units = {"*"};
  t.arrows = {{"id_*", "*", "*"}};
  t.compose = {{"id_*", "id_*", "id_*"}};
  t.inverse = {{"id_*", "id_*"}};
  return FiniteGroupoid::from_tables(t);
}

FiniteGroupoid transitive_groupoid(int n, int m) {
  require_positive(n, "transitive groupoid size");
  require_positive(m, "isotropy order");
  GroupoidTables t;
  for (int i = 1; i <= n; ++i) t.units.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int a = 0; a < m; ++a) {
        t.arrows.push_back({triple_id(i, j, a), std::to_string(j), std::to_string(i)});
        t.inverse.emplace_back(triple_id(i, j, a), triple_id(j, i, mod(-a, m)));
        for (int k = 1; k <= n; ++k)
          for (int b = 0; b < m; ++b)
            t.compose.push_back({triple_id(i, j, a), triple_id(j, k, b), triple_id(i, k, mod(a + b, m))});
      }
  return FiniteGroupoid::from_tables(t);
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  GroupoidTables out;
  auto append = [&](const FiniteGroupoid& g, const std::string& prefix) {
    GroupoidTables t = g.to_tables();
    for (auto& u : t.units) out.units.push_back(prefix + u);
    for (auto& r : t.arrows) out.arrows.push_back({prefix + r.id, prefix + r.src, prefix + r.dst});
    for (auto& c : t.compose) out.compose.push_back({prefix + c[0], prefix + c[1], prefix + c[2]});
    for (auto& [x, y] : t.inverse) out.inverse.emplace_back(prefix + x, prefix + y);
  };
  append(a, "a:");
  append(b, "b:");
  return FiniteGroupoid::from_tables(out);
}

HaarSystem fix_e_haar(const FiniteGroupoid& fix_a) {
  const std::vector<double> c = {1.0, 2.0};
  return HaarSystem::from_source_weights(fix_a, c);
}

Equivalence pair_trivial_equivalence(int n) {
  auto g = std::make_shared<const FiniteGroupoid>(pair_groupoid(n));
  auto h = std::make_shared<const FiniteGroupoid>(trivial_group());
  BispaceTables t;
  auto z = [](int i) { return "z" + std::to_string(i); };
  for (int i = 1; i <= n; ++i) {
    t.points.push_back(z(i));
    t.r.emplace_back(z(i), std::to_string(i));
    t.s.emplace_back(z(i), "*");
    t.right_action.push_back({z(i), "id_*", z(i)});
    for (int j = 1; j <= n; ++j) t.left_action.push_back({pair_id(i, j), z(j), z(i)});
  }
  Equivalence e{Bispace::from_tables(g, h, t), HaarSystem::counting(*g), HaarSystem::counting(*h)};
  return e;
}

Equivalence pair_cyclic_equivalence(int n, int m) {
  auto g = std::make_shared<const FiniteGroupoid>(transitive_groupoid(n, m));
  auto h = std::make_shared<const FiniteGroupoid>(cyclic_group(m));
  BispaceTables t;
  auto z = [](int i, int c) { return "(" + std::to_string(i) + ";" + std::to_string(c) + ")"; };
  for (int i = 1; i <= n; ++i)
    for (int c = 0; c < m; ++c) {
      t.points.push_back(z(i, c));
      t.r.emplace_back(z(i, c), std::to_string(i));
      t.s.emplace_back(z(i, c), "e");
      for (int b = 0; b < m; ++b) t.right_action.push_back({z(i, c), cyclic_id(b, m), z(i, mod(c + b, m))});
      for (int k = 1; k <= n; ++k)
        for (int a = 0; a < m; ++a) t.left_action.push_back({triple_id(k, i, a), z(i, c), z(k, mod(a + c, m))});
    }
  return Equivalence{Bispace::from_tables(g, h, t), HaarSystem::counting(*g), HaarSystem::counting(*h)};
}

Equivalence transitive_equivalence(int n, int p, int m) {
  auto g = std::make_shared<const FiniteGroupoid>(transitive_groupoid(n, m));
  auto h = std::make_shared<const FiniteGroupoid>(transitive_groupoid(p, m));
  BispaceTables t;
  auto z = [](int i, int k, int c) { return "[" + std::to_string(i) + "," + std::to_string(k) + ";" + std::to_string(c) + "]"; };
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= p; ++k)
      for (int c = 0; c < m; ++c) {
        t.points.push_back(z(i, k, c));
        t.r.emplace_back(z(i, k, c), std::to_string(i));
        t.s.emplace_back(z(i, k, c), std::to_string(k));
        // (j,i;a) . [i,k;c] = [j,k;a+c]
        for (int j = 1; j <= n; ++j)
          for (int a = 0; a < m; ++a) t.left_action.push_back({triple_id(j, i, a), z(i, k, c), z(j, k, mod(a + c, m))});
        // [i,k;c] . (k,l;b) = [i,l;c+b]
        for (int l = 1; l <= p; ++l)
          for (int b = 0; b < m; ++b) t.right_action.push_back({z(i, k, c), triple_id(k, l, b), z(i, l, mod(c + b, m))});
      }
  return Equivalence{Bispace::from_tables(g, h, t), HaarSystem::counting(*g), HaarSystem::counting(*h)};
}

Equivalence fix_f() {
  auto g = std::make_shared<const FiniteGroupoid>(cyclic_group(2));
  auto h = std::make_shared<const FiniteGroupoid>(cyclic_group(2));
  BispaceTables t;
  t.points = {"g0", "g1"};
  t.r = {{"g0", "e"}, {"g1", "e"}};
  t.s = {{"g0", "e"}, {"g1", "e"}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const std::string prod = "g" + std::to_string((a + b) % 2);
      t.left_action.push_back({"g" + std::to_string(a), "g" + std::to_string(b), prod});
      t.right_action.push_back({"g" + std::to_string(a), "g" + std::to_string(b), prod});
    }
  return Equivalence{Bispace::from_tables(g, h, t), HaarSystem::counting(*g), HaarSystem::counting(*h)};
}

Equivalence reweighted(const Equivalence& e, std::span<const double> g_unit_mass, std::span<const double> h_unit_mass) {
  return Equivalence{e.space, HaarSystem::from_source_weights(e.g(), g_unit_mass),
                     HaarSystem::from_source_weights(e.h(), h_unit_mass)};
}

}  // namespace groupoidal::fixtures
