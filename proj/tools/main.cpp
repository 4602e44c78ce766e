// groupoidal: command-line front end for the finite groupoid workbench.
//
// Exit status: 0 when every requested check passes, 1 on a check failure,
// 2 on malformed input. Results go to stdout as JSON (or tables with
// --human); diagnostics go to stderr.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "groupoidal/errors.hpp"
#include "groupoidal/fixtures.hpp"
#include "groupoidal/io.hpp"
#include "groupoidal/kernels.hpp"
#include "groupoidal/linking.hpp"
#include "groupoidal/representations.hpp"
#include "groupoidal/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace groupoidal;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kMalformed = 2;

struct Options {
  double tol = 1e-9;
  std::size_t samples = 100;
  std::string seed = "0x5EED";
  bool human = false;
};

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(text, &used, 16);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigurationError("--seed expects a hexadecimal integer, got '" + text + "'");
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json report_json(const ValidationReport& r) {
  json j{{"ok", r.ok()}, {"violations", json::array()}, {"notes", r.notes()}};
  for (const Violation& v : r.violations()) j["violations"].push_back({{"axiom", v.axiom}, {"detail", v.detail}});
  return j;
}

void print_validation(const ValidationReport& r, bool human) {
  if (!human) {
    emit(report_json(r));
    return;
  }
  std::cout << (r.ok() ? "ok" : "violations: " + std::to_string(r.violations().size())) << '\n';
  for (const Violation& v : r.violations()) std::cout << "  " << v.axiom << ": " << v.detail << '\n';
  for (const std::string& n : r.notes()) std::cout << "  note: " << n << '\n';
}

void diagnose(const ValidationReport& r) {
  for (const Violation& v : r.violations()) std::cerr << "violation [" << v.axiom << "] " << v.detail << '\n';
}

io::LoadedGroupoid load_groupoid(const std::string& path) { return io::groupoid_from_json(io::read_json_file(path)); }

Equivalence load_equivalence(const std::string& path) {
  return io::equivalence_from_json(io::read_json_file(path), fs::path(path).parent_path());
}

/// Groupoid plus Haar system that must validate before numeric work.
io::LoadedGroupoid load_valid_groupoid(const std::string& path) {
  io::LoadedGroupoid g = load_groupoid(path);
  ValidationReport r = validate_groupoid(g.groupoid);
  if (r.ok()) r.merge(validate_haar(g.groupoid, g.haar), "haar");
  if (!r.ok()) {
    diagnose(r);
    throw FormatError(path + " is not a valid groupoid with Haar system");
  }
  return g;
}

int cmd_validate(const Options& o, const std::string& groupoid, const std::string& equivalence) {
  ValidationReport r;
  if (!groupoid.empty()) {
    const io::LoadedGroupoid g = load_groupoid(groupoid);
    r = validate_groupoid(g.groupoid);
    if (r.ok()) r.merge(validate_haar(g.groupoid, g.haar));
  } else {
    r = validate_equivalence(load_equivalence(equivalence));
  }
  print_validation(r, o.human);
  diagnose(r);
  return r.ok() ? kOk : kCheckFailed;
}

int cmd_build_linking(const std::string& equivalence) {
  const Equivalence e = load_equivalence(equivalence);
  const ValidationReport r = validate_equivalence(e);
  if (!r.ok()) {
    diagnose(r);
    return kCheckFailed;
  }
  const LinkingGroupoid link = build_linking(e.space);
  emit(io::linking_to_json(link, build_linking_haar(link, e.left_haar, e.right_haar)));
  return kOk;
}

int cmd_norm(const Options& o, const std::string& groupoid, const std::string& element, const std::string& unit) {
  const io::LoadedGroupoid g = load_valid_groupoid(groupoid);
  const AlgebraElement f = io::element_from_json(io::read_json_file(element), g.groupoid.arrow_ids());
  const std::vector<double> norms = unit_norms(f, g.groupoid, g.haar);
  json out;
  if (!unit.empty()) {
    const auto u = g.groupoid.find_unit(unit);
    if (!u) throw FormatError("unknown unit '" + unit + "'");
    out = {{"unit", unit}, {"norm", norms[*u]}};
  } else {
    double top = 0.0;
    json per_unit = json::object();
    for (Index u = 0; u < norms.size(); ++u) {
      top = std::max(top, norms[u]);
      per_unit[g.groupoid.unit_id(u)] = norms[u];
    }
    out = {{"reduced_norm", top}, {"unit_norms", per_unit}, {"i_norm", i_norm(f, g.groupoid, g.haar)}};
  }
  if (o.human) {
    if (out.contains("unit")) {
      std::printf("%s\t%.12g\n", unit.c_str(), out["norm"].get<double>());
    } else {
      std::printf("reduced norm\t%.12g\n", out["reduced_norm"].get<double>());
      std::printf("I-norm\t%.12g\n", out["i_norm"].get<double>());
      for (auto& [id, v] : out["unit_norms"].items()) std::printf("  %s\t%.12g\n", id.c_str(), v.get<double>());
    }
  } else {
    emit(out);
  }
  return kOk;
}

int cmd_kernel_dim(const Options& o, const std::string& groupoid) {
  const io::LoadedGroupoid g = load_valid_groupoid(groupoid);
  const std::size_t dim = reduced_kernel_dimension(g.groupoid, g.haar);
  if (o.human) {
    std::cout << dim << '\n';
  } else {
    emit({{"kernel_dimension", dim}, {"arrows", g.groupoid.arrow_count()}});
  }
  return kOk;
}

struct CheckArgs {
  std::string equivalence;
  bool all = false;
  std::vector<std::string> suites;
  std::size_t gram_size = 3;
  std::size_t generators = 0;
  bool negate_rip = false;
  std::string double_weight;
};

int cmd_check(const Options& o, const CheckArgs& a) {
  VerifyConfig config;
  config.samples = o.samples;
  config.tol = o.tol;
  config.seed = parse_seed(o.seed);
  config.gram_size = a.gram_size;
  config.generators = a.generators;
  config.negate_rip = a.negate_rip;
  if (config.samples == 0) throw ConfigurationError("--samples must be positive");

  const Equivalence e = load_equivalence(a.equivalence);
  if (!a.double_weight.empty()) {
    if (!validate_equivalence(e).ok()) throw ConfigurationError("fault injection needs a valid equivalence");
    const LinkingGroupoid link = build_linking(e.space);
    const auto arrow = link.l().find_arrow(a.double_weight);
    if (!arrow) throw ConfigurationError("unknown linking arrow '" + a.double_weight + "'");
    config.double_linking_weight = *arrow;
  }

  Report report;
  if (a.all || a.suites.empty()) {
    report = verify_all(e, config);
  } else {
    if (e.space.point_count() == 0) throw ConfigurationError("the bispace is empty");
    report.suites.push_back(verify_structure(e, config));
    if (report.suites.front().passed()) {
      for (const std::string& s : a.suites) {
        if (s != "structure") report.suites.push_back(run_suite(s, e, config));
      }
    } else {
      report.suites.front().notes.emplace_back("structural failure: numeric suites skipped");
    }
  }
  if (o.human) {
    std::cout << render_human(report);
  } else {
    emit(to_json(report));
  }
  for (const SuiteReport& s : report.suites) {
    for (const Check& c : s.checks) {
      if (!c.ok) std::cerr << "check failed [" << s.suite << "/" << c.name << "] residual " << c.residual
                           << " > " << c.limit << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    }
  }
  return report.passed() ? kOk : kCheckFailed;
}

struct GenArgs {
  std::string kind;
  int n = 2;
  int m = 2;
  int p = 2;
  std::string out;
};

json generate(const GenArgs& a) {
  using namespace groupoidal::fixtures;
  auto groupoid = [](const FiniteGroupoid& g) { return io::groupoid_to_json(g, HaarSystem::counting(g)); };
  auto positive = [](int v, const char* flag) {
    if (v < 1) throw ConfigurationError(std::string(flag) + " must be at least 1");
    return v;
  };
  const std::string& k = a.kind;
  if (k == "A") return groupoid(fix_a());
  if (k == "B") return groupoid(fix_b());
  if (k == "C") return groupoid(fix_c());
  if (k == "D") return io::equivalence_to_json(fix_d());
  if (k == "E") {
    const FiniteGroupoid g = fix_a();
    return io::groupoid_to_json(g, fix_e_haar(g));
  }
  if (k == "F") return io::equivalence_to_json(fix_f());
  if (k == "pair") return groupoid(pair_groupoid(positive(a.n, "--n")));
  if (k == "cyclic") return groupoid(cyclic_group(positive(a.n, "--n")));
  if (k == "transitive") return groupoid(transitive_groupoid(positive(a.n, "--n"), positive(a.m, "--m")));
  if (k == "pair-trivial") return io::equivalence_to_json(pair_trivial_equivalence(positive(a.n, "--n")));
  if (k == "pair-cyclic") {
    return io::equivalence_to_json(pair_cyclic_equivalence(positive(a.n, "--n"), positive(a.m, "--m")));
  }
  if (k == "transitive-equivalence") {
    return io::equivalence_to_json(
        transitive_equivalence(positive(a.n, "--n"), positive(a.p, "--p"), positive(a.m, "--m")));
  }
  throw ConfigurationError("unknown fixture kind '" + k + "'");
}

int cmd_gen_fixture(const GenArgs& a) {
  const json j = generate(a);
  if (a.out.empty()) {
    emit(j);
  } else {
    std::FILE* f = std::fopen(a.out.c_str(), "w");
    if (!f) throw FormatError("cannot write " + a.out);
    const std::string text = j.dump(2) + "\n";
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoid equivalences: validation, linking groupoids, reduced norms, verification suites"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--tol", o.tol, "Tolerance for norm comparisons")->capture_default_str();
  app.add_option("--samples", o.samples, "Random samples per check")->capture_default_str();
  app.add_option("--seed", o.seed, "Sampler seed (hex)")->capture_default_str();
  app.add_flag("--human", o.human, "Render tables instead of JSON");

  std::string groupoid, equivalence, element, unit;

  auto* validate = app.add_subcommand("validate", "Check groupoid, Haar or equivalence axioms");
  auto* vg = validate->add_option("--groupoid", groupoid, "Groupoid file");
  auto* ve = validate->add_option("--equivalence", equivalence, "Equivalence file");
  vg->excludes(ve);
  validate->require_option(1);

  auto* linking = app.add_subcommand("build-linking", "Emit the linking groupoid of an equivalence");
  linking->add_option("--equivalence", equivalence, "Equivalence file")->required();

  auto* norm = app.add_subcommand("norm", "Reduced norm, per-unit norms and I-norm of an element");
  norm->add_option("--groupoid", groupoid, "Groupoid file")->required();
  norm->add_option("--element", element, "Element file")->required();
  norm->add_option("--unit", unit, "Report a single unit");

  auto* kernel = app.add_subcommand("kernel-dim", "Dimension of the joint kernel of the regular representations");
  kernel->add_option("--groupoid", groupoid, "Groupoid file")->required();

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run verification suites on an equivalence");
  check->add_option("--equivalence", check_args.equivalence, "Equivalence file")->required();
  check->add_flag("--all", check_args.all, "Run every suite (default when none is selected)");
  check->add_option("--suite", check_args.suites, "Suite to run (repeatable)")
      ->check(CLI::IsMember(suite_names()));
  check->add_option("--gram-size", check_args.gram_size, "Elements per Gram block")->capture_default_str();
  check->add_option("--generators", check_args.generators, "Random generators per carrier (0: all point masses)")
      ->capture_default_str();
  check->add_flag("--inject-negated-rip", check_args.negate_rip, "Fault injection: negate the right inner product");
  check->add_option("--inject-doubled-weight", check_args.double_weight,
                    "Fault injection: double the linking Haar weight of this arrow of L");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen-fixture", "Write a fixture file");
  gen->add_option("kind", gen_args.kind,
                  "A|B|C|D|E|F|pair|cyclic|transitive|pair-trivial|pair-cyclic|transitive-equivalence")
      ->required();
  gen->add_option("--n", gen_args.n, "Points / group order")->capture_default_str();
  gen->add_option("--m", gen_args.m, "Cyclic factor order")->capture_default_str();
  gen->add_option("--p", gen_args.p, "Points on the right-hand side")->capture_default_str();
  gen->add_option("--out", gen_args.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  kernels::configure_threads_from_env();
  try {
    if (*validate) return cmd_validate(o, groupoid, equivalence);
    if (*linking) return cmd_build_linking(equivalence);
    if (*norm) return cmd_norm(o, groupoid, element, unit);
    if (*kernel) return cmd_kernel_dim(o, groupoid);
    if (*check) return cmd_check(o, check_args);
    if (*gen) return cmd_gen_fixture(gen_args);
  } catch (const FormatError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kMalformed;
  } catch (const CarrierMismatch& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::out_of_range& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kMalformed;
  }
  return kMalformed;
}
