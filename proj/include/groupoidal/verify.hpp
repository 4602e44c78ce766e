#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "groupoidal/equivalence.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/sampling.hpp"

namespace groupoidal {

struct VerifyConfig {
  std::size_t samples = 100;
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  /// Number of elements in each sampled Gram block.
  std::size_t gram_size = 3;
  /// Generators per carrier for the fullness sweep; 0 sweeps every point mass.
  std::size_t generators = 0;

  // Fault injection, for exercising the failure paths.
  bool negate_rip = false;
  /// Doubles the linking Haar weight of this arrow of L.
  std::optional<Index> double_linking_weight;
};

enum class Status { pass, fail, undersampled };

std::string_view to_string(Status s);

/// One named assertion inside a suite: the worst residual seen against its limit.
struct Check {
  std::string name;
  double residual = 0.0;
  double limit = 0.0;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tol = 0.0;
  Status status = Status::pass;
  std::optional<nlohmann::json> witness;
  std::vector<std::string> notes;
  std::vector<Check> checks;

  /// Undersampled counts as not failed.
  bool passed() const { return status != Status::fail; }
  /// Records the check, widening max_residual and failing the suite if needed.
  void record(Check c);
};

struct Report {
  std::vector<SuiteReport> suites;

  bool passed() const;
  const SuiteReport* find(std::string_view suite) const;
};

nlohmann::json to_json(const SuiteReport& r);
nlohmann::json to_json(const Report& r);
std::string render_human(const Report& r);

/// Exact checks: both groupoids and Haar systems, the equivalence axioms, L and
/// its Haar system, and the inversion-image decomposition of the linking
/// measures against rho on the opposite space.
SuiteReport verify_structure(const Equivalence& e, const VerifyConfig& config = {});

/// Bracket identities, opposite-space involution, representative independence
/// of the fiber measures, and sampled involution / I-norm identities.
SuiteReport verify_invariants(const Equivalence& e, const VerifyConfig& config = {});

/// Block formula against direct convolution on L, 1e-12 per arrow.
SuiteReport verify_block_identity(const Equivalence& e, const VerifyConfig& config = {});

/// Corner embeddings preserve reduced norms on both sides, and the two
/// completion norms of C_c(Z) agree.
SuiteReport verify_theorem_main1(const Equivalence& e, const VerifyConfig& config = {});
/// As above with an explicit linking Haar system in place of the built one.
SuiteReport verify_theorem_main1(const Equivalence& e, const HaarSystem& kappa, const VerifyConfig& config);

/// Algebra laws, adjoint relations, the imprimitivity identity and Gram positivity.
SuiteReport verify_imprimitivity(const Equivalence& e, const VerifyConfig& config = {});

/// Span ranks of the four products through p_G (and p_H) against carrier dimensions.
SuiteReport verify_full_projections(const Equivalence& e, const VerifyConfig& config = {});

/// *-homomorphism, intertwining, factorization and I-norm bounds for the
/// regular representations and R^X_mu on both sides.
SuiteReport verify_representations(const Equivalence& e, const VerifyConfig& config = {});

/// Corner norms, block identity, and trivial reduced kernels on G, H and L.
SuiteReport verify_universal_norm_finite(const Equivalence& e, const VerifyConfig& config = {});

/// Every suite, structure first; a structural failure skips the rest.
/// Throws ConfigurationError on an empty bispace.
Report verify_all(const Equivalence& e, const VerifyConfig& config = {});

/// Suite names accepted by run_suite, in verify_all order.
const std::vector<std::string>& suite_names();
/// Runs one suite by name; throws ConfigurationError for an unknown name.
SuiteReport run_suite(std::string_view name, const Equivalence& e, const VerifyConfig& config = {});

/// The linking Haar system with config's fault (if any) applied.
HaarSystem linking_haar_for(const Equivalence& e, const VerifyConfig& config);

}  // namespace groupoidal
