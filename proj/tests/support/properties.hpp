#pragma once

// Randomized invariant checks on the public wasserstein_distance() entry
// point. Each check runs a fixed number of seeded instances and reports
// failures rather than asserting, so the same code serves the unit tests and
// the acceptance runner.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "random_instances.hpp"
#include "wass/wasserstein.hpp"

namespace wass::testing {

struct CheckReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double worst_error = 0.0;
  std::string first_failure;

  void record(bool ok, double error, const std::string& what);
  bool passed() const { return instances > 0 && failures == 0; }
  std::string summary() const;
};

/// Accumulates optimality certificates of every LP solve made through it.
class CertifiedRunner {
public:
  /// Distance through the public API; LP solves are certified on the side.
  DistanceResult run(const ValueArray& u, const ValueArray& v,
                     std::optional<std::span<const double>> uw = std::nullopt,
                     std::optional<std::span<const double>> vw = std::nullopt);
  double distance(const ValueArray& u, const ValueArray& v,
                  std::optional<std::span<const double>> uw = std::nullopt,
                  std::optional<std::span<const double>> vw = std::nullopt) {
    return run(u, v, uw, vw).distance.as_double();
  }

  const CheckReport& report() const { return report_; }

private:
  CheckReport report_{"certificates"};
};

CheckReport check_self_distance(Rng& rng, std::size_t count, CertifiedRunner& runner);
CheckReport check_shift(Rng& rng, std::size_t count, CertifiedRunner& runner);
CheckReport check_collapse(Rng& rng, std::size_t count, CertifiedRunner& runner);
CheckReport check_zero_weight(Rng& rng, std::size_t count, CertifiedRunner& runner);
CheckReport check_combine_weights(Rng& rng, std::size_t count, CertifiedRunner& runner);
CheckReport check_orthogonal(Rng& rng, std::size_t count, CertifiedRunner& runner);
CheckReport check_dimension_padding(Rng& rng, std::size_t count, CertifiedRunner& runner);
CheckReport check_homogeneity(Rng& rng, std::size_t count, CertifiedRunner& runner);
CheckReport check_error_codes(Rng& rng, std::size_t count);
CheckReport check_special_values(Rng& rng, std::size_t count);

/// All checks above, `count` instances each.
std::vector<CheckReport> run_property_suite(Rng& rng, std::size_t count, CertifiedRunner& runner);

} // namespace wass::testing
