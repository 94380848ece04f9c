#ifndef ORDCALC_VERIFY_HPP
#define ORDCALC_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

namespace ordcalc {

/// Outcome of one identity check: the largest deviation observed across its
/// parameter grid against the tolerance it must meet (0 for exact checks).
struct IdentityCheck {
  std::string name;
  bool pass = false;
  double max_error = 0.0;
  double tolerance = 0.0;
};

/// Stirling identities, all exact: explicit sum vs recurrence, the shift
/// identity S_{k+1}^{(m+1)} = (m+1) S_k^{(m+1)} + S_k^{(m)}, and
/// x^k = sum_m S_k^{(m)} x(x-1)...(x-m+1).
std::vector<IdentityCheck> verify_stirling();

/// Both exponential lemmas against the generic difference-operator paths.
std::vector<IdentityCheck> verify_lemmas();

/// Fock-space numerics: moment/Laguerre identity, series vs closed forms,
/// matrix vs analytic moments, truncated commutator, negative-binomial sum.
std::vector<IdentityCheck> verify_fock();

/// Runs one of "stirling", "lemmas", "fock", or "all".
/// Throws std::invalid_argument for an unknown suite name.
std::vector<IdentityCheck> verify_suite(std::string_view suite);

}  // namespace ordcalc

#endif
