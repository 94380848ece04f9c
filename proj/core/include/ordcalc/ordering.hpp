#ifndef ORDCALC_ORDERING_HPP
#define ORDCALC_ORDERING_HPP

#include <map>

#include "ordcalc/combinatorics.hpp"
#include "ordcalc/opalgebra.hpp"

namespace ordcalc {

/// Where an expansion came from; carried along for reporting.
struct ExpansionSource {
  enum class Kind { power, function, lemma1, lemma2 };
  Kind kind = Kind::power;
  unsigned power = 0;     // kind == power
  double gamma = 0.0;     // kind == lemma1 / lemma2
  unsigned truncation = 0;  // kind != power

  bool operator==(const ExpansionSource&) const = default;
};

/// Ordered expansion of an operator in n-hat:
///   normal:     sum_m c_m (a-dagger)^m a^m
///   antinormal: sum_m c_m a^m (a-dagger)^m
/// Power-sourced expansions store only nonzero coefficients; function- and
/// lemma-sourced ones store every m in 0..M, zeros included.
template <typename Scalar>
struct OrderedExpansion {
  Ordering tag = Ordering::normal;
  std::map<unsigned, Scalar> coefficients;
  ExpansionSource source;

  Scalar coefficient(unsigned m) const {
    auto it = coefficients.find(m);
    return it == coefficients.end() ? Scalar{} : it->second;
  }
};

/// n-hat^k in normal order: c_m = S_k^{(m)}, the Stirling numbers of the
/// second kind.
OrderedExpansion<Rational> normal_power(unsigned k);

/// n-hat^k in anti-normal order: c_m = (-1)^k (-1)^m S_{k+1}^{(m+1)}.
OrderedExpansion<Rational> antinormal_power(unsigned k);

/// f(n-hat) in normal order, truncated at order M:
///   c_m = Delta^m f(0) / m!
/// from integer-point samples f(0..M). Throws std::out_of_range when the
/// table is shorter than M+1.
template <typename Scalar>
OrderedExpansion<Scalar> normal_function(const FunctionTable<Scalar>& f, unsigned M);

/// f(n-hat) in anti-normal order, truncated at order M. The caller samples
/// the reflected function g(u) = f(-u) at u = 0..M+1 (one extra sample):
///   c_m = (-1)^m (Delta^m g(0) + Delta^{m+1} g(0)) / m!.
/// The two-difference form comes from folding the shifted-index Stirling sum
/// through S_{k+1}^{(m+1)} = (m+1) S_k^{(m+1)} + S_k^{(m)}. Throws
/// std::out_of_range when the table is shorter than M+2.
template <typename Scalar>
OrderedExpansion<Scalar> antinormal_function(const FunctionTable<Scalar>& g, unsigned M);

/// Normal-ordered exponential exp(-gamma n-hat) = :exp((e^-gamma - 1) n-hat):,
/// i.e. c_m = (e^-gamma - 1)^m / m!, directly from the closed form.
OrderedExpansion<double> lemma1_coefficients(double gamma, unsigned M);

/// Anti-normal-ordered exponential, c_m = e^gamma (1 - e^gamma)^m / m!.
OrderedExpansion<double> lemma2_coefficients(double gamma, unsigned M);

/// Truncated Stirling-weighted Taylor sum
///   sum_{k=m..K} taylor[k] * S_k^{(m)},   taylor[k] = f^(k)(0)/k!,
/// which converges to Delta^m f(0)/m! for analytic f. Exists to verify that
/// identity against forward_difference. Requires m <= K < taylor.size().
template <typename Scalar>
Scalar taylor_difference_check(const std::vector<Scalar>& taylor, unsigned m, unsigned K);

extern template OrderedExpansion<Rational> normal_function(const FunctionTable<Rational>&, unsigned);
extern template OrderedExpansion<double> normal_function(const FunctionTable<double>&, unsigned);
extern template OrderedExpansion<Rational> antinormal_function(const FunctionTable<Rational>&, unsigned);
extern template OrderedExpansion<double> antinormal_function(const FunctionTable<double>&, unsigned);
extern template Rational taylor_difference_check(const std::vector<Rational>&, unsigned, unsigned);
extern template double taylor_difference_check(const std::vector<double>&, unsigned, unsigned);

}  // namespace ordcalc

#endif
