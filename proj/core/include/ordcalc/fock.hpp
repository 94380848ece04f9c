#ifndef ORDCALC_FOCK_HPP
#define ORDCALC_FOCK_HPP

#include <Eigen/Dense>
#include <complex>

#include "ordcalc/errors.hpp"
#include "ordcalc/opalgebra.hpp"
#include "ordcalc/ordering.hpp"

namespace ordcalc {

/// Truncated Fock space of dimension D with the dense annihilation matrix
/// (sqrt(n) on the first superdiagonal) and its adjoint. Matrices are built
/// once in the constructor and never mutated; all reads are thread-safe.
class FockSpace {
 public:
  explicit FockSpace(unsigned dim);

  unsigned dim() const { return dim_; }
  const Eigen::MatrixXcd& annihilation() const { return annihilation_; }
  const Eigen::MatrixXcd& creation() const { return creation_; }

 private:
  unsigned dim_;
  Eigen::MatrixXcd annihilation_;
  Eigen::MatrixXcd creation_;
};

/// A labelled state in a truncated Fock space.
struct StateVector {
  enum class Kind { fock, coherent };

  Kind kind = Kind::fock;
  unsigned fock_n = 0;                 // kind == fock
  std::complex<double> alpha{};        // kind == coherent
  Eigen::VectorXcd amplitudes;

  /// Number state |n>. Throws TruncationError unless n < dim.
  static StateVector fock(const FockSpace& space, unsigned n);

  /// Coherent state with amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!).
  /// Accurate (norm within 1e-12 of one) only while |alpha|^2 is well below
  /// the truncation dimension.
  static StateVector coherent(const FockSpace& space, std::complex<double> alpha);
};

/// Truncated-series evaluation result with its convergence report.
struct SeriesResult {
  double value = 0.0;
  double last_term = 0.0;   // magnitude of the final summand
  bool converged = true;    // false when term magnitudes grow across the final window
  unsigned terms_used = 0;  // summands accumulated (may stop early on overflow)
};

/// Laguerre polynomial L_m(x) by the three-term recurrence
/// (m+1) L_{m+1} = (2m+1-x) L_m - m L_{m-1}.
double laguerre(unsigned m, double x);

/// Coherent-state anti-normal moment <alpha| a^m (a-dagger)^m |alpha>
///   = sum_{k=0..m} |alpha|^{2k} (m!/((m-k)! k!))^2 (m-k)!,
/// with the integer factors carried exactly before conversion to double.
double antinormal_moment(unsigned m, std::complex<double> alpha);

/// <alpha| e^{-gamma n-hat} |alpha> = exp(|alpha|^2 (e^-gamma - 1)).
double expect_exp_coherent_closed(double gamma, std::complex<double> alpha);

/// Truncated anti-normal series for the coherent-state average,
///   e^gamma sum_{m=0..M} (1 - e^gamma)^m L_m(-|alpha|^2).
/// Divergence (term growth over the final ten summands) is reported,
/// never thrown; it occurs once |1 - e^gamma| >= 1.
SeriesResult expect_exp_coherent_series(double gamma, std::complex<double> alpha,
                                        unsigned max_m);

/// <n| e^{-gamma n-hat} |n> = e^{-gamma n}.
double expect_exp_fock_closed(double gamma, unsigned n);

/// Truncated anti-normal series for the number-state average,
///   e^gamma sum_{m=0..M} (1 - e^gamma)^m (m+n)! / (n! m!).
SeriesResult expect_exp_fock_series(double gamma, unsigned n, unsigned max_m);

/// Partial sum sum_{k=n..n+K} x^{k-n} k!/(n!(k-n)!), which converges to
/// (1-x)^{-n-1} for |x| < 1.
double negbinom_partial_sum(double x, unsigned n, unsigned K);

/// <psi| sum c_m (ordered monomial) |psi> by dense matrix-vector products.
///
/// Truncation guard: before evaluating, the contribution that the finite
/// dimension clips from each raising monomial is bounded (exactly for
/// diagonal monomials, by Cauchy-Schwarz otherwise, extended past D with the
/// analytic coherent amplitudes). If the accumulated bound exceeds 1e-10 the
/// result would be unreliable and TruncationError is thrown.
std::complex<double> matrix_expectation(const OperatorExpr& e, const StateVector& psi,
                                        const FockSpace& space);
std::complex<double> matrix_expectation(const OrderedExpansion<double>& e,
                                        const StateVector& psi, const FockSpace& space);
std::complex<double> matrix_expectation(const OrderedExpansion<Rational>& e,
                                        const StateVector& psi, const FockSpace& space);

}  // namespace ordcalc

#endif
