#include "ordcalc/fock.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace ordcalc {

namespace {

constexpr double kTruncationGuardTol = 1e-10;
constexpr unsigned kDivergenceWindow = 10;
constexpr double kOverflowGuard = 1e250;

}  // namespace

FockSpace::FockSpace(unsigned dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("FockSpace: dimension must be positive");
  annihilation_ = Eigen::MatrixXcd::Zero(dim, dim);
  for (unsigned n = 1; n < dim; ++n) {
    annihilation_(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  creation_ = annihilation_.adjoint();
}

StateVector StateVector::fock(const FockSpace& space, unsigned n) {
  if (n >= space.dim()) {
    throw TruncationError("fock state |" + std::to_string(n) +
                          "> does not fit in dimension " + std::to_string(space.dim()));
  }
  StateVector s;
  s.kind = Kind::fock;
  s.fock_n = n;
  s.amplitudes = Eigen::VectorXcd::Zero(space.dim());
  s.amplitudes(n) = 1.0;
  return s;
}

StateVector StateVector::coherent(const FockSpace& space, std::complex<double> alpha) {
  StateVector s;
  s.kind = Kind::coherent;
  s.alpha = alpha;
  s.amplitudes = Eigen::VectorXcd::Zero(space.dim());
  std::complex<double> amp = std::exp(-0.5 * std::norm(alpha));
  for (unsigned n = 0; n < space.dim(); ++n) {
    s.amplitudes(n) = amp;
    amp *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return s;
}

double laguerre(unsigned m, double x) {
  double prev = 0.0;  // L_{-1}, unused at m = 0
  double cur = 1.0;   // L_0
  for (unsigned j = 0; j < m; ++j) {
    double next = ((2.0 * j + 1.0 - x) * cur - j * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double antinormal_moment(unsigned m, std::complex<double> alpha) {
  const double a2 = std::norm(alpha);
  long double acc = 0.0L;
  double a2k = 1.0;
  for (unsigned k = 0; k <= m; ++k) {
    // (m!/((m-k)! k!))^2 (m-k)! = C(m,k)^2 (m-k)!, exact before conversion.
    BigInt coeff = binomial(m, k);
    coeff *= coeff;
    coeff *= factorial(m - k);
    acc += static_cast<long double>(to_double(coeff)) * a2k;
    a2k *= a2;
  }
  return static_cast<double>(acc);
}

double expect_exp_coherent_closed(double gamma, std::complex<double> alpha) {
  return std::exp(std::norm(alpha) * std::expm1(-gamma));
}

double expect_exp_fock_closed(double gamma, unsigned n) {
  return std::exp(-gamma * static_cast<double>(n));
}

namespace {

// Shared summation loop with the trend-based convergence report: the series
// is flagged diverged when the summand magnitude at the end exceeds the
// magnitude kDivergenceWindow summands earlier.
class SeriesAccumulator {
 public:
  // Returns false once accumulation should stop (overflow guard).
  bool feed(double term) {
    sum_ += term;
    history_.push_back(std::abs(term));
    ++terms_;
    return std::abs(term) <= kOverflowGuard;
  }

  SeriesResult finish(double scale) const {
    SeriesResult r;
    r.value = scale * sum_;
    r.terms_used = terms_;
    r.last_term = history_.empty() ? 0.0 : scale * history_.back();
    if (history_.size() >= 2) {
      std::size_t window = std::min<std::size_t>(kDivergenceWindow, history_.size() - 1);
      double earlier = history_[history_.size() - 1 - window];
      double last = history_.back();
      r.converged = !(last > earlier && last > 0.0);
    }
    return r;
  }

 private:
  double sum_ = 0.0;
  unsigned terms_ = 0;
  std::vector<double> history_;
};

}  // namespace

SeriesResult expect_exp_coherent_series(double gamma, std::complex<double> alpha,
                                        unsigned max_m) {
  const double tau = -std::expm1(gamma);  // 1 - e^gamma
  const double x = -std::norm(alpha);
  SeriesAccumulator acc;
  double lag_prev = 0.0;
  double lag_cur = 1.0;  // L_0(x)
  double tau_pow = 1.0;
  for (unsigned m = 0; m <= max_m; ++m) {
    if (!acc.feed(tau_pow * lag_cur)) break;
    double lag_next = ((2.0 * m + 1.0 - x) * lag_cur - m * lag_prev) / (m + 1.0);
    lag_prev = lag_cur;
    lag_cur = lag_next;
    tau_pow *= tau;
  }
  return acc.finish(std::exp(gamma));
}

SeriesResult expect_exp_fock_series(double gamma, unsigned n, unsigned max_m) {
  const double tau = -std::expm1(gamma);
  SeriesAccumulator acc;
  double term = 1.0;  // tau^m (m+n)!/(n! m!) at m = 0
  for (unsigned m = 0; m <= max_m; ++m) {
    if (!acc.feed(term)) break;
    term *= tau * static_cast<double>(m + n + 1) / static_cast<double>(m + 1);
  }
  return acc.finish(std::exp(gamma));
}

double negbinom_partial_sum(double x, unsigned n, unsigned K) {
  double sum = 0.0;
  double term = 1.0;  // x^j C(n+j, n) at j = 0
  for (unsigned j = 0; j <= K; ++j) {
    sum += term;
    term *= x * static_cast<double>(n + j + 1) / static_cast<double>(j + 1);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Matrix expectation with truncation guard
// ---------------------------------------------------------------------------

namespace {

struct WeightedMonomial {
  unsigned creation = 0;
  unsigned annihilation = 0;
  std::complex<double> coefficient;
};

// log |amp_n|^2 of the ideal (untruncated) state, -inf where zero.
double log_amp_sq(const StateVector& psi, unsigned n) {
  if (psi.kind == StateVector::Kind::fock) {
    return n == psi.fock_n ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  const double a2 = std::norm(psi.alpha);
  if (a2 == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return -a2 + n * std::log(a2) - std::lgamma(n + 1.0);
}

// sum_{n >= start} |amp_n|^2 (n+r)!/n! over the ideal state, evaluated in
// log space. The summand decays superexponentially once n passes |alpha|^2,
// so a short extension beyond the truncation dimension suffices.
double raised_loss(const StateVector& psi, unsigned start, unsigned r, unsigned dim) {
  double total = 0.0;
  unsigned stop = dim + r + 64;
  for (unsigned n = start; n <= stop; ++n) {
    double lg = log_amp_sq(psi, n);
    if (lg == -std::numeric_limits<double>::infinity()) continue;
    double item = lg + std::lgamma(n + r + 1.0) - std::lgamma(n + 1.0);
    total += std::exp(item);
  }
  return total;
}

// Bound on what the truncation clips from one monomial's expectation value.
// Raising by r reaches past the top of the space from index D-r upward; for
// the ideal state the analytic tail beyond D is included as well. Diagonal
// monomials lose exactly the raised diagonal sum; off-diagonal ones are
// bounded via Cauchy-Schwarz across bra and ket losses.
double truncation_loss(const WeightedMonomial& mono, Ordering tag,
                       const StateVector& psi, const FockSpace& space) {
  const unsigned dim = space.dim();
  auto loss = [&](unsigned raise) {
    unsigned start = raise > dim ? 0 : dim - raise;
    return raised_loss(psi, start, raise, dim);
  };
  if (tag == Ordering::antinormal) {
    // a^q (a-dagger)^p sandwiched: the ket is raised by p, the bra by q.
    if (mono.creation == mono.annihilation) {
      return std::abs(mono.coefficient) * loss(mono.creation);
    }
    double lk = mono.creation > 0 ? loss(mono.creation) : 0.0;
    double lb = mono.annihilation > 0 ? loss(mono.annihilation) : 0.0;
    if (lk == 0.0 && lb == 0.0) return 0.0;
    double fk = raised_loss(psi, 0, mono.creation, dim);
    double fb = raised_loss(psi, 0, mono.annihilation, dim);
    return std::abs(mono.coefficient) * (std::sqrt(lk * fb) + std::sqrt(lb * fk));
  }
  // Normal monomials only lower within the space; the only unrepresented
  // contribution is the ideal state's own tail beyond the dimension.
  double tail = raised_loss(psi, dim, std::max(mono.creation, mono.annihilation), dim);
  return std::abs(mono.coefficient) * tail;
}

std::complex<double> expectation_impl(const std::vector<WeightedMonomial>& monomials,
                                      Ordering tag, const StateVector& psi,
                                      const FockSpace& space) {
  if (psi.amplitudes.size() != static_cast<Eigen::Index>(space.dim())) {
    throw std::invalid_argument("matrix_expectation: state dimension mismatch");
  }
  double guard = 0.0;
  for (const auto& mono : monomials) guard += truncation_loss(mono, tag, psi, space);
  if (guard > kTruncationGuardTol) {
    throw TruncationError(
        "matrix_expectation: truncation dimension " + std::to_string(space.dim()) +
        " clips an estimated " + std::to_string(guard) +
        " from the expectation value; enlarge the space or lower the order");
  }

  std::complex<double> total = 0.0;
  for (const auto& mono : monomials) {
    Eigen::VectorXcd ket = psi.amplitudes;
    Eigen::VectorXcd bra = psi.amplitudes;
    if (tag == Ordering::normal) {
      // <psi| (a-dagger)^p a^q |psi> = <a^p psi | a^q psi>
      for (unsigned i = 0; i < mono.creation; ++i) bra = space.annihilation() * bra;
      for (unsigned i = 0; i < mono.annihilation; ++i) ket = space.annihilation() * ket;
    } else {
      // <psi| a^q (a-dagger)^p |psi> = <(a-dagger)^q psi | (a-dagger)^p psi>
      for (unsigned i = 0; i < mono.annihilation; ++i) bra = space.creation() * bra;
      for (unsigned i = 0; i < mono.creation; ++i) ket = space.creation() * ket;
    }
    total += mono.coefficient * bra.dot(ket);
  }
  return total;
}

}  // namespace

std::complex<double> matrix_expectation(const OperatorExpr& e, const StateVector& psi,
                                        const FockSpace& space) {
  std::vector<WeightedMonomial> monomials;
  monomials.reserve(e.terms.size());
  for (const auto& [key, c] : e.terms) {
    monomials.push_back({key.creation, key.annihilation, to_double(c)});
  }
  return expectation_impl(monomials, e.tag, psi, space);
}

std::complex<double> matrix_expectation(const OrderedExpansion<double>& e,
                                        const StateVector& psi, const FockSpace& space) {
  std::vector<WeightedMonomial> monomials;
  monomials.reserve(e.coefficients.size());
  for (const auto& [m, c] : e.coefficients) monomials.push_back({m, m, c});
  return expectation_impl(monomials, e.tag, psi, space);
}

std::complex<double> matrix_expectation(const OrderedExpansion<Rational>& e,
                                        const StateVector& psi, const FockSpace& space) {
  std::vector<WeightedMonomial> monomials;
  monomials.reserve(e.coefficients.size());
  for (const auto& [m, c] : e.coefficients) monomials.push_back({m, m, to_double(c)});
  return expectation_impl(monomials, e.tag, psi, space);
}

}  // namespace ordcalc
