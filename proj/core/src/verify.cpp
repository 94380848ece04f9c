#include "ordcalc/verify.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ordcalc/combinatorics.hpp"
#include "ordcalc/fock.hpp"
#include "ordcalc/ordering.hpp"

namespace ordcalc {

namespace {

IdentityCheck exact_check(std::string name, bool pass) {
  return {std::move(name), pass, pass ? 0.0 : 1.0, 0.0};
}

IdentityCheck float_check(std::string name, double max_error, double tolerance) {
  return {std::move(name), max_error <= tolerance, max_error, tolerance};
}

std::vector<double> exp_samples(double gamma, unsigned count) {
  std::vector<double> s(count);
  for (unsigned k = 0; k < count; ++k) s[k] = std::exp(-gamma * k);
  return s;
}

std::vector<double> reflected_exp_samples(double gamma, unsigned count) {
  std::vector<double> s(count);
  for (unsigned u = 0; u < count; ++u) s[u] = std::exp(gamma * u);
  return s;
}

}  // namespace

std::vector<IdentityCheck> verify_stirling() {
  constexpr unsigned kMaxK = 12;
  StirlingTable table(kMaxK + 1);

  bool dual = true;
  for (unsigned k = 0; k <= kMaxK; ++k) {
    for (unsigned m = 0; m <= k; ++m) {
      dual = dual && stirling2(k, m) == table.value(k, m);
    }
  }

  bool shift = true;
  for (unsigned k = 0; k <= kMaxK; ++k) {
    for (unsigned m = 0; m <= k; ++m) {
      shift = shift && table.value(k + 1, m + 1) ==
                           (m + 1) * table.value(k, m + 1) + table.value(k, m);
    }
  }

  bool falling = true;
  for (long long x = 0; x <= 30; ++x) {
    for (unsigned k = 0; k <= kMaxK; ++k) {
      BigInt sum = 0;
      for (unsigned m = 0; m <= k; ++m) sum += table.value(k, m) * falling_factorial(x, m);
      falling = falling && sum == boost::multiprecision::pow(BigInt(x), k);
    }
  }

  return {
      exact_check("stirling explicit sum equals recurrence (k <= 12)", dual),
      exact_check("stirling shift identity (k <= 12)", shift),
      exact_check("x^k equals Stirling-weighted falling factorials (x <= 30)", falling),
  };
}

std::vector<IdentityCheck> verify_lemmas() {
  constexpr double kTol = 1e-12;
  constexpr unsigned kMaxM = 20;
  const double gammas[] = {0.1, 0.5, 1.0};

  double err1 = 0.0;
  double err2 = 0.0;
  for (double gamma : gammas) {
    FunctionTable<double> f(exp_samples(gamma, kMaxM + 2));
    auto generic1 = normal_function(f, kMaxM);
    auto closed1 = lemma1_coefficients(gamma, kMaxM);
    for (unsigned m = 0; m <= kMaxM; ++m) {
      err1 = std::max(err1, std::abs(generic1.coefficient(m) - closed1.coefficient(m)));
    }

    FunctionTable<double> g(reflected_exp_samples(gamma, kMaxM + 2));
    auto generic2 = antinormal_function(g, kMaxM);
    auto closed2 = lemma2_coefficients(gamma, kMaxM);
    for (unsigned m = 0; m <= kMaxM; ++m) {
      err2 = std::max(err2, std::abs(generic2.coefficient(m) - closed2.coefficient(m)));
    }
  }

  return {
      float_check("normal difference path matches (e^-g - 1)^m/m!", err1, kTol),
      float_check("anti-normal difference path matches e^g (1 - e^g)^m/m!", err2, kTol),
  };
}

std::vector<IdentityCheck> verify_fock() {
  std::vector<IdentityCheck> checks;
  const std::complex<double> alphas[] = {{0.5, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 2.0}};

  {
    double err = 0.0;
    for (auto alpha : alphas) {
      for (unsigned m = 0; m <= 20; ++m) {
        double moment = antinormal_moment(m, alpha);
        double viaL = to_double(factorial(m)) * laguerre(m, -std::norm(alpha));
        err = std::max(err, std::abs(moment - viaL) / std::abs(moment));
      }
    }
    checks.push_back(float_check("anti-normal moment equals m! L_m(-|a|^2), relative", err, 1e-9));
  }

  {
    FockSpace space(128);
    double err = 0.0;
    for (auto alpha : alphas) {
      StateVector psi = StateVector::coherent(space, alpha);
      for (unsigned m = 0; m <= 10; ++m) {
        OperatorExpr mono;
        mono.tag = Ordering::antinormal;
        mono.add({m, m}, 1);
        double viaMatrix = matrix_expectation(mono, psi, space).real();
        double analytic = antinormal_moment(m, alpha);
        err = std::max(err, std::abs(viaMatrix - analytic) / std::abs(analytic));
      }
    }
    checks.push_back(float_check("matrix moments match analytic moments (D=128), relative", err, 1e-8));
  }

  {
    const double gammas[] = {0.05, 0.1, 0.3, 0.5};
    double err = 0.0;
    for (double gamma : gammas) {
      for (auto alpha : alphas) {
        auto r = expect_exp_coherent_series(gamma, alpha, 400);
        err = std::max(err, std::abs(r.value - expect_exp_coherent_closed(gamma, alpha)));
      }
    }
    checks.push_back(float_check("coherent series matches exp(|a|^2 (e^-g - 1))", err, 1e-8));
  }

  {
    const double gammas[] = {0.05, 0.1, 0.3, 0.5};
    double err = 0.0;
    for (double gamma : gammas) {
      for (unsigned n = 0; n <= 10; ++n) {
        auto r = expect_exp_fock_series(gamma, n, 500);
        err = std::max(err, std::abs(r.value - expect_exp_fock_closed(gamma, n)));
      }
    }
    checks.push_back(float_check("fock series matches e^{-g n}", err, 1e-8));
  }

  {
    FockSpace space(64);
    Eigen::MatrixXcd comm = space.annihilation() * space.creation() -
                            space.creation() * space.annihilation();
    Eigen::MatrixXcd block = comm.topLeftCorner(63, 63) - Eigen::MatrixXcd::Identity(63, 63);
    checks.push_back(float_check("truncated commutator is the identity below the edge",
                                 block.norm(), 1e-12));
  }

  {
    const double xs[] = {-0.6, -0.3, 0.3, 0.5, 0.6};
    double err = 0.0;
    for (double x : xs) {
      for (unsigned n = 0; n <= 8; ++n) {
        // Stop once the geometric tail estimate is safely below tolerance.
        unsigned K = 16;
        for (; K < 2000; ++K) {
          double ratio = std::abs(x) * (n + K + 2.0) / (K + 2.0);
          if (ratio >= 1.0) continue;
          double term = std::pow(std::abs(x), K + 1) *
                        to_double(binomial(n + K + 1, n));
          if (term / (1.0 - ratio) < 5e-11) break;
        }
        double sum = negbinom_partial_sum(x, n, K);
        err = std::max(err, std::abs(sum - std::pow(1.0 - x, -static_cast<double>(n) - 1.0)));
      }
    }
    checks.push_back(float_check("negative-binomial partial sums reach (1-x)^{-n-1}", err, 1e-10));
  }

  return checks;
}

std::vector<IdentityCheck> verify_suite(std::string_view suite) {
  if (suite == "stirling") return verify_stirling();
  if (suite == "lemmas") return verify_lemmas();
  if (suite == "fock") return verify_fock();
  if (suite == "all") {
    std::vector<IdentityCheck> all = verify_stirling();
    auto lemmas = verify_lemmas();
    auto fock = verify_fock();
    all.insert(all.end(), lemmas.begin(), lemmas.end());
    all.insert(all.end(), fock.begin(), fock.end());
    return all;
  }
  throw std::invalid_argument("unknown verify suite: " + std::string(suite));
}

}  // namespace ordcalc
