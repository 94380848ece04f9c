#include <doctest.h>

#include <cmath>
#include <complex>

#include "ordcalc/fock.hpp"
#include "oracles.hpp"

using namespace ordcalc;
using std::complex;

TEST_CASE("FockSpace matrices") {
  FockSpace space(16);
  CHECK(space.dim() == 16);
  for (unsigned n = 1; n < 16; ++n) {
    CHECK(space.annihilation()(n - 1, n).real() == doctest::Approx(std::sqrt(n)));
  }
  CHECK(space.annihilation().col(0).norm() == 0.0);

  // [a, a-dagger] = 1 everywhere except the top basis vector
  Eigen::MatrixXcd comm = space.annihilation() * space.creation() -
                          space.creation() * space.annihilation();
  CHECK((comm.topLeftCorner(15, 15) - Eigen::MatrixXcd::Identity(15, 15)).norm() <= 1e-12);
  CHECK(comm(15, 15).real() == doctest::Approx(-15.0));

  CHECK_THROWS_AS(FockSpace(0), std::invalid_argument);
}

TEST_CASE("StateVector construction") {
  FockSpace space(32);
  auto three = StateVector::fock(space, 3);
  CHECK(three.amplitudes(3) == complex<double>(1.0));
  CHECK(three.amplitudes.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(StateVector::fock(space, 32), TruncationError);

  auto alpha = StateVector::coherent(space, {1.0, 0.0});
  CHECK(std::abs(alpha.amplitudes.norm() - 1.0) <= 1e-12);
  for (unsigned n = 0; n < 6; ++n) {
    double expected = std::exp(-0.5) / std::sqrt(to_double(factorial(n)));
    CHECK(alpha.amplitudes(n).real() == doctest::Approx(expected).epsilon(1e-12));
  }

  auto vacuum = StateVector::coherent(space, {0.0, 0.0});
  CHECK(vacuum.amplitudes(0) == complex<double>(1.0));
}

TEST_CASE("laguerre recurrence") {
  CHECK(laguerre(0, 3.7) == 1.0);
  CHECK(laguerre(1, -1.0) == doctest::Approx(2.0));
  CHECK(laguerre(2, -1.0) == doctest::Approx(3.5));
  for (unsigned m = 0; m <= 20; ++m) {
    for (double x : {-4.0, -1.0, 0.0, 0.5, 2.0}) {
      CHECK(laguerre(m, x) ==
            doctest::Approx(oracles::laguerre_sum(m, x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("antinormal_moment") {
  CHECK(antinormal_moment(0, {0.3, 0.4}) == 1.0);
  CHECK(antinormal_moment(1, {1.0, 0.0}) == doctest::Approx(2.0));
  CHECK(antinormal_moment(2, {1.0, 0.0}) == doctest::Approx(7.0));  // 2 + 4 + 1

  // moment identity: <a^m ad^m> = m! L_m(-|alpha|^2)
  for (unsigned m = 0; m <= 20; ++m) {
    for (complex<double> alpha : {complex<double>{0.5, 0.0}, {1.0, 1.0}, {0.0, 2.0}}) {
      double moment = antinormal_moment(m, alpha);
      double viaL = to_double(factorial(m)) * laguerre(m, -std::norm(alpha));
      CHECK(std::abs(moment - viaL) / moment <= 1e-9);
    }
  }
}

TEST_CASE("closed expectation forms") {
  CHECK(expect_exp_coherent_closed(0.7, {0.0, 0.0}) == 1.0);
  CHECK(expect_exp_coherent_closed(0.0, {1.3, -0.4}) == 1.0);
  CHECK(expect_exp_coherent_closed(0.1, {1.0, 0.0}) ==
        doctest::Approx(std::exp(std::expm1(-0.1))).epsilon(1e-15));

  CHECK(expect_exp_fock_closed(0.9, 0) == 1.0);
  CHECK(expect_exp_fock_closed(0.5, 2) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(expect_exp_fock_closed(0.0, 7) == 1.0);
}

TEST_CASE("coherent series vs closed form") {
  auto r = expect_exp_coherent_series(0.1, {1.0, 0.0}, 200);
  CHECK(r.converged);
  CHECK(std::abs(r.value - expect_exp_coherent_closed(0.1, {1.0, 0.0})) <= 1e-8);

  auto unit = expect_exp_coherent_series(0.0, {2.0, 1.0}, 50);
  CHECK(unit.value == 1.0);
  CHECK(unit.converged);

  auto div = expect_exp_coherent_series(1.0, {1.0, 0.0}, 200);
  CHECK_FALSE(div.converged);  // |1 - e| > 1
}

TEST_CASE("fock series vs closed form") {
  auto r = expect_exp_fock_series(0.1, 2, 500);
  CHECK(r.converged);
  CHECK(std::abs(r.value - std::exp(-0.2)) <= 1e-8);

  auto unit = expect_exp_fock_series(0.0, 5, 100);
  CHECK(unit.value == 1.0);

  auto div = expect_exp_fock_series(0.8, 1, 500);
  CHECK_FALSE(div.converged);  // |1 - e^0.8| = 1.2255
  CHECK(expect_exp_fock_closed(0.8, 1) == doctest::Approx(std::exp(-0.8)));
}

TEST_CASE("negative-binomial partial sums") {
  CHECK(negbinom_partial_sum(0.0, 5, 30) == 1.0);
  CHECK(std::abs(negbinom_partial_sum(0.5, 0, 60) - 2.0) <= 1e-12);
  CHECK(std::abs(negbinom_partial_sum(0.5, 2, 120) - 8.0) <= 1e-10);
}

TEST_CASE("matrix_expectation of ordered expansions") {
  FockSpace space(32);
  auto three = StateVector::fock(space, 3);
  CHECK(matrix_expectation(normal_power(2), three, space).real() ==
        doctest::Approx(9.0).epsilon(1e-12));
  CHECK(matrix_expectation(normal_power(3), three, space).real() ==
        doctest::Approx(27.0).epsilon(1e-12));

  FockSpace small(8);
  auto vacuum = StateVector::fock(small, 0);
  CHECK(std::abs(matrix_expectation(antinormal_power(1), vacuum, small)) <= 1e-14);

  FockSpace big(64);
  auto alpha = StateVector::coherent(big, {1.0, 0.0});
  double sandwiched = matrix_expectation(lemma2_coefficients(0.1, 60), alpha, big).real();
  CHECK(std::abs(sandwiched - expect_exp_coherent_closed(0.1, {1.0, 0.0})) <= 1e-8);
}

TEST_CASE("matrix_expectation guards against truncation corruption") {
  FockSpace space(16);
  auto high = StateVector::fock(space, 12);
  CHECK_THROWS_AS(matrix_expectation(antinormal_power(5), high, space), TruncationError);
  // normal monomials only lower; the same state is fine
  CHECK(matrix_expectation(normal_power(5), high, space).real() ==
        doctest::Approx(std::pow(12.0, 5)).epsilon(1e-12));
}

TEST_CASE("matrix_expectation of rewritten expressions") {
  FockSpace space(32);
  auto five = StateVector::fock(space, 5);
  auto n2 = rewrite_normal(parse("n^2"));
  CHECK(matrix_expectation(n2, five, space).real() == doctest::Approx(25.0));

  // off-diagonal words have vanishing fock-state averages
  auto offdiag = rewrite_normal(parse("a*n"));
  CHECK(std::abs(matrix_expectation(offdiag, five, space)) <= 1e-14);

  // mixed expression against the coherent moment
  auto mono = rewrite_antinormal(parse("a^2*ad^2"));
  auto alpha = StateVector::coherent(space, {0.7, 0.2});
  CHECK(matrix_expectation(mono, alpha, space).real() ==
        doctest::Approx(antinormal_moment(2, {0.7, 0.2})).epsilon(1e-12));
}

TEST_CASE("matrix moments match analytic moments at D = 128") {
  FockSpace space(128);
  for (complex<double> alpha : {complex<double>{0.5, 0.0}, {1.0, 1.0}, {2.0, 0.0}}) {
    auto psi = StateVector::coherent(space, alpha);
    for (unsigned m = 0; m <= 10; ++m) {
      OperatorExpr mono;
      mono.tag = Ordering::antinormal;
      mono.add({m, m}, 1);
      double viaMatrix = matrix_expectation(mono, psi, space).real();
      double analytic = antinormal_moment(m, alpha);
      CHECK(std::abs(viaMatrix - analytic) / analytic <= 1e-8);
    }
  }
}
