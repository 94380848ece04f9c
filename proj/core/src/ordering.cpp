#include "ordcalc/ordering.hpp"

#include <cmath>
#include <stdexcept>

namespace ordcalc {

OrderedExpansion<Rational> normal_power(unsigned k) {
  StirlingTable table(k);
  OrderedExpansion<Rational> e;
  e.tag = Ordering::normal;
  e.source = {ExpansionSource::Kind::power, k, 0.0, k};
  for (unsigned m = 0; m <= k; ++m) {
    const BigInt& s = table.value(k, m);
    if (s != 0) e.coefficients.emplace(m, Rational(s));
  }
  return e;
}

OrderedExpansion<Rational> antinormal_power(unsigned k) {
  StirlingTable table(k + 1);
  OrderedExpansion<Rational> e;
  e.tag = Ordering::antinormal;
  e.source = {ExpansionSource::Kind::power, k, 0.0, k};
  for (unsigned m = 0; m <= k; ++m) {
    BigInt s = table.value(k + 1, m + 1);
    if ((k + m) % 2 != 0) s = -s;
    if (s != 0) e.coefficients.emplace(m, Rational(s));
  }
  return e;
}

template <typename Scalar>
OrderedExpansion<Scalar> normal_function(const FunctionTable<Scalar>& f, unsigned M) {
  if (f.max_order() < M) {
    throw std::out_of_range("normal_function: table holds " +
                            std::to_string(f.max_order() + 1) + " samples, need " +
                            std::to_string(M + 1));
  }
  OrderedExpansion<Scalar> e;
  e.tag = Ordering::normal;
  e.source = {ExpansionSource::Kind::function, 0, 0.0, M};
  for (unsigned m = 0; m <= M; ++m) {
    Scalar c = forward_difference(f, m) / scalar_from_integer<Scalar>(factorial(m));
    e.coefficients.emplace(m, std::move(c));
  }
  return e;
}

template <typename Scalar>
OrderedExpansion<Scalar> antinormal_function(const FunctionTable<Scalar>& g, unsigned M) {
  if (g.max_order() < M + 1) {
    throw std::out_of_range("antinormal_function: table holds " +
                            std::to_string(g.max_order() + 1) + " samples, need " +
                            std::to_string(M + 2));
  }
  OrderedExpansion<Scalar> e;
  e.tag = Ordering::antinormal;
  e.source = {ExpansionSource::Kind::function, 0, 0.0, M};
  for (unsigned m = 0; m <= M; ++m) {
    Scalar c = (forward_difference(g, m) + forward_difference(g, m + 1)) /
               scalar_from_integer<Scalar>(factorial(m));
    if (m % 2 != 0) c = -c;
    e.coefficients.emplace(m, std::move(c));
  }
  return e;
}

OrderedExpansion<double> lemma1_coefficients(double gamma, unsigned M) {
  OrderedExpansion<double> e;
  e.tag = Ordering::normal;
  e.source = {ExpansionSource::Kind::lemma1, 0, gamma, M};
  const double x = std::expm1(-gamma);  // e^-gamma - 1
  double c = 1.0;                       // x^m / m!, built incrementally
  for (unsigned m = 0; m <= M; ++m) {
    e.coefficients.emplace(m, c);
    c *= x / (m + 1);
  }
  return e;
}

OrderedExpansion<double> lemma2_coefficients(double gamma, unsigned M) {
  OrderedExpansion<double> e;
  e.tag = Ordering::antinormal;
  e.source = {ExpansionSource::Kind::lemma2, 0, gamma, M};
  const double x = -std::expm1(gamma);  // 1 - e^gamma
  double c = std::exp(gamma);
  for (unsigned m = 0; m <= M; ++m) {
    e.coefficients.emplace(m, c);
    c *= x / (m + 1);
  }
  return e;
}

template <typename Scalar>
Scalar taylor_difference_check(const std::vector<Scalar>& taylor, unsigned m, unsigned K) {
  if (K < m) {
    throw std::invalid_argument("taylor_difference_check: K must be at least m");
  }
  if (taylor.size() <= K) {
    throw std::out_of_range("taylor_difference_check: need K+1 Taylor coefficients");
  }
  StirlingTable table(K);
  Scalar acc{};
  for (unsigned k = m; k <= K; ++k) {
    acc += taylor[k] * scalar_from_integer<Scalar>(table.value(k, m));
  }
  return acc;
}

template OrderedExpansion<Rational> normal_function(const FunctionTable<Rational>&, unsigned);
template OrderedExpansion<double> normal_function(const FunctionTable<double>&, unsigned);
template OrderedExpansion<Rational> antinormal_function(const FunctionTable<Rational>&, unsigned);
template OrderedExpansion<double> antinormal_function(const FunctionTable<double>&, unsigned);
template Rational taylor_difference_check(const std::vector<Rational>&, unsigned, unsigned);
template double taylor_difference_check(const std::vector<double>&, unsigned, unsigned);

}  // namespace ordcalc
