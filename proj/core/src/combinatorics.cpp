#include "ordcalc/combinatorics.hpp"

#include <algorithm>
#include <cassert>

namespace ordcalc {

const BigInt StirlingTable::zero_ = 0;

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

StirlingTable::StirlingTable(unsigned max_k) : max_k_(0) {
  rows_.push_back({BigInt(1)});  // S_0^{(0)} = 1
  grow(max_k);
}

void StirlingTable::grow(unsigned new_max_k) {
  for (unsigned k = max_k_ + 1; k <= new_max_k; ++k) {
    const auto& prev = rows_[k - 1];
    std::vector<BigInt> row(k + 1);
    row[0] = 0;  // S_k^{(0)} = 0 for k >= 1
    for (unsigned m = 1; m < k; ++m) row[m] = m * prev[m] + prev[m - 1];
    row[k] = 1;
    rows_.push_back(std::move(row));
  }
  max_k_ = std::max(max_k_, new_max_k);
}

const BigInt& StirlingTable::value(unsigned k, unsigned m) const {
  if (k > max_k_) {
    throw std::out_of_range("StirlingTable::value: k exceeds max_k");
  }
  if (m > k) return zero_;
  return rows_[k][m];
}

BigInt binomial(unsigned m, unsigned j) {
  if (j > m) return 0;
  j = std::min(j, m - j);
  BigInt r = 1;
  for (unsigned i = 1; i <= j; ++i) {
    r *= (m - j + i);
    r /= i;  // exact: r is C(m-j+i, i) after each step
  }
  return r;
}

BigInt stirling2(unsigned k, unsigned m) {
  if (m > k) return 0;
  BigInt sum = 0;
  for (unsigned j = 0; j <= m; ++j) {
    BigInt jk = (j == 0) ? BigInt(k == 0 ? 1 : 0) : boost::multiprecision::pow(BigInt(j), k);
    BigInt term = binomial(m, j) * jk;
    if ((m - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  BigInt mf = factorial(m);
  assert(sum % mf == 0);
  return sum / mf;
}

BigInt falling_factorial(long long x, unsigned m) {
  BigInt r = 1;
  for (unsigned i = 0; i < m; ++i) r *= BigInt(x) - i;
  return r;
}

template <typename Scalar>
Scalar forward_difference(const FunctionTable<Scalar>& f, unsigned m) {
  if (m > f.max_order()) {
    throw std::out_of_range("forward_difference: table holds " +
                            std::to_string(f.max_order() + 1) + " samples, need " +
                            std::to_string(m + 1));
  }
  Scalar acc{};
  for (unsigned k = 0; k <= m; ++k) {
    Scalar c = scalar_from_integer<Scalar>(binomial(m, k));
    if ((m - k) % 2 == 0) {
      acc += c * f[k];
    } else {
      acc -= c * f[k];
    }
  }
  return acc;
}

template Rational forward_difference(const FunctionTable<Rational>&, unsigned);
template double forward_difference(const FunctionTable<double>&, unsigned);

}  // namespace ordcalc
