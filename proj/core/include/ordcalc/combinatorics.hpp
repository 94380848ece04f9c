#ifndef ORDCALC_COMBINATORICS_HPP
#define ORDCALC_COMBINATORICS_HPP

#include <stdexcept>
#include <vector>

#include "ordcalc/numeric.hpp"

namespace ordcalc {

/// Memoized triangular table of Stirling numbers of the second kind,
/// S_k^{(m)} for 0 <= m <= k <= max_k, filled by the recurrence
/// S_k^{(m)} = m*S_{k-1}^{(m)} + S_{k-1}^{(m-1)} with S_0^{(0)} = 1.
///
/// Immutable once built as far as readers are concerned: grow() may only be
/// called while no other thread reads the table (grow-then-share).
class StirlingTable {
 public:
  explicit StirlingTable(unsigned max_k);

  unsigned max_k() const { return max_k_; }

  /// S_k^{(m)}; returns 0 when m > k. Requires k <= max_k().
  const BigInt& value(unsigned k, unsigned m) const;

  /// Extends the table to new_max_k. No-op if already large enough.
  void grow(unsigned new_max_k);

 private:
  unsigned max_k_;
  std::vector<std::vector<BigInt>> rows_;
  static const BigInt zero_;
};

/// S_k^{(m)} by the explicit alternating sum
///   S_k^{(m)} = (1/m!) * sum_{j=0..m} (-1)^(m-j) C(m,j) j^k,
/// an independent route from the StirlingTable recurrence. Returns 0 for m > k.
BigInt stirling2(unsigned k, unsigned m);

/// C(m, j); 0 when j > m.
BigInt binomial(unsigned m, unsigned j);

/// x(x-1)...(x-m+1); 1 when m = 0. Accepts negative x.
BigInt falling_factorial(long long x, unsigned m);

/// Scalar function sampled at the nonnegative integers: [f(0), f(1), ..., f(M)].
/// The scalar kind is fixed per table (exact Rational or double); the two
/// kinds never mix within one computation.
template <typename Scalar>
class FunctionTable {
 public:
  explicit FunctionTable(std::vector<Scalar> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) {
      throw std::invalid_argument("FunctionTable requires at least one sample f(0)");
    }
  }

  unsigned max_order() const { return static_cast<unsigned>(samples_.size()) - 1; }
  const Scalar& operator[](unsigned x) const { return samples_[x]; }
  const std::vector<Scalar>& samples() const { return samples_; }

 private:
  std::vector<Scalar> samples_;
};

/// m-th forward difference at zero:
///   Delta^m f(0) = sum_{k=0..m} (-1)^(m-k) C(m,k) f(k).
/// Throws std::out_of_range when the table holds fewer than m+1 samples.
template <typename Scalar>
Scalar forward_difference(const FunctionTable<Scalar>& f, unsigned m);

extern template Rational forward_difference(const FunctionTable<Rational>&, unsigned);
extern template double forward_difference(const FunctionTable<double>&, unsigned);

}  // namespace ordcalc

#endif
