#ifndef ORDCALC_OPALGEBRA_HPP
#define ORDCALC_OPALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordcalc/errors.hpp"
#include "ordcalc/numeric.hpp"

namespace ordcalc {

/// Which side the creation operators end up on in a canonical form.
enum class Ordering { normal, antinormal };

/// A coefficient-weighted word over the alphabet {a, a-dagger}, the
/// intermediate form consumed by the rewrite engine. Letters are stored as a
/// byte string: 'a' for the annihilator, 'd' for the creator. The empty word
/// is the identity operator.
struct RawWord {
  std::string letters;
  Rational coefficient = 1;

  bool operator==(const RawWord&) const = default;
};

/// Key of a canonical monomial; which product it denotes depends on the
/// expression's ordering tag:
///   normal:     (a-dagger)^creation * a^annihilation
///   antinormal: a^annihilation * (a-dagger)^creation
struct MonomialKey {
  unsigned creation = 0;
  unsigned annihilation = 0;

  auto operator<=>(const MonomialKey&) const = default;
};

/// Exact linear combination of canonical monomials, the rewrite engine's
/// output. Zero coefficients are never stored.
struct OperatorExpr {
  Ordering tag = Ordering::normal;
  std::map<MonomialKey, Rational> terms;

  /// Adds c to the coefficient of key, pruning the entry if it cancels.
  void add(MonomialKey key, const Rational& c);

  /// Coefficient of key, zero if absent.
  Rational coefficient(MonomialKey key) const;

  bool operator==(const OperatorExpr&) const = default;
};

/// Parses an operator expression into an expanded sum of weighted words.
///
/// Grammar (whitespace insignificant):
///   expr    := ('+' | '-')? term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := base ('^' INT)?
///   base    := 'a' | 'ad' | 'a†' | 'n' | NUMBER | '(' expr ')'
///   NUMBER  := INT ('/' INT)?
/// 'n' expands to the two-letter word a-dagger a; NUMBER is a nonnegative
/// rational literal. Throws ParseError with the byte offset on bad input.
std::vector<RawWord> parse(std::string_view source);

/// Canonicalizes words using only [a, a-dagger] = 1. The deterministic
/// strategy rewrites the leftmost inversion first; passing shuffle_seed
/// instead applies rules in a seeded random order (the canonical form must
/// not depend on the choice -- the rewrite system is confluent).
OperatorExpr rewrite_canonical(const std::vector<RawWord>& words, Ordering tag,
                               std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Normal order: every creator moved left of every annihilator via
/// a a-dagger -> a-dagger a + 1.
OperatorExpr rewrite_normal(const std::vector<RawWord>& words);

/// Anti-normal order: every annihilator moved left of every creator via
/// a-dagger a -> a a-dagger - 1.
OperatorExpr rewrite_antinormal(const std::vector<RawWord>& words);

/// Expands a canonical expression back into raw words (one per monomial).
std::vector<RawWord> to_raw_words(const OperatorExpr& e);

/// Deterministic textual form, monomials sorted by descending total degree
/// then descending creator power; "0" for the empty expression. The output
/// reparses: rewrite(parse(print_expr(e)), e.tag) == e.
std::string print_expr(const OperatorExpr& e);

}  // namespace ordcalc

#endif
