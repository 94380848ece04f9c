#include "ordcalc/opalgebra.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace ordcalc {

void OperatorExpr::add(MonomialKey key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Rational OperatorExpr::coefficient(MonomialKey key) const {
  auto it = terms.find(key);
  return it == terms.end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

using WordPoly = std::vector<RawWord>;

WordPoly poly_mul(const WordPoly& lhs, const WordPoly& rhs) {
  WordPoly out;
  out.reserve(lhs.size() * rhs.size());
  for (const auto& l : lhs) {
    for (const auto& r : rhs) {
      out.push_back({l.letters + r.letters, l.coefficient * r.coefficient});
    }
  }
  return out;
}

WordPoly poly_pow(const WordPoly& base, unsigned exponent) {
  WordPoly result{{std::string(), Rational(1)}};
  for (unsigned i = 0; i < exponent; ++i) result = poly_mul(result, base);
  return result;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  WordPoly run() {
    WordPoly poly = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("end of input or an operator");
    return poly;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  static constexpr std::string_view kDagger = "\xe2\x80\xa0";  // UTF-8 for the dagger sign

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < src_.size()
                            ? "'" + std::string(1, src_[pos_]) + "'"
                            : "end of input";
    throw ParseError(pos_, expected, found);
  }

  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                  src_[pos_] == '\n' || src_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  BigInt parse_int(const char* what) {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      fail(what);
    }
    BigInt v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  WordPoly parse_expr() {
    bool negate = false;
    if (consume('-')) {
      negate = true;
    } else {
      consume('+');
    }
    WordPoly acc = parse_term();
    if (negate) {
      for (auto& w : acc) w.coefficient = -w.coefficient;
    }
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      WordPoly next = parse_term();
      for (auto& w : next) {
        if (c == '-') w.coefficient = -w.coefficient;
        acc.push_back(std::move(w));
      }
    }
    return acc;
  }

  WordPoly parse_term() {
    WordPoly acc = parse_factor();
    while (consume('*')) acc = poly_mul(acc, parse_factor());
    return acc;
  }

  WordPoly parse_factor() {
    WordPoly base = parse_base();
    if (consume('^')) {
      std::size_t at = pos_;
      BigInt e = parse_int("a nonnegative integer exponent");
      if (e > 100000) {
        throw ParseError(at, "an exponent no larger than 100000", e.str());
      }
      return poly_pow(base, e.convert_to<unsigned>());
    }
    return base;
  }

  WordPoly parse_base() {
    skip_ws();
    if (pos_ >= src_.size()) fail("'a', 'ad', 'n', a number, or '('");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      WordPoly inner = parse_expr();
      if (!consume(')')) fail("')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = parse_int("a number");
      Rational value(num);
      if (consume('/')) {
        std::size_t at = pos_;
        BigInt den = parse_int("a denominator integer");
        if (den == 0) throw ParseError(at, "a nonzero denominator", "0");
        value /= Rational(den);
      }
      return {{std::string(), value}};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string_view word = src_.substr(start, pos_ - start);
      if (word == "a") {
        // 'a' immediately followed by the dagger sign is the creator.
        if (src_.substr(pos_, kDagger.size()) == kDagger) {
          pos_ += kDagger.size();
          return {{"d", Rational(1)}};
        }
        return {{"a", Rational(1)}};
      }
      if (word == "ad") return {{"d", Rational(1)}};
      if (word == "n") return {{"da", Rational(1)}};
      pos_ = start;
      fail("'a', 'ad', 'n', a number, or '('");
    }
    fail("'a', 'ad', 'n', a number, or '('");
  }
};

}  // namespace

std::vector<RawWord> parse(std::string_view source) { return Parser(source).run(); }

// ---------------------------------------------------------------------------
// Rewrite engine
// ---------------------------------------------------------------------------

namespace {

// An inversion is an adjacent pair in the wrong order for the target form:
// "ad" when normal-ordering (annihilator left of creator), "da" when
// anti-normal-ordering.
std::size_t find_inversion(const std::string& w, Ordering tag,
                           std::mt19937_64* rng) {
  const char first = tag == Ordering::normal ? 'a' : 'd';
  const char second = tag == Ordering::normal ? 'd' : 'a';
  if (rng == nullptr) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == first && w[i + 1] == second) return i;
    }
    return std::string::npos;
  }
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == first && w[i + 1] == second) positions.push_back(i);
  }
  if (positions.empty()) return std::string::npos;
  return positions[(*rng)() % positions.size()];
}

void accumulate(std::map<std::string, Rational>& into, std::string key, Rational c) {
  if (c == 0) return;
  auto it = into.find(key);
  if (it == into.end()) {
    into.emplace(std::move(key), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

}  // namespace

OperatorExpr rewrite_canonical(const std::vector<RawWord>& words, Ordering tag,
                               std::optional<std::uint64_t> shuffle_seed) {
  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);

  // Merging words with equal letter sequences keeps the worklist polynomial
  // in the input length; without it the commutator expansion branches
  // exponentially.
  std::map<std::string, Rational> work;
  for (const auto& w : words) accumulate(work, w.letters, w.coefficient);

  std::map<std::string, Rational> done;
  while (!work.empty()) {
    auto it = work.begin();
    if (rng) std::advance(it, (*rng)() % work.size());
    std::string w = it->first;
    Rational c = std::move(it->second);
    work.erase(it);

    std::size_t pos = find_inversion(w, tag, rng ? &*rng : nullptr);
    if (pos == std::string::npos) {
      accumulate(done, std::move(w), std::move(c));
      continue;
    }
    std::string swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    std::string contracted = w.substr(0, pos) + w.substr(pos + 2);
    accumulate(work, std::move(swapped), c);
    // a a-dagger = a-dagger a + 1 contributes +c; a-dagger a = a a-dagger - 1
    // contributes -c.
    accumulate(work, std::move(contracted), tag == Ordering::normal ? c : -c);
  }

  OperatorExpr out;
  out.tag = tag;
  for (auto& [w, c] : done) {
    MonomialKey key;
    key.creation = static_cast<unsigned>(std::count(w.begin(), w.end(), 'd'));
    key.annihilation = static_cast<unsigned>(w.size()) - key.creation;
    out.add(key, c);
  }
  return out;
}

OperatorExpr rewrite_normal(const std::vector<RawWord>& words) {
  return rewrite_canonical(words, Ordering::normal);
}

OperatorExpr rewrite_antinormal(const std::vector<RawWord>& words) {
  return rewrite_canonical(words, Ordering::antinormal);
}

std::vector<RawWord> to_raw_words(const OperatorExpr& e) {
  std::vector<RawWord> out;
  out.reserve(e.terms.size());
  for (const auto& [key, c] : e.terms) {
    std::string letters;
    if (e.tag == Ordering::normal) {
      letters = std::string(key.creation, 'd') + std::string(key.annihilation, 'a');
    } else {
      letters = std::string(key.annihilation, 'a') + std::string(key.creation, 'd');
    }
    out.push_back({std::move(letters), c});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string monomial_str(MonomialKey key, Ordering tag) {
  auto power = [](const char* sym, unsigned p) {
    std::string s = sym;
    if (p > 1) s += "^" + std::to_string(p);
    return s;
  };
  std::string creators = key.creation ? power("ad", key.creation) : "";
  std::string annihilators = key.annihilation ? power("a", key.annihilation) : "";
  const std::string& left = tag == Ordering::normal ? creators : annihilators;
  const std::string& right = tag == Ordering::normal ? annihilators : creators;
  if (left.empty()) return right;
  if (right.empty()) return left;
  return left + "*" + right;
}

}  // namespace

std::string print_expr(const OperatorExpr& e) {
  if (e.terms.empty()) return "0";

  std::vector<std::pair<MonomialKey, Rational>> sorted(e.terms.begin(), e.terms.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& lhs, const auto& rhs) {
    unsigned ld = lhs.first.creation + lhs.first.annihilation;
    unsigned rd = rhs.first.creation + rhs.first.annihilation;
    if (ld != rd) return ld > rd;
    return lhs.first.creation > rhs.first.creation;
  });

  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : sorted) {
    bool negative = coeff < 0;
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = monomial_str(key, e.tag);
    if (mono.empty()) {
      out += rational_str(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += rational_str(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace ordcalc
