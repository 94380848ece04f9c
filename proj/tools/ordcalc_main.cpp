// ordcalc: normal/anti-normal ordering calculator for the oscillator number
// operator. Subcommands: stirling, expand, rewrite, expect, verify.
//
// Exit codes: 0 success, 1 identity/oracle failure, 2 usage error,
// 3 truncation violation.

#include <algorithm>
#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordcalc/combinatorics.hpp"
#include "ordcalc/fock.hpp"
#include "ordcalc/opalgebra.hpp"
#include "ordcalc/ordering.hpp"
#include "ordcalc/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncation = 3;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string rational_str(const ordcalc::Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string alpha_str(std::complex<double> a) {
  std::string s = fmt_double(a.real());
  s += (a.imag() < 0 ? "-" : "+");
  s += fmt_double(std::abs(a.imag()));
  s += "i";
  return s;
}

ordcalc::Ordering parse_order(const std::string& order) {
  return order == "normal" ? ordcalc::Ordering::normal : ordcalc::Ordering::antinormal;
}

// Coefficients listed by descending m, matching the written form of the
// expansions.
template <typename Scalar>
std::vector<std::pair<unsigned, Scalar>> sorted_coefficients(
    const std::map<unsigned, Scalar>& coeffs) {
  std::vector<std::pair<unsigned, Scalar>> out(coeffs.begin(), coeffs.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

json coefficients_json(const ordcalc::OrderedExpansion<ordcalc::Rational>& e) {
  json arr = json::array();
  for (const auto& [m, c] : sorted_coefficients(e.coefficients)) {
    arr.push_back({{"m", m}, {"value", rational_str(c)}});
  }
  return arr;
}

json coefficients_json(const ordcalc::OrderedExpansion<double>& e) {
  json arr = json::array();
  for (const auto& [m, c] : sorted_coefficients(e.coefficients)) {
    arr.push_back({{"m", m}, {"value", c}});
  }
  return arr;
}

void emit(const json& record, const std::string& format, const std::string& text,
          const std::string& csv) {
  if (format == "json") {
    std::cout << record.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << csv;
  } else {
    std::cout << text;
  }
}

// --- stirling ---------------------------------------------------------------

int run_stirling(unsigned max_k, const std::string& format) {
  ordcalc::StirlingTable table(max_k);

  json rows = json::array();
  std::string text;
  std::string csv = "k,m,value\n";
  for (unsigned k = 0; k <= max_k; ++k) {
    json row = json::array();
    text += "k=" + std::to_string(k) + ":";
    for (unsigned m = 0; m <= k; ++m) {
      std::string v = table.value(k, m).str();
      row.push_back(v);
      text += " " + v;
      csv += std::to_string(k) + "," + std::to_string(m) + "," + v + "\n";
    }
    text += "\n";
    rows.push_back(row);
  }

  json record = {{"command", "stirling"},
                 {"parameters", {{"max_k", max_k}}},
                 {"exact", true},
                 {"result", {{"rows", rows}}}};
  emit(record, format, text, csv);
  return kExitOk;
}

// --- expand -----------------------------------------------------------------

int run_expand_power(unsigned k, const std::string& order, const std::string& format) {
  using ordcalc::Ordering;
  const Ordering tag = parse_order(order);
  auto expansion = tag == Ordering::normal ? ordcalc::normal_power(k)
                                           : ordcalc::antinormal_power(k);

  // Cross-check against the commutator rewrite engine.
  auto words = ordcalc::parse("n^" + std::to_string(k));
  auto oracle = ordcalc::rewrite_canonical(words, tag);

  bool agrees = oracle.terms.size() == expansion.coefficients.size();
  for (const auto& [key, c] : oracle.terms) {
    agrees = agrees && key.creation == key.annihilation &&
             expansion.coefficient(key.creation) == c;
  }

  json record = {{"command", "expand"},
                 {"parameters", {{"power", k}, {"order", order}}},
                 {"exact", true},
                 {"result", {{"coefficients", coefficients_json(expansion)}}},
                 {"oracle", {{"canonical", ordcalc::print_expr(oracle)}}},
                 {"agrees", agrees}};

  std::string text = order + " ordering of n^" + std::to_string(k) + "\nm coefficient\n";
  std::string csv = "m,coefficient\n";
  for (const auto& [m, c] : sorted_coefficients(expansion.coefficients)) {
    text += std::to_string(m) + " " + rational_str(c) + "\n";
    csv += std::to_string(m) + "," + rational_str(c) + "\n";
  }
  text += "oracle: " + ordcalc::print_expr(oracle) + "\n";
  text += std::string("agrees: ") + (agrees ? "true" : "false") + "\n";

  emit(record, format, text, csv);
  if (!agrees) {
    std::cerr << "error: closed-form expansion disagrees with the rewrite oracle\n";
    return kExitIdentityFailure;
  }
  return kExitOk;
}

int run_expand_exp(double gamma, unsigned max_m, const std::string& order,
                   const std::string& format) {
  auto expansion = order == "normal" ? ordcalc::lemma1_coefficients(gamma, max_m)
                                     : ordcalc::lemma2_coefficients(gamma, max_m);

  json record = {{"command", "expand"},
                 {"parameters", {{"exp", gamma}, {"order", order}, {"max_m", max_m}}},
                 {"exact", false},
                 {"result", {{"coefficients", coefficients_json(expansion)}}}};

  std::string text = order + " ordering of exp(-gamma n), gamma = " + fmt_double(gamma) +
                     "\nm coefficient\n";
  std::string csv = "m,coefficient\n";
  for (const auto& [m, c] : sorted_coefficients(expansion.coefficients)) {
    text += std::to_string(m) + " " + fmt_double(c) + "\n";
    csv += std::to_string(m) + "," + fmt_double(c) + "\n";
  }
  emit(record, format, text, csv);
  return kExitOk;
}

// --- rewrite ----------------------------------------------------------------

int run_rewrite(const std::string& expr, const std::string& order,
                const std::string& format) {
  auto words = ordcalc::parse(expr);
  auto canonical = ordcalc::rewrite_canonical(words, parse_order(order));
  std::string printed = ordcalc::print_expr(canonical);

  json terms = json::array();
  std::string csv = "creation,annihilation,coefficient\n";
  for (const auto& [key, c] : canonical.terms) {
    terms.push_back({{"creation", key.creation},
                     {"annihilation", key.annihilation},
                     {"value", rational_str(c)}});
    csv += std::to_string(key.creation) + "," + std::to_string(key.annihilation) + "," +
           rational_str(c) + "\n";
  }

  json record = {{"command", "rewrite"},
                 {"parameters", {{"expr", expr}, {"order", order}}},
                 {"exact", true},
                 {"result", {{"canonical", printed}, {"terms", terms}}}};
  emit(record, format, printed + "\n", csv);
  return kExitOk;
}

// --- expect -----------------------------------------------------------------

struct ExpectOutcome {
  double value = 0.0;
  bool has_report = false;
  ordcalc::SeriesResult report;
};

int run_expect(const std::string& state, double alpha_re, double alpha_im, unsigned n,
               double gamma, const std::string& method, unsigned dim, unsigned max_m,
               const std::string& format) {
  const bool coherent = state == "coherent";
  const std::complex<double> alpha{alpha_re, alpha_im};

  ExpectOutcome out;
  if (method == "closed") {
    out.value = coherent ? ordcalc::expect_exp_coherent_closed(gamma, alpha)
                         : ordcalc::expect_exp_fock_closed(gamma, n);
  } else if (method == "series") {
    out.report = coherent ? ordcalc::expect_exp_coherent_series(gamma, alpha, max_m)
                          : ordcalc::expect_exp_fock_series(gamma, n, max_m);
    out.value = out.report.value;
    out.has_report = true;
  } else {  // matrix: sandwich the anti-normal exponential expansion
    ordcalc::FockSpace space(dim);
    ordcalc::StateVector psi = coherent ? ordcalc::StateVector::coherent(space, alpha)
                                        : ordcalc::StateVector::fock(space, n);
    auto expansion = ordcalc::lemma2_coefficients(gamma, max_m);
    out.value = ordcalc::matrix_expectation(expansion, psi, space).real();
    // Report convergence of the same term sequence the sandwich sums.
    out.report = coherent ? ordcalc::expect_exp_coherent_series(gamma, alpha, max_m)
                          : ordcalc::expect_exp_fock_series(gamma, n, max_m);
    out.report.value = out.value;
    out.has_report = true;
  }

  json params = {{"state", state}, {"gamma", gamma}, {"method", method}};
  if (coherent) {
    params["alpha_re"] = alpha_re;
    params["alpha_im"] = alpha_im;
  } else {
    params["n"] = n;
  }
  if (method == "matrix") params["dim"] = dim;
  if (method != "closed") params["max_m"] = max_m;

  json record = {{"command", "expect"},
                 {"parameters", params},
                 {"exact", false},
                 {"result", {{"value", out.value}}}};
  std::string text;
  text += "state: " + (coherent ? "coherent alpha = " + alpha_str(alpha)
                                : "fock n = " + std::to_string(n)) + "\n";
  text += "gamma: " + fmt_double(gamma) + "\n";
  text += "method: " + method + "\n";
  text += "value: " + fmt_double(out.value) + "\n";
  if (out.has_report) {
    record["result"]["diverged"] = !out.report.converged;
    record["convergence"] = {{"converged", out.report.converged},
                             {"last_term", out.report.last_term},
                             {"terms_used", out.report.terms_used}};
    text += std::string("converged: ") + (out.report.converged ? "true" : "false") + "\n";
    text += "last_term: " + fmt_double(out.report.last_term) + "\n";
    text += "terms_used: " + std::to_string(out.report.terms_used) + "\n";
  }

  std::string csv =
      "state,alpha_re,alpha_im,n,gamma,method,dim,max_m,value,converged\n" + state + ",";
  csv += coherent ? fmt_double(alpha_re) + "," + fmt_double(alpha_im) + "," : ",,";
  csv += coherent ? "" : std::to_string(n);
  csv += "," + fmt_double(gamma) + "," + method + ",";
  csv += method == "matrix" ? std::to_string(dim) : "";
  csv += ",";
  csv += method != "closed" ? std::to_string(max_m) : "";
  csv += "," + fmt_double(out.value) + ",";
  csv += out.has_report ? (out.report.converged ? "true" : "false") : "";
  csv += "\n";

  emit(record, format, text, csv);
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

int run_verify(const std::string& suite, const std::string& format) {
  auto checks = ordcalc::verify_suite(suite);
  bool all_pass = true;

  json arr = json::array();
  std::string text;
  std::string csv = "identity,pass,max_error,tolerance\n";
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    arr.push_back({{"identity", c.name},
                   {"pass", c.pass},
                   {"max_error", c.max_error},
                   {"tolerance", c.tolerance}});
    text += std::string(c.pass ? "PASS" : "FAIL") + " " + c.name +
            " (max error " + fmt_double(c.max_error) + ", tolerance " +
            fmt_double(c.tolerance) + ")\n";
    csv += "\"" + c.name + "\"," + (c.pass ? "true" : "false") + "," +
           fmt_double(c.max_error) + "," + fmt_double(c.tolerance) + "\n";
  }
  text += std::string(all_pass ? "PASS" : "FAIL") + " suite " + suite + "\n";

  json record = {{"command", "verify"},
                 {"parameters", {{"suite", suite}}},
                 {"result", {{"checks", arr}, {"all_pass", all_pass}}}};
  emit(record, format, text, csv);
  return all_pass ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact normal/anti-normal ordering of number-operator expressions"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  // stirling
  auto* stirling_cmd = app.add_subcommand("stirling", "Print the Stirling triangle S_k^(m)");
  stirling_cmd->fallthrough();
  unsigned max_k = 0;
  stirling_cmd->add_option("--max-k", max_k, "Largest row")->required();

  // expand
  auto* expand_cmd =
      app.add_subcommand("expand", "Ordered expansion of n^k or exp(-gamma n)");
  expand_cmd->fallthrough();
  unsigned power = 0;
  double exp_gamma = 0.0;
  unsigned expand_max_m = 0;
  std::string expand_order;
  auto* power_opt = expand_cmd->add_option("--power", power, "Expand n^k");
  auto* exp_opt = expand_cmd->add_option("--exp", exp_gamma, "Expand exp(-gamma n)");
  auto* max_m_opt =
      expand_cmd->add_option("--max-m", expand_max_m, "Truncation order for --exp");
  expand_cmd->add_option("--order", expand_order, "normal or antinormal")
      ->check(CLI::IsMember({"normal", "antinormal"}))
      ->required();
  power_opt->excludes(exp_opt);
  max_m_opt->excludes(power_opt);
  max_m_opt->needs(exp_opt);

  // rewrite
  auto* rewrite_cmd = app.add_subcommand("rewrite", "Canonicalize an operator expression");
  rewrite_cmd->fallthrough();
  std::string rewrite_expr;
  std::string rewrite_order;
  rewrite_cmd->add_option("--expr", rewrite_expr, "Expression over a, ad, n")->required();
  rewrite_cmd->add_option("--order", rewrite_order, "normal or antinormal")
      ->check(CLI::IsMember({"normal", "antinormal"}))
      ->required();

  // expect
  auto* expect_cmd =
      app.add_subcommand("expect", "Expectation value of exp(-gamma n) in a state");
  expect_cmd->fallthrough();
  std::string state;
  std::string method;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  unsigned fock_n = 0;
  double gamma = 0.0;
  unsigned dim = 64;
  unsigned expect_max_m = 0;
  expect_cmd->add_option("--state", state, "coherent or fock")
      ->check(CLI::IsMember({"coherent", "fock"}))
      ->required();
  auto* are_opt = expect_cmd->add_option("--alpha-re", alpha_re, "Re(alpha)");
  auto* aim_opt = expect_cmd->add_option("--alpha-im", alpha_im, "Im(alpha)");
  auto* n_opt = expect_cmd->add_option("--n", fock_n, "Fock occupation number");
  expect_cmd->add_option("--gamma", gamma, "Decay parameter")->required();
  expect_cmd->add_option("--method", method, "closed, series, or matrix")
      ->check(CLI::IsMember({"closed", "series", "matrix"}))
      ->required();
  expect_cmd->add_option("--dim", dim, "Truncation dimension (matrix method)")
      ->capture_default_str();
  auto* emm_opt = expect_cmd->add_option("--max-m", expect_max_m,
                                         "Truncation order (series and matrix methods)");
  n_opt->excludes(are_opt);
  n_opt->excludes(aim_opt);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suites");
  verify_cmd->fallthrough();
  std::string suite;
  verify_cmd->add_option("--suite", suite, "stirling, lemmas, fock, or all")
      ->check(CLI::IsMember({"stirling", "lemmas", "fock", "all"}))
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(stirling_cmd)) {
      return run_stirling(max_k, format);
    }
    if (app.got_subcommand(expand_cmd)) {
      if (static_cast<bool>(*power_opt) == static_cast<bool>(*exp_opt)) {
        std::cerr << "error: expand requires exactly one of --power or --exp\n";
        return kExitUsage;
      }
      if (*exp_opt && !*max_m_opt) {
        std::cerr << "error: --exp requires an explicit --max-m truncation order\n";
        return kExitUsage;
      }
      return *power_opt ? run_expand_power(power, expand_order, format)
                        : run_expand_exp(exp_gamma, expand_max_m, expand_order, format);
    }
    if (app.got_subcommand(rewrite_cmd)) {
      return run_rewrite(rewrite_expr, rewrite_order, format);
    }
    if (app.got_subcommand(expect_cmd)) {
      const bool coherent = state == "coherent";
      if (coherent && (!*are_opt || *n_opt)) {
        std::cerr << "error: --state coherent requires --alpha-re (and no --n)\n";
        return kExitUsage;
      }
      if (!coherent && !*n_opt) {
        std::cerr << "error: --state fock requires --n\n";
        return kExitUsage;
      }
      if ((method == "series" || method == "matrix") && !*emm_opt) {
        std::cerr << "error: --method " << method << " requires --max-m\n";
        return kExitUsage;
      }
      return run_expect(state, alpha_re, alpha_im, fock_n, gamma, method, dim,
                        expect_max_m, format);
    }
    if (app.got_subcommand(verify_cmd)) {
      return run_verify(suite, format);
    }
  } catch (const ordcalc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ordcalc::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
