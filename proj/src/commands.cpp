#include "conway3/commands.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "conway3/associator.hpp"
#include "conway3/chi_symbol.hpp"
#include "conway3/chord3.hpp"
#include "conway3/nc_series.hpp"
#include "conway3/two_bridge.hpp"
#include "conway3/verify.hpp"

namespace conway3 {

using nlohmann::json;

void validate(const Config& cfg) {
  if (cfg.degree < 0) throw std::invalid_argument("--degree must be nonnegative");
  if (!(cfg.eps > 0)) throw std::invalid_argument("--eps must be positive");
  if (cfg.subword_cap < 0) throw std::invalid_argument("subword cap must be nonnegative");
  if (cfg.samples < 0) throw std::invalid_argument("--samples must be nonnegative");
}

int cmd_comb(const std::string& word, const Config& cfg, std::ostream& out) {
  const CombedForm cf = comb(parse_braid(word));
  if (cfg.json) {
    out << json(cf).dump() << '\n';
  } else if (cf.tail.is_identity() && cf.e12 == 0) {
    out << "identity\n";
  } else {
    out << to_string(cf) << '\n';
  }
  return kExitOk;
}

int cmd_magnus(const std::string& word, const Config& cfg, std::ostream& out) {
  const IntSeries mu = magnus3(comb(parse_braid(word)), cfg.degree);
  if (cfg.json)
    out << to_json(mu).dump() << '\n';
  else
    out << to_string(mu) << " + O(" << cfg.degree + 1 << ")\n";
  return kExitOk;
}

int cmd_reduce(const std::string& letters, std::ostream& out) {
  const IntDiagramPoly x = reduce(Word::from_string(letters));
  out << to_string(x) << '\n';
  return kExitOk;
}

int cmd_chi(const std::string& word, const Config& cfg, bool explicit_route, std::ostream& out) {
  const BraidWord w = parse_braid(word);
  if (explicit_route && cfg.degree > 24)
    throw std::invalid_argument("the explicit route expands mu3 in full; use --degree <= 24");
  const EvenPoly x = explicit_route ? chi_of_braid(w, cfg.degree) : chi_of_braid_fast(w, cfg.degree);
  if (cfg.json) {
    json j = to_json(x);
    j["stable_through"] = 2 * (cfg.degree / 2);
    out << j.dump() << '\n';
  } else {
    out << to_string(x) << "  (exact through t^" << 2 * (cfg.degree / 2) << ")\n";
  }
  return kExitOk;
}

int cmd_conway(const std::string& word, const Config& cfg, std::ostream& out) {
  const BraidWord w = parse_braid(word);
  const ClosureTrace t = trace_closure(w);
  if (cfg.json)
    out << to_json(t).dump() << '\n';
  else
    out << to_string(t.conway) << '\n';
  return kExitOk;
}

namespace {

Fraction parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Fraction::make(BigInt(text), 1);
    return Fraction::make(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw ParseError("malformed fraction '" + text + "'");
  }
}

}  // namespace

int cmd_conway_fraction(const std::string& fraction, const Config& cfg, std::ostream& out) {
  const Fraction f = parse_fraction(fraction);
  const EvenPoly c = conway_of_fraction(f);
  if (cfg.json)
    out << json{{"fraction", to_string(f)}, {"conway", to_json(c)}}.dump() << '\n';
  else
    out << to_string(c) << '\n';
  return kExitOk;
}

int cmd_closure(const std::string& word, const Config& cfg, std::ostream& out) {
  const AlternatingWord w = closure_word(comb(parse_braid(word)));
  if (cfg.json)
    out << json(w.exponents).dump() << '\n';
  else
    out << (w.exponents.empty() ? "() unknot" : to_string(w)) << '\n';
  return kExitOk;
}

int cmd_cf(const std::string& word, const Config& cfg, std::ostream& out) {
  const ContinuedFraction cf = word_to_cf(closure_word(comb(parse_braid(word))));
  if (cfg.json) {
    json terms = json::array();
    for (const auto& c : cf.terms) terms.push_back(c.str());
    out << terms.dump() << '\n';
  } else {
    out << to_string(cf) << '\n';
  }
  return kExitOk;
}

int cmd_fraction(const std::string& word, const Config& cfg, std::ostream& out) {
  const Fraction f = cf_to_fraction(word_to_cf(closure_word(comb(parse_braid(word)))));
  if (cfg.json)
    out << json{{"p", f.p.str()}, {"q", f.q.str()}}.dump() << '\n';
  else
    out << to_string(f) << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, const Config& cfg, std::ostream& out) {
  if (opts.max_len < 0 || opts.max_len > 7) throw std::invalid_argument("--max-len must be in 0..7");
  if (opts.random_len < 1 || opts.max_exp < 1)
    throw std::invalid_argument("random words need positive length and exponent bounds");
  if (opts.subword_len < 0 || opts.subword_len > cfg.subword_cap)
    throw std::invalid_argument("--subword-len exceeds the subword cap");
  ChiRules rules;
  rules.flip_primed_sign = opts.corrupt_chi;

  std::vector<VerifyReport> reports;
  const auto exhaustive = all_words(opts.max_len);
  reports.push_back(oracle_equivalence(exhaustive, rules));
  reports.back().name = "exhaustive words, length <= " + std::to_string(opts.max_len);
  reports.push_back(oracle_equivalence(
      random_words(cfg.samples, opts.random_len, opts.max_exp, cfg.seed), rules));
  reports.back().name = "random words, seed " + std::to_string(cfg.seed);
  reports.push_back(subword_identity(opts.subword_len, rules));
  reports.back().name = "subword identity, B/C words of length <= " + std::to_string(opts.subword_len);

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (cfg.json) {
    json j = json::array();
    for (const auto& r : reports) {
      json bad = json::array();
      for (const auto& m : r.mismatches)
        bad.push_back({{"input", m.input}, {"expected", m.expected}, {"actual", m.actual}});
      j.push_back({{"suite", r.name}, {"checked", r.checked}, {"mismatches", bad}});
    }
    out << json{{"ok", ok}, {"suites", j}}.dump() << '\n';
  } else {
    for (const auto& r : reports) out << summary(r) << '\n';
    if (ok) out << "all " << exhaustive.size() << " exhaustive words agree\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

namespace {

void require_precision(double eps) {
  if (eps < kZetaPrecisionFloor)
    throw PrecisionUnattainable("MZV values are accurate to about 1e-15 only");
}

}  // namespace

int cmd_associator(int degree, const Config& cfg, std::ostream& out) {
  require_precision(cfg.eps);
  const AssociatorSeries phi = associator(degree);
  if (cfg.json) {
    out << to_json(phi).dump() << '\n';
    return kExitOk;
  }
  out << std::setprecision(12);
  for (const auto& [w, c] : phi.coeffs)
    out << std::left << std::setw(degree + 2) << (w.empty() ? "1" : w) << std::right
        << std::setw(20) << static_cast<double>(c) << "   " << to_string(phi.symbolic.at(w))
        << '\n';
  return kExitOk;
}

int cmd_conjecture(int n, bool literal_scaling, const Config& cfg, std::ostream& out) {
  require_precision(cfg.eps);
  if (n < 1) throw std::invalid_argument("--n must be positive");
  if (2 * n > kMaxZetaWeight) throw std::invalid_argument("--n above 10 needs MZVs past weight 20");
  // The left side needs the associator through degree 2n, capped at 12.
  const int lhs_top = std::min(n, kMaxAssociatorDegree / 2);
  const ConjecturePolynomial lhs = chi_on_associator(
      2 * lhs_top, literal_scaling ? TwoPiScaling::literal : TwoPiScaling::matched);

  json rows = json::array();
  if (!cfg.json) out << "  n            chi(Phi)                 rhs          difference\n";
  for (int k = 1; k <= n; ++k) {
    const double rhs = conjecture_rhs(k);
    json row{{"n", k}, {"rhs", rhs}};
    if (k <= lhs_top) {
      row["lhs"] = lhs.coeffs[k - 1];
      row["difference"] = lhs.coeffs[k - 1] - rhs;
    }
    rows.push_back(row);
    if (cfg.json) continue;
    out << std::setw(3) << k << std::fixed << std::setprecision(12);
    if (k <= lhs_top)
      out << std::setw(20) << lhs.coeffs[k - 1] << std::setw(20) << rhs << std::scientific
          << std::setprecision(2) << std::setw(20) << lhs.coeffs[k - 1] - rhs;
    else
      out << std::setw(20) << "-" << std::setw(20) << rhs << std::setw(20) << "-";
    out << std::defaultfloat << '\n';
  }
  if (cfg.json) out << json{{"var", "T"}, {"rows", rows}}.dump() << '\n';
  return kExitOk;
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const PrecisionUnattainable& e) {
    err << "precision error: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const ImaginaryResidue& e) {
    err << "precision error: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotAKnot& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace conway3
