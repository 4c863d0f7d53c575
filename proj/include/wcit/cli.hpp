#pragma once

// Command layer behind the `wcit` executable: variety documents in, report
// documents out. Kept in the library so that tests drive the same code paths.

#include <chrono>
#include <functional>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <openssl/evp.h>

#include "error.hpp"
#include "fano.hpp"
#include "field.hpp"
#include "jacobi.hpp"
#include "torelli.hpp"
#include "wci.hpp"

namespace wcit::cli {

using json = nlohmann::ordered_json;

/// Malformed input document. Line and column are 1-based; 0 when unknown.
class SpecError : public Error {
public:
  SpecError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                   : what),
        line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_, column_;
};

struct FieldChoice {
  std::optional<std::uint64_t> prime; // empty: rationals

  static FieldChoice parse(const std::string& s) {
    if (s == "q" || s == "Q") return {};
    if (s.rfind("fp:", 0) == 0) {
      const std::string digits = s.substr(3);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 12)
        throw SpecError("field: malformed prime in '" + s + "'");
      return {std::stoull(digits)};
    }
    throw SpecError("field: expected 'q' or 'fp:PRIME', got '" + s + "'");
  }
  std::string name() const { return prime ? "fp:" + std::to_string(*prime) : "q"; }
};

struct Equation {
  int degree = 0;
  std::string poly;
};

struct VarietySpec {
  std::vector<int> weights;
  std::vector<std::string> variables;
  std::vector<Equation> equations;
  std::optional<FieldChoice> field;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline long as_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start && s.size() < 12 && s.find_first_not_of("0123456789", start) == std::string::npos)
      return std::stol(s);
  }
  throw SpecError(where + ": expected an integer");
}

} // namespace detail

inline VarietySpec parse_variety_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte);
    throw SpecError("invalid JSON", line, col);
  }
  if (!doc.is_object()) throw SpecError("variety document must be a JSON object");
  VarietySpec spec;
  if (!doc.contains("weights") || !doc["weights"].is_array()) throw SpecError("missing array 'weights'");
  for (std::size_t i = 0; i < doc["weights"].size(); ++i)
    spec.weights.push_back(int(detail::as_integer(doc["weights"][i], "weights[" + std::to_string(i) + "]")));
  if (!doc.contains("variables") || !doc["variables"].is_array())
    throw SpecError("missing array 'variables'");
  for (const auto& v : doc["variables"]) {
    if (!v.is_string()) throw SpecError("variables: names must be strings");
    spec.variables.push_back(v.get<std::string>());
  }
  if (!doc.contains("equations") || !doc["equations"].is_array())
    throw SpecError("missing array 'equations'");
  for (std::size_t i = 0; i < doc["equations"].size(); ++i) {
    const auto& e = doc["equations"][i];
    const std::string where = "equations[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("degree") || !e.contains("poly") || !e["poly"].is_string())
      throw SpecError(where + ": expected {\"degree\": d, \"poly\": \"...\"}");
    spec.equations.push_back({int(detail::as_integer(e["degree"], where + ".degree")), e["poly"].get<std::string>()});
  }
  if (doc.contains("field")) {
    const auto& f = doc["field"];
    if (f.is_string()) {
      spec.field = FieldChoice::parse(f.get<std::string>());
    } else if (f.is_object() && f.contains("kind")) {
      std::string kind = f["kind"].is_string() ? f["kind"].get<std::string>() : "";
      if (kind == "q") spec.field = FieldChoice{};
      else if (kind == "fp" && f.contains("prime"))
        spec.field = FieldChoice{std::uint64_t(detail::as_integer(f["prime"], "field.prime"))};
      else throw SpecError("field: expected {\"kind\": \"q\"} or {\"kind\": \"fp\", \"prime\": p}");
    } else {
      throw SpecError("field: expected a string or an object");
    }
  }
  if (spec.weights.size() != spec.variables.size())
    throw SpecError("weights and variables differ in length");
  return spec;
}

/// Builds X from the document, reporting polynomial syntax errors with the
/// equation index and column.
template <class F>
WeightedCI<F> variety_from_spec(const VarietySpec& spec, const F& field) {
  RingPtr<F> ring;
  try {
    ring = make_ring(field, VariableTable(spec.variables));
  } catch (const DomainError& e) {
    throw SpecError(e.what());
  }
  std::vector<Polynomial<F>> polys;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < spec.equations.size(); ++i) {
    try {
      polys.push_back(parse_polynomial(spec.equations[i].poly, ring));
    } catch (const ParseError& e) {
      throw SpecError("equations[" + std::to_string(i) + "].poly: " + e.what(), 1, e.column());
    }
    degrees.push_back(spec.equations[i].degree);
  }
  return validate(ring, WeightSystem(spec.weights), degrees, polys);
}

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return "sha256:" + os.str();
}

struct Options {
  std::string command;                 // check | hodge | torelli | fano
  std::string input;                   // variety document text (check/hodge/torelli)
  std::string f_text;                  // fano quartic
  std::optional<std::string> g_text;   // fano quadric, default x0^2+...+x4^2
  std::optional<std::string> field;    // overrides the document's field
  bool force = false;
  std::optional<long> degree_bound;
};

struct CommandResult {
  json document;
  int exit_code = 0;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1; // certification failed or precondition refused
inline constexpr int kExitBadInput = 2;

namespace detail {

inline std::string num(std::int64_t v) { return std::to_string(v); }
inline std::string num(std::size_t v) { return std::to_string(v); }

inline json bidegree(BiDegree b) { return json::array({num(b.d1), num(b.d2)}); }

template <class F>
json certification_json(const WeightedCI<F>& X, const CertificationReport& cert) {
  json r;
  r["n"] = num(X.n());
  r["c"] = num(X.c());
  r["dimension"] = num(X.dimension());
  r["nu"] = num(X.nu());
  r["complete_intersection"] = cert.is_complete_intersection;
  r["quasi_smooth"] = cert.is_quasi_smooth;
  r["details"] = cert.details;
  return r;
}

inline json hodge_json(const HodgeTable& t) {
  json r;
  r["dimension"] = num(t.dimension);
  r["nu"] = num(t.nu);
  json entries = json::array();
  for (const auto& e : t.entries) {
    if (!e.value) continue;
    json je;
    je["p"] = num(e.p);
    je["q"] = num(e.q);
    je["h"] = num(*e.value);
    je["source"] = e.provenance;
    entries.push_back(je);
  }
  r["entries"] = entries;
  // grid[q][p], "-" where not computed
  json grid = json::array();
  for (long q = 0; q <= t.dimension; ++q) {
    json row = json::array();
    for (long p = 0; p <= t.dimension; ++p) {
      auto v = t.h(p, q);
      row.push_back(v ? num(*v) : "-");
    }
    grid.push_back(row);
  }
  r["grid"] = grid;
  return r;
}

template <class F>
json torelli_json(const TorelliReport<F>& rep) {
  json r;
  r["dimension"] = num(rep.dimension);
  r["nu"] = num(rep.nu);
  r["h1_theta"] = num(rep.dim_H1_Theta);
  json comps = json::array();
  for (const auto& c : rep.components) {
    json jc;
    jc["p"] = num(c.p);
    jc["source"] = bidegree(c.source);
    jc["target"] = bidegree(c.target);
    jc["source_dim"] = num(c.source_dim);
    jc["target_dim"] = num(c.target_dim);
    jc["vacuous"] = c.vacuous;
    jc["rank"] = num(c.rank);
    comps.push_back(jc);
  }
  r["components"] = comps;
  r["stacked_rank"] = num(rep.stacked_rank);
  r["kernel_dim"] = num(rep.kernel_dim());
  json kb = json::array();
  for (const auto& k : rep.kernel_basis) kb.push_back(k.to_string());
  r["kernel_basis"] = kb;
  r["injective"] = rep.injective;
  r["vacuous"] = rep.vacuous;
  return r;
}

template <class F>
JacobiOptions jacobi_options(const WeightedCI<F>& X, const Options& opt, std::vector<std::string>& warnings) {
  JacobiOptions jo;
  if (opt.degree_bound) {
    jo.max_d2 = *opt.degree_bound;
    jo.max_d1 = std::max(1L, X.dimension() - 1);
    const long needed = std::max(0L, -X.nu());
    if (*opt.degree_bound < needed)
      warnings.push_back("degree bound " + std::to_string(*opt.degree_bound) +
                         " is below the needed second degree " + std::to_string(needed));
  }
  return jo;
}

template <class F>
CommandResult run_variety_command(const Options& opt, const VarietySpec& spec, const F& field, json& doc,
                                  std::vector<std::string>& warnings) {
  auto X = variety_from_spec(spec, field);
  auto cert = certify_quasi_smooth(X);
  for (const auto& w : cert.warnings) warnings.push_back(w);
  json results;
  results["certification"] = certification_json(X, cert);

  if (opt.command == "check") {
    doc["results"] = results;
    return {doc, cert.is_quasi_smooth ? kExitOk : kExitRejected};
  }

  if (!cert.is_quasi_smooth) {
    if (!opt.force) {
      doc["results"] = results;
      doc["error"] = "X is not certified quasi-smooth (" + cert.details + "); use --force to proceed";
      return {doc, kExitRejected};
    }
    warnings.push_back("proceeding without quasi-smoothness (--force)");
  }
  if (opt.command == "hodge" && X.dimension() < 2) {
    doc["results"] = results;
    doc["error"] = "Hodge table needs dim X >= 2, got " + std::to_string(X.dimension());
    return {doc, kExitRejected};
  }
  if (opt.command == "torelli" && X.dimension() <= 2) {
    doc["results"] = results;
    doc["error"] = "infinitesimal Torelli needs dim X = n - c > 2, got " + std::to_string(X.dimension());
    return {doc, kExitRejected};
  }

  auto R = build_jacobi(X, jacobi_options(X, opt, warnings));
  auto A = coordinate_ring(X);
  results["hodge"] = hodge_json(hodge_table(X, R, A));
  if (opt.command == "torelli") {
    auto rep = torelli_map(X, R);
    for (const auto& w : rep.warnings) warnings.push_back(w);
    results["torelli"] = torelli_json(rep);
  }
  doc["results"] = results;
  return {doc, kExitOk};
}

template <class F>
CommandResult run_fano_command(const Options& opt, const F& field, json& doc, std::vector<std::string>& warnings) {
  auto ring = fano_ring(field);
  Polynomial<F> f(ring);
  std::optional<Polynomial<F>> g;
  try {
    f = parse_polynomial(opt.f_text, ring);
    if (opt.g_text) g = parse_polynomial(*opt.g_text, ring);
  } catch (const ParseError& e) {
    throw SpecError(std::string("polynomial: ") + e.what(), 1, e.column());
  }
  HyperellipticFano<F> X = [&] {
    try {
      return build_fano(f, g);
    } catch (const DomainError& e) {
      throw; // reported as a rejection by the caller
    }
  }();
  for (const auto& w : X.certification.warnings) warnings.push_back(w);
  JacobiOptions jo;
  if (opt.degree_bound) {
    jo.max_d2 = *opt.degree_bound;
    jo.max_d1 = 2;
  }
  auto R = build_jacobi(X.variety, jo);
  json results;
  results["certification"] = certification_json(X.variety, X.certification);
  results["f"] = X.f.to_string();
  results["g"] = X.g.to_string();
  results["presentation_matches"] = displayed_presentation_check(X, R);

  json dims;
  for (BiDegree bd : {BiDegree{1, 0}, BiDegree{1, -1}, BiDegree{2, -1}})
    dims["R" + bd.to_string()] = num(R.component(bd).dim());
  results["components"] = dims;

  auto inv = involution_report(R);
  json ij = json::array();
  for (const auto& s : inv.components) {
    json js;
    js["bidegree"] = bidegree(s.degree);
    js["invariant"] = num(s.invariant);
    js["anti_invariant"] = num(s.anti_invariant);
    js["involution_squared_is_identity"] = s.squares_to_identity;
    json anti = json::array();
    for (const auto& a : s.anti_invariant_elements) anti.push_back(a.to_string());
    js["anti_invariant_basis"] = anti;
    ij.push_back(js);
  }
  results["involution"] = ij;

  auto it = invariant_torelli_check(X, R);
  json jt;
  jt["h1_theta"] = num(it.theta_dim);
  jt["kernel_dim"] = num(it.full_kernel_dim);
  json kb = json::array();
  for (const auto& k : it.kernel_basis) kb.push_back(k.to_string());
  jt["kernel_basis"] = kb;
  jt["invariant_dim"] = num(it.invariant_dim);
  jt["invariant_rank"] = num(it.invariant_rank);
  jt["invariant_injective"] = it.invariant_restriction_injective;
  jt["kernel_iota_stable"] = it.kernel_iota_stable;
  jt["kernel_anti_invariant"] = it.kernel_anti_invariant;
  jt["injective"] = it.full_kernel_dim == 0;
  results["torelli"] = jt;

  auto mc = b_ring_macaulay_check(X);
  json jm;
  jm["injective"] = mc.injective;
  jm["dim_B3"] = num(mc.dim_b3);
  jm["dim_B4"] = num(mc.dim_b4);
  jm["dim_B7"] = num(mc.dim_b7);
  jm["rank"] = num(mc.rank);
  results["macaulay"] = jm;

  doc["results"] = results;
  return {doc, kExitOk};
}

template <class F>
CommandResult dispatch(const Options& opt, const VarietySpec* spec, const F& field, json& doc,
                       std::vector<std::string>& warnings) {
  if (opt.command == "fano") return run_fano_command(opt, field, doc, warnings);
  return run_variety_command(opt, *spec, field, doc, warnings);
}

} // namespace detail

/// Runs one command. Never throws for bad input: errors become a document
/// with an "error" entry and a nonzero exit code.
inline CommandResult run_command(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  json doc;
  doc["command"] = opt.command;
  std::vector<std::string> warnings;
  CommandResult result;
  const bool is_fano = opt.command == "fano";
  doc["input_hash"] = sha256_hex(is_fano ? opt.f_text + (opt.g_text ? "\n" + *opt.g_text : "") : opt.input);
  try {
    if (opt.command != "check" && opt.command != "hodge" && opt.command != "torelli" && !is_fano)
      throw SpecError("unknown command '" + opt.command + "'");
    std::optional<VarietySpec> spec;
    if (!is_fano) spec = parse_variety_spec(opt.input);
    FieldChoice fc = opt.field ? FieldChoice::parse(*opt.field)
                               : (spec && spec->field ? *spec->field : FieldChoice{});
    if (fc.prime) {
      PrimeField field(*fc.prime);
      doc["field"] = field.name();
      if (*fc.prime < PrimeField::kRecommendedMin)
        warnings.push_back("prime below 2^20: modular ranks only bound rational ranks from below");
      result = detail::dispatch(opt, spec ? &*spec : nullptr, field, doc, warnings);
    } else {
      doc["field"] = "q";
      result = detail::dispatch(opt, spec ? &*spec : nullptr, RationalField{}, doc, warnings);
    }
  } catch (const SpecError& e) {
    doc["error"] = e.what();
    result = {doc, kExitBadInput};
  } catch (const ParseError& e) {
    doc["error"] = e.what();
    result = {doc, kExitBadInput};
  } catch (const DomainError& e) {
    doc["error"] = e.what();
    result = {doc, kExitRejected};
  }
  result.document["warnings"] = warnings;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  result.document["timings"] = json{{"total_ms", std::to_string(ms.count())}};
  return result;
}

/// The document without its timing fields, for comparisons.
inline json without_timings(json doc) {
  doc.erase("timings");
  return doc;
}

/// Human-readable rendering.
inline std::string render_text(const json& doc) {
  std::ostringstream os;
  os << "command: " << doc.value("command", "") << "   field: " << doc.value("field", "?") << '\n';
  if (doc.contains("error")) os << "error: " << doc["error"].get<std::string>() << '\n';
  std::function<void(const json&, int)> walk = [&](const json& j, int indent) {
    const std::string pad(std::size_t(indent) * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& v = it.value();
      if (it.key() == "grid") {
        os << pad << "hodge numbers h^{p,q} (rows q, columns p):\n";
        for (std::size_t q = v.size(); q-- > 0;) {
          os << pad << "  q=" << q << " ";
          for (const auto& x : v[q]) os << std::setw(6) << x.get<std::string>();
          os << '\n';
        }
      } else if (v.is_object()) {
        os << pad << it.key() << ":\n";
        walk(v, indent + 1);
      } else if (v.is_array() && !v.empty() && v[0].is_object()) {
        os << pad << it.key() << ":\n";
        for (const auto& e : v) {
          os << pad << "  -\n";
          walk(e, indent + 2);
        }
      } else {
        os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  };
  if (doc.contains("results")) walk(doc["results"], 0);
  for (const auto& w : doc.value("warnings", json::array())) os << "warning: " << w.get<std::string>() << '\n';
  return os.str();
}

} // namespace wcit::cli
