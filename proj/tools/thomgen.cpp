// thomgen: command-line front end for the catalog, expansions, Thom and Schur
// computations, associativity tooling, equivalence checks and verification suites.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <thomgen/thomgen.hpp>

#include "suites.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace thomgen;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool verbose() {
  const char* v = std::getenv("THOMGEN_VERBOSE");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void log(const std::string& msg) {
  if (verbose()) std::cerr << "thomgen: " << msg << '\n';
}

struct Output {
  bool structured = false;
  bool timing = false;
  std::string command;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  /// Prints one document. For text output, `text` is printed as is.
  void emit(const std::string& basis, std::optional<int> ell, json result, const std::string& text) const {
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (structured) {
      json doc;
      doc["command"] = command;
      doc["basis"] = basis.empty() ? json(nullptr) : json(basis);
      doc["ell"] = ell ? json(*ell) : json(nullptr);
      doc["result"] = std::move(result);
      if (timing) doc["seconds"] = seconds;
      std::cout << doc.dump(2) << '\n';
      return;
    }
    std::cout << text;
    if (timing) std::cout << "time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
  }
};

// ---- generating function sources ----

struct Source {
  std::string name;
  std::vector<int> params;
  std::size_t variant = 0;
  std::string dimvec;
  std::string factor;
  std::string scale;
};

std::string describe(const CatalogVariant& v) {
  std::string s;
  if (v.scalar != 1) s += to_string(v.scalar) + " * ";
  if (v.factor != "1") s += "(" + v.factor + ") * ";
  return s + "K(" + v.dimvec.str() + ")";
}

struct Resolved {
  RationalGF gf;
  std::string label;
};

Resolved resolve(const Source& src, bool tilde) {
  const bool by_name = !src.name.empty();
  const bool by_dimvec = !src.dimvec.empty();
  if (by_name == by_dimvec) throw UsageError("give exactly one of --name and --dimvec");
  if (by_name && (!src.factor.empty() || !src.scale.empty()))
    throw UsageError("--factor and --scale apply to --dimvec only");
  CatalogVariant v;
  std::string label;
  if (by_name) {
    const auto e = get_entry(src.name, src.params);
    if (src.variant >= e.variants.size())
      throw UsageError(e.name + " has " + std::to_string(e.variants.size()) + " variant(s); --variant " +
                       std::to_string(src.variant) + " is out of range");
    v = e.variants[src.variant];
    label = e.name + "#" + std::to_string(src.variant) + ": ";
  } else {
    v.dimvec = parse_dimvec(src.dimvec);
    if (!src.factor.empty()) v.factor = src.factor;
    if (!src.scale.empty()) v.scalar = parse_scalar(src.scale);
    if (v.scalar == 0) throw UsageError("--scale must be nonzero");
  }
  v.factors();  // validates the factor against mu
  return {tilde ? v.ktilde_form() : v.k_form(), label + (tilde ? "tilde " : "") + describe(v)};
}

void add_source_options(CLI::App* cmd, Source& src) {
  cmd->add_option("--name", src.name, "Catalog entry (e.g. I22, Phi, Sigma)");
  cmd->add_option("--params", src.params, "Family parameters (e.g. --params 3 1)")->delimiter(',');
  cmd->add_option("--variant", src.variant, "Variant index of the catalog entry (default 0)");
  cmd->add_option("--dimvec", src.dimvec, "Dimension vector, e.g. 2,1");
  cmd->add_option("--factor", src.factor, "Extra numerator factor in t1..t_mu");
  cmd->add_option("--scale", src.scale, "Rational scalar p or p/q");
}

// "NAME", "NAME(p1,p2)", "NAME#v", "NAME(p1,p2)#v" or "dimvec=2,1;scale=1/2;factor=t3-t1".
Source parse_spec(const std::string& spec) {
  Source s;
  if (spec.rfind("dimvec=", 0) == 0) {
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw UsageError("bad spec component '" + part + "'");
      std::string key = part.substr(0, eq), value = part.substr(eq + 1);
      if (key == "dimvec")
        s.dimvec = value;
      else if (key == "scale")
        s.scale = value;
      else if (key == "factor")
        s.factor = value;
      else
        throw UsageError("unknown spec key '" + key + "'");
    }
    return s;
  }
  std::string rest = spec;
  if (auto hash = rest.find('#'); hash != std::string::npos) {
    try {
      s.variant = std::stoul(rest.substr(hash + 1));
    } catch (const std::exception&) {
      throw UsageError("bad variant index in '" + spec + "'");
    }
    rest = rest.substr(0, hash);
  }
  if (auto open = rest.find('('); open != std::string::npos) {
    if (rest.back() != ')') throw UsageError("expected ')' in '" + spec + "'");
    std::stringstream ss(rest.substr(open + 1, rest.size() - open - 2));
    std::string p;
    while (std::getline(ss, p, ',')) {
      try {
        s.params.push_back(std::stoi(p));
      } catch (const std::exception&) {
        throw UsageError("bad parameter '" + p + "' in '" + spec + "'");
      }
    }
    rest = rest.substr(0, open);
  }
  if (rest.empty()) throw UsageError("empty spec");
  s.name = rest;
  return s;
}

// ---- JSON helpers ----

json chern_json(const ChernPolynomial& tp) {
  json terms = json::array();
  for (const auto& [m, c] : tp.terms()) terms.push_back({{"monomial", m}, {"coefficient", to_string(c)}});
  return terms;
}

json schur_json(const SchurExpansion& se) {
  json terms = json::array();
  for (const auto& [p, c] : se.terms()) terms.push_back({{"partition", p}, {"coefficient", to_string(c)}});
  return terms;
}

json laurent_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e.entries()}, {"coefficient", to_string(c)}});
  return terms;
}

json linforms_json(const std::vector<LinForm>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.str());
  return out;
}

// ---- commands ----

int cmd_catalog(const Output& out, const std::string& action, const std::vector<std::string>& args) {
  if (action == "list") {
    if (!args.empty()) throw UsageError("catalog list takes no arguments");
    json rows = json::array();
    std::ostringstream text;
    text << std::left << std::setw(10) << "name" << std::setw(8) << "params" << std::setw(16) << "mu"
         << std::setw(18) << "d" << "variants\n";
    for (const auto& l : list_entries()) {
      rows.push_back({{"name", l.name}, {"params", l.params}, {"mu", l.mu}, {"d", l.d}, {"variants", l.variants}});
      text << std::setw(10) << l.name << std::setw(8) << l.params << std::setw(16) << l.mu << std::setw(18) << l.d
           << l.variants << '\n';
    }
    out.emit("", std::nullopt, rows, text.str());
    return 0;
  }
  if (action == "export") {
    if (!args.empty()) throw UsageError("catalog export takes no arguments");
    export_catalog(std::cout);
    return 0;
  }
  if (action == "show") {
    if (args.empty()) throw UsageError("catalog show needs an entry name");
    std::vector<int> params;
    for (std::size_t i = 1; i < args.size(); ++i) {
      try {
        std::size_t used = 0;
        params.push_back(std::stoi(args[i], &used));
        if (used != args[i].size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw UsageError("bad parameter '" + args[i] + "'");
      }
    }
    const auto e = get_entry(args[0], params);
    json variants = json::array();
    std::ostringstream text;
    text << e.name;
    if (!e.params.empty()) {
      text << '(';
      for (std::size_t i = 0; i < e.params.size(); ++i) text << (i ? "," : "") << e.params[i];
      text << ')';
    }
    text << "  mu=" << e.mu << "  d=" << e.d << "  variants=" << e.variants.size() << '\n';
    for (std::size_t i = 0; i < e.variants.size(); ++i) {
      const auto& v = e.variants[i];
      auto rec = export_record(e, v);
      rec["c_recorded"] = v.c_recorded;
      variants.push_back(rec);
      text << "  #" << i << "  " << describe(v) << "  c=" << v.c << (v.c_recorded ? "" : " (computed)") << '\n';
    }
    if (!e.notes.empty()) text << "  note: " << e.notes << '\n';
    json result = {{"name", e.name}, {"params", e.params}, {"mu", e.mu}, {"d", e.d}, {"variants", variants},
                   {"notes", e.notes}};
    out.emit("", std::nullopt, result, text.str());
    return 0;
  }
  throw UsageError("unknown catalog action '" + action + "' (list, export, show)");
}

int cmd_thom(const Output& out, const Source& src, int ell, const std::string& basis) {
  if (basis != "chern" && basis != "schur") throw UsageError("--basis must be chern or schur");
  const bool schur = basis == "schur";
  const auto r = resolve(src, schur);
  log("computing " + basis + " expansion of " + r.label + " at ell = " + std::to_string(ell));
  json result;
  result["source"] = r.label;
  std::ostringstream text;
  if (schur) {
    const auto se = schur_expansion(r.gf, ell);
    result["mu"] = se.mu();
    result["codim"] = se.codim();
    result["terms"] = schur_json(se);
    result["rendered"] = render(se);
    result["rendered_symbolic"] = render(se, RenderStyle::symbolic_ell);
    text << r.label << "\nell=" << ell << "  codim=" << se.codim() << "  basis=schur  terms=" << se.size() << '\n'
         << render(se) << '\n'
         << "symbolic: " << render(se, RenderStyle::symbolic_ell) << '\n';
  } else {
    const auto tp = thom_polynomial(r.gf, ell);
    result["mu"] = tp.mu();
    result["codim"] = tp.codim();
    result["terms"] = chern_json(tp);
    result["rendered"] = render(tp);
    result["rendered_symbolic"] = render(tp, RenderStyle::symbolic_ell);
    text << r.label << "\nell=" << ell << "  codim=" << tp.codim() << "  basis=chern  terms=" << tp.size() << '\n'
         << render(tp) << '\n'
         << "symbolic: " << render(tp, RenderStyle::symbolic_ell) << '\n';
  }
  out.emit(basis, ell, result, text.str());
  return 0;
}

int cmd_expand(const Output& out, const Source& src, int ell, bool tilde) {
  const auto r = resolve(src, tilde);
  check_ell(r.gf.nvars(), ell);
  const long d = r.gf.homogeneous_degree();
  // K~ expansions feed Schur conversion, which needs the wider box.
  const auto box = tilde ? ExpansionBox::for_schur(r.gf.nvars(), ell, d) : ExpansionBox::for_thom(r.gf.nvars(), ell, d);
  log("expanding " + r.label + " at ell = " + std::to_string(ell));
  const auto p = expand_in_box(r.gf, box);
  json result = {{"source", r.label}, {"degree", d}, {"terms", laurent_json(p)}, {"rendered", p.str()}};
  std::ostringstream text;
  text << r.label << "\nell=" << ell << "  degree=" << d << "  terms=" << p.size() << '\n' << p.str() << '\n';
  out.emit("laurent", ell, result, text.str());
  return 0;
}

int cmd_equiv(const Output& out, const std::string& a_spec, const std::string& b_spec, int ell_max) {
  if (ell_max < -1) throw UsageError("--ell-max must be >= -1");
  const auto a = resolve(parse_spec(a_spec), false);
  const auto b = resolve(parse_spec(b_spec), false);
  json result = {{"a", a.label}, {"b", b.label}};
  std::ostringstream text;
  text << "a: " << a.label << "\nb: " << b.label << '\n';
  if (a.gf.nvars() == b.gf.nvars() && gf_equal_exact(a.gf, b.gf)) {
    result["verdict"] = "EXACT-EQUAL";
    text << "EXACT-EQUAL\n";
    out.emit("chern", std::nullopt, result, text.str());
    return 0;
  }
  log("comparing Thom polynomials for ell in [-1, " + std::to_string(ell_max) + "]");
  const auto eq = series_equivalent(a.gf, b.gf, ell_max);
  result["verdict"] = eq.equivalent ? "SERIES-EQUIVALENT" : "INEQUIVALENT";
  result["reason"] = eq.reason;
  text << (eq.equivalent ? "SERIES-EQUIVALENT" : "INEQUIVALENT") << " (" << eq.reason << ")\n";
  if (eq.term) {
    ChernPolynomial probe(*eq.ell, static_cast<int>(a.gf.nvars()), 0);
    std::string term = detail::render_chern_monomial(*eq.term, *eq.ell, probe.mu(), RenderStyle::numeric);
    if (term.empty()) term = "1";
    result["ell"] = *eq.ell;
    result["term"] = *eq.term;
    result["coefficient_a"] = to_string(*eq.coefficient_a);
    result["coefficient_b"] = to_string(*eq.coefficient_b);
    text << "first differing term at ell=" << *eq.ell << ": " << term << "  (a: " << *eq.coefficient_a
         << ", b: " << *eq.coefficient_b << ")\n";
  }
  out.emit("chern", std::nullopt, result, text.str());
  return eq.equivalent ? 0 : kExitFailure;
}

int cmd_assoc(const Output& out, const std::string& dimvec, bool equations, bool euler, bool ci,
              const std::vector<std::string>& zero) {
  if (int(equations) + int(euler) + int(ci) != 1) throw UsageError("give exactly one of --equations, --euler, --ci");
  if (!zero.empty() && !ci) throw UsageError("--zero applies to --ci only");
  const auto d = parse_dimvec(dimvec);
  const auto mu = static_cast<std::size_t>(d.mu());
  const auto coords = coordinates(d);
  json result = {{"dimvec", d.entries()}, {"coordinates", coords.size()}};
  std::ostringstream text;
  text << "dimvec=(" << d.str() << ")  mu=" << mu << "  coordinates=" << coords.size() << '\n';

  if (euler) {
    const auto e = euler_class(d);
    auto key = [](std::vector<LinForm> v) {
      std::vector<std::vector<long>> k;
      for (const auto& f : v) k.push_back(f.coeffs());
      std::sort(k.begin(), k.end());
      return k;
    };
    const bool match = key(e) == key(k_denominator(d));
    result["euler_class"] = linforms_json(e);
    result["matches_k_denominator"] = match;
    text << "euler class: " << e.size() << " factors\n";
    for (std::size_t i = 0; i < e.size(); ++i) text << "  " << coords[i].str() << "  " << e[i].str() << '\n';
    text << "matches the denominator of K_d: " << (match ? "yes" : "no") << '\n';
    out.emit("", std::nullopt, result, text.str());
    return match ? 0 : kExitFailure;
  }

  const auto eqs = assoc_equations(d);
  if (equations) {
    json list = json::array();
    text << "equations: " << eqs.size() << '\n';
    for (const auto& e : eqs) {
      list.push_back({{"indices", {e.i, e.j, e.k, e.n}}, {"polynomial", render(e, coords)},
                      {"multidegree", e.multidegree.str()}});
      text << "  " << render(e, coords) << "  [" << e.multidegree.str() << "]\n";
    }
    result["equations"] = list;
    out.emit("", std::nullopt, result, text.str());
    return 0;
  }

  std::vector<QCoordinate> zeros;
  for (const auto& z : zero) {
    std::vector<int> ijk;
    std::stringstream ss(z);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        ijk.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw UsageError("bad --zero '" + z + "' (expected i,j,k)");
      }
    }
    if (ijk.size() != 3) throw UsageError("bad --zero '" + z + "' (expected i,j,k)");
    auto it = std::find_if(coords.begin(), coords.end(), [&](const QCoordinate& q) {
      return q.k == ijk[2] && ((q.i == ijk[0] && q.j == ijk[1]) || (q.i == ijk[1] && q.j == ijk[0]));
    });
    if (it == coords.end()) throw UsageError("no coordinate q_{" + z.substr(0, z.rfind(',')) + "}^" + std::to_string(ijk[2]));
    zeros.push_back(*it);
  }
  const auto factors = ci_multidegree_factors(eqs, zeros);
  const auto product = ci_multidegree(mu, eqs, zeros);
  result["factors"] = linforms_json(factors);
  result["multidegree"] = product.str();
  text << "equations: " << eqs.size() << "  hyperplanes: " << zeros.size() << '\n' << "factors:";
  for (const auto& f : factors) text << "  (" << f.str() << ")";
  text << "\nmultidegree: " << product.str() << '\n';
  out.emit("", std::nullopt, result, text.str());
  return 0;
}

int cmd_verify(const Output& out, const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all")
    for (const auto& [n, fn] : suites::registry()) names.push_back(n);
  else
    names.push_back(suite);
  bool all_ok = true;
  json reports = json::array();
  std::ostringstream text;
  for (const auto& n : names) {
    log("running suite " + n);
    const auto r = suites::run(n);
    all_ok = all_ok && r.ok();
    std::size_t failed = 0;
    json failures = json::array();
    for (const auto& c : r.checks)
      if (!c.ok) {
        ++failed;
        failures.push_back({{"check", c.name}, {"expected", c.expected}, {"actual", c.actual}});
        text << "  FAIL " << c.name << ": expected " << c.expected << ", got " << c.actual << '\n';
      }
    text << (r.ok() ? "PASS " : "FAIL ") << n << " (" << r.checks.size() - failed << "/" << r.checks.size()
         << " checks)";
    if (out.timing) text << " " << std::fixed << std::setprecision(3) << r.seconds << " s";
    text << '\n';
    json rep = {{"suite", n}, {"status", r.ok() ? "PASS" : "FAIL"}, {"checks", r.checks.size()},
                {"failures", failures}};
    if (out.timing) rep["seconds"] = r.seconds;
    reports.push_back(rep);
  }
  out.emit("", std::nullopt, {{"status", all_ok ? "PASS" : "FAIL"}, {"suites", reports}}, text.str());
  return all_ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Thom polynomials from rational generating functions"};
  app.require_subcommand(1);

  Output out;
  for (int i = 0; i < argc; ++i) out.command += (i ? " " : "") + std::string(i ? argv[i] : "thomgen");
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--timing", out.timing, "Report elapsed time");
  app.fallthrough();

  auto* catalog = app.add_subcommand("catalog", "List, export or show catalog entries");
  std::string action;
  std::vector<std::string> catalog_args;
  catalog->add_option("action", action, "list | export | show")->required();
  catalog->add_option("args", catalog_args, "Entry name and parameters for show");

  auto* thom = app.add_subcommand("thom", "Thom polynomial in the Chern or Schur basis");
  Source thom_src;
  int thom_ell = 0;
  std::string basis = "chern";
  add_source_options(thom, thom_src);
  thom->add_option("--ell", thom_ell, "Relative dimension (default 0)");
  thom->add_option("--basis", basis, "chern | schur");

  auto* expand_cmd = app.add_subcommand("expand", "Truncated Laurent expansion of K_d or K~_d");
  Source expand_src;
  int expand_ell = 0;
  bool tilde = false;
  add_source_options(expand_cmd, expand_src);
  expand_cmd->add_option("--ell", expand_ell, "Relative dimension (default 0)");
  expand_cmd->add_flag("--tilde", tilde, "Expand K~_d instead of K_d");

  auto* equiv = app.add_subcommand("equiv", "Compare two generating functions");
  std::string spec_a, spec_b;
  int ell_max = 2;
  equiv->add_option("--a", spec_a, "NAME[(p,..)][#v] or dimvec=..;scale=..;factor=..")->required();
  equiv->add_option("--b", spec_b, "Second generating function")->required();
  equiv->add_option("--ell-max", ell_max, "Largest ell of the bounded check (default 2)");

  auto* assoc = app.add_subcommand("assoc", "Associativity equations and Euler class");
  std::string assoc_dimvec;
  bool equations = false, euler = false, ci = false;
  std::vector<std::string> zero;
  assoc->add_option("--dimvec", assoc_dimvec, "Dimension vector")->required();
  assoc->add_flag("--equations", equations, "List the associativity equations");
  assoc->add_flag("--euler", euler, "Euler class of the coordinate space");
  assoc->add_flag("--ci", ci, "Complete intersection multidegree of the equations");
  assoc->add_option("--zero", zero, "Also cut by q_{i,j}^k = 0, given as i,j,k (repeatable)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::vector<std::string> suite_names{"all"};
  for (const auto& [n, fn] : suites::registry()) suite_names.push_back(n);
  verify->add_option("--suite", suite, "Suite name or all")->required()->check(CLI::IsMember(suite_names));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  out.structured = format == "structured";

  try {
    if (catalog->parsed()) return cmd_catalog(out, action, catalog_args);
    if (thom->parsed()) return cmd_thom(out, thom_src, thom_ell, basis);
    if (expand_cmd->parsed()) return cmd_expand(out, expand_src, expand_ell, tilde);
    if (equiv->parsed()) return cmd_equiv(out, spec_a, spec_b, ell_max);
    if (assoc->parsed()) return cmd_assoc(out, assoc_dimvec, equations, euler, ci, zero);
    if (verify->parsed()) return cmd_verify(out, suite);
  } catch (const IntegralityError& e) {
    std::cerr << "thomgen: integrality failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    // Parse errors, catalog lookups, bad ell and other input problems.
    std::cerr << "thomgen: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "thomgen: error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
