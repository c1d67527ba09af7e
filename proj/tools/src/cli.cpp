#include "hrr/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hrr/charclass/genus.hpp"
#include "hrr/graphhom/omega.hpp"
#include "hrr/graphhom/quotient.hpp"
#include "hrr/graphhom/sym3.hpp"
#include "hrr/kummer/kummer.hpp"
#include "hrr/multilinear/exterior.hpp"

namespace hrr::cli {

namespace {

using nlohmann::json;

constexpr unsigned genus_max_n = 12;
constexpr std::uint32_t laexp_seed = 20240601;
constexpr unsigned laexp_random_count = 50;
const char* const default_cache = ".hrr-cache";

json chern_json(const ChernPolynomial& p) {
  json o = json::object();
  for (const auto& [e, c] : p.terms()) o[monomial_name(e)] = c.str();
  return o;
}

std::string lambda_text(const ChernCoeffPolynomial& p) {
  std::string s;
  for (int j = 0; j <= p.degree(); ++j) {
    const ChernPolynomial c = p.coeff(static_cast<unsigned>(j));
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (j == 0) {
      s += c.str();
    } else {
      s += "(" + c.str() + ")*" + p.var();
      if (j > 1) s += "^" + std::to_string(j);
    }
  }
  return s.empty() ? "0" : s;
}

// ---- kummer-chern ----

struct KummerArgs {
  unsigned n = 0;
  std::string format = "table";
};

int kummer_chern(const KummerArgs& a, std::ostream& out, std::ostream& err) {
  ChernNumberTable t;
  try {
    t = solve_chern_numbers(a.n);
  } catch (const KummerSolveError& e) {
    err << "kummer-chern: " << e.what() << "\n";
    return exit_failure;
  }
  const auto monomials = monomials_of_weight(a.n, 2 * a.n);
  if (a.format == "json") {
    json j = json::object();
    j["n"] = a.n;
    j["rank"] = t.rank;
    j["unique"] = t.unique();
    json rows = json::array();
    if (t.unique())
      for (const auto& m : monomials) rows.push_back({{"monomial", monomial_name(m)}, {"value", t.values.at(m).str()}});
    j["chern_numbers"] = rows;
    out << j.dump(2) << "\n";
  } else if (a.format == "csv") {
    out << "monomial,value\n";
    if (t.unique())
      for (const auto& m : monomials) out << monomial_name(m) << "," << t.values.at(m).str() << "\n";
  } else {
    out << "n " << a.n << ": rank " << t.rank << " of " << t.unknowns << " unknowns, "
        << (t.unique() ? "unique" : "rank-deficient") << "\n";
    std::size_t width = 0;
    for (const auto& m : monomials) width = std::max(width, monomial_name(m).size());
    if (t.unique())
      for (const auto& m : monomials) {
        const std::string name = monomial_name(m);
        out << name << std::string(width - name.size() + 2, ' ') << t.values.at(m).str() << "\n";
      }
  }
  if (!t.unique()) {
    err << "kummer-chern: relations have rank " << t.rank << " for " << t.unknowns
        << " unknowns; Chern numbers are not determined\n";
    return exit_rank_deficient;
  }
  return exit_ok;
}

// ---- todd-deformed ----

struct ToddArgs {
  unsigned n = 0;
  std::string format = "text";
};

int todd_deformed_cmd(const ToddArgs& a, std::ostream& out) {
  const SymFuncContext ctx(a.n);
  const LambdaSeries td = todd_deformed(ctx);
  if (a.format == "json") {
    json entries = json::array();
    for (unsigned w = 0; w <= 2 * a.n; w += 2) {
      const LambdaSeries part = td.weight_part(w);
      json lambda = json::array();
      for (int j = 1; j <= part.degree(); ++j) lambda.push_back(chern_json(part.coeff(static_cast<unsigned>(j))));
      entries.push_back({{"weight", w}, {"degree", 2 * w}, {"value", chern_json(part.coeff(0))}, {"lambda", lambda}});
    }
    json j = {{"n", a.n}, {"variable", td.var()}, {"entries", entries}};
    out << j.dump(2) << "\n";
  } else {
    for (unsigned w = 0; w <= 2 * a.n; w += 2) out << "weight " << w << ": " << lambda_text(td.weight_part(w)) << "\n";
  }
  return exit_ok;
}

// ---- genus ----

struct GenusArgs {
  unsigned n = 0;
  std::string series;
};

int genus_cmd(const GenusArgs& a, std::ostream& out) {
  const SymFuncContext ctx(a.n);
  if (a.series == "chi-y") {
    const YPolynomial chi = chi_y_integrand(ctx);
    for (int p = 0; p <= chi.degree(); ++p)
      out << "y^" << p << ": " << chi.coeff(static_cast<unsigned>(p)).str() << "\n";
    return exit_ok;
  }
  const ChernPolynomial g = a.series == "todd" ? todd_symplectic(ctx) : sqrt_todd(ctx);
  for (unsigned w = 0; w <= 2 * a.n; w += 2) {
    const ChernPolynomial part = g.weight_part(w);
    out << "weight " << w << ": " << (part.is_zero() ? std::string("0") : part.str()) << "\n";
  }
  return exit_ok;
}

// ---- graph-basis ----

struct GraphBasisArgs {
  unsigned legs = 0;
  unsigned trivalent = 0;
  std::string cache = default_cache;
  bool no_cache = false;
  std::string format = "text";
};

std::optional<std::filesystem::path> cache_path(const std::string& dir, bool disabled) {
  if (disabled) return std::nullopt;
  return std::filesystem::path(dir);
}

int graph_basis_cmd(const GraphBasisArgs& a, std::ostream& out) {
  graphhom::BasisRegistry reg(cache_path(a.cache, a.no_cache));
  const graphhom::QuotientBasis& q = reg.get({a.legs, a.trivalent});
  const auto basis = q.basis();
  if (a.format == "json") {
    json codes = json::array();
    for (const auto& d : basis) codes.push_back(d.code());
    json j = {{"legs", a.legs},
              {"trivalent", a.trivalent},
              {"diagrams", q.diagrams().size()},
              {"relation_rank", q.relation_rank()},
              {"dimension", q.dimension()},
              {"basis", codes}};
    out << j.dump(2) << "\n";
  } else {
    out << "bidegree (" << a.legs << "," << a.trivalent << ")\n"
        << "diagrams " << q.diagrams().size() << "\n"
        << "relation rank " << q.relation_rank() << "\n"
        << "dimension " << q.dimension() << "\n";
    for (const auto& d : basis) out << "  " << d.code() << "\n";
  }
  return exit_ok;
}

// ---- verify ----

struct VerifyArgs {
  std::string check;
  std::optional<unsigned> max_degree;
  std::string cache = default_cache;
  bool no_cache = false;
};

unsigned default_max_degree(const std::string& check) {
  if (check == "wheels") return 10;
  if (check == "bernoulli-lemma") return 20;
  return 6;
}

std::size_t report(const std::vector<graphhom::IdentityCheck>& checks, std::ostream& out) {
  std::size_t defects = 0;
  for (const auto& c : checks) {
    out << c.label << ": " << (c.holds ? "ok" : "DEFECT " + c.detail) << "\n";
    if (!c.holds) ++defects;
  }
  return defects;
}

int verify_cmd(const VerifyArgs& a, std::ostream& out) {
  const unsigned d = a.max_degree.value_or(default_max_degree(a.check));
  std::size_t defects = 0;
  if (a.check == "omega") {
    graphhom::BasisRegistry reg(cache_path(a.cache, a.no_cache));
    for (const auto& s : graphhom::verify_omega_eigen(d, reg)) {
      out << "mu^" << s.mu_power << " (" << s.bidegree.legs << "," << s.bidegree.trivalent << "): ";
      if (s.defect.is_zero()) {
        out << "ok\n";
      } else {
        out << "DEFECT " << s.defect.str() << "\n";
        ++defects;
      }
    }
  } else if (a.check == "laexp") {
    const multilinear::LaexpSweep s = multilinear::sweep_laexp(d / 2, laexp_random_count, laexp_seed);
    out << "checked " << s.checked << " elements up to dimension " << 2 * (d / 2) << "\n";
    defects = s.defects;
  } else if (a.check == "wheels") {
    // Each law at order k lands in total degree 4k - 2.
    const unsigned k = (d + 2) / 4;
    graphhom::BasisRegistry reg(cache_path(a.cache, a.no_cache));
    defects += report(graphhom::verify_wheel_partial(k), out);
    defects += report(graphhom::verify_power_rule(k), out);
    defects += report(graphhom::verify_wheel_bilinear(k, reg), out);
  } else if (a.check == "bernoulli-lemma") {
    const graphhom::Sym3Poly defect = graphhom::lemma_bernoulli_defect(d);
    for (unsigned w = 0; w <= d; ++w) {
      const graphhom::Sym3Poly part = defect.weight_part(w);
      out << "weight " << w << ": " << (part.is_zero() ? "ok" : "DEFECT " + part.str()) << "\n";
      if (!part.is_zero()) ++defects;
    }
  } else {
    graphhom::BasisRegistry reg(cache_path(a.cache, a.no_cache));
    if (a.check == "scp-partial") defects += report(graphhom::verify_scp_partial(d, reg), out);
    else defects += report(graphhom::verify_ell_partial(d, reg), out);
  }
  out << (defects == 0 ? "OK" : "FAILED") << " (" << defects << " defects)\n";
  return defects == 0 ? exit_ok : exit_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with graph homology, symplectic Riemann-Roch and Kummer Chern numbers", "hrr"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const auto format_of = [](std::initializer_list<std::string> v) { return CLI::IsMember(std::vector<std::string>(v)); };

  KummerArgs ka;
  auto* kc = app.add_subcommand(
      "kummer-chern",
      "Solve for the Chern numbers of the generalized Kummer variety of dimension 2n from the linear relations "
      "given by Riemann-Roch for powers of a line bundle and by the chi_y genus");
  kc->add_option("--n", ka.n, "Half the complex dimension")->required()->check(CLI::Range(1u, kummer_max_n));
  kc->add_option("--format", ka.format, "Output format")->check(format_of({"table", "json", "csv"}))->capture_default_str();

  ToddArgs ta;
  auto* td = app.add_subcommand(
      "todd-deformed",
      "Todd class of the tangent bundle twisted by a line bundle with q(c_1(L)) = lambda, for a hyperkaehler "
      "manifold of complex dimension 2n, as a polynomial in lambda");
  td->add_option("--n", ta.n, "Half the complex dimension")->required()->check(CLI::Range(1u, genus_max_n));
  td->add_option("--format", ta.format, "Output format")->check(format_of({"text", "json"}))->capture_default_str();

  GenusArgs ga;
  auto* ge = app.add_subcommand(
      "genus", "Multiplicative genera of a manifold with vanishing odd Chern classes: Todd, square root of Todd, chi_y integrand");
  ge->add_option("--series", ga.series, "Which genus")->required()->check(format_of({"todd", "sqrt-todd", "chi-y"}));
  ge->add_option("--n", ga.n, "Half the complex dimension")->required()->check(CLI::Range(1u, genus_max_n));

  GraphBasisArgs ba;
  auto* gb = app.add_subcommand(
      "graph-basis", "Basis of the space of trivalent graphs with univalent legs modulo the AS and IHX relations");
  gb->add_option("--legs", ba.legs, "Number of univalent vertices")->required();
  gb->add_option("--trivalent", ba.trivalent, "Number of trivalent vertices")->required();
  gb->add_option("--cache", ba.cache, "Directory holding computed bases")->capture_default_str();
  gb->add_flag("--no-cache", ba.no_cache, "Neither read nor write basis files");
  gb->add_option("--format", ba.format, "Output format")->check(format_of({"text", "json"}))->capture_default_str();

  VerifyArgs va;
  auto* ve = app.add_subcommand(
      "verify",
      "Check an identity exactly. omega: eigenvalue equation for the wheel exponential under the gluing operator. "
      "laexp: top-degree pairing with exp(sigma). wheels: gluing laws for wheels. bernoulli-lemma: Bernoulli "
      "identity for double wheels in Sym^3. scp-partial, ell-partial: adjointness of gluing and the pairing");
  ve->add_option("check", va.check, "Identity to check")
      ->required()
      ->check(format_of({"omega", "laexp", "wheels", "bernoulli-lemma", "scp-partial", "ell-partial"}));
  ve->add_option("--max-degree", va.max_degree,
                 "Total degree bound (weight for bernoulli-lemma, dimension for laexp); defaults: omega 6, laexp 6, "
                 "wheels 10, bernoulli-lemma 20, scp-partial 6, ell-partial 6");
  ve->add_option("--cache", va.cache, "Directory holding computed bases")->capture_default_str();
  ve->add_flag("--no-cache", va.no_cache, "Neither read nor write basis files");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (kc->parsed()) return kummer_chern(ka, out, err);
    if (td->parsed()) return todd_deformed_cmd(ta, out);
    if (ge->parsed()) return genus_cmd(ga, out);
    if (gb->parsed()) return graph_basis_cmd(ba, out);
    return verify_cmd(va, out);
  } catch (const std::invalid_argument& e) {
    err << "hrr: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "hrr: " << e.what() << "\n";
    return exit_failure;
  }
}

}  // namespace hrr::cli
