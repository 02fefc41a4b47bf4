#include "cli_app.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "series_io.hpp"
#include "ward/catalog.hpp"
#include "ward/riordan.hpp"
#include "ward/sheffer.hpp"
#include "ward/solver.hpp"

namespace ward::cli {

namespace {

int env_default_trunc() {
  const char* e = std::getenv("WARD_DEFAULT_TRUNC");
  if (!e || !*e) return 32;
  int v = 0;
  auto [p, ec] = std::from_chars(e, e + std::strlen(e), v);
  if (ec != std::errc() || *p != '\0' || v < 0)
    throw ParseError("WARD_DEFAULT_TRUNC must be a nonnegative integer");
  return v;
}

struct HSpec {
  HSeries h;
  std::optional<CatalogTag> tag;
};

// A catalog tag (built at `trunc`), a comma list, inline JSON, or
// file:<path>. Raw coefficient forms carry no closed-form provenance.
HSpec parse_h_arg(const std::string& arg, int trunc) {
  if (arg.rfind("file:", 0) == 0 || (!arg.empty() && arg.front() == '{'))
    return {HSeries(parse_series_arg(arg, -1)), std::nullopt};
  try {
    CatalogTag tag = CatalogTag::parse(arg);
    return {make_h(tag, trunc), tag};
  } catch (const ParseError&) {
    // fall through to the raw-coefficient forms
  }
  try {
    auto v = parse_rat_list(arg);
    if (v.empty()) throw ParseError("empty h literal");
    return {HSeries(Series(std::move(v))), std::nullopt};
  } catch (const ParseError& e) {
    throw ParseError(
        "--h must be a catalog tag (pascal:N, polylog:N, fibonomial, q:R), "
        "a comma list, inline JSON, or file:<path> (" +
        std::string(e.what()) + ")");
  }
}

// A series inside rhs JSON: either a comma-list string or a series object.
Series series_from_any(const nlohmann::json& v, int pad_to) {
  if (v.is_string()) {
    auto coeffs = parse_rat_list(v.get<std::string>());
    if (coeffs.empty()) throw ParseError("empty series literal in rhs");
    Series s(std::move(coeffs));
    if (pad_to > s.trunc()) return s.padded_as_polynomial(pad_to);
    return s;
  }
  return series_from_json(v);
}

RhsSpec parse_rhs(const std::string& arg, int pad_to) {
  if (arg == "identity")
    return PolynomialRhs{
        {Series::zero(pad_to), Series::constant(Rat(1), pad_to)}};
  if (arg == "zero") return PolynomialRhs{};
  if (arg.rfind("file:", 0) != 0 && (arg.empty() || arg.front() != '{'))
    throw ParseError(
        R"(rhs must be "identity", "zero", a JSON object, or file:<path>)");
  nlohmann::json j = arg.rfind("file:", 0) == 0
                         ? parse_json_text(read_text_file(arg.substr(5)))
                         : parse_json_text(arg);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError(
        R"(rhs must be "identity", "zero", or JSON with a "kind" field)");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "polynomial") {
    if (!j.contains("q") || !j["q"].is_array())
      throw ParseError(R"(polynomial rhs needs "q": [series, ...])");
    PolynomialRhs r;
    for (const auto& e : j["q"]) r.q.push_back(series_from_any(e, pad_to));
    return r;
  }
  if (kind == "linear_dh") {
    if (!j.contains("q") || !j.contains("p") || !j["p"].is_array())
      throw ParseError(R"(linear_dh rhs needs "q": series and "p": [series, ...])");
    LinearDhRhs r{series_from_any(j["q"], pad_to), {}};
    for (const auto& e : j["p"]) r.p.push_back(series_from_any(e, pad_to));
    return r;
  }
  if (kind == "affine_integral") {
    if (!j.contains("f") || !j.contains("r"))
      throw ParseError(R"(affine_integral rhs needs "f" and "r" series)");
    return AffineIntegralRhs{series_from_any(j["f"], pad_to),
                             series_from_any(j["r"], pad_to)};
  }
  throw ParseError("unknown rhs kind '" + kind + "'");
}

const char* verdict_name(CalculusVerdict v) {
  switch (v) {
    case CalculusVerdict::FiniteDegree:
      return "finite-degree";
    case CalculusVerdict::InfiniteCertified:
      return "infinite-certified";
    case CalculusVerdict::FiniteUpToTrunc:
      return "finite-up-to-trunc";
    default:
      return "unknown-beyond-trunc";
  }
}

void emit_series(std::ostream& out, const Series& s, bool pretty) {
  if (pretty)
    out << pretty_table(s);
  else
    out << series_to_json(s).dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact h-calculus on truncated rational power series"};
  app.name("ward");
  app.require_subcommand(1);
  // --h names the h-sequence everywhere, so no -h short help flag.
  app.set_help_flag("--help", "print this help and exit");
  auto add_sub = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print this help and exit");
    return sub;
  };

  struct {
    std::string h, series;
    int times = 1;
    int trunc = -1;
    bool pretty = false;
  } diff;
  auto bind_diff = [&](CLI::App* sub) {
    sub->add_option("--h", diff.h, "h-sequence: catalog tag, comma list, or file:<path>")
        ->required();
    sub->add_option("--series", diff.series, "input series: comma list, JSON, or file:<path>")
        ->required();
    sub->add_option("--times", diff.times, "how often to apply the operator")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--trunc", diff.trunc, "output truncation")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--pretty", diff.pretty, "aligned table instead of JSON");
  };
  CLI::App* dh_cmd = add_sub("dh", "apply the h-derivative");
  bind_diff(dh_cmd);
  CLI::App* ih_cmd = add_sub("ih", "apply the h-integral");
  // rebinding writes into the same storage; only one subcommand parses
  bind_diff(ih_cmd);

  struct {
    std::string h, rhs, init;
    int order = 1;
    int trunc = -1;
    bool pretty = false;
  } solve;
  CLI::App* solve_cmd = add_sub(
      "solve", "fixed-point solve of D_h^(n) y = G(y) with initial values");
  solve_cmd->add_option("--h", solve.h, "h-sequence")->required();
  solve_cmd->add_option("--order", solve.order, "equation order n")
      ->required()
      ->check(CLI::PositiveNumber);
  solve_cmd
      ->add_option("--rhs", solve.rhs,
                   "\"identity\", \"zero\", JSON spec, or file:<path>")
      ->required();
  solve_cmd->add_option("--init", solve.init, "n initial values, comma list")
      ->required();
  solve_cmd->add_option("--trunc", solve.trunc, "output truncation")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_flag("--pretty", solve.pretty, "aligned table instead of JSON");

  struct {
    std::string h, a, q = "0", init, method = "reciprocal", hint;
    int trunc = -1;
    bool pretty = false;
  } heav;
  CLI::App* heav_cmd = add_sub(
      "heaviside",
      "constant-coefficient D_h^(n) y = sum a_k D_h^(k) y + q via the "
      "reciprocal operator 1/C*");
  heav_cmd->add_option("--a", heav.a, "coefficients a_0,...,a_{n-1} (a_0 != 0)")
      ->required();
  heav_cmd->add_option("--h", heav.h, "h-sequence")->required();
  heav_cmd->add_option("--q", heav.q, "forcing series (default 0)");
  heav_cmd->add_option("--init", heav.init, "n initial values")->required();
  heav_cmd->add_option("--method", heav.method, "reciprocal | roots")
      ->check(CLI::IsMember({"reciprocal", "roots"}));
  heav_cmd->add_option("--roots-hint", heav.hint,
                       "n characteristic roots with multiplicity, comma list");
  heav_cmd->add_option("--trunc", heav.trunc, "output truncation")
      ->check(CLI::NonNegativeNumber);
  heav_cmd->add_flag("--pretty", heav.pretty, "aligned table instead of JSON");

  struct {
    std::string h;
    int trunc = -1;
    bool pretty = false;
  } sheff;
  CLI::App* sheffer_cmd = add_sub(
      "sheffer", "expansion of D_h over classical derivatives");
  sheffer_cmd->add_option("--h", sheff.h, "h-sequence")->required();
  sheffer_cmd->add_option("--trunc", sheff.trunc, "expansion window")
      ->check(CLI::NonNegativeNumber);
  sheffer_cmd->add_flag("--pretty", sheff.pretty, "aligned table instead of JSON");

  struct {
    std::string h;
    int trunc = -1;
  } clas;
  CLI::App* classify_cmd = add_sub(
      "classify", "finite/infinite verdict for the expansion of D_h");
  classify_cmd->add_option("--h", clas.h, "h-sequence")->required();
  classify_cmd->add_option("--trunc", clas.trunc, "observation window")
      ->check(CLI::NonNegativeNumber);

  struct {
    std::string f, g, apply, with_f, with_g;
    bool inverse = false, aseq = false;
    int rows = -1;
    int trunc = -1;
    bool pretty = false;
  } rio;
  CLI::App* riordan_cmd = add_sub(
      "riordan", "Riordan matrix (f | g) actions and group operations");
  riordan_cmd->add_option("--f", rio.f, "numerator series, f(0) != 0")->required();
  riordan_cmd->add_option("--g", rio.g, "denominator series, g(0) != 0")->required();
  riordan_cmd->add_option("--apply", rio.apply, "column vector to act on");
  riordan_cmd->add_flag("--inverse", rio.inverse, "group inverse");
  riordan_cmd->add_option("--with-f", rio.with_f, "right factor f for --with-g");
  riordan_cmd->add_option("--with-g", rio.with_g, "right factor g: multiply pairs");
  riordan_cmd->add_option("--rows", rio.rows, "materialize this many rows")
      ->check(CLI::PositiveNumber);
  riordan_cmd->add_flag("--aseq", rio.aseq, "A-sequence of the pair");
  riordan_cmd->add_option("--trunc", rio.trunc, "working truncation")
      ->check(CLI::NonNegativeNumber);
  riordan_cmd->add_flag("--pretty", rio.pretty, "aligned output instead of JSON");

  struct {
    std::string h;
    int trunc = -1;
    bool pretty = false;
  } expo;
  CLI::App* exp_cmd = add_sub(
      "exp", "generalized exponential: coefficients 1/(h_k...h_1)");
  exp_cmd->add_option("--h", expo.h, "h-sequence")->required();
  exp_cmd->add_option("--trunc", expo.trunc, "output truncation")
      ->check(CLI::NonNegativeNumber);
  exp_cmd->add_flag("--pretty", expo.pretty, "aligned table instead of JSON");

  struct {
    std::string upper, lower, scale = "1";
    int trunc = -1;
    bool pretty = false;
  } hyp;
  CLI::App* hyp_cmd =
      add_sub("hyp", "hypergeometric pFq(upper; lower; scale*x)");
  hyp_cmd->add_option("--upper", hyp.upper, "upper parameters, comma list");
  hyp_cmd->add_option("--lower", hyp.lower, "lower parameters, comma list");
  hyp_cmd->add_option("--scale", hyp.scale, "argument scale, rational");
  hyp_cmd->add_option("--trunc", hyp.trunc, "output truncation")
      ->check(CLI::NonNegativeNumber);
  hyp_cmd->add_flag("--pretty", hyp.pretty, "aligned table instead of JSON");

  struct {
    std::string kind, h, series, f, g;
    int s = -1, alpha = -1;
    int trunc = -1;
  } chk;
  CLI::App* check_cmd =
      add_sub("check", "verify a calculus identity, report ok");
  check_cmd
      ->add_option("--kind", chk.kind,
                   "barrow | ftc | hadamard | leibniz | pascal-expansion | "
                   "polylog-closed-form | exp-hyp")
      ->required();
  check_cmd->add_option("--h", chk.h, "h-sequence (barrow/ftc/hadamard/leibniz)");
  check_cmd->add_option("--series", chk.series, "probe series");
  check_cmd->add_option("--f", chk.f, "left factor (leibniz)");
  check_cmd->add_option("--g", chk.g, "right factor (leibniz)");
  check_cmd->add_option("--s", chk.s, "column parameter (pascal-expansion, exp-hyp)");
  check_cmd->add_option("--alpha", chk.alpha, "exponent (polylog-closed-form)");
  check_cmd->add_option("--trunc", chk.trunc, "working truncation")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  auto resolved_trunc = [&](const CLI::App* sub, int value) {
    return sub->count("--trunc") ? value : env_default_trunc();
  };

  try {
    if (dh_cmd->parsed() || ih_cmd->parsed()) {
      const CLI::App* sub = dh_cmd->parsed() ? dh_cmd : ih_cmd;
      int t = resolved_trunc(sub, diff.trunc);
      bool derivative = dh_cmd->parsed();
      int w = derivative ? t + diff.times : t;
      HSpec hs = parse_h_arg(diff.h, w);
      Series s = parse_series_arg(diff.series, w);
      SeriesOperator op = derivative ? d_h(hs.h) : i_h(hs.h);
      for (int i = 0; i < diff.times; ++i) s = op(s);
      if (s.trunc() > t) s = s.truncated(t);
      emit_series(out, s, diff.pretty);
      return 0;
    }

    if (solve_cmd->parsed()) {
      int t = resolved_trunc(solve_cmd, solve.trunc);
      int w = t + solve.order;
      HSpec hs = parse_h_arg(solve.h, w);
      IVProblem problem(hs.h, solve.order, parse_rhs(solve.rhs, w),
                        parse_rat_list(solve.init));
      FixedPointResult res = solve_ivp_fixed_point(problem, t);
      if (solve.pretty) {
        out << pretty_table(res.y);
      } else {
        nlohmann::ordered_json j = series_to_json(res.y);
        j["iterations"] = res.iterations;
        j["method"] = "fixed_point";
        out << j.dump() << "\n";
      }
      return 0;
    }

    if (heav_cmd->parsed()) {
      int t = resolved_trunc(heav_cmd, heav.trunc);
      std::vector<Rat> a = parse_rat_list(heav.a);
      int w = t + static_cast<int>(a.size());
      HSpec hs = parse_h_arg(heav.h, w);
      CharProblem cp(hs.h, std::move(a), parse_series_arg(heav.q, w),
                     parse_rat_list(heav.init));
      if (heav.method == "roots") {
        PartialFractions pf = partial_fractions(cp, parse_rat_list(heav.hint));
        Series y = solve_via_roots(cp, pf, t);
        if (heav.pretty) {
          out << pretty_table(y);
        } else {
          nlohmann::ordered_json j = series_to_json(y);
          j["method"] = "roots";
          auto roots = nlohmann::ordered_json::array();
          for (std::size_t l = 0; l < pf.roots.size(); ++l) {
            nlohmann::ordered_json r;
            r["lambda"] = pf.roots[l].lambda.str();
            r["multiplicity"] = pf.roots[l].multiplicity;
            auto as = nlohmann::ordered_json::array();
            for (const Rat& v : pf.A[l]) as.push_back(v.str());
            r["A"] = std::move(as);
            roots.push_back(std::move(r));
          }
          j["roots"] = std::move(roots);
          j["partial_fractions_ok"] = pf.remainder_ok;
          out << j.dump() << "\n";
        }
      } else {
        Series y = solve_heaviside(cp, t);
        if (heav.pretty) {
          out << pretty_table(y);
        } else {
          nlohmann::ordered_json j = series_to_json(y);
          j["method"] = "reciprocal";
          out << j.dump() << "\n";
        }
      }
      return 0;
    }

    if (sheffer_cmd->parsed()) {
      int t = resolved_trunc(sheffer_cmd, sheff.trunc);
      HSpec hs = parse_h_arg(sheff.h, t);
      ShefferExpansion e = sheffer_coeffs(hs.h);
      Classification c = classify_calculus(hs.h, hs.tag);
      if (sheff.pretty) {
        for (int k = 1; k <= e.max_k(); ++k)
          out << k << "  " << e.c[static_cast<std::size_t>(k)].str() << "\n";
      } else {
        nlohmann::ordered_json j;
        auto arr = nlohmann::ordered_json::array();
        for (int k = 1; k <= e.max_k(); ++k)
          arr.push_back(e.c[static_cast<std::size_t>(k)].str());
        j["c"] = std::move(arr);
        j["verdict"] = verdict_name(c.verdict);
        j["degree"] = c.degree ? nlohmann::ordered_json(*c.degree)
                               : nlohmann::ordered_json(nullptr);
        out << j.dump() << "\n";
      }
      return 0;
    }

    if (classify_cmd->parsed()) {
      int t = resolved_trunc(classify_cmd, clas.trunc);
      HSpec hs = parse_h_arg(clas.h, t);
      Classification c = classify_calculus(hs.h, hs.tag);
      nlohmann::ordered_json j;
      j["verdict"] = verdict_name(c.verdict);
      j["degree"] = c.degree ? nlohmann::ordered_json(*c.degree)
                             : nlohmann::ordered_json(nullptr);
      out << j.dump() << "\n";
      return 0;
    }

    if (riordan_cmd->parsed()) {
      int t = resolved_trunc(riordan_cmd, rio.trunc);
      int actions = (riordan_cmd->count("--apply") ? 1 : 0) +
                    (rio.inverse ? 1 : 0) +
                    (riordan_cmd->count("--with-g") ? 1 : 0) +
                    (riordan_cmd->count("--rows") ? 1 : 0) +
                    (rio.aseq ? 1 : 0);
      if (actions != 1) {
        err << "riordan needs exactly one of --apply, --inverse, "
               "--with-f/--with-g, --rows, --aseq\n";
        return 2;
      }
      if (riordan_cmd->count("--with-g") != riordan_cmd->count("--with-f")) {
        err << "--with-f and --with-g must be given together\n";
        return 2;
      }
      RiordanPair pair(parse_series_arg(rio.f, t), parse_series_arg(rio.g, t));
      if (riordan_cmd->count("--apply")) {
        emit_series(out, riordan_apply(pair, parse_series_arg(rio.apply, t)),
                    rio.pretty);
      } else if (rio.inverse || riordan_cmd->count("--with-g")) {
        RiordanPair result =
            rio.inverse
                ? riordan_inverse(pair)
                : riordan_mul(pair, RiordanPair(parse_series_arg(rio.with_f, t),
                                                parse_series_arg(rio.with_g, t)));
        if (rio.pretty) {
          out << "f:\n" << pretty_table(result.f());
          out << "g:\n" << pretty_table(result.g());
        } else {
          nlohmann::ordered_json j;
          j["f"] = series_to_json(result.f());
          j["g"] = series_to_json(result.g());
          out << j.dump() << "\n";
        }
      } else if (riordan_cmd->count("--rows")) {
        auto rows = materialize(pair, rio.rows);
        if (rio.pretty) {
          out << pretty_matrix(rows);
        } else {
          nlohmann::ordered_json j;
          auto arr = nlohmann::ordered_json::array();
          for (const auto& row : rows) {
            auto r = nlohmann::ordered_json::array();
            for (const Rat& v : row) r.push_back(v.str());
            arr.push_back(std::move(r));
          }
          j["rows"] = std::move(arr);
          out << j.dump() << "\n";
        }
      } else {
        emit_series(out, a_sequence(pair), rio.pretty);
      }
      return 0;
    }

    if (exp_cmd->parsed()) {
      int t = resolved_trunc(exp_cmd, expo.trunc);
      HSpec hs = parse_h_arg(expo.h, t);
      emit_series(out, generalized_exp(hs.h, std::min(t, hs.h.trunc())),
                  expo.pretty);
      return 0;
    }

    if (hyp_cmd->parsed()) {
      int t = resolved_trunc(hyp_cmd, hyp.trunc);
      emit_series(out,
                  hypergeom_pFq(parse_rat_list(hyp.upper),
                                parse_rat_list(hyp.lower),
                                Rat::parse(hyp.scale), t),
                  hyp.pretty);
      return 0;
    }

    // check
    int t = resolved_trunc(check_cmd, chk.trunc);
    auto need = [&](const std::string& value, const char* name) -> const std::string& {
      if (value.empty()) {
        throw ParseError("check --kind " + chk.kind + " needs " +
                         std::string(name));
      }
      return value;
    };
    nlohmann::ordered_json j;
    j["check"] = chk.kind;
    if (chk.kind == "barrow" || chk.kind == "ftc" || chk.kind == "hadamard") {
      HSpec hs = parse_h_arg(need(chk.h, "--h"), t);
      Series s = parse_series_arg(need(chk.series, "--series"), t);
      bool ok = chk.kind == "barrow"   ? barrow_check(hs.h, s)
                : chk.kind == "ftc"    ? ftc_check(hs.h, s)
                                       : hadamard_derivative_identity_check(hs.h, s);
      j["ok"] = ok;
    } else if (chk.kind == "leibniz") {
      HSpec hs = parse_h_arg(need(chk.h, "--h"), t);
      Series defect = leibniz_defect(hs.h, parse_series_arg(need(chk.f, "--f"), t),
                                     parse_series_arg(need(chk.g, "--g"), t));
      j["ok"] = order(defect).above();
      j["defect"] = series_to_json(defect);
    } else if (chk.kind == "pascal-expansion") {
      if (chk.s < 0) throw ParseError("check --kind pascal-expansion needs --s");
      Series y = parse_series_arg(need(chk.series, "--series"), t);
      j["ok"] = pascal_column_expansion_check(chk.s, y);
    } else if (chk.kind == "polylog-closed-form") {
      if (chk.alpha < 0)
        throw ParseError("check --kind polylog-closed-form needs --alpha");
      j["ok"] = polylog_closed_form_check(chk.alpha, t);
    } else if (chk.kind == "exp-hyp") {
      if (chk.s < 0) throw ParseError("check --kind exp-hyp needs --s");
      j["ok"] = exp_equals_hypergeom_check(chk.s, t);
    } else {
      err << "unknown check kind '" << chk.kind << "'\n";
      return 2;
    }
    out << j.dump() << "\n";
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidH& e) {
    nlohmann::ordered_json j{{"error", e.code()}, {"detail", e.what()},
                             {"witness", e.witness()}};
    out << j.dump() << "\n";
    return 1;
  } catch (const PochhammerPole& e) {
    nlohmann::ordered_json j{{"error", e.code()},
                             {"detail", e.what()},
                             {"parameter_index", e.parameter_index()},
                             {"at_k", e.at_k()}};
    out << j.dump() << "\n";
    return 1;
  } catch (const Error& e) {
    nlohmann::ordered_json j{{"error", e.code()}, {"detail", e.what()}};
    out << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    nlohmann::ordered_json j{{"error", "Internal"}, {"detail", e.what()}};
    out << j.dump() << "\n";
    return 1;
  }
}

}  // namespace ward::cli
