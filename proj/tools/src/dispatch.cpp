#include "binomrep/cli/dispatch.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "binomrep/census.hpp"
#include "binomrep/cli/cache.hpp"
#include "binomrep/cli/serialize.hpp"
#include "binomrep/curve.hpp"
#include "binomrep/ratio.hpp"
#include "binomrep/search.hpp"

namespace binomrep::cli {

namespace {

// Binomial values of family members have about n bits; beyond this index
// they are reported as null instead of materialized.
constexpr std::uint64_t kFamilyValueLimit = 6;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Zeta: return "zeta";
    case Command::Search: return "search";
    case Command::Family: return "family";
    case Command::Curve: return "curve";
    case Command::Census: return "census";
    case Command::Intersect: return "intersect";
    case Command::Verify: return "verify";
    case Command::Plot: return "plot";
  }
  return "?";
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const Json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  auto line_of = [](const Json& obj) {
    std::string s;
    for (const auto& [k, v] : obj.items()) {
      if (!s.empty()) s.push_back(' ');
      s += k + "=" + scalar_text(v);
    }
    return s;
  };
  if (j.is_array()) {
    for (const auto& row : j) os << (row.is_object() ? line_of(row) : scalar_text(row)) << '\n';
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) os << k << ": " << scalar_text(v) << '\n';
  } else {
    os << scalar_text(j) << '\n';
  }
  return os.str();
}

std::string render_csv(const Json& rows, const std::vector<std::string>& columns) {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_cell(row.at(columns[i]));
    os << '\n';
  }
  return os.str();
}

struct Output {
  Json data;
  std::vector<std::string> csv_columns;  // empty: not tabular
};

std::string render(const RunConfig& cfg, const Output& result) {
  switch (cfg.format.value_or(OutputFormat::Json)) {
    case OutputFormat::Json: return result.data.dump(2) + "\n";
    case OutputFormat::Text: return render_text(result.data);
    case OutputFormat::Csv:
      if (result.csv_columns.empty() || !result.data.is_array()) {
        throw UsageError("csv output is not available for '" + std::string(command_name(cfg.command)) + "'");
      }
      return render_csv(result.data, result.csv_columns);
  }
  return {};
}

Output run_zeta(const RunConfig& cfg) {
  const ShiftPair shift(cfg.a, cfg.b);
  const UniPoly p = zeta_poly(shift);
  const Interval iv = isolate_zeta(shift, cfg.precision);
  const auto irr = irrationality_check(shift);
  Json witnesses = Json::array();
  for (const auto& w : irr.witnesses) {
    witnesses.push_back(Json{{"candidate", w.candidate.get_str()}, {"value", w.value.get_str()}});
  }
  Json j{{"a", shift.a()},
         {"b", shift.b()},
         {"polynomial", p.str('t')},
         {"coefficients", coefficients_to_json(p)},
         {"descartes_sign_changes", descartes_sign_changes(p)},
         {"irrational", irr.irrational},
         {"rational_root_witnesses", std::move(witnesses)}};
  const Json enclosure = to_json(iv);
  for (const auto& [k, v] : enclosure.items()) j[k] = v;
  j["decimal"] = to_decimal(iv.midpoint(), 15);
  return {std::move(j), {}};
}

Output run_search(const RunConfig& cfg) {
  const ShiftPair shift(cfg.a, cfg.b);
  const auto solutions = search(shift, cfg.y_max, {cfg.workers, std::nullopt});
  if (cfg.cache_path) append_cache(*cfg.cache_path, solutions);
  Json arr = Json::array();
  for (const auto& s : solutions) arr.push_back(to_json(s));
  return {std::move(arr), {"a", "b", "x", "y", "value", "trivial"}};
}

Output run_family(const RunConfig& cfg) {
  Json arr = Json::array();
  for (std::uint64_t i = 1; i <= cfg.i_max; ++i) {
    auto [n, k] = family_coordinates(i);
    const auto conv = convergent_bracket(i);
    Json value = nullptr;
    if (i <= kFamilyValueLimit) value = family_member(i).value.str();
    arr.push_back(Json{{"i", i},
                       {"n", n.str()},
                       {"k", k.str()},
                       {"value", std::move(value)},
                       {"identity_holds", family_identity_holds(n, k)},
                       {"bracket_lo", to_fraction(conv.bracket.lo)},
                       {"bracket_hi", to_fraction(conv.bracket.hi)},
                       {"convergent", conv.holds}});
  }
  return {std::move(arr), {"i", "n", "k", "value", "identity_holds", "bracket_lo", "bracket_hi", "convergent"}};
}

Output run_curve(const RunConfig& cfg) {
  const ShiftPair shift(cfg.a, cfg.b);
  Json j;
  if (cfg.certify) {
    j = to_json(certify(shift));
  } else {
    j = Json{{"a", shift.a()},
             {"b", shift.b()},
             {"degree", shift.degree()},
             {"finiteness", std::string(to_string(classify_finiteness(shift)))}};
  }
  j["curve"] = build_curve(shift).str();
  j["top_form"] = top_form(shift).str();
  if (cfg.lattice) {
    const auto& box = *cfg.lattice;
    Json pts = Json::array();
    for (const auto& [x, y] : lattice_points_in_box(shift, {box.x_lo, box.x_hi}, {box.y_lo, box.y_hi})) {
      pts.push_back(Json::array({x.get_str(), y.get_str()}));
    }
    j["lattice_points"] = std::move(pts);
  }
  return {std::move(j), {}};
}

Output run_census(const RunConfig& cfg) {
  if (cfg.t) return {to_json(multiplicity(*cfg.t)), {}};
  if (!cfg.t_max) throw UsageError("census needs --t or --t-max");
  Json arr = Json::array();
  for (const auto& r : scan_high_multiplicity(*cfg.t_max, cfg.m_min, cfg.workers)) arr.push_back(to_json(r));
  return {std::move(arr), {"t", "count", "occurrences"}};
}

Output run_intersect(const RunConfig& cfg) {
  const ShiftPair s1(cfg.a, cfg.b);
  const ShiftPair s2(cfg.a2, cfg.b2);
  Json arr = Json::array();
  for (const auto& [x, y] : intersect_curves(s1, s2, cfg.x_max, cfg.workers)) {
    arr.push_back(Json{{"x", x.str()}, {"y", y.str()}, {"value", binomial(x, y).str()}});
  }
  return {std::move(arr), {"x", "y", "value"}};
}

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Output run_verify(const RunConfig& cfg) {
  if (cfg.cache_path) {
    const auto solutions = read_cache(*cfg.cache_path);
    Json arr = Json::array();
    for (const auto& s : solutions) arr.push_back(to_json(s));
    return {Json{{"cache", *cfg.cache_path}, {"verified", solutions.size()}, {"solutions", std::move(arr)}}, {}};
  }
  const bool family_ok = family_verify(cfg.i_max);
  Json conv = Json::array();
  bool conv_ok = true;
  for (std::uint64_t i = 1; i <= cfg.i_max; ++i) {
    const bool ok = convergent_bracket_check(i);
    conv_ok = conv_ok && ok;
    conv.push_back(ok);
  }
  if (!family_ok || !conv_ok) throw VerifyFailure("family verification failed");
  return {Json{{"i_max", cfg.i_max}, {"family_verify", family_ok}, {"convergent_bracket", std::move(conv)}}, {}};
}

DispatchResult run_plot(const RunConfig& cfg) {
  const ShiftPair shift(cfg.a, cfg.b);
  if (sgn(cfg.y_step) <= 0) throw UsageError("--y-step must be positive");
  if (cfg.y_to < cfg.y_from) throw UsageError("--y-to must be >= --y-from");
  std::vector<Rat> ys;
  for (Rat y = cfg.y_from; y <= cfg.y_to; y += cfg.y_step) ys.push_back(y);
  const auto branches = real_branches(shift, ys);
  const auto format = cfg.format.value_or(OutputFormat::Csv);
  if (format == OutputFormat::Csv) return {kOk, plot_csv(branches), {}};
  Json arr = Json::array();
  for (const auto& row : branches) {
    Json xs = Json::array();
    for (const auto& iv : row.x) xs.push_back(to_decimal(iv.midpoint(), 12));
    arr.push_back(Json{{"y", to_decimal(row.y, 12)}, {"x", std::move(xs)}});
  }
  RunConfig json_cfg = cfg;
  json_cfg.format = format;
  return {kOk, render(json_cfg, {std::move(arr), {}}), {}};
}

void validate(const RunConfig& cfg) {
  if (cfg.workers < 1) throw UsageError("--workers must be >= 1");
  if (sgn(cfg.precision) <= 0) throw UsageError("--eps must be a positive rational");
  if (cfg.y_max < 1 || cfg.x_max < 1 || cfg.i_max < 1) throw UsageError("bounds must be >= 1");
}

}  // namespace

DispatchResult dispatch(const RunConfig& cfg) {
  try {
    validate(cfg);
    Output result;
    switch (cfg.command) {
      case Command::Zeta: result = run_zeta(cfg); break;
      case Command::Search: result = run_search(cfg); break;
      case Command::Family: result = run_family(cfg); break;
      case Command::Curve: result = run_curve(cfg); break;
      case Command::Census: result = run_census(cfg); break;
      case Command::Intersect: result = run_intersect(cfg); break;
      case Command::Verify: result = run_verify(cfg); break;
      case Command::Plot: return run_plot(cfg);
    }
    return {kOk, render(cfg, result), {}};
  } catch (const UsageError& e) {
    return {kUsage, {}, std::string("usage error: ") + e.what()};
  } catch (const PreconditionViolated& e) {
    return {kUsage, {}, std::string("invalid input: ") + e.what()};
  } catch (const DomainError& e) {
    return {kUsage, {}, std::string("domain error: ") + e.what()};
  } catch (const CacheError& e) {
    return {kIo, {}, e.what()};
  } catch (const CacheIoError& e) {
    return {kIo, {}, std::string("i/o error: ") + e.what()};
  } catch (const VerifyFailure& e) {
    return {kInternal, {}, e.what()};
  } catch (const std::exception& e) {
    return {kInternal, {}, std::string("internal error: ") + e.what()};
  }
}

namespace {

Int parse_int(const std::string& s) {
  try {
    return Int(s, 10);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("not an integer: " + s);
  }
}

LatticeBox parse_box(const std::string& text) {
  // "x0:x1,y0:y1"
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--lattice expects x0:x1,y0:y1");
  auto range = [](const std::string& r) {
    const auto colon = r.find(':', 1);
    if (colon == std::string::npos) throw CLI::ValidationError("--lattice expects x0:x1,y0:y1");
    return std::pair{parse_int(r.substr(0, colon)), parse_int(r.substr(colon + 1))};
  };
  auto [x0, x1] = range(text.substr(0, comma));
  auto [y0, y1] = range(text.substr(comma + 1));
  return {x0, x1, y0, y1};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact laboratory for repeated binomial coefficients C(x,y) = C(x-a,y+b)", "binomrep"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format_text, eps_text, t_text, t_max_text, lattice_text, cache_text;
  std::string y_from_text = "0", y_to_text = "20", y_step_text = "1";
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"text", OutputFormat::Text}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--workers", cfg.workers, "Parallel workers for range partitioning");
  };
  auto shift = [&](CLI::App* sub) {
    sub->add_option("--a", cfg.a, "Row shift a >= 1")->required();
    sub->add_option("--b", cfg.b, "Column shift b >= 1")->required();
  };

  auto* zeta = app.add_subcommand("zeta", "Defining polynomial and enclosure of zeta");
  shift(zeta);
  zeta->add_option("--eps", eps_text, "Enclosure width, e.g. 1e-12 or 1/1000");
  common(zeta);

  auto* srch = app.add_subcommand("search", "All solutions with y <= y-max");
  shift(srch);
  srch->add_option("--y-max", cfg.y_max, "Largest y to scan")->required();
  srch->add_option("--cache", cache_text, "Append solutions to this JSON-lines file");
  common(srch);

  auto* family = app.add_subcommand("family", "Fibonacci family of the (1,1) equation");
  family->add_option("--i-max", cfg.i_max, "Members 1..i-max");
  common(family);

  auto* curve = app.add_subcommand("curve", "Curve polynomial, certificate and lattice points");
  shift(curve);
  curve->add_flag("--certify", cfg.certify, "Run the nonsingularity certificate");
  curve->add_option("--lattice", lattice_text, "Integer zeros in the box x0:x1,y0:y1");
  common(curve);

  auto* census = app.add_subcommand("census", "Multiplicity N(t) or a high-multiplicity scan");
  census->add_option("--t", t_text, "Value t >= 2");
  census->add_option("--t-max", t_max_text, "Scan every t <= t-max");
  census->add_option("--m-min", cfg.m_min, "Minimum multiplicity reported by the scan");
  common(census);

  auto* inter = app.add_subcommand("intersect", "Common lattice points of two shift curves");
  inter->add_option("--a1", cfg.a, "First row shift")->required();
  inter->add_option("--b1", cfg.b, "First column shift")->required();
  inter->add_option("--a2", cfg.a2, "Second row shift")->required();
  inter->add_option("--b2", cfg.b2, "Second column shift")->required();
  inter->add_option("--x-max", cfg.x_max, "Largest x")->required();
  common(inter);

  auto* verify = app.add_subcommand("verify", "Re-verify a cache file or the Fibonacci family");
  verify->add_option("--cache", cache_text, "JSON-lines cache to re-verify");
  verify->add_option("--i-max", cfg.i_max, "Family members to verify");
  common(verify);

  auto* plot = app.add_subcommand("plot", "Real branches x(y) of a curve as CSV");
  shift(plot);
  plot->add_option("--y-from", y_from_text, "First y (rational)");
  plot->add_option("--y-to", y_to_text, "Last y (rational)");
  plot->add_option("--y-step", y_step_text, "Step in y (rational)");
  common(plot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    const std::map<CLI::App*, Command> commands{{zeta, Command::Zeta},     {srch, Command::Search},
                                                {family, Command::Family}, {curve, Command::Curve},
                                                {census, Command::Census}, {inter, Command::Intersect},
                                                {verify, Command::Verify}, {plot, Command::Plot}};
    cfg.command = commands.at(app.get_subcommands().front());
    if (!format_text.empty()) cfg.format = formats.at(format_text);
    if (!eps_text.empty()) cfg.precision = parse_rat(eps_text);
    if (!t_text.empty()) cfg.t = Nat::parse(t_text);
    if (!t_max_text.empty()) cfg.t_max = Nat::parse(t_max_text);
    if (!lattice_text.empty()) cfg.lattice = parse_box(lattice_text);
    if (!cache_text.empty()) cfg.cache_path = cache_text;
    cfg.y_from = parse_rat(y_from_text);
    cfg.y_to = parse_rat(y_to_text);
    cfg.y_step = parse_rat(y_step_text);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    err << "usage error: " << msg.substr(0, msg.find('\n')) << '\n';
    return kUsage;
  } catch (const PreconditionViolated& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const DispatchResult result = dispatch(cfg);
  out << result.out;
  if (!result.err.empty()) err << result.err << '\n';
  return result.status;
}

}  // namespace binomrep::cli
