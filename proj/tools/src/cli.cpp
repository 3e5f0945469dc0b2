#include "triplet_cli/cli.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triplet/characters.hpp"
#include "triplet/serialize.hpp"
#include "triplet/verify.hpp"

namespace triplet::cli {

namespace {

using ordered = nlohmann::ordered_json;

// Bad command-line input detected before any computation.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommonOptions {
  std::string type;
  int p = 0;
  int order = 20;
  std::uint64_t weyl_cap = kDefaultWeylCap;
  std::string output = "json";
  bool timings = false;
};

RootSystem parse_root_system(const std::string& name) {
  try {
    return RootSystem(CartanType::parse(name));
  } catch (const std::invalid_argument& e) {
    throw ArgumentError(e.what());
  }
}

ModelParams make_model(const std::string& type, int p) {
  RootSystem rs = parse_root_system(type);
  try {
    return ModelParams(std::move(rs), p);
  } catch (const std::invalid_argument& e) {
    throw ArgumentError(e.what());
  }
}

std::vector<std::int64_t> parse_ints(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ArgumentError("cannot parse " + what + " '" + text + "': expected comma-separated integers");
    }
  }
  if (out.empty()) throw ArgumentError(what + " is empty");
  return out;
}

// "0" is the zero vector; otherwise one integer per simple root.
IntWeight parse_weight(const RootSystem& rs, const std::string& text, const std::string& what) {
  const auto v = parse_ints(text, what);
  if (v.size() == 1 && v[0] == 0) return rs.zero();
  if (static_cast<int>(v.size()) != rs.rank())
    throw ArgumentError(what + " needs " + std::to_string(rs.rank()) + " coordinates, got " +
                        std::to_string(v.size()));
  std::vector<Int> coords(v.begin(), v.end());
  return IntWeight(std::move(coords));
}

Digits parse_digits(const ModelParams& mp, const std::string& text) {
  const IntWeight w = parse_weight(mp.rs(), text, "--sp");
  Digits sp;
  for (const auto& c : w.coords()) sp.push_back(static_cast<int>(to_i64(c)));
  try {
    validate(mp, sp);
  } catch (const std::invalid_argument& e) {
    throw ArgumentError(e.what());
  }
  return sp;
}

OutputFormat output_format(const std::string& name) {
  try {
    return parse_format(name);
  } catch (const std::invalid_argument& e) {
    throw ArgumentError(e.what());
  }
}

ordered weight_json(const IntWeight& w) {
  ordered a = ordered::array();
  for (const auto& c : w.coords()) a.push_back(to_i64(c));
  return a;
}

ordered rational_json(const Rational& r) { return ordered{{"num", num(r)}, {"den", den(r)}}; }

ordered lambda_json(const LambdaParam& lam) {
  ordered sp = ordered::array();
  for (int s : lam.sp) sp.push_back(s);
  return ordered{{"lambda0", weight_json(lam.lambda0)}, {"sp", sp}};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string omega_name(const RootSystem& rs, const IntWeight& w) {
  if (w.is_zero()) return "0";
  for (int i = 0; i < rs.rank(); ++i)
    if (w == rs.fundamental(i)) return "w" + std::to_string(i + 1);
  return to_string(w);
}

// Renders a flat list of key/value rows in csv or aligned text.
std::string key_values(const std::vector<std::pair<std::string, std::string>>& rows, OutputFormat f) {
  std::ostringstream out;
  if (f == OutputFormat::csv) {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << k << ",\"" << v << "\"\n";
    return out.str();
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return out.str();
}

std::string cmd_info(const CommonOptions& o) {
  const RootSystem rs = parse_root_system(o.type);
  const OutputFormat f = output_format(o.output);
  const int l = rs.rank();

  std::vector<std::string> classes;
  for (const auto& w : lambda0_set(rs)) classes.push_back(omega_name(rs, w));
  std::vector<std::string> exps;
  for (int e : rs.exponents()) exps.push_back(std::to_string(e));

  if (f == OutputFormat::json) {
    ordered j;
    j["type"] = rs.name();
    j["rank"] = l;
    ordered cartan = ordered::array();
    ordered inv = ordered::array();
    for (int i = 0; i < l; ++i) {
      ordered row = ordered::array();
      ordered irow = ordered::array();
      for (int k = 0; k < l; ++k) {
        row.push_back(to_i64(rs.cartan(i, k)));
        irow.push_back(to_string(rs.inv_cartan(i, k)));
      }
      cartan.push_back(row);
      inv.push_back(irow);
    }
    j["cartan"] = cartan;
    j["inv_cartan"] = inv;
    j["rho"] = weight_json(rs.rho());
    j["theta"] = weight_json(rs.theta());
    ordered theta_root = ordered::array();
    for (const auto& c : rs.theta_root()) theta_root.push_back(to_i64(c));
    j["theta_root_coords"] = theta_root;
    j["rho_norm2"] = rational_json(rs.norm2(rs.rho()));
    j["coxeter_number"] = rs.coxeter_number();
    j["dim_g"] = rs.dim_g();
    j["positive_roots"] = rs.positive_roots().size();
    j["exponents"] = rs.exponents();
    j["weyl_order"] = to_i64(rs.weyl_order());
    j["center_order"] = to_i64(rs.det());
    ordered lambda0 = ordered::array();
    for (const auto& w : lambda0_set(rs))
      lambda0.push_back(ordered{{"weight", weight_json(w)}, {"name", omega_name(rs, w)}});
    j["lambda0"] = lambda0;
    return j.dump(2) + "\n";
  }

  std::vector<std::string> inv_rows;
  for (int i = 0; i < l; ++i) {
    std::vector<std::string> row;
    for (int k = 0; k < l; ++k) row.push_back(to_string(rs.inv_cartan(i, k)));
    inv_rows.push_back("[" + join(row, " ") + "]");
  }
  std::string theta_root;
  for (std::size_t i = 0; i < rs.theta_root().size(); ++i)
    theta_root += (i ? "," : "") + std::to_string(to_i64(rs.theta_root()[i]));
  return key_values({{"type", rs.name()},
                     {"rank", std::to_string(l)},
                     {"rho", to_string(rs.rho())},
                     {"theta", to_string(rs.theta()) + " = root coords (" + theta_root + ")"},
                     {"|rho|^2", to_string(rs.norm2(rs.rho()))},
                     {"h", std::to_string(rs.coxeter_number())},
                     {"dim g", std::to_string(rs.dim_g())},
                     {"positive roots", std::to_string(rs.positive_roots().size())},
                     {"exponents", join(exps, " ")},
                     {"|W|", std::to_string(to_i64(rs.weyl_order()))},
                     {"|P/Q|", std::to_string(to_i64(rs.det()))},
                     {"Lambda0", "{" + join(classes, ", ") + "}"},
                     {"inverse Cartan", join(inv_rows, " ")}},
                    f);
}

std::string cmd_lambda_list(const CommonOptions& o, bool narrow_only) {
  const ModelParams mp = make_model(o.type, o.p);
  const OutputFormat f = output_format(o.output);
  const auto& rs = mp.rs();

  struct Row {
    LambdaParam lam, dual, dual_module;
    Rational delta;
    bool is_narrow;
  };
  std::vector<Row> rows;
  for (const auto& lam : enumerate_lambda(mp)) {
    const bool is_narrow = narrow(mp, lam.sp);
    if (narrow_only && !is_narrow) continue;
    rows.push_back({lam, dual_param(mp, lam), dual_module_param(mp, lam), conformal_weight(mp, lam.scaled()),
                    is_narrow});
  }

  if (f == OutputFormat::json) {
    ordered j;
    j["type"] = rs.name();
    j["p"] = mp.p();
    j["count"] = rows.size();
    j["central_charge"] = rational_json(mp.central_charge());
    ordered list = ordered::array();
    for (const auto& r : rows) {
      ordered e = lambda_json(r.lam);
      e["delta"] = rational_json(r.delta);
      e["narrow"] = r.is_narrow;
      e["dual_param"] = lambda_json(r.dual);
      e["dual_module_param"] = lambda_json(r.dual_module);
      list.push_back(e);
    }
    j["lambdas"] = list;
    return j.dump(2) + "\n";
  }

  const auto digits = [f](const Digits& sp) {
    std::vector<std::string> parts;
    for (int s : sp) parts.push_back(std::to_string(s));
    return join(parts, f == OutputFormat::csv ? " " : ",");
  };
  std::ostringstream out;
  if (f == OutputFormat::csv) {
    out << "lambda0,sp,delta,narrow,dual_lambda0,dual_sp,dual_module_lambda0,dual_module_sp\n";
    for (const auto& r : rows)
      out << omega_name(rs, r.lam.lambda0) << ',' << digits(r.lam.sp) << ',' << to_string(r.delta) << ','
          << (r.is_narrow ? "true" : "false") << ',' << omega_name(rs, r.dual.lambda0) << ',' << digits(r.dual.sp)
          << ',' << omega_name(rs, r.dual_module.lambda0) << ',' << digits(r.dual_module.sp) << '\n';
    return out.str();
  }
  std::vector<std::vector<std::string>> table{
      {"lambda0", "sp", "delta", "narrow", "dual", "dual_module"}};
  for (const auto& r : rows)
    table.push_back({omega_name(rs, r.lam.lambda0), "(" + digits(r.lam.sp) + ")", to_string(r.delta),
                     r.is_narrow ? "yes" : "no",
                     omega_name(rs, r.dual.lambda0) + " (" + digits(r.dual.sp) + ")",
                     omega_name(rs, r.dual_module.lambda0) + " (" + digits(r.dual_module.sp) + ")"});
  std::vector<std::size_t> width(table[0].size(), 0);
  for (const auto& row : table)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : table) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c)
      line += row[c] + (c + 1 < row.size() ? std::string(width[c] - row[c].size() + 2, ' ') : "");
    out << line << '\n';
  }
  out << rows.size() << " parameters\n";
  return out.str();
}

std::string cmd_char(const CommonOptions& o, const std::string& kind, const std::string& alpha_text,
                     const std::string& lambda0_text, const std::string& sp_text) {
  const ModelParams mp = make_model(o.type, o.p);
  const OutputFormat f = output_format(o.output);
  const auto& rs = mp.rs();
  if (o.order < 0) throw ArgumentError("--order must be >= 0");
  const IntWeight alpha = parse_weight(rs, alpha_text, "--alpha");
  const IntWeight lambda0 = parse_weight(rs, lambda0_text, "--lambda0");
  const Digits sp = parse_digits(mp, sp_text);
  const LambdaParam lam{lambda0, sp, mp.p()};
  try {
    validate(mp, lam);
    if (kind == "w" || kind == "w-affine") validate_alpha(rs, alpha);
  } catch (const std::invalid_argument& e) {
    throw ArgumentError(e.what());
  }
  if (kind == "lattice") return format_series(lattice_char(mp, lam, o.order), f);
  if (kind == "w-affine" && !narrow(mp, sp)) throw NotNarrow(mp, sp);

  const WeylGroup group(rs, o.weyl_cap);
  if (kind == "w") return format_series(w_char(mp, group, alpha, lam, o.order), f);
  if (kind == "w-affine") return format_series(w_char_affine(mp, group, alpha, lam, o.order), f);
  return format_series(module_char(mp, group, lam, o.order), f);
}

struct VerifyOptions {
  std::vector<std::string> types;
  std::vector<int> ps;
  int order = 30;
  int compare_order = 20;
  int alpha_extra = 3;
  std::size_t reduced_words = 1;
};

std::pair<std::string, bool> cmd_verify(const CommonOptions& o, const VerifyOptions& v, const std::string& suite) {
  const OutputFormat f = output_format(o.output);
  const auto& names = check_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw ArgumentError("unknown check '" + suite + "'; known checks: all, " + join(names, ", "));

  GridSpec grid = GridSpec::defaults();
  if (!v.types.empty()) {
    grid.types.clear();
    for (const auto& t : v.types) grid.types.push_back(parse_root_system(t).type());
  }
  grid.p_values = v.ps;
  for (int p : v.ps)
    if (p < 2) throw ArgumentError("p must be an integer >= 2, got " + std::to_string(p));
  if (v.order < 0 || v.compare_order < 0 || v.alpha_extra < 0)
    throw ArgumentError("orders and --alpha-extra must be >= 0");
  grid.order = v.order;
  grid.compare_order = v.compare_order;
  grid.alpha_extra = v.alpha_extra;
  grid.weyl_cap = o.weyl_cap;
  grid.reduced_words = v.reduced_words;

  std::vector<CheckReport> reports;
  if (suite == "all")
    reports = run_all(grid);
  else
    reports.push_back(run_check(suite, grid));
  return {format_reports(reports, f, o.timings), all_passed(reports)};
}

void add_common(CLI::App* app, CommonOptions& o, bool needs_p) {
  app->add_option("--type,-t", o.type, "Cartan type such as A2, D4, E6")->required();
  if (needs_p) app->add_option("-p,--p", o.p, "The integer p >= 2")->required();
  app->add_option("--output,-o", o.output, "json, csv or text")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact parameter combinatorics and characters of higher-rank triplet W-algebra modules"};
  app.name("triplet");
  app.require_subcommand(1);

  CommonOptions info_o, list_o, char_o, verify_o;
  bool narrow_only = false;
  std::string kind, alpha = "0", lambda0 = "0", sp = "0", suite;
  VerifyOptions vopt;

  auto* info = app.add_subcommand("info", "Root system data and Lambda0");
  add_common(info, info_o, false);

  auto* list = app.add_subcommand("lambda-list", "All module parameters lambda with conformal weights and duals");
  add_common(list, list_o, true);
  list->add_flag("--narrow-only", narrow_only, "Keep only narrow parameters");

  auto* chr = app.add_subcommand("char", "A character as an exact q-series");
  chr->add_option("kind", kind, "w, w-affine, module or lattice")
      ->required()
      ->check(CLI::IsMember({"w", "w-affine", "module", "lattice"}));
  add_common(chr, char_o, true);
  chr->add_option("--alpha", alpha, "alpha in P_+ cap Q, fundamental-weight coordinates (0 for zero)")
      ->capture_default_str();
  chr->add_option("--lambda0", lambda0, "lambda0 in Lambda0, fundamental-weight coordinates")->capture_default_str();
  chr->add_option("--sp", sp, "digits s_1,...,s_l in [0, p-1] (0 for all zero)")->capture_default_str();
  chr->add_option("--order", char_o.order, "Number of terms past the leading one")->capture_default_str();
  chr->add_option("--weyl-cap", char_o.weyl_cap, "Largest Weyl group to enumerate")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Run oracle-backed checks");
  ver->add_option("suite", suite, "A check name or all")->required();
  ver->add_option("--type,-t", vopt.types, "Cartan types, comma separated (default A1,A2,A3)")->delimiter(',');
  ver->add_option("-p,--p", vopt.ps, "Values of p, comma separated (default h-1..h+2 per type)")->delimiter(',');
  ver->add_option("--order", vopt.order, "Order for single-series checks")->capture_default_str();
  ver->add_option("--compare-order", vopt.compare_order, "Order for character comparisons")->capture_default_str();
  ver->add_option("--alpha-extra", vopt.alpha_extra, "alpha ranges over |alpha + rho| <= |rho| + this")
      ->capture_default_str();
  ver->add_option("--reduced-words", vopt.reduced_words, "Reduced words of w0 per point in lemma216_equiv")
      ->capture_default_str();
  ver->add_option("--weyl-cap", verify_o.weyl_cap, "Largest Weyl group to enumerate")->capture_default_str();
  ver->add_option("--output,-o", verify_o.output, "json, csv or text")->capture_default_str();
  ver->add_flag("--timings", verify_o.timings, "Include runtimes in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kBadArguments;
  }

  try {
    if (*info) {
      out << cmd_info(info_o);
    } else if (*list) {
      out << cmd_lambda_list(list_o, narrow_only);
    } else if (*chr) {
      out << cmd_char(char_o, kind, alpha, lambda0, sp);
    } else if (*ver) {
      const auto [text, passed] = cmd_verify(verify_o, vopt, suite);
      out << text;
      return passed ? kOk : kVerifyFailed;
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kBadArguments;
  } catch (const NotNarrow& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const WeylCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace triplet::cli
