// Command-line front end: computes log Grothendieck classes of toric fans,
// s.n.c. pairs and class expressions, runs the verification suites, refines
// fans by stellar subdivision, and evaluates the cohomology oracle presets.
//
// Exit status: 0 ok, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "logmot/json_io.hpp"
#include "logmot/verify.hpp"

namespace {

using namespace logmot;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

std::string completeness_name(Completeness c) {
  switch (c) {
    case Completeness::complete: return "complete";
    case Completeness::incomplete: return "incomplete";
    default: return "unknown";
  }
}

// The invariant block printed for every class. Values whose preconditions
// fail (negative L-exponents outside the unlocalized ring) render as
// "undefined".
json class_report(const LogClass& cls) {
  json j;
  j["class"]["scalar"] = to_string(cls.scalar_part());
  j["class"]["p_part"] = to_string(cls.p_part());
  json& inv = j["invariants"];
  inv["tau"] = to_string(tau(cls));
  inv["rho"] = to_string(rho(cls));
  try {
    inv["chi_log"] = static_cast<long long>(chi_log(cls));
  } catch (const domain_violation&) {
    inv["chi_log"] = nullptr;
  }
  try {
    inv["e_tau"] = to_string(e_of(tau(cls)));
  } catch (const domain_violation&) {
    inv["e_tau"] = nullptr;
  }
  try {
    EPolynomial t = t_of(cls);
    EBarPair tb = ebar_of(t);
    inv["t"] = to_string(t);
    inv["tbar"] = {to_string(tb.first, "u"), to_string(tb.second, "v")};
  } catch (const domain_violation&) {
    inv["t"] = nullptr;
    inv["tbar"] = nullptr;
  }
  try {
    inv["b"] = to_string(b_of(cls), "v");
  } catch (const domain_violation&) {
    inv["b"] = nullptr;
  }
  return j;
}

void print_class_report(std::ostream& os, const json& j) {
  const json& inv = j.at("invariants");
  std::string p = j.at("class").at("p_part").get<std::string>();
  std::string scalar = j.at("class").at("scalar").get<std::string>();
  if (p == "0")
    os << "class: " << scalar << "\n";
  else if (scalar == "0")
    os << "class: (" << p << ")*P\n";
  else
    os << "class: " << scalar << " + (" << p << ")*P\n";
  auto field = [&](const char* key, const char* label) {
    os << label << ": ";
    if (inv.at(key).is_null())
      os << "undefined";
    else if (inv.at(key).is_number())
      os << inv.at(key).get<long long>();
    else
      os << inv.at(key).get<std::string>();
    os << "\n";
  };
  field("tau", "tau");
  field("rho", "rho");
  field("chi_log", "chi^log");
  field("e_tau", "e(tau)");
  field("t", "t");
  if (inv.at("tbar").is_null())
    os << "tbar: undefined\n";
  else
    os << "tbar: (" << inv.at("tbar")[0].get<std::string>() << ", "
       << inv.at("tbar")[1].get<std::string>() << ")\n";
  field("b", "b");
}

json fan_report(const Fan& fan) {
  json j;
  j["dim"] = fan.ambient_dim();
  j["rays"] = fan.rays().size();
  j["cones"] = fan.cones().size();
  j["chi_c"] = chi_c_fan(fan).str();
  j["smooth"] = is_smooth(fan).all_smooth;
  j["complete"] = completeness_name(is_complete(fan));
  j["fully_validated"] = fan.fully_validated();
  return j;
}

RayVec parse_ray_csv(const std::string& text) {
  RayVec w;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      w.push_back(std::stoll(part, &used));
      while (used < part.size()) {
        if (!std::isspace(static_cast<unsigned char>(part[used])))
          throw std::invalid_argument(part);
        ++used;
      }
    } catch (const std::exception&) {
      throw parse_failure("--ray expects comma-separated integers, got '" +
                          part + "'");
    }
  }
  if (w.empty()) throw parse_failure("--ray expects comma-separated integers");
  return w;
}

int cmd_class(const std::string& expression, const std::string& input_path,
              const std::string& symbols_path, bool as_json) {
  auto table = SymbolTable::create();
  if (!symbols_path.empty()) {
    json syms = load_json_file(symbols_path);
    declare_symbols_from_json(
        syms.is_object() && syms.contains("symbols") ? syms.at("symbols") : syms,
        *table);
  }

  json out;
  if (!input_path.empty()) {
    json j = load_json_file(input_path);
    if (j.is_object() && j.contains("rays")) {
      Fan fan = validate_fan(fan_data_from_json(j));
      out = class_report(toric_class(fan));
      out["fan"] = fan_report(fan);
    } else if (j.is_object() && j.contains("components")) {
      SncSpec spec = snc_from_json(j, table);
      out = class_report(snc_class(spec));
      out["snc"]["rho_expansion"] = to_string(rho_expansion(spec));
      ChiYBridge bridge = chi_y_bridge(spec);
      out["snc"]["chi_y"] = {{"lhs", to_string(bridge.lhs, "u")},
                             {"rhs", to_string(bridge.rhs, "u")},
                             {"equal", bridge.equal}};
    } else {
      throw parse_failure("input file is neither a fan (\"rays\") nor an "
                          "s.n.c. spec (\"components\")");
    }
  } else if (!expression.empty()) {
    out = class_report(parse_log_class(expression, table));
  } else {
    throw parse_failure("class needs an expression or --input <path>");
  }

  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    print_class_report(std::cout, out);
    if (out.contains("fan")) {
      const json& f = out["fan"];
      std::cout << "fan: dim " << f["dim"] << ", " << f["rays"] << " rays, "
                << f["cones"] << " cones, chi_c " << f["chi_c"].get<std::string>()
                << ", " << (f["smooth"].get<bool>() ? "smooth" : "not smooth")
                << ", " << f["complete"].get<std::string>() << "\n";
    }
    if (out.contains("snc")) {
      std::cout << "rho expansion: "
                << out["snc"]["rho_expansion"].get<std::string>() << "\n";
      const json& c = out["snc"]["chi_y"];
      std::cout << "chi_y bridge: lhs " << c["lhs"].get<std::string>() << ", rhs "
                << c["rhs"].get<std::string>() << ", "
                << (c["equal"].get<bool>() ? "equal" : "NOT equal") << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, bool as_json) {
  std::vector<CheckResult> results = verify_suite(suite);
  bool all_pass = true;
  json arr = json::array();
  for (const CheckResult& r : results) {
    all_pass = all_pass && r.pass;
    arr.push_back({{"suite", r.suite},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"detail", r.detail}});
    if (!as_json) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.suite << "] " << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
    }
  }
  if (as_json)
    std::cout << json{{"checks", arr}, {"all_pass", all_pass}}.dump(2) << "\n";
  else
    std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  return all_pass ? kExitOk : kExitVerification;
}

int cmd_subdivide(const std::string& input_path, const std::string& ray_csv,
                  const std::string& output_path, bool as_json) {
  Fan fan = validate_fan(fan_data_from_json(load_json_file(input_path)));
  RayVec w = parse_ray_csv(ray_csv);
  Fan refined = stellar_subdivide(fan, w);

  LogClass before = toric_class(fan);
  LogClass after = toric_class(refined);
  bool equal = before == after && chi_c_fan(fan) == chi_c_fan(refined);

  json out;
  out["before"] = class_report(before);
  out["after"] = class_report(after);
  out["classes_equal"] = equal;
  out["fan"] = fan_to_json(refined);

  if (!output_path.empty()) {
    std::ofstream of(output_path);
    if (!of) throw parse_failure("cannot write '" + output_path + "'");
    of << out["fan"].dump(2) << "\n";
  }

  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "before: " << to_string(before) << "\n";
    std::cout << "after:  " << to_string(after) << "\n";
    std::cout << "classes " << (equal ? "equal" : "DIFFER") << "\n";
    if (output_path.empty())
      std::cout << out["fan"].dump(2) << "\n";
    else
      std::cout << "refined fan written to " << output_path << "\n";
  }
  return equal ? kExitOk : kExitVerification;
}

int cmd_hodge(bool as_json) {
  json out;
  json& p1 = out["p1_bundles"];
  struct Named {
    const char* name;
    SplitBundle bundle;
  };
  for (const Named& preset :
       {Named{"toric (Omega^log = O)", {{0}}},
        Named{"one point (Omega^log = O(-1))", {{-1}}},
        Named{"trivial log (Omega^log = O(-2))", {{-2}}},
        Named{"(P^1, N) (Omega^log = O(-2) + O)", {{-2, 0}}}}) {
    ElogResult r = elog_p1(preset.bundle);
    EBarPair eb = ebar_of(r.e);
    json entry;
    entry["E"] = to_string(r.e);
    entry["Ebar"] = {to_string(eb.first, "u"), to_string(eb.second, "v")};
    json table = json::array();
    for (const auto& [pq, dim] : r.table.entries)
      table.push_back({{"p", pq.first}, {"q", pq.second}, {"h", dim}});
    entry["table"] = table;
    p1[preset.name] = entry;
  }

  json& cf = out["constant_free"];
  cf = json::array();
  for (const auto& [base, dim] : presets::constant_free_bases()) {
    for (unsigned r = 0; r <= 3; ++r) {
      EPolynomial oracle = elog_constant_free({e_of(base), r, dim});
      EBarPair ring = tbar_of(LogClass(base) * LogClass::point().pow(r));
      cf.push_back({{"base", to_string(base)},
                    {"rank", r},
                    {"E", to_string(oracle)},
                    {"Ebar_matches_tbar", ebar_of(oracle) == ring}});
    }
  }

  json& toric = out["smooth_proper_toric"];
  toric = json::array();
  for (unsigned n = 0; n <= 3; ++n)
    toric.push_back({{"n", n}, {"E", to_string(elog_smooth_proper_toric(n))}});

  CounterexampleCertificate cert = counterexample_certificate();
  out["counterexample"] = {
      {"difference", to_string(cert.difference)},
      {"odd_witness", "u"},
      {"reduction_log_side", to_string(cert.reduction_log_side, "u")},
      {"reduction_trivial_side", to_string(cert.reduction_trivial_side, "u")},
      {"consistent", cert.consistent}};

  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "P^1 presets:\n";
    for (const auto& [name, entry] : out["p1_bundles"].items())
      std::cout << "  " << name << ": E = " << entry["E"].get<std::string>()
                << ", Ebar = (" << entry["Ebar"][0].get<std::string>() << ", "
                << entry["Ebar"][1].get<std::string>() << ")\n";
    std::cout << "constant free presets (Ebar vs ring tbar):\n";
    for (const json& entry : out["constant_free"])
      std::cout << "  base " << entry["base"].get<std::string>() << ", rank "
                << entry["rank"].get<unsigned>() << ": E = "
                << entry["E"].get<std::string>() << ", "
                << (entry["Ebar_matches_tbar"].get<bool>() ? "matches" : "MISMATCH")
                << "\n";
    std::cout << "smooth proper toric: ";
    for (const json& entry : out["smooth_proper_toric"])
      std::cout << "n=" << entry["n"].get<unsigned>() << ": "
                << entry["E"].get<std::string>() << "  ";
    std::cout << "\ncounterexample difference: "
              << out["counterexample"]["difference"].get<std::string>() << " ("
              << (cert.consistent ? "consistent" : "INCONSISTENT") << ")\n";
  }
  return cert.consistent ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in the log Grothendieck ring of varieties"};
  app.require_subcommand(1);

  std::string expression, input_path, symbols_path, suite = "all", ray_csv,
                                                    output_path;
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  CLI::App* c_class =
      app.add_subcommand("class", "class and invariants of a fan file, s.n.c. "
                                  "file or expression");
  c_class->add_option("expression", expression, "class expression over L, P");
  c_class->add_option("--input", input_path, "fan or s.n.c. JSON file");
  c_class->add_option("--symbols", symbols_path, "symbol declarations JSON");

  CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("--suite", suite,
                       "presentation|toric|snc|hodge|duality|all");

  CLI::App* c_sub = app.add_subcommand("subdivide", "stellar subdivision of a fan");
  c_sub->add_option("--input", input_path, "fan JSON file")->required();
  c_sub->add_option("--ray", ray_csv, "new ray as comma-separated integers")
      ->required();
  c_sub->add_option("--output", output_path, "write the refined fan here");

  CLI::App* c_hodge =
      app.add_subcommand("hodge", "run the cohomology oracle on its presets");
  (void)c_hodge;

  CLI::App* c_snc = app.add_subcommand("snc", "class of an s.n.c. pair file");
  c_snc->add_option("--input", input_path, "s.n.c. JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (c_class->parsed())
      return cmd_class(expression, input_path, symbols_path, as_json);
    if (c_verify->parsed()) return cmd_verify(suite, as_json);
    if (c_sub->parsed())
      return cmd_subdivide(input_path, ray_csv, output_path, as_json);
    if (c_hodge->parsed()) return cmd_hodge(as_json);
    if (c_snc->parsed()) return cmd_class("", input_path, "", as_json);
  } catch (const parse_failure& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const domain_violation& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
