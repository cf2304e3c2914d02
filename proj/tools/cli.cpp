#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ews/report.hpp"

using namespace ews;

namespace {

SimpleWeight parse_coeffs(const std::string& s) {
  SimpleWeight w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.push_back(Int(tok));
  return w;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weight semigroup computations for eight spherical homogeneous spaces"};
  app.require_subcommand(1);

  int case_id = 0, n = 0, m = 0, l = 0, trials = 20, degree_bound = 3;
  std::uint64_t seed = 1;
  std::string format;  // per-command default applied after parsing
  std::string lambda_str;

  auto add_case = [&](CLI::App* c, bool sizes) {
    c->add_option("--case", case_id, "case number 1..8")->required();
    if (sizes) {
      c->add_option("--n", n, "first size parameter");
      c->add_option("--m", m, "second size parameter");
      c->add_option("--l", l, "third size parameter");
    }
    c->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  };

  CLI::App* tab = app.add_subcommand("table", "list the extended weight semigroup generators");
  add_case(tab, true);

  CLI::App* ver = app.add_subcommand("verify", "run every verification suite for a case");
  add_case(ver, true);
  ver->add_option("--trials", trials, "random trials per check");
  ver->add_option("--seed", seed, "random seed");

  CLI::App* bra = app.add_subcommand("branch", "restrict a weight along the case's chain");
  bra->add_option("--case", case_id, "1 for the SL chain, 2 for the Spin chain")->required();
  bra->add_option("--n", n, "smaller group index of the chain")->required();
  bra->add_option("lambda", lambda_str, "comma separated fundamental coefficients")->required();
  bra->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* spe = app.add_subcommand("spectrum", "invariant spectrum of a diagonal case");
  spe->add_option("--case", case_id, "1 or 2")->required();
  spe->add_option("--n", n, "smaller group index of the chain")->required();
  spe->add_option("--degree-bound", degree_bound, "coefficient sum bound on the restricted weight");
  spe->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* irr = app.add_subcommand("irreducible", "per-generator irreducibility certificates");
  add_case(irr, true);

  CLI::App* can = app.add_subcommand("canonical", "reduce a random point to canonical form");
  add_case(can, true);
  can->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tab->parsed() || ver->parsed() || irr->parsed() || can->parsed()) {
      CaseParams p{n, m, l};
      std::string why;
      if (!params_valid(case_id, p, &why)) {
        std::cerr << "error: " << why << "\n";
        return 2;
      }
      CaseData cd = make_case(case_id, p);
      if (tab->parsed()) {
        if (format == "tsv")
          std::cout << table_tsv(cd);
        else
          print(table_report(cd));
        return 0;
      }
      if (ver->parsed()) {
        bool ok = false;
        Json j = verify_report(cd, trials, seed, ok);
        if (format == "tsv") {
          auto entry_ok = [](const Json& val) {
            if (val.is_array()) {
              for (const auto& e : val)
                if (!e.value("ok", false)) return false;
              return true;
            }
            return val.value("ok", false);
          };
          std::cout << "# schema 1\n";
          for (const auto& [name, val] : j["checks"].items())
            std::cout << name << "\t" << (entry_ok(val) ? "ok" : "FAIL") << "\n";
          std::cout << "all\t" << (ok ? "ok" : "FAIL") << "\n";
        } else {
          print(j);
        }
        return ok ? 0 : 1;
      }
      if (irr->parsed()) {
        bool ok = false;
        if (format == "json") {
          print(irreducible_report(cd, ok));
        } else {
          std::cout << irreducible_tsv(cd, ok);
        }
        return ok ? 0 : 1;
      }
      bool ok = false;
      if (format == "tsv")
        std::cout << canonical_tsv(cd, seed, ok);
      else
        print(canonical_report(cd, seed, ok));
      return ok ? 0 : 1;
    }
    if (bra->parsed()) {
      bool ok = false;
      Json j = branch_report(case_id, n, parse_coeffs(lambda_str), ok);
      if (format == "tsv") {
        std::cout << "# schema 1\n";
        for (const auto& e : j["constituents"]) {
          std::string w;
          for (const auto& c : e["weight"]) {
            if (!w.empty()) w += ",";
            w += std::to_string(c.get<long>());
          }
          std::cout << w << "\t" << e["multiplicity"].get<long>() << "\n";
        }
      } else {
        print(j);
      }
      return ok ? 0 : 1;
    }
    // spectrum
    if (format.empty()) format = "tsv";
    if (format == "json")
      print(spectrum_report(case_id, n, degree_bound));
    else
      std::cout << spectrum_tsv(case_id, n, degree_bound);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
