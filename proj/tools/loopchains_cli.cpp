// Command-line front end: rho / chi / verify / homology over a complex
// described by a JSON input file. Exit codes: 0 success, 1 identity
// violation, 2 input/usage error.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopchains/io.hpp"
#include "loopchains/verify.hpp"

using namespace loopchains;
using nlohmann::json;

namespace {

Ring parse_ring(const std::string& s) {
  if (s == "Z") return Ring::z();
  if (s == "Q") return Ring::q();
  if (s.rfind("Zmod:", 0) == 0) {
    long m = std::stol(s.substr(5));
    return Ring::mod(m);
  }
  throw std::invalid_argument("unknown ring \"" + s + "\" (expected Z, Q, or Zmod:m)");
}

Simplex parse_simplex(const std::string& s) {
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    v.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return Simplex(v);
}

void print_sum(const NecklaceSum& x, const std::string& format, const std::string& command,
               const Simplex& sigma) {
  if (format == "json") {
    json out;
    out["command"] = command;
    out["simplex"] = sigma.verts();
    out["terms"] = json::array();
    for (const std::string& line : x.lines()) {
      std::size_t dot = line.find("·");
      out["terms"].push_back({{"coefficient", line.substr(0, dot)},
                              {"necklace", line.substr(dot + std::string("·").size())}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const std::string& line : x.lines()) std::cout << line << "\n";
    if (x.empty()) std::cout << "0\n";
  }
}

std::optional<QuotientData> quotient_of(const ComplexFile& f) {
  if (!f.collapse) return std::nullopt;
  return QuotientData::make(f.complex, *f.collapse);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"necklace chain complex toolkit: constant-loop chain maps, "
               "verification suites, and weight-truncated homology"};
  app.require_subcommand(1);

  std::string input, ring_str = "Z", format = "text", simplex_str, suite_str;
  int weight = 6, max_dim = 4, degree = 0;
  bool reduce_cohochschild = false, use_collapse = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "complex description (JSON)")->required();
    cmd->add_option("--ring", ring_str, "coefficient ring: Z | Q | Zmod:m");
    cmd->add_option("--weight", weight, "weight bound for truncated computations");
    cmd->add_option("--max-dim", max_dim, "maximal simplex dimension to process");
    cmd->add_option("--format", format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* rho_cmd = app.add_subcommand("rho", "evaluate the chain map ρ on a simplex");
  add_common(rho_cmd);
  rho_cmd->add_option("--simplex", simplex_str, "comma-separated vertex list")->required();

  CLI::App* chi_cmd = app.add_subcommand("chi", "evaluate the chain map χ on a simplex");
  add_common(chi_cmd);
  chi_cmd->add_option("--simplex", simplex_str, "comma-separated vertex list")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run identity verification suites");
  add_common(verify_cmd);
  verify_cmd->add_option("--suite", suite_str, "suite name (default: all)");

  CLI::App* hom_cmd = app.add_subcommand("homology", "weight-truncated homology");
  add_common(hom_cmd);
  hom_cmd->add_option("--degree", degree, "homology degree");
  hom_cmd->add_option("--reduce", [&](const std::vector<std::string>& v) {
        if (v.empty() || v.front() != "cohochschild") return false;
        reduce_cohochschild = true;
        return true;
      }, "reduction route: cohochschild");
  hom_cmd->add_flag("--collapse", use_collapse, "use the collapse block of the input file");

  CLI11_PARSE(app, argc, argv);

  try {
    ComplexFile file = read_complex_file(input);
    const Complex& X = file.complex;
    Ring ring = parse_ring(ring_str);

    if (*rho_cmd) {
      print_sum(rho_simplex(X, parse_simplex(simplex_str)), format, "rho", parse_simplex(simplex_str));
      return 0;
    }
    if (*chi_cmd) {
      print_sum(chi_composed(X, parse_simplex(simplex_str)), format, "chi", parse_simplex(simplex_str));
      return 0;
    }
    if (*verify_cmd) {
      std::vector<std::string> suites =
          suite_str.empty() ? verify_suite_names() : std::vector<std::string>{suite_str};
      std::optional<QuotientData> q = quotient_of(file);
      bool all_pass = true;
      json jout = json::array();
      for (const std::string& name : suites) {
        if (name == "theta" && suite_str.empty() && !q) continue;  // needs collapse data
        VerifyResult r = run_suite(name, X, max_dim, weight, q);
        all_pass = all_pass && r.pass;
        if (format == "json") {
          jout.push_back({{"suite", r.suite}, {"pass", r.pass}, {"detail", r.detail}});
        } else {
          std::cout << (r.pass ? "pass" : "FAIL") << " " << r.suite;
          if (!r.pass) std::cout << ": " << r.detail;
          std::cout << "\n";
        }
      }
      if (format == "json") std::cout << jout.dump(2) << "\n";
      return all_pass ? 0 : 1;
    }
    if (*hom_cmd) {
      if (reduce_cohochschild || use_collapse) {
        if (!file.collapse)
          throw std::invalid_argument("--reduce/--collapse need a \"collapse\" block in the input file");
        QuotientData q = QuotientData::make(X, *file.collapse);
        q.require_cohochschild_shape();
        // Report θ_π of ρ applied to the top-dimensional fundamental cycle, and
        // whether the result is a cycle in the coHochschild complex.
        Chain c = fundamental_cycle(X);
        CoHochschildSum reduced = theta_pi(rho(X, c), q);
        bool cycle = cohochschild_D(reduced, q).empty();
        if (format == "json") {
          json out;
          out["reduction"] = "cohochschild";
          out["degree"] = X.max_dim();
          out["terms"] = json::array();
          for (const std::string& line : reduced.lines()) out["terms"].push_back(line);
          out["is_cycle"] = cycle;
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << "θ_π(ρ(c)) for the top-dimensional chain c:\n";
          for (const std::string& line : reduced.lines()) std::cout << "  " << line << "\n";
          std::cout << "cycle in coHochschild complex: " << (cycle ? "yes" : "no") << "\n";
        }
        return 0;
      }
      TruncatedHomology h = truncated_homology(X, degree, weight, ring);
      if (format == "json") {
        json out;
        out["degree"] = degree;
        out["weight"] = weight;
        out["ring"] = ring.str();
        out["betti"] = h.betti;
        out["torsion"] = json::array();
        for (const Int& t : h.torsion) out["torsion"].push_back(t.str());
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "degree " << degree << "  weight " << weight << "  ring " << ring.str()
                  << "  betti " << h.betti;
        if (!h.torsion.empty()) {
          std::cout << "  torsion";
          for (const Int& t : h.torsion) std::cout << " " << t;
        }
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
