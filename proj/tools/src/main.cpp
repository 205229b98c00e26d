#include "realab/cli/commands.hpp"
#include "realab/cli/paper_check.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using realab::cli::json;
namespace cli = realab::cli;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw realab::InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw realab::InputError("malformed JSON in " + path + ": " + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice computations for real abelian varieties"};
  app.require_subcommand(1);

  std::string input;
  std::size_t k = 1;
  auto* cohomology = app.add_subcommand("cohomology", "Hochschild-Serre profile of H^2k_G(Z(k))");
  cohomology->add_option("input", input, "torus JSON file")->required();
  cohomology->add_option("--k", k, "half degree");

  auto* pi0 = app.add_subcommand("pi0", "components and Betti numbers of the real locus");
  pi0->add_option("input", input, "torus JSON file")->required();

  auto* budget = app.add_subcommand("budget", "torsion budget of H^4_G(Z(2))_0 for threefolds");
  budget->add_option("input", input, "torus JSON file")->required();

  auto* classify = app.add_subcommand("classify", "type (r, alpha) of a period matrix");
  classify->add_option("input", input, "period JSON file")->required();

  auto* principalize = app.add_subcommand("principalize", "principalize a polarized lattice");
  principalize->add_option("input", input, "polarized lattice JSON file")->required();

  auto* minimal = app.add_subcommand("minimal-class", "theta^(g-1)/(g-1)! of a principal form");
  minimal->add_option("input", input, "polarized lattice JSON file")->required();

  auto* fourier = app.add_subcommand("fourier", "cohomological Fourier transform");
  fourier->add_option("input", input, "JSON file with torus and element")->required();

  std::size_t kn = 0;
  long kk = 0;
  auto* kunneth = app.add_subcommand("kunneth", "Kunneth decomposition of H^1(G, H^n(Z(k)))");
  kunneth->add_option("input", input, "JSON file with a factors array")->required();
  kunneth->add_option("--n", kn, "cohomological degree")->required();
  kunneth->add_option("--k", kk, "twist");

  auto* hecke = app.add_subcommand("hecke", "Hecke orbit experiments");
  hecke->require_subcommand(1);
  cli::HeckeApproachOptions hopt;
  std::string target_file;
  auto* approach = hecke->add_subcommand("approach", "search the orbit for a target matrix");
  approach->add_option("--g", hopt.g, "dimension");
  approach->add_option("--type", hopt.type, "type as r or r,alpha");
  approach->add_option("--p", hopt.p, "first odd prime");
  approach->add_option("--q", hopt.q, "second odd prime");
  approach->add_option("--target", target_file, "JSON file with target (and optional start)")
      ->required();
  approach->add_option("--budget", hopt.budget, "generator applications");
  approach->add_option("--seed", hopt.seed, "random seed");

  unsigned long sp = 3, sq = 5;
  long bound = 30;
  std::string starget = "2", tolerance = "1/100";
  auto* sunit = hecke->add_subcommand("sunit", "closest p^n q^m to a target");
  sunit->add_option("--p", sp, "first odd prime");
  sunit->add_option("--q", sq, "second odd prime");
  sunit->add_option("--bound", bound, "exponent bound");
  sunit->add_option("--target", starget, "positive rational target");
  sunit->add_option("--tolerance", tolerance, "success threshold");

  bool corrupt = false;
  auto* check = app.add_subcommand("paper-check", "recompute every registered numeric fact");
  check->add_flag("--corrupt-sign", corrupt, "test hook: use a wrong Fourier sign convention");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  try {
    if (*cohomology) {
      emit(cli::cmd_cohomology(read_json(input), k));
    } else if (*pi0) {
      emit(cli::cmd_pi0(read_json(input)));
    } else if (*budget) {
      emit(cli::cmd_budget(read_json(input)));
    } else if (*classify) {
      emit(cli::cmd_classify(read_json(input)));
    } else if (*principalize) {
      emit(cli::cmd_principalize(read_json(input)));
    } else if (*minimal) {
      emit(cli::cmd_minimal_class(read_json(input)));
    } else if (*fourier) {
      emit(cli::cmd_fourier(read_json(input)));
    } else if (*kunneth) {
      emit(cli::cmd_kunneth(read_json(input), kn, kk));
    } else if (*approach) {
      const json out = cli::cmd_hecke_approach(read_json(target_file), hopt);
      emit(out);
      std::cerr << "best distance " << out.at("distance").get<std::string>() << " after "
                << out.at("steps").get<std::string>() << " steps\n";
    } else if (*sunit) {
      emit(cli::cmd_hecke_sunit(sp, sq, bound, starget, tolerance));
    } else if (*check) {
      const auto claims = cli::run_paper_check({corrupt});
      const json report = cli::to_json(claims);
      emit(report);
      for (const auto& c : claims)
        if (!c.pass) std::cerr << "FAIL " << c.id << ": computed " << c.computed << ", expected "
                               << c.expected << '\n';
      std::cerr << report.at("summary").at("passed").get<std::string>() << "/"
                << report.at("summary").at("total").get<std::string>() << " claims pass\n";
      return report.at("all_pass") == "true" ? cli::kOk : cli::kCheckFailed;
    }
  } catch (const realab::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return cli::kInputError;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return cli::kCheckFailed;
  }
  return cli::kOk;
}
