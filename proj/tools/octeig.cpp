// octeig: command-line front end for the octonionic eigenvalue library.
//
//   octeig verify-paper   [--seed N] [--format json|text]
//   octeig eigs           [FILE | --example K] [--p P --q Q --theta T] [--search --seeds N]
//   octeig nullity        [FILE | --example K] --lambda '[8 numbers]' [--tol T]
//   octeig property-suite [--trials N] [--seed N]
//   octeig calibrate
//
// Exit status: 0 pass, 1 a check failed, 2 usage or parse error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "octeig/calibration.hpp"
#include "octeig/cli/commands.hpp"
#include "octeig/cli/property_suite.hpp"
#include "octeig/error.hpp"

namespace {

using octeig::cli::Json;

struct MatrixArgs {
  std::string file;
  std::optional<int> example;
  std::optional<double> p, q, theta;

  void add_to(CLI::App* cmd) {
    cmd->add_option("file", file, "Matrix JSON file");
    cmd->add_option("--example", example, "Built-in example matrix (1, 2 or 3)");
    cmd->add_option("--p", p, "Example parameter p");
    cmd->add_option("--q", q, "Example parameter q");
    cmd->add_option("--theta", theta, "Example 1 angle theta");
  }

  octeig::cli::MatrixFile load() const {
    octeig::cli::MatrixFile f;
    if (!file.empty()) f = octeig::cli::load_matrix_file(file);
    else if (!example) throw octeig::ParseError("give a matrix file or --example");
    if (example) f.example = *example;
    if (f.example) {
      f.p = p.value_or(f.p);
      f.q = q.value_or(f.q);
      f.theta = theta.value_or(f.theta);
      f.matrix = octeig::cli::example_matrix(*f.example, f.p, f.q, f.theta);
    } else if (p || q || theta) {
      throw octeig::ParseError("--p/--q/--theta apply only to built-in examples");
    }
    return f;
  }
};

void emit(const Json& j, const std::string& text, const std::string& format) {
  if (format == "text") std::cout << text;
  else std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octonions, 3x3 octonionic Hermitian matrices and their right eigenvalues"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  std::string format = "json";
  double tol = octeig::kNullityTol;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* verify = app.add_subcommand("verify-paper", "Run every worked-example and identity check");
  add_common(verify);

  MatrixArgs eigs_args;
  bool search = false;
  int seeds = 16;
  auto* eigs = app.add_subcommand("eigs", "Real eigenvalue families and optional non-real search");
  add_common(eigs);
  eigs_args.add_to(eigs);
  eigs->add_flag("--search", search, "Search for non-real eigenvalues");
  eigs->add_option("--seeds", seeds, "Random starts for the search")->check(CLI::PositiveNumber);
  eigs->add_option("--tol", tol, "Relative nullity threshold")->check(CLI::PositiveNumber);

  MatrixArgs null_args;
  std::string lambda_text;
  auto* nullity = app.add_subcommand("nullity", "Real dimension of the eigenspace of lambda");
  add_common(nullity);
  null_args.add_to(nullity);
  nullity->add_option("--lambda", lambda_text, "Eigenvalue: number or JSON array of 8")->required();
  nullity->add_option("--tol", tol, "Relative nullity threshold")->check(CLI::PositiveNumber);

  std::size_t trials = 10000;
  auto* props = app.add_subcommand("property-suite", "Randomized identity battery");
  add_common(props);
  props->add_option("--trials", trials, "Samples per octonion identity")->check(CLI::PositiveNumber);

  auto* calib = app.add_subcommand("calibrate", "Check the multiplication table against the examples");
  add_common(calib);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      const octeig::cli::Report rep = octeig::cli::cmd_verify_paper(seed);
      emit(rep.to_json(), rep.to_text(), format);
      return rep.has_failures() ? 1 : 0;
    }
    if (*eigs) {
      octeig::cli::EigsOptions opts;
      opts.search_nonreal = search;
      opts.seeds = seeds;
      opts.seed = seed;
      opts.nullity_tol = tol;
      const Json j = octeig::cli::cmd_eigs(eigs_args.load(), opts);
      emit(j, octeig::cli::eigs_text(j), format);
      return 0;
    }
    if (*nullity) {
      const Json j = octeig::cli::cmd_nullity(null_args.load(), octeig::cli::parse_octonion(lambda_text), tol);
      emit(j, "nullity " + std::to_string(j["nullity"].get<int>()) + "\n", format);
      return 0;
    }
    if (*props) {
      const auto results = octeig::cli::run_property_suite(trials, seed);
      emit(octeig::cli::to_json(results), octeig::cli::to_text(results), format);
      for (const auto& r : results)
        if (!r.passed()) return 1;
      return 0;
    }
    if (*calib) {
      try {
        const octeig::CalibrationResult cal = octeig::calibrate_table();
        const Json j = {{"table", cal.table.describe()},
                        {"mask", cal.mask},
                        {"passing_masks", cal.passing_masks},
                        {"default_worst_residual", cal.default_worst_residual}};
        emit(j, "table " + cal.table.describe() + "\npassing masks " + Json(cal.passing_masks).dump() + "\n",
             format);
        return 0;
      } catch (const octeig::NoConsistentTable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
    }
  } catch (const octeig::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const octeig::OutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const octeig::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
