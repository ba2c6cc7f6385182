#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cp1calc/job.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cp1::ValidationError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cp1::FourManifold resolve_base(const std::string& value) {
  if (std::filesystem::is_regular_file(value)) {
    const cp1::Json doc = cp1::parse_document(read_file(value));
    if (doc.is_object() && doc.contains("base")) return cp1::manifold_from_json(doc.at("base"));
    return cp1::manifold_from_json(doc);
  }
  return cp1::parse_manifold_expression(value);
}

cp1::SystemInput resolve_system(const std::string& path) {
  return cp1::system_input_from_json(cp1::parse_document(read_file(path)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cp1calc: invariants of CP1-bundles over 4-manifolds and their conifold transitions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  int threads = 0;
  std::uint64_t budget = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", threads, "Worker threads for the witness search (0 = OpenMP default)");
  app.add_option("--budget", budget, "Search node budget (default: $CP1CALC_STEP_BUDGET or 1e9)");

  std::string base, c1 = "", input;
  std::int64_t c2 = 0;
  bool swap = false;

  auto add_bundle_opts = [&](CLI::App* sub) {
    sub->add_option("--base", base, "Catalog name, connected-sum expression, or JSON file");
    sub->add_option("--c1", c1, "c1(E) coordinates, e.g. \"1,-1\" (use --c1=-1 for a leading minus)");
    sub->add_option("--c2", c2, "c2(E) evaluated on [N]");
    sub->add_option("--input", input, "Job/descriptor JSON document")->check(CLI::ExistingFile);
  };

  auto* inv = app.add_subcommand("invariants", "Wall-Jupp invariants of P(E)");
  add_bundle_opts(inv);
  auto* tr = app.add_subcommand("transition", "Both conifold transitions of P(E)");
  add_bundle_opts(tr);
  tr->add_flag("--swap", swap, "Exchange the k = 1, 2 labelling");

  std::string left, right, primes = "2,3,5";
  int bound = 3;
  bool check_c1 = false;
  auto* cmp = app.add_subcommand("compare", "Decide isomorphism of two invariant systems");
  cmp->add_option("--left", left, "System, report, or descriptor JSON")->required()->check(CLI::ExistingFile);
  cmp->add_option("--right", right, "System, report, or descriptor JSON")->required()->check(CLI::ExistingFile);
  cmp->add_option("--bound", bound, "Entry bound for the witness search")->check(CLI::PositiveNumber);
  cmp->add_option("--primes", primes, "Fingerprint primes from {2,3,5,7}");
  cmp->add_flag("--check-c1", check_c1, "Require the witness to carry c1 onto c1");

  app.add_subcommand("verify-paper", "Run the built-in reproduction suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : cp1::exit_code::kInvalid;
  }

  try {
    cp1::JobSpec job;
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if ((name == "invariants" || name == "transition") && !input.empty()) {
      job = cp1::parse_input(read_file(input));
    } else {
      job.budget = cp1::default_step_budget();
    }
    if (name == "invariants" || name == "transition") {
      job.command = name == "invariants" ? cp1::Command::Invariants : cp1::Command::Transition;
      if (input.empty()) {
        if (base.empty()) throw cp1::ValidationError("--base or --input is required");
        job.base = resolve_base(base);
        cp1::IntVector c1v = cp1::parse_int_list(c1);
        if (c1.empty()) c1v.assign(job.base->rank(), 0);
        job.bundle = cp1::RankTwoBundle(*job.base, std::move(c1v), c2);
      }
      if (swap) job.swap = true;
    } else if (name == "compare") {
      job.command = cp1::Command::Compare;
      job.left = resolve_system(left);
      job.right = resolve_system(right);
      job.bound = bound;
      job.primes = cp1::parse_prime_list(primes);
      job.check_c1 = check_c1;
    } else {
      job.command = cp1::Command::VerifyPaper;
    }
    job.format = format == "table" ? cp1::OutputFormat::Table : cp1::OutputFormat::Json;
    if (threads > 0) job.threads = threads;
    if (budget > 0) job.budget = budget;

    const cp1::Report report = cp1::run(job);
    std::cout << report.render(job.format);
    return report.exit_code;
  } catch (const cp1::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cp1::exit_code::kInvalid;
  } catch (const cp1::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cp1::exit_code::kBudget;
  } catch (const cp1::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cp1::exit_code::kInvalid;
  } catch (const cp1::Json::exception& e) {
    std::cerr << "error: schema: " << e.what() << "\n";
    return cp1::exit_code::kInvalid;
  }
}
