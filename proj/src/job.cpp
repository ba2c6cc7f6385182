#include "cp1calc/job.hpp"

#include <sstream>

namespace cp1 {

namespace {

OutputFormat format_from(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "table") return OutputFormat::Table;
  throw ValidationError("format must be 'json' or 'table'");
}

Command command_from(const std::string& s) {
  if (s == "invariants") return Command::Invariants;
  if (s == "transition") return Command::Transition;
  if (s == "compare") return Command::Compare;
  if (s == "verify-paper") return Command::VerifyPaper;
  throw ValidationError("unknown command '" + s + "'");
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Invariants:
      return "invariants";
    case Command::Transition:
      return "transition";
    case Command::Compare:
      return "compare";
    case Command::VerifyPaper:
      return "verify-paper";
  }
  return "?";
}

}  // namespace

SystemInput system_input_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("schema: comparison input must be an object");
  if (j.value("schema", std::string()) == kSystemSchema) return {system_from_json(j), "system document"};
  if (j.contains("system")) return {system_from_json(j.at("system")), "report system"};
  if (j.contains("mk")) {
    const int k = j.at("mk").get<int>();
    return {mk_system(k), "M_" + std::to_string(k)};
  }
  if (!j.contains("base")) throw ValidationError("schema: comparison input needs 'base', 'mk', or a system");
  FourManifold base = manifold_from_json(j.at("base"));
  RankTwoBundle e = bundle_from_json(j.value("bundle", Json{{"c2", 0}}), base);
  std::string desc = "P(E) over " + base.label();
  InvariantSystem s;
  const std::string side = j.value("side", std::string());
  if (side.empty()) {
    s = projectivize(base, e);
  } else if (side == "z1" || side == "z2") {
    const TransitionResult t = conifold_transition(base, e);
    s = side == "z1" ? t.z1 : t.z2;
    desc = side + " of transition of " + desc;
  } else {
    throw ValidationError("side must be 'z1' or 'z2'");
  }
  const std::int64_t blowups = j.value("blowups", std::int64_t{0});
  if (blowups < 0 || blowups > 16) throw ValidationError("blowups must be in [0, 16]");
  for (std::int64_t i = 0; i < blowups; ++i) s = blowup_point(s);
  if (blowups > 0) desc += " blown up " + std::to_string(blowups) + "x";
  return {std::move(s), desc};
}

namespace {

JobSpec parse_job(const Json& doc) {
  if (!doc.is_object()) throw ParseError("job document must be a JSON object", 1, 1);
  if (doc.contains("schema") && doc.at("schema") != kJobSchema)
    throw ValidationError(std::string("schema: expected '") + kJobSchema + "'");

  JobSpec job;
  job.command = command_from(doc.value("command", std::string("invariants")));
  job.budget = default_step_budget();

  if (job.command == Command::Invariants || job.command == Command::Transition) {
    if (!doc.contains("base")) throw ValidationError("schema: missing 'base'");
    job.base = manifold_from_json(doc.at("base"));
    job.bundle = bundle_from_json(doc.value("bundle", Json{{"c2", 0}}), *job.base);
  } else if (job.command == Command::Compare) {
    if (!doc.contains("left") || !doc.contains("right")) throw ValidationError("schema: compare needs 'left' and 'right'");
    job.left = system_input_from_json(doc.at("left"));
    job.right = system_input_from_json(doc.at("right"));
  }

  if (doc.contains("options")) {
    const Json& o = doc.at("options");
    job.bound = o.value("bound", job.bound);
    if (job.bound < 1) throw ValidationError("bound must be >= 1");
    if (o.contains("primes")) {
      job.primes.clear();
      for (const auto& p : o.at("primes")) job.primes.push_back(p.get<int>());
      for (int p : job.primes)
        if (p != 2 && p != 3 && p != 5 && p != 7) throw ValidationError("primes must be drawn from {2, 3, 5, 7}");
    }
    job.check_c1 = o.value("check_c1", job.check_c1);
    job.swap = o.value("swap", job.swap);
    job.format = format_from(o.value("format", std::string("json")));
    job.budget = o.value("budget", job.budget);
    job.threads = o.value("threads", job.threads);
  }
  return job;
}

}  // namespace

JobSpec parse_input(std::string_view text) {
  const Json doc = parse_document(text);
  try {
    return parse_job(doc);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("schema: ") + e.what());
  }
}

namespace {

Json base_report(Command c) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command_name(c);
  return j;
}

Json warnings_for(bool certified) {
  Json w = Json::array();
  if (!certified)
    w.push_back("input outside the simply-connected torsion-free class: invariants only, no classification");
  return w;
}

Report run_invariants(const JobSpec& job) {
  Report r;
  r.document = base_report(job.command);
  r.document["input"] = {{"base", to_json(*job.base)}, {"bundle", {{"c1", job.bundle->c1()}, {"c2", job.bundle->c2()}}}};
  const InvariantSystem s = projectivize(*job.base, *job.bundle);
  r.document["system"] = to_json(s);
  r.document["warnings"] = warnings_for(s.certified);
  return r;
}

Report run_transition(const JobSpec& job) {
  Report r;
  r.document = base_report(job.command);
  r.document["input"] = {{"base", to_json(*job.base)}, {"bundle", {{"c1", job.bundle->c1()}, {"c2", job.bundle->c2()}}}};
  const TransitionResult t = conifold_transition(*job.base, *job.bundle, job.swap);
  r.document["swapped"] = t.swapped;
  r.document["e1"] = to_json(t.e1);
  r.document["e2"] = to_json(t.e2);
  r.document["z1"] = to_json(t.z1);
  r.document["z2"] = to_json(t.z2);
  r.document["warnings"] = warnings_for(t.z1.certified && t.z2.certified);
  return r;
}

Report run_compare(const JobSpec& job) {
  Report r;
  r.document = base_report(job.command);
  const InvariantSystem& left = job.left->system;
  const InvariantSystem& right = job.right->system;
  r.document["left"] = {{"description", job.left->description}, {"system", to_json(left)}};
  r.document["right"] = {{"description", job.right->description}, {"system", to_json(right)}};
  Json primes = job.primes;
  r.document["options"] = {{"bound", job.bound}, {"primes", primes}, {"check_c1", job.check_c1}};
  r.document["witness"] = nullptr;
  r.document["certificate"] = nullptr;
  r.document["search_nodes"] = 0;

  std::string verdict;
  if (auto cert = certify_distinct(left, right, job.primes)) {
    r.document["certificate"] = to_json(*cert);
    verdict = "DISTINCT";
  } else {
    SearchOptions opts;
    opts.bound = job.bound;
    opts.check_c1 = job.check_c1;
    opts.budget = job.budget;
    opts.threads = job.threads;
    SearchStats stats;
    try {
      auto w = find_isomorphism(left, right, opts, &stats);
      r.document["search_nodes"] = stats.nodes;
      if (w) {
        r.document["witness"] = to_json(*w);
        verdict = "ISOMORPHIC";
      } else {
        verdict = "INCONCLUSIVE";
      }
    } catch (const BudgetExceeded& e) {
      r.document["search_nodes"] = stats.nodes;
      r.document["verdict"] = "BUDGET_EXCEEDED";
      r.document["message"] = e.what();
      r.document["warnings"] = warnings_for(left.certified && right.certified);
      r.exit_code = exit_code::kBudget;
      return r;
    }
  }

  const bool certified = left.certified && right.certified;
  r.document["warnings"] = warnings_for(certified);
  if (!certified) {
    r.document["invariant_verdict"] = verdict;
    r.document["verdict"] = "INVARIANTS_ONLY";
    r.exit_code = exit_code::kInconclusive;
  } else {
    r.document["verdict"] = verdict;
    r.exit_code = verdict == "INCONCLUSIVE" ? exit_code::kInconclusive : exit_code::kOk;
  }
  return r;
}

Report run_verify(const JobSpec& job) {
  Report r;
  r.document = base_report(job.command);
  Json checks = Json::array();
  bool all = true;
  for (const auto& c : reproduction_checks(job.threads)) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    all = all && c.passed;
  }
  r.document["checks"] = std::move(checks);
  r.document["passed"] = all;
  r.exit_code = all ? exit_code::kOk : exit_code::kVerifyFailed;
  return r;
}

}  // namespace

Report run(const JobSpec& job) {
  switch (job.command) {
    case Command::Invariants:
      return run_invariants(job);
    case Command::Transition:
      return run_transition(job);
    case Command::Compare:
      return run_compare(job);
    case Command::VerifyPaper:
      return run_verify(job);
  }
  throw ValidationError("unknown command");
}

}  // namespace cp1
