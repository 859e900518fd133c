#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>

#include "eliq/characterize.hpp"
#include "eliq/frontier.hpp"
#include "eliq/io.hpp"
#include "eliq/learner.hpp"
#include "eliq/normal_form.hpp"
#include "eliq/reasoner.hpp"
#include "eliq/testkit.hpp"

#ifndef ELIQ_VERSION
#define ELIQ_VERSION "0.0.0"
#endif

using json = nlohmann::json;
using namespace eliq;
namespace fs = std::filesystem;

namespace {

constexpr int kYes = 0, kNo = 1, kFailure = 2;

struct Common {
  std::string ontology;
  std::string format = "json";
  int jobs = 1;
};

Ontology load_ontology(const std::string& path) { return path.empty() ? Ontology{} : parse_ontology(read_file(path)); }
CQ load_query(const std::string& path) { return parse_cq(read_file(path)); }

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json members_json(const std::vector<CQ>& members) {
  json out = json::array();
  for (const auto& m : members) out.push_back(to_string(m));
  return out;
}

json prefix_json(const ModelPrefix& p) {
  json nodes = json::array(), edges = json::array();
  for (const auto& n : p.nodes) nodes.push_back({{"id", n.id}, {"name", n.name}, {"depth", n.depth}, {"concepts", n.concepts}});
  for (const auto& e : p.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"role", e.role}});
  return {{"consistent", p.consistent}, {"nodes", nodes}, {"edges", edges}};
}

Frontier frontier_for(const Ontology& o, const CQ& q, const std::string& dialect, bool prune) {
  FrontierOptions opts;
  opts.prune = prune;
  if (dialect == "r") return frontier_r(o, q, opts);
  if (dialect == "f") return frontier_f(o, q, opts);
  return compute_frontier(o, q, opts);
}

ExampleSet load_examples(const std::string& dir) {
  auto manifest = json::parse(read_file((fs::path(dir) / "manifest.json").string()));
  ExampleSet e;
  for (const auto& item : manifest.at("examples")) {
    DataExample d;
    d.abox = parse_abox(read_file((fs::path(dir) / item.at("file").get<std::string>()).string()));
    d.individual = item.at("individual").get<std::string>();
    d.polarity = item.at("polarity") == "positive" ? Polarity::Positive : Polarity::Negative;
    d.abox.add_individual(d.individual);
    (d.polarity == Polarity::Positive ? e.positives : e.negatives).push_back(std::move(d));
  }
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frontiers, exact learning and unique characterisation of ELI queries under DL-Lite ontologies"};
  app.set_version_flag("--version", ELIQ_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", common.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  std::function<int()> run;

  auto add_ontology = [&](CLI::App* sub, bool required) {
    auto opt = sub->add_option("-o,--ontology", common.ontology, "Ontology file (.dlo)")->check(CLI::ExistingFile);
    if (required) opt->required();
  };

  // normalize
  auto* normalize_cmd = app.add_subcommand("normalize", "Print the normal form of an ontology");
  add_ontology(normalize_cmd, true);
  normalize_cmd->callback([&] {
    run = [&] {
      auto nf = normalize(load_ontology(common.ontology));
      if (common.format == "text") {
        std::cout << to_string(nf.ontology);
        return kYes;
      }
      json fresh = json::object();
      for (const auto& [name, c] : nf.fresh) fresh[name] = c.str();
      print({{"ontology", to_string(nf.ontology)}, {"fresh", fresh}, {"dialect", to_string(dialect_of(nf.ontology))}});
      return kYes;
    };
  });

  // check
  auto* check_cmd = app.add_subcommand("check", "Containment, equivalence, satisfiability and dialect checks");
  add_ontology(check_cmd, false);
  std::vector<std::string> contains, equivalent;
  std::string satisfiable;
  bool show_dialect = false;
  auto* c1 = check_cmd->add_option("--contains", contains, "Q1 Q2: is Q1 contained in Q2")->expected(2);
  auto* c2 = check_cmd->add_option("--equivalent", equivalent, "Q1 Q2: are the queries equivalent")->expected(2);
  auto* c3 = check_cmd->add_option("--satisfiable", satisfiable, "Q: is the query satisfiable");
  auto* c4 = check_cmd->add_flag("--dialect", show_dialect, "Print the dialect of the ontology");
  for (auto* a : {c1, c2, c3, c4})
    for (auto* b : {c1, c2, c3, c4})
      if (a != b) a->excludes(b);
  check_cmd->callback([&] {
    run = [&] {
      auto o = load_ontology(common.ontology);
      if (show_dialect) {
        std::cout << to_string(dialect_of(o)) << "\n";
        return kYes;
      }
      Reasoner r(o);
      bool yes;
      if (!contains.empty()) yes = r.contained(load_query(contains[0]), load_query(contains[1]));
      else if (!equivalent.empty()) yes = r.equivalent(load_query(equivalent[0]), load_query(equivalent[1]));
      else if (!satisfiable.empty()) yes = r.satisfiable(load_query(satisfiable));
      else throw CLI::RequiredError("one of --contains, --equivalent, --satisfiable, --dialect");
      std::cout << (yes ? "yes" : "no") << "\n";
      return yes ? kYes : kNo;
    };
  });

  // answer
  auto* answer_cmd = app.add_subcommand("answer", "Certain answers of a query over an ABox");
  add_ontology(answer_cmd, false);
  std::string abox_path, query_path, individual;
  int dump_depth = -1;
  answer_cmd->add_option("-a,--abox", abox_path, "ABox file (.abox)")->required()->check(CLI::ExistingFile);
  answer_cmd->add_option("-q,--query", query_path, "Query file (.cq)")->check(CLI::ExistingFile);
  answer_cmd->add_option("--individual", individual, "Only decide this individual");
  answer_cmd->add_option("--dump-model", dump_depth, "Print the universal model up to this depth");
  answer_cmd->callback([&] {
    run = [&] {
      auto o = load_ontology(common.ontology);
      auto a = parse_abox(read_file(abox_path));
      if (dump_depth >= 0) {
        print(prefix_json(universal_prefix(o, a, dump_depth)));
        if (query_path.empty()) return kYes;
      }
      if (query_path.empty()) throw CLI::RequiredError("--query");
      Reasoner r(o);
      auto q = load_query(query_path);
      if (!individual.empty()) {
        bool yes = r.certain_answer(a, q, individual);
        std::cout << (yes ? "yes" : "no") << "\n";
        return yes ? kYes : kNo;
      }
      std::vector<std::string> answers;
      for (const auto& i : a.individuals())
        if (r.certain_answer(a, q, i)) answers.push_back(i);
      if (common.format == "json") print({{"answers", answers}, {"consistent", r.satisfiable(a)}});
      else
        for (const auto& i : answers) std::cout << i << "\n";
      return answers.empty() ? kNo : kYes;
    };
  });

  // frontier
  auto* frontier_cmd = app.add_subcommand("frontier", "Compute a frontier of an ELIQ");
  add_ontology(frontier_cmd, false);
  std::string dialect = "auto";
  bool prune = false;
  frontier_cmd->add_option("-q,--query", query_path, "Query file (.cq)")->required()->check(CLI::ExistingFile);
  frontier_cmd->add_option("--dialect", dialect, "Construction to use")->check(CLI::IsMember({"auto", "r", "f"}));
  frontier_cmd->add_flag("--prune", prune, "Drop members equivalent to an earlier member");
  frontier_cmd->callback([&] {
    run = [&] {
      auto f = frontier_for(load_ontology(common.ontology), load_query(query_path), dialect, prune);
      if (common.format == "text") {
        for (const auto& m : f.members) std::cout << to_string(m) << "\n";
        return kYes;
      }
      print({{"members", members_json(f.members)}, {"member_count", f.members.size()}, {"total_vars", f.total_vars()}});
      return kYes;
    };
  });

  // learn
  auto* learn_cmd = app.add_subcommand("learn", "Learn a target ELIQ from a simulated membership oracle");
  add_ontology(learn_cmd, false);
  std::string target_path, seed_path, trace_path;
  std::size_t budget = 0;
  learn_cmd->add_option("--target", target_path, "Target query answered by the oracle")->required()->check(CLI::ExistingFile);
  learn_cmd->add_option("--seed", seed_path, "Seed query contained in the target")->check(CLI::ExistingFile);
  learn_cmd->add_option("--budget", budget, "Membership query budget (default 10*(|var|*size)^2)");
  learn_cmd->add_option("--trace", trace_path, "Write the trace as JSON");
  learn_cmd->callback([&] {
    run = [&] {
      auto o = load_ontology(common.ontology);
      auto target = load_query(target_path);
      auto seed = seed_path.empty() ? seed_query(o, target.signature()) : load_query(seed_path);
      SimulatedOracle oracle(o, target);
      auto trace = learn_with_normal_form(o, oracle, seed, budget ? budget : default_budget(o, target));
      json j{{"hypotheses", members_json(trace.hypotheses)},
             {"membership_queries", trace.membership_queries},
             {"frontier_sizes", trace.frontier_sizes},
             {"outcome", to_string(trace.outcome)}};
      if (!trace_path.empty()) write_file(trace_path, j.dump(2) + "\n");
      if (common.format == "json") print(j);
      else if (auto h = trace.result()) std::cout << to_string(*h) << "\n";
      else std::cout << to_string(trace.outcome) << "\n";
      return trace.result() ? kYes : kNo;
    };
  });

  // characterize
  auto* char_cmd = app.add_subcommand("characterize", "Write data examples that characterise an ELIQ");
  add_ontology(char_cmd, false);
  std::string out_dir;
  char_cmd->add_option("-q,--query", query_path, "Query file (.cq)")->required()->check(CLI::ExistingFile);
  char_cmd->add_option("--out-dir", out_dir, "Directory for the example ABoxes")->required();
  char_cmd->callback([&] {
    run = [&] {
      auto e = characterize(load_ontology(common.ontology), load_query(query_path));
      fs::create_directories(out_dir);
      json examples = json::array();
      auto emit = [&](const DataExample& d, const std::string& file) {
        write_file((fs::path(out_dir) / file).string(), to_string(d.abox));
        examples.push_back({{"file", file},
                            {"individual", d.individual},
                            {"polarity", d.polarity == Polarity::Positive ? "positive" : "negative"}});
      };
      for (std::size_t i = 0; i < e.positives.size(); ++i) emit(e.positives[i], "positive_" + std::to_string(i) + ".abox");
      for (std::size_t i = 0; i < e.negatives.size(); ++i) emit(e.negatives[i], "negative_" + std::to_string(i) + ".abox");
      json manifest{{"examples", examples}};
      write_file((fs::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
      if (common.format == "json") print(manifest);
      return kYes;
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Brute-force checks up to a variable bound");
  verify_cmd->require_subcommand(1);
  int bound = 4;
  std::string examples_dir;
  auto* vf = verify_cmd->add_subcommand("frontier", "Check a computed frontier against all small ELIQs");
  auto* vu = verify_cmd->add_subcommand("unique", "Check that only the query fits its examples");
  for (auto* sub : {vf, vu}) {
    add_ontology(sub, false);
    sub->add_option("-q,--query", query_path, "Query file (.cq)")->required()->check(CLI::ExistingFile);
    sub->add_option("--bound", bound, "Largest number of variables enumerated")->check(CLI::PositiveNumber);
  }
  vf->add_option("--dialect", dialect, "Construction to use")->check(CLI::IsMember({"auto", "r", "f"}));
  vu->add_option("--examples-dir", examples_dir, "Examples written by characterize (default: compute them)")
      ->check(CLI::ExistingDirectory);
  vf->callback([&] {
    run = [&] {
      auto o = load_ontology(common.ontology);
      auto q = load_query(query_path);
      auto f = frontier_for(o, q, dialect, false);
      auto check = bruteforce_frontier_check(o, q, f.members, bound);
      json j{{"ok", check.ok}, {"candidates", check.candidates}, {"generalizations", check.generalizations}};
      if (!check.ok) j["reason"] = check.reason;
      if (check.counterexample) j["counterexample"] = to_string(*check.counterexample);
      if (common.format == "json") print(j);
      else std::cout << (check.ok ? "ok" : "fail: " + check.reason) << "\n";
      return check.ok ? kYes : kNo;
    };
  });
  vu->callback([&] {
    run = [&] {
      auto o = load_ontology(common.ontology);
      auto q = load_query(query_path);
      auto e = examples_dir.empty() ? characterize(o, q) : load_examples(examples_dir);
      auto v = verify_unique(o, q, e, bound, common.jobs);
      json j{{"ok", v.ok}, {"candidates", v.candidates}};
      if (v.counterexample) j["counterexample"] = to_string(*v.counterexample);
      if (common.format == "json") print(j);
      else std::cout << (v.ok ? "ok" : "fail: " + to_string(*v.counterexample)) << "\n";
      return v.ok ? kYes : kNo;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFailure;
  }
  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "parse_error: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << e.code() << ": " << e.what() << "\n";
  } catch (const CLI::Error& e) {
    std::cerr << "usage: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kFailure;
}
