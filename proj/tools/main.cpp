// Command-line front end: groups from descriptors, subset products, counting
// identity verification, covering decisions, stabilization and random-walk
// probes, plus the golden example scenarios.
//
// Exit codes: 0 success / claims hold, 1 usage or input error, 2 a
// mathematical claim deviated (examples or --check disagreement).

#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayley/cayley.hpp"

namespace {

using namespace cayley;

struct Options {
  bool no_header = false;
  std::string format = "text";
};

void print_header(const Options& opt) {
  if (!opt.no_header) std::cout << "# cayley " << version << "\n";
}

std::vector<int> mask_indices(const Subset& s) { return s.elements(); }

SubsetFamily parse_family(const GroupPtr& g, const std::vector<std::string>& literals) {
  std::vector<Subset> members;
  members.reserve(literals.size());
  for (const auto& lit : literals) members.push_back(parse_subset(lit, g));
  return SubsetFamily(std::move(members));
}

int cmd_group(const Options& opt, const std::string& desc, bool show_table) {
  auto g = parse_group(desc);
  print_header(opt);
  if (opt.format == "json") {
    nlohmann::json j;
    j["group"] = g->description();
    j["order"] = g->order();
    j["identity"] = g->identity();
    j["labels"] = g->has_labels() ? nlohmann::json(g->labels()) : nlohmann::json(nullptr);
    if (show_table) {
      nlohmann::json rows = nlohmann::json::array();
      for (int a = 0; a < g->order(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (int b = 0; b < g->order(); ++b) row.push_back(g->mul(a, b));
        rows.push_back(row);
      }
      j["table"] = rows;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "group: " << g->description() << "\n";
  std::cout << "order: " << g->order() << "\n";
  std::cout << "identity: " << g->element_name(0) << "\n";
  if (g->has_labels()) {
    std::cout << "elements:";
    for (const auto& l : g->labels()) std::cout << " " << l;
    std::cout << "\n";
  }
  if (show_table) {
    for (int a = 0; a < g->order(); ++a) {
      for (int b = 0; b < g->order(); ++b)
        std::cout << (b ? " " : "") << g->mul(a, b);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_product(const Options& opt, const std::string& desc,
                const std::vector<std::string>& literals) {
  auto g = parse_group(desc);
  std::vector<Subset> subsets;
  for (const auto& lit : literals) subsets.push_back(parse_subset(lit, g));
  Subset result = fold_product(subsets);
  print_header(opt);
  if (opt.format == "json") {
    nlohmann::json j;
    j["group"] = g->description();
    j["order"] = g->order();
    nlohmann::json members = nlohmann::json::array();
    for (const auto& s : subsets) members.push_back(mask_indices(s));
    j["subsets"] = members;
    j["product"] = mask_indices(result);
    j["covers_group"] = result.is_full();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "group: " << g->description() << " (order " << g->order() << ")\n";
  for (std::size_t i = 0; i < subsets.size(); ++i)
    std::cout << "A" << i + 1 << ": " << subsets[i].to_string() << " (size "
              << subsets[i].size() << ")\n";
  std::cout << "product: " << result.to_string() << " (size " << result.size() << ")\n";
  std::cout << "covers G: " << (result.is_full() ? "yes" : "no") << "\n";
  return 0;
}

int cmd_theorem2(const Options& opt, const std::string& desc,
                 const std::vector<std::string>& literals, bool show_counts,
                 std::uint64_t cap) {
  auto g = parse_group(desc);
  auto family = parse_family(g, literals);
  auto rep = verify_theorem2(family, cap);
  print_header(opt);
  if (opt.format == "json")
    std::cout << to_json(rep, show_counts).dump(2) << "\n";
  else
    std::cout << to_text(rep, show_counts);
  return rep.pass ? 0 : 2;
}

int cmd_decide(const Options& opt, const std::string& desc,
               const std::vector<std::string>& literals, bool check) {
  auto g = parse_group(desc);
  auto family = parse_family(g, literals);
  BigInt d = d_of_family(family);
  Decision sign = decide_by_sign(family);
  Decision pairwise = theorem3_decide(family);
  print_header(opt);

  bool deviation = false;
  std::string check_lines;
  if (check) {
    Subset folded = fold_product(family);
    Subset folded_c = fold_product(family.complements());
    auto claim = [&](const char* tag, Decision dec) {
      switch (dec) {
        case Decision::ProductIsG:
          if (!folded.is_full()) {
            deviation = true;
            check_lines += std::string("DEVIATION: ") + tag +
                           " claimed the product covers G but it does not\n";
          }
          break;
        case Decision::ComplementProductIsG:
          if (!folded_c.is_full()) {
            deviation = true;
            check_lines += std::string("DEVIATION: ") + tag +
                           " claimed the complements' product covers G but it does not\n";
          }
          break;
        case Decision::ProductsEqual:
          if (!(folded == folded_c)) {
            deviation = true;
            check_lines += std::string("DEVIATION: ") + tag +
                           " claimed the two products are equal but they differ\n";
          }
          break;
        case Decision::Indeterminate:
          break;
      }
    };
    claim("sign decision", sign);
    claim("pairwise decision", pairwise);
    if (check_lines.empty())
      check_lines = "check: claims hold (product " + folded.to_string() +
                    ", complement product " + folded_c.to_string() + ")\n";
  }

  if (opt.format == "json") {
    nlohmann::json j;
    j["group"] = g->description();
    j["family"] = family.to_string();
    j["n"] = family.size();
    j["d"] = d.str();
    j["sign_decision"] = to_string(sign);
    j["pairwise_decision"] = to_string(pairwise);
    if (check) j["claims_hold"] = !deviation;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: " << g->description() << " (order " << g->order() << ")\n";
    std::cout << "family: " << family.to_string() << "\n";
    std::cout << "d: " << d.str() << "\n";
    std::cout << "sign decision: " << to_string(sign) << "\n";
    std::cout << "pairwise decision: " << to_string(pairwise) << "\n";
    std::cout << check_lines;
  }
  return deviation ? 2 : 0;
}

int cmd_stabilize(const Options& opt, const std::string& desc, const std::string& literal,
                  int max_steps) {
  auto g = parse_group(desc);
  auto a = parse_subset(literal, g);
  auto rep = stabilizes_at_group(a, max_steps);
  print_header(opt);
  if (opt.format == "json") {
    nlohmann::json j = to_json(rep);
    j["group"] = g->description();
    j["subset"] = mask_indices(a);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: " << g->description() << " (order " << g->order() << ")\n";
    std::cout << "subset: " << a.to_string() << "\n";
    std::cout << to_text(rep);
  }
  return 0;
}

int cmd_walk(const Options& opt, const std::string& desc, const std::string& literal,
             const std::string& tol_str, int max_n, const std::string& csv_path,
             bool use_float, int max_steps) {
  auto g = parse_group(desc);
  auto a = parse_subset(literal, g);
  print_header(opt);
  auto emit = [&](const auto& rep) {
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      if (!out) throw Error("cannot write csv file: " + csv_path);
      out << trace_csv(rep);
    }
    if (opt.format == "json") {
      nlohmann::json j = to_json(rep);
      j["group"] = g->description();
      j["carrier"] = mask_indices(a);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "group: " << g->description() << " (order " << g->order() << ")\n";
      std::cout << "carrier: " << a.to_string() << "\n";
      std::cout << to_text(rep);
      if (!csv_path.empty()) std::cout << "csv: " << csv_path << "\n";
    }
  };
  if (use_float) {
    double tol = std::stod(tol_str);
    auto p = Distribution<double>::uniform_on(a);
    emit(convergence_probe(p, tol, max_n, max_steps));
  } else {
    Rational tol = parse_rational(tol_str);
    auto p = Distribution<Rational>::uniform_on(a);
    emit(convergence_probe(p, tol, max_n, max_steps));
  }
  return 0;
}

int cmd_examples(const Options& opt, const std::string& name, bool parallel) {
  std::vector<const Scenario*> to_run;
  if (name == "all") {
    for (const auto& s : paper_scenarios()) to_run.push_back(&s);
  } else {
    const Scenario* s = find_scenario(name);
    if (!s) {
      std::string known;
      for (const auto& sc : paper_scenarios()) known += std::string(" ") + sc.name;
      throw Error("unknown scenario '" + name + "'; known:" + known + " all");
    }
    to_run.push_back(s);
  }
  std::vector<ScenarioResult> results;
  if (parallel) {
    std::vector<std::future<ScenarioResult>> futs;
    futs.reserve(to_run.size());
    for (const auto* s : to_run)
      futs.push_back(std::async(std::launch::async, s->run));
    for (auto& f : futs) results.push_back(f.get());
  } else {
    for (const auto* s : to_run) results.push_back(s->run());
  }
  print_header(opt);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << "scenario " << r.name << ": " << r.title << "\n";
    for (const auto& c : r.checks)
      std::cout << "  " << (c.ok ? "ok" : "FAIL") << ": " << c.what << "\n";
    std::cout << "result: " << (r.ok ? "PASS" : "FAIL") << "\n";
    if (!r.ok) ++failed;
  }
  std::cout << "examples: " << results.size() - failed << "/" << results.size()
            << " passed\n";
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact subset-product and random-walk toolkit for finite groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--no-header", opt.no_header, "suppress the version header line");

  std::string desc;
  std::vector<std::string> literals;
  std::string literal;
  bool show_table = false, show_counts = false, check = false, use_float = false,
       parallel = false;
  std::uint64_t bf_cap = 10'000'000;
  int max_steps = 0, max_n = 1000;
  std::string tol = "1e-3", csv_path, scenario = "all";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* sub_group = app.add_subcommand("group", "build and print a group");
  sub_group->add_option("descriptor", desc, "group descriptor, e.g. cyclic:6")->required();
  sub_group->add_flag("--table", show_table, "print the full multiplication table");
  add_format(sub_group);

  auto* sub_product = app.add_subcommand("product", "fold the product of subsets");
  sub_product->add_option("descriptor", desc)->required();
  sub_product->add_option("subsets", literals, "subset literals")->required()->expected(-1);
  add_format(sub_product);

  auto* sub_t2 = app.add_subcommand("theorem2", "verify the counting identity on a family");
  sub_t2->add_option("descriptor", desc)->required();
  sub_t2->add_option("subsets", literals)->required()->expected(-1);
  sub_t2->add_flag("--counts", show_counts, "print per-element counts");
  sub_t2->add_option("--bf-cap", bf_cap, "tuple cap for the brute-force cross-check")
      ->capture_default_str();
  add_format(sub_t2);

  auto* sub_decide = app.add_subcommand("decide", "covering decisions from cardinalities");
  sub_decide->add_option("descriptor", desc)->required();
  sub_decide->add_option("subsets", literals)->required()->expected(-2);
  sub_decide->add_flag("--check", check, "verify the decision against direct products");
  add_format(sub_decide);

  auto* sub_stab = app.add_subcommand("stabilize", "follow A, A^2, A^3, ... to G or a cycle");
  sub_stab->add_option("descriptor", desc)->required();
  sub_stab->add_option("subset", literal)->required();
  sub_stab->add_option("--max-steps", max_steps, "step budget (default 4|G|)");
  add_format(sub_stab);

  auto* sub_walk = app.add_subcommand("walk", "convergence of the induced random walk");
  sub_walk->add_option("descriptor", desc)->required();
  sub_walk->add_option("subset", literal, "carrier; the walk is uniform on it")->required();
  sub_walk->add_option("--tol", tol, "total-variation tolerance")->capture_default_str();
  sub_walk->add_option("--max-n", max_n, "convolution power budget")->capture_default_str();
  sub_walk->add_option("--csv", csv_path, "write the tv trace as CSV");
  sub_walk->add_flag("--float", use_float, "floating-point backend (default: exact rationals)");
  sub_walk->add_option("--max-steps", max_steps, "stabilization step budget (default 4|G|)");
  add_format(sub_walk);

  auto* sub_ex = app.add_subcommand("examples", "run the golden example scenarios");
  sub_ex->add_option("name", scenario, "scenario name or 'all'")->capture_default_str();
  sub_ex->add_flag("--parallel", parallel, "run scenarios concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (sub_group->parsed()) return cmd_group(opt, desc, show_table);
    if (sub_product->parsed()) return cmd_product(opt, desc, literals);
    if (sub_t2->parsed()) return cmd_theorem2(opt, desc, literals, show_counts, bf_cap);
    if (sub_decide->parsed()) return cmd_decide(opt, desc, literals, check);
    if (sub_stab->parsed()) return cmd_stabilize(opt, desc, literal, max_steps);
    if (sub_walk->parsed())
      return cmd_walk(opt, desc, literal, tol, max_n, csv_path, use_float, max_steps);
    if (sub_ex->parsed()) return cmd_examples(opt, scenario, parallel);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
