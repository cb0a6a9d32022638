// Batch front end: parse monomial ideal / filtration / decomposition files,
// run the analyses, and emit deterministic reports.
//
// Exit codes: 0 = run succeeded (including "no" answers), 1 = an audited
// property was violated, 2 = parse or usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monoclean/monoclean.hpp"

namespace {

using namespace monoclean;

struct Options {
  std::string format = "human";
  std::string input_path;
  std::string witness_path;
  std::uint64_t seed = 1;
  int vars = 3;
  int max_degree = 3;
  long long count = 100;
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

struct Run {
  Options opts;
  std::string command;
  std::map<std::string, std::string> fields;
  std::string human;
  Timer timer;

  void set(const std::string& key, const std::string& value) { fields[key] = value; }

  void load_digest() {
    std::ifstream in(opts.input_path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    fields["input"] = fnv1a_digest(buffer.str());
  }

  int finish() {
    fields["command"] = command;
    if (opts.format == "machine") {
      std::cout << format_machine_report(fields);
    } else {
      std::cout << human;
      std::cerr << "elapsed: " << timer.seconds() << "s\n";
    }
    return 0;
  }
};

void write_witness(const Options& opts, const PrimeFiltration& filtration) {
  if (opts.witness_path.empty()) return;
  std::ofstream out(opts.witness_path);
  out << emit_filtration_file(filtration);
}

int cmd_polarize(Run& run, const InputFile& input) {
  auto ideal = input.ideal();
  auto [ring, polarized] = polarize_ideal(ideal);
  std::string blocks;
  for (int i = 0; i < ideal.nvars(); ++i) {
    if (i) blocks += " ";
    blocks += std::to_string(ring.block_size(i));
  }
  run.set("blocks", blocks);
  run.set("source_vars", [&] {
    std::string s;
    for (const auto& n : ideal.ambient().names()) s += (s.empty() ? "" : " ") + n;
    return s;
  }());
  run.set("polarized", format_ideal(polarized));
  run.set("vars", [&] {
    std::string s;
    for (const auto& n : ring.target().names()) s += (s.empty() ? "" : " ") + n;
    return s;
  }());
  run.human = emit_ideal_file(polarized);
  return run.finish();
}

int cmd_facets(Run& run, const InputFile& input) {
  auto ideal = input.ideal();
  auto fs = facets(Multicomplex{ideal});
  std::string list;
  for (const auto& a : fs) list += (list.empty() ? "" : " ") + format_face(a);
  run.set("facets", list);
  run.set("count", std::to_string(fs.size()));
  run.human = "facets of the multicomplex (" + std::to_string(fs.size()) + "):\n";
  for (const auto& a : fs) run.human += "  " + format_face(a) + "\n";
  return run.finish();
}

int cmd_adeg(Run& run, const InputFile& input) {
  long long degree = adeg(input.ideal());
  run.set("adeg", std::to_string(degree));
  run.human = "adeg: " + std::to_string(degree) + "\n";
  return run.finish();
}

int cmd_hilbert(Run& run, const InputFile& input) {
  auto ideal = input.ideal();
  auto series = hilbert_series(ideal).reduced();
  run.set("numerator", format_poly(series.numerator));
  run.set("denominator_power", std::to_string(series.denominator_power));
  run.set("multiplicity", multiplicity(ideal).str());
  run.set("dimension", std::to_string(dimension(ideal)));
  run.human = "Hilb(S/I) = (" + format_poly(series.numerator) + ") / (1-t)^" +
              std::to_string(series.denominator_power) + "\n";
  return run.finish();
}

int cmd_depth(Run& run, const InputFile& input) {
  auto ideal = input.ideal();
  auto table = betti_table(ideal);
  run.set("depth", std::to_string(ideal.nvars() - table.projective_dimension));
  run.set("projective_dimension", std::to_string(table.projective_dimension));
  run.set("dimension", std::to_string(dimension(ideal)));
  run.human = "depth: " + std::to_string(ideal.nvars() - table.projective_dimension) +
              "  (pd " + std::to_string(table.projective_dimension) + ", dim " +
              std::to_string(dimension(ideal)) + ")\n";
  return run.finish();
}

int cmd_clean(Run& run, const InputFile& input) {
  auto ideal = input.ideal();
  auto witness = is_clean(ideal);
  run.set("clean", witness ? "yes" : "no");
  if (witness) {
    run.set("length", std::to_string(witness->length()));
    write_witness(run.opts, *witness);
    run.human = "clean: yes (filtration of length " + std::to_string(witness->length()) + ")\n";
  } else {
    run.human = "clean: no\n";
  }
  return run.finish();
}

int cmd_pretty_clean(Run& run, const InputFile& input) {
  auto ideal = input.ideal();
  long long degree = adeg(ideal);
  auto witness = is_pretty_clean(ideal);
  run.set("pretty_clean", witness ? "yes" : "no");
  run.set("adeg", std::to_string(degree));
  if (witness) {
    run.set("length", std::to_string(witness->length()));
    write_witness(run.opts, *witness);
    run.human = "pretty clean: yes (witness of length " + std::to_string(witness->length()) +
                " = adeg)\n";
  } else {
    run.set("min_filtration_length", std::to_string(degree + 1));
    run.human = "pretty clean: no (adeg = " + std::to_string(degree) +
                "; length of any prime filtration >= " + std::to_string(degree + 1) + ")\n";
  }
  return run.finish();
}

int cmd_verify_filtration(Run& run, const InputFile& input) {
  auto filtration = input.filtration();
  auto report = verify(filtration);
  run.set("valid", report.valid ? "yes" : "no");
  run.set("classification", to_string(report.classification));
  run.set("length", std::to_string(filtration.length()));
  std::string support;
  for (const auto& p : report.support)
    support += (support.empty() ? "" : " ") + format_prime(p, filtration.base().ambient());
  run.set("support", support);
  run.set("supp_equals_ass", report.supp_equals_ass ? "yes" : "no");
  run.set("supp_equals_min", report.supp_equals_min ? "yes" : "no");
  run.set("mu_nonincreasing", report.mu_nonincreasing ? "yes" : "no");
  if (!report.valid) run.set("failure", report.failure);
  run.human = "valid: " + std::string(report.valid ? "yes" : "no") + "\n";
  if (report.valid) {
    run.human += "classification: " + std::string(to_string(report.classification)) + "\n";
    run.human += "support:" + (support.empty() ? " (empty)" : " " + support) + "\n";
  } else {
    run.human += "failure: " + report.failure + "\n";
  }
  return run.finish();
}

int cmd_stanley(Run& run, const InputFile& input) {
  auto filtration = input.filtration();
  auto decomposition = from_filtration(filtration);
  run.set("spaces", std::to_string(decomposition.spaces.size()));
  run.set("stanley_depth", std::to_string(stanley_depth(decomposition)));
  std::string listing = emit_decomposition_file(decomposition);
  run.set("valid", verify_decomposition(decomposition) ? "yes" : "no");
  run.human = listing;
  if (run.opts.format == "machine") {
    std::string spaces;
    for (const auto& s : decomposition.spaces)
      spaces += (spaces.empty() ? "" : "; ") + format_space(s, decomposition.ideal.ambient());
    run.set("decomposition", spaces);
  }
  return run.finish();
}

int cmd_verify_stanley(Run& run, const InputFile& input) {
  auto decomposition = input.decomposition();
  bool valid = verify_decomposition(decomposition);
  run.set("valid", valid ? "yes" : "no");
  if (valid) run.set("stanley_depth", std::to_string(stanley_depth(decomposition)));
  run.human = "valid: " + std::string(valid ? "yes" : "no") + "\n";
  return run.finish();
}

int cmd_correspond(Run& run, const InputFile& input) {
  auto decomposition = input.decomposition();
  if (!verify_decomposition(decomposition)) {
    run.set("valid", "no");
    run.set("ordering", "none");
    run.human = "decomposition is not valid\n";
    return run.finish();
  }
  run.set("valid", "yes");
  auto ordering = corresponds_to_filtration(decomposition);
  if (!ordering) {
    run.set("ordering", "none");
    run.human = "no ordering corresponds to a prime filtration\n";
    return run.finish();
  }
  std::string order_text, spaces_text;
  for (int i : *ordering) {
    order_text += (order_text.empty() ? "" : " ") + std::to_string(i);
    spaces_text += "  " +
                   format_space(decomposition.spaces[i], decomposition.ideal.ambient()) + "\n";
  }
  run.set("ordering", order_text);
  run.human = "ordering (by space index): " + order_text + "\n" + spaces_text;
  return run.finish();
}

int cmd_random_audit(Run& run) {
  auto result = random_audit(run.opts.seed, run.opts.vars, run.opts.max_degree, run.opts.count);
  run.set("checked", std::to_string(result.checked));
  run.set("violations", std::to_string(result.violations.size()));
  run.set("seed", std::to_string(run.opts.seed));
  run.human = "checked " + std::to_string(result.checked) + " random ideals, " +
              std::to_string(result.violations.size()) + " violations\n";
  for (const auto& v : result.violations) run.human += "  violation: " + v + "\n";
  if (!result.violations.empty()) {
    std::string joined;
    for (const auto& v : result.violations) joined += (joined.empty() ? "" : "; ") + v;
    run.set("violation_details", joined);
  }
  run.finish();
  return result.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for monomial ideals: polarization, prime filtrations,"
               " Stanley decompositions"};
  app.require_subcommand(1);

  Options opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"human", "machine"}));

  struct Sub {
    CLI::App* app;
    bool needs_input;
  };
  std::map<std::string, Sub> subs;
  auto add = [&](const std::string& name, const std::string& help, bool needs_input = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();  // allow --format after the subcommand
    if (needs_input) sub->add_option("input", opts.input_path, "input file")->required();
    subs[name] = {sub, needs_input};
    return sub;
  };

  add("polarize", "polarize a monomial ideal");
  add("facets", "facets of the multicomplex of an ideal");
  add("adeg", "arithmetic degree of an ideal");
  add("hilbert", "reduced Hilbert series of S/I");
  add("depth", "depth of S/I over the rationals");
  auto* clean = add("clean", "decide cleanness, optionally emitting a witness filtration");
  clean->add_option("--witness", opts.witness_path, "write witness filtration here");
  auto* pretty = add("pretty-clean", "decide pretty-cleanness, optionally with witness");
  pretty->add_option("--witness", opts.witness_path, "write witness filtration here");
  add("verify-filtration", "verify and classify a filtration file");
  add("stanley", "Stanley decomposition from a witness filtration file");
  add("verify-stanley", "verify a decomposition file");
  add("correspond", "order a decomposition into a prime filtration, or report none");
  auto* audit = add("random-audit", "run the randomized invariant suite", false);
  audit->add_option("--vars", opts.vars, "number of variables");
  audit->add_option("--max-degree", opts.max_degree, "maximum exponent per variable");
  audit->add_option("--count", opts.count, "number of random ideals");
  audit->add_option("--seed", opts.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Run run;
  run.opts = opts;
  try {
    for (const auto& [name, sub] : subs) {
      if (!sub.app->parsed()) continue;
      run.command = name;
      if (name == "random-audit") return cmd_random_audit(run);
      InputFile input = parse_input_file(opts.input_path);
      run.load_digest();
      if (name == "polarize") return cmd_polarize(run, input);
      if (name == "facets") return cmd_facets(run, input);
      if (name == "adeg") return cmd_adeg(run, input);
      if (name == "hilbert") return cmd_hilbert(run, input);
      if (name == "depth") return cmd_depth(run, input);
      if (name == "clean") return cmd_clean(run, input);
      if (name == "pretty-clean") return cmd_pretty_clean(run, input);
      if (name == "verify-filtration") return cmd_verify_filtration(run, input);
      if (name == "stanley") return cmd_stanley(run, input);
      if (name == "verify-stanley") return cmd_verify_stanley(run, input);
      if (name == "correspond") return cmd_correspond(run, input);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
