// orbit-rank: C*-invariants of exponential solvable Lie groups.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbit_rank/filtration_io.hpp"
#include "orbit_rank/inference.hpp"
#include "orbit_rank/lie_file.hpp"
#include "orbit_rank/report.hpp"

using namespace orbit_rank;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

/// `catalog:<spec>` or a `.lie` file path.
LieAlgebra load_input(const std::string& input) {
  constexpr std::string_view prefix = "catalog:";
  if (input.rfind(prefix, 0) == 0) return catalog_spec(input.substr(prefix.size()));
  return load_lie_algebra(read_file(input));
}

int cmd_validate(const std::vector<std::string>& inputs) {
  int code = exit_ok;
  for (const auto& input : inputs) {
    try {
      const LieAlgebra L = load_input(input);
      std::cout << input << ": ok (dim " << L.dim() << ")\n";
    } catch (const std::exception& e) {
      std::cerr << input << ": " << e.what() << "\n";
      code = exit_input_error;
    }
  }
  return code;
}

int cmd_analyze(const std::vector<std::string>& inputs, const AnalyzeOptions& options, const std::string& json_out) {
  std::vector<nlohmann::ordered_json> reports;
  bool input_error = false, refusal = false;
  std::ostringstream human;
  for (const auto& input : inputs) {
    try {
      const LieAlgebra L = load_input(input);
      const AnalysisReport r = analyze(L, options);
      refusal = refusal || r.exit_code == exit_refusal;
      reports.push_back(r.json);
      if (inputs.size() > 1) human << "== " << input << "\n";
      human << render_report(r);
    } catch (const std::exception& e) {
      input_error = true;
      std::cerr << input << ": " << e.what() << "\n";
      reports.push_back(nlohmann::ordered_json{{"error", e.what()}});
    }
  }
  if (!json_out.empty()) {
    const nlohmann::ordered_json doc = reports.size() == 1 ? reports.front() : nlohmann::ordered_json(reports);
    write_output(json_out, doc.dump(2) + "\n");
  }
  if (json_out != "-") std::cout << human.str();
  return input_error ? exit_input_error : refusal ? exit_refusal : exit_ok;
}

int cmd_catalog_list() {
  for (const auto& e : catalog_entries()) {
    std::cout << e.name;
    if (!e.params.empty()) std::cout << ":" << e.params;
    std::cout << "  " << e.description << "\n";
  }
  return exit_ok;
}

int cmd_catalog_emit(const std::string& spec, const std::string& out) {
  write_output(out.empty() ? "-" : out, render_lie_file(catalog_spec(spec)));
  return exit_ok;
}

int cmd_infer(const std::string& path, const std::string& json_out) {
  const FiltrationDoc doc = load_filtration_file(path);
  const FactTable table = infer(doc);
  if (!json_out.empty()) write_output(json_out, fact_table_to_json(table).dump(2) + "\n");
  if (json_out != "-") std::cout << render_fact_table(table);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real rank, stable rank and projection verdicts for C*-algebras of exponential Lie groups"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  auto* validate_cmd = app.add_subcommand("validate", "Parse .lie inputs and check the Jacobi identity");
  validate_cmd->add_option("inputs", inputs, "`.lie` files or catalog:<name>[:<params>]")->required();

  AnalyzeOptions options;
  bool not_simply_connected = false;
  std::string json_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full analysis and print a report");
  analyze_cmd->add_option("inputs", inputs, "`.lie` files or catalog:<name>[:<params>]")->required();
  analyze_cmd->add_option("--json", json_out, "Write the JSON report to this path (`-` for stdout)");
  analyze_cmd->add_option("--samples", options.samples, "Samples for the open-orbit component estimate")
      ->capture_default_str();
  analyze_cmd->add_option("--seed", options.seed, "Seed for every randomized step")->capture_default_str();
  analyze_cmd->add_flag("--assume-exponential", options.assume_exponential,
                        "Skip the exponentiality screen and assert the hypothesis");
  analyze_cmd->add_flag("--not-simply-connected", not_simply_connected,
                        "Group is connected but not simply connected");

  auto* catalog_cmd = app.add_subcommand("catalog", "List or emit built-in algebras");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "Print names and parameter schemas");
  std::string spec, emit_out;
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "Write the .lie file for a catalog algebra");
  emit_cmd->add_option("spec", spec, "name[:params], summands joined with +")->required();
  emit_cmd->add_option("-o,--output", emit_out, "Output path (default stdout)");

  std::string filt_path;
  auto* infer_cmd = app.add_subcommand("infer", "Run the rank inference engine on a filtration document");
  infer_cmd->add_option("path", filt_path, "`.filt` or `.json` filtration document")->required();
  infer_cmd->add_option("--json", json_out, "Write the fact table as JSON to this path (`-` for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate(inputs);
    if (analyze_cmd->parsed()) {
      options.simply_connected = !not_simply_connected;
      return cmd_analyze(inputs, options, json_out);
    }
    if (list_cmd->parsed()) return cmd_catalog_list();
    if (emit_cmd->parsed()) return cmd_catalog_emit(spec, emit_out);
    if (infer_cmd->parsed()) return cmd_infer(filt_path, json_out);
  } catch (const Contradiction& e) {
    std::cerr << "contradiction: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}
