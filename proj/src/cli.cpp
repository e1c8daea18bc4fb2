#include "perfprof/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "perfprof/config_io.hpp"
#include "perfprof/curve_json.hpp"
#include "perfprof/dataset.hpp"
#include "perfprof/render.hpp"

namespace perfprof::cli {

namespace {

std::optional<std::string> read_input(const std::string& path, std::istream& in,
                                      std::ostream& err) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  return std::string(std::istreambuf_iterator<char>(file), {});
}

bool write_output(const std::string& path, const std::string& data,
                  std::ostream& out, std::ostream& err) {
  if (path == "-") {
    out << data;
    out.flush();
    return static_cast<bool>(out);
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  file << data;
  file.close();
  if (!file) {
    err << "error: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

struct NumberFlag {
  std::string text;
  bool set() const { return !text.empty(); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Performance profiles and what-if analysis for benchmark results",
               args.empty() ? "perfprof" : args.front()};
  app.require_subcommand(1);

  std::string input;
  std::string output = "-";

  auto* validate = app.add_subcommand("validate", "Check a results file");
  validate->add_option("-i,--input", input, "Results file ('-' for stdin)")->required();

  auto* schema = app.add_subcommand("schema", "Print the JSON Schema of the input format");
  schema->add_option("-o,--output", output, "Output file ('-' for stdout)");

  auto* profile = app.add_subcommand("profile", "Compute and export performance profiles");
  std::string format = "svg";
  std::string title;
  ConfigFlags flags;
  NumberFlag tau_min, tau_max, min_baseline, unsolved;
  std::string x_scale;
  profile->add_option("-i,--input", input, "Results file ('-' for stdin)")->required();
  profile->add_option("-o,--output", output, "Output file ('-' for stdout)");
  profile->add_option("--format", format, "svg, html or json")
      ->check(CLI::IsMember({"svg", "html", "json"}));
  profile->add_option("--title", title, "HTML page title (defaults to the metric name)");
  profile->add_option("--baseline", flags.baselines,
                      "Baseline solver; repeat for several (default: all solvers)");
  profile->add_option("--drop-label", flags.drop_labels,
                      "Remove instances carrying this label; repeatable");
  profile->add_option("--scale", flags.scales,
                      "What-if factor SOLVER/COMPONENT=FACTOR; repeatable");
  profile->add_option("--tau-min", tau_min.text, "Lower end of the focus region (default 0)");
  profile->add_option("--tau-max", tau_max.text, "Upper end of the focus region (default 2)");
  profile->add_option("--x-scale", x_scale, "linear or log (default linear)");
  profile->add_option("--min-baseline", min_baseline.text,
                      "Drop instances where a baseline is below this value");
  profile->add_option("--unsolved", unsolved.text,
                      "Treat values above this as unsolved");

  std::vector<const char*> argv;
  std::string program = args.empty() ? "perfprof" : args.front();
  argv.push_back(program.c_str());
  for (std::size_t k = 1; k < args.size(); ++k) argv.push_back(args[k].c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (schema->parsed()) {
    return write_output(output, std::string(dataset_schema()), out, err) ? kOk : kUsage;
  }

  auto raw = read_input(input, in, err);
  if (!raw) return kUsage;
  auto parsed = parse_dataset(*raw);

  if (validate->parsed()) {
    out << parsed.report.to_text();
    if (!parsed.report.ok()) return kInvalid;
    const auto& ds = *parsed.dataset;
    out << "ok: " << ds.solvers.size() << " solvers, " << ds.instance_count()
        << " instances, " << ds.labels.size() << " labels\n";
    return kOk;
  }

  if (!parsed.report.ok()) {
    err << parsed.report.to_text();
    return kInvalid;
  }
  err << parsed.report.to_text();  // warnings only
  const auto& dataset = *parsed.dataset;

  bool bad_number = false;
  auto number = [&](const NumberFlag& flag, const char* name) -> std::optional<double> {
    if (!flag.set()) return std::nullopt;
    auto v = parse_number(flag.text);
    if (!v) {
      err << "error: " << name << ": invalid number '" << flag.text << "'\n";
      bad_number = true;
    }
    return v;
  };
  flags.tau_min = number(tau_min, "--tau-min");
  flags.tau_max = number(tau_max, "--tau-max");
  flags.min_baseline = number(min_baseline, "--min-baseline");
  flags.unsolved = number(unsolved, "--unsolved");
  if (!x_scale.empty()) flags.x_scale = x_scale;
  if (bad_number) return kUsage;

  auto resolved = config_from_flags(dataset, flags);
  if (!resolved.report.ok()) {
    err << resolved.report.to_text();
    return kUsage;
  }

  const auto profiles = analyze(dataset, resolved.config);
  std::string product;
  try {
    if (format == "json") {
      product = curves_document(profiles);
    } else {
      product = render_svg(profiles, resolved.config);
      if (format == "html") product = render_html(product, title);
    }
  } catch (const RenderError& e) {
    err << "error: " << e.what() << " (every instance was filtered out)\n";
    return kInvalid;
  }
  return write_output(output, product, out, err) ? kOk : kUsage;
}

}  // namespace perfprof::cli
