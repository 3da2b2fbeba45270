#include "nodal/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nodal/errors.hpp"
#include "nodal/nodecount.hpp"
#include "nodal/report.hpp"
#include "nodal/svg.hpp"

namespace nodal {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct AnalyzeOptions {
  std::string formula = "all";
  bool json = false;
  bool strict = false;
  std::string svg_path;
};

void trim_to_formula(AnalysisReport& rep, const std::string& formula) {
  if (formula == "all") return;
  if (formula != "punctured") rep.d_punctured.reset();
  if (formula != "conjecture") {
    rep.d_conjecture.reset();
    std::erase_if(rep.notes, [](const std::string& note) {
      return note.find("CONJECTURAL") != std::string::npos;
    });
  }
}

int analyze_one(const std::string& path, const AnalyzeOptions& opt, std::ostream& out) {
  InputDocument doc = parse_input(slurp(path));
  AnalysisReport rep = analyze(doc.support, doc.name.empty() ? path : doc.name);
  rep.notes.insert(rep.notes.begin(), doc.notes.begin(), doc.notes.end());
  trim_to_formula(rep, opt.formula);
  if (!opt.svg_path.empty()) write_svg(rep.polygon, opt.svg_path);
  out << (opt.json ? render_json(rep) : render_text(rep, opt.formula));
  if (opt.strict && !rep.assumptions.all_ok())
    return static_cast<int>(ExitStatus::assumption_violated);
  return static_cast<int>(ExitStatus::ok);
}

std::vector<Int> parse_sequence(const std::string& csv) {
  std::vector<Int> out;
  std::string token;
  std::istringstream is(csv);
  while (std::getline(is, token, ',')) {
    size_t i = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
    if (i == token.size()) throw input_error("chi: bad sequence entry '" + token + "'");
    for (; i < token.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(token[i])))
        throw input_error("chi: bad sequence entry '" + token + "'");
    out.emplace_back(token);
  }
  if (out.empty()) throw input_error("chi: empty sequence");
  return out;
}

int run_batch(const std::string& dir, bool json, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw input_error("batch: not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw input_error("batch: no .json files in " + dir);

  int worst = 0;
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const std::string& file : files) {
    try {
      InputDocument doc = parse_input(slurp(file));
      AnalysisReport rep =
          analyze(doc.support, doc.name.empty() ? fs::path(file).filename().string() : doc.name);
      rep.notes.insert(rep.notes.begin(), doc.notes.begin(), doc.notes.end());
      if (json) {
        nlohmann::ordered_json one = nlohmann::ordered_json::parse(render_json(rep));
        one["file"] = fs::path(file).filename().string();
        array.push_back(std::move(one));
      } else {
        out << "== " << fs::path(file).filename().string() << " ==\n" << render_text(rep) << "\n";
      }
    } catch (const input_error& e) {
      err << "error (" << file << "): " << e.what() << "\n";
      worst = std::max(worst, static_cast<int>(ExitStatus::bad_input));
    } catch (const internal_error& e) {
      err << "inconsistency (" << file << "): " << e.what() << "\n";
      worst = std::max(worst, static_cast<int>(ExitStatus::inconsistency));
    }
  }
  if (json) out << array.dump(2) << "\n";
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"node counts of plane projections of complete intersection curves"};
  app.require_subcommand(1);

  AnalyzeOptions opt;
  std::string path, dir, sequence;
  bool batch_json = false;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full analysis of one support set");
  analyze_cmd->add_option("file", path, "input JSON file")->required();
  analyze_cmd->add_option("--formula", opt.formula, "closure|punctured|conjecture|all")
      ->check(CLI::IsMember({"closure", "punctured", "conjecture", "all"}));
  analyze_cmd->add_flag("--json", opt.json, "machine readable report");
  analyze_cmd->add_flag("--strict", opt.strict, "exit 2 when an assumption is violated");
  analyze_cmd->add_option("--svg", opt.svg_path, "write the fiber polygon as SVG");

  CLI::App* check_cmd = app.add_subcommand("check", "report assumption verdicts only");
  check_cmd->add_option("file", path, "input JSON file")->required();

  CLI::App* fiber_cmd = app.add_subcommand("fiber", "print the fiber polygon");
  fiber_cmd->add_option("file", path, "input JSON file")->required();

  CLI::App* chi_cmd = app.add_subcommand("chi", "forking-paths invariants of an index sequence");
  chi_cmd->add_option("--sequence", sequence, "comma separated divisor chain, e.g. 8,4,2,1")
      ->required();

  CLI::App* mixed_cmd = app.add_subcommand("mixedvol", "normalized mixed volume of a tuple");
  mixed_cmd->add_option("file", path, "input JSON file with 'polytopes'")->required();

  CLI::App* batch_cmd = app.add_subcommand("batch", "analyze every .json file in a directory");
  batch_cmd->add_option("dir", dir, "input directory")->required();
  batch_cmd->add_flag("--json", batch_json, "one JSON array of reports");

  std::vector<const char*> argv{"nodal"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      out << app.help();
      return static_cast<int>(ExitStatus::ok);
    }
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitStatus::bad_input);
  }

  try {
    if (analyze_cmd->parsed()) return analyze_one(path, opt, out);
    if (check_cmd->parsed()) {
      InputDocument doc = parse_input(slurp(path));
      AssumptionReport rep = check_assumptions(doc.support);
      out << render_assumptions_text(rep) << "\n";
      return static_cast<int>(ExitStatus::ok);
    }
    if (fiber_cmd->parsed()) {
      InputDocument doc = parse_input(slurp(path));
      out << render_fiber_text(fiber_polygon(doc.support));
      return static_cast<int>(ExitStatus::ok);
    }
    if (chi_cmd->parsed()) {
      FpsInvariants inv = forking_paths_invariants(parse_sequence(sequence));
      out << "N=" << inv.nodes << " chi=" << inv.chi << " delta=" << inv.delta << "\n";
      return static_cast<int>(ExitStatus::ok);
    }
    if (mixed_cmd->parsed()) {
      auto [name, tuple] = parse_bodies(slurp(path));
      out << "normalized_mixed_volume = " << normalized_mixed_volume(tuple) << "\n";
      return static_cast<int>(ExitStatus::ok);
    }
    if (batch_cmd->parsed()) return run_batch(dir, batch_json, out, err);
    err << "error: no subcommand\n";
    return static_cast<int>(ExitStatus::bad_input);
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitStatus::bad_input);
  } catch (const assumption_error& e) {
    err << "assumption violated: " << e.what() << "\n";
    return static_cast<int>(ExitStatus::assumption_violated);
  } catch (const internal_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return static_cast<int>(ExitStatus::inconsistency);
  }
}

}  // namespace nodal
