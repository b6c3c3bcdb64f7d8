#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <skein/bracket.hpp>
#include <skein/catalog.hpp>
#include <skein/cocycle.hpp>
#include <skein/errors.hpp>

namespace skein::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  bool json = false;
  std::string method = "auto";
  int threads = 1;

  std::string input;
  bool eval = false;

  bool loop = false;
  bool generic = false;
  bool audit = false;

  std::string suite;
  std::uint64_t seed = 1;
  int count = 200;
  int max_crossings = 9;
  std::vector<std::string> sets;

  std::string name;
};

EvalOptions eval_options(const Options& o) {
  EvalOptions e;
  if (o.method == "naive") e.method = EvalMethod::naive;
  else if (o.method == "contraction") e.method = EvalMethod::contraction;
  e.threads = o.threads;
  return e;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw ValidationError("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Relative paths that do not exist are also looked up in the fixture
// directory, so "scenarios/x.json" works from anywhere.
std::optional<fs::path> find_file(const std::string& arg) {
  if (fs::is_regular_file(arg)) return fs::path(arg);
  const fs::path p(arg);
  if (p.is_relative()) {
    const auto alt = Catalog::default_directory() / p;
    if (fs::is_regular_file(alt)) return alt;
  }
  return std::nullopt;
}

std::string strip_at(const std::string& s) { return !s.empty() && s[0] == '@' ? s.substr(1) : s; }

DiagramResolver lazy_resolver() {
  return [](const std::string& name) { return Catalog::standard().get(name).diagram; };
}

LongDiagram load_diagram(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return Catalog::standard().get(arg.substr(1)).diagram;
  if (auto f = find_file(arg)) return parse_diagram(read_file(*f));
  throw UnknownName("no such file '" + arg + "' (use @name for catalog diagrams)");
}

Path load_path(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return Catalog::standard().scenario(arg.substr(1));
  if (auto f = find_file(arg)) return parse_path(read_file(*f), lazy_resolver());
  // Bare scenario names, with '-' accepted for '_'.
  auto name = arg;
  std::replace(name.begin(), name.end(), '-', '_');
  const auto& cat = Catalog::standard();
  const auto names = cat.scenario_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return cat.scenario(name);
  throw UnknownName("no such file or scenario '" + arg + "'");
}

Specialization specialization(const std::vector<std::string>& sets) {
  Specialization s;
  if (sets.empty()) return s;
  std::string label;
  for (const auto& item : sets) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("--set expects VAR=VALUE, got '" + item + "'");
    const auto var = item.substr(0, eq);
    const auto value = parse_skein(item.substr(eq + 1));
    if (var == "B") s.b = value;
    else if (var == "C") s.c = value;
    else throw ValidationError("--set variable must be B or C, got '" + var + "'");
    label += (label.empty() ? "" : ",") + item;
  }
  s.label = label;
  return s;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_bracket(const Options& o, std::ostream& out) {
  const auto d = load_diagram(o.input);
  const auto opts = eval_options(o);
  const bool singular = d.double_point_count() > 0;
  std::string text;
  json terms;
  if (!singular) {
    const auto p = kauffman_bracket(d, opts);
    text = format(p);
    terms = to_json(p);
  } else if (o.eval) {
    const auto p = singular_bracket_eval(d, opts);
    text = format(p);
    terms = to_json(p);
  } else {
    const auto p = singular_bracket(d, opts);
    text = format(p);
    terms = to_json(p);
  }
  if (o.json) {
    print_json(out, {{"command", "bracket"},
                     {"input", o.input},
                     {"singular", singular},
                     {"evaluated", singular && o.eval},
                     {"value", text},
                     {"terms", terms}});
  } else {
    out << text << "\n";
  }
  return 0;
}

int cmd_jones(const Options& o, std::ostream& out) {
  const auto p = jones(load_diagram(o.input), eval_options(o));
  if (o.json) {
    print_json(out, {{"command", "jones"}, {"input", o.input}, {"value", format(p)}, {"terms", to_json(p)}});
  } else {
    out << format(p) << "\n";
  }
  return 0;
}

int cmd_vs(const Options& o, std::ostream& out) {
  const auto p = vs_polynomial(load_diagram(o.input), eval_options(o));
  if (o.json) {
    print_json(out, {{"command", "vs"}, {"input", o.input}, {"value", format(p)}, {"terms", to_json(p)}});
  } else {
    out << format(p) << "\n";
  }
  return 0;
}

int cmd_cross(const Options& o, std::ostream& out, std::ostream& err) {
  const auto path = load_path(o.input);
  const auto opts = eval_options(o);
  if (o.generic) {
    if (o.loop && !is_loop(path)) throw NotALoop("path does not return to its start");
    const auto v = generic_cross(path, opts);
    if (o.json) {
      print_json(out, {{"command", "cross"}, {"input", o.input}, {"generic", true}, {"value", format(v)},
                       {"terms", to_json(v)}});
    } else {
      out << format(v) << "\n";
    }
    return 0;
  }
  const auto rep = o.loop ? cross_of_loop(path, opts) : cross_of_path(path, opts);
  for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
  if (o.json) {
    auto j = to_json(rep, o.audit);
    j["command"] = "cross";
    j["input"] = o.input;
    print_json(out, j);
    return 0;
  }
  if (o.audit) {
    for (const auto& c : rep.contributions) {
      out << "# event " << c.wall.position << ": crossing " << c.wall.crossing << ", ind " << (c.wall.ind > 0 ? "+1" : "-1")
          << ", " << format(c.value) << ", "
          << (c.certificate.status == Essentialness::essential ? "essential" : "inconclusive") << "\n";
    }
    out << "# ind sum " << rep.ind_sum << ", framing (" << rep.start_framing.writhe << ", "
        << rep.start_framing.whitney << ") -> (" << rep.end_framing.writhe << ", " << rep.end_framing.whitney << ")"
        << (rep.framing_ok ? "" : " MISMATCH") << "\n";
  }
  out << format(rep.value) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteReport rep;
  if (o.suite == "meridians") {
    const auto& cat = Catalog::standard();
    rep = meridian_suite(cat.meridians(), specialization(o.sets), cat.resolver());
  } else if (o.suite == "moves") {
    rep = move_suite(o.seed, o.count, o.max_crossings);
  } else if (o.suite == "oracle") {
    rep = oracle_suite(o.seed, o.count, o.max_crossings);
  } else if (o.suite == "framing") {
    rep = framing_suite(o.seed, o.count, o.max_crossings);
  }
  if (o.json) {
    print_json(out, to_json(rep));
  } else {
    for (const auto& s : rep.scenarios) {
      out << (s.passed ? "PASS " : "FAIL ") << s.name;
      if (!s.messages.empty()) out << ": " << s.messages.front();
      out << "\n";
      for (std::size_t i = 1; i < s.messages.size(); ++i) out << "     " << s.messages[i] << "\n";
    }
    out << rep.name << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  return rep.passed() ? 0 : 1;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
  const auto& cat = Catalog::standard();
  if (o.json) {
    json d = json::array();
    for (const auto& n : cat.names()) {
      const auto& e = cat.get(n);
      d.push_back({{"name", n},
                   {"crossings", e.diagram.size()},
                   {"framing", {{"writhe", e.framing.writhe}, {"whitney", e.framing.whitney}}}});
    }
    json s = json::array();
    for (const auto& n : cat.scenario_names()) {
      s.push_back({{"name", n}, {"description", cat.scenario_info(n).description}});
    }
    print_json(out, {{"diagrams", d}, {"scenarios", s}});
    return 0;
  }
  out << "diagrams:\n";
  for (const auto& n : cat.names()) {
    const auto& e = cat.get(n);
    out << "  " << n << "  crossings=" << e.diagram.size() << " w=" << e.framing.writhe << " n=" << e.framing.whitney
        << "\n";
  }
  out << "scenarios:\n";
  for (const auto& n : cat.scenario_names()) {
    out << "  " << n << "  events=" << cat.scenario_info(n).path.events.size() << "\n";
  }
  return 0;
}

int cmd_catalog_show(const Options& o, std::ostream& out) {
  const auto& cat = Catalog::standard();
  const auto name = strip_at(o.name);
  if (cat.contains(name)) {
    const auto& e = cat.get(name);
    if (o.json) {
      print_json(out, entry_to_json(e));
      return 0;
    }
    out << "name: " << e.name << "\n";
    out << "crossings: " << e.diagram.size() << "\n";
    out << "writhe: " << e.framing.writhe << "\n";
    out << "whitney: " << e.framing.whitney << "\n";
    out << "unknotting:";
    if (e.unknotting.empty()) out << " none";
    for (const auto& u : e.unknotting) out << " c" << u.crossing << (u.ind > 0 ? "(+1)" : "(-1)");
    out << "\n";
    if (!e.note.empty()) out << "note: " << e.note << "\n";
    out << "diagram: " << to_json(e.diagram).dump() << "\n";
    return 0;
  }
  const auto& s = cat.scenario_info(name);
  if (o.json) {
    auto j = to_json(s.path);
    j["name"] = s.name;
    j["description"] = s.description;
    print_json(out, j);
    return 0;
  }
  out << "name: " << s.name << "\n";
  out << "description: " << s.description << "\n";
  out << "events: " << s.path.events.size() << "\n";
  for (std::size_t i = 0; i < s.path.events.size(); ++i) out << "  " << i << ": " << describe(s.path.events[i]) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Kauffman bracket, singular bracket and Cross cocycle calculator", "skein"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--method", o.method, "Bracket evaluator")
      ->check(CLI::IsMember({"auto", "naive", "contraction"}))
      ->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads for the naive evaluator")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  auto* bracket = app.add_subcommand("bracket", "Kauffman or singular bracket of a diagram");
  bracket->add_option("input", o.input, "Diagram file or @name")->required();
  bracket->add_flag("--eval", o.eval, "Evaluate double points at B=1, C=-1");

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial (in A) of a diagram");
  jones_cmd->add_option("input", o.input, "Diagram file or @name")->required();

  auto* vs = app.add_subcommand("vs", "Normalized singular bracket (B and C free)");
  vs->add_option("input", o.input, "Diagram file or @name")->required();

  auto* cross = app.add_subcommand("cross", "Cross of a path script");
  cross->add_option("script", o.input, "Path script file, @scenario or scenario name")->required();
  cross->add_flag("--loop", o.loop, "Require the path to be a loop");
  cross->add_flag("--generic", o.generic, "Keep B and C symbolic");
  cross->add_flag("--audit", o.audit, "Per-wall breakdown");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "meridians, moves, oracle or framing")
      ->required()
      ->check(CLI::IsMember({"meridians", "moves", "oracle", "framing"}));
  verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify->add_option("--count", o.count, "Number of random trials")->check(CLI::Range(1, 1000000))->capture_default_str();
  verify->add_option("--max-crossings", o.max_crossings, "Crossing bound for random diagrams")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  verify->add_option("--set", o.sets, "Specialization for the meridian suite, e.g. C=B");

  auto* catalog = app.add_subcommand("catalog", "Bundled diagrams and scenarios");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog contents");
  auto* show = catalog->add_subcommand("show", "Show one diagram or scenario");
  show->add_option("name", o.name, "Catalog name")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    if (o.json) out << json{{"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  }

  try {
    if (bracket->parsed()) return cmd_bracket(o, out);
    if (jones_cmd->parsed()) return cmd_jones(o, out);
    if (vs->parsed()) return cmd_vs(o, out);
    if (cross->parsed()) return cmd_cross(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (list->parsed()) return cmd_catalog_list(o, out);
    if (show->parsed()) return cmd_catalog_show(o, out);
  } catch (const Error& e) {
    json j = {{"kind", e.kind()}, {"message", e.what()}};
    if (auto s = dynamic_cast<const SyntaxError*>(&e)) j["position"] = s->position();
    if (o.json) print_json(out, {{"error", j}});
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    if (o.json) print_json(out, {{"error", {{"kind", "InternalError"}, {"message", e.what()}}}});
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace skein::cli
