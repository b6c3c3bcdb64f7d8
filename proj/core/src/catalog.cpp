#include "skein/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "skein/errors.hpp"

#ifndef SKEIN_DEFAULT_FIXTURES
#define SKEIN_DEFAULT_FIXTURES "fixtures"
#endif

namespace skein {

namespace fs = std::filesystem;

namespace {

nlohmann::json read_json_file(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot read " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const SyntaxError& e) {
    throw SyntaxError(file.string() + ": malformed JSON", e.position());
  }
}

void require_schema(const nlohmann::json& j, const fs::path& file) {
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_number_integer()) {
    throw ValidationError(file.string() + ": missing integer 'schema' field");
  }
  if (j["schema"].get<int>() != kFixtureSchema) {
    throw ValidationError(file.string() + ": unsupported schema " + std::to_string(j["schema"].get<int>()));
  }
}

std::vector<fs::path> json_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& ent : fs::directory_iterator(dir)) {
    if (ent.is_regular_file() && ent.path().extension() == ".json") out.push_back(ent.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

FramingData framing_from_json(const nlohmann::json& j) {
  return {j.at("writhe").get<int>(), j.at("whitney").get<int>()};
}

}  // namespace

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError("malformed JSON", e.byte);
  }
}

LongDiagram parse_diagram(std::string_view text) { return diagram_from_json(parse_json(text)); }

Path parse_path(std::string_view text, const DiagramResolver& resolve) {
  auto p = path_from_json(parse_json(text), resolve);
  auto t = validate_path(p);
  if (!t.ok) {
    throw ValidationError(t.failed_at >= 0 ? "event " + std::to_string(t.failed_at) + ": " + t.message : t.message);
  }
  return p;
}

nlohmann::json entry_to_json(const CatalogEntry& e) {
  nlohmann::json u = nlohmann::json::array();
  for (const auto& x : e.unknotting) u.push_back({{"crossing", x.crossing}, {"ind", x.ind}});
  nlohmann::json j = {{"schema", kFixtureSchema},
                      {"name", e.name},
                      {"diagram", to_json(e.diagram)},
                      {"framing", {{"writhe", e.framing.writhe}, {"whitney", e.framing.whitney}}},
                      {"unknotting", u}};
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

Catalog Catalog::load(const fs::path& dir) {
  Catalog c;
  c.dir_ = dir;
  if (!fs::is_directory(dir)) throw ValidationError("fixture directory not found: " + dir.string());

  // Plain diagrams first, connected sums once their summands exist.
  std::vector<std::pair<fs::path, nlohmann::json>> pending;
  for (const auto& file : json_files(dir / "diagrams")) {
    auto j = read_json_file(file);
    require_schema(j, file);
    pending.emplace_back(file, std::move(j));
  }
  while (!pending.empty()) {
    const auto before = pending.size();
    for (auto it = pending.begin(); it != pending.end();) {
      const auto& [file, j] = *it;
      CatalogEntry e;
      try {
        e.name = j.at("name").get<std::string>();
        if (j.contains("connected_sum")) {
          const auto parts = j["connected_sum"].get<std::vector<std::string>>();
          if (!std::all_of(parts.begin(), parts.end(), [&](const auto& n) { return c.entries_.count(n) > 0; })) {
            ++it;
            continue;
          }
          for (const auto& n : parts) e.diagram = connected_sum(e.diagram, c.entries_.at(n).diagram);
        } else {
          e.diagram = diagram_from_json(j.at("diagram"));
        }
        e.framing = framing(e.diagram);
        if (j.contains("anchor")) e.anchor = framing_from_json(j["anchor"]);
        for (const auto& u : j.value("unknotting", nlohmann::json::array())) {
          e.unknotting.push_back({u.at("crossing").get<int>(), u.at("ind").get<int>()});
        }
        e.note = j.value("note", std::string());
      } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(file.string() + ": " + ex.what());
      } catch (const Error& ex) {
        throw ValidationError(file.string() + ": " + ex.what());
      }
      if (e.anchor && *e.anchor != e.framing) {
        throw ValidationError(file.string() + ": framing (" + std::to_string(e.framing.writhe) + ", " +
                              std::to_string(e.framing.whitney) + ") does not match the recorded anchor");
      }
      for (const auto& u : e.unknotting) {
        if (u.crossing < 0 || u.crossing >= e.diagram.size() || crossing_sign(e.diagram, u.crossing) != -u.ind) {
          throw ValidationError(file.string() + ": unknotting crossing " + std::to_string(u.crossing) +
                                " does not have ind " + std::to_string(u.ind));
        }
      }
      if (!c.entries_.emplace(e.name, e).second) throw ValidationError(file.string() + ": duplicate name " + e.name);
      it = pending.erase(it);
    }
    if (pending.size() == before) {
      throw ValidationError(pending.front().first.string() + ": connected sum refers to unknown diagrams");
    }
  }

  const auto resolve = c.resolver();
  for (const auto& file : json_files(dir / "scenarios")) {
    auto j = read_json_file(file);
    require_schema(j, file);
    ScenarioInfo s;
    try {
      s.name = j.at("name").get<std::string>();
      s.description = j.value("description", std::string());
      s.path = path_from_json(j, resolve);
    } catch (const nlohmann::json::exception& ex) {
      throw ValidationError(file.string() + ": " + ex.what());
    } catch (const Error& ex) {
      throw ValidationError(file.string() + ": " + ex.what());
    }
    const auto t = validate_path(s.path);
    if (!t.ok) throw ValidationError(file.string() + ": " + t.message);
    if (!c.scenarios_.emplace(s.name, s).second) throw ValidationError(file.string() + ": duplicate name " + s.name);
  }

  const auto mer = dir / "meridians.json";
  if (fs::exists(mer)) {
    c.meridians_ = read_json_file(mer);
    require_schema(c.meridians_, mer);
  }
  return c;
}

fs::path Catalog::default_directory() {
  if (const char* env = std::getenv("SKEIN_FIXTURES"); env != nullptr && *env != '\0') return env;
  return SKEIN_DEFAULT_FIXTURES;
}

const Catalog& Catalog::standard() {
  static const Catalog cat = load(default_directory());
  return cat;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [n, e] : entries_) out.push_back(n);
  return out;
}

std::vector<std::string> Catalog::scenario_names() const {
  std::vector<std::string> out;
  for (const auto& [n, s] : scenarios_) out.push_back(n);
  return out;
}

const CatalogEntry& Catalog::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw UnknownName("no catalog diagram named '" + name + "'");
  return it->second;
}

const ScenarioInfo& Catalog::scenario_info(const std::string& name) const {
  auto it = scenarios_.find(name);
  if (it == scenarios_.end()) throw UnknownName("no scenario named '" + name + "'");
  return it->second;
}

DiagramResolver Catalog::resolver() const {
  return [this](const std::string& name) { return get(name).diagram; };
}

}  // namespace skein
