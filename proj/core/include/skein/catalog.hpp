#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/homotopy.hpp"

namespace skein {

inline constexpr int kFixtureSchema = 1;

struct UnknottingCrossing {
  int crossing = 0;
  int ind = 0;
};

struct CatalogEntry {
  std::string name;
  LongDiagram diagram;
  FramingData framing;
  std::optional<FramingData> anchor;  // checked against `framing` on load
  std::vector<UnknottingCrossing> unknotting;
  std::string note;
};

struct ScenarioInfo {
  std::string name;
  std::string description;
  Path path;
};

// Fixture directory contents, read once and then immutable.
class Catalog {
 public:
  // Reads <dir>/diagrams/*.json, <dir>/scenarios/*.json and
  // <dir>/meridians.json. Throws ValidationError on malformed fixtures.
  static Catalog load(const std::filesystem::path& dir);

  // Directory from SKEIN_FIXTURES, else the one configured at build time.
  static std::filesystem::path default_directory();
  // Lazily loaded catalog for default_directory().
  static const Catalog& standard();

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::vector<std::string> names() const;
  std::vector<std::string> scenario_names() const;
  bool contains(const std::string& name) const { return entries_.count(name) > 0; }

  // Throws UnknownName.
  const CatalogEntry& get(const std::string& name) const;
  const ScenarioInfo& scenario_info(const std::string& name) const;
  Path scenario(const std::string& name) const { return scenario_info(name).path; }
  const nlohmann::json& meridians() const noexcept { return meridians_; }

  DiagramResolver resolver() const;

 private:
  std::filesystem::path dir_;
  std::map<std::string, CatalogEntry> entries_;
  std::map<std::string, ScenarioInfo> scenarios_;
  nlohmann::json meridians_;
};

// JSON text parsers. Malformed JSON raises SyntaxError with the byte offset;
// structural problems raise ValidationError naming the offending element.
nlohmann::json parse_json(std::string_view text);
LongDiagram parse_diagram(std::string_view text);
Path parse_path(std::string_view text, const DiagramResolver& resolve);

// Writes one catalog entry as a fixture document.
nlohmann::json entry_to_json(const CatalogEntry& e);

}  // namespace skein
