#ifndef FILTRA_SCENARIO_HPP
#define FILTRA_SCENARIO_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "filtra/error.hpp"
#include "filtra/gcs.hpp"
#include "filtra/preorder.hpp"
#include "filtra/revision.hpp"
#include "filtra/universe.hpp"

namespace filtra {

// Schema violation, dangling id or malformed event key. `context` is a
// field path such as gcs.f["a,b"] or a line/column for JSON syntax errors.
class ScenarioError : public Error {
 public:
  ScenarioError(std::string context, const std::string& what)
      : Error(context.empty() ? what : context + ": " + what), context_(std::move(context)) {}

  const std::string& context() const { return context_; }

 private:
  std::string context_;
};

using IdList = std::vector<std::string>;

struct ScenarioState {
  std::string id;
  std::vector<std::string> true_atoms;
};

struct ScenarioGcs {
  std::vector<IdList> credible;
  std::vector<IdList> allowable;
  std::vector<IdList> rejected;
  std::map<std::string, IdList> f;  // event key -> chosen states
};

struct ScenarioTable {
  IdList initial;
  std::map<std::string, IdList> entries;  // event key -> models of the revision
};

// Scenario file contents. Every id list is held sorted, which is also the
// form written back out.
struct Scenario {
  std::string comments;
  std::vector<std::string> atoms;
  std::vector<ScenarioState> states;
  std::optional<ScenarioGcs> gcs;
  std::optional<std::map<std::string, unsigned>> preorder;
  std::map<std::string, char> labeling;  // event key -> 'C' | 'A' | 'R'
  std::optional<ScenarioTable> table;
};

Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);
std::string dump_scenario(const Scenario& s);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

// Sorted, comma-joined member ids; "" for the empty event.
std::string event_key(const PointSet& e, const Universe& u);
// Throws ScenarioError for unknown ids or a key that is not canonical.
PointSet event_from_key(std::string_view key, const Universe& u);

UniversePtr universe_of(const Scenario& s);
// Require the corresponding optional section; ScenarioError otherwise.
Gcs gcs_of(const Scenario& s, const UniversePtr& u);
PlausibilityOrder preorder_of(const Scenario& s, const Universe& u);
RevisionTable table_of(const Scenario& s, const UniversePtr& u);
// Labels from the GCS families (when present), then the overrides. Any
// other proposition is rejected, except the full set which is credible.
CredibilityLabeling labeling_of(const Scenario& s, const UniversePtr& u);

// Scenario carrying a table (and optionally its full labeling) over u.
Scenario scenario_from_table(const RevisionTable& t, const CredibilityLabeling* labeling,
                             std::string comments);

// The bundled detective scenario, byte-identical to data/detective.json.
std::string_view detective_scenario_json();

}  // namespace filtra

#endif  // FILTRA_SCENARIO_HPP
