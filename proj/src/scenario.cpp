#include "filtra/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace filtra {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string join(const IdList& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ",";
    out += ids[i];
  }
  return out;
}

IdList split_key(std::string_view key) {
  IdList out;
  if (key.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = key.find(',', start);
    out.emplace_back(key.substr(start, comma == std::string_view::npos ? key.size() - start
                                                                        : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string quoted(const std::string& s) { return "[\"" + s + "\"]"; }

class Reader {
 public:
  explicit Reader(const json& root) : root_(root) {}

  Scenario read() {
    expect_object(root_, "");
    allow_keys(root_, "", {"comments", "atoms", "states", "gcs", "preorder", "labeling", "table"});
    Scenario s;
    if (root_.contains("comments")) s.comments = string_at(root_["comments"], "comments");
    read_atoms(s);
    read_states(s);
    if (root_.contains("gcs")) s.gcs = read_gcs(root_["gcs"]);
    if (root_.contains("preorder")) read_preorder(s, root_["preorder"]);
    if (root_.contains("labeling")) read_labeling(s, root_["labeling"]);
    if (root_.contains("table")) s.table = read_table(root_["table"]);
    return s;
  }

 private:
  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw ScenarioError(path.empty() ? "(root)" : path, what);
  }

  static void expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
  }

  static void allow_keys(const json& j, const std::string& path,
                         std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        fail(path.empty() ? key : path + "." + key, "unknown field");
      }
    }
  }

  static std::string string_at(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  static const json& array_at(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }

  void read_atoms(Scenario& s) {
    if (!root_.contains("atoms")) fail("atoms", "missing required field");
    const json& atoms = array_at(root_["atoms"], "atoms");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const std::string path = "atoms[" + std::to_string(i) + "]";
      std::string name = string_at(atoms[i], path);
      if (!AtomSet::valid_name(name)) fail(path, "invalid atom name '" + name + "'");
      if (!seen.insert(name).second) fail(path, "duplicate atom '" + name + "'");
      s.atoms.push_back(std::move(name));
    }
    if (s.atoms.size() > kMaxAtoms) fail("atoms", "at most " + std::to_string(kMaxAtoms) + " atoms");
  }

  void read_states(Scenario& s) {
    if (!root_.contains("states")) fail("states", "missing required field");
    const json& states = array_at(root_["states"], "states");
    if (states.empty()) fail("states", "at least one state is required");
    if (states.size() > PointSet::kMaxPoints) fail("states", "at most 64 states");
    for (std::size_t i = 0; i < states.size(); ++i) {
      const std::string path = "states[" + std::to_string(i) + "]";
      expect_object(states[i], path);
      allow_keys(states[i], path, {"id", "true_atoms"});
      if (!states[i].contains("id")) fail(path + ".id", "missing required field");
      ScenarioState st{string_at(states[i]["id"], path + ".id"), {}};
      if (st.id.empty() || st.id.find(',') != std::string::npos) {
        fail(path + ".id", "state ids must be nonempty and contain no comma");
      }
      if (ids_.count(st.id) != 0) fail(path + ".id", "duplicate state id '" + st.id + "'");
      ids_.insert(st.id);
      if (states[i].contains("true_atoms")) {
        const std::string tpath = path + ".true_atoms";
        const json& ta = array_at(states[i]["true_atoms"], tpath);
        std::set<std::string> mine;
        for (std::size_t k = 0; k < ta.size(); ++k) {
          const std::string apath = tpath + "[" + std::to_string(k) + "]";
          std::string a = string_at(ta[k], apath);
          if (std::find(s.atoms.begin(), s.atoms.end(), a) == s.atoms.end()) {
            fail(apath, "undeclared atom '" + a + "'");
          }
          if (!mine.insert(a).second) fail(apath, "duplicate atom '" + a + "'");
        }
        for (const auto& a : s.atoms) {
          if (mine.count(a) != 0) st.true_atoms.push_back(a);
        }
      }
      s.states.push_back(std::move(st));
    }
  }

  IdList read_ids(const json& j, const std::string& path) const {
    array_at(j, path);
    IdList out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      std::string id = string_at(j[i], p);
      if (ids_.count(id) == 0) fail(p, "unknown state id '" + id + "'");
      if (!seen.insert(id).second) fail(p, "duplicate state id '" + id + "'");
      out.push_back(std::move(id));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string check_key(const std::string& key, const std::string& path) const {
    IdList ids = split_key(key);
    std::set<std::string> seen;
    for (const auto& id : ids) {
      if (ids_.count(id) == 0) fail(path, "event key names unknown state '" + id + "'");
      if (!seen.insert(id).second) fail(path, "event key repeats state '" + id + "'");
    }
    IdList sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ids) {
      fail(path, "event key \"" + key + "\" is not canonical; use \"" + join(sorted) + "\"");
    }
    return key;
  }

  std::vector<IdList> read_family(const json& g, const char* name) const {
    std::vector<IdList> out;
    if (!g.contains(name)) return out;
    const std::string path = std::string("gcs.") + name;
    const json& fam = array_at(g[name], path);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      out.push_back(read_ids(fam[i], path + "[" + std::to_string(i) + "]"));
    }
    std::sort(out.begin(), out.end(), [](const IdList& a, const IdList& b) { return join(a) < join(b); });
    return out;
  }

  ScenarioGcs read_gcs(const json& g) const {
    expect_object(g, "gcs");
    allow_keys(g, "gcs", {"credible", "allowable", "rejected", "f"});
    ScenarioGcs out;
    out.credible = read_family(g, "credible");
    out.allowable = read_family(g, "allowable");
    out.rejected = read_family(g, "rejected");
    if (!g.contains("f")) fail("gcs.f", "missing required field");
    expect_object(g["f"], "gcs.f");
    for (const auto& [key, value] : g["f"].items()) {
      const std::string path = "gcs.f" + quoted(key);
      out.f.emplace(check_key(key, path), read_ids(value, path));
    }
    return out;
  }

  void read_preorder(Scenario& s, const json& p) const {
    expect_object(p, "preorder");
    std::map<std::string, unsigned> ranks;
    for (const auto& [id, rank] : p.items()) {
      const std::string path = "preorder" + quoted(id);
      if (ids_.count(id) == 0) fail(path, "unknown state id '" + id + "'");
      if (!rank.is_number_unsigned()) fail(path, "rank must be a nonnegative integer");
      ranks.emplace(id, rank.get<unsigned>());
    }
    for (const auto& st : s.states) {
      if (ranks.count(st.id) == 0) fail("preorder", "state '" + st.id + "' has no rank");
    }
    s.preorder = std::move(ranks);
  }

  void read_labeling(Scenario& s, const json& l) const {
    expect_object(l, "labeling");
    for (const auto& [key, value] : l.items()) {
      const std::string path = "labeling" + quoted(key);
      check_key(key, path);
      const std::string v = string_at(value, path);
      if (v.size() != 1 || !credibility_from_char(v[0])) fail(path, "label must be \"C\", \"A\" or \"R\"");
      s.labeling.emplace(key, v[0]);
    }
  }

  ScenarioTable read_table(const json& t) const {
    expect_object(t, "table");
    allow_keys(t, "table", {"initial", "entries"});
    ScenarioTable out;
    if (!t.contains("initial")) fail("table.initial", "missing required field");
    out.initial = read_ids(t["initial"], "table.initial");
    if (!t.contains("entries")) fail("table.entries", "missing required field");
    expect_object(t["entries"], "table.entries");
    for (const auto& [key, value] : t["entries"].items()) {
      const std::string path = "table.entries" + quoted(key);
      out.entries.emplace(check_key(key, path), read_ids(value, path));
    }
    return out;
  }

  const json& root_;
  std::set<std::string> ids_;
};

std::string key_of(const IdList& ids) { return join(ids); }

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports "[json.exception.parse_error.101] parse error at line L, column C: ..."
    std::string what = e.what();
    const auto at = what.find("at line");
    std::string context = "JSON syntax";
    if (at != std::string::npos) {
      const auto colon = what.find(':', at);
      context = what.substr(at + 3, colon == std::string::npos ? std::string::npos : colon - at - 3);
    }
    throw ScenarioError(context, "malformed JSON (" + what + ")");
  }
  return Reader(root).read();
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path.string(), "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scenario(buffer.str());
  } catch (const ScenarioError& e) {
    throw ScenarioError(path.string() + ": " + e.context(),
                        std::string(e.what()).substr(e.context().empty() ? 0 : e.context().size() + 2));
  }
}

std::string dump_scenario(const Scenario& s) {
  ordered_json root = ordered_json::object();
  if (!s.comments.empty()) root["comments"] = s.comments;
  root["atoms"] = s.atoms;
  ordered_json states = ordered_json::array();
  for (const auto& st : s.states) {
    ordered_json o;
    o["id"] = st.id;
    o["true_atoms"] = st.true_atoms;
    states.push_back(std::move(o));
  }
  root["states"] = std::move(states);
  auto id_map = [](const std::map<std::string, IdList>& m) {
    ordered_json o = ordered_json::object();
    for (const auto& [k, v] : m) o[k] = v;
    return o;
  };
  if (s.gcs) {
    ordered_json g;
    g["credible"] = s.gcs->credible;
    g["allowable"] = s.gcs->allowable;
    g["rejected"] = s.gcs->rejected;
    g["f"] = id_map(s.gcs->f);
    root["gcs"] = std::move(g);
  }
  if (s.preorder) {
    ordered_json p = ordered_json::object();
    for (const auto& st : s.states) p[st.id] = s.preorder->at(st.id);
    root["preorder"] = std::move(p);
  }
  if (!s.labeling.empty()) {
    ordered_json l = ordered_json::object();
    for (const auto& [k, v] : s.labeling) l[k] = std::string(1, v);
    root["labeling"] = std::move(l);
  }
  if (s.table) {
    ordered_json t;
    t["initial"] = s.table->initial;
    t["entries"] = id_map(s.table->entries);
    root["table"] = std::move(t);
  }
  return root.dump(2) + "\n";
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ScenarioError(path.string(), "cannot write file");
  out << dump_scenario(s);
}

std::string event_key(const PointSet& e, const Universe& u) {
  IdList ids;
  for (std::size_t i : e.members()) ids.push_back(u.point(i).id);
  std::sort(ids.begin(), ids.end());
  return key_of(ids);
}

PointSet event_from_key(std::string_view key, const Universe& u) {
  const IdList ids = split_key(key);
  PointSet out = u.none();
  for (const auto& id : ids) {
    auto idx = u.index_of(id);
    if (!idx) throw ScenarioError("event \"" + std::string(key) + "\"", "unknown state '" + id + "'");
    if (out.contains(*idx)) {
      throw ScenarioError("event \"" + std::string(key) + "\"", "repeated state '" + id + "'");
    }
    out.insert(*idx);
  }
  IdList sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ids) {
    throw ScenarioError("event \"" + std::string(key) + "\"",
                        "event key is not canonical; use \"" + key_of(sorted) + "\"");
  }
  return out;
}

namespace {

PointSet set_of(const IdList& ids, const Universe& u) {
  PointSet out = u.none();
  for (const auto& id : ids) out.insert(*u.index_of(id));
  return out;
}

IdList ids_of(const PointSet& e, const Universe& u) {
  IdList ids;
  for (std::size_t i : e.members()) ids.push_back(u.point(i).id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

UniversePtr universe_of(const Scenario& s) {
  AtomSet atoms(s.atoms);
  std::vector<Point> points;
  for (const auto& st : s.states) {
    std::uint64_t a = 0;
    for (const auto& name : st.true_atoms) a |= std::uint64_t{1} << *atoms.index_of(name);
    points.push_back({st.id, a});
  }
  return std::make_shared<const Universe>(std::move(atoms), std::move(points));
}

Gcs gcs_of(const Scenario& s, const UniversePtr& u) {
  if (!s.gcs) throw ScenarioError("gcs", "scenario has no gcs section");
  Gcs g{u, {}, {}, {}, {}};
  for (const auto& ids : s.gcs->credible) g.credible.push_back(set_of(ids, *u));
  for (const auto& ids : s.gcs->allowable) g.allowable.push_back(set_of(ids, *u));
  for (const auto& ids : s.gcs->rejected) g.rejected.push_back(set_of(ids, *u));
  for (const auto& [key, ids] : s.gcs->f) g.choice.emplace(event_from_key(key, *u), set_of(ids, *u));
  return g;
}

PlausibilityOrder preorder_of(const Scenario& s, const Universe& u) {
  if (!s.preorder) throw ScenarioError("preorder", "scenario has no preorder section");
  std::vector<unsigned> ranks;
  for (const auto& p : u.points()) ranks.push_back(s.preorder->at(p.id));
  try {
    return PlausibilityOrder(std::move(ranks));
  } catch (const InvariantError& e) {
    throw ScenarioError("preorder", e.what());
  }
}

RevisionTable table_of(const Scenario& s, const UniversePtr& u) {
  if (!s.table) throw ScenarioError("table", "scenario has no table section");
  if (u->size() > kMaxTablePoints) throw ScenarioError("table", "too many states for a table");
  const std::size_t count = std::size_t{1} << u->size();
  std::vector<std::optional<PointSet>> entries(count);
  for (const auto& [key, ids] : s.table->entries) {
    entries[event_from_key(key, *u).bits()] = set_of(ids, *u);
  }
  std::vector<PointSet> total;
  for (std::size_t bits = 0; bits < count; ++bits) {
    if (!entries[bits]) {
      throw ScenarioError("table.entries",
                          "missing entry for event \"" + event_key(PointSet(u->size(), bits), *u) + "\"");
    }
    total.push_back(*entries[bits]);
  }
  return RevisionTable(u, set_of(s.table->initial, *u), std::move(total));
}

CredibilityLabeling labeling_of(const Scenario& s, const UniversePtr& u) {
  if (u->size() > kMaxTablePoints) throw ScenarioError("labeling", "too many states for a labeling");
  const std::size_t count = std::size_t{1} << u->size();
  std::vector<Credibility> labels(count, Credibility::kRejected);
  labels[count - 1] = Credibility::kCredible;
  if (s.gcs) {
    auto apply = [&](const std::vector<IdList>& family, Credibility c) {
      for (const auto& ids : family) labels[set_of(ids, *u).bits()] = c;
    };
    apply(s.gcs->rejected, Credibility::kRejected);
    apply(s.gcs->allowable, Credibility::kAllowable);
    apply(s.gcs->credible, Credibility::kCredible);
  }
  for (const auto& [key, c] : s.labeling) labels[event_from_key(key, *u).bits()] = *credibility_from_char(c);
  try {
    return CredibilityLabeling(u, std::move(labels));
  } catch (const InvariantError& e) {
    throw ScenarioError("labeling", e.what());
  }
}

Scenario scenario_from_table(const RevisionTable& t, const CredibilityLabeling* labeling,
                             std::string comments) {
  const Universe& u = t.universe();
  Scenario s;
  s.comments = std::move(comments);
  s.atoms = u.atoms().names();
  for (const auto& p : u.points()) {
    ScenarioState st{p.id, {}};
    for (std::size_t a = 0; a < u.atoms().size(); ++a) {
      if (p.holds(a)) st.true_atoms.push_back(u.atoms().name(a));
    }
    s.states.push_back(std::move(st));
  }
  ScenarioTable table{ids_of(t.initial(), u), {}};
  for (std::size_t bits = 0; bits < t.proposition_count(); ++bits) {
    const PointSet e(u.size(), bits);
    table.entries.emplace(event_key(e, u), ids_of(t.entry(e), u));
    if (labeling != nullptr) s.labeling.emplace(event_key(e, u), to_char(labeling->label(e)));
  }
  s.table = std::move(table);
  return s;
}

}  // namespace filtra
