#include "filtra/render.hpp"

#include <algorithm>
#include <sstream>

#include "filtra/formula.hpp"
#include "json.hpp"

namespace filtra {

WitnessText describe(const PointSet& s, const Universe& u, std::string label) {
  WitnessText w{std::move(label), format_points(s, u), {}};
  if (auto f = representative_formula(s, u)) w.formula = *f;
  return w;
}

void add_check(Report& r, ReportCheck c) {
  if (!c.holds) r.passed = false;
  r.checks.push_back(std::move(c));
}

void add_checks(Report& r, const CheckReport& c, const Universe& u, const std::string& prefix,
                const std::vector<std::string>& labels) {
  for (const Verdict& v : c.verdicts) {
    ReportCheck rc{prefix + v.id, v.holds, v.note, {}};
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      rc.witnesses.push_back(describe(v.witness[i], u, i < labels.size() ? labels[i] : "X" + std::to_string(i)));
    }
    add_check(r, std::move(rc));
  }
}

void add_fact(Report& r, std::string key, std::string value) {
  r.facts.emplace_back(std::move(key), std::move(value));
}

namespace {

std::string witness_line(const WitnessText& w) {
  std::string out = w.label.empty() ? w.points : w.label + " = " + w.points;
  if (!w.formula.empty()) out += "  ~  " + w.formula;
  return out;
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.command << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.holds ? "[ok]  " : "[FAIL]") << " " << c.id;
    if (!c.note.empty()) out << "  " << c.note;
    out << "\n";
    for (const auto& w : c.witnesses) out << "          " << witness_line(w) << "\n";
  }
  for (const auto& [k, v] : r.facts) out << "  " << k << ": " << v << "\n";
  if (!r.table.empty()) {
    std::vector<std::size_t> width;
    for (const auto& row : r.table) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : r.table) {
      std::string line = " ";
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += " " + row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size(), ' ');
      }
      out << line << "\n";
    }
  }
  return out.str();
}

std::string render_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json root;
  root["command"] = r.command;
  root["verdict"] = r.passed ? "pass" : "fail";
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json o;
    o["id"] = c.id;
    o["holds"] = c.holds;
    if (!c.note.empty()) o["note"] = c.note;
    if (!c.witnesses.empty()) {
      ordered_json ws = ordered_json::array();
      for (const auto& w : c.witnesses) {
        ordered_json wj;
        if (!w.label.empty()) wj["label"] = w.label;
        wj["points"] = w.points;
        if (!w.formula.empty()) wj["formula"] = w.formula;
        ws.push_back(std::move(wj));
      }
      o["witnesses"] = std::move(ws);
    }
    checks.push_back(std::move(o));
  }
  root["checks"] = std::move(checks);
  ordered_json facts = ordered_json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  root["facts"] = std::move(facts);
  if (!r.table.empty()) {
    ordered_json rows = ordered_json::array();
    const auto& header = r.table.front();
    for (std::size_t i = 1; i < r.table.size(); ++i) {
      ordered_json row;
      for (std::size_t j = 0; j < header.size() && j < r.table[i].size(); ++j) row[header[j]] = r.table[i][j];
      rows.push_back(std::move(row));
    }
    root["table"] = std::move(rows);
  }
  return root.dump(2) + "\n";
}

}  // namespace filtra
