#ifndef FILTRA_RENDER_HPP
#define FILTRA_RENDER_HPP

#include <string>
#include <utility>
#include <vector>

#include "filtra/report.hpp"
#include "filtra/universe.hpp"

namespace filtra {

// A point set as printed in reports: member ids plus a formula defining it,
// when the universe's atoms can.
struct WitnessText {
  std::string label;
  std::string points;
  std::string formula;
};

struct ReportCheck {
  std::string id;
  bool holds = true;
  std::string note;
  std::vector<WitnessText> witnesses;
};

// What a command prints. Text and JSON renderings carry the same content
// and contain nothing run-dependent.
struct Report {
  std::string command;
  bool passed = true;
  std::vector<ReportCheck> checks;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::vector<std::string>> table;  // first row is the header
};

WitnessText describe(const PointSet& s, const Universe& u, std::string label = {});

// Appends one ReportCheck per verdict; witnesses get labels from `labels`
// in order ("E", "F" by default). Clears `passed` on any failure.
void add_checks(Report& r, const CheckReport& c, const Universe& u, const std::string& prefix = {},
                const std::vector<std::string>& labels = {"E", "F"});
void add_check(Report& r, ReportCheck c);
void add_fact(Report& r, std::string key, std::string value);

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace filtra

#endif  // FILTRA_RENDER_HPP
