#pragma once

#include "dias/checks.hpp"
#include "dias/rational.hpp"
#include "dias/ratlin.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dias {

enum class ItemStatus { Pass, Fail, Finding, Info };
enum class Verdict { Pass, Findings, Fail };

const char* item_status_name(ItemStatus s);  // pass / FAIL / FINDING / info
const char* verdict_name(Verdict v);         // pass / findings / fail

struct ReportItem {
  std::string name;
  ItemStatus status = ItemStatus::Pass;
  std::string detail;
};

/// Exact entries as strings, rows outermost.
struct MatrixBlock {
  std::string label;
  std::vector<std::vector<std::string>> rows;
};

struct ReportSection {
  std::string title;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<MatrixBlock> matrices;
  std::vector<ReportItem> items;

  /// Keys are unique within a section; a repeated key throws std::logic_error.
  void value(const std::string& key, std::string v);
  void matrix(const std::string& label, const MatrixX<Rational>& m);
  void item(std::string name, ItemStatus status, std::string detail = {});

  /// A failed check becomes FAIL when `gating`, info otherwise.
  void checks(const CheckReport& report, bool gating = true);
};

struct Report {
  std::string command;
  std::string subject;
  std::vector<ReportSection> sections;

  ReportSection& section(std::string title);

  /// fail if any item failed, findings if any item is a finding, else pass.
  Verdict verdict() const;
};

std::string render_text(const Report& r);

/// One JSON document; the schema is described in README.md.
std::string render_json(const Report& r);

/// 1 for fail, 0 otherwise.
int exit_code(Verdict v);

}  // namespace dias
