#include "dias/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace dias {

const char* item_status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass: return "pass";
    case ItemStatus::Fail: return "FAIL";
    case ItemStatus::Finding: return "FINDING";
    case ItemStatus::Info: return "info";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Findings: return "findings";
    case Verdict::Fail: return "fail";
  }
  return "?";
}

void ReportSection::value(const std::string& key, std::string v) {
  for (const auto& [k, old] : values)
    if (k == key) throw std::logic_error("report section '" + title + "': duplicate key '" + key + "'");
  values.emplace_back(key, std::move(v));
}

void ReportSection::matrix(const std::string& label, const MatrixX<Rational>& m) {
  MatrixBlock block{label, {}};
  for (Index r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    block.rows.push_back(std::move(row));
  }
  matrices.push_back(std::move(block));
}

void ReportSection::item(std::string name, ItemStatus status, std::string detail) {
  items.push_back({std::move(name), status, std::move(detail)});
}

void ReportSection::checks(const CheckReport& report, bool gating) {
  for (const auto& c : report.checks)
    item(c.name, c.ok ? ItemStatus::Pass : (gating ? ItemStatus::Fail : ItemStatus::Info), c.detail);
}

ReportSection& Report::section(std::string title) {
  sections.push_back({std::move(title), {}, {}, {}});
  return sections.back();
}

Verdict Report::verdict() const {
  bool findings = false;
  for (const auto& s : sections)
    for (const auto& i : s.items) {
      if (i.status == ItemStatus::Fail) return Verdict::Fail;
      findings = findings || i.status == ItemStatus::Finding;
    }
  return findings ? Verdict::Findings : Verdict::Pass;
}

namespace {

std::string matrix_text(const MatrixBlock& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.rows[r].size(); ++c) out += (c ? ", " : "") + m.rows[r][c];
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "dias " << r.command;
  if (!r.subject.empty()) out << ": " << r.subject;
  out << "\n";
  for (const auto& s : r.sections) {
    out << "\n== " << s.title << " ==\n";
    for (const auto& [k, v] : s.values) out << "  " << k << ": " << v << "\n";
    for (const auto& m : s.matrices) out << "  " << m.label << " = " << matrix_text(m) << "\n";
    for (const auto& i : s.items) {
      out << "  [" << item_status_name(i.status) << "] " << i.name;
      if (!i.detail.empty()) out << " -- " << i.detail;
      out << "\n";
    }
  }
  out << "\nverdict: " << verdict_name(r.verdict()) << "\n";
  return out.str();
}

std::string render_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = "dias-report/1";
  doc["command"] = r.command;
  doc["subject"] = r.subject;
  doc["verdict"] = verdict_name(r.verdict());
  ordered_json sections = ordered_json::array();
  for (const auto& s : r.sections) {
    ordered_json js;
    js["title"] = s.title;
    js["values"] = ordered_json::object();
    for (const auto& [k, v] : s.values) js["values"][k] = v;
    js["matrices"] = ordered_json::array();
    for (const auto& m : s.matrices) js["matrices"].push_back({{"label", m.label}, {"rows", m.rows}});
    js["items"] = ordered_json::array();
    for (const auto& i : s.items)
      js["items"].push_back({{"name", i.name}, {"status", item_status_name(i.status)}, {"detail", i.detail}});
    sections.push_back(std::move(js));
  }
  doc["sections"] = std::move(sections);
  return doc.dump(2) + "\n";
}

int exit_code(Verdict v) { return v == Verdict::Fail ? 1 : 0; }

}  // namespace dias
