#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace dias {

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample, or empty
};

struct CheckReport {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// "(a, b, c)" for any Eigen vector whose scalar streams.
template <typename Vec>
std::string format_vector(const Vec& v) {
  std::ostringstream out;
  out << "(";
  for (decltype(v.size()) i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v(i);
  out << ")";
  return out.str();
}

/// "[[a, b], [c, d]]", rows outermost.
template <typename Mat>
std::string format_matrix(const Mat& m) {
  std::ostringstream out;
  out << "[";
  for (decltype(m.rows()) r = 0; r < m.rows(); ++r) {
    out << (r ? ", [" : "[");
    for (decltype(m.cols()) c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c);
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace dias
