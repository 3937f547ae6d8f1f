#include "dias/format.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace dias {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_count(std::string_view tok, int line, const char* what) {
  if (tok.empty() || tok.size() > 9) throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  long v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

Index parse_index(std::string_view tok, Index dim, int line) {
  const long v = parse_count(tok, line, "index");
  if (v < 1 || v > dim)
    throw ParseError(line, "index " + std::string(tok) + " out of range 1.." + std::to_string(dim));
  return static_cast<Index>(v - 1);
}

}  // namespace

Dialgebra<Rational> parse_dialgebra(std::string_view text, std::string name) {
  std::vector<std::pair<int, std::string_view>> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines.emplace_back(number, raw);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  if (lines.empty()) throw ParseError(number, "missing header 'dialgebra v1'");
  if (split_ws(lines[0].second) != std::vector<std::string_view>{"dialgebra", "v1"})
    throw ParseError(lines[0].first, "expected header 'dialgebra v1'");
  if (lines.size() < 2) throw ParseError(lines[0].first, "missing 'dim <n>' line");

  const auto dim_toks = split_ws(lines[1].second);
  if (dim_toks.size() != 2 || dim_toks[0] != "dim") throw ParseError(lines[1].first, "expected 'dim <n>'");
  const long dim = parse_count(dim_toks[1], lines[1].first, "dimension");
  if (dim < 1 || dim > kMaxFileDim)
    throw ParseError(lines[1].first, "dimension must be between 1 and " + std::to_string(kMaxFileDim));
  const Index n = static_cast<Index>(dim);

  std::vector<StructureEntry<Rational>> entries;
  std::set<std::tuple<int, Index, Index, Index>> seen;
  for (std::size_t l = 2; l < lines.size(); ++l) {
    const auto [ln, body] = lines[l];
    const auto arrow = body.find("->");
    if (arrow == std::string_view::npos) throw ParseError(ln, "expected '<vdash|dashv> <i> <j> -> <k>:<coeff>'");
    const auto head = split_ws(body.substr(0, arrow));
    if (head.size() != 3) throw ParseError(ln, "expected '<vdash|dashv> <i> <j>' before '->'");
    Product p;
    if (head[0] == "vdash") p = Product::Vdash;
    else if (head[0] == "dashv") p = Product::Dashv;
    else throw ParseError(ln, "unknown product '" + std::string(head[0]) + "'");
    const Index i = parse_index(head[1], n, ln);
    const Index j = parse_index(head[2], n, ln);

    std::string_view rest = body.substr(arrow + 2);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view term = trim(rest.substr(0, comma));
      const auto colon = term.find(':');
      if (term.empty() || colon == std::string_view::npos) throw ParseError(ln, "expected '<k>:<coeff>' term");
      const Index k = parse_index(trim(term.substr(0, colon)), n, ln);
      Rational c;
      try {
        c = parse_rational(term.substr(colon + 1));
      } catch (const std::invalid_argument& e) {
        throw ParseError(ln, e.what());
      }
      if (!seen.emplace(static_cast<int>(p), i, j, k).second)
        throw ParseError(ln, "duplicate entry for " + std::string(product_name(p)) + " " + std::to_string(i + 1) +
                                 " " + std::to_string(j + 1) + " -> " + std::to_string(k + 1));
      entries.push_back({p, i, j, k, c});
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return Dialgebra<Rational>(n, entries, std::move(name));
}

Dialgebra<Rational> load_dialgebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (const auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  return parse_dialgebra(buf.str(), name);
}

std::string serialize_dialgebra(const Dialgebra<Rational>& d) {
  std::ostringstream out;
  out << "dialgebra v1\n";
  if (!d.name().empty()) out << "# " << d.name() << "\n";
  out << "dim " << d.dim() << "\n";
  for (Product p : {Product::Dashv, Product::Vdash}) {
    for (Index i = 0; i < d.dim(); ++i) {
      for (Index j = 0; j < d.dim(); ++j) {
        std::string terms;
        for (Index k = 0; k < d.dim(); ++k) {
          const Rational& c = d.coeff(p, i, j, k);
          if (is_zero(c)) continue;
          if (!terms.empty()) terms += ", ";
          terms += std::to_string(k + 1) + ":" + to_string(c);
        }
        if (!terms.empty())
          out << product_name(p) << " " << i + 1 << " " << j + 1 << " -> " << terms << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace dias
