#include "dias/commands.hpp"

#include "dias/bider.hpp"
#include "dias/catalog.hpp"
#include "dias/format.hpp"
#include "dias/invariants.hpp"
#include "dias/kxy.hpp"


namespace dias {

namespace {

using R = Rational;
using Vec = VectorX<R>;
using Mat = MatrixX<R>;

constexpr std::string_view kCatalogPrefix = "catalog:";

Params parse_selector_params(const std::string& text) {
  Params out;
  std::size_t at = 0;
  while (at <= text.size()) {
    const std::size_t comma = std::min(text.find(',', at), text.size());
    const std::string pair = text.substr(at, comma - at);
    const std::size_t eq = pair.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InputError("bad catalog parameter '" + pair + "' (expected key=value)");
    const std::string key = pair.substr(0, eq);
    if (out.count(key)) throw InputError("catalog parameter '" + key + "' given twice");
    try {
      out[key] = parse_rational(pair.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw InputError("catalog parameter '" + key + "': " + e.what());
    }
    at = comma + 1;
  }
  return out;
}

std::string axiom_summary(const AxiomReport<R>& ax) {
  if (ax.ok()) return "hold";
  std::string out = "fail:";
  for (Axiom a : kAxioms) {
    const auto& f = ax.failure(a);
    if (!f) continue;
    out += std::string(" ") + axiom_name(a) + " at (" + std::to_string(f->i + 1) + "," + std::to_string(f->j + 1) +
           "," + std::to_string(f->k + 1) + ")";
  }
  return out;
}

/// Basic input facts. Returns whether the axioms hold; theorem checks on
/// inputs that fail them are reported as info only.
bool input_section(Report& r, const Dialgebra<R>& d) {
  const auto ax = verify_axioms(d);
  auto& s = r.section("input");
  s.value("name", d.name());
  s.value("dim", std::to_string(d.dim()));
  s.value("structure constants", std::to_string(d.entries().size()));
  s.value("axioms", axiom_summary(ax));
  if (!ax.ok()) s.item("input is not a dialgebra; theorem checks below are informational", ItemStatus::Info);
  return ax.ok();
}

Mat rows_of(const Subspace<R>& s) { return s.basis(); }

void space_block(ReportSection& s, const OperatorBasis<R>& b) {
  s.value("dim", std::to_string(b.dim()));
  for (Index i = 0; i < b.dim(); ++i) s.matrix("basis " + std::to_string(i + 1), b.matrix(i));
}

Report begin(const std::string& command, const std::string& subject) {
  Report r;
  r.command = command;
  r.subject = subject;
  return r;
}

ItemStatus row_item_status(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return ItemStatus::Pass;
    case RowStatus::Mismatch: return ItemStatus::Fail;
    case RowStatus::Finding: return ItemStatus::Finding;
    case RowStatus::Info: return ItemStatus::Info;
  }
  return ItemStatus::Fail;
}

std::string row_label(const CatalogRow& row) {
  return row.params.empty() ? row.entry : row.entry + "?" + row.params;
}

std::string row_detail(const CatalogRow& row) {
  std::string out = "solver dim " + std::to_string(row.solver_dim);
  if (row.expected_dim) out += ", tabled dim " + std::to_string(*row.expected_dim);
  if (row.basis_match) out += *row.basis_match ? ", tabled basis spans the kernel" : ", tabled basis differs";
  if (row.branch_row) out += ", branch row " + std::to_string(row.branch_row);
  if (!row.note.empty()) out += "; " + row.note;
  return out;
}

}  // namespace

Dialgebra<R> load_input(const std::string& selector) {
  if (selector.rfind(kCatalogPrefix, 0) == 0) {
    const std::string rest = selector.substr(kCatalogPrefix.size());
    const std::size_t q = rest.find('?');
    const std::string name = rest.substr(0, q);
    const Params params = q == std::string::npos ? Params{} : parse_selector_params(rest.substr(q + 1));
    try {
      return instantiate(name, params).renamed(selector);
    } catch (const CatalogError& e) {
      throw InputError(e.what());
    }
  }
  try {
    return load_dialgebra(selector);
  } catch (const ParseError& e) {
    throw InputError(selector + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

Report cmd_verify(const std::string& input) {
  const auto d = load_input(input);
  Report r = begin("verify", input);
  auto& in = r.section("input");
  in.value("name", d.name());
  in.value("dim", std::to_string(d.dim()));
  in.value("structure constants", std::to_string(d.entries().size()));

  const auto ax = verify_axioms(d);
  auto& s = r.section("axioms");
  for (Axiom a : kAxioms) {
    const auto& f = ax.failure(a);
    std::string detail;
    if (f)
      detail = "(e" + std::to_string(f->i + 1) + ", e" + std::to_string(f->j + 1) + ", e" + std::to_string(f->k + 1) +
               "): lhs " + format_vector(f->lhs) + ", rhs " + format_vector(f->rhs);
    s.item(std::string(axiom_name(a)) + ": " + axiom_statement(a), f ? ItemStatus::Fail : ItemStatus::Pass, detail);
  }
  return r;
}

Report cmd_spaces(const std::string& input, OperatorKind which) {
  const auto d = load_input(input);
  Report r = begin(std::string("spaces ") + operator_kind_name(which), input);
  input_section(r, d);
  auto& s = r.section(operator_kind_name(which));
  space_block(s, operator_space(d, which));
  if (which == OperatorKind::Derivation || which == OperatorKind::Diderivation) {
    // The operator forms are rearrangements of the defining identity, so
    // they must agree on any bilinear structure, dialgebra or not.
    const auto spaces = compute_spaces(d);
    const std::string prefix = which == OperatorKind::Derivation ? "der" : "dider";
    CheckReport all = check_characterizations(d, spaces), mine;
    for (const auto& c : all.checks)
      if (c.name.rfind(prefix + ":", 0) == 0 || c.name.rfind(prefix + " kernel", 0) == 0) mine.checks.push_back(c);
    s.checks(mine);
  }
  return r;
}

Report cmd_invariants(const std::string& input) {
  const auto d = load_input(input);
  Report r = begin("invariants", input);
  const bool dialgebra = input_section(r, d);

  const auto ann = annihilator(d);
  auto& sa = r.section("ann");
  sa.value("dim", std::to_string(ann.dim()));
  sa.matrix("basis (rows)", rows_of(ann));

  const auto zb = bar_center(d);
  auto& sz = r.section("Z_B");
  sz.value("dim", std::to_string(zb.dim()));
  sz.matrix("basis (rows)", rows_of(zb));

  const auto h = halo(d);
  auto& sh = r.section("halo");
  sh.value("unital", h.empty() ? "no" : "yes");
  if (!h.empty()) {
    sh.value("bar unit", format_vector(*h.point()));
    sh.value("direction dim", std::to_string(h.direction().dim()));
    sh.matrix("direction basis (rows)", rows_of(h.direction()));
  }

  const auto lb = leibniz_of(d);
  auto& sl = r.section("Leibniz algebra");
  sl.value("bracket", "[a,b] = a-|b - b|-a");
  sl.value("chirality", lb.left_ok && lb.right_ok ? "left and right"
                        : lb.left_ok             ? "left"
                        : lb.right_ok            ? "right"
                                                 : "neither");
  auto triple = [](const std::optional<Triple>& t) {
    return t ? "(e" + std::to_string(t->i + 1) + ", e" + std::to_string(t->j + 1) + ", e" + std::to_string(t->k + 1) + ")"
             : std::string();
  };
  sl.item("left identity [x,[y,z]] = [[x,y],z] + [y,[x,z]]", lb.left_ok ? ItemStatus::Pass : ItemStatus::Info,
          triple(lb.left_counterexample));
  sl.item("right identity [[x,y],z] = [[x,z],y] + [x,[y,z]]", lb.right_ok ? ItemStatus::Pass : ItemStatus::Info,
          triple(lb.right_counterexample));
  sl.item("bracket is a Leibniz algebra", lb.left_ok || lb.right_ok ? ItemStatus::Pass
                                          : dialgebra             ? ItemStatus::Fail
                                                                  : ItemStatus::Info);

  auto& ss = r.section("structure");
  ss.checks(check_invariant_structure(d), dialgebra);
  ss.checks(check_invariant_actions(d, compute_spaces(d)), dialgebra);
  return r;
}

Report cmd_bider(const std::string& input) {
  const auto d = load_input(input);
  Report r = begin("bider", input);
  const bool dialgebra = input_section(r, d);
  const auto spaces = compute_spaces(d);

  auto& so = r.section("operator spaces");
  so.value("dim Der", std::to_string(spaces.der.dim()));
  so.value("dim Dider", std::to_string(spaces.dider.dim()));
  so.value("dim Inn", std::to_string(spaces.inn.dim()));
  so.value("dim DInn", std::to_string(spaces.dinn.dim()));
  so.checks(check_closures(d, spaces), dialgebra);

  const auto br = check_bider_leibniz(spaces);
  auto& sb = r.section("Bider");
  sb.value("dim Bider", std::to_string(br.bider_dim));
  sb.value("dim span<x,x>", std::to_string(br.ann_dim));
  sb.value("span<x,x> in Dider+0", br.ann_in_dider ? "yes" : "no");
  sb.checks(br.checks, dialgebra);
  return r;
}

Report cmd_catalog(const std::string& filter, std::size_t samples, std::uint64_t seed) {
  const auto cat = verify_catalog(samples, seed, filter);
  Report r = begin("catalog", filter.empty() ? "all entries" : "entries starting with " + filter);
  auto& settings = r.section("settings");
  settings.value("samples", std::to_string(samples));
  settings.value("seed", std::to_string(seed));
  settings.value("filter", filter);

  ReportSection* entries = nullptr;
  for (const auto& row : cat.rows) {
    if (row.entry == "Dias3_16" || row.entry == "Dias3_17") continue;
    if (!entries) entries = &r.section("entries");
    const std::string label = row_label(row);
    entries->item(label, row_item_status(row.status), row_detail(row));
    for (std::size_t i = 0; i < row.solver_basis.size(); ++i)
      entries->matrix(label + " basis " + std::to_string(i + 1), row.solver_basis[i]);
  }

  if (!cat.branches.empty()) {
    auto& sb = r.section("Dias3_16 branches");
    for (const auto& b : cat.branches) {
      std::string detail;
      for (const auto& [params, dims] : b.samples) {
        if (!detail.empty()) detail += "; ";
        detail += params + ": tabled " + std::to_string(dims.first) + ", solver " + std::to_string(dims.second);
      }
      if (b.samples.empty()) detail = "no parameter point satisfies the row conditions";
      else if (b.samples.size() < b.requested)
        detail += " (" + std::to_string(b.samples.size()) + " of " + std::to_string(b.requested) +
                  " requested samples exist)";
      sb.item("row " + std::to_string(b.row) + ": " + b.conditions + " -> dim " + b.dim_text,
              b.all_match ? ItemStatus::Pass : ItemStatus::Fail, detail);
    }
  }

  bool any17 = false;
  for (const auto& row : cat.rows) any17 = any17 || row.entry == "Dias3_17";
  if (any17) {
    auto& s17 = r.section("Dias3_17");
    for (const auto& row : cat.rows)
      if (row.entry == "Dias3_17") s17.item(row_label(row), row_item_status(row.status), row_detail(row));
  }

  if (!cat.ambiguities.empty()) {
    auto& sa = r.section("ambiguities");
    for (const auto& a : cat.ambiguities) {
      const std::string subject = a.params.empty() ? a.subject : a.subject + " at " + a.params;
      if (a.subject.rfind("Dias3_17", 0) == 0)
        sa.item("solver(" + subject + ") equal", a.equal ? ItemStatus::Pass : ItemStatus::Fail, a.verdict);
      else
        sa.item(subject, ItemStatus::Finding, a.verdict + (a.equal ? "; solver spaces equal" : "; solver spaces differ"));
    }
  }

  if (cat.det) {
    const auto& p = *cat.det;
    auto& sd = r.section("Dias3_16 determinant");
    sd.value("samples", std::to_string(p.samples));
    sd.value("locus agreement", std::to_string(p.locus_agree) + "/" + std::to_string(p.samples));
    sd.value("non-vanishing samples", std::to_string(p.nonvanishing));
    sd.value("first ratio det/(m*Delta1*Delta2)", p.ratio ? to_string(*p.ratio) : "n/a");
    sd.value("ratio constant", p.ratio_constant ? "yes" : "no");
    std::string detail;
    for (std::size_t i = 0; i < p.exceptions.size() && i < 3; ++i) {
      const auto& e = p.exceptions[i];
      if (!detail.empty()) detail += "; ";
      detail += format_dias316(e.point) + ": det " + to_string(e.det) + ", m*Delta1*Delta2 " + to_string(e.product);
    }
    if (p.exceptions.size() > 3) detail += "; " + std::to_string(p.exceptions.size() - 3) + " more";
    sd.item("det M = 0 <=> m*Delta1*Delta2 = 0", p.exceptions.empty() ? ItemStatus::Pass : ItemStatus::Fail, detail);
    sd.item("constant-ratio probe", ItemStatus::Info, p.ratio_constant ? "ratio constant" : "ratio not constant");
  }

  if (!cat.families.empty()) {
    auto& sf = r.section("Dias3_16 solution families");
    for (const auto& f : cat.families) {
      const bool ok = f.identity_ok && f.in_kernel;
      std::string detail = std::to_string(f.operators.size()) + " generator(s)";
      if (!f.identity_ok) detail += ", defining identity fails";
      if (!f.in_kernel) detail += ", not in the computed kernel";
      sf.item(std::string("Case ") + solution_case_name(f.which) + " at " + format_dias316(f.params),
              ok ? ItemStatus::Pass : ItemStatus::Fail, detail);
    }
  }
  return r;
}

Report cmd_kxy(int bound, std::uint64_t seed) {
  Report r = begin("kxy", "K[x,y] truncated at total degree " + std::to_string(bound));
  auto& s = r.section("K[x,y]");
  s.value("bound", std::to_string(bound));
  s.value("seed", std::to_string(seed));
  s.checks(kxy::check_kxy(bound, seed));
  return r;
}

}  // namespace dias
