#pragma once

#include "dias/dialgebra.hpp"
#include "dias/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dias {

using Params = std::map<std::string, Rational>;
using RMatrix = MatrixX<Rational>;

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
  std::string name;                 // e.g. "Dias3_16"
  Index dim = 0;
  std::vector<std::string> params;  // required parameter names, in display order
  bool ambiguous = false;           // relation list conflicts with its diderivation table row
};

/// Dias2_1..Dias2_4 then Dias3_1..Dias3_17.
const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);

/// Throws CatalogError for an unknown name or a missing parameter. Extra
/// parameters are rejected too, so typos do not pass silently.
Dialgebra<Rational> instantiate(const std::string& name, const Params& params = {});

/// "k=1,m=-1/2" in the entry's parameter order.
std::string format_params(const std::string& name, const Params& params);

/// E_ij (1-based): the operator sending e_j to e_i.
RMatrix unit_operator(Index n, Index i, Index j);

struct ExpectedDider {
  Index dim = 0;
  std::optional<std::vector<RMatrix>> basis;  // tabled basis, when the table gives one
  int branch_row = 0;                         // Dias3_16 only
};

ExpectedDider expected_dider(const std::string& name, const Params& params = {});

// ---- Dias3_16 -------------------------------------------------------------

struct Dias316Params {
  Rational k, m, n, p, q;
};

Dias316Params dias316_params(const Params& params, const std::string& first = "k");
Params to_params(const Dias316Params& p, const std::string& first = "k");
std::string format_dias316(const Dias316Params& p, const std::string& first = "k");

inline Rational delta1(const Dias316Params& s) { return -s.k - s.m * s.q + s.n * s.p; }
inline Rational delta2(const Dias316Params& s) { return (s.k + s.n) * (s.p + 1) - s.m * s.q; }

struct Dias316Branch {
  int row = 0;  // 1-based position in the compact table
  std::string conditions;
  std::string dim_text;
  std::function<bool(const Dias316Params&)> matches;
  std::function<Index(const Dias316Params&)> expected_dim;
};

/// Rows in table order.
const std::vector<Dias316Branch>& dias316_branches();

/// Most-specialized rows first; the first matching row wins.
const std::vector<int>& dias316_resolution_order();

const Dias316Branch& resolve_dias316_branch(const Dias316Params& p);

/// The 5x5 system in the unknowns (d11, d13, d22, d31, d33).
RMatrix dias316_matrix(const Dias316Params& p);

/// Points for one branch row: the smallest-height point of a fixed grid
/// first, then distinct seeded picks among the remaining grid points of that
/// row. Fewer than `count` points are returned when the row has fewer.
std::vector<Dias316Params> dias316_branch_samples(int row, std::size_t count, std::uint64_t seed);

/// Seeded random points with small numerators and denominators.
std::vector<Dias316Params> random_dias316_params(std::size_t count, std::uint64_t seed);

struct DetProbe {
  std::size_t samples = 0;
  std::size_t locus_agree = 0;
  struct Exception {
    Dias316Params point;
    Rational det, product;  // det M and m*Delta1*Delta2
  };
  std::vector<Exception> exceptions;
  std::size_t nonvanishing = 0;
  std::optional<Rational> ratio;  // det M / (m Delta1 Delta2) at the first non-vanishing sample
  bool ratio_constant = false;
};

DetProbe check_det_factorization(const std::vector<Dias316Params>& samples);

enum class SolutionCase { B, C, D };
const char* solution_case_name(SolutionCase c);

/// Family generators as 3x3 operators (d21 = d23 = 0). Throws
/// std::invalid_argument naming the first violated hypothesis.
std::vector<RMatrix> solution_family(const Dias316Params& p, SolutionCase c, const Rational& t = Rational(1));

struct FamilyCheck {
  SolutionCase which = SolutionCase::B;
  Dias316Params params;
  std::vector<RMatrix> operators;
  bool identity_ok = false;  // defining identity holds on all basis pairs
  bool in_kernel = false;    // every operator lies in the computed Dider space
};

FamilyCheck check_solution_families(const Dias316Params& p, SolutionCase c, const Rational& t = Rational(1));

/// Admissible points for a case: a fixed small point first, then seeded ones.
std::vector<Dias316Params> solution_family_samples(SolutionCase c, std::size_t count, std::uint64_t seed);

// ---- catalog sweep --------------------------------------------------------

enum class RowStatus { Match, Mismatch, Finding, Info };
const char* row_status_name(RowStatus s);

struct CatalogRow {
  std::string entry;
  std::string params;
  bool axioms_ok = true;
  std::string axiom_failure;
  Index solver_dim = 0;
  std::vector<RMatrix> solver_basis;
  std::optional<Index> expected_dim;
  std::optional<bool> basis_match;
  int branch_row = 0;
  RowStatus status = RowStatus::Match;
  std::string note;
};

struct BranchSummary {
  int row = 0;
  std::string conditions;
  std::string dim_text;
  std::size_t requested = 0;
  std::vector<std::pair<std::string, std::pair<Index, Index>>> samples;  // params, (expected, solver)
  bool all_match = false;
};

struct AmbiguityCheck {
  std::string subject;
  std::string params;
  std::string verdict;
  bool equal = true;  // the assertion tied to this conflict, where one exists
};

struct CatalogReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<CatalogRow> rows;
  std::vector<BranchSummary> branches;
  std::optional<DetProbe> det;
  std::vector<FamilyCheck> families;
  std::vector<AmbiguityCheck> ambiguities;

  bool failed() const;
  bool has_findings() const;
};

/// Reproduces every table. `filter` keeps entries whose name starts with it
/// (empty keeps all); the Dias3_16 analyses run when Dias3_16 is kept.
CatalogReport verify_catalog(std::size_t samples, std::uint64_t seed, const std::string& filter = {});

}  // namespace dias
