#pragma once

#include "dias/dialgebra.hpp"
#include "dias/operator_spaces.hpp"
#include "dias/rational.hpp"
#include "dias/report.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dias {

/// Unreadable file, parse error or bad catalog selector (exit status 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `path/to/file` or `catalog:<Name>[?key=value,...]`.
Dialgebra<Rational> load_input(const std::string& selector);

Report cmd_verify(const std::string& input);
Report cmd_spaces(const std::string& input, OperatorKind which);
Report cmd_invariants(const std::string& input);
Report cmd_bider(const std::string& input);
Report cmd_catalog(const std::string& filter, std::size_t samples, std::uint64_t seed);
Report cmd_kxy(int bound, std::uint64_t seed);

}  // namespace dias
