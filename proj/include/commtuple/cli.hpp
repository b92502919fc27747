#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "commtuple/su_core.hpp"

namespace commtuple::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInputError = 2;

/// Loads a tuple file and enforces the special-unitary invariants.
/// Throws IoError, SchemaError or ValidationError.
UnitaryTuple parse_tuple_file(const std::string& path, const Tolerance& tol = {});

/// Runs one command line (without the program name). Payload goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace commtuple::cli
