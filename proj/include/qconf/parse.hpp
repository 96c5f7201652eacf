#pragma once

#include "qconf/lie_algebra.hpp"
#include "qconf/scalar.hpp"
#include "qconf/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace qconf {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line(line), column(column) {}
  std::size_t line, column;
};

/// `-1/2*i*sqrt2 + 3/4`; whitespace-insensitive.
Scalar parse_scalar(const std::string& text);

/// Linear combination of basis labels, e.g. `2*e_plus - (1 + i)*h`.
Element parse_element(const std::string& text, const AlgebraPtr& g);

/// Right-hand side of an r-matrix definition: `c * A ^ B + ...`.
TwoTensor parse_wedge_sum(const std::string& text, const AlgebraPtr& g);

struct Definitions {
  AlgebraPtr algebra;          ///< defined by the file or resolved from its header
  std::optional<TwoTensor> r;  ///< present when the file has an `r = ...` statement
};

/// Parses a definition file:
///   algebra <name>
///   basis: A, B, C
///   [A,B] = <combination>
///   r = <wedge sum>
/// Lines starting with `#` are comments; a line starting with `+` or `-`
/// continues the previous statement. Without a `basis:` line the header names
/// a catalog algebra; `fallback` is used when there is no header at all.
Definitions parse_definitions(const std::string& text, const AlgebraPtr& fallback = nullptr);

/// Text accepted by parse_definitions; parse(serialize(x)) reproduces x.
std::string serialize(const AlgebraPtr& g);
std::string serialize(const TwoTensor& r);

}  // namespace qconf
