#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "backstrom/order.hpp"
#include "backstrom/valued_quiver.hpp"

namespace backstrom::cli {

/// Either an order description (unvalidated) or a valued quiver.
struct InputDocument {
  GroundField field = RationalField{};
  std::variant<OrderDescription, ValuedQuiver> content;

  bool is_order() const { return std::holds_alternative<OrderDescription>(content); }
};

/// Throws InvalidInput on malformed JSON or schema violations.
InputDocument parse_document(std::string_view text);
InputDocument load_document(const std::filesystem::path& path);

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 invalid input, 2 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace backstrom::cli
