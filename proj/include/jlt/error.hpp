#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace jlt {

/// Bad user input: malformed expressions, invalid parameters, unknown tags.
class input_error : public std::invalid_argument {
public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
  input_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::optional<std::size_t> position() const { return position_; }

private:
  std::optional<std::size_t> position_;
};

/// Well-formed input with no mathematical answer (e.g. a Levi that does not
/// transfer to the requested inner form).
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace jlt
