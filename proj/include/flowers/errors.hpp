#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flowers {

// Caller handed us something unusable (bad vertex id, malformed spec, ...).
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a documented hard cap (exhaustive routines refuse, not crawl).
class cap_error : public std::invalid_argument {
 public:
  explicit cap_error(const std::string& what) : std::invalid_argument(what) {}
};

// Text input failed to parse; offset is the first offending byte (or line).
class parse_error : public input_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : input_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A documented precondition of an algorithm does not hold; names the clause.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& clause)
      : std::invalid_argument("precondition violated: " + clause) {}
};

// Constructive search painted itself into a corner; carries a diagnostic.
class stitch_error : public std::logic_error {
 public:
  explicit stitch_error(const std::string& what) : std::logic_error(what) {}
};

// A node budget ran out mid-computation; carries the best bound reached.
class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& what, long long partial)
      : std::runtime_error(what + " (partial result: " + std::to_string(partial) + ")"),
        partial_(partial) {}
  long long partial() const noexcept { return partial_; }

 private:
  long long partial_;
};

class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace flowers
