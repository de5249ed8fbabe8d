#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grayfac {

enum class ErrorKind {
  AxiomViolation,
  MalformedSpec,
  SizeLimit,
  WordExplosion,
  UnsupportedInput,
  NotOrthogonal,
  NonCommuting,
  ArityMismatch,
  HypothesisViolation,
};

std::string_view to_string(ErrorKind kind);

/// Process exit code used by the command-line tool for each error kind.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// Resource bounds shared by every enumeration and closure.
struct Limits {
  // per-operand bounds for hom and functor enumeration
  std::size_t max_objects = 6;
  std::size_t max_one_cells = 40;
  std::size_t max_two_cells = 200;
  // word closure and generated tensor size
  std::size_t max_word_len = 12;
  std::size_t max_cells = 5000;
  // cap on the number of candidate maps produced by one search
  std::size_t max_results = 200000;
};

}  // namespace grayfac
