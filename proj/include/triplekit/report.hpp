#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <deque>
#include <vector>

#include "triplekit/scalar.hpp"

namespace triplekit {

/// Basis tuple at which an identity failed, with both sides flattened.
struct Witness {
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;
};

struct Verdict {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::optional<Witness> witness;

  /// Counts one evaluation; keeps the first failing tuple only, so callers
  /// iterating in lexicographic order report the smallest witness.
  void record(const std::vector<std::size_t>& indices, const Vector& lhs, const Vector& rhs);
  void record(const std::vector<std::size_t>& indices, bool ok);
};

/// Ordered collection of named verdicts. Checkers return these instead of
/// throwing so that verdicts from different characterisations can be
/// compared directly.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  Verdict& add(std::string name);
  void append(const Report& other, std::string_view prefix = {});

  bool passed() const;
  const std::string& subject() const noexcept { return subject_; }
  const std::deque<Verdict>& verdicts() const noexcept { return verdicts_; }

  /// Throws std::out_of_range when the verdict does not exist.
  const Verdict& at(std::string_view name) const;
  Verdict& at(std::string_view name);

  /// Name of the first failing verdict, if any.
  std::optional<std::string> first_failure() const;

 private:
  std::string subject_;
  std::deque<Verdict> verdicts_;
};

}  // namespace triplekit
