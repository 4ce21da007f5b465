#include "triplekit/report.hpp"

#include <stdexcept>

namespace triplekit {

void Verdict::record(const std::vector<std::size_t>& indices, const Vector& lhs, const Vector& rhs) {
  ++checked;
  if (lhs == rhs) return;
  if (passed) witness = Witness{indices, lhs, rhs};
  passed = false;
}

void Verdict::record(const std::vector<std::size_t>& indices, bool ok) {
  ++checked;
  if (ok) return;
  if (passed) witness = Witness{indices, {}, {}};
  passed = false;
}

Verdict& Report::add(std::string name) {
  Verdict v;
  v.name = std::move(name);
  verdicts_.push_back(std::move(v));
  return verdicts_.back();
}

void Report::append(const Report& other, std::string_view prefix) {
  for (const auto& v : other.verdicts_) {
    Verdict copy = v;
    if (!prefix.empty()) copy.name = std::string(prefix) + "." + copy.name;
    verdicts_.push_back(std::move(copy));
  }
}

bool Report::passed() const {
  for (const auto& v : verdicts_) {
    if (!v.passed) return false;
  }
  return true;
}

const Verdict& Report::at(std::string_view name) const {
  for (const auto& v : verdicts_) {
    if (v.name == name) return v;
  }
  throw std::out_of_range("no verdict named " + std::string(name));
}

Verdict& Report::at(std::string_view name) {
  return const_cast<Verdict&>(static_cast<const Report&>(*this).at(name));
}

std::optional<std::string> Report::first_failure() const {
  for (const auto& v : verdicts_) {
    if (!v.passed) return v.name;
  }
  return std::nullopt;
}

}  // namespace triplekit
