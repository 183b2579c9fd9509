#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumdiff {

/// Precondition violated (out-of-range cardinality, non-divisor, bad parse).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element whose coordinate count or bounds do not match its group.
class invalid_element : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Two subsets living in different groups were combined.
class group_mismatch : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Parameters outside every regime for which a closed form is known.
class unsupported_regime : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A search job whose estimated size exceeds the configured node budget.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, double estimate, std::uint64_t budget)
      : std::runtime_error(what), estimate_(estimate), budget_(budget) {}

  double estimate() const noexcept { return estimate_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  double estimate_;
  std::uint64_t budget_;
};

}  // namespace sumdiff
