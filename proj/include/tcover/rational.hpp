#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace tcover {

// Non-negative fraction kept in lowest terms; den > 0.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;

  // Decimal rendering rounded half-up, e.g. to_fixed(4) of 4/3 is "1.3333".
  std::string to_fixed(int digits) const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace tcover
