#include "tcover/rational.hpp"

#include "tcover/error.hpp"

namespace tcover {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  const auto g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  const auto lhs = static_cast<u128>(num_) * other.den_;
  const auto rhs = static_cast<u128>(other.num_) * den_;
  return lhs <=> rhs;
}

std::string Rational::to_fixed(int digits) const {
  u128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const u128 scaled = (static_cast<u128>(num_) * scale * 2 + den_) / (2 * static_cast<u128>(den_));
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  auto frac = static_cast<std::uint64_t>(scaled % scale);
  std::string out = std::to_string(whole);
  if (digits > 0) {
    std::string tail(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i, frac /= 10) tail[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
    out += '.';
    out += tail;
  }
  return out;
}

}  // namespace tcover
