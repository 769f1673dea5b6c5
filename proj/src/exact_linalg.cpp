#include "backstrom/exact_linalg.hpp"

#include <sstream>

namespace backstrom {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw InvalidInput("field characteristic " + std::to_string(p) +
                       " is not a prime below 2^31");
  }
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const {
  const std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<value_type>(r < 0 ? r + p_ : r);
}

PrimeField::value_type PrimeField::add(value_type a, value_type b) const {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<value_type>(s >= p_ ? s - p_ : s);
}

PrimeField::value_type PrimeField::sub(value_type a, value_type b) const {
  return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
}

PrimeField::value_type PrimeField::mul(value_type a, value_type b) const {
  return static_cast<value_type>((std::uint64_t{a} * b) % p_);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw InternalError("inverse of zero in F_p");
  // a^(p-2) by square and multiply
  value_type result = 1;
  value_type base = a;
  std::uint32_t e = p_ - 2;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (a == 0) throw InternalError("inverse of zero in Q");
  return 1 / a;
}

std::string describe(const GroundField& field) {
  return visit_field(field, [](const auto& f) -> std::string {
    if constexpr (std::is_same_v<std::decay_t<decltype(f)>, PrimeField>) {
      return "F_" + std::to_string(f.characteristic());
    } else {
      return "Q";
    }
  });
}

}  // namespace backstrom
