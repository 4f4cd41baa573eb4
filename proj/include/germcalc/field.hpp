#ifndef GERMCALC_FIELD_HPP
#define GERMCALC_FIELD_HPP

#include <cstdint>

#include "germcalc/errors.hpp"

namespace germcalc {

inline constexpr std::uint32_t kDefaultCharacteristic = 31991;

/// Arithmetic in the prime field F_p. Residues are stored as the least
/// non-negative representative in a uint32_t. The modulus is restricted to
/// 2 <= p < 2^31 so that a product of two residues fits in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;  // a, b < p < 2^31: no unsigned overflow
    return s >= p_ ? s - p_ : s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }

  /// Inverse of a nonzero residue (extended Euclid). Zero is an error.
  std::uint32_t inv(std::uint32_t a) const;

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Least non-negative residue of an arbitrary signed integer.
  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }
  bool operator!=(const PrimeField& other) const { return p_ != other.p_; }

  static bool is_prime(std::uint32_t n);

 private:
  std::uint32_t p_;
};

}  // namespace germcalc

#endif
