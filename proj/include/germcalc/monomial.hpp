#ifndef GERMCALC_MONOMIAL_HPP
#define GERMCALC_MONOMIAL_HPP

#include <array>
#include <cstdint>

#include "germcalc/errors.hpp"

namespace germcalc {

/// Hard cap on ring size. Dense exponent vectors keep arithmetic simple and
/// fast for the ring sizes this library targets; product rings built for
/// preimages need source + target variables at once.
inline constexpr int kMaxVars = 12;

inline constexpr std::uint32_t kMaxExponent = 0xFFFFu;

/// Dense exponent vector. Entries beyond the ring's variable count stay zero,
/// so whole-array equality and hashing are valid for any ring size.
class Monomial {
 public:
  Monomial() : e_{} {}

  static Monomial one() { return Monomial(); }

  std::uint16_t exp(int v) const { return e_[static_cast<std::size_t>(v)]; }

  void set_exp(int v, std::uint32_t value) {
    if (value > kMaxExponent)
      throw ExponentOverflowError("exponent " + std::to_string(value) +
                                  " exceeds the 2^16-1 cap");
    e_[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(value);
  }

  bool is_one() const {
    for (std::uint16_t e : e_)
      if (e != 0) return false;
    return true;
  }

  long long total_degree(int nvars) const {
    long long d = 0;
    for (int v = 0; v < nvars; ++v) d += e_[v];
    return d;
  }

  static Monomial mul(const Monomial& a, const Monomial& b, int nvars) {
    Monomial r;
    for (int v = 0; v < nvars; ++v) {
      std::uint32_t s = static_cast<std::uint32_t>(a.e_[v]) + b.e_[v];
      if (s > kMaxExponent)
        throw ExponentOverflowError("exponent overflow in monomial product");
      r.e_[v] = static_cast<std::uint16_t>(s);
    }
    return r;
  }

  /// Does a divide b?
  static bool divides(const Monomial& a, const Monomial& b, int nvars) {
    for (int v = 0; v < nvars; ++v)
      if (a.e_[v] > b.e_[v]) return false;
    return true;
  }

  /// b / a, assuming a | b.
  static Monomial quotient(const Monomial& b, const Monomial& a, int nvars) {
    Monomial r;
    for (int v = 0; v < nvars; ++v)
      r.e_[v] = static_cast<std::uint16_t>(b.e_[v] - a.e_[v]);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b, int nvars) {
    Monomial r;
    for (int v = 0; v < nvars; ++v)
      r.e_[v] = a.e_[v] > b.e_[v] ? a.e_[v] : b.e_[v];
    return r;
  }

  /// gcd(a,b) == 1, i.e. disjoint supports.
  static bool coprime(const Monomial& a, const Monomial& b, int nvars) {
    for (int v = 0; v < nvars; ++v)
      if (a.e_[v] != 0 && b.e_[v] != 0) return false;
    return true;
  }

  /// Bitmask of variables with nonzero exponent.
  std::uint32_t support(int nvars) const {
    std::uint32_t m = 0;
    for (int v = 0; v < nvars; ++v)
      if (e_[v] != 0) m |= 1u << v;
    return m;
  }

  /// Coarse divisibility prefilter: candidate divisor d can divide t only if
  /// (divmask(d) & ~divmask(t)) == 0. Thresholds are powers of two, a handful
  /// of bits per variable.
  std::uint64_t divmask(int nvars) const {
    int bits_per_var = 64 / (nvars > 0 ? nvars : 1);
    if (bits_per_var > 8) bits_per_var = 8;
    std::uint64_t m = 0;
    int bit = 0;
    for (int v = 0; v < nvars; ++v) {
      std::uint32_t threshold = 1;
      for (int j = 0; j < bits_per_var; ++j) {
        if (e_[v] >= threshold) m |= 1ull << bit;
        ++bit;
        threshold <<= 1;
      }
    }
    return m;
  }

  bool operator==(const Monomial& other) const { return e_ == other.e_; }
  bool operator!=(const Monomial& other) const { return e_ != other.e_; }

 private:
  std::array<std::uint16_t, kMaxVars> e_;
};

}  // namespace germcalc

#endif
