#ifndef GERMCALC_DIM_HPP
#define GERMCALC_DIM_HPP

#include <cstdint>
#include <string>

namespace germcalc {

// Vector-space dimension of a quotient; stays well defined when the quotient
// is not Artinian.
struct Dim {
  bool finite = true;
  std::uint64_t value = 0;

  static Dim infinite() { return Dim{false, 0}; }
  static Dim of(std::uint64_t v) { return Dim{true, v}; }

  bool operator==(const Dim& other) const {
    return finite == other.finite && (!finite || value == other.value);
  }

  std::string str() const {
    return finite ? std::to_string(value) : std::string("infinite");
  }
};

}  // namespace germcalc

#endif
