#ifndef GERMCALC_MATRIX_HPP
#define GERMCALC_MATRIX_HPP

#include <vector>

#include "germcalc/poly.hpp"

namespace germcalc {

class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, int rows, int cols)
      : ring_(std::move(ring)),
        rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              Polynomial::zero(ring_)) {
    if (rows < 0 || cols < 0) throw Error("matrix dimensions must be nonnegative");
  }

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Polynomial& at(int r, int c) { return data_[index(r, c)]; }
  const Polynomial& at(int r, int c) const { return data_[index(r, c)]; }

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw Error("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  RingPtr ring_;
  int rows_;
  int cols_;
  std::vector<Polynomial> data_;
};

}  // namespace germcalc

#endif
