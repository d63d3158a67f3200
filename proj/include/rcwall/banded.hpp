#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rcwall {

/// Square band matrix with `lower` sub- and `upper` super-diagonals, stored
/// row-major by diagonal offset. Factorisation is LU without pivoting, which
/// is stable for the diagonally dominant conduction matrices built here.
class BandMatrix {
 public:
  BandMatrix(std::size_t n, std::size_t lower, std::size_t upper);

  std::size_t size() const { return n_; }
  std::size_t lower() const { return kl_; }
  std::size_t upper() const { return ku_; }

  bool in_band(std::size_t i, std::size_t j) const {
    return j + kl_ >= i && j <= i + ku_;
  }
  double& operator()(std::size_t i, std::size_t j) { return a_[index(i, j)]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[index(i, j)]; }

  void set_zero();
  /// y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;
  /// Factorises in place and overwrites b with the solution. Throws on a zero
  /// pivot. The matrix is no longer usable for multiply() afterwards.
  void solve_in_place(std::span<double> b);

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * width_ + (j + kl_ - i); }

  std::size_t n_, kl_, ku_, width_;
  std::vector<double> a_;
};

}  // namespace rcwall
