#include "rcwall/banded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rcwall {

BandMatrix::BandMatrix(std::size_t n, std::size_t lower, std::size_t upper)
    : n_(n), kl_(lower), ku_(upper), width_(lower + upper + 1), a_(n * (lower + upper + 1), 0.0) {}

void BandMatrix::set_zero() { std::fill(a_.begin(), a_.end(), 0.0); }

void BandMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j0 = i >= kl_ ? i - kl_ : 0;
    const std::size_t j1 = std::min(n_ - 1, i + ku_);
    double s = 0.0;
    for (std::size_t j = j0; j <= j1; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
}

void BandMatrix::solve_in_place(std::span<double> b) {
  if (b.size() != n_) throw std::invalid_argument("band solve: size mismatch");
  auto& A = *this;
  for (std::size_t k = 0; k < n_; ++k) {
    const double pivot = A(k, k);
    if (pivot == 0.0 || !std::isfinite(pivot)) {
      throw std::runtime_error("band solve: zero pivot at row " + std::to_string(k));
    }
    const std::size_t i1 = std::min(n_ - 1, k + kl_);
    const std::size_t j1 = std::min(n_ - 1, k + ku_);
    for (std::size_t i = k + 1; i <= i1; ++i) {
      const double m = A(i, k) / pivot;
      if (m == 0.0) continue;
      A(i, k) = m;
      for (std::size_t j = k + 1; j <= j1; ++j) A(i, j) -= m * A(k, j);
      b[i] -= m * b[k];
    }
  }
  for (std::size_t k = n_; k-- > 0;) {
    const std::size_t j1 = std::min(n_ - 1, k + ku_);
    double s = b[k];
    for (std::size_t j = k + 1; j <= j1; ++j) s -= A(k, j) * b[j];
    b[k] = s / A(k, k);
  }
}

}  // namespace rcwall
