// Square upper triangular matrix over an arbitrary commutative scalar.
// Entries below the main diagonal are implicitly zero and not stored.

#ifndef IDSEM_UPPER_TRI_HPP_
#define IDSEM_UPPER_TRI_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace idsem {

template <typename S>
class UpperTri {
 public:
  explicit UpperTri(int dim) : n_(dim), a_(size_t(dim) * (dim + 1) / 2) {
    if (dim < 1) {
      throw std::invalid_argument("UpperTri: dim must be >= 1");
    }
  }

  static UpperTri identity(int dim, S const& one) {
    UpperTri m(dim);
    for (int i = 0; i < dim; ++i) {
      m.at(i, i) = one;
    }
    return m;
  }

  int dim() const noexcept { return n_; }

  // 0-based access to the stored triangle; requires i <= j.
  S& at(int i, int j) { return a_[index(i, j)]; }
  S const& at(int i, int j) const { return a_[index(i, j)]; }

  friend bool operator==(UpperTri const&, UpperTri const&) = default;

 private:
  size_t index(int i, int j) const {
    if (i < 0 || i > j || j >= n_) {
      throw std::out_of_range("UpperTri: index outside the upper triangle");
    }
    return size_t(i) * n_ - size_t(i) * (i - 1) / 2 + size_t(j - i);
  }

  int n_;
  std::vector<S> a_;
};

template <typename S>
UpperTri<S> operator*(UpperTri<S> const& a, UpperTri<S> const& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("UpperTri: dimension mismatch in product");
  }
  int n = a.dim();
  UpperTri<S> c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      S sum{};
      for (int k = i; k <= j; ++k) {
        sum += a.at(i, k) * b.at(k, j);
      }
      c.at(i, j) = std::move(sum);
    }
  }
  return c;
}

// Reflection across the secondary diagonal: (i, j) -> (n-1-j, n-1-i).
// An involutory anti-automorphism of the triangular matrix semigroups.
template <typename S>
UpperTri<S> skew_transpose(UpperTri<S> const& a) {
  int n = a.dim();
  UpperTri<S> d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      d.at(i, j) = a.at(n - 1 - j, n - 1 - i);
    }
  }
  return d;
}

}  // namespace idsem

#endif  // IDSEM_UPPER_TRI_HPP_
