#pragma once

// circ(c_0, ..., c_{n-1}): row i is the first row cyclically shifted right i
// places, so entry (i, j) is c_{(j - i) mod n}.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "circnorm/bigint.hpp"
#include "circnorm/sequences.hpp"

namespace circnorm {

/// Exact dense n x n integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, BigInt(0)) {}
  IntMatrix(std::size_t n, std::vector<BigInt> data);
  /// Convenience for tests and small literals.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t order() const noexcept { return n_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::span<const BigInt> data() const noexcept { return data_; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<BigInt> data_;
};

/// M^T M and M M^T.
IntMatrix transpose_times(const IntMatrix& m);
IntMatrix times_transpose(const IntMatrix& m);

/// M^T M == M M^T in exact arithmetic (M real, so M^H = M^T).
bool is_normal(const IntMatrix& m);

class CirculantMatrix {
 public:
  /// Throws InvalidArgument for an empty row and NegativeEntry when any
  /// entry is below zero.
  explicit CirculantMatrix(std::vector<BigInt> first_row);

  std::size_t order() const noexcept { return row_.size(); }
  std::span<const BigInt> first_row() const noexcept { return row_; }
  const BigInt& entry(std::size_t i, std::size_t j) const {
    return row_[(j + order() - i % order()) % order()];
  }

  /// Exact sum of the first row, which every row shares.
  const BigInt& row_sum() const noexcept { return sum_; }
  /// Bit length of the largest entry (0 for the zero matrix).
  std::size_t max_entry_bits() const noexcept { return max_bits_; }
  /// Every entry satisfies 0 <= c < 2^bits.
  bool entries_below_pow2(unsigned bits) const noexcept { return max_bits_ <= bits; }

  /// First row as doubles; throws PrecisionLoss if any entry is >= 2^53.
  std::vector<double> first_row_as_double() const;

  bool operator==(const CirculantMatrix& o) const { return row_ == o.row_; }

 private:
  std::vector<BigInt> row_;
  BigInt sum_;
  std::size_t max_bits_ = 0;
};

/// Eigenvalues lambda_k = sum_j c_j w^{jk}, w = exp(+2 pi i / n).
struct Spectrum {
  std::vector<std::complex<double>> values;

  std::size_t size() const noexcept { return values.size(); }
  /// max_k |lambda_k|.
  double max_modulus() const;
  /// Smallest k attaining max_modulus within relative slack `rel`.
  std::vector<std::size_t> argmax_modulus(double rel = 0.0) const;
};

/// circ(term(id,0), ..., term(id,n-1)). NegativeEntry for negative terms.
CirculantMatrix from_sequence(const SequenceId& id, std::size_t n);

IntMatrix to_dense(const CirculantMatrix& c);

/// Exact C v in O(n^2) without materializing C. DimensionMismatch if
/// v.size() != order.
std::vector<BigInt> matvec_naive(const CirculantMatrix& c, std::span<const BigInt> v);

/// C v via forward transform, pointwise product with the eigenvalues and
/// inverse transform, O(n log n). Throws DimensionMismatch, or PrecisionLoss
/// when an entry of C or |v_i| reaches 2^53.
std::vector<double> matvec_fft(const CirculantMatrix& c, std::span<const double> v);

/// Spectrum by FFT. PrecisionLoss when an entry reaches 2^53.
Spectrum eigenvalues_dft(const CirculantMatrix& c);

/// Same spectrum by the O(n^2) direct sum; the reference for eigenvalues_dft.
Spectrum eigenvalues_direct(const CirculantMatrix& c);

/// First row recovered from a spectrum by the inverse transform
/// c_j = (1/n) sum_k lambda_k w^{-jk}, real parts.
std::vector<double> first_row_from_spectrum(const Spectrum& s);

/// C 1 - (sum c) 1, exactly. All zero certifies the all-ones eigenvector.
std::vector<BigInt> all_ones_eigencheck(const CirculantMatrix& c);

}  // namespace circnorm
