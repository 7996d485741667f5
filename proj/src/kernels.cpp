#include "circnorm/kernels.hpp"

#include <numbers>
#include <string>

#include "circnorm/errors.hpp"

#ifdef CIRCNORM_HAVE_OPENMP
#include <omp.h>
#endif

namespace circnorm::kernels {

namespace {

using Complex = std::complex<double>;

void require_square(std::size_t size, std::size_t n, const char* what) {
  if (size != n * n) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": expected " + std::to_string(n * n) +
                    " entries, got " + std::to_string(size));
  }
}

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": length " + std::to_string(b) +
                    " does not match order " + std::to_string(a));
  }
}

// Shared by both DFT variants so their results agree bit for bit.
std::vector<Complex> twiddles(std::size_t n, int sign) {
  std::vector<Complex> w(n);
  const double step = (sign >= 0 ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(n);
  for (std::size_t m = 0; m < n; ++m) w[m] = std::polar(1.0, step * static_cast<double>(m));
  return w;
}

std::vector<BigInt> transpose(std::span<const BigInt> a, std::size_t n) {
  std::vector<BigInt> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
  return t;
}

// G = R R^T over rows of R, upper triangle computed and mirrored.
std::vector<BigInt> row_gram(const std::vector<BigInt>& r, std::size_t n) {
  std::vector<BigInt> g(n * n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        mpz_addmul(acc.get_mpz_t(), r[i * n + k].get_mpz_t(), r[j * n + k].get_mpz_t());
      }
      g[i * n + j] = acc;
      g[j * n + i] = std::move(acc);
    }
  }
  return g;
}

}  // namespace

int max_threads() noexcept {
#ifdef CIRCNORM_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<BigInt> circulant_matvec(std::span<const BigInt> first_row,
                                     std::span<const BigInt> v) {
  const std::size_t n = first_row.size();
  require_same_length(n, v.size(), "circulant_matvec");
  std::vector<BigInt> y(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    BigInt acc = 0;
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t j = i + m < n ? i + m : i + m - n;
      mpz_addmul(acc.get_mpz_t(), first_row[m].get_mpz_t(), v[j].get_mpz_t());
    }
    y[i] = std::move(acc);
  }
  return y;
}

std::vector<BigInt> gram_tn(std::span<const BigInt> a, std::size_t n) {
  require_square(a.size(), n, "gram_tn");
  return row_gram(transpose(a, n), n);
}

std::vector<BigInt> gram_nt(std::span<const BigInt> a, std::size_t n) {
  require_square(a.size(), n, "gram_nt");
  return row_gram(std::vector<BigInt>(a.begin(), a.end()), n);
}

std::vector<double> gram_tn_rounded(std::span<const std::int64_t> a, std::size_t n) {
  require_square(a.size(), n, "gram_tn_rounded");
  std::vector<std::int64_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];

  std::vector<double> g(n * n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t* ri = t.data() + i * n;
    for (std::size_t j = i; j < n; ++j) {
      const std::int64_t* rj = t.data() + j * n;
      __int128 acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += static_cast<__int128>(ri[k]) * rj[k];
      g[i * n + j] = g[j * n + i] = static_cast<double>(acc);
    }
  }
  return g;
}

std::vector<double> matvec(std::span<const double> m, std::span<const double> v) {
  const std::size_t n = v.size();
  require_square(m.size(), n, "matvec");
  std::vector<double> y(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = m.data() + i * n;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
    y[i] = acc;
  }
  return y;
}

std::vector<Complex> direct_dft(std::span<const double> x, int sign) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const auto w = twiddles(n, sign);
  std::vector<Complex> out(n);
#pragma omp parallel for schedule(static)
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    std::size_t idx = 0;  // (j * k) mod n
    for (std::size_t j = 0; j < n; ++j) {
      acc += x[j] * w[idx];
      idx += k;
      if (idx >= n) idx -= n;
    }
    out[k] = acc;
  }
  return out;
}

namespace serial {

std::vector<BigInt> circulant_matvec(std::span<const BigInt> first_row,
                                     std::span<const BigInt> v) {
  const std::size_t n = first_row.size();
  require_same_length(n, v.size(), "circulant_matvec");
  std::vector<BigInt> y(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += first_row[(j + n - i) % n] * v[j];
  return y;
}

std::vector<BigInt> gram_tn(std::span<const BigInt> a, std::size_t n) {
  require_square(a.size(), n, "gram_tn");
  std::vector<BigInt> g(n * n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) g[i * n + j] += a[k * n + i] * a[k * n + j];
  return g;
}

std::vector<BigInt> gram_nt(std::span<const BigInt> a, std::size_t n) {
  require_square(a.size(), n, "gram_nt");
  std::vector<BigInt> g(n * n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) g[i * n + j] += a[i * n + k] * a[j * n + k];
  return g;
}

std::vector<double> gram_tn_rounded(std::span<const std::int64_t> a, std::size_t n) {
  require_square(a.size(), n, "gram_tn_rounded");
  std::vector<double> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < n; ++k)
        acc += static_cast<__int128>(a[k * n + i]) * a[k * n + j];
      g[i * n + j] = static_cast<double>(acc);
    }
  }
  return g;
}

std::vector<double> matvec(std::span<const double> m, std::span<const double> v) {
  const std::size_t n = v.size();
  require_square(m.size(), n, "matvec");
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += m[i * n + j] * v[j];
  return y;
}

std::vector<Complex> direct_dft(std::span<const double> x, int sign) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const auto w = twiddles(n, sign);
  std::vector<Complex> out(n, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) out[k] += x[j] * w[(j * k) % n];
  return out;
}

}  // namespace serial

}  // namespace circnorm::kernels
