#pragma once

// Data-parallel inner loops behind the circulant and spectral modules.
//
// Each kernel in `circnorm::kernels` is OpenMP-parallel over its outer index
// and has a plain single-threaded twin in `circnorm::kernels::serial` that is
// kept as the reference for tests and benchmarks. Every output element is
// produced by exactly one thread with a fixed summation order, so parallel
// and serial results are bit-identical, floating point included.
//
// Dense matrices are row-major, n x n.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "circnorm/bigint.hpp"

namespace circnorm::kernels {

/// Worker threads an OpenMP region would use (1 without OpenMP).
int max_threads() noexcept;

/// y_i = sum_j c_{(j-i) mod n} v_j, exactly.
std::vector<BigInt> circulant_matvec(std::span<const BigInt> first_row,
                                     std::span<const BigInt> v);

/// A^T A and A A^T, exactly.
std::vector<BigInt> gram_tn(std::span<const BigInt> a, std::size_t n);
std::vector<BigInt> gram_nt(std::span<const BigInt> a, std::size_t n);

/// A^T A for |a_ij| < 2^26, accumulated exactly in 128-bit integers and
/// rounded to double once per entry.
std::vector<double> gram_tn_rounded(std::span<const std::int64_t> a,
                                    std::size_t n);

/// y = M v for a dense double matrix.
std::vector<double> matvec(std::span<const double> m, std::span<const double> v);

/// X_k = sum_j x_j exp(sign * 2 pi i j k / n), O(n^2), j summed in order.
std::vector<std::complex<double>> direct_dft(std::span<const double> x, int sign);

namespace serial {

std::vector<BigInt> circulant_matvec(std::span<const BigInt> first_row,
                                     std::span<const BigInt> v);
std::vector<BigInt> gram_tn(std::span<const BigInt> a, std::size_t n);
std::vector<BigInt> gram_nt(std::span<const BigInt> a, std::size_t n);
std::vector<double> gram_tn_rounded(std::span<const std::int64_t> a,
                                    std::size_t n);
std::vector<double> matvec(std::span<const double> m, std::span<const double> v);
std::vector<std::complex<double>> direct_dft(std::span<const double> x, int sign);

}  // namespace serial

}  // namespace circnorm::kernels
