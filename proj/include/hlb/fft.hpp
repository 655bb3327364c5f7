#pragma once

#include <complex>
#include <cstddef>

namespace hlb::fft {

/// Unnormalized in-place DFTs backed by FFTW plans cached per shape.
/// forward uses exp(-2 pi i jk/n), backward exp(+2 pi i jk/n).
/// Plan creation is serialized; execution is reentrant.
void forward(std::complex<double>* data, std::size_t n);
void backward(std::complex<double>* data, std::size_t n);

/// Row-major rows x cols array, 2D transform.
void forward_2d(std::complex<double>* data, std::size_t rows, std::size_t cols);
void backward_2d(std::complex<double>* data, std::size_t rows, std::size_t cols);

/// `howmany` contiguous rows of length n, each transformed independently.
void forward_many(std::complex<double>* data, std::size_t n, std::size_t howmany);
void backward_many(std::complex<double>* data, std::size_t n, std::size_t howmany);

/// Transform along the slow axis of a rows x cols array: every column
/// (stride cols) is transformed independently.
void forward_columns(std::complex<double>* data, std::size_t rows, std::size_t cols);
void backward_columns(std::complex<double>* data, std::size_t rows, std::size_t cols);

} // namespace hlb::fft
