// include/ttsprep/fft.hpp

// Copyright 2026  ttsprep authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef TTSPREP_FFT_HPP_
#define TTSPREP_FFT_HPP_

#include <complex>
#include <vector>

namespace ttsprep::dsp {

/// In-place radix-2 complex FFT. Size must be a power of two.
/// The inverse transform includes the 1/N factor.
void fft(std::vector<std::complex<double>>& data, bool inverse);

/// FFT of a real signal zero-padded to fft_size (power of two, >= x.size()).
std::vector<std::complex<double>> fft_real(const std::vector<double>& x,
                                           std::size_t fft_size);

std::size_t next_pow2(std::size_t n);

}  // namespace ttsprep::dsp

#endif  // TTSPREP_FFT_HPP_
