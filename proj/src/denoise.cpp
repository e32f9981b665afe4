// src/denoise.cpp

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

#include "ttsprep/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ttsprep/fft.hpp"
#include "ttsprep/types.hpp"

namespace ttsprep::dsp {

namespace {

// Exponentially scaled modified Bessel functions e^-x I0(x), e^-x I1(x)
// (Abramowitz & Stegun 9.8.1-9.8.4); stable for any a-priori SNR.
double bessel_i0e(double x) {
  const double ax = std::abs(x);
  if (ax < 3.75) {
    const double t = x / 3.75, t2 = t * t;
    const double i0 =
        1.0 + t2 * (3.5156229 +
                    t2 * (3.0899424 +
                          t2 * (1.2067492 +
                                t2 * (0.2659732 +
                                      t2 * (0.0360768 + t2 * 0.0045813)))));
    return i0 * std::exp(-ax);
  }
  const double t = 3.75 / ax;
  const double p =
      0.39894228 +
      t * (0.01328592 +
           t * (0.00225319 +
                t * (-0.00157565 +
                     t * (0.00916281 +
                          t * (-0.02057706 +
                               t * (0.02635537 +
                                    t * (-0.01647633 + t * 0.00392377)))))));
  return p / std::sqrt(ax);
}

double bessel_i1e(double x) {
  const double ax = std::abs(x);
  double result;
  if (ax < 3.75) {
    const double t = x / 3.75, t2 = t * t;
    const double i1_over_x =
        0.5 + t2 * (0.87890594 +
                    t2 * (0.51498869 +
                          t2 * (0.15084934 +
                                t2 * (0.02658733 +
                                      t2 * (0.00301532 + t2 * 0.00032411)))));
    result = ax * i1_over_x * std::exp(-ax);
  } else {
    const double t = 3.75 / ax;
    const double p =
        0.39894228 +
        t * (-0.03988024 +
             t * (-0.00362018 +
                  t * (0.00163801 +
                       t * (-0.01031555 +
                            t * (0.02282967 +
                                 t * (-0.02895312 +
                                      t * (0.01787654 + t * -0.00420059)))))));
    result = p / std::sqrt(ax);
  }
  return x < 0 ? -result : result;
}

// Ephraim-Malah short-time spectral amplitude gain.
double mmse_stsa_gain(double xi, double gamma) {
  const double nu = xi / (1.0 + xi) * gamma;
  if (nu < 1e-12 || gamma < 1e-12) return 0.0;
  const double half = 0.5 * nu;
  const double bessel_term =
      (1.0 + nu) * bessel_i0e(half) + nu * bessel_i1e(half);
  return 0.5 * std::sqrt(std::numbers::pi) * std::sqrt(nu) / gamma *
         bessel_term;
}

}  // namespace

AudioClip denoise_mmse(const AudioClip& clip, const DenoiseParams& params) {
  if (clip.sample_rate_hz <= 0) throw Error("denoise_mmse: clip has no rate");
  const long n = static_cast<long>(clip.samples.size());
  const long frame_len =
      std::max(8L, std::lround(params.frame_s * clip.sample_rate_hz));
  const long hop = std::max(1L, std::lround(params.hop_s * clip.sample_rate_hz));
  const long min_samples = frame_len + hop * (params.noise_init_frames + 3);
  if (n < min_samples) {
    throw Error("denoise_mmse: clip too short (" + std::to_string(n) +
                " samples, need " + std::to_string(min_samples) + ")");
  }

  const std::size_t fft_size = next_pow2(frame_len);
  const std::size_t spec_len = fft_size / 2 + 1;
  const double gain_floor = std::pow(10.0, params.gain_floor_db / 20.0);

  std::vector<double> window(frame_len);
  for (long i = 0; i < frame_len; ++i) {
    window[i] =
        0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / frame_len);
  }

  // One frame of zero padding on both sides: every real sample then has
  // full window coverage, so the overlap-add denominator stays bounded
  // away from zero (edge samples otherwise divide by a vanishing window
  // tail once the gains have smeared energy across the frame).
  const long pad = frame_len;
  const long n_pad = n + 2 * pad;
  std::vector<double> padded(n_pad, 0.0);
  std::copy(clip.samples.begin(), clip.samples.end(), padded.begin() + pad);

  const long frame_count = (n_pad - 1) / hop + 1;

  std::vector<double> noise_psd(spec_len, 0.0);
  std::vector<double> prev_amp_sq(spec_len, 0.0);
  std::vector<double> ola_num(n_pad, 0.0);
  std::vector<double> ola_den(n_pad, 0.0);

  std::vector<std::complex<double>> spectrum(fft_size);
  std::vector<double> frame(frame_len);

  auto load_frame = [&](long m) {
    const long start = m * hop;
    for (long i = 0; i < frame_len; ++i) {
      const long idx = start + i;
      frame[i] = idx < n_pad ? padded[idx] * window[i] : 0.0;
    }
    std::fill(spectrum.begin(), spectrum.end(), std::complex<double>(0.0));
    for (long i = 0; i < frame_len; ++i) spectrum[i] = frame[i];
    fft(spectrum, false);
  };

  // Seed the noise spectrum from the first frames that cover real signal,
  // not the leading pad zeros.
  const long first_real_frame = (pad + hop - 1) / hop;
  const long init_frames = std::min<long>(
      params.noise_init_frames, frame_count - first_real_frame);
  for (long m = first_real_frame; m < first_real_frame + init_frames; ++m) {
    load_frame(m);
    for (std::size_t k = 0; k < spec_len; ++k) {
      noise_psd[k] += std::norm(spectrum[k]);
    }
  }
  for (std::size_t k = 0; k < spec_len; ++k) {
    noise_psd[k] = std::max(noise_psd[k] / init_frames, 1e-20);
  }

  std::vector<double> gains(spec_len);
  for (long m = 0; m < frame_count; ++m) {
    load_frame(m);

    // Decision-directed a-priori SNR plus a frame speech-presence score.
    double presence = 0.0;
    for (std::size_t k = 0; k < spec_len; ++k) {
      const double gamma = std::min(std::norm(spectrum[k]) / noise_psd[k], 1e6);
      const double excess = std::max(gamma - 1.0, 0.0);
      double xi = m == 0 ? params.dd_alpha + (1.0 - params.dd_alpha) * excess
                         : params.dd_alpha * prev_amp_sq[k] / noise_psd[k] +
                               (1.0 - params.dd_alpha) * excess;
      xi = std::max(xi, 1e-8);
      presence += gamma * xi / (1.0 + xi) - std::log1p(xi);
      gains[k] = std::clamp(mmse_stsa_gain(xi, gamma), gain_floor, 1.0);
    }
    presence /= static_cast<double>(spec_len);

    if (presence < params.speech_presence) {
      for (std::size_t k = 0; k < spec_len; ++k) {
        noise_psd[k] = params.noise_update_mu * noise_psd[k] +
                       (1.0 - params.noise_update_mu) * std::norm(spectrum[k]);
        noise_psd[k] = std::max(noise_psd[k], 1e-20);
      }
    }

    for (std::size_t k = 0; k < spec_len; ++k) {
      const double amp = gains[k] * std::abs(spectrum[k]);
      prev_amp_sq[k] = amp * amp;
      spectrum[k] *= gains[k];
      if (k > 0 && k < fft_size - k) {
        spectrum[fft_size - k] = std::conj(spectrum[k]);
      }
    }
    fft(spectrum, true);

    const long start = m * hop;
    for (long i = 0; i < frame_len && start + i < n_pad; ++i) {
      ola_num[start + i] += spectrum[i].real();
      ola_den[start + i] += window[i];
    }
  }

  AudioClip out;
  out.sample_rate_hz = clip.sample_rate_hz;
  out.samples.resize(n);
  for (long i = 0; i < n; ++i) {
    out.samples[i] =
        ola_den[pad + i] > 1e-8 ? ola_num[pad + i] / ola_den[pad + i] : 0.0;
  }
  return out;
}

}  // namespace ttsprep::dsp
