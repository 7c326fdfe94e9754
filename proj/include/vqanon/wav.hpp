// include/vqanon/wav.hpp

// Copyright 2026  VQAnon Authors

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

// 16-bit PCM mono WAV reader/writer. Anything else (stereo, other sample
// widths, compressed formats) is rejected rather than converted.

#ifndef VQANON_WAV_HPP_
#define VQANON_WAV_HPP_

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "vqanon/core.hpp"

namespace vqanon {

namespace detail {

inline uint32_t read_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

inline uint16_t read_u16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

inline void put_u32(std::string* out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void put_u16(std::string* out, uint16_t v) {
  out->push_back(static_cast<char>(v & 0xff));
  out->push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace detail

// Reads a mono 16 kHz PCM16 WAV into [-1, 1] doubles.
inline Eigen::VectorXd read_wav(const std::string& path, int expected_rate = 16000) {
  std::ifstream f(path, std::ios::binary);
  require(f.good(), ErrorKind::data, "cannot open WAV file: " + path);
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(f)),
                                 std::istreambuf_iterator<char>());
  require(buf.size() >= 44, ErrorKind::data, "malformed WAV (too short): " + path);
  require(std::memcmp(buf.data(), "RIFF", 4) == 0 &&
              std::memcmp(buf.data() + 8, "WAVE", 4) == 0,
          ErrorKind::data, "malformed WAV (missing RIFF/WAVE): " + path);

  size_t pos = 12;
  bool have_fmt = false;
  uint16_t channels = 0, bits = 0, format = 0;
  uint32_t rate = 0;
  const unsigned char* data = nullptr;
  uint32_t data_len = 0;
  while (pos + 8 <= buf.size()) {
    const unsigned char* hdr = buf.data() + pos;
    uint32_t chunk_len = detail::read_u32(hdr + 4);
    pos += 8;
    if (pos + chunk_len > buf.size()) chunk_len = static_cast<uint32_t>(buf.size() - pos);
    if (std::memcmp(hdr, "fmt ", 4) == 0 && chunk_len >= 16) {
      format = detail::read_u16(buf.data() + pos);
      channels = detail::read_u16(buf.data() + pos + 2);
      rate = detail::read_u32(buf.data() + pos + 4);
      bits = detail::read_u16(buf.data() + pos + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = buf.data() + pos;
      data_len = chunk_len;
    }
    pos += chunk_len + (chunk_len & 1);  // chunks are word aligned
  }
  require(have_fmt && data != nullptr, ErrorKind::data,
          "malformed WAV (missing fmt/data chunk): " + path);
  require(format == 1, ErrorKind::data, "WAV is not linear PCM: " + path);
  require(channels == 1, ErrorKind::data, "WAV is not mono: " + path);
  require(bits == 16, ErrorKind::data, "WAV is not 16-bit: " + path);
  require(static_cast<int>(rate) == expected_rate, ErrorKind::data,
          "WAV sample rate mismatch (want " + std::to_string(expected_rate) +
              "): " + path);

  const Eigen::Index n = static_cast<Eigen::Index>(data_len / 2);
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    int16_t s = static_cast<int16_t>(data[2 * i] | (data[2 * i + 1] << 8));
    out[i] = static_cast<double>(s) / 32768.0;
  }
  return out;
}

// Writes samples (clamped to [-1, 1]) as mono PCM16.
inline void write_wav(const std::string& path, const Eigen::VectorXd& samples,
                      int sample_rate = 16000) {
  std::string body;
  body.reserve(44 + 2 * static_cast<size_t>(samples.size()));
  body += "RIFF";
  detail::put_u32(&body, 36 + 2 * static_cast<uint32_t>(samples.size()));
  body += "WAVEfmt ";
  detail::put_u32(&body, 16);
  detail::put_u16(&body, 1);   // PCM
  detail::put_u16(&body, 1);   // mono
  detail::put_u32(&body, static_cast<uint32_t>(sample_rate));
  detail::put_u32(&body, static_cast<uint32_t>(sample_rate) * 2);
  detail::put_u16(&body, 2);   // block align
  detail::put_u16(&body, 16);  // bits
  body += "data";
  detail::put_u32(&body, 2 * static_cast<uint32_t>(samples.size()));
  for (Eigen::Index i = 0; i < samples.size(); ++i) {
    double v = samples[i];
    if (v > 1.0) v = 1.0;
    if (v < -1.0) v = -1.0;
    long q = std::lround(v * 32767.0);
    detail::put_u16(&body, static_cast<uint16_t>(static_cast<int16_t>(q)));
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  require(f.good(), ErrorKind::data, "cannot write WAV file: " + path);
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  require(f.good(), ErrorKind::data, "short write on WAV file: " + path);
}

}  // namespace vqanon

#endif  // VQANON_WAV_HPP_
