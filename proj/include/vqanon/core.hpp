// include/vqanon/core.hpp

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

#ifndef VQANON_CORE_HPP_
#define VQANON_CORE_HPP_

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vqanon {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matd = Mat<double>;
using Vecd = Vec<double>;
using Matf = Mat<float>;
using Vecf = Vec<float>;
using BoolArray = Eigen::Array<bool, Eigen::Dynamic, 1>;

// Error categories map one-to-one onto the CLI exit codes.
enum class ErrorKind { usage = 1, data = 2, numerical = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) throw Error(kind, msg);
}

// Mono waveform plus identity tags; the raw unit flowing in and out of the
// pipeline. Samples live in [-1, 1] at a fixed 16 kHz rate, and the length is
// kept at a multiple of the 160-sample hop by trim_to_hop().
struct AudioClip {
  Eigen::VectorXd samples;
  int sample_rate = 16000;
  std::string utterance_id;
  std::string speaker_id;
};

// Log-amplitude mel energies, one row per 10 ms frame.
struct MelSpectrogram {
  Eigen::MatrixXd frames;  // [T, n_mels]
  double frame_rate_hz = 100.0;
  Eigen::Index num_frames() const { return frames.rows(); }
};

// Per-frame F0/voicing/energy aligned with a MelSpectrogram.
// f0_hz[t] == 0 exactly when voiced[t] is false.
struct ProsodyTrack {
  Eigen::VectorXd f0_hz;
  BoolArray voiced;
  Eigen::VectorXd energy;
  Eigen::Index num_frames() const { return f0_hz.size(); }
};

struct XVector {
  enum class Source { extracted, stub, ingested };
  Eigen::VectorXd values;
  std::string speaker_id;
  std::string utterance_id;
  Source source = Source::ingested;
};

inline const char* to_string(XVector::Source s) {
  switch (s) {
    case XVector::Source::extracted: return "extracted";
    case XVector::Source::stub: return "stub";
    default: return "ingested";
  }
}

}  // namespace vqanon

#endif  // VQANON_CORE_HPP_
