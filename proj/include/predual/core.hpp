//  Copyright 2026 The predual authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef PREDUAL_CORE_HPP_
#define PREDUAL_CORE_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace predual {

/// A subset of a carrier with at most 24 elements, one bit per element.
/// Carriers are capped so every subset fits a machine word and exhaustive
/// sweeps over all 2^n subsets stay cheap.
using Subset = std::uint32_t;

inline constexpr int kMaxCarrier = 24;

inline constexpr Subset bit(int i) { return Subset{1} << i; }

inline constexpr bool has(Subset s, int i) { return (s >> i) & 1u; }

inline constexpr Subset full_set(int n) {
  return n == 0 ? 0u : (Subset{1} << n) - 1u;
}

inline constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

inline int popcount(Subset s) { return std::popcount(s); }

/// Calls fn(i) for each set bit, lowest first.
template <typename Fn>
inline void for_each_in(Subset s, Fn&& fn) {
  while (s != 0) {
    int i = std::countr_zero(s);
    fn(i);
    s &= s - 1;
  }
}

enum class Errc {
  NotPartialOrder,
  NoJoin,
  NoBottom,
  JoinMismatch,
  CarrierTooLarge,
  NotDirected,
  NotATopology,
  NotOpen,
  BadInput,
  NoExtension,
  NotPrec,
  HypothesesFail,
  DimensionMismatch,
  NotAMorphism,
  NotContinuous,
  ParseError,
  UnknownProperty,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPartialOrder: return "NotPartialOrder";
    case Errc::NoJoin: return "NoJoin";
    case Errc::NoBottom: return "NoBottom";
    case Errc::JoinMismatch: return "JoinMismatch";
    case Errc::CarrierTooLarge: return "CarrierTooLarge";
    case Errc::NotDirected: return "NotDirected";
    case Errc::NotATopology: return "NotATopology";
    case Errc::NotOpen: return "NotOpen";
    case Errc::BadInput: return "BadInput";
    case Errc::NoExtension: return "NoExtension";
    case Errc::NotPrec: return "NotPrec";
    case Errc::HypothesesFail: return "HypothesesFail";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotAMorphism: return "NotAMorphism";
    case Errc::NotContinuous: return "NotContinuous";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownProperty: return "UnknownProperty";
  }
  return "?";
}

/// Input or domain error. `witness` carries the offending element labels
/// (or a serialized fragment for parse errors) so reports can re-state the
/// violation.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::vector<std::string> witness = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const { return code_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  Errc code_;
  std::vector<std::string> witness_;
};

}  // namespace predual

#endif  // PREDUAL_CORE_HPP_
