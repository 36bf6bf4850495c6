// Copyright 2026 The qmul Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmul {

using BigUint = boost::multiprecision::cpp_int;

/// value mod 2^width.
BigUint low_bits(const BigUint &value, uint32_t width);
bool bit_of(const BigUint &value, uint32_t i);
BigUint pow2(uint32_t exponent);
/// Little-endian 64-bit words covering `width` bits of value mod 2^width.
std::vector<uint64_t> to_words(const BigUint &value, uint32_t width);
BigUint random_bits(std::mt19937_64 &rng, uint32_t width);
BigUint parse_biguint(const std::string &text);
std::string to_string(const BigUint &value);

}  // namespace qmul
