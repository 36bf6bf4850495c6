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

#include "qmul/bigint.hpp"

#include <iterator>

#include "qmul/error.hpp"

namespace qmul {

BigUint pow2(uint32_t exponent) {
    BigUint r = 0;
    boost::multiprecision::bit_set(r, exponent);
    return r;
}

BigUint low_bits(const BigUint &value, uint32_t width) {
    if (value.is_zero()) {
        return value;
    }
    if (boost::multiprecision::msb(value) < width) {
        return value;
    }
    return value & (pow2(width) - 1);
}

bool bit_of(const BigUint &value, uint32_t i) {
    return boost::multiprecision::bit_test(value, i);
}

std::vector<uint64_t> to_words(const BigUint &value, uint32_t width) {
    std::vector<uint64_t> words((width + 63) / 64, 0);
    if (words.empty()) {
        return words;
    }
    BigUint v = low_bits(value, width);
    std::vector<uint64_t> raw;
    boost::multiprecision::export_bits(v, std::back_inserter(raw), 64, false);
    for (size_t i = 0; i < raw.size() && i < words.size(); ++i) {
        words[i] = raw[i];
    }
    return words;
}

BigUint random_bits(std::mt19937_64 &rng, uint32_t width) {
    BigUint r = 0;
    uint32_t done = 0;
    while (done < width) {
        uint64_t chunk = rng();
        uint32_t take = std::min<uint32_t>(64, width - done);
        if (take < 64) {
            chunk &= (uint64_t{1} << take) - 1;
        }
        r |= BigUint(chunk) << done;
        done += take;
    }
    return r;
}

BigUint parse_biguint(const std::string &text) {
    if (text.empty()) {
        fail(ErrorKind::InvalidArgument, "empty integer");
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            if (!(text.size() > 2 && (text[1] == 'x' || text[1] == 'X') && text[0] == '0')) {
                fail(ErrorKind::InvalidArgument, "not a non-negative integer: " + text);
            }
        }
    }
    try {
        return BigUint(text);
    } catch (const std::exception &) {
        fail(ErrorKind::InvalidArgument, "not a non-negative integer: " + text);
    }
}

std::string to_string(const BigUint &value) {
    return value.str();
}

}  // namespace qmul
