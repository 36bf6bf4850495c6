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

// Karatsuba plus-equal multiplication.
//
// Both factors are cut into L = 2^j equal limbs of p <= threshold bits. The limb polynomials are
// multiplied with the three-product recursion into a workspace of 2L - 1 coefficient registers,
// each wide enough (2p + j bits) to hold its final coefficient exactly, so no carry ever crosses
// a coefficient boundary. Every recursive product is added straight into a window of coefficient
// registers; the two products that appear with weight (1 - t^h) share one conjugation of that
// window by multiplication with (1 - t^h). The coefficients are then carried into the output with
// a constant number of full-width additions and the workspace is cleared by running the
// polynomial product again with the opposite sign.

#include <algorithm>
#include <bit>

#include "qmul/arith.hpp"
#include "qmul/error.hpp"

namespace qmul {

namespace {

struct Limbs {
    bool quantum = true;
    uint32_t width = 0;
    std::vector<QubitList> qubits;
    std::vector<BigUint> values;

    size_t size() const {
        return quantum ? qubits.size() : values.size();
    }
    Limbs range(size_t from, size_t to) const {
        Limbs out;
        out.quantum = quantum;
        out.width = width;
        if (quantum) {
            out.qubits.assign(qubits.begin() + from, qubits.begin() + to);
        } else {
            out.values.assign(values.begin() + from, values.begin() + to);
        }
        return out;
    }
    Factor factor(size_t i) const {
        return quantum ? Factor::qubits(qubits[i]) : Factor::constant(values[i], width);
    }
};

using Coeffs = std::span<const QubitList>;

/// window *= (1 - t^h): c_k -= c_{k-h}, top down.
void shift_mul(CircuitBuilder &b, Coeffs window, size_t h) {
    for (size_t k = window.size(); k-- > h;) {
        emit_inplace_sub(b, window[k], window[k - h]);
    }
}

/// Inverse of shift_mul: c_k += c_{k-h}, bottom up.
void shift_div(CircuitBuilder &b, Coeffs window, size_t h) {
    for (size_t k = h; k < window.size(); ++k) {
        emit_inplace_add(b, window[k], window[k - h]);
    }
}

/// Quantum limb sums s_i = lo_i + hi_i kept in `store`. hi may have fewer limbs than lo.
Limbs add_limbs(CircuitBuilder &b, const Limbs &lo, const Limbs &hi, Ancilla &store) {
    Limbs out;
    out.quantum = lo.quantum;
    out.width = lo.width + 1;
    if (!lo.quantum) {
        for (size_t i = 0; i < lo.size(); ++i) {
            out.values.push_back(lo.values[i] + (i < hi.size() ? hi.values[i] : BigUint(0)));
        }
        return out;
    }
    store = b.borrow(static_cast<uint32_t>(lo.size() * out.width));
    for (size_t i = 0; i < lo.size(); ++i) {
        QubitList s = store.reg().slice(static_cast<uint32_t>(i * out.width), out.width).bits();
        for (uint32_t k = 0; k < lo.width; ++k) {
            b.cnot(lo.qubits[i][k], s[k]);
        }
        if (i < hi.size()) {
            emit_inplace_add(b, s, hi.qubits[i]);
        }
        out.qubits.push_back(std::move(s));
    }
    return out;
}

void clear_limb_sums(CircuitBuilder &b, const Limbs &sums, const Limbs &lo, const Limbs &hi) {
    if (!sums.quantum) {
        return;
    }
    for (size_t i = sums.size(); i-- > 0;) {
        if (i < hi.size()) {
            emit_inplace_sub(b, sums.qubits[i], hi.qubits[i]);
        }
        for (uint32_t k = 0; k < lo.width; ++k) {
            b.cnot(lo.qubits[i][k], sums.qubits[i][k]);
        }
    }
}

/// window += sign * X(t) * Y(t), coefficientwise mod 2^width. window has 2|X| - 1 registers.
void poly_mul_add(CircuitBuilder &b, Coeffs window, const Limbs &x, const Limbs &y, int sign) {
    const size_t count = x.size();
    if (count == 1) {
        if (sign < 0) {
            b.x_all(window[0]);
        }
        emit_schoolbook(b, window[0], x.qubits[0], y.factor(0));
        if (sign < 0) {
            b.x_all(window[0]);
        }
        return;
    }
    const size_t h = (count + 1) / 2;
    const size_t l = count - h;
    Limbs x0 = x.range(0, h), x1 = x.range(h, count);
    Limbs y0 = y.range(0, h), y1 = y.range(h, count);

    // (1 - t^h) * (X0 Y0 - t^h X1 Y1)
    shift_div(b, window, h);
    poly_mul_add(b, window.subspan(0, 2 * h - 1), x0, y0, sign);
    poly_mul_add(b, window.subspan(h, 2 * l - 1), x1, y1, -sign);
    shift_mul(b, window, h);

    // t^h * (X0 + X1) * (Y0 + Y1)
    Ancilla x_store, y_store;
    Limbs sx = add_limbs(b, x0, x1, x_store);
    Limbs sy = add_limbs(b, y0, y1, y_store);
    poly_mul_add(b, window.subspan(h, 2 * h - 1), sx, sy, sign);
    clear_limb_sums(b, sy, y0, y1);
    clear_limb_sums(b, sx, x0, x1);
}

}  // namespace

KaratsubaLayout karatsuba_layout(uint32_t n, uint32_t threshold) {
    KaratsubaLayout layout;
    uint32_t levels = 0;
    while ((n + (1u << levels) - 1) >> levels > threshold) {
        ++levels;
    }
    layout.limbs = 1u << levels;
    layout.limb_width = (n + layout.limbs - 1) / layout.limbs;
    layout.coeff_width = 2 * layout.limb_width + levels;
    return layout;
}

void emit_karatsuba(CircuitBuilder &builder, QubitSpan acc, QubitSpan x, const Factor &y, uint32_t threshold) {
    const uint32_t n = static_cast<uint32_t>(x.size());
    if (n <= threshold) {
        emit_schoolbook(builder, acc, x, y);
        return;
    }
    if (y.width != n || acc.size() != 2 * size_t{n}) {
        fail(ErrorKind::InvalidArgument, "karatsuba expects n-bit factors and a 2n-bit accumulator");
    }
    const KaratsubaLayout layout = karatsuba_layout(n, threshold);
    const uint32_t limbs = layout.limbs;
    const uint32_t p = layout.limb_width;
    const uint32_t cw = layout.coeff_width;
    const uint32_t padded = limbs * p;

    Ancilla x_pad = builder.borrow(padded - n);
    Ancilla y_pad = builder.borrow(y.quantum ? padded - n : 0);
    Limbs xl, yl;
    xl.width = p;
    yl.width = p;
    yl.quantum = y.quantum;
    auto bit_at = [&](QubitSpan src, const Ancilla &pad, uint32_t i) {
        return i < n ? src[i] : pad[i - n];
    };
    for (uint32_t i = 0; i < limbs; ++i) {
        QubitList xs, ys;
        for (uint32_t k = 0; k < p; ++k) {
            xs.push_back(bit_at(x, x_pad, i * p + k));
            if (y.quantum) {
                ys.push_back(bit_at(y.bits, y_pad, i * p + k));
            }
        }
        xl.qubits.push_back(std::move(xs));
        if (y.quantum) {
            yl.qubits.push_back(std::move(ys));
        } else {
            yl.values.push_back(low_bits(y.value >> (i * p), p));
        }
    }

    const uint32_t ncoeff = 2 * limbs - 1;
    Ancilla workspace = builder.borrow(ncoeff * cw);
    std::vector<QubitList> coeffs;
    for (uint32_t k = 0; k < ncoeff; ++k) {
        coeffs.push_back(workspace.reg().slice(k * cw, cw).bits());
    }

    poly_mul_add(builder, coeffs, xl, yl, +1);

    // acc += sum_k coeff_k 2^(k p), one addition per p-bit slice of the coefficient registers.
    const uint32_t acc_width = 2 * n;
    const uint32_t slices = (cw + p - 1) / p;
    for (uint32_t r = 0; r < slices; ++r) {
        uint32_t offset = r * p;
        if (offset >= acc_width) {
            break;
        }
        uint32_t width = acc_width - offset;
        uint32_t gaps = 0;
        for (uint32_t pos = offset; pos < acc_width; ++pos) {
            uint32_t k = pos / p - r;
            uint32_t bit = offset + pos % p;
            if (k >= ncoeff || bit >= cw) {
                ++gaps;
            }
        }
        Ancilla zeros = builder.borrow(gaps);
        QubitList addend;
        uint32_t next_zero = 0;
        for (uint32_t pos = offset; pos < acc_width; ++pos) {
            uint32_t k = pos / p - r;
            uint32_t bit = offset + pos % p;
            if (k >= ncoeff || bit >= cw) {
                addend.push_back(zeros[next_zero++]);
            } else {
                addend.push_back(coeffs[k][bit]);
            }
        }
        emit_inplace_add(builder, acc.subspan(offset, width), addend);
    }

    poly_mul_add(builder, coeffs, xl, yl, -1);
}

}  // namespace qmul
