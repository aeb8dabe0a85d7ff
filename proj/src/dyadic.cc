// Copyright 2026 The qgraph Authors
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

#include "qgraph/dyadic.h"

#include <ostream>

namespace qgraph {

Dyadic::Dyadic(std::int64_t integer) : numerator_(integer), exponent_(0) {
}

Dyadic::Dyadic(Int numerator, std::uint32_t exponent) : numerator_(std::move(numerator)), exponent_(exponent) {
    normalize();
}

Dyadic Dyadic::inverse_pow2(std::uint32_t k) {
    return Dyadic(Int(1), k);
}

void Dyadic::normalize() {
    if (numerator_ == 0) {
        exponent_ = 0;
        return;
    }
    while (exponent_ > 0 && !boost::multiprecision::bit_test(abs(numerator_), 0)) {
        numerator_ >>= 1;
        exponent_--;
    }
}

Dyadic::Int Dyadic::denominator() const {
    Int d = 1;
    d <<= exponent_;
    return d;
}

double Dyadic::to_double() const {
    return numerator_.convert_to<double>() / denominator().convert_to<double>();
}

std::string Dyadic::str() const {
    return numerator_.str() + "/" + denominator().str();
}

Dyadic Dyadic::operator+(const Dyadic &other) const {
    std::uint32_t e = std::max(exponent_, other.exponent_);
    Int a = numerator_ << (e - exponent_);
    Int b = other.numerator_ << (e - other.exponent_);
    return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic &other) const {
    std::uint32_t e = std::max(exponent_, other.exponent_);
    Int a = numerator_ << (e - exponent_);
    Int b = other.numerator_ << (e - other.exponent_);
    return Dyadic(a - b, e);
}

Dyadic Dyadic::operator*(const Dyadic &other) const {
    return Dyadic(numerator_ * other.numerator_, exponent_ + other.exponent_);
}

Dyadic Dyadic::half() const {
    return Dyadic(numerator_, exponent_ + 1);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic &other) const {
    Dyadic diff = *this - other;
    if (diff.numerator_ < 0) {
        return std::strong_ordering::less;
    }
    if (diff.numerator_ > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &out, const Dyadic &value) {
    return out << value.str();
}

}  // namespace qgraph
