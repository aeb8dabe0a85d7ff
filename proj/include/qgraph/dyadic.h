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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

namespace qgraph {

/// An exact non-negative-or-negative rational of the form m / 2^k, kept reduced
/// (m odd, or k == 0). Probabilities and overlaps live here so that nothing
/// downstream ever rounds.
class Dyadic {
   public:
    using Int = boost::multiprecision::cpp_int;

    Dyadic() = default;
    Dyadic(std::int64_t integer);  // NOLINT(google-explicit-constructor)
    Dyadic(Int numerator, std::uint32_t exponent);

    /// 2^-k.
    static Dyadic inverse_pow2(std::uint32_t k);

    const Int &numerator() const {
        return numerator_;
    }
    std::uint32_t exponent() const {
        return exponent_;
    }
    Int denominator() const;

    bool is_zero() const {
        return numerator_ == 0;
    }
    double to_double() const;
    /// "p/q" with the fraction reduced; integers render as "p/1".
    std::string str() const;

    Dyadic operator+(const Dyadic &other) const;
    Dyadic operator-(const Dyadic &other) const;
    Dyadic operator*(const Dyadic &other) const;
    /// Division by two, exactly.
    Dyadic half() const;

    bool operator==(const Dyadic &other) const = default;
    std::strong_ordering operator<=>(const Dyadic &other) const;

   private:
    void normalize();

    Int numerator_ = 0;
    std::uint32_t exponent_ = 0;
};

std::ostream &operator<<(std::ostream &out, const Dyadic &value);

}  // namespace qgraph
