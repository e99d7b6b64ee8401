// Copyright 2026 The latdel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace latdel {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Floor and ceiling of a / b for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

/// log2 of a positive big integer, good to double precision.
double log2_big(const BigInt& v);

}  // namespace latdel
