/*
Copyright 2026 The sigmacong Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include "sigmacong/checked.hpp"

#include <algorithm>

namespace sigmacong {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(i128 v) {
  if (v >= 0) return to_string(static_cast<u128>(v));
  // Negate in unsigned space so kI128Min does not overflow.
  return "-" + to_string(static_cast<u128>(0) - static_cast<u128>(v));
}

u128 parse_u128(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty integer literal");
  u128 v = 0;
  constexpr u128 kMax = ~static_cast<u128>(0);
  for (char c : text) {
    if (c < '0' || c > '9') throw InvalidArgument("malformed integer literal: " + text);
    const auto digit = static_cast<u128>(c - '0');
    if (v > (kMax - digit) / 10) throw OverflowError("integer literal exceeds 128 bits: " + text);
    v = v * 10 + digit;
  }
  return v;
}

i128 parse_i128(const std::string& text) {
  const bool negative = !text.empty() && text.front() == '-';
  const u128 magnitude = parse_u128(negative ? text.substr(1) : text);
  const u128 limit = static_cast<u128>(kI128Max) + (negative ? 1 : 0);
  if (magnitude > limit) throw OverflowError("integer literal exceeds signed 128 bits: " + text);
  return negative ? static_cast<i128>(static_cast<u128>(0) - magnitude) : static_cast<i128>(magnitude);
}

}  // namespace sigmacong
