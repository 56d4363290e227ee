#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace seaweed {

using BigInt = boost::multiprecision::cpp_int;

template <class Int>
concept Integer = std::is_same_v<Int, BigInt> ||
                  (std::is_integral_v<Int> && std::is_signed_v<Int>);

// gcd with gcd(0, x) = x
template <Integer Int>
Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

template <Integer Int>
Int abs_value(const Int& x) {
  return x < 0 ? Int(-x) : x;
}

// Remainder r[s] of the euclidean division, with r[0] = r.
template <Integer Int>
Int rem(const Int& r, const Int& s) {
  if (s == 0) return r;
  return r % s;
}

// Floor of x / 2 for x >= 0.
template <Integer Int>
Int half(const Int& x) {
  return x / 2;
}

template <Integer Int>
bool is_odd(const Int& x) {
  return x % 2 != 0;
}

template <Integer Int>
std::string to_string(const Int& x) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    return x.str();
  } else {
    return std::to_string(x);
  }
}

template <Integer Int>
Int from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  Int value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer '" + std::string(text) + "'");
    if constexpr (!std::is_same_v<Int, BigInt>) {
      if (value > (std::numeric_limits<Int>::max() - (c - '0')) / 10)
        throw std::out_of_range("integer too large '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Int(-value) : value;
}

// Converts to a machine size, throwing when the value does not fit below bound.
template <Integer Int>
std::size_t to_size(const Int& x, std::size_t bound = std::numeric_limits<std::size_t>::max()) {
  if (x < 0) throw std::out_of_range("negative size");
  bool over;
  if constexpr (std::is_same_v<Int, BigInt>)
    over = x > BigInt(static_cast<std::uint64_t>(bound));
  else
    over = static_cast<std::uint64_t>(x) > static_cast<std::uint64_t>(bound);
  if (over)
    throw std::out_of_range("size " + to_string(x) + " exceeds bound " + std::to_string(bound));
  if constexpr (std::is_same_v<Int, BigInt>) {
    return static_cast<std::size_t>(x.template convert_to<std::uint64_t>());
  } else {
    return static_cast<std::size_t>(x);
  }
}

template <Integer Out, Integer In>
Out convert(const In& x) {
  if constexpr (std::is_same_v<Out, In>) {
    return x;
  } else if constexpr (std::is_same_v<Out, BigInt>) {
    return BigInt(x);
  } else if constexpr (std::is_same_v<In, BigInt>) {
    if (x > BigInt(std::numeric_limits<Out>::max()) || x < BigInt(std::numeric_limits<Out>::min()))
      throw std::out_of_range("integer " + x.str() + " does not fit");
    return x.template convert_to<Out>();
  } else {
    return static_cast<Out>(x);
  }
}

}  // namespace seaweed
