#pragma once

// Exact non-negative rationals. Always stored in lowest terms with a positive
// denominator; comparisons go through cross-multiplication in a wider type and
// never touch floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace il {

namespace detail {

template <class Int>
struct wider {
  using type = Int;
};

template <>
struct wider<std::int64_t> {
  using type = __int128;
};

template <class Int>
Int gcd_of(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    return std::gcd(a, b);
  } else {
    return boost::multiprecision::gcd(a, b);
  }
}

template <class Int>
std::string to_decimal_string(const Int& v) {
  if constexpr (std::is_integral_v<Int>) {
    return std::to_string(v);
  } else {
    return v.str();
  }
}

}  // namespace detail

template <class Int>
class basic_ratio {
 public:
  using integer = Int;
  using wide = typename detail::wider<Int>::type;

  basic_ratio() = default;

  basic_ratio(Int num, Int den = 1) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("ratio: zero denominator");
    if (num_ < 0 || den_ < 0) throw std::domain_error("ratio: negative value");
    reduce();
  }

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  bool is_zero() const { return num_ == 0; }

  friend bool operator==(const basic_ratio&, const basic_ratio&) = default;

  friend std::strong_ordering operator<=>(const basic_ratio& a, const basic_ratio& b) {
    const wide lhs = wide(a.num_) * wide(b.den_);
    const wide rhs = wide(b.num_) * wide(a.den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (rhs < lhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend basic_ratio operator+(const basic_ratio& a, const basic_ratio& b) {
    return basic_ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend basic_ratio operator*(const basic_ratio& a, const basic_ratio& b) {
    return basic_ratio(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend basic_ratio operator/(const basic_ratio& a, const basic_ratio& b) {
    if (b.num_ == 0) throw std::domain_error("ratio: division by zero");
    return basic_ratio(a.num_ * b.den_, a.den_ * b.num_);
  }

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const {
    if (den_ == 1) return detail::to_decimal_string(num_);
    return str_full();
  }

  /// Always "p/q".
  std::string str_full() const {
    return detail::to_decimal_string(num_) + "/" + detail::to_decimal_string(den_);
  }

  /// Rounded (half up) decimal rendering with a fixed number of places.
  std::string decimal(int places = 6) const {
    Int scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Int scaled = (num_ * scale * 2 + den_) / (den_ * 2);
    Int whole = scaled / scale;
    Int frac = scaled % scale;
    std::string digits = detail::to_decimal_string(frac);
    if (places == 0) return detail::to_decimal_string(whole);
    return detail::to_decimal_string(whole) + "." +
           std::string(static_cast<std::size_t>(places) - digits.size(), '0') + digits;
  }

  double to_double() const {
    if constexpr (std::is_integral_v<Int>) {
      return static_cast<double>(num_) / static_cast<double>(den_);
    } else {
      return num_.template convert_to<double>() / den_.template convert_to<double>();
    }
  }

  /// Parses "p/q" or "p".
  static basic_ratio parse(const std::string& text) {
    auto slash = text.find('/');
    auto to_int = [](const std::string& s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("ratio: bad integer '" + s + "'");
      if constexpr (std::is_integral_v<Int>) {
        return static_cast<Int>(std::stoll(s));
      } else {
        return Int(s);
      }
    };
    if (slash == std::string::npos) return basic_ratio(to_int(text));
    return basic_ratio(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  }

 private:
  void reduce() {
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Int g = detail::gcd_of(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  Int num_ = 0;
  Int den_ = 1;
};

using ratio = basic_ratio<std::int64_t>;
using big_int = boost::multiprecision::cpp_int;
using big_ratio = basic_ratio<big_int>;

/// |I| / (|I| + |N(I)|) for an independent set of the given size.
inline ratio independence_fraction(std::size_t set_size, std::size_t neighbor_count) {
  return ratio(static_cast<std::int64_t>(set_size),
               static_cast<std::int64_t>(set_size + neighbor_count));
}

}  // namespace il
