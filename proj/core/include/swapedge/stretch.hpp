#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

#include "swapedge/graph.hpp"

namespace swapedge {

__extension__ typedef unsigned __int128 Wide;

/// Exact nonnegative ratio path length / replacement distance.
///
/// Compared by 128-bit cross-multiplication. Both parts stay below 2^63, so
/// products never overflow.
class StretchValue {
 public:
  /// Throws std::domain_error when den == 0.
  StretchValue(Length num, Length den);

  Length num() const noexcept { return num_; }
  Length den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(static_cast<long double>(num_) / den_);
  }
  StretchValue reduced() const;
  mpq_class to_rational() const;
  /// "num/den" in lowest terms.
  std::string to_string() const;

  friend bool operator==(const StretchValue& a, const StretchValue& b) noexcept {
    return static_cast<Wide>(a.num_) * b.den_ ==
           static_cast<Wide>(b.num_) * a.den_;
  }
  friend std::strong_ordering operator<=>(const StretchValue& a,
                                          const StretchValue& b) noexcept {
    return static_cast<Wide>(a.num_) * b.den_ <=>
           static_cast<Wide>(b.num_) * a.den_;
  }

 private:
  Length num_;
  Length den_;
};

/// "num/den" in lowest terms for a GMP rational.
std::string fraction_string(const mpq_class& q);

}  // namespace swapedge
