// Fixed-width bit-vector values.
#pragma once

#include <cstdint>
#include <string>

namespace wrapterm {

using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr unsigned kMaxWidth = 128;

constexpr u128 width_mask(unsigned width) {
  return width >= 128 ? ~u128{0} : ((u128{1} << width) - 1);
}

constexpr u128 truncate(u128 v, unsigned width) { return v & width_mask(width); }

/// Two's complement reading of the low `width` bits.
constexpr i128 to_signed(u128 v, unsigned width) {
  v = truncate(v, width);
  if (width == 0) return 0;
  if (width < 128 && ((v >> (width - 1)) & 1)) return static_cast<i128>(v) - (i128{1} << width);
  return static_cast<i128>(v);
}

constexpr u128 from_signed(i128 v, unsigned width) { return truncate(static_cast<u128>(v), width); }

constexpr i128 signed_min(unsigned width) { return -(i128{1} << (width - 1)); }
constexpr i128 signed_max(unsigned width) { return (i128{1} << (width - 1)) - 1; }

/// Exact integer value of a program variable of the given width/signedness.
constexpr i128 as_integer(u128 v, unsigned width, bool is_signed) {
  return is_signed ? to_signed(v, width) : static_cast<i128>(truncate(v, width));
}

/// Smallest w such that every value in [lo, hi] is representable as w-bit signed.
unsigned signed_bits_for(i128 lo, i128 hi);

std::string int_to_string(i128 v);
std::string uint_to_string(u128 v);

}  // namespace wrapterm
