#pragma once

#include "orglab/organization.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orglab {

/// Arbitrary-precision nonnegative integer. Trajectories climb far past 64 bits.
using NumValue = mpz_class;

/// Base-3 place value with digits Zombie=0, Confused=2, Motivated=4, head first.
/// The result is always even.
NumValue decode(const OrgState &org);

/// The unique normalized organization whose value is n. encode(0) is the empty
/// organization. Throws InvalidInput for odd n.
OrgState encode(const NumValue &n);

/// Strict decimal parsing: digits only, no sign, no whitespace.
NumValue parse_decimal(std::string_view text);
std::string to_decimal(const NumValue &n);

/// Alternate text form: the digits 0/2/4 of the organization, head first.
std::string to_digit_string(const OrgState &org);
OrgState parse_digit_string(std::string_view digits);

inline bool is_even(const NumValue &n) { return mpz_even_p(n.get_mpz_t()) != 0; }

} // namespace orglab
