#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace capelli {

using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);
Rat parse_rat(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

bool is_integer(const Rat& r);
Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);
Rat falling(const Rat& a, unsigned long n);
Rat rising(const Rat& a, unsigned long n);

}  // namespace capelli
