#include "capelli/rat.hpp"

#include "capelli/error.hpp"

namespace capelli {

Rat make_rat(long num, long den) {
  require(den != 0, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto bad = [&] { fail(ErrorCode::InvalidArgument, "malformed rational '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) bad();
  if (num[0] == '+') num = num.substr(1);
  Int n(num), d(den);
  if (d == 0) bad();
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat falling(const Rat& a, unsigned long n) {
  Rat r = 1;
  for (unsigned long i = 0; i < n; ++i) r *= a - i;
  return r;
}

Rat rising(const Rat& a, unsigned long n) {
  Rat r = 1;
  for (unsigned long i = 0; i < n; ++i) r *= a + i;
  return r;
}

}  // namespace capelli
