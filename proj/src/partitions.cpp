#include "capelli/partitions.hpp"

#include <charconv>

#include "capelli/error.hpp"

namespace capelli {

Pair2 Pair2::make(int a, int b) {
  require(valid(a, b), "invalid partition (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return Pair2{a, b};
}

Pair2 Pair2::parse(const std::string& text) {
  auto comma = text.find(',');
  auto bad = [&] { fail(ErrorCode::InvalidArgument, "malformed partition '" + text + "', expected a,b"); };
  if (comma == std::string::npos) bad();
  auto num = [&](const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) bad();
    return v;
  };
  int a = num(text.substr(0, comma)), b = num(text.substr(comma + 1));
  if (!valid(a, b)) bad();
  return Pair2{a, b};
}

std::string Pair2::str() const { return "(" + std::to_string(l1) + "," + std::to_string(l2) + ")"; }

const char* cls_name(Cls c) {
  switch (c) {
    case Cls::Regular: return "regular";
    case Cls::Quasiregular: return "quasiregular";
    case Cls::Singular: return "singular";
  }
  return "?";
}

Cls classify(const Pair2& l, int k) {
  int d = l.diff();
  if (d >= k + 2 && d <= 2 * k + 2) return Cls::Singular;
  if (l.l1 >= k + 1 && d <= k) return Cls::Quasiregular;
  return Cls::Regular;
}

std::optional<Pair2> dagger(const Pair2& l, int k) {
  int a = l.l2 + k + 1, b = l.l1 - k - 1;
  if (!Pair2::valid(a, b)) return std::nullopt;
  return Pair2{a, b};
}

UniPoly h_poly(const Pair2& l) {
  Rat scale = Rat(factorial(l.diff()) * factorial(l.l2));
  // (l1-1-kappa)(l1-2-kappa)...(l1-l2-kappa)
  UniPoly r(scale);
  for (int i = 0; i < l.l2; ++i) r *= UniPoly::linear(-1, l.l1 - 1 - i);
  return r;
}

Rat c_super(const Pair2& l, int k) {
  int d = l.l2 - l.l1;
  return Rat(d) * (2 * k + 2 + d);
}

Rat c_cat(const Pair2& l, const Rat& t) { return Rat(l.diff()) * (l.diff() + t - 2); }

UniPoly c_cat_poly(const Pair2& l) {
  int a = l.diff();
  return UniPoly::linear(a, Rat(a) * (a - 2));
}

int ell(const Pair2& l, int k) {
  require(classify(l, k) == Cls::Quasiregular,
          l.str() + " is not " + std::to_string(k) + "-quasiregular");
  return l.l2 - l.l1 + k;
}

Pair2 nu(const Pair2& l, const Pair2& m, int k) {
  int e = ell(l, k);
  require(m.size() <= k - e, "shift " + m.str() + " is outside the admissible range");
  int a = l.l1 - m.l1, b = l.l2 + m.l2;
  require(Pair2::valid(a, b), "shifted pair (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") is not a partition");
  return Pair2{a, b};
}

std::vector<Pair2> enumerate(int d, Filter f, int k) {
  require(d >= 0, "negative size");
  std::vector<Pair2> out;
  int lo = f == Filter::All ? 0 : d;
  for (int n = lo; n <= d; ++n) {
    for (int l1 = (n + 1) / 2; l1 <= n; ++l1) {
      Pair2 p{l1, n - l1};
      if (f == Filter::NonSingular && classify(p, k) == Cls::Singular) continue;
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace capelli
