#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace aw {

// All lattice arithmetic is exact 64-bit integer arithmetic. The only
// non-integer quantity in the library is the base-alcove interior point,
// which is carried as an integer numerator vector over a fixed denominator.
using Int = long long;
using Vec = std::vector<Int>;

enum class Errc {
  InvalidArgument,
  ParseError,
  RankMismatch,
  NotFiniteType,
  DualityMismatch,
  NotDominant,
  NonIntegral,
  CapExceeded,
  AmbiguousChamber,
  PreconditionViolated,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void check(bool ok, Errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

// Floor division for b > 0 (C++ '/' truncates toward zero).
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  Int r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

inline Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::RankMismatch, "pairing of vectors of different rank");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::RankMismatch, "adding vectors of different rank");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::RankMismatch, "subtracting vectors of different rank");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec vec_scaled(const Vec& a, Int c) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool vec_is_zero(const Vec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

inline int sign_of(Int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Square integer matrix, row-major. Used for the finite Weyl action on
// cocharacter coordinates and its contragredient on character coordinates.
struct Mat {
  int n = 0;
  std::vector<Int> a;  // n*n entries

  static Mat identity(int n) {
    Mat m;
    m.n = n;
    m.a.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m.a[static_cast<std::size_t>(i) * n + i] = 1;
    return m;
  }

  Int at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }

  Vec apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != n) fail(Errc::RankMismatch, "matrix/vector rank mismatch");
    Vec r(v.size(), 0);
    for (int i = 0; i < n; ++i) {
      Int s = 0;
      for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  Mat mul(const Mat& o) const {
    Mat r;
    r.n = n;
    r.a.assign(a.size(), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        Int x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  Mat transposed() const {
    Mat r;
    r.n = n;
    r.a.assign(a.size(), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
};

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::string vec_to_string(const Vec& v);   // "3,1,0"
Vec parse_int_vector(const std::string& s);

}  // namespace aw
