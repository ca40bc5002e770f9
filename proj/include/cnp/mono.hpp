#ifndef CNP_MONO_HPP
#define CNP_MONO_HPP

#include <array>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace cnp {

// Hard cap on the number of indeterminates of one polynomial ring.
inline constexpr int kMaxVars = 16;

// Exponent vector. Unused slots stay zero, so comparisons never need the
// ring size. Entries may be negative when used as a Laurent exponent.
struct Mono {
  std::array<int16_t, kMaxVars> e{};

  int deg() const {
    int s = 0;
    for (int i = 0; i < kMaxVars; ++i) s += e[i];
    return s;
  }
  int16_t& operator[](int i) { return e[i]; }
  int16_t operator[](int i) const { return e[i]; }

  bool is_one() const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) return false;
    return true;
  }
  bool nonneg() const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] < 0) return false;
    return true;
  }

  friend Mono operator+(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = int16_t(a.e[i] + b.e[i]);
    return r;
  }
  friend Mono operator-(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = int16_t(a.e[i] - b.e[i]);
    return r;
  }
  Mono scaled(int k) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = int16_t(e[i] * k);
    return r;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return a.e != b.e; }

  // true if b divides a (componentwise a >= b)
  bool divisible_by(const Mono& b) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] < b.e[i]) return false;
    return true;
  }

  static Mono var(int i, int k = 1) {
    Mono m;
    m.e[i] = int16_t(k);
    return m;
  }
  static Mono min(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    return r;
  }
  static Mono max(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }
  // positive and negative parts
  Mono pos() const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] > 0 ? e[i] : 0;
    return r;
  }
  Mono neg() const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] < 0 ? int16_t(-e[i]) : 0;
    return r;
  }
};

// Graded lexicographic order: total degree first, then lexicographic with
// variable 0 most significant. Polynomials keep terms in decreasing order.
inline int grlex_cmp(const Mono& a, const Mono& b) {
  int da = a.deg(), db = b.deg();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}
inline bool grlex_greater(const Mono& a, const Mono& b) { return grlex_cmp(a, b) > 0; }

// plain lexicographic order, used for Laurent term iteration
inline bool lex_less(const Mono& a, const Mono& b) { return a.e < b.e; }

struct MonoHash {
  size_t operator()(const Mono& m) const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= uint16_t(m.e[i]);
      h *= 1099511628211ull;
    }
    return size_t(h ^ (h >> 29));
  }
};

// Ordered list of indeterminate names, shared between values of one ring.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(const std::vector<std::string>& names);
bool same_vars(const VarList& a, const VarList& b);
int var_index(const VarList& v, const std::string& name);  // -1 if absent

}  // namespace cnp

#endif
