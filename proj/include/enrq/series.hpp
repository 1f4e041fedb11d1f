#pragma once

#include <utility>
#include <vector>

#include "enrq/num.hpp"

namespace enrq {

// Truncated power series with exact integer coefficients; coeffs[k] is the
// coefficient of t^k and the truncation order is coeffs.size() - 1.
struct IntSeries {
  std::vector<Int> coeffs;

  explicit IntSeries(int order) : coeffs(static_cast<size_t>(order) + 1, Int(0)) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
  }
  explicit IntSeries(std::vector<Int> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  }

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const Int& operator[](int k) const { return coeffs[static_cast<size_t>(k)]; }
  Int& operator[](int k) { return coeffs[static_cast<size_t>(k)]; }
  bool operator==(const IntSeries& o) const { return coeffs == o.coeffs; }

  static IntSeries one(int order) {
    IntSeries s(order);
    s[0] = 1;
    return s;
  }
  // 1 + c * t^m, truncated.
  static IntSeries one_plus_tm(int m, long c, int order);
};

IntSeries mul(const IntSeries& a, const IntSeries& b);
// Requires unit constant term (+1 or -1).
IntSeries inverse(const IntSeries& a);
IntSeries pow(const IntSeries& a, long k);

// prod_{(m, e) in factors} (1 - t^m)^e, truncated.
IntSeries eta_product(const std::vector<std::pair<int, long>>& factors, int order);

// Goettsche series prod_{m>=1} (1 - t^m)^{-e} by two independent algorithms;
// goettsche() runs both and throws std::logic_error on disagreement.
IntSeries goettsche_product(long e, int order);
IntSeries goettsche_recurrence(long e, int order);
IntSeries goettsche(long e, int order);

}  // namespace enrq
