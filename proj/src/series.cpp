#include "enrq/series.hpp"

#include <stdexcept>

namespace enrq {

IntSeries IntSeries::one_plus_tm(int m, long c, int order) {
  if (m < 1) throw std::invalid_argument("exponent m must be >= 1");
  IntSeries s(order);
  s[0] = 1;
  if (m <= order) s[m] = c;
  return s;
}

IntSeries mul(const IntSeries& a, const IntSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("truncation order mismatch");
  const int n = a.order();
  IntSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

IntSeries inverse(const IntSeries& a) {
  if (a[0] != 1 && a[0] != -1)
    throw std::invalid_argument("inversion requires constant term +1 or -1");
  const int n = a.order();
  IntSeries b(n);
  b[0] = a[0];  // 1/(+-1) = +-1
  for (int k = 1; k <= n; ++k) {
    Int acc(0);
    for (int j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -a[0] * acc;  // division by a[0] is multiplication for +-1
  }
  return b;
}

IntSeries pow(const IntSeries& a, long k) {
  if (k < 0) return pow(inverse(a), -k);
  IntSeries r = IntSeries::one(a.order());
  IntSeries base = a;
  unsigned long e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1UL) r = mul(r, base);
    e >>= 1UL;
    if (e > 0) base = mul(base, base);
  }
  return r;
}

IntSeries eta_product(const std::vector<std::pair<int, long>>& factors, int order) {
  IntSeries r = IntSeries::one(order);
  for (const auto& [m, e] : factors) {
    if (m < 1) throw std::invalid_argument("eta factor requires m >= 1");
    if (m > order || e == 0) continue;
    r = mul(r, pow(IntSeries::one_plus_tm(m, -1, order), e));
  }
  return r;
}

IntSeries goettsche_product(long e, int order) {
  std::vector<std::pair<int, long>> factors;
  factors.reserve(static_cast<size_t>(order));
  for (int m = 1; m <= order; ++m) factors.emplace_back(m, -e);
  return eta_product(factors, order);
}

IntSeries goettsche_recurrence(long e, int order) {
  // log prod (1-t^m)^{-e} = e * sum_n sigma(n)/n t^n, so the coefficients
  // satisfy n a_n = sum_{k=1}^{n} e sigma(k) a_{n-k}.
  std::vector<Int> sigma(static_cast<size_t>(order) + 1, Int(0));
  for (int d = 1; d <= order; ++d)
    for (int m = d; m <= order; m += d) sigma[static_cast<size_t>(m)] += d;

  IntSeries a(order);
  a[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Int acc(0);
    for (int k = 1; k <= n; ++k) acc += sigma[static_cast<size_t>(k)] * a[n - k];
    acc *= e;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), Int(n).get_mpz_t());
    if (r != 0) throw std::logic_error("non-integral coefficient in divisor-sum recurrence");
    a[n] = q;
  }
  return a;
}

IntSeries goettsche(long e, int order) {
  IntSeries direct = goettsche_product(e, order);
  IntSeries recur = goettsche_recurrence(e, order);
  if (!(direct == recur))
    throw std::logic_error("Goettsche series algorithms disagree");
  return direct;
}

}  // namespace enrq
