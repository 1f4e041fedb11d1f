#include "enrq/lefschetz.hpp"

#include <cstdlib>
#include <stdexcept>

namespace enrq {

GradedTrace::GradedTrace(std::vector<long> dims_in, std::vector<long> traces_in)
    : dims(std::move(dims_in)), traces(std::move(traces_in)) {
  if (dims.size() != traces.size()) throw std::invalid_argument("dims/traces length mismatch");
  if (dims.empty()) throw std::invalid_argument("empty graded trace");
  for (size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0) throw std::invalid_argument("negative dimension");
    if (std::labs(traces[i]) > dims[i]) throw std::invalid_argument("|trace| exceeds dimension");
    if (((traces[i] - dims[i]) % 2) != 0) throw std::invalid_argument("trace/dimension parity mismatch");
  }
}

long GradedTrace::total_dim() const {
  long t = 0;
  for (long d : dims) t += d;
  return t;
}

std::pair<long, long> GradedTrace::even_multiplicities() const {
  long p = 0, q = 0;
  for (size_t i = 0; i < dims.size(); i += 2) {
    p += (dims[i] + traces[i]) / 2;
    q += (dims[i] - traces[i]) / 2;
  }
  return {p, q};
}

long lefschetz_number(const GradedTrace& g) {
  long acc = 0;
  for (size_t i = 0; i < g.traces.size(); ++i) acc += (i % 2 == 0) ? g.traces[i] : -g.traces[i];
  return acc;
}

GradedTrace k3_involution_trace() {
  std::vector<long> dims{1, 0, 22, 0, 1};
  // Fixed-point freeness forces 1 + t + 1 = 0 on the alternating sum.
  long t2 = -(1 + 1);
  std::vector<long> traces{1, 0, t2, 0, 1};
  return GradedTrace(std::move(dims), std::move(traces));
}

IntSeries fock_trace_series(const GradedTrace& g, int order) {
  for (size_t i = 1; i < g.dims.size(); i += 2)
    if (g.dims[i] != 0) throw std::invalid_argument("odd-degree cohomology present");
  auto [p, q] = g.even_multiplicities();
  IntSeries r = IntSeries::one(order);
  for (int m = 1; m <= order; ++m) {
    if (p != 0) r = mul(r, pow(IntSeries::one_plus_tm(m, -1, order), -p));
    if (q != 0) r = mul(r, pow(IntSeries::one_plus_tm(m, +1, order), -q));
  }
  return r;
}

Int hilb_fixed_euler(int n) {
  if (n < 0) throw std::invalid_argument("negative Hilbert scheme index");
  return fock_trace_series(k3_involution_trace(), n)[n];
}

}  // namespace enrq
