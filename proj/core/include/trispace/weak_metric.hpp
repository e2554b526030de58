#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trispace {

// An asymmetric distance evaluator over opaque points. The evaluator is
// expected to satisfy the triangle inequality and separation on its
// declared domain; symmetry is not assumed.
template <class P>
struct WeakMetric {
  std::function<double(const P&, const P&)> eval;
  std::string domain_tag;

  double operator()(const P& x, const P& y) const { return eval(x, y); }
};

template <class P>
WeakMetric<P> symmetrize_arith(WeakMetric<P> d) {
  auto base = d.eval;
  return {[base](const P& x, const P& y) {
            return 0.5 * (base(x, y) + base(y, x));
          },
          d.domain_tag + "/arith"};
}

template <class P>
WeakMetric<P> symmetrize_max(WeakMetric<P> d) {
  auto base = d.eval;
  return {[base](const P& x, const P& y) {
            return std::max(base(x, y), base(y, x));
          },
          d.domain_tag + "/max"};
}

// Finite-window Cauchy evidence for a sampled sequence. forward_defect[m]
// is max d(x_i, x_j) over N <= i <= j < len with N = first_n + m, so both
// defect traces are non-increasing by construction. Everything here is
// numerical evidence on the sampled window, not a statement about
// infinite tails.
struct SequenceDiagnostics {
  std::size_t first_n = 0;  // smallest N the traces cover
  std::vector<double> forward_defect;
  std::vector<double> backward_defect;
  std::vector<double> symmetry_gap;  // |d(x_i,x_{i+1}) - d(x_{i+1},x_i)|

  double last_forward_defect() const { return forward_defect.back(); }
  double last_backward_defect() const { return backward_defect.back(); }

  bool numerically_forward_cauchy(double tol) const {
    return last_forward_defect() < tol;
  }
  bool numerically_backward_cauchy(double tol) const {
    return last_backward_defect() < tol;
  }
};

// Defect traces for N ranging over [0, len - window]: every reported N
// keeps at least `window` trailing terms in play, so the last defect is
// never the vacuous single-point maximum.
template <class P>
SequenceDiagnostics cauchy_diagnose(const WeakMetric<P>& d,
                                    std::span<const P> seq, int window) {
  if (window < 2) {
    throw std::invalid_argument("cauchy_diagnose: window must be >= 2");
  }
  const std::size_t len = seq.size();
  if (len < static_cast<std::size_t>(window)) {
    throw std::invalid_argument(
        "cauchy_diagnose: sequence shorter than window");
  }

  const std::size_t n_max = len - static_cast<std::size_t>(window);
  std::vector<double> row_fwd(len, 0.0), row_bwd(len, 0.0);
  for (std::size_t i = 0; i < len; ++i) {
    double f = 0.0, b = 0.0;
    for (std::size_t j = i; j < len; ++j) {
      f = std::max(f, d(seq[i], seq[j]));
      b = std::max(b, d(seq[j], seq[i]));
    }
    row_fwd[i] = f;
    row_bwd[i] = b;
  }

  SequenceDiagnostics out;
  out.first_n = 0;
  out.forward_defect.resize(n_max + 1);
  out.backward_defect.resize(n_max + 1);
  // suffix maxima of the per-row maxima
  double f = 0.0, b = 0.0;
  for (std::size_t i = len; i-- > 0;) {
    f = std::max(f, row_fwd[i]);
    b = std::max(b, row_bwd[i]);
    if (i <= n_max) {
      out.forward_defect[i] = f;
      out.backward_defect[i] = b;
    }
  }
  out.symmetry_gap.reserve(len - 1);
  for (std::size_t i = 0; i + 1 < len; ++i) {
    out.symmetry_gap.push_back(
        std::abs(d(seq[i], seq[i + 1]) - d(seq[i + 1], seq[i])));
  }
  return out;
}

struct ProbeOptions {
  double forward_tol = 1e-6;
  double reverse_threshold = 1e-2;
};

struct ProbeReport {
  std::vector<double> forward_trace;
  std::vector<double> reverse_trace;
  // true when the forward trace has entered (and stays in) the tolerance
  // band while every reverse value on that tail stays above the threshold
  bool violation = false;
};

// Watches d(q_n, p_n) along caller-constructed pairs with d(p_n, q_n)
// decreasing to zero. A persistent reverse gap is evidence against the
// convergence-symmetry of d, never a proof.
template <class P>
ProbeReport convergence_symmetry_probe(const WeakMetric<P>& d,
                                       std::span<const std::pair<P, P>> pairs,
                                       ProbeOptions opt = {}) {
  ProbeReport rep;
  rep.forward_trace.reserve(pairs.size());
  rep.reverse_trace.reserve(pairs.size());
  for (const auto& [p, q] : pairs) {
    rep.forward_trace.push_back(d(p, q));
    rep.reverse_trace.push_back(d(q, p));
  }
  std::size_t tail = pairs.size();
  while (tail > 0 && rep.forward_trace[tail - 1] < opt.forward_tol) --tail;
  if (tail < pairs.size()) {
    rep.violation = true;
    for (std::size_t i = tail; i < pairs.size(); ++i) {
      if (rep.reverse_trace[i] <= opt.reverse_threshold) {
        rep.violation = false;
        break;
      }
    }
  }
  return rep;
}

}  // namespace trispace
