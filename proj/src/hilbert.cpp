#include "syz/hilbert.hpp"

#include "syz/field.hpp"

namespace syz {

namespace {

// coefficients of values(z) * (1-z)^t, truncated to the input length
std::vector<long long> damp(const std::vector<long long>& v, int t) {
  std::vector<long long> f = v;
  for (int round = 0; round < t; ++round)
    for (int k = (int)f.size() - 1; k >= 1; --k) f[k] -= f[k - 1];
  return f;
}

int trailing_zeros(const std::vector<long long>& f) {
  int n = 0;
  for (int k = (int)f.size() - 1; k >= 0 && f[k] == 0; --k) ++n;
  return n;
}

}  // namespace

HilbertFit fit_hilbert(const std::vector<long long>& values) {
  SYZ_CHECK(!values.empty(), "fit_hilbert: empty window");
  HilbertFit fit;
  fit.values = values;
  for (int t = 0; t < (int)values.size(); ++t) {
    std::vector<long long> f = damp(values, t);
    int tz = trailing_zeros(f);
    if (tz == 0) continue;
    fit.pole_order = t;
    f.resize(f.size() - tz);
    fit.numerator = std::move(f);
    long long at_one = 0;
    for (long long c : fit.numerator) at_one += c;
    fit.confident = tz >= t + 2 && at_one > 0;
    break;
  }
  return fit;
}

std::string HilbertFit::series_str() const {
  if (pole_order < 0) return "(no stable rational form on this window)";
  std::string num;
  if (numerator.empty()) num = "0";
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    long long c = numerator[k];
    if (c == 0) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    std::string mag =
        (std::abs(c) == 1 && k > 0) ? mono
                                    : std::to_string(std::abs(c)) +
                                          (mono.empty() ? "" : "*" + mono);
    if (num.empty())
      num = (c < 0 ? "-" : "") + mag;
    else
      num += (c < 0 ? " - " : " + ") + mag;
  }
  if (num.empty()) num = "0";
  if (pole_order == 0) return num;
  std::string den = pole_order == 1
                        ? "(1 - z)"
                        : "(1 - z)^" + std::to_string(pole_order);
  return "(" + num + ") / " + den;
}

}  // namespace syz
