#pragma once
// Rational-function fit for a Hilbert series known on a finite window:
// multiply the truncated series by (1-z)^t for growing t until the tail
// dies, i.e. until the t-th finite difference is eventually zero. The fit is
// only trusted (confident) when the tail shows enough zeros and the
// numerator evaluates positively at 1; everything else is reported as-is
// with confident=false.

#include <string>
#include <vector>

namespace syz {

struct HilbertFit {
  std::vector<long long> values;     // input, degrees 0..D
  int pole_order = -1;               // -1: never stabilized within the window
  std::vector<long long> numerator;  // (1-z)^pole_order * H, trailing zeros cut
  bool confident = false;

  std::string series_str() const;  // e.g. "(1 + z) / (1 - z)"
};

HilbertFit fit_hilbert(const std::vector<long long>& values);

}  // namespace syz
