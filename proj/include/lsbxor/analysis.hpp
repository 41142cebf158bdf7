#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "lsbxor/error.hpp"
#include "lsbxor/image.hpp"

namespace lsbxor {

struct Histogram {
  std::array<std::uint64_t, 256> counts{};

  std::uint64_t total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  }

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

struct DiffReport {
  Histogram histogram_a;
  Histogram histogram_b;
  std::array<std::int64_t, 256> per_bin_delta{};  // b - a
  std::uint64_t changed_pixels = 0;
  int max_abs_pixel_delta = 0;
  double psnr = std::numeric_limits<double>::infinity();  // +inf when identical

  std::uint64_t histogram_l1() const noexcept {
    std::uint64_t l1 = 0;
    for (auto d : per_bin_delta) l1 += static_cast<std::uint64_t>(std::llabs(d));
    return l1;
  }
};

inline Histogram histogram(const GrayImage& img) {
  Histogram h;
  for (auto p : img.pixels()) ++h.counts[p];
  return h;
}

// PSNR uses peak 255 over the mean squared pixel error.
inline DiffReport compare(const GrayImage& a, const GrayImage& b) {
  if (!a.same_shape(b)) {
    throw Error(Errc::shape_mismatch, std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                                          " vs " + std::to_string(b.width()) + "x" +
                                          std::to_string(b.height()));
  }
  DiffReport r;
  r.histogram_a = histogram(a);
  r.histogram_b = histogram(b);
  for (std::size_t v = 0; v < 256; ++v) {
    r.per_bin_delta[v] =
        static_cast<std::int64_t>(r.histogram_b.counts[v]) - static_cast<std::int64_t>(r.histogram_a.counts[v]);
  }

  double sq_err = 0.0;
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const int d = int{pb[i]} - int{pa[i]};
    if (d != 0) ++r.changed_pixels;
    r.max_abs_pixel_delta = std::max(r.max_abs_pixel_delta, std::abs(d));
    sq_err += double(d) * double(d);
  }
  if (r.changed_pixels != 0) {
    const double mse = sq_err / static_cast<double>(pa.size());
    r.psnr = 10.0 * std::log10(255.0 * 255.0 / mse);
  }
  return r;
}

// grey_value,count_key,count_stego,delta then 256 rows, then the
// changed_pixels and psnr_db summary rows.
inline std::string to_csv(const DiffReport& r) {
  std::string out = "grey_value,count_key,count_stego,delta\n";
  for (std::size_t v = 0; v < 256; ++v) {
    out += std::to_string(v) + "," + std::to_string(r.histogram_a.counts[v]) + "," +
           std::to_string(r.histogram_b.counts[v]) + "," + std::to_string(r.per_bin_delta[v]) + "\n";
  }
  out += "changed_pixels," + std::to_string(r.changed_pixels) + "\n";
  if (std::isinf(r.psnr)) {
    out += "psnr_db,inf\n";
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.psnr);
    out += std::string("psnr_db,") + buf + "\n";
  }
  return out;
}

}  // namespace lsbxor
