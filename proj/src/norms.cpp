#include "littlewood/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace littlewood {

namespace {

constexpr std::uint64_t kOracleGuard = 100000;

std::uint32_t next_pow2(std::uint32_t n) {
  std::uint32_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// Flat-index odometer over a box of the given per-axis extents.
struct FlatWalker {
  std::vector<std::uint32_t> extents;
  std::vector<std::uint64_t> strides;  // strides of the underlying array
  std::vector<std::uint32_t> j;
  std::uint64_t flat = 0;

  bool advance() {
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (++j[k] < extents[k]) {
        flat += strides[k];
        return true;
      }
      flat -= static_cast<std::uint64_t>(j[k] - 1) * strides[k];
      j[k] = 0;
    }
    return false;
  }
};

double l4p4_oracle(const CoefficientArray& a) {
  const std::uint64_t n = a.size();
  if (n > kOracleGuard) throw std::invalid_argument("oracle method size guard exceeded");
  const auto& sizes = a.box().sizes;
  const auto strides = a.box().strides();
  const std::uint32_t e = a.dim();
  std::vector<std::int32_t> dec(n * e);
  {
    std::vector<std::uint32_t> j(e, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint32_t k = 0; k < e; ++k) dec[i * e + k] = static_cast<std::int32_t>(j[k]);
      for (std::uint32_t k = 0; k < e; ++k) {
        if (++j[k] < sizes[k]) break;
        j[k] = 0;
      }
    }
  }
  if (a.is_exact()) {
    const auto& v = a.exact_values();
    __int128 total = 0;
    for (std::uint64_t ia = 0; ia < n; ++ia) {
      if (v[ia] == 0) continue;
      for (std::uint64_t ib = 0; ib < n; ++ib) {
        if (v[ib] == 0) continue;
        const int ab = v[ia] * v[ib];
        for (std::uint64_t ic = 0; ic < n; ++ic) {
          if (v[ic] == 0) continue;
          std::uint64_t id = 0;
          bool ok = true;
          for (std::uint32_t k = 0; k < e; ++k) {
            const std::int32_t dk = dec[ia * e + k] + dec[ib * e + k] - dec[ic * e + k];
            if (dk < 0 || dk >= static_cast<std::int32_t>(sizes[k])) {
              ok = false;
              break;
            }
            id += static_cast<std::uint64_t>(dk) * strides[k];
          }
          if (ok) total += ab * v[ic] * v[id];
        }
      }
    }
    return static_cast<double>(static_cast<long long>(total));
  }
  std::complex<double> total{0.0, 0.0};
  for (std::uint64_t ia = 0; ia < n; ++ia) {
    for (std::uint64_t ib = 0; ib < n; ++ib) {
      const auto ab = a.value(ia) * a.value(ib);
      for (std::uint64_t ic = 0; ic < n; ++ic) {
        std::uint64_t id = 0;
        bool ok = true;
        for (std::uint32_t k = 0; k < e; ++k) {
          const std::int32_t dk = dec[ia * e + k] + dec[ib * e + k] - dec[ic * e + k];
          if (dk < 0 || dk >= static_cast<std::int32_t>(sizes[k])) {
            ok = false;
            break;
          }
          id += static_cast<std::uint64_t>(dk) * strides[k];
        }
        if (ok) total += ab * std::conj(a.value(ic) * a.value(id));
      }
    }
  }
  return total.real();
}

double l4p4_autocorrelation(const CoefficientArray& a) {
  const std::uint32_t e = a.dim();
  const auto& sizes = a.box().sizes;
  std::vector<long long> u(e);
  for (std::uint32_t k = 0; k < e; ++k) u[k] = -static_cast<long long>(sizes[k]) + 1;
  const bool exact = a.is_exact();
  __int128 itotal = 0;
  double dtotal = 0.0;
  for (;;) {
    const auto c = autocorrelation(a, u);
    if (exact) {
      const long long ci = static_cast<long long>(std::llround(c.real()));
      itotal += static_cast<__int128>(ci) * ci;
    } else {
      dtotal += std::norm(c);
    }
    std::uint32_t k = 0;
    for (; k < e; ++k) {
      if (++u[k] < static_cast<long long>(sizes[k])) break;
      u[k] = -static_cast<long long>(sizes[k]) + 1;
    }
    if (k == e) break;
  }
  return exact ? static_cast<double>(static_cast<long long>(itotal)) : dtotal;
}

void fft_axis(std::vector<std::complex<double>>& buf, std::uint32_t m, std::uint64_t stride,
              std::uint64_t block, std::vector<std::complex<double>>& line) {
  const std::uint64_t total = buf.size();
  line.resize(m);
  for (std::uint64_t outer = 0; outer < total / block; ++outer) {
    for (std::uint64_t inner = 0; inner < stride; ++inner) {
      const std::uint64_t base = outer * block + inner;
      for (std::uint32_t i = 0; i < m; ++i) line[i] = buf[base + i * stride];
      fft(line);
      for (std::uint32_t i = 0; i < m; ++i) buf[base + i * stride] = line[i];
    }
  }
}

std::vector<std::complex<double>> sampled_grid(const CoefficientArray& a,
                                               std::vector<std::uint32_t>& grid_sizes) {
  const std::uint32_t e = a.dim();
  const auto& sizes = a.box().sizes;
  grid_sizes.resize(e);
  std::uint64_t total = 1;
  for (std::uint32_t k = 0; k < e; ++k) {
    grid_sizes[k] = next_pow2(2 * sizes[k] - 1);
    total *= grid_sizes[k];
  }
  std::vector<std::complex<double>> buf(total, {0.0, 0.0});
  std::vector<std::uint64_t> gstrides(e);
  std::uint64_t acc = 1;
  for (std::uint32_t k = 0; k < e; ++k) {
    gstrides[k] = acc;
    acc *= grid_sizes[k];
  }
  FlatWalker w{sizes, gstrides, std::vector<std::uint32_t>(e, 0), 0};
  std::uint64_t i = 0;
  do {
    buf[w.flat] = a.value(i++);
  } while (w.advance());
  std::vector<std::complex<double>> line;
  std::uint64_t stride = 1;
  for (std::uint32_t k = 0; k < e; ++k) {
    fft_axis(buf, grid_sizes[k], stride, stride * grid_sizes[k], line);
    stride *= grid_sizes[k];
  }
  return buf;
}

double l4p4_sampled_dft(const CoefficientArray& a) {
  std::vector<std::uint32_t> grid_sizes;
  const auto buf = sampled_grid(a, grid_sizes);
  double total = 0.0;
  for (const auto& v : buf) {
    const double m2 = std::norm(v);
    total += m2 * m2;
  }
  return total / static_cast<double>(buf.size());
}

}  // namespace

const char* norm_method_name(NormMethod m) {
  switch (m) {
    case NormMethod::oracle: return "oracle";
    case NormMethod::autocorrelation: return "autocorrelation";
    case NormMethod::sampled_dft: return "sampled-dft";
  }
  throw std::logic_error("unknown method");
}

NormMethod norm_method_from_name(const std::string& name) {
  if (name == "oracle") return NormMethod::oracle;
  if (name == "autocorrelation") return NormMethod::autocorrelation;
  if (name == "sampled-dft") return NormMethod::sampled_dft;
  throw std::invalid_argument("unknown norm method: " + name);
}

double l2_sq(const CoefficientArray& a) {
  if (a.is_exact()) {
    std::uint64_t nz = 0;
    for (auto v : a.exact_values()) nz += (v != 0);
    return static_cast<double>(nz);
  }
  double total = 0.0;
  for (const auto& v : a.complex_values()) total += std::norm(v);
  return total;
}

std::complex<double> autocorrelation(const CoefficientArray& a,
                                     const std::vector<long long>& u) {
  const std::uint32_t e = a.dim();
  if (u.size() != e) throw std::invalid_argument("shift dimension mismatch");
  const auto& sizes = a.box().sizes;
  const auto strides = a.box().strides();
  std::vector<std::uint32_t> extents(e);
  std::uint64_t base = 0;
  std::int64_t du = 0;
  for (std::uint32_t k = 0; k < e; ++k) {
    const long long lo = std::max<long long>(0, -u[k]);
    const long long hi = std::min<long long>(sizes[k], static_cast<long long>(sizes[k]) - u[k]);
    if (hi <= lo) return {0.0, 0.0};
    extents[k] = static_cast<std::uint32_t>(hi - lo);
    base += static_cast<std::uint64_t>(lo) * strides[k];
    du += u[k] * static_cast<std::int64_t>(strides[k]);
  }
  FlatWalker w{extents, strides, std::vector<std::uint32_t>(e, 0), base};
  if (a.is_exact()) {
    const auto& v = a.exact_values();
    std::int64_t total = 0;
    do {
      total += static_cast<std::int64_t>(v[w.flat + du]) * v[w.flat];
    } while (w.advance());
    return {static_cast<double>(total), 0.0};
  }
  std::complex<double> total{0.0, 0.0};
  do {
    total += a.value(w.flat + du) * std::conj(a.value(w.flat));
  } while (w.advance());
  return total;
}

void fft(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w{1.0, 0.0};
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto even = a[i + k];
        const auto odd = a[i + k + len / 2] * w;
        a[i + k] = even + odd;
        a[i + k + len / 2] = even - odd;
        w *= wlen;
      }
    }
  }
}

double l4p4(const CoefficientArray& a, NormMethod method) {
  switch (method) {
    case NormMethod::oracle: return l4p4_oracle(a);
    case NormMethod::autocorrelation: return l4p4_autocorrelation(a);
    case NormMethod::sampled_dft: return l4p4_sampled_dft(a);
  }
  throw std::logic_error("unknown method");
}

NormMethod default_method(const CoefficientArray& a) {
  return a.size() <= 4096 ? NormMethod::autocorrelation : NormMethod::sampled_dft;
}

NormReport norm_report(const CoefficientArray& a) { return norm_report(a, default_method(a)); }

NormReport norm_report(const CoefficientArray& a, NormMethod method) {
  NormReport r;
  r.method = method;
  r.l2sq = l2_sq(a);
  r.l4p4 = l4p4(a, method);
  r.ratio4 = r.l2sq > 0.0 ? r.l4p4 / (r.l2sq * r.l2sq) : std::nan("");
  const double denom = r.l4p4 - r.l2sq * r.l2sq;
  if (denom > 0.0) r.merit_factor = r.l2sq * r.l2sq / denom;
  return r;
}

double grid_mean_sq(const CoefficientArray& a) {
  std::vector<std::uint32_t> grid_sizes;
  const auto buf = sampled_grid(a, grid_sizes);
  double total = 0.0;
  for (const auto& v : buf) total += std::norm(v);
  return total / static_cast<double>(buf.size());
}

}  // namespace littlewood
