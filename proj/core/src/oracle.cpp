#include "symquartic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace symquartic {
namespace {

constexpr std::size_t kSeeds = 32;
constexpr int kFaces = 6;

// Plain-double copy of (a, b, c); Rational -> double conversion is too slow
// for the inner loop.
struct Quartic {
  double a, b, c;

  double operator()(double x, double y, double z) const {
    const double x2 = x * x, y2 = y * y, z2 = z * z;
    const double w4 = x2 * x2 + y2 * y2 + z2 * z2;
    const double w3 = x * y * (x2 + y2) + y * z * (y2 + z2) + z * x * (z2 + x2);
    const double w2 = x2 * y2 + y2 * z2 + z2 * x2;
    const double w1 = x * y * z * (x + y + z);
    return w4 + a * w3 + b * w2 + c * w1;
  }
};

// A chart maps (u, v) in [0, 1]^2 to a point of the slice.
struct Chart {
  Domain domain;
  int face;

  std::array<double, 3> operator()(double u, double v) const {
    if (domain == Domain::NonnegativeOrthant) {
      const double s = std::sqrt(u);
      return {1.0 - s, s * (1.0 - v), s * v};
    }
    std::array<double, 3> p{};
    const int axis = face / 2;
    p[static_cast<std::size_t>(axis)] = face % 2 == 0 ? 1.0 : -1.0;
    p[static_cast<std::size_t>((axis + 1) % 3)] = 2.0 * u - 1.0;
    p[static_cast<std::size_t>((axis + 2) % 3)] = 2.0 * v - 1.0;
    return p;
  }
};

struct Sample {
  double value;
  int chart;
  double u, v;
};

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

Sample descend(const Quartic& f, const Chart& chart, Sample s, double step) {
  auto at = [&](double u, double v) {
    const auto p = chart(u, v);
    return f(p[0], p[1], p[2]);
  };
  static constexpr double kDirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (int iter = 0; iter < 400 && step > 1e-13; ++iter) {
    bool moved = false;
    for (const auto& d : kDirs) {
      const double u = clamp01(s.u + step * d[0]);
      const double v = clamp01(s.v + step * d[1]);
      const double value = at(u, v);
      if (value < s.value) {
        s = {value, s.chart, u, v};
        moved = true;
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
  return s;
}

}  // namespace

std::string_view to_string(Hint hint) { return hint == Hint::LikelyHolds ? "likely-holds" : "likely-fails"; }

double tolerance(const QuarticForm& form) {
  return 1e-9 * (1.0 + std::fabs(to_double(form.a)) + std::fabs(to_double(form.b)) + std::fabs(to_double(form.c)));
}

OracleReport numeric_min(const QuarticForm& form, const OracleOptions& options) {
  if (options.budget == 0) throw std::invalid_argument("numeric_min: budget must be at least 1");
  const Quartic f{to_double(form.a), to_double(form.b), to_double(form.c)};
  const bool real = form.domain == Domain::Reals;

  std::vector<Chart> charts;
  if (real) {
    for (int face = 0; face < kFaces; ++face) charts.push_back({form.domain, face});
  } else {
    charts.push_back({form.domain, 0});
  }

  // Stratified jitter: an m x m grid of cells per chart, one point per cell,
  // with the remainder of the budget spread as extra uniform points.
  const std::size_t per_chart = std::max<std::size_t>(1, options.budget / charts.size());
  const auto m = static_cast<std::size_t>(std::sqrt(static_cast<double>(per_chart)));
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Sample> samples;
  samples.reserve(options.budget);
  for (std::size_t ci = 0; ci < charts.size(); ++ci) {
    const std::size_t here = ci + 1 == charts.size() ? options.budget - samples.size() : per_chart;
    for (std::size_t k = 0; k < here; ++k) {
      double u, v;
      if (m > 0 && k < m * m) {
        u = (static_cast<double>(k % m) + unit(rng)) / static_cast<double>(m);
        v = (static_cast<double>(k / m) + unit(rng)) / static_cast<double>(m);
      } else {
        u = unit(rng);
        v = unit(rng);
      }
      const auto p = charts[ci](u, v);
      samples.push_back({f(p[0], p[1], p[2]), static_cast<int>(ci), u, v});
    }
  }

  const std::size_t seeds = std::min(kSeeds, samples.size());
  std::partial_sort(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(seeds), samples.end(),
                    [](const Sample& l, const Sample& r) { return l.value < r.value; });
  const double step = 1.0 / static_cast<double>(std::max<std::size_t>(m, 1));
  Sample best = samples.front();
  for (std::size_t i = 0; i < seeds; ++i) {
    const Sample s = descend(f, charts[static_cast<std::size_t>(samples[i].chart)], samples[i], step);
    if (s.value < best.value) best = s;
  }

  OracleReport report;
  auto p = charts[static_cast<std::size_t>(best.chart)](best.u, best.v);
  // f is even, so on the reals the sign is free; pick the one that makes the
  // largest coordinate positive.
  const auto largest = std::max_element(p.begin(), p.end(), [](double l, double r) { return std::fabs(l) < std::fabs(r); });
  const double scale = *largest;
  for (double& x : p) x /= scale;
  report.argmin = p;
  report.min_estimate = f(p[0], p[1], p[2]);
  report.samples = samples.size();
  report.hint = report.min_estimate < -tolerance(form) ? Hint::LikelyFails : Hint::LikelyHolds;
  return report;
}

std::optional<std::array<Rational, 3>> find_counterexample(const QuarticForm& form, const OracleOptions& options) {
  const OracleReport report = numeric_min(form, options);
  if (report.min_estimate >= 0.0) return std::nullopt;
  Integer den = 1;
  for (int digits = 0; digits <= 6; ++digits, den *= 10) {
    std::array<Rational, 3> point;
    for (std::size_t i = 0; i < 3; ++i) point[i] = rationalize(report.argmin[i], den);
    if (form.domain == Domain::NonnegativeOrthant &&
        std::any_of(point.begin(), point.end(), [](const Rational& x) { return sgn(x) < 0; })) {
      continue;
    }
    if (sgn(eval(form, point[0], point[1], point[2])) < 0) return point;
  }
  return std::nullopt;
}

}  // namespace symquartic
