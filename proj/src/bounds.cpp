#include "kalliance/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace kalliance {

namespace {

const Rational kGuard(1, 10'000'000);

BoundEntry entry(std::string name, BoundValue value, std::string formula, std::string hypothesis = {},
                 bool applicable = true) {
  return BoundEntry{std::move(name), value, applicable, false, std::move(formula), std::move(hypothesis)};
}

}  // namespace

const BoundEntry& BoundReport::at(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no bound named '" + std::string(name) + "'");
}

std::int64_t BoundReport::integer(std::string_view name) const { return std::get<std::int64_t>(at(name).value); }

Rational BoundReport::rational(std::string_view name) const { return std::get<Rational>(at(name).value); }

bool BoundReport::flag(std::string_view name) const { return std::get<bool>(at(name).value); }

BoundReport bounds_defensive(int n, int m, int min_degree, int k) {
  BoundReport report;
  report.inputs = {.n = n, .m = m, .min_degree = min_degree, .k = k};
  const std::int64_t base = static_cast<std::int64_t>(min_degree) + k + 2;
  const bool usable = base > 0;

  report.entries.push_back(entry("a_lower", usable ? ceil_div(base, 2) : std::int64_t{0},
                                 "a_k >= ceil((delta + k + 2) / 2)", {}, usable));

  std::int64_t psi = 0;
  if (usable) {
    // Parity makes ceil((delta+k+2)/2) equal to (delta+k+2)/2 or (delta+k+3)/2.
    const std::int64_t denom = (base % 2 == 0) ? base : base + 1;
    psi = floor_div(2 * static_cast<std::int64_t>(n), denom);
  }
  report.entries.push_back(entry("psi_upper", psi, "psi_k <= floor(2n / (delta + k + 2 + [delta + k odd]))", {}, usable));
  return report;
}

std::int64_t psi_upper_from_a(int n, std::int64_t a) {
  if (a <= 0) throw std::invalid_argument("alliance size must be positive");
  return n / a;
}

std::int64_t psi_gd_sqrt(std::int64_t n, std::int64_t k) {
  std::int64_t rho = 0;
  while ((rho + 1) * (rho + 1 + k) <= n) ++rho;
  return rho;
}

BoundReport bounds_global(int n, int min_degree, int max_degree, int k) {
  BoundReport report;
  report.inputs = {.n = n, .min_degree = min_degree, .max_degree = max_degree, .k = k};
  const std::int64_t per_vertex = floor_div(static_cast<std::int64_t>(max_degree) - k, 2) + 1;
  const bool usable = per_vertex > 0;

  report.entries.push_back(entry("gamma_lower", usable ? ceil_div(n, per_vertex) : std::int64_t{0},
                                 "gamma_k >= ceil(n / (floor((Delta - k) / 2) + 1))", {}, usable));
  report.entries.push_back(entry("psi_gd_coarse", per_vertex, "psi_gd_k <= floor((Delta - k) / 2) + 1", {}, usable));
  report.entries.push_back(entry("psi_gd_sqrt", psi_gd_sqrt(n, k), "psi_gd_k <= floor((sqrt(k^2 + 4n) - k) / 2)",
                                 "partitionable into global defensive k-alliances"));
  report.entries.push_back(entry("psi_gd_degree", floor_div(static_cast<std::int64_t>(min_degree) - k + 2, 2),
                                 "psi_gd_k <= floor((delta - k + 2) / 2)",
                                 "partitionable into global defensive k-alliances"));
  report.entries.push_back(entry("gamma_plus_psi", Rational(n + 4, 2), "gamma_k + psi_gd_k <= (n + 4) / 2",
                                 "k >= 1 - delta, psi_gd_k >= 2, gamma_k >= 2", k >= 1 - min_degree));
  return report;
}

BoundReport bounds_cut(int n, int m, int min_degree, int k, int r, std::optional<std::int64_t> gamma_kd) {
  if (r < 2) throw std::invalid_argument("cut bounds need r >= 2");
  BoundReport report;
  report.inputs = {.n = n, .m = m, .min_degree = min_degree, .k = k, .r = r, .gamma_kd = gamma_kd};
  const std::int64_t pairs = static_cast<std::int64_t>(r) * (r - 1);
  const std::int64_t nk = static_cast<std::int64_t>(n) * k;
  const std::string partitioned = "partition into r global defensive k-alliances";

  report.entries.push_back(entry("cut_lower_1", gamma_kd ? Rational(pairs * *gamma_kd, 2) : Rational(0),
                                 "C >= r(r-1) gamma_k / 2", partitioned, gamma_kd.has_value()));
  report.entries.push_back(entry("cut_lower_2", Rational(pairs * (r + k), 2), "C >= r(r-1)(r+k) / 2", partitioned));
  report.entries.push_back(entry("cut_upper", Rational(2 * static_cast<std::int64_t>(m) - nk, 4), "C <= (2m - nk) / 4",
                                 partitioned));
  report.entries.push_back(entry("equal_card_r_max",
                                 Rational(2 * (static_cast<std::int64_t>(m) + n) - nk, 2 * static_cast<std::int64_t>(n)),
                                 "r <= (2(m + n) - kn) / (2n)", "partition into r global defensive k-alliances of equal size"));

  const Rational first(2 * static_cast<std::int64_t>(m) - pairs * (min_degree + 2), n + pairs);
  const Rational second(2 * (static_cast<std::int64_t>(m) - static_cast<std::int64_t>(r) * pairs), n + 2 * pairs);
  const bool blocked = Rational(k) > first || Rational(k) > second;
  report.entries.push_back(entry("nonpartitionable", blocked,
                                 "k > (2m - r(r-1)(delta+2)) / (n + r(r-1)) or k > 2(m - r^2(r-1)) / (n + 2r(r-1))"));

  report.entries.push_back(entry("induced_size_lower",
                                 gamma_kd ? Rational(*gamma_kd * (r + k - 1), 2) : Rational(0),
                                 "|E(<V_i>)| >= gamma_k (r + k - 1) / 2", partitioned, gamma_kd.has_value()));
  return report;
}

Rational rational_mu(double mu) {
  return Rational(static_cast<std::int64_t>(std::llround(mu * 1e9)), 1'000'000'000);
}

GuardedInt guarded_floor(const Rational& x) {
  const auto plain = floor(x);
  return {plain, floor(x + kGuard) != plain};
}

GuardedInt guarded_ceil(const Rational& x) {
  const auto plain = ceil(x);
  return {plain, ceil(x - kGuard) != plain};
}

BoundReport bounds_spectral(int n, int m, int min_degree, int max_degree, int k, const Rational& iso, double mu) {
  BoundReport report;
  report.inputs = {.n = n, .m = m, .min_degree = min_degree, .max_degree = max_degree, .k = k, .mu = mu, .iso = iso};
  const std::int64_t nk = static_cast<std::int64_t>(n) * k;
  const std::int64_t two_m = 2 * static_cast<std::int64_t>(m);
  const Rational mu_q = rational_mu(mu);

  report.entries.push_back(entry("iso_upper_if_partitionable", Rational(two_m - nk, 2 * static_cast<std::int64_t>(n)),
                                 "i <= (2m - nk) / (2n)",
                                 "partition into r >= 2 global defensive k-alliances with blocks of size <= n/2"));
  report.entries.push_back(entry("psi_gd_iso", Rational(max_degree + 1 - k) - iso, "psi_gd_k <= Delta + 1 - i - k",
                                 "partitionable into global defensive k-alliances"));
  report.entries.push_back(entry("a_iso_lower", iso + Rational(k + 1), "a_k >= i + k + 1",
                                 "partitionable into defensive k-alliances"));

  auto guarded = [&](std::string name, GuardedInt g, std::string formula, std::string hypothesis) {
    BoundEntry e = entry(std::move(name), g.value, std::move(formula), std::move(hypothesis));
    e.marginal = g.marginal;
    report.entries.push_back(std::move(e));
  };
  guarded("psi_gd_mu", guarded_floor(Rational(max_degree + 1 - k) - mu_q / 2), "psi_gd_k <= floor(Delta + 1 - mu/2 - k)",
          "partitionable into global defensive k-alliances");
  guarded("a_mu_lower", guarded_ceil((mu_q + Rational(2 * (k + 1))) / 2), "a_k >= ceil((mu + 2(k + 1)) / 2)",
          "partitionable into defensive k-alliances");

  const GuardedInt bw = (n % 2 == 0)
                            ? guarded_ceil(mu_q * Rational(n, 4))
                            : guarded_ceil(mu_q * Rational(static_cast<std::int64_t>(n) * n - 1, 4 * static_cast<std::int64_t>(n)));
  guarded("bw_lower", bw, n % 2 == 0 ? "bw >= ceil(n mu / 4)" : "bw >= ceil((n^2 - 1) mu / (4n))", {});

  const std::int64_t cut_cap = floor_div(two_m - nk, 4);
  BoundEntry nobis = entry("nobisection", cut_cap < bw.value, "floor((2m - nk) / 4) < bw_lower");
  nobis.marginal = bw.marginal;
  report.entries.push_back(std::move(nobis));

  const Rational limit(2 * (static_cast<std::int64_t>(max_degree) - 1 - k));
  BoundEntry mu_block = entry("mu_nonpartitionable", mu_q > limit, "mu > 2(Delta - 1 - k)");
  mu_block.marginal = boost::abs(mu_q - limit) < kGuard;
  report.entries.push_back(std::move(mu_block));
  return report;
}

std::string to_string(const BoundValue& v) {
  if (auto i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (auto q = std::get_if<Rational>(&v)) return to_string(*q);
  return std::get<bool>(v) ? "true" : "false";
}

}  // namespace kalliance
