#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kalliance/rational.hpp"

namespace kalliance {

using BoundValue = std::variant<std::int64_t, Rational, bool>;

/// One closed-form quantity. `hypothesis` names what must be established
/// before the bound may be asserted; empty means unconditional.
struct BoundEntry {
  std::string name;
  BoundValue value;
  bool applicable = true;
  /// Set when a floating input (mu) lands within the guard band of a
  /// floor/ceil step, so the integer value cannot be trusted.
  bool marginal = false;
  std::string formula;
  std::string hypothesis;
};

struct BoundInputs {
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  int k = 0;
  std::optional<int> r;
  std::optional<double> mu;
  std::optional<Rational> iso;
  std::optional<std::int64_t> gamma_kd;
};

struct BoundReport {
  BoundInputs inputs;
  std::vector<BoundEntry> entries;

  /// Throws std::out_of_range for unknown names.
  const BoundEntry& at(std::string_view name) const;
  std::int64_t integer(std::string_view name) const;
  Rational rational(std::string_view name) const;
  bool flag(std::string_view name) const;
};

/// Lower bound on alliance size and the induced upper bounds on the partition number.
BoundReport bounds_defensive(int n, int m, int min_degree, int k);

/// floor(n / a): disjoint blocks of size at least a.
std::int64_t psi_upper_from_a(int n, std::int64_t a);

BoundReport bounds_global(int n, int min_degree, int max_degree, int k);

/// Largest rho >= 0 with rho * (rho + k) <= n.
std::int64_t psi_gd_sqrt(std::int64_t n, std::int64_t k);

BoundReport bounds_cut(int n, int m, int min_degree, int k, int r, std::optional<std::int64_t> gamma_kd = std::nullopt);

/// Bounds driven by the isoperimetric number (exact) and algebraic connectivity.
BoundReport bounds_spectral(int n, int m, int min_degree, int max_degree, int k, const Rational& iso, double mu);

/// mu rounded to 9 decimals as an exact fraction.
Rational rational_mu(double mu);

struct GuardedInt {
  std::int64_t value = 0;
  bool marginal = false;
};

/// floor/ceil with a 1e-7 guard band in the lenient direction.
GuardedInt guarded_floor(const Rational& x);
GuardedInt guarded_ceil(const Rational& x);

std::string to_string(const BoundValue& v);

}  // namespace kalliance
