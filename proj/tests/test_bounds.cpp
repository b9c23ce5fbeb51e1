#include <cmath>

#include "doctest.h"
#include "kalliance/bounds.hpp"

using namespace kalliance;

TEST_CASE("defensive bounds") {
  // K4 x C4: n=16, m=40, delta=5
  auto r = bounds_defensive(16, 40, 5, -1);
  CHECK(r.integer("psi_upper") == 5);
  CHECK(r.integer("a_lower") == 3);

  // K2 x C4: n=8, m=12, delta=3
  CHECK(bounds_defensive(8, 12, 3, 1).integer("psi_upper") == 2);

  // family_h(r, k): delta = 2r + k - 2, a = r + k
  for (auto [rr, k] : std::vector<std::pair<int, int>>{{3, -1}, {3, 0}, {3, 1}, {4, -1}, {5, 2}}) {
    const int delta = 2 * rr + k - 2;
    const auto b = bounds_defensive(rr * (rr + k), rr * (rr + k) * delta / 2, delta, k);
    CHECK(b.integer("a_lower") == rr + k);
  }

  const auto dead = bounds_defensive(5, 4, 1, -3);
  CHECK_FALSE(dead.at("a_lower").applicable);
  CHECK_FALSE(dead.at("psi_upper").applicable);

  CHECK(psi_upper_from_a(10, 3) == 3);
  CHECK_THROWS(psi_upper_from_a(10, 0));
  CHECK_THROWS_AS(r.at("nope"), std::out_of_range);
}

TEST_CASE("integer floors agree with rational floors") {
  for (int n = 1; n <= 30; ++n) {
    for (int delta = 0; delta < n; ++delta) {
      for (int k = -delta - 3; k <= delta + 1; ++k) {
        const int base = delta + k + 2;
        if (base <= 0) continue;
        const auto r = bounds_defensive(n, 0, delta, k);
        CHECK(r.integer("a_lower") == ceil(Rational(base, 2)));
        const int denom = (delta + k) % 2 == 0 ? base : base + 1;
        CHECK(r.integer("psi_upper") == floor(Rational(2 * n, denom)));

        const auto g = bounds_global(n, delta, delta, k);
        if (g.at("gamma_lower").applicable) {
          const Rational per = Rational(floor(Rational(delta - k, 2)) + 1);
          CHECK(g.integer("gamma_lower") == ceil(Rational(n) / per));
        }
        CHECK(g.integer("psi_gd_degree") == floor(Rational(delta - k + 2, 2)));
      }
    }
  }
}

TEST_CASE("sqrt bound loop equals the closed form") {
  for (std::int64_t n = 1; n <= 10'000; ++n) {
    for (std::int64_t k = -50; k <= 50; ++k) {
      const std::int64_t d = k * k + 4 * n;
      auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(d)));
      while (s * s > d) --s;
      while ((s + 1) * (s + 1) <= d) ++s;
      // floor((sqrt(d) - k) / 2) == floor((isqrt(d) - k) / 2) for integer k
      const std::int64_t expected = std::max<std::int64_t>(0, floor_div(s - k, 2));
      if (psi_gd_sqrt(n, k) != expected) {
        FAIL("n=" << n << " k=" << k);
      }
    }
  }
}

TEST_CASE("global bounds") {
  // K4 x C4: n=16, delta=Delta=5
  const auto r = bounds_global(16, 5, 5, -1);
  CHECK(r.integer("psi_gd_sqrt") == 4);
  CHECK(r.integer("psi_gd_degree") == 4);
  CHECK(r.integer("psi_gd_coarse") == 4);

  // C4 x K2 = Q3
  const auto q = bounds_global(8, 3, 3, -1);
  CHECK(q.rational("gamma_plus_psi") == Rational(6));
  CHECK(q.at("gamma_plus_psi").applicable);
  CHECK_FALSE(bounds_global(8, 3, 3, -3).at("gamma_plus_psi").applicable);
  CHECK_FALSE(q.at("gamma_plus_psi").hypothesis.empty());

  for (auto [rr, k] : std::vector<std::pair<int, int>>{{3, -1}, {3, 0}, {3, 1}, {4, -1}, {4, 2}}) {
    const int delta = 2 * rr + k - 2;
    CHECK(bounds_global(rr * (rr + k), delta, delta, k).integer("gamma_lower") == rr + k);
  }
  CHECK_FALSE(bounds_global(5, 1, 1, 4).at("gamma_lower").applicable);
}

TEST_CASE("cut bounds") {
  // family_h(3, 0) = K3 x K3: n=9, m=18, delta=4
  const auto h = bounds_cut(9, 18, 4, 0, 3, 3);
  CHECK(h.rational("cut_lower_2") == Rational(9));
  CHECK(h.rational("cut_upper") == Rational(9));
  CHECK(h.rational("cut_lower_1") == Rational(9));
  CHECK(h.rational("induced_size_lower") == Rational(3));

  CHECK_FALSE(bounds_cut(9, 18, 4, 0, 3).at("cut_lower_1").applicable);
  CHECK(bounds_cut(8, 8, 2, 2, 2).rational("cut_upper") == Rational(0));
  CHECK(bounds_cut(8, 12, 3, 1, 2).rational("equal_card_r_max") == Rational(32, 16));
  CHECK_THROWS(bounds_cut(8, 12, 3, 0, 1));
}

TEST_CASE("cube cannot split into three global alliances for k >= 0") {
  for (int k = -3; k <= 3; ++k) {
    CAPTURE(k);
    CHECK(bounds_cut(8, 12, 3, k, 3).flag("nonpartitionable") == (k >= 0));
  }
}

TEST_CASE("spectral bounds on C3 x C3") {
  // n=9, m=18, delta=Delta=4, i=2, mu=3
  const auto k0 = bounds_spectral(9, 18, 4, 4, 0, Rational(2), 3.0);
  CHECK(k0.integer("psi_gd_mu") == 3);
  CHECK(k0.integer("a_mu_lower") == 3);
  CHECK(k0.rational("psi_gd_iso") == Rational(3));
  CHECK(k0.rational("a_iso_lower") == Rational(3));
  CHECK(k0.integer("bw_lower") == 7);
  CHECK_FALSE(k0.flag("nobisection"));
  CHECK_FALSE(k0.flag("mu_nonpartitionable"));

  const auto k1 = bounds_spectral(9, 18, 4, 4, 1, Rational(2), 3.0);
  CHECK(k1.flag("nobisection"));
  CHECK(k1.rational("iso_upper_if_partitionable") == Rational(3, 2));
  CHECK_FALSE(k1.flag("mu_nonpartitionable"));
  CHECK(bounds_spectral(9, 18, 4, 4, 2, Rational(2), 3.0).flag("mu_nonpartitionable"));

  for (int k = 1; k <= 4; ++k) {
    CHECK(bounds_spectral(9, 18, 4, 4, k, Rational(2), 3.0).rational("iso_upper_if_partitionable") < Rational(2));
  }
}

TEST_CASE("mu rounding and guard band") {
  CHECK(rational_mu(3.0) == Rational(3));
  CHECK(rational_mu(0.5857864376269049) == Rational(585786438, 1'000'000'000));

  CHECK(guarded_floor(Rational(3)).value == 3);
  CHECK_FALSE(guarded_floor(Rational(3)).marginal);
  CHECK(guarded_floor(Rational(5, 2)).value == 2);
  CHECK_FALSE(guarded_floor(Rational(5, 2)).marginal);
  const auto near = guarded_floor(Rational(2'999'999'999, 1'000'000'000));
  CHECK(near.value == 2);
  CHECK(near.marginal);

  CHECK(guarded_ceil(Rational(3)).value == 3);
  CHECK_FALSE(guarded_ceil(Rational(3)).marginal);
  const auto above = guarded_ceil(Rational(3'000'000'001, 1'000'000'000));
  CHECK(above.value == 4);
  CHECK(above.marginal);
  CHECK(guarded_ceil(Rational(-5, 2)).value == -2);

  // C4: mu = 2 exactly, then just above the floor/ceil step
  const auto exact = bounds_spectral(4, 4, 2, 2, 0, Rational(1), 2.0);
  CHECK(exact.integer("psi_gd_mu") == 2);
  CHECK_FALSE(exact.at("psi_gd_mu").marginal);
  CHECK(exact.integer("a_mu_lower") == 2);
  CHECK_FALSE(exact.at("a_mu_lower").marginal);
  const auto step = bounds_spectral(4, 4, 2, 2, 0, Rational(1), 2.000000001);
  CHECK(step.integer("psi_gd_mu") == 1);
  CHECK(step.at("psi_gd_mu").marginal);
  CHECK(step.integer("a_mu_lower") == 3);
  CHECK(step.at("a_mu_lower").marginal);
}

TEST_CASE("to_string of bound values") {
  CHECK(to_string(BoundValue{std::int64_t{5}}) == "5");
  CHECK(to_string(BoundValue{Rational(4, 2)}) == "2/1");
  CHECK(to_string(BoundValue{true}) == "true");
}
