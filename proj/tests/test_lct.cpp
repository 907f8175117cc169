#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "dprig/anticanonical.hpp"
#include "dprig/errors.hpp"
#include "dprig/lct.hpp"
#include "oracles.hpp"

using namespace dprig;

namespace {

NewtonPolyhedron poly(std::size_t dim,
                      std::vector<std::vector<std::int64_t>> support) {
  return {dim, std::move(support)};
}

}  // namespace

TEST_CASE("local catalog values") {
  CHECK(lct_local(SingularityKind::smooth) == 1);
  CHECK(lct_local(SingularityKind::node) == 1);
  CHECK(lct_local(SingularityKind::cusp) == make_rational(5, 6));
  CHECK(lct_local(SingularityKind::tacnode) == make_rational(3, 4));
  CHECK(lct_local(SingularityKind::ordinary_triple_point) ==
        make_rational(2, 3));

  CHECK(singularity_kind_for(SingularityLabel::normal_crossing) ==
        SingularityKind::node);
  CHECK(singularity_kind_for(SingularityLabel::concurrent_three) ==
        SingularityKind::ordinary_triple_point);
  CHECK(singularity_kind_for(SingularityLabel::tangential_pair) ==
        SingularityKind::tacnode);
  CHECK(singularity_kind_for(SingularityLabel::cusp) == SingularityKind::cusp);
  CHECK_THROWS_AS(singularity_kind_for(SingularityLabel::other),
                  InvalidArgumentError);
}

TEST_CASE("weighted-homogeneous thresholds") {
  CHECK(lct_weighted_homogeneous({{make_rational(1, 2), make_rational(1, 3)}}) ==
        make_rational(5, 6));
  CHECK(lct_weighted_homogeneous({{make_rational(1, 2), make_rational(1, 4)}}) ==
        make_rational(3, 4));
  CHECK(lct_weighted_homogeneous({{make_rational(1, 2), make_rational(1, 2)}}) ==
        1);
  CHECK(lct_weighted_homogeneous({{Rational(1), Rational(1), Rational(1)}}) ==
        1);

  CHECK_THROWS_AS(lct_weighted_homogeneous({{}}), InvalidArgumentError);
  CHECK_THROWS_AS(lct_weighted_homogeneous({{Rational(0)}}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(lct_weighted_homogeneous({{Rational(2)}}),
                  InvalidArgumentError);
}

TEST_CASE("diagonal thresholds on named supports") {
  CHECK(lct_newton(poly(2, {{3, 0}, {0, 3}})) == make_rational(2, 3));
  CHECK(lct_newton(poly(2, {{2, 0}, {0, 3}})) == make_rational(5, 6));
  CHECK(lct_newton(poly(2, {{2, 0}, {0, 4}})) == make_rational(3, 4));
  CHECK(lct_newton(poly(2, {{0, 2}, {2, 1}})) == make_rational(3, 4));
  CHECK(lct_newton(poly(2, {{1, 0}})) == 1);
  CHECK(lct_newton(poly(2, {{0, 0}, {5, 5}})) == 1);
  for (int n = 1; n <= 5; ++n) {
    CHECK(lct_newton(poly(1, {{6 * n}})) == make_rational(1, 6 * n));
  }
  // Extra monomials above the diagonal do not move the threshold.
  CHECK(lct_newton(poly(2, {{3, 0}, {0, 3}, {2, 2}})) == make_rational(2, 3));

  CHECK_THROWS_AS(lct_newton(poly(2, {})), InvalidArgumentError);
  CHECK_THROWS_AS(lct_newton(poly(2, {{1}})), InvalidArgumentError);
  CHECK_THROWS_AS(lct_newton(poly(2, {{-1, 2}})), InvalidArgumentError);
  CHECK_THROWS_AS(lct_newton(poly(0, {})), InvalidArgumentError);
}

TEST_CASE("diagonal threshold agrees with the weight formula on axis supports") {
  for (std::int64_t k = 1; k <= 8; ++k) {
    for (std::int64_t l = 1; l <= 8; ++l) {
      const Rational via_newton = lct_newton(poly(2, {{k, 0}, {0, l}}));
      const Rational via_weights = lct_weighted_homogeneous(
          {{make_rational(1, k), make_rational(1, l)}});
      CHECK(via_newton == via_weights);
    }
  }
  for (std::int64_t k = 1; k <= 6; ++k) {
    for (std::int64_t l = 1; l <= 6; ++l) {
      for (std::int64_t m = 1; m <= 6; ++m) {
        const Rational via_newton =
            lct_newton(poly(3, {{k, 0, 0}, {0, l, 0}, {0, 0, m}}));
        const Rational via_weights = lct_weighted_homogeneous(
            {{make_rational(1, k), make_rational(1, l), make_rational(1, m)}});
        CHECK(via_newton == via_weights);
      }
    }
  }
}

TEST_CASE("diagonal threshold agrees with the facet oracle on small supports") {
  std::size_t cases = 0;
  auto probe = [&](const NewtonPolyhedron& p) {
    const Rational mine = lct_newton(p);
    const Rational facet = oracles::newton_facet_lct(p);
    CHECK(mine == facet);
    ++cases;
  };

  // One variable: all supports of size 1..3 with exponents up to 8.
  for (std::int64_t a = 0; a <= 8; ++a) {
    probe(poly(1, {{a}}));
    for (std::int64_t b = a + 1; b <= 8; ++b) {
      probe(poly(1, {{a}, {b}}));
      for (std::int64_t c = b + 1; c <= 8; ++c) {
        probe(poly(1, {{a}, {b}, {c}}));
      }
    }
  }

  // Two variables: all singletons and pairs with exponents up to 8, all
  // triples with exponents up to 5.
  std::vector<std::vector<std::int64_t>> grid2;
  for (std::int64_t a = 0; a <= 8; ++a) {
    for (std::int64_t b = 0; b <= 8; ++b) {
      grid2.push_back({a, b});
    }
  }
  for (std::size_t i = 0; i < grid2.size(); ++i) {
    probe(poly(2, {grid2[i]}));
    for (std::size_t j = i + 1; j < grid2.size(); ++j) {
      probe(poly(2, {grid2[i], grid2[j]}));
    }
  }
  std::vector<std::vector<std::int64_t>> grid2small;
  for (std::int64_t a = 0; a <= 5; ++a) {
    for (std::int64_t b = 0; b <= 5; ++b) {
      grid2small.push_back({a, b});
    }
  }
  for (std::size_t i = 0; i < grid2small.size(); ++i) {
    for (std::size_t j = i + 1; j < grid2small.size(); ++j) {
      for (std::size_t k = j + 1; k < grid2small.size(); ++k) {
        probe(poly(2, {grid2small[i], grid2small[j], grid2small[k]}));
      }
    }
  }

  // Three variables: singletons and pairs with exponents up to 4, triples
  // with exponents up to 2.
  std::vector<std::vector<std::int64_t>> grid3;
  for (std::int64_t a = 0; a <= 4; ++a) {
    for (std::int64_t b = 0; b <= 4; ++b) {
      for (std::int64_t c = 0; c <= 4; ++c) {
        grid3.push_back({a, b, c});
      }
    }
  }
  for (std::size_t i = 0; i < grid3.size(); ++i) {
    probe(poly(3, {grid3[i]}));
    for (std::size_t j = i + 1; j < grid3.size(); ++j) {
      probe(poly(3, {grid3[i], grid3[j]}));
    }
  }
  std::vector<std::vector<std::int64_t>> grid3small;
  for (std::int64_t a = 0; a <= 2; ++a) {
    for (std::int64_t b = 0; b <= 2; ++b) {
      for (std::int64_t c = 0; c <= 2; ++c) {
        grid3small.push_back({a, b, c});
      }
    }
  }
  for (std::size_t i = 0; i < grid3small.size(); ++i) {
    for (std::size_t j = i + 1; j < grid3small.size(); ++j) {
      for (std::size_t k = j + 1; k < grid3small.size(); ++k) {
        probe(poly(3, {grid3small[i], grid3small[j], grid3small[k]}));
      }
    }
  }

  CHECK(cases > 20000);
}

TEST_CASE("threshold combination rule") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(kuwata_combine(make_rational(2, 3), make_rational(1, 6 * n)) ==
          make_rational(4 * n + 1, 6 * n));
    CHECK(kuwata_combine(make_rational(5, 6), make_rational(1, 6 * n)) ==
          (n == 1 ? Rational(1) : make_rational(5 * n + 1, 6 * n)));
    CHECK(kuwata_combine(make_rational(3, 4), make_rational(1, 12 * n)) ==
          make_rational(9 * n + 1, 12 * n));
  }
  CHECK(kuwata_combine(1, 1) == 1);
  CHECK(kuwata_combine(make_rational(5, 6), make_rational(1, 6)) == 1);

  CHECK_THROWS_AS(kuwata_combine(0, make_rational(1, 2)),
                  InvalidArgumentError);
  CHECK_THROWS_AS(kuwata_combine(make_rational(1, 2), make_rational(7, 6)),
                  InvalidArgumentError);

  std::mt19937 rng(777);
  std::uniform_int_distribution<int> num(1, 24);
  std::uniform_int_distribution<int> den(24, 48);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = make_rational(num(rng), den(rng));
    const Rational b = make_rational(num(rng), den(rng));
    const Rational c = make_rational(num(rng), den(rng));
    CHECK(kuwata_combine(a, b) == kuwata_combine(b, a));
    CHECK(kuwata_combine(a, b) <= 1);
    CHECK(kuwata_combine(a, b) > 0);
    if (b <= c) {
      CHECK(kuwata_combine(a, b) <= kuwata_combine(a, c));
    }
  }
}

TEST_CASE("global threshold bounds by degree") {
  CHECK(global_lct_bound(1) == make_rational(5, 6));
  CHECK(global_lct_bound(2) == make_rational(3, 4));
  CHECK(global_lct_bound(3) == make_rational(2, 3));
  CHECK(global_lct_bound(4) == make_rational(2, 3));
  CHECK(global_lct_bound(5) == make_rational(1, 2));
  CHECK(global_lct_bound(6) == make_rational(1, 2));
  CHECK(global_lct_bound(7) == make_rational(1, 3));
  CHECK(global_lct_bound(8) == make_rational(1, 3));
  CHECK(global_lct_bound(8, LatticeVariant::quadric) == make_rational(1, 2));
  CHECK(global_lct_bound(9) == make_rational(1, 3));
  CHECK_THROWS_AS(global_lct_bound(0), InvalidArgumentError);
  CHECK_THROWS_AS(global_lct_bound(5, LatticeVariant::quadric),
                  InvalidArgumentError);
}

TEST_CASE("global bound is the worst local threshold in the catalog") {
  for (int d = 1; d <= 4; ++d) {
    Rational worst = 1;
    for (const auto& entry : classify_degenerations(d)) {
      worst = rational_min(worst, lct_local(singularity_kind_for(entry.label)));
    }
    CHECK(worst == global_lct_bound(d));
  }
}

TEST_CASE("total threshold condition") {
  CHECK(total_lct_condition(make_rational(2, 3), make_rational(2, 3)));
  CHECK_FALSE(total_lct_condition(make_rational(1, 2), make_rational(1, 2)));
  CHECK_FALSE(total_lct_condition(make_rational(5, 6), make_rational(1, 6)));
  CHECK(total_lct_condition(1, make_rational(1, 12)));
  CHECK_THROWS_AS(total_lct_condition(0, 1), InvalidArgumentError);
  CHECK_THROWS_AS(total_lct_condition(make_rational(1, 2), make_rational(3, 2)),
                  InvalidArgumentError);
}

TEST_CASE("rigidity certificates at the named points") {
  const auto rigid = rigidity_certificate(make_rational(2, 3),
                                          make_rational(2, 3));
  CHECK(rigid.rigid);
  CHECK_FALSE(rigid.witness.has_value());

  const auto loose = rigidity_certificate(make_rational(1, 2),
                                          make_rational(1, 2));
  CHECK_FALSE(loose.rigid);
  REQUIRE(loose.witness.has_value());
  const RigidityLedger& ledger = *loose.witness;
  CHECK(ledger.verify());
  // Both discrepancy inequalities are tight at this boundary point.
  CHECK(ledger.a - 1 - ledger.tau_x * ledger.e == -1);
  CHECK(ledger.n - 1 - ledger.tau_y * ledger.l == -1);

  CHECK(rigidity_certificate(1, make_rational(1, 6)).rigid);
}

TEST_CASE("ledger audit rejects broken books") {
  RigidityLedger good;
  good.a = make_rational(1, 2);
  good.n = make_rational(1, 2);
  good.l = 1;
  good.e = 1;
  good.tau_x = make_rational(1, 2);
  good.tau_y = make_rational(1, 2);
  CHECK(good.verify());

  RigidityLedger bad = good;
  bad.b = 2;
  CHECK_FALSE(bad.verify());
  bad = good;
  bad.l = 0;
  bad.e = 0;
  bad.a = 0;
  bad.n = 0;
  CHECK_FALSE(bad.verify());
  bad = good;
  bad.n = 1;  // a + n no longer equals l
  CHECK_FALSE(bad.verify());
  bad = good;
  bad.tau_x = make_rational(2, 3);  // discrepancy inequality now fails
  CHECK_FALSE(bad.verify());
}

TEST_CASE("rigidity and the total threshold condition coincide on a grid") {
  std::set<Rational> grid;
  for (int q = 1; q <= 12; ++q) {
    for (int p = 1; p <= q; ++p) {
      grid.insert(make_rational(p, q));
    }
  }
  CHECK(grid.size() == 46);
  std::size_t rigid_count = 0;
  for (const Rational& tx : grid) {
    for (const Rational& ty : grid) {
      const auto certificate = rigidity_certificate(tx, ty);
      CHECK(certificate.rigid == total_lct_condition(tx, ty));
      if (certificate.rigid) {
        ++rigid_count;
        CHECK_FALSE(certificate.witness.has_value());
      } else {
        REQUIRE(certificate.witness.has_value());
        CHECK(certificate.witness->verify());
        CHECK(certificate.witness->tau_x == tx);
        CHECK(certificate.witness->tau_y == ty);
      }
    }
  }
  CHECK(rigid_count > 0);
  CHECK(rigid_count < 46 * 46);
}
