#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "ribbon/catalog.hpp"
#include "ribbon/geodesic.hpp"
#include "ribbon/sandpile.hpp"
#include "ribbon/torsor.hpp"

using namespace ribbon;

namespace {

std::vector<std::int64_t> factors(const RibbonGraph& g) {
  std::vector<std::int64_t> out;
  for (const auto& f : group_structure(g).invariant_factors) out.push_back(static_cast<std::int64_t>(f));
  return out;
}

}  // namespace

TEST_SUITE("laplacian") {
  TEST_CASE("examples") {
    CHECK(laplacian(builtin_graph("P2")) == IntMatrix{{1, -1}, {-1, 1}});
    const auto b3 = fixtures::b3_planar();
    CHECK(laplacian(b3) == IntMatrix{{3, -3}, {-3, 3}});
    CHECK(reduced_laplacian(b3, b3.vertex("b")) == IntMatrix{{3}});
    CHECK(laplacian(builtin_graph("C3")) == IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  }

  TEST_CASE("rows and columns sum to zero") {
    for (const auto& name : builtin_names()) {
      const auto l = laplacian(builtin_graph(name));
      for (std::size_t i = 0; i < l.size(); ++i) {
        std::int64_t row = 0;
        std::int64_t col = 0;
        for (std::size_t j = 0; j < l.size(); ++j) {
          row += l[i][j];
          col += l[j][i];
        }
        CHECK(row == 0);
        CHECK(col == 0);
      }
    }
  }
}

TEST_SUITE("group structure") {
  TEST_CASE("bananas are cyclic") {
    for (int n = 2; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(factors(builtin_graph("B" + std::to_string(n))) == std::vector<std::int64_t>{n});
    }
  }

  TEST_CASE("small cases") {
    CHECK(factors(builtin_graph("P2")).empty());
    CHECK(group_structure(builtin_graph("P2")).order == 1);
    CHECK(factors(builtin_graph("K4")) == std::vector<std::int64_t>{4, 4});
    CHECK(group_structure(builtin_graph("K4")).order == 16);
    CHECK(factors(builtin_graph("K5")) == std::vector<std::int64_t>{5, 5, 5});
  }

  TEST_CASE("order is the tree count and factors form a divisibility chain") {
    for (const auto& name : builtin_names()) {
      CAPTURE(name);
      const auto g = builtin_graph(name);
      const auto group = group_structure(g);
      CHECK(group.order == BigInt(oracle::spanning_trees(oracle::from(g)).size()));
      for (std::size_t i = 1; i < group.invariant_factors.size(); ++i) {
        CHECK(group.invariant_factors[i] % group.invariant_factors[i - 1] == 0);
      }
      for (const auto& f : group.invariant_factors) CHECK(f > 1);
    }
  }

  TEST_CASE("smith form of a hand-made matrix") {
    const auto s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(s.diagonal == std::vector<BigInt>{2, 6, 12});
    CHECK(determinant(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == -144);
  }
}

TEST_SUITE("divisor equivalence") {
  TEST_CASE("banana examples") {
    const auto g = fixtures::b3_planar();
    const Divisor zero(2);
    const auto ab = Divisor::difference(2, g.vertex("a"), g.vertex("b"));
    CHECK(divisors_equivalent(g, zero, zero));
    CHECK(divisors_equivalent(g, ab, ab));
    CHECK_FALSE(divisors_equivalent(g, ab, zero));
    CHECK(divisors_equivalent(g, ab * 3, zero));
    CHECK_THROWS_AS(divisors_equivalent(g, Divisor(std::vector<std::int64_t>{1, 0}), zero), Error);
  }

  TEST_CASE("laplacian columns are equivalent to zero") {
    for (const auto& name : {"K4", "theta", "B5"}) {
      const auto g = builtin_graph(name);
      for (VertexId w = 0; w < g.num_vertices(); ++w) {
        CHECK(divisors_equivalent(g, laplacian_image(g, w), Divisor(g.num_vertices())));
      }
    }
  }

  TEST_CASE("both library oracles agree with the rational solver") {
    for (const auto& name : {"B3", "C3", "K4"}) {
      const auto g = builtin_graph(name);
      const TorsorAction action(g, Execution::Serial);
      const auto plain = oracle::from(g);
      const int n = g.num_vertices();
      std::vector<std::int64_t> c(n, -2);
      while (true) {
        std::int64_t degree = 0;
        for (auto x : c) degree += x;
        if (degree == 0) {
          const Divisor d(c);
          const Divisor zero(n);
          const bool snf = divisors_equivalent(g, d, zero);
          CHECK(snf == oracle::equivalent_to_zero(plain, c));
          for (VertexId r = 0; r < n; ++r) CHECK(snf == divisors_equivalent_by_action(action, d, zero, r, r % action.trees().size()));
        }
        int i = 0;
        while (i < n && c[i] == 2) c[i++] = -2;
        if (i == n) break;
        ++c[i];
      }
    }
  }
}

TEST_SUITE("permutations") {
  TEST_CASE("algebra") {
    const Permutation p(std::vector<std::int32_t>{1, 2, 0, 4, 3});
    CHECK(p.order() == 6);
    CHECK(p.after(p.inverse()).is_identity());
    CHECK(p.power(6).is_identity());
    CHECK(p.power(-1) == p.inverse());
    CHECK(p.power(2) == p.after(p));
    CHECK(p.fixed_points() == 0);
    CHECK(Permutation::identity(3).fixed_points() == 3);
  }
}

TEST_SUITE("torsor action") {
  TEST_CASE("single generator step on the banana") {
    const auto g = fixtures::b3_planar();
    const auto t = act_generator(g, g.vertex("b"), g.vertex("a"), fixtures::tree(g, {"e1"}));
    CHECK(fixtures::names(g, t) == std::vector<std::string>{"e2"});
    CHECK(act_generator(g, 1, 1, fixtures::tree(g, {"e3"})) == fixtures::tree(g, {"e3"}));

    const TorsorAction action(g);
    const auto& gen = action.generator(g.vertex("b"), g.vertex("a"));
    CHECK(gen.order() == 3);
    CHECK(gen.fixed_points() == 0);
    const Divisor ab = Divisor::difference(2, 0, 1);
    CHECK(action.divisor_action(1, ab * 3).is_identity());
  }

  TEST_CASE("generators match direct simulation on names") {
    for (const auto& name : {"B3", "theta", "K4"}) {
      for (const auto& g : generate_rotation_systems(builtin_graph(name), RotationMode::all())) {
        const auto plain = oracle::from(g);
        const TreeIndex trees(g);
        for (VertexId r = 0; r < g.num_vertices(); ++r) {
          for (VertexId v = 0; v < g.num_vertices(); ++v) {
            for (const auto& t : trees.trees()) {
              const auto got = fixtures::names(g, act_generator(g, r, v, t));
              CHECK(got == oracle::act_generator(plain, g.vertex_name(r), g.vertex_name(v), fixtures::names(g, t)));
            }
          }
        }
      }
    }
  }

  TEST_CASE("serial and parallel tables agree") {
    for (const auto& name : {"K4", "K5", "theta", "B6"}) {
      for (const auto& g : generate_rotation_systems(builtin_graph(name), RotationMode::sample(3, 5))) {
        const TreeIndex trees(g);
        const auto serial = generator_tables_serial(g, trees);
        CHECK(serial == generator_tables_parallel(g, trees));
        CHECK(serial == generator_tables_parallel(g, trees, 3));
      }
    }
  }

  TEST_CASE("free and transitive at every root") {
    for (const auto& name : {"P2", "B2", "B3", "B4", "B5", "B6", "K4"}) {
      const auto mode = std::string(name) == "B6" ? RotationMode::sample(200, 1) : RotationMode::all();
      for (const auto& g : generate_rotation_systems(builtin_graph(name), mode)) {
        const TorsorAction action(g);
        for (VertexId r = 0; r < g.num_vertices(); ++r) CHECK(verify_torsor(action, r).passed());
      }
    }
  }

  TEST_CASE("homomorphism, image divisors and freeness") {
    const auto g = builtin_graph("K4");
    const TorsorAction action(g);
    const int n = g.num_vertices();
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_divisor = [&] {
      Divisor d(n);
      for (VertexId v = 1; v < n; ++v) {
        d[v] = coeff(rng);
        d[0] -= d[v];
      }
      return d;
    };
    for (int i = 0; i < 50; ++i) {
      const Divisor d1 = random_divisor();
      const Divisor d2 = random_divisor();
      for (VertexId r = 0; r < n; ++r) {
        CHECK(action.divisor_action(r, d1 + d2) == action.divisor_action(r, d1).after(action.divisor_action(r, d2)));
        const VertexId w = static_cast<VertexId>(i % n);
        CHECK(action.divisor_action(r, d1 + laplacian_image(g, w)) == action.divisor_action(r, d1));
        const auto p = action.divisor_action(r, d1);
        if (p.fixed_points() > 0) CHECK(divisors_equivalent(g, d1, Divisor(n)));
      }
    }
    CHECK_THROWS_AS(action.divisor_action(0, Divisor(std::vector<std::int64_t>{1, 0, 0, 0})), Error);
    CHECK_THROWS_AS(divisors_equivalent_by_action(action, Divisor(n), Divisor(n), 0, 16), Error);
  }

  TEST_CASE("basepoint independence on small graphs") {
    CHECK(is_basepoint_independent(builtin_graph("P2")).independent);
    CHECK(is_basepoint_independent(fixtures::b3_planar()).independent);
    CHECK(is_basepoint_independent(builtin_graph("C3")).independent);

    const auto toroidal = is_basepoint_independent(fixtures::b3_toroidal());
    CHECK_FALSE(toroidal.independent);
    REQUIRE(toroidal.counterexample);
    CHECK(toroidal.counterexample->image_r != toroidal.counterexample->image_s);

    for (const auto& g : generate_rotation_systems(builtin_graph("K4"), RotationMode::all())) {
      const auto result = is_basepoint_independent(g);
      CHECK(result.independent == is_planar(g));
      const TorsorAction action(g);
      CHECK(is_basepoint_independent(action, Execution::Serial).independent == result.independent);
    }
  }

  TEST_CASE("tree index lookups") {
    const auto g = builtin_graph("C3");
    const TreeIndex trees(g);
    CHECK(trees.size() == 3);
    for (int i = 0; i < trees.size(); ++i) CHECK(trees.index_of(trees[i]) == i);
    CHECK_THROWS_AS(trees.index_of_mask(0b111), Error);
  }
}

TEST_SUITE("tree identities") {
  TEST_CASE("reversal identity and routing") {
    for (const auto& name : {"B3", "theta", "K4"}) {
      for (const auto& g : generate_rotation_systems(builtin_graph(name), RotationMode::all())) {
        const TorsorAction action(g);
        const auto reversal = check_reversal_identity(action);
        CHECK(reversal.checked > 0);
        CHECK(reversal.violations == 0);
        const auto routing = check_routing_computes_action(action);
        CHECK(routing.checked > 0);
        CHECK(routing.violations == 0);
      }
    }
  }

  TEST_CASE("geodesic identities on planar and toroidal graphs") {
    for (const auto& g : generate_rotation_systems(builtin_graph("K4"), RotationMode::all())) {
      const auto report = check_geodesic_identities(g);
      CHECK(report.passed());
      CHECK(report.part_a.checked > 0);
      CHECK(report.part_c.checked > 0);
      if (is_planar(g)) {
        CHECK(report.equation_failures == 0);
        CHECK(report.part_d_adjacent.checked > 0);
      }
    }
    const auto toroidal = check_geodesic_identities(fixtures::b3_toroidal());
    CHECK(toroidal.passed());
    CHECK(toroidal.equation_failures > 0);
    CHECK(toroidal.first_equation_failure.has_value());
  }
}
