#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <softset/central_soft_set.hpp>
#include <softset/context.hpp>
#include <softset/enumerate.hpp>

#include "support.hpp"

using namespace softset;
using namespace testsupport;

TEST_CASE("context validates and orders its names") {
  const auto ctx = houses_context();
  CHECK(ctx->universe_size() == 5);
  CHECK(ctx->parameter_count() == 8);
  CHECK(ctx->object_index("h3") == 2);
  CHECK(ctx->parameter_index("VIII") == 7);
  CHECK(!ctx->object_index("h9").has_value());
  CHECK(thrown_errc([] { Context::make({"x", "x"}, {"p"}); }) == Errc::duplicate_name);
  CHECK(thrown_errc([] { Context::make({"x"}, {"p", "p"}); }) == Errc::duplicate_name);
  CHECK(thrown_errc([&] { ctx->objects({"h9"}); }) == Errc::unknown_object);
  CHECK(thrown_errc([&] { ctx->params({"IX"}); }) == Errc::unknown_parameter);
}

TEST_CASE("index sets behave as positional bit vectors") {
  const auto ctx = houses_context();
  const ObjectSet a = ctx->objects({"h1", "h4"});
  const ObjectSet b = ctx->objects({"h4", "h5"});
  CHECK((a | b) == ctx->objects({"h1", "h4", "h5"}));
  CHECK((a & b) == ctx->objects({"h4"}));
  CHECK((a - b) == ctx->objects({"h1"}));
  CHECK(a.complemented() == ctx->objects({"h2", "h3", "h5"}));
  CHECK(a.count() == 2);
  CHECK(ctx->objects({"h4"}).subset_of(a));
  CHECK(!a.subset_of(b));
  CHECK(ctx->no_objects().empty());
  CHECK(ctx->all_objects().count() == 5);
  CHECK(thrown_errc([&] { (void)(a | ObjectSet(3)); }) == Errc::context_mismatch);
}

TEST_CASE("make builds a validated total map") {
  const auto ctx = houses_context();
  const auto f = houses_f(ctx);
  CHECK(f.central() == ctx->params({"IV", "V"}));
  CHECK(f.value(0) == ctx->objects({"h2", "h3", "h4", "h5"}));
  CHECK(f.value(4) == ctx->objects({"h1", "h4"}));

  SUBCASE("omitted parameters default to the empty set") {
    const auto sparse = CentralSoftSet::make(ctx, {"I"}, {{"I", {"h1"}}});
    CHECK(sparse.value(0) == ctx->objects({"h1"}));
    for (std::size_t e = 1; e < 8; ++e) CHECK(sparse.value(e).empty());
  }

  SUBCASE("bottom is the all-empty set") {
    const auto bot = CentralSoftSet::bottom(ctx);
    CHECK(bot.central().empty());
    for (std::size_t e = 0; e < 8; ++e) CHECK(bot.value(e).empty());
    CHECK(bot == CentralSoftSet::make(ctx, {}, {}));
  }

  SUBCASE("validation failures") {
    CHECK(thrown_errc([&] { CentralSoftSet::make(ctx, {"IX"}, {}); }) ==
          Errc::central_not_subset);
    CHECK(thrown_errc([&] { CentralSoftSet::make(ctx, {}, {{"IX", {}}}); }) ==
          Errc::unknown_parameter);
    CHECK(thrown_errc([&] { CentralSoftSet::make(ctx, {}, {{"I", {"h9"}}}); }) ==
          Errc::unknown_object);
    CHECK(thrown_errc([&] { CentralSoftSet::make(ctx, {}, {{"I", {}}, {"I", {}}}); }) ==
          Errc::duplicate_name);
    CHECK(thrown_errc([&] {
            CentralSoftSet(ctx, ParamSet(3), std::vector<ObjectSet>(8, ctx->no_objects()));
          }) == Errc::context_mismatch);
    CHECK(thrown_errc([&] {
            CentralSoftSet(ctx, ctx->no_params(), std::vector<ObjectSet>(2, ctx->no_objects()));
          }) == Errc::context_mismatch);
  }
}

TEST_CASE("equality is extensional over the whole parameter list") {
  const auto ctx = houses_context();
  const auto f = houses_f(ctx);
  const auto g = houses_g(ctx);
  CHECK(f == f);
  CHECK(!(f == g));
  // same map, different central set
  const auto f_other = CentralSoftSet::make(ctx, {"III", "IV"}, table_f());
  CHECK(!(f == f_other));
  // extensionality: maps must agree off-central too
  auto bent = table_f();
  bent[5].second = {"h1"};  // VI is outside both central sets
  CHECK(!(f == CentralSoftSet::make(ctx, {"IV", "V"}, bent)));

  const auto other_ctx = Context::make({"h1"}, {"I"});
  CHECK(thrown_errc([&] { (void)(f == CentralSoftSet::bottom(other_ctx)); }) ==
        Errc::context_mismatch);
  // structurally equal contexts compare fine across instances
  CHECK(houses_f(houses_context()) == f);
}

TEST_CASE("union reproduces the worked tables") {
  const auto ctx = houses_context();
  const auto f = houses_f(ctx);
  const auto g = houses_g(ctx);

  CHECK(matches(unite(f, g), {"I", "IV", "V"}, table_h()));

  const auto f_c = CentralSoftSet::make(ctx, {"III", "IV"}, table_f());
  CHECK(matches(unite(f_c, g), {"I", "III", "IV"}, table_j()));

  SUBCASE("identity, idempotence, commutativity") {
    CHECK(unite(f, CentralSoftSet::bottom(ctx)) == f);
    CHECK(unite(CentralSoftSet::bottom(ctx), f) == f);
    CHECK(unite(f, f) == f);
    CHECK(unite(f, g) == unite(g, f));
  }

  SUBCASE("same map: centrals combine, map unchanged") {
    CHECK(unite(f, f_c) == CentralSoftSet::make(ctx, {"III", "IV", "V"}, table_f()));
  }

  CHECK(thrown_errc([&] {
          (void)unite(f, CentralSoftSet::bottom(Context::make({"h1"}, {"I"})));
        }) == Errc::context_mismatch);
}

TEST_CASE("intersection reproduces the worked table") {
  const auto ctx = houses_context();
  const auto f = houses_f(ctx);
  const auto g = houses_g(ctx);

  CHECK(matches(intersect(f, g), {"IV"}, table_k()));

  SUBCASE("same map: centrals intersect, map unchanged") {
    const auto f_c = CentralSoftSet::make(ctx, {"III", "IV"}, table_f());
    CHECK(intersect(f, f_c) == CentralSoftSet::make(ctx, {"IV"}, table_f()));
  }

  SUBCASE("idempotence and commutativity") {
    CHECK(intersect(f, f) == f);
    CHECK(intersect(f, g) == intersect(g, f));
  }
}

TEST_CASE("complement flips the central set and every value") {
  const auto ctx = houses_context();
  const auto f = houses_f(ctx);
  const auto fc = complement(f);
  CHECK(fc.central() == ctx->params({"I", "II", "III", "VI", "VII", "VIII"}));
  CHECK(fc.value(0) == ctx->objects({"h1"}));
  CHECK(complement(fc) == f);

  const auto top = complement(CentralSoftSet::bottom(ctx));
  CHECK(top.central() == ctx->all_params());
  for (std::size_t e = 0; e < 8; ++e) CHECK(top.value(e) == ctx->all_objects());
}

TEST_CASE("difference follows its definition, not the printed table") {
  const auto ctx = houses_context();
  const auto g = houses_g(ctx);
  const auto m = houses_m(ctx);

  const auto n = difference(m, g);
  CHECK(matches(n, {"VI"}, table_n()));

  SUBCASE("case formula agrees with intersecting the complement") {
    CHECK(n == intersect(m, complement(g)));
  }

  SUBCASE("subtracting bottom keeps the set") {
    CHECK(difference(m, CentralSoftSet::bottom(ctx)) == m);
  }

  SUBCASE("result sits below the left operand") { CHECK(leq(n, m)); }
}

TEST_CASE("information order") {
  const auto ctx = houses_context();
  const auto f = houses_f(ctx);
  const auto g = houses_g(ctx);
  const auto m = houses_m(ctx);

  CHECK(leq(g, m));
  CHECK(!leq(m, g));
  CHECK(leq(f, f));
  CHECK(leq(CentralSoftSet::bottom(ctx), f));

  SUBCASE("agrees with both algebraic characterizations") {
    for (const auto* x : {&f, &g, &m})
      for (const auto* y : {&f, &g, &m}) {
        const bool by_order = leq(*x, *y);
        CHECK(by_order == (unite(*x, *y) == *y));
        CHECK(by_order == (intersect(*x, *y) == *x));
      }
  }
}

TEST_CASE("family union") {
  const auto ctx = houses_context();
  const auto f = houses_f(ctx);
  const auto g = houses_g(ctx);

  const std::vector<CentralSoftSet> pair = {f, g};
  CHECK(unite_all(ctx, pair) == unite(f, g));

  const std::vector<CentralSoftSet> single = {f};
  CHECK(unite_all(ctx, single) == f);

  CHECK(unite_all(ctx, {}) == CentralSoftSet::bottom(ctx));

  SUBCASE("matches the left fold of binary union on a small context") {
    const auto small = Context::make({"x", "y"}, {"p", "q"});
    const auto all = enumerate_css(small);
    for (std::size_t i = 0; i < all.size(); i += 7)
      for (std::size_t j = 0; j < all.size(); j += 5)
        for (std::size_t k = 0; k < all.size(); k += 3) {
          const std::vector<CentralSoftSet> fam = {all[i], all[j], all[k]};
          CHECK(unite_all(small, fam) == unite(unite(all[i], all[j]), all[k]));
        }
  }
}

TEST_CASE("algebraic identities hold on every set of a small context") {
  const auto ctx = Context::make({"x", "y"}, {"p", "q"});
  const auto all = enumerate_css(ctx);
  REQUIRE(all.size() == 64);
  const auto bot = CentralSoftSet::bottom(ctx);
  for (const auto& a : all) {
    CHECK(unite(a, a) == a);
    CHECK(intersect(a, a) == a);
    CHECK(complement(complement(a)) == a);
    CHECK(leq(bot, a));
    CHECK(unite(bot, a) == a);
    // same map under another central set: only the centrals combine
    for (std::uint64_t bits = 0; bits < 4; ++bits) {
      const CentralSoftSet b(ctx, ParamSet::from_bits(2, bits), a.map());
      CHECK(unite(a, b) == CentralSoftSet(ctx, a.central() | b.central(), a.map()));
      CHECK(intersect(a, b) == CentralSoftSet(ctx, a.central() & b.central(), a.map()));
    }
    for (const auto& b : all) {
      CHECK(unite(a, b) == unite(b, a));
      CHECK(intersect(a, b) == intersect(b, a));
    }
  }
}

TEST_CASE("projection keeps the map and shrinks the central set") {
  const auto ctx = houses_context();
  const auto f = houses_f(ctx);
  const auto g = houses_g(ctx);
  const auto u = unite(f, g);

  const auto p = project(u, ctx->params({"I", "V"}));
  CHECK(p.central() == ctx->params({"I", "V"}));
  CHECK(p.map() == u.map());

  CHECK(project(f, f.central()) == f);
  CHECK(thrown_errc([&] { (void)project(f, ctx->params({"I"})); }) ==
        Errc::target_not_subset_of_central);
  CHECK(thrown_errc([&] { (void)project(f, ParamSet(2)); }) == Errc::context_mismatch);

  SUBCASE("projection of a union splits over the operands") {
    // S = {I,V} = (A∪B) − {IV} with {IV} ⊆ A∩B, so equality holds
    const auto split = unite(project(f, ctx->params({"V"})), project(g, ctx->params({"I"})));
    CHECK(p == split);
  }
}
