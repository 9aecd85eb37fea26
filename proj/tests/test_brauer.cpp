#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "condis/brauer.hpp"
#include "support.hpp"

using namespace condis;
using namespace condis::testsupport;

namespace {
// the worked non-function relation of type 3 -> 4
const SplitEq kNonFun(3, 4, {{0, 3, 5, 6}, {1}, {2, 4}});
}  // namespace

TEST_CASE("nth_prime") {
  CHECK(nth_prime(1) == 2);
  CHECK(nth_prime(4) == 7);
  CHECK(nth_prime(8) == 19);
  CHECK_THROWS_AS(nth_prime(0), OutOfRange);
}

TEST_CASE("appropriate") {
  auto r = j_of(FinFun(2, 3, {0, 1}));
  CHECK(appropriate(Radices({2, 3, 2}), Radices({2, 3}), r));
  CHECK_FALSE(appropriate(Radices({3, 2, 2}), Radices({2, 2, 2, 2}), kNonFun));
  SplitEq singletons(2, 1, {{0}, {1}, {2}});
  CHECK(appropriate(Radices({2, 5}), Radices({7}), singletons));
  CHECK_THROWS_AS(appropriate(Radices({2}), Radices({2, 2, 2, 2}), kNonFun), LengthMismatch);
}

TEST_CASE("f_ab_rel worked examples") {
  auto rel = f_ab_rel(Radices({3, 2, 2}), Radices({2, 2, 2, 2}), kNonFun);
  std::set<std::pair<int, int>> expected{{0, 0}, {1, 4},  {2, 0},  {3, 4},
                                         {4, 11}, {5, 15}, {6, 11}, {7, 15}};
  CHECK(rel == BinRel(12, 16, expected));

  auto diag_rel = f_ab_rel(Radices({2, 2}), Radices({2, 2, 2, 2}),
                           SplitEq(2, 4, {{0, 2, 4}, {1, 3, 5}}));
  CHECK(diag_rel == graph_of(FinFun(4, 16, {0, 5, 10, 15})));

  CHECK(f_ab_rel(Radices({}), Radices({}), SplitEq(0, 0, {})) ==
        BinRel(1, 1, {{0, 0}}));
}

TEST_CASE("f_ab_fun worked examples") {
  auto pr1_image = f_ab_fun(Radices({2, 3, 2}), Radices({2, 3}), j_of(FinFun(2, 3, {0, 1})));
  CHECK(pr1_image == FinFun(12, 6, {0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5}));

  auto pr2_image = f_ab_fun(Radices({2, 2}), Radices({2, 2, 2, 2}), j_of(FinFun(4, 2, {0, 1, 0, 1})));
  CHECK(pr2_image == FinFun(4, 16, {0, 5, 10, 15}));

  try {
    f_ab_fun(Radices({3, 2, 2}), Radices({2, 2, 2, 2}), kNonFun);
    FAIL("expected NotAFunction");
  } catch (const NotAFunction& e) {
    CHECK(e.source == 8);
    CHECK(e.images == 0);
  }
}

TEST_CASE("f_p") {
  CHECK(f_p(2, se_identity(1)) == graph_of(identity(2)));
  CHECK(f_p(2, SplitEq(1, 2, {{0, 1, 2}})) == BinRel(2, 4, {{0, 0}, {1, 3}}));
  CHECK(f_p(2, SplitEq(1, 1, {{0}, {1}})) ==
        BinRel(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST_CASE("respecting_functions") {
  CHECK(respecting_functions(EqRel(2, {{0, 1}}), 2) == std::vector<int>{0, 3});
  CHECK(respecting_functions(EqRel(2, {{0}, {1}}), 2) == std::vector<int>{0, 1, 2, 3});
  CHECK(respecting_functions(EqRel(0, {}), 5) == std::vector<int>{0});
  CHECK_THROWS_AS(respecting_functions(EqRel(1, {{0}}), 1), OutOfRange);
}

TEST_CASE("choose_representatives") {
  auto c = choose_representatives(EqRel(4, {{0, 1}, {2, 3}}));
  CHECK(c.reps == std::vector<int>{0, 2});
  CHECK(c.others == std::vector<int>{1, 3});
  CHECK(c.phi == std::map<int, int>{{1, 0}, {3, 2}});

  auto discrete = choose_representatives(EqRel(3, {{0}, {1}, {2}}));
  CHECK(discrete.others.empty());
  CHECK(discrete.phi.empty());

  auto one = choose_representatives(EqRel(4, {{0, 1, 2, 3}}));
  CHECK(one.reps == std::vector<int>{0});
  for (auto [x, rep] : one.phi) CHECK(rep == 0);
}

TEST_CASE("exp_functor") {
  CHECK(exp_functor(2, FinFun(1, 2, {0})) == FinFun(4, 2, {0, 0, 1, 1}));
  for (int p = 1; p <= 3; ++p)
    for (int n = 0; n <= 3; ++n) {
      int pn = 1;
      for (int k = 0; k < n; ++k) pn *= p;
      CHECK(exp_functor(p, identity(n)) == identity(pn));
    }
  // contravariant functor law, brute force
  for (int p = 2; p <= 3; ++p)
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        for (int q = 0; q <= 2; ++q)
          for (const auto& f : all_functions(n, m))
            for (const auto& g : all_functions(m, q))
              CHECK(exp_functor(p, compose(g, f)) ==
                    compose(exp_functor(p, f), exp_functor(p, g)));
  CHECK_THROWS_AS(exp_functor(0, identity(1)), OutOfRange);
}

TEST_CASE("powerset_functor") {
  CHECK(powerset_functor(FinFun(1, 2, {0})) == FinFun(4, 2, {0, 0, 1, 1}));
  for (int n = 0; n <= 3; ++n) CHECK(powerset_functor(identity(n)) == identity(1 << n));
  CHECK(powerset_functor(kappa(3)) == FinFun(8, 1, {0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("the natural isomorphism is a table equality") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : all_functions(n, m))
        CHECK(exp_functor(2, f).table == powerset_functor(f).table);
}

TEST_CASE("direct_image") {
  FinFun collapse(2, 2, {0, 0});
  CHECK(direct_image(collapse, subset_encode(2, {0, 1})) == subset_encode(2, {0}));
  CHECK(direct_image(collapse, 0) == 0);
  for (int code = 0; code < 8; ++code) CHECK(direct_image(identity(3), code) == code);
  CHECK_THROWS_AS(direct_image(collapse, 4), OutOfRange);
}

TEST_CASE("galois connection between image and inverse image") {
  auto subset_leq = [](int a, int b) { return (a & ~b) == 0; };
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : all_functions(n, m)) {
        auto inv = powerset_functor(f);
        for (int s = 0; s < (1 << n); ++s)
          for (int y = 0; y < (1 << m); ++y)
            CHECK(subset_leq(direct_image(f, s), y) == subset_leq(s, inv.table[y]));
      }
}

TEST_CASE("representation is functorial") {
  // identities at every type with every {2,3} assignment
  for (int n = 0; n <= 3; ++n)
    for (auto& [a, b] : all_appropriate_radices(se_identity(n)))
      CHECK(f_ab_rel(a, b, se_identity(n)) == graph_of(identity(a.product())));

  // exhaustive small chains
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int p = 0; p <= 2; ++p)
        for (const auto& r : all_spliteqs(n, m))
          for (const auto& s : all_spliteqs(m, p)) {
            std::mt19937 rng(101);
            auto [a, b, c] = appropriate_chain_radices(rng, r, s);
            CHECK(rel_compose(f_ab_rel(b, c, s), f_ab_rel(a, b, r)) ==
                  f_ab_rel(a, c, se_compose(s, r)));
          }
}

TEST_CASE("equal representations at some radices force equal binary ones") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m + n <= 5; ++m) {
      auto all = all_spliteqs(n, m);
      std::vector<BinRel> f2_images;
      f2_images.reserve(all.size());
      for (const auto& r : all) f2_images.push_back(f_p(2, r));
      const int size = n + m;
      for (int mask = 0; mask < (1 << size); ++mask) {
        std::vector<int> av, bv;
        for (int x = 0; x < size; ++x) ((x < n) ? av : bv).push_back((mask >> x) & 1 ? 3 : 2);
        Radices a(std::move(av)), b(std::move(bv));
        std::map<std::set<std::pair<int, int>>, std::size_t> first_with_image;
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (!appropriate(a, b, all[i])) continue;
          auto [it, fresh] = first_with_image.emplace(f_ab_rel(a, b, all[i]).pairs, i);
          if (!fresh) CHECK(f2_images[i] == f2_images[it->second]);
        }
      }
    }
}

TEST_CASE("binary representation separates split equivalences") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; n + m <= 5; ++m) {
      std::map<std::set<std::pair<int, int>>, SplitEq> seen;
      for (const auto& r : all_spliteqs(n, m)) {
        auto image = f_p(2, r);
        auto [it, fresh] = seen.emplace(image.pairs, r);
        CHECK(fresh);
      }
    }
}

TEST_CASE("representations of function images are functions") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& f : all_functions(m, n)) {
        auto r = j_of(f);
        for (const auto& [a, b] : all_appropriate_radices(r)) {
          auto fun = f_ab_fun(a, b, r);  // must not throw
          CHECK(fun.src == a.product());
          CHECK(fun.tgt == b.product());
        }
      }
}

TEST_CASE("representation sends injections and codiagonals to projections and diagonals") {
  std::vector<std::vector<int>> shapes{{}, {2}, {3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (const auto& d : shapes)
    for (const auto& e : shapes) {
      const int n = static_cast<int>(d.size()), m = static_cast<int>(e.size());
      Radices rd(d), re(e);
      std::vector<int> de = d;
      de.insert(de.end(), e.begin(), e.end());
      Radices rde(de);
      CHECK(f_ab_fun(rde, rd, j_of(inj1(n, m))) == proj1(rd.product(), re.product()));
      CHECK(f_ab_fun(rde, re, j_of(inj2(n, m))) == proj2(rd.product(), re.product()));
      std::vector<int> dd = d;
      dd.insert(dd.end(), d.begin(), d.end());
      CHECK(f_ab_fun(rd, Radices(dd), j_of(codiag(n))) == diag(rd.product()));
    }
}

TEST_CASE("respecting functions separate equivalence relations") {
  for (int size = 0; size <= 4; ++size) {
    auto rels = all_eqrels(size);
    for (std::size_t i = 0; i < rels.size(); ++i)
      for (std::size_t j = i + 1; j < rels.size(); ++j)
        CHECK(respecting_functions(rels[i], 2) != respecting_functions(rels[j], 2));
  }
}

TEST_CASE("splitting a respecting function is transport along phi") {
  for (int size = 0; size <= 5; ++size)
    for (int p = 2; p <= 3; ++p)
      for (const auto& r : all_eqrels(size)) {
        auto choice = choose_representatives(r);
        const int k1 = static_cast<int>(choice.reps.size());
        const int k2 = static_cast<int>(choice.others.size());
        const std::vector<int> shape(size, p);
        const std::vector<int> shape1(k1, p);
        const std::vector<int> shape2(k2, p);

        std::set<std::pair<int, int>> split_pairs;
        for (int code : respecting_functions(r, p)) {
          auto f = shape_decode(shape, code);
          std::vector<int> f1(k1), f2(k2);
          for (int x = 0; x < k1; ++x) f1[x] = f[choice.reps[x]];
          for (int x = 0; x < k2; ++x) f2[x] = f[choice.others[x]];
          split_pairs.emplace(shape_encode(shape1, f1), shape_encode(shape2, f2));
        }

        auto rep_slot = [&](int x2) {
          int rep = choice.phi.at(x2);
          return static_cast<int>(
              std::lower_bound(choice.reps.begin(), choice.reps.end(), rep) - choice.reps.begin());
        };
        std::set<std::pair<int, int>> transport_pairs;
        for (int code1 = 0; code1 < shape_product(shape1); ++code1) {
          auto f1 = shape_decode(shape1, code1);
          std::vector<int> f2(k2);
          for (int x = 0; x < k2; ++x) f2[x] = f1[rep_slot(choice.others[x])];
          transport_pairs.emplace(code1, shape_encode(shape2, f2));
        }
        CHECK(split_pairs == transport_pairs);

        // the same transport through the exponential functor on slot spaces
        std::vector<int> phi_table(k2);
        for (int x = 0; x < k2; ++x) phi_table[x] = rep_slot(choice.others[x]);
        FinFun phi_fun(k2, k1, phi_table);
        CHECK(graph_of(exp_functor(p, phi_fun)).pairs == split_pairs);
      }
}

TEST_CASE("exponential sizes multiply over sums") {
  std::mt19937 rng(31);
  for (int p = 2; p <= 3; ++p)
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m) {
        auto f = random_finfun(rng, n, std::max(1, n));
        auto g = random_finfun(rng, m, std::max(1, m));
        auto whole = exp_functor(p, sum(f, g));
        auto left = exp_functor(p, f);
        auto right = exp_functor(p, g);
        CHECK(whole.src == left.src * right.src);
        CHECK(whole.tgt == left.tgt * right.tgt);
      }
}

TEST_CASE("relation plumbing") {
  auto g = graph_of(FinFun(2, 3, {2, 1}));
  CHECK(g == BinRel(2, 3, {{0, 2}, {1, 1}}));
  auto h = graph_of(FinFun(3, 2, {0, 0, 1}));
  CHECK(rel_compose(h, g) == graph_of(compose(FinFun(3, 2, {0, 0, 1}), FinFun(2, 3, {2, 1}))));
  CHECK_THROWS_AS(rel_compose(g, g), TypeMismatch);
  CHECK_THROWS_AS(BinRel(2, 2, {{0, 2}}), OutOfRange);
}
