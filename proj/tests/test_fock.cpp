#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qcva/fock.hpp"

using namespace qcva;

namespace {
Monomial mono(std::initializer_list<Factor> fs) { return Monomial(std::vector<Factor>(fs)); }
ModuleState top_vector(std::size_t t = 0) { return ModuleState({Monomial{}, t}, Rational(1)); }
}  // namespace

TEST_CASE("monomials are sorted multisets") {
  const Monomial m = mono({{1, 2, 3}, {1, 0, 1}, {1, 0, 1}});
  CHECK(m.factors().front() == Factor{1, 0, 1});
  CHECK(m.multiplicity({1, 0, 1}) == 2);
  CHECK(m.weight() == 5);
  CHECK(m.nweight() == 2);
  CHECK(m.without_one({1, 0, 1}).multiplicity({1, 0, 1}) == 1);
  CHECK(m.times({1, 0, 1}) == mono({{1, 0, 1}, {1, 0, 1}, {1, 0, 1}, {1, 2, 3}}));
  CHECK_THROWS_AS(mono({{1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("enumerate_basis: documented cases") {
  auto vac = enumerate_basis(1, 0, 0);
  REQUIRE(vac.size() == 1);
  CHECK(vac[0].is_vacuum());
  CHECK(enumerate_basis(1, 3, 0).empty());

  std::vector<Monomial> expected = {
      mono({{1, 2, 3}}),
      mono({{1, 0, 1}, {1, 2, 2}}),
      mono({{1, 1, 1}, {1, 1, 2}}),
      mono({{1, 2, 1}, {1, 0, 2}}),
      mono({{1, 0, 1}, {1, 0, 1}, {1, 2, 1}}),
      mono({{1, 0, 1}, {1, 1, 1}, {1, 1, 1}}),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(enumerate_basis(1, 2, 3) == expected);
}

TEST_CASE("enumerate_basis matches the brute-force multiset oracle") {
  for (int d = 1; d <= 2; ++d)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 5; ++n) {
        const auto got = enumerate_basis(d, m, n);
        const auto want = oracle::bipartite_multisets(d, m, n);
        REQUIRE(got.size() == want.size());
        std::set<std::vector<std::tuple<int, int, int>>> got_set;
        for (const auto& g : got) {
          std::vector<std::tuple<int, int, int>> v;
          for (const auto& f : g.factors()) v.emplace_back(f.color, f.tpow, f.mode);
          got_set.insert(v);
          CHECK(g.nweight() == m);
          CHECK(g.weight() == n);
        }
        CHECK(got_set == want);
        CHECK(std::is_sorted(got.begin(), got.end()));
      }
}

TEST_CASE("grading") {
  CHECK(grading(vacuum_state()) == Bigrade{0, 0});
  CHECK(grading(FockState(mono({{1, 0, 1}, {1, 2, 3}}), Rational(1))) == Bigrade{4, 2});
  FockState mixed(mono({{1, 0, 1}}), Rational(1));
  mixed.add(mono({{1, 1, 1}}), Rational(1));
  CHECK_FALSE(grading(mixed).has_value());
  CHECK_FALSE(grading(FockState()).has_value());
}

TEST_CASE("apply_mode: documented cases") {
  const auto m3 = ModuleSpec::adjoint(1, Rational(3));
  const ModuleState vac = top_vector();
  CHECK(apply_mode({{1, 0}, -2}, vac, m3) == ModuleState({mono({{1, 0, 2}}), 0}, Rational(1)));
  const ModuleState x = ModuleState({mono({{1, 0, 2}}), 0}, Rational(1));
  CHECK(apply_mode({{1, 0}, 2}, x, m3) == ModuleState({Monomial{}, 0}, Rational(6)));

  const auto w = ModuleSpec::evaluation(Rational(1), Rational(1, 2), {Rational(3)});
  CHECK(apply_mode({{1, 2}, 0}, vac, w) == ModuleState({Monomial{}, 0}, Rational(3, 4)));
  // zero modes vanish on the adjoint module
  CHECK(apply_mode({{1, 2}, 0}, vac, m3).is_zero());
  CHECK_THROWS_AS(apply_mode({{2, 0}, 1}, vac, m3), std::out_of_range);
}

TEST_CASE("mode commutators match the affinized bracket") {
  const auto g = ModuleSpec::generalized(Rational(-2, 3), Rational(1, 3), {Rational(1), Rational(2)},
                                         {RatMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}),
                                          RatMatrix::scalar(2, Rational(2))});
  const Truncation tr{3, 2, 0};
  const auto basis = basis_states(g, tr);
  std::vector<ModeOp> ops;
  for (int i = 1; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (long n = -3; n <= 3; ++n) ops.push_back({{i, j}, n});
  for (const auto& a : ops)
    for (const auto& b : ops)
      for (const auto& key : basis) {
        const ModuleState w(key, Rational(1));
        ModuleState comm = apply_mode(a, apply_mode(b, w, g), g) - apply_mode(b, apply_mode(a, w, g), g);
        const bool central = a.n + b.n == 0 && a.gen == b.gen;
        ModuleState expect = central ? Rational(a.n) * g.level() * w : ModuleState();
        REQUIRE(comm == expect);
      }
}

TEST_CASE("mode actions shift the bigrade and annihilators see finitely many t-powers") {
  const auto w = ModuleSpec::evaluation(Rational(1), Rational(1, 2), {Rational(2)});
  const ModuleState s({mono({{1, 0, 1}, {1, 1, 2}, {1, 3, 2}}), 0}, Rational(1));
  const auto g0 = *grading(s);
  for (int j = 0; j <= 6; ++j)
    for (long n = -3; n <= 3; ++n) {
      const auto out = apply_mode({{1, j}, n}, s, w);
      if (out.is_zero()) continue;
      const auto g = *grading(out);
      if (n < 0) CHECK(g == Bigrade{g0.wt - n, g0.nwt + j});
      if (n > 0) CHECK(g == Bigrade{g0.wt - n, g0.nwt - j});
      if (n == 0) CHECK(g == g0);
      // positive modes only hit the t-powers present in the state
      if (n > 0) CHECK((j == 0 || j == 1 || j == 3));
    }
}

TEST_CASE("module spec validation") {
  CHECK_THROWS_AS(ModuleSpec::adjoint(1, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(ModuleSpec::adjoint(0, Rational(1)), std::invalid_argument);
  const RatMatrix j2 = RatMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
  CHECK_NOTHROW(ModuleSpec::generalized(Rational(1), Rational(0), {Rational(1)}, {j2}));
  // wrong eigenvalue: H - 2I is not nilpotent
  CHECK_THROWS_AS(ModuleSpec::generalized(Rational(1), Rational(0), {Rational(2)}, {j2}), std::invalid_argument);
  // non-commuting pair
  const RatMatrix lower = j2.transpose();
  CHECK_THROWS_AS(ModuleSpec::generalized(Rational(1), Rational(0), {Rational(1), Rational(1)}, {j2, lower}),
                  std::invalid_argument);
}

TEST_CASE("basis_states are ordered by bigrade and cover the truncation") {
  const auto g = ModuleSpec::generalized(Rational(1), Rational(0), {Rational(0)},
                                         {RatMatrix::from_rows({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}})});
  const auto basis = basis_states(g, {3, 2, 0});
  std::size_t expected = 0;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m) expected += 2 * oracle::bipartite_multisets(1, m, n).size();
  CHECK(basis.size() == expected);
  for (std::size_t k = 1; k < basis.size(); ++k) {
    const auto a = std::make_pair(basis[k - 1].mono.weight(), basis[k - 1].mono.nweight());
    const auto b = std::make_pair(basis[k].mono.weight(), basis[k].mono.nweight());
    CHECK(a <= b);
  }
}
