#include "doctest.h"
#include "helpers.hpp"
#include "orbindex/errors.hpp"

#include <cmath>

using namespace orbindex;
using testutil::wv;

namespace {

GammaData unit_gamma(long l = 1) {
    GammaData gd;
    gd.l = l;
    gd.cusp_volume_ratios = std::vector<double>{1.0};
    return gd;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(1, BernoulliConvention::Classical) == Rat(1, 6));
    CHECK(bernoulli(2, BernoulliConvention::Classical) == Rat(1, 30));
    CHECK(bernoulli(3, BernoulliConvention::Classical) == Rat(1, 42));
    CHECK(bernoulli(4, BernoulliConvention::Modern) == Rat(-1, 30));
    CHECK(bernoulli(1, BernoulliConvention::Modern) == Rat(-1, 2));
    for (int n = 3; n <= 19; n += 2) CHECK(bernoulli(n, BernoulliConvention::Modern) == 0);
    // Defining recurrence: sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1.
    for (int n = 1; n <= 20; ++n) {
        Rat acc(0);
        for (int k = 0; k <= n; ++k)
            acc += binomial(n + 1, k) * bernoulli(k, BernoulliConvention::Modern);
        CHECK(acc == 0);
    }
}

TEST_CASE("sphere areas") {
    CHECK(sphere_area(2) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-12));
    CHECK(sphere_area(4) == doctest::Approx(2.0 * std::numbers::pi * std::numbers::pi).epsilon(1e-12));
    for (int d = 1; d <= 12; ++d)
        CHECK(sphere_area(d + 2) ==
              doctest::Approx(sphere_area(d) * 2.0 * std::numbers::pi / d).epsilon(1e-12));
    // S^{4n-1} has area 2 pi^{2n} / (2n-1)!.
    for (int n = 1; n <= 3; ++n) {
        double fact = 1.0;
        for (int i = 2; i <= 2 * n - 1; ++i) fact *= i;
        CHECK(sphere_area(4 * n) ==
              doctest::Approx(2.0 * std::pow(std::numbers::pi, 2 * n) / fact).epsilon(1e-12));
    }
}

TEST_CASE("c2_gamma") {
    SUBCASE("single cusp with unit ratio at n = 1, classical") {
        auto gd = unit_gamma();
        CHECK(c2_gamma(gd, 1, BernoulliConvention::Classical) ==
              doctest::Approx(std::numbers::pi * std::numbers::pi / 3.0).epsilon(1e-12));
    }
    SUBCASE("empty list gives zero, absent list is an error") {
        GammaData gd;
        gd.cusp_volume_ratios = std::vector<double>{};
        CHECK(c2_gamma(gd, 1, BernoulliConvention::Classical) == 0.0);
        GammaData missing;
        CHECK_THROWS_AS(c2_gamma(missing, 1, BernoulliConvention::Classical), MissingGammaData);
    }
    SUBCASE("linear in the ratios") {
        GammaData gd;
        gd.cusp_volume_ratios = std::vector<double>{0.25, 0.75};
        auto single = unit_gamma();
        CHECK(c2_gamma(gd, 2, BernoulliConvention::Classical) ==
              doctest::Approx(c2_gamma(single, 2, BernoulliConvention::Classical)).epsilon(1e-12));
    }
}

TEST_CASE("epsilon_Rplus") {
    auto su21 = catalog_lookup("su21");
    REQUIRE(su21.rank_one.has_value());
    CHECK(epsilon_Rplus(*su21.rank_one, su21.pair) == 1);

    auto su41 = catalog_lookup("su41");
    CHECK(epsilon_Rplus(*su41.rank_one, su41.pair) == 1);

    auto su11 = catalog_lookup("su11");
    SUBCASE("sign flips with Z_0 when the noncompact positive count is odd") {
        RankOneData data = *su11.rank_one;
        data.z0 = wv({"1", "-1"});
        CHECK(epsilon_Rplus(data, su11.pair) == 1);
        data.z0 = wv({"-1", "1"});
        CHECK(epsilon_Rplus(data, su11.pair) == -1);
    }
    SUBCASE("vanishing pairing is degenerate") {
        RankOneData data = *su11.rank_one;
        data.z0 = wv({"1", "1"});
        CHECK_THROWS_AS(epsilon_Rplus(data, su11.pair), DegenerateZ0);
    }
    SUBCASE("absent Z_0 is not supported") {
        CHECK_THROWS_AS(epsilon_Rplus(*su11.rank_one, su11.pair), NotSupported);
    }
}

TEST_CASE("tau_n0_contribution") {
    SUBCASE("zero off the SU(2n,1) family") {
        for (const char* name : {"so41", "so61", "so21", "su11", "su31"}) {
            auto entry = catalog_lookup(name);
            DiracInput input(entry.pair, entry.pair.rho_n());
            GammaData gd;  // even an empty Gamma datum cannot be consulted
            CHECK(tau_n0_contribution(input, *entry.rank_one, gd,
                                      BernoulliConvention::Classical) == 0.0);
        }
    }
    SUBCASE("su(2,1) desk value composed from the component operations") {
        auto entry = catalog_lookup("su21");
        DiracInput input(entry.pair, entry.pair.rho_n());  // dim W = 1
        auto gd = unit_gamma();
        const double value =
            tau_n0_contribution(input, *entry.rank_one, gd, BernoulliConvention::Classical);
        // By hand: ||lambda_res|| * 2^0 * 3 / area(S^3) * C_2 * eps * dim W.
        const double by_parts = std::sqrt(0.5) * 1.0 * 3.0 / sphere_area(4) *
                                c2_gamma(gd, 1, BernoulliConvention::Classical) * 1.0 * 1.0;
        CHECK(value == doctest::Approx(by_parts).epsilon(1e-14));
        // The pi factors cancel to ||lambda_res|| * eps / 2.
        CHECK(value == doctest::Approx(std::sqrt(0.5) / 2.0).epsilon(1e-12));
    }
    SUBCASE("linear in cusp ratios and in dim W") {
        auto entry = catalog_lookup("su21");
        DiracInput one(entry.pair, entry.pair.rho_n());
        DiracInput two(entry.pair, entry.pair.rho_n() + wv({"1", "0", "-1"}));  // dim W = 2
        auto gd = unit_gamma();
        GammaData doubled = gd;
        doubled.cusp_volume_ratios = std::vector<double>{1.0, 1.0};
        const double base =
            tau_n0_contribution(one, *entry.rank_one, gd, BernoulliConvention::Classical);
        CHECK(tau_n0_contribution(one, *entry.rank_one, doubled, BernoulliConvention::Classical) ==
              doctest::Approx(2.0 * base).epsilon(1e-12));
        CHECK(tau_n0_contribution(two, *entry.rank_one, gd, BernoulliConvention::Classical) ==
              doctest::Approx(2.0 * base).epsilon(1e-12));
    }
    SUBCASE("highest-weight norm override changes the scale factor only") {
        auto entry = catalog_lookup("su21");
        WeightVec lambda = entry.pair.rho_n();
        DiracInput input(entry.pair, lambda);
        auto gd = unit_gamma();
        const double restricted =
            tau_n0_contribution(input, *entry.rank_one, gd, BernoulliConvention::Classical);
        const double hw = tau_n0_contribution(input, *entry.rank_one, gd,
                                              BernoulliConvention::Classical,
                                              LambdaNormSource::HighestWeight);
        const double lambda_norm = std::sqrt(to_double(entry.pair.form.inner(lambda, lambda)));
        CHECK(hw == doctest::Approx(restricted / std::sqrt(0.5) * lambda_norm).epsilon(1e-12));
    }
}

TEST_CASE("tau_lambda_contribution is identically zero") {
    CHECK(tau_lambda_contribution() == 0.0);
}

TEST_CASE("tau_res_contribution") {
    auto su21 = catalog_lookup("su21");
    SUBCASE("regular twist gives zero") {
        DiracInput input(su21.pair, su21.pair.rho_n());
        GammaData gd;
        CHECK(tau_res_contribution(input, gd) == 0.0);
    }
    SUBCASE("singular twist sums the supplied traces") {
        DiracInput input(su21.pair, wv({"1/2", "0", "-1/2"}));  // lambda + rho_c is singular
        GammaData gd;
        gd.residual_traces = std::vector<double>{0.5, -0.25};
        CHECK(tau_res_contribution(input, gd) == doctest::Approx(0.5).epsilon(1e-12));
        GammaData missing;
        CHECK_THROWS_AS(tau_res_contribution(input, missing), MissingGammaData);
    }
}

TEST_CASE("k_of_mu") {
    auto su21 = catalog_lookup("su21");
    const RankOneData& data = *su21.rank_one;
    CHECK(k_of_mu(WeightVec::zero(3), data) == 0);
    // lambda + rho_c at the minimal genuine twist is rho; k(rho) = 2.
    CHECK(k_of_mu(su21.pair.rho(), data) == 2);
    WeightVec mu = wv({"2", "-1", "0"});
    CHECK(k_of_mu(-mu, data) == -k_of_mu(mu, data));
    CHECK_THROWS_AS(k_of_mu(su21.pair.rho_c(), data), NonIntegralK);
}

TEST_CASE("tau_rem_contribution") {
    SUBCASE("real hyperbolic dimension >= 4 short-circuits to zero") {
        for (const char* name : {"so41", "so61"}) {
            auto entry = catalog_lookup(name);
            DiracInput input(entry.pair, entry.pair.rho_n());
            GammaData gd = unit_gamma(3);
            CHECK(tau_rem_contribution(input, *entry.rank_one, gd) == 0.0);
        }
    }
    SUBCASE("singular twist is not supported") {
        auto su21 = catalog_lookup("su21");
        DiracInput input(su21.pair, wv({"1/2", "0", "-1/2"}));
        CHECK_THROWS_AS(tau_rem_contribution(input, *su21.rank_one, unit_gamma()), NotSupported);
    }
    SUBCASE("su(1,1): trivial Weyl data leaves -l/2 times the k-sign") {
        auto su11 = catalog_lookup("su11");
        DiracInput input(su11.pair, wv({"1/2", "-1/2"}));
        for (long l = 0; l <= 3; ++l) {
            GammaData gd = unit_gamma(l);
            CHECK(tau_rem_contribution(input, *su11.rank_one, gd) ==
                  doctest::Approx(-0.5 * double(l)).epsilon(1e-12));
        }
    }
    SUBCASE("so(2,1) spinor twist") {
        auto so21 = catalog_lookup("so21");
        DiracInput input(so21.pair, wv({"1/2"}));
        CHECK(tau_rem_contribution(input, *so21.rank_one, unit_gamma()) ==
              doctest::Approx(-0.5).epsilon(1e-12));
    }
    SUBCASE("su(2,1) desk evaluation by composing the pieces") {
        auto su21 = catalog_lookup("su21");
        const RankOneData& data = *su21.rank_one;
        // lambda + rho_c = (2,-1,0): the two cosets carry opposite k-signs.
        DiracInput input(su21.pair, wv({"3/2", "-1/2", "0"}));
        const WeightVec mu = input.lambda + su21.pair.rho_c();
        REQUIRE(is_regular(mu, su21.pair));
        REQUIRE(sign_of(k_pairing(mu, data)) == 1);
        const double value = tau_rem_contribution(input, data, unit_gamma());
        // Hand composition: prefactor (+1) * 1/2 * l * eps * sum, eps = -1,
        // sum = det(e) sgn(2) * 1 + det(s12) sgn(-1) * 1 = 2.
        CHECK(epsilon_weight(mu, data, su21.pair) == -1);
        CHECK(value == doctest::Approx(0.5 * 1.0 * (-1.0) * 2.0).epsilon(1e-12));

        // A dominant twist with both k-signs positive cancels instead.
        DiracInput balanced(su21.pair, su21.pair.rho_n());
        CHECK(tau_rem_contribution(balanced, data, unit_gamma()) == 0.0);
    }
    SUBCASE("one wall crossing of R+_0 flips the sign") {
        auto su21 = catalog_lookup("su21");
        RankOneData flipped = *su21.rank_one;
        // Replace e2-e3 (positive index 0) by its negative (index 3).
        flipped.rplus0 = {3, 1, 2};
        DiracInput input(su21.pair, wv({"3/2", "-1/2", "0"}));
        const double base = tau_rem_contribution(input, *su21.rank_one, unit_gamma());
        const double crossed = tau_rem_contribution(input, flipped, unit_gamma());
        CHECK(crossed == doctest::Approx(-base).epsilon(1e-12));
    }
    SUBCASE("k vanishing on a coset is an ambiguous sign") {
        auto su21 = catalog_lookup("su21");
        RankOneData data = *su21.rank_one;
        data.zvec = wv({"0", "1", "0"});  // not aligned with any root
        DiracInput input(su21.pair, su21.pair.rho_n());
        CHECK_THROWS_AS(tau_rem_contribution(input, data, unit_gamma()), AmbiguousSign);
    }
    SUBCASE("prose subscript variant stays finite and differs in general") {
        auto su21 = catalog_lookup("su21");
        DiracInput input(su21.pair, wv({"3/2", "-1/2", "0"}));
        CHECK_NOTHROW(tau_rem_contribution(input, *su21.rank_one, unit_gamma(),
                                           RemSubscript::Prose));
    }
}
