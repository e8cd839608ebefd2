#include "doctest.h"
#include "helpers.hpp"
#include "orbindex/errors.hpp"

#include <complex>
#include <map>
#include <random>

using namespace orbindex;
using testutil::wv;

namespace {

LaurentChar product_character(const DiracInput& input, const LeviData& levi) {
    const SymmetricPair& base = input.pair;
    auto w_k = enumerate_weyl(base.compact_subsystem(), base.form);
    auto w_char = irr_character(input.lambda, base.compact_positive_vectors(), w_k, base.rho_c(),
                                base.form);
    return knm_spin_character(base, levi) * w_char;
}

// Independent branching oracle for a levi whose compact part is a single A1
// {+-beta}: split weights into strings along beta and count string drops.
std::vector<DecompTerm> a1_branching_oracle(const LaurentChar& chi, const WeightVec& beta,
                                            const BilinearForm& form) {
    // j(mu) = 2 (mu, beta) / (beta, beta); transverse part tau = mu - j/2 beta.
    std::map<WeightVec, std::map<long, long long>> strings;
    for (const auto& [mu, c] : chi.terms()) {
        Rat j = 2 * form.inner(mu, beta) / form.inner(beta, beta);
        long jj = to_long(j);
        WeightVec tau = mu - Rat(jj, 2) * beta;
        strings[tau][jj] += c;
    }
    std::vector<DecompTerm> out;
    for (const auto& [tau, fiber] : strings) {
        for (const auto& [j, c] : fiber) {
            if (j < 0) continue;
            auto next = fiber.find(j + 2);
            long long drop = c - (next == fiber.end() ? 0 : next->second);
            if (drop != 0) out.push_back(DecompTerm{tau + Rat(j, 2) * beta, drop});
        }
    }
    std::sort(out.begin(), out.end(), [](const DecompTerm& a, const DecompTerm& b) {
        return compare_lex(a.lambda_U, b.lambda_U) < 0;
    });
    return out;
}

}  // namespace

TEST_CASE("knm_spin_character") {
    auto su21 = catalog_lookup("su21");
    SUBCASE("levi = G leaves nothing to spin") {
        CHECK(knm_spin_character(su21.pair, su21.levi("g")) == LaurentChar::one(3));
    }
    SUBCASE("torus levi spins every compact positive root") {
        auto chi = knm_spin_character(su21.pair, su21.levi("t"));
        CHECK(chi.coeff(wv({"1/2", "-1/2", "0"})) == 1);
        CHECK(chi.coeff(wv({"-1/2", "1/2", "0"})) == -1);
    }
    SUBCASE("so41 short-root levi gives the two-factor four-term product") {
        auto so41 = catalog_lookup("so41");
        auto chi = knm_spin_character(so41.pair, so41.levi("short_a1"));
        CHECK(chi.terms().size() == 4);
        long long abs_dim = 0;
        for (const auto& [w, c] : chi.terms()) abs_dim += std::abs(c);
        CHECK(abs_dim == 4);  // ungraded spinor dimension 2^{|S|}
        CHECK(chi.coeff(wv({"1", "0"})) == 1);  // extreme weight (1/2)(e1-e2) + (1/2)(e1+e2)
    }
}

TEST_CASE("mU_decomposition") {
    auto su21 = catalog_lookup("su21");
    DiracInput input(su21.pair, wv({"3/2", "1/2", "-2"}));

    SUBCASE("levi = G decomposes the irreducible as itself") {
        auto terms = mU_decomposition(input, su21.levi("g"));
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].lambda_U == input.lambda);
        CHECK(terms[0].mult == 1);
    }
    SUBCASE("torus levi lists the signed weights of the product character") {
        auto terms = mU_decomposition(input, su21.levi("t"));
        auto chi = product_character(input, su21.levi("t"));
        REQUIRE(terms.size() == chi.terms().size());
        for (const auto& t : terms) CHECK(chi.coeff(t.lambda_U) == t.mult);
    }
    SUBCASE("non-maximal levi is rejected") {
        CHECK_THROWS_AS(mU_decomposition(input, su21.levi("min")), RequiresMaximal);
    }
}

TEST_CASE("A1-in-A2 branching matches the string-counting oracle") {
    auto su31 = catalog_lookup("su31");
    const WeightVec beta = wv({"1", "-1", "0", "0"});  // compact A1 of the levi
    for (const auto& lambda : {su31.pair.rho_n(), su31.pair.rho_n() + wv({"1", "0", "0", "-1"}),
                               su31.pair.rho_n() + wv({"1", "1", "0", "-2"})}) {
        DiracInput input(su31.pair, lambda);
        auto terms = mU_decomposition(input, su31.levi("a1"));
        auto oracle = a1_branching_oracle(product_character(input, su31.levi("a1")), beta,
                                          su31.pair.form);
        REQUIRE(terms.size() == oracle.size());
        for (size_t i = 0; i < terms.size(); ++i) {
            CHECK(terms[i].lambda_U == oracle[i].lambda_U);
            CHECK(terms[i].mult == oracle[i].mult);
        }
    }
}

TEST_CASE("branching round-trip is exact for every catalog levi") {
    for (const char* name : {"su11", "su21", "su31", "su22", "su41", "su32", "so21", "so41", "so61"}) {
        auto entry = catalog_lookup(name);
        DiracInput input(entry.pair, entry.pair.rho_n());
        for (const auto& levi : entry.levis) {
            if (!levi.maximal) continue;
            auto m = levi_pair(entry.pair, levi);
            auto w_km = enumerate_weyl(m.compact_subsystem(), m.form);
            auto km_positives = m.compact_positive_vectors();
            auto terms = mU_decomposition(input, levi);
            LaurentChar rebuilt;
            for (const auto& t : terms) {
                auto piece = irr_character(t.lambda_U, km_positives, w_km, m.rho_c(), m.form);
                piece *= t.mult;
                rebuilt += piece;
            }
            CHECK(rebuilt == product_character(input, levi));
            // Dimension consistency at the identity.
            long long dim_sum = 0;
            for (const auto& t : terms)
                dim_sum += t.mult * weyl_dim(t.lambda_U, km_positives, m.rho_c(), m.form);
            CHECK(dim_sum == product_character(input, levi).dimension());
        }
    }
}

TEST_CASE("higher_pairing") {
    auto su21 = catalog_lookup("su21");
    DiracInput input(su21.pair, wv({"3/2", "1/2", "-2"}));

    SUBCASE("non-maximal levi pairs to zero") {
        ElementDescriptor e;
        e.kind = ElementDescriptor::Kind::Central;
        e.torus = TorusElement{WeightVec::zero(3)};
        CHECK(higher_pairing(input, su21.levi("min"), e) == std::complex<double>(0.0, 0.0));
    }
    SUBCASE("hyperbolic-in-M pairs to zero") {
        ElementDescriptor h;
        h.kind = ElementDescriptor::Kind::Hyperbolic;
        CHECK(higher_pairing(input, su21.levi("g"), h) == std::complex<double>(0.0, 0.0));
    }
    SUBCASE("levi = G reduces to the plain orbital values") {
        RawElementSpec central{"central", wv({"1", "0", "0"})};
        auto ce = classify_element(su21.pair, central);
        CHECK(std::abs(higher_pairing(input, su21.levi("g"), ce) - tau_central(input, ce)) == 0.0);

        ElementDescriptor el;
        el.kind = ElementDescriptor::Kind::Elliptic;
        el.torus = TorusElement{wv({"1/5", "1/5", "-2/5"})};
        auto direct = tau_elliptic(input, *el.torus).value;
        CHECK(std::abs(higher_pairing(input, su21.levi("g"), el) - direct) < 1e-12);
    }
    SUBCASE("torus levi: every element is central in M and the value is the character sum") {
        ElementDescriptor el;
        el.kind = ElementDescriptor::Kind::Elliptic;
        el.torus = TorusElement{wv({"1/7", "2/7", "-3/7"})};
        auto value = higher_pairing(input, su21.levi("t"), el);
        std::complex<double> expected = 0.0;
        for (const auto& t : mU_decomposition(input, su21.levi("t")))
            expected += double(t.mult) * eval_exp(t.lambda_U, *el.torus);
        CHECK(std::abs(value - expected) < 1e-12);
    }
}

TEST_CASE("elliptic-in-M value matches the dense-powers character ratio") {
    // For a levi with K cap M = T and gamma regular in M the value is
    // (-1)^{dim(M/(K cap M))/2} spin(k/(k cap m))(g) chi_W(g) / spin(p cap m)(g).
    std::mt19937 rng(424242);
    struct Case { const char* group; const char* levi; };
    for (auto c : {Case{"su21", "nc_a1"}, Case{"so41", "short_a1"}}) {
        auto entry = catalog_lookup(c.group);
        DiracInput input(entry.pair, entry.pair.rho_n());
        const LeviData& levi = entry.levi(c.levi);
        auto m = levi_pair(entry.pair, levi);
        auto w_k = enumerate_weyl(entry.pair.compact_subsystem(), entry.pair.form);
        auto w_char = irr_character(input.lambda, entry.pair.compact_positive_vectors(), w_k,
                                    entry.pair.rho_c(), entry.pair.form);
        auto spin_knm = knm_spin_character(entry.pair, levi);
        auto spin_pm = spin_graded_character(m.noncompact_positive_vectors(), entry.pair.rank);
        const double sign = (m.dim_GK / 2) % 2 == 0 ? 1.0 : -1.0;
        for (int i = 0; i < 8; ++i) {
            auto g = testutil::random_regular_torsion(rng, entry.pair);
            auto value = higher_pairing(input, levi, ElementDescriptor{
                                            ElementDescriptor::Kind::Elliptic, TorusElement{g.X}});
            auto expected = sign * eval_character(spin_knm, g) * eval_character(w_char, g) /
                            eval_character(spin_pm, g);
            CHECK(std::abs(value - expected) < 1e-9);
        }
    }
}

TEST_CASE("higher pairing is invariant under the Weyl group of K cap M") {
    auto so41 = catalog_lookup("so41");
    DiracInput input(so41.pair, so41.pair.rho_n());
    const LeviData& levi = so41.levi("compact_a1");
    auto m = levi_pair(so41.pair, levi);
    auto w_km = enumerate_weyl(m.compact_subsystem(), m.form);
    std::mt19937 rng(31337);
    for (int i = 0; i < 6; ++i) {
        auto g = testutil::random_regular_torsion(rng, so41.pair);
        ElementDescriptor el{ElementDescriptor::Kind::Elliptic, TorusElement{g.X}};
        auto base = higher_pairing(input, levi, el);
        for (const auto& w : w_km.elements) {
            ElementDescriptor moved{ElementDescriptor::Kind::Elliptic, TorusElement{w.apply(g.X)}};
            CHECK(std::abs(higher_pairing(input, levi, moved) - base) < 1e-9);
        }
    }
}
