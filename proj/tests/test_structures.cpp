#include <gtest/gtest.h>

#include <numeric>

#include "check.hpp"
#include "gen.hpp"
#include "helpers.hpp"
#include "models.hpp"
#include "wha/constructions.hpp"
#include "wha/errors.hpp"
#include "wha/registry.hpp"
#include "wha/structures.hpp"

using namespace wha;

namespace {

const Field Q = Field::rationals();

std::uint32_t col_of(const Space& a, const std::string& label) {
    for (std::uint32_t i = 0; i < a.dim(); ++i)
        if (a.label(i) == label) return i;
    throw std::runtime_error("no label " + label);
}

// value of m on a basis vector, as (label, coefficient) pairs
std::map<std::string, std::string> image(const LinMap& m, const std::string& label) {
    std::map<std::string, std::string> out;
    for (const auto& [row, v] : m.column(col_of(m.src(), label))) out[m.tgt().label(row)] = v.str();
    return out;
}

using Img = std::map<std::string, std::string>;

// Frobenius inputs of the square construction, symmetric and braided
struct SquareCase {
    std::string name;
    FrobeniusData R;
};

std::vector<SquareCase> square_cases() {
    std::vector<std::uint32_t> z4 = {0, 1, 2, 3}, z2 = {0, 1};
    return {
        {"Q1", functions_frobenius(1, Q)},
        {"Q2", functions_frobenius(2, Q)},
        {"QZ2", group_frobenius(cyclic_group(2), Q)},
        {"Z2_signed", group_frobenius(cyclic_group(2), th::z2_q(), z2)},
        {"Z4_F5", group_frobenius(cyclic_group(4), th::z4_f5(), z4)},
    };
}

}  // namespace

// ---- monoids, comonoids -------------------------------------------------

TEST(Monoid, GroundFieldAndG2) {
    auto k = functions_frobenius(1, Q);
    EXPECT_TRUE(Passes(check_monoid(k.monoid)));
    EXPECT_TRUE(Passes(check_comonoid(k.comonoid)));
    auto g2 = category_algebra(walking_isomorphism(), Q);
    EXPECT_TRUE(Passes(check_monoid(g2.monoid())));
    EXPECT_TRUE(Passes(check_comonoid(g2.comonoid())));
}

TEST(Monoid, CorruptedCompositionBreaksAssociativity) {
    auto p = walking_isomorphism();
    p.compose[{"f", "finv"}] = "f";  // passes neither endpoints nor associativity
    EXPECT_FALSE(validate_category(p).all_pass());
    // corrupt the algebra directly: mu(f (x) f) = f
    auto w = category_algebra(walking_isomorphism(), Q);
    const auto& a = w.carrier;
    const std::uint32_t f = col_of(a, "f"), n = a.dim();
    MonoidData bad{a, w.mu + LinMap::from_triples(Q, a * a, a, {{f, f * n + f, Scalar::one(Q)}}), w.eta};
    auto r = check_monoid(bad);
    const Item* assoc = r.find("monoid.associativity");
    ASSERT_NE(assoc, nullptr);
    EXPECT_EQ(assoc->verdict, Verdict::fail);
    EXPECT_TRUE(assoc->witness);
}

// ---- weak bimonoids ----------------------------------------------------

TEST(WeakBimonoid, CategoryAlgebrasPass) {
    for (const auto& p : {walking_isomorphism(), walking_arrow(), cyclic_groups_disjoint({2, 3}), models::chain(3)}) {
        auto w = category_algebra(p, Q);
        EXPECT_TRUE(Passes(check_weak_bimonoid(w)));
        EXPECT_TRUE(Passes(check_st_properties(w)));
    }
}

WeakBimonoidData with_opposite_comultiplication(const WeakBimonoidData& w) {
    return WeakBimonoidData::make(w.chi, w.carrier, w.mu, w.eta, compose(braiding(w.carrier, w.carrier, w.chi), w.delta),
                                  w.epsilon);
}

TEST(WeakBimonoid, OppositeComultiplicationBreaksCounitAxiomWhenBraided) {
    std::vector<std::uint32_t> z4 = {0, 1, 2, 3};
    auto w = frobenius_square(group_frobenius(cyclic_group(4), th::z4_f5(), z4)).bimonoid;
    ASSERT_TRUE(Passes(check_weak_bimonoid(w)));
    auto r = check_weak_bimonoid(with_opposite_comultiplication(w));
    EXPECT_EQ(r.find("weak.counit.plain")->verdict, Verdict::fail);
    EXPECT_EQ(r.find("weak.mult_comult")->verdict, Verdict::fail);
    for (const auto& it : r.items)
        if (it.verdict == Verdict::fail) EXPECT_TRUE(it.witness) << it.id;
}

TEST(WeakBimonoid, OppositeComultiplicationIsHarmlessWhenSymmetric) {
    // in a symmetric category the co-opposite of a weak bimonoid is again one
    EXPECT_TRUE(Passes(check_weak_bimonoid(with_opposite_comultiplication(category_algebra(walking_isomorphism(), Q)))));
    EXPECT_TRUE(Passes(check_weak_bimonoid(with_opposite_comultiplication(frobenius_square(functions_frobenius(2, Q)).bimonoid))));
}

TEST(WeakBimonoid, ScaledStructureMapsAreCaught) {
    auto w = category_algebra(walking_isomorphism(), Q);
    const Scalar two = Scalar::from_int(Q, 2);
    auto eps2 = check_weak_bimonoid(WeakBimonoidData::make(w.chi, w.carrier, w.mu, w.eta, w.delta, w.epsilon.scaled(two)));
    EXPECT_EQ(eps2.find("weak.counit.plain")->verdict, Verdict::fail);
    EXPECT_EQ(eps2.find("weak.mult_comult")->verdict, Verdict::pass);
    auto eta2 = check_weak_bimonoid(WeakBimonoidData::make(w.chi, w.carrier, w.mu, w.eta.scaled(two), w.delta, w.epsilon));
    EXPECT_EQ(eta2.find("weak.unit.plain")->verdict, Verdict::fail);
    EXPECT_EQ(eta2.find("weak.unit.crossed")->verdict, Verdict::fail);
    auto delta2 = check_weak_bimonoid(WeakBimonoidData::make(w.chi, w.carrier, w.mu, w.eta, w.delta.scaled(two), w.epsilon));
    EXPECT_EQ(delta2.find("weak.mult_comult")->verdict, Verdict::fail);
}

TEST(WeakBimonoid, SourceAndTargetOnG2) {
    auto w = category_algebra(walking_isomorphism(), Q);
    EXPECT_EQ(image(w.s, "f"), (Img{{"id_A", "1"}}));
    EXPECT_EQ(image(w.t, "f"), (Img{{"id_B", "1"}}));
    EXPECT_EQ(image(w.s, "id_A"), (Img{{"id_A", "1"}}));
    EXPECT_EQ(image(w.t, "id_A"), (Img{{"id_A", "1"}}));
    // globular identity on f: t(s(f)) = t(1_A) = 1_A = s(f)
    EXPECT_EQ(image(compose(w.t, w.s), "f"), image(w.s, "f"));
    EXPECT_EQ(image(w.mu, "f|finv"), (Img{{"id_A", "1"}}));
    EXPECT_EQ(image(w.mu, "finv|f"), (Img{{"id_B", "1"}}));
    // unit is the sum of identities
    EXPECT_EQ(image(w.eta, "1"), (Img{{"id_A", "1"}, {"id_B", "1"}}));
}

TEST(WeakBimonoid, HopfAlgebraCollapsesSourceAndTarget) {
    // Q[Z/2] with delta(g) = g (x) g: an ordinary Hopf algebra
    auto p = cyclic_groups_disjoint({2});
    auto w = category_algebra(p, Q);
    const LinMap ee = compose(w.eta, w.epsilon);
    EXPECT_EQ(w.s, ee);
    EXPECT_EQ(w.t, ee);
    EXPECT_EQ(w.r, ee);
    EXPECT_TRUE(Passes(check_strict_bialgebra_laws(w)));
}

TEST(WeakBimonoid, WeaknessWitnessesOnG2) {
    auto w = category_algebra(walking_isomorphism(), Q);
    auto r = check_strict_bialgebra_laws(w);
    for (const char* id : {"strict.counit_mult", "strict.comult_unit", "strict.counit_unit"}) {
        const Item* it = r.find(id);
        ASSERT_NE(it, nullptr) << id;
        EXPECT_EQ(it->verdict, Verdict::fail) << id;
        EXPECT_TRUE(it->witness) << id;
    }
    EXPECT_EQ(r.find("strict.mult_comult")->verdict, Verdict::pass);
    // eps eta = 2, not 1
    EXPECT_EQ(r.find("strict.counit_unit")->witness->lhs, "2");
}

TEST(WeakBimonoid, SquareOfFrobeniusPassesEverything) {
    for (const auto& c : square_cases()) {
        auto sq = frobenius_square_full(c.R);
        const auto& w = sq.hopf.bimonoid;
        EXPECT_TRUE(Passes(check_monoid(w.monoid(), w.chi))) << c.name;
        EXPECT_TRUE(Passes(check_comonoid(w.comonoid(), w.chi))) << c.name;
        EXPECT_TRUE(Passes(check_weak_bimonoid(w))) << c.name;
        EXPECT_TRUE(Passes(check_st_properties(w))) << c.name;
        EXPECT_EQ(sq.r_closed, w.r) << c.name;
        EXPECT_EQ(sq.t_closed, w.t) << c.name;
        EXPECT_TRUE(Passes(check_weak_hopf(sq.hopf))) << c.name;
    }
}

// ---- convolution and antipode ------------------------------------------

TEST(Antipode, ConvolutionOnG2) {
    auto h = groupoid_algebra(walking_isomorphism(), Q);
    const auto& w = h.bimonoid;
    const LinMap one = LinMap::identity(Q, w.carrier);
    EXPECT_EQ(image(convolution(h.nu, one, w), "f"), (Img{{"id_B", "1"}}));
    EXPECT_EQ(image(convolution(one, one, w), "f"), Img{});
    EXPECT_EQ(convolution(h.nu, one, w), w.t);
    EXPECT_THROW(convolution(w.mu, one, w), DomainMismatch);
}

TEST(Antipode, TrivialHopfMonoid) {
    auto k = frobenius_square(functions_frobenius(1, Q));
    auto nu = find_antipode(k.bimonoid);
    ASSERT_TRUE(nu);
    EXPECT_EQ(*nu, LinMap::identity(Q, k.bimonoid.carrier));
    const LinMap ee = compose(k.bimonoid.eta, k.bimonoid.epsilon);
    EXPECT_EQ(convolution(ee, ee, k.bimonoid), ee);
}

TEST(Antipode, G2InverseMap) {
    auto h = groupoid_algebra(walking_isomorphism(), Q);
    auto nu = find_antipode(h.bimonoid);
    ASSERT_TRUE(nu);
    EXPECT_EQ(image(*nu, "f"), (Img{{"finv", "1"}}));
    EXPECT_EQ(image(*nu, "id_A"), (Img{{"id_A", "1"}}));
    EXPECT_EQ(compose(*nu, *nu), LinMap::identity(Q, h.bimonoid.carrier));
    EXPECT_TRUE(Passes(check_weak_hopf(h)));
}

TEST(Antipode, WalkingArrowHasNone) {
    auto w = category_algebra(walking_arrow(), Q);
    auto res = search_antipode(w);
    EXPECT_FALSE(res.nu);
    EXPECT_TRUE(res.witness);
    EXPECT_FALSE(res.reason.empty());
}

TEST(Antipode, IdentityMutationFailsFirstAxiom) {
    auto h = groupoid_algebra(walking_isomorphism(), Q);
    h.nu = LinMap::identity(Q, h.bimonoid.carrier);
    h.nu_inv.reset();
    auto r = check_weak_hopf(h);
    const Item* it = r.find("antipode.left");
    ASSERT_NE(it, nullptr);
    EXPECT_EQ(it->verdict, Verdict::fail);
    ASSERT_TRUE(it->witness);
}

TEST(AntipodeProperty, GroupoidsGetTheirInverseTable) {
    for (int trial = 0; trial < 12; ++trial) {
        auto p = models::random_groupoid();
        auto w = category_algebra(p, Q);
        auto nu = find_antipode(w);
        ASSERT_TRUE(nu) << trial;
        EXPECT_EQ(*nu, inverse_table_antipode(p, w));
        WeakHopfData h{w, *nu, std::nullopt};
        EXPECT_TRUE(Passes(check_weak_hopf(h)));
    }
}

TEST(AntipodeProperty, ChainsHaveNone) {
    for (std::uint32_t n = 2; n <= 4; ++n) {
        auto w = category_algebra(models::chain(n), Q);
        EXPECT_TRUE(Passes(check_weak_bimonoid(w)));
        EXPECT_FALSE(find_antipode(w)) << n;
    }
}

TEST(AntipodeProperty, FoundIffChecksPass) {
    for (const auto& c : square_cases()) {
        auto h = frobenius_square(c.R);
        auto nu = find_antipode(h.bimonoid);
        ASSERT_TRUE(nu) << c.name;
        EXPECT_EQ(*nu, h.nu) << c.name;
    }
}

// ---- Frobenius ---------------------------------------------------------

TEST(Frobenius, FunctionsAreSeparable) {
    for (std::uint32_t n : {0u, 1u, 2u, 3u}) {
        auto fr = functions_frobenius(n, Q);
        EXPECT_TRUE(Passes(check_separable_frobenius(fr)));
        EXPECT_TRUE(is_separable(fr));
    }
}

TEST(Frobenius, GroupAlgebras) {
    auto qz2 = group_frobenius(cyclic_group(2), Q);
    EXPECT_TRUE(Passes(check_monoid(qz2.monoid)));
    EXPECT_TRUE(Passes(check_comonoid(qz2.comonoid)));
    EXPECT_TRUE(Passes(check_separable_frobenius(qz2)));
    EXPECT_THROW(group_frobenius(cyclic_group(2), Field::prime(2)), BadCharacteristic);
    auto z3 = group_frobenius(cyclic_group(3), Field::prime(5));
    EXPECT_TRUE(Passes(check_separable_frobenius(z3)));
}

TEST(Frobenius, ZeroCounitBreaksPairingOnly) {
    auto fr = functions_frobenius(2, Q);
    fr.comonoid.epsilon = LinMap(Q, fr.carrier(), Space::unit());
    auto r = check_frobenius(fr);
    EXPECT_EQ(r.find("frobenius.condition")->verdict, Verdict::pass);
    EXPECT_EQ(r.find("frobenius.pairing.left")->verdict, Verdict::fail);
    EXPECT_TRUE(r.find("frobenius.pairing.left")->witness);
}

TEST(Frobenius, InverseFormula) {
    auto R = functions_frobenius(2, Q);
    const LinMap id = LinMap::identity(Q, R.carrier());
    EXPECT_EQ(frobenius_inverse(id, R, R), id);
    const LinMap swap = th::mat(Q, R.carrier(), R.carrier(), {{0, 1}, {1, 0}});
    EXPECT_EQ(frobenius_inverse(swap, R, R), swap);
    const LinMap collapse = th::mat(Q, R.carrier(), R.carrier(), {{1, 1}, {0, 0}});
    EXPECT_THROW(frobenius_inverse(collapse, R, R), NotFrobeniusMorphism);
}

TEST(FrobeniusProperty, GroupAutomorphismsInvert) {
    // x -> x^k on Z/n is an algebra and coalgebra automorphism for k a unit mod n
    for (std::uint32_t n : {3u, 4u, 5u}) {
        auto R = group_frobenius(cyclic_group(n), Q);
        for (std::uint32_t k = 1; k < n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
            for (std::uint32_t x = 0; x < n; ++x) rows[(x * k) % n][x] = 1;
            LinMap f = th::mat(Q, R.carrier(), R.carrier(), rows);
            LinMap g = frobenius_inverse(f, R, R);
            EXPECT_EQ(compose(g, f), LinMap::identity(Q, R.carrier()));
        }
    }
}

// ---- constructions -------------------------------------------------------

TEST(Constructions, CategoryValidation) {
    EXPECT_TRUE(validate_category(walking_arrow()).all_pass());
    EXPECT_FALSE(is_valid_groupoid(walking_arrow()));
    EXPECT_TRUE(is_valid_groupoid(walking_isomorphism()));
    auto p = models::chain(4);
    p.compose[{"a23", "a02"}] = "a13";  // wrong endpoints
    auto r = validate_category(p);
    EXPECT_EQ(r.find("category.composition")->verdict, Verdict::fail);
    EXPECT_TRUE(r.find("category.composition")->witness);
    EXPECT_THROW(category_algebra(p, Q), InvalidPresentation);
    EXPECT_THROW(groupoid_algebra(walking_arrow(), Q), NotAGroupoid);
}

TEST(Constructions, BrokenAssociativityIsWitnessed) {
    // one object, x with x x = y, x y = x, y x = y, y y = y: not associative
    FiniteCategoryPresentation p{{"o"}, {{"x", "o", "o"}, {"y", "o", "o"}}, {}, std::nullopt};
    p.compose[{"x", "x"}] = "y";
    p.compose[{"x", "y"}] = "x";
    p.compose[{"y", "x"}] = "y";
    p.compose[{"y", "y"}] = "y";
    auto r = validate_category(p);
    const Item* a = r.find("category.associativity");
    ASSERT_NE(a, nullptr);
    EXPECT_EQ(a->verdict, Verdict::fail);
    ASSERT_TRUE(a->witness);
}

TEST(Constructions, Dimensions) {
    EXPECT_EQ(category_algebra(walking_isomorphism(), Q).carrier.dim(), 4u);
    EXPECT_EQ(category_algebra(walking_arrow(), Q).carrier.dim(), 3u);
    auto w = category_algebra(walking_arrow(), Q);
    EXPECT_EQ(image(w.mu, "f|f"), Img{});
    EXPECT_EQ(category_algebra(cyclic_groups_disjoint({2, 3}), Q).carrier.dim(), 5u);
    EXPECT_EQ(frobenius_square(functions_frobenius(2, Q)).bimonoid.carrier.dim(), 4u);
    auto empty = category_algebra(FiniteCategoryPresentation{}, Q);
    EXPECT_EQ(empty.carrier.dim(), 0u);
    EXPECT_TRUE(Passes(check_weak_bimonoid(empty)));
}

TEST(Constructions, SquareRequiresSeparable) {
    auto R = functions_frobenius(2, Q);
    R.comonoid.delta = R.comonoid.delta.scaled(Scalar::from_int(Q, 2));
    EXPECT_THROW(frobenius_square(R), NotSeparable);
}

TEST(Constructions, SquareOfQ2HasSwapAntipode) {
    auto h = frobenius_square(functions_frobenius(2, Q));
    const auto& a = h.bimonoid.carrier;
    EXPECT_EQ(image(h.nu, "e0|e1"), (Img{{"e1|e0", "1"}}));
    EXPECT_EQ(compose(h.nu, *h.nu_inv), LinMap::identity(Q, a));
}
