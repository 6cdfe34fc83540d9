#include <gtest/gtest.h>

#include "gen.hpp"
#include "wha/errors.hpp"
#include "wha/linalg.hpp"
#include "wha/linmap.hpp"

using namespace wha;

namespace {

const Field Q = Field::rationals();

Space plain(int dim, const std::string& p = "x") {
    std::vector<std::string> l;
    for (int i = 0; i < dim; ++i) l.push_back(p + std::to_string(i));
    return Space::atomic(l);
}

LinMap mat(Field f, const Space& src, const Space& tgt, const std::vector<std::vector<long>>& rows) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> e;
    for (std::uint32_t i = 0; i < rows.size(); ++i)
        for (std::uint32_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j]) e.emplace_back(i, j, Scalar::from_int(f, rows[i][j]));
    return LinMap::from_triples(f, src, tgt, e);
}

// independent dense product over mpq_class
std::vector<std::vector<mpq_class>> dense(const LinMap& m) {
    std::vector<std::vector<mpq_class>> d(m.tgt().dim(), std::vector<mpq_class>(m.src().dim()));
    for (std::uint32_t j = 0; j < m.src().dim(); ++j)
        for (const auto& [r, v] : m.column(j)) d[r][j] = v.to_mpq();
    return d;
}

Bicharacter z4_f5() {
    const Field F5 = Field::prime(5);
    auto g = std::make_shared<const GradingGroup>(std::vector<std::uint32_t>{4});
    return Bicharacter::from_generators(F5, g, {{Scalar::from_int(F5, 2)}});
}

Bicharacter z2_q() {
    auto g = std::make_shared<const GradingGroup>(std::vector<std::uint32_t>{2});
    return Bicharacter::from_generators(Q, g, {{Scalar::from_int(Q, -1)}});
}

}  // namespace

TEST(Scalar, RationalCanonicalForm) {
    auto a = Scalar::from_fraction(Q, 6, -4);
    EXPECT_EQ(a.str(), "-3/2");
    EXPECT_EQ(a * Scalar::from_fraction(Q, -2, 3), Scalar::one(Q));
    EXPECT_TRUE((a - a).is_zero());
}

TEST(Scalar, OverflowFallsBackToGmpAndBack) {
    auto big = Scalar::from_int(Q, 1LL << 62);
    auto sq = big * big;
    EXPECT_EQ(sq.str(), mpz_class(mpz_class(1) << 124).get_str());
    EXPECT_EQ(sq / big, big);
    EXPECT_TRUE((sq / big).str() == std::to_string(1LL << 62));
}

TEST(Scalar, PrimeField) {
    const Field F5 = Field::prime(5);
    EXPECT_EQ((Scalar::from_int(F5, 2) * Scalar::from_int(F5, 3)).str(), "1");
    EXPECT_EQ(Scalar::parse(F5, "1/2").str(), "3");
    EXPECT_THROW(Field::prime(6), Error);
    EXPECT_THROW(Field::parse("Fp:2147483648"), Error);
    EXPECT_EQ(Field::parse("Fp:7").characteristic(), 7u);
}

TEST(Scalar, MixingFieldsThrows) {
    EXPECT_THROW(Scalar::one(Q) + Scalar::one(Field::prime(3)), FieldMismatch);
}

TEST(Compose, IdentityLaw) {
    auto x = plain(3);
    auto f = mat(Q, x, plain(2, "y"), {{1, 2, 0}, {0, -1, 5}});
    EXPECT_EQ(compose(LinMap::identity(Q, f.tgt()), f), f);
    EXPECT_EQ(compose(f, LinMap::identity(Q, x)), f);
}

TEST(Compose, SwapIsInvolution) {
    auto x = plain(2);
    auto f = mat(Q, x, x, {{0, 1}, {1, 0}});
    EXPECT_EQ(compose(f, f), LinMap::identity(Q, x));
}

TEST(Compose, PrimeFieldProduct) {
    const Field F5 = Field::prime(5);
    auto x = plain(1);
    auto c = compose(mat(F5, x, x, {{2}}), mat(F5, x, x, {{3}}));
    EXPECT_EQ(c.at(0, 0), Scalar::one(F5));
}

TEST(Compose, DomainMismatch) {
    auto f = mat(Q, plain(2), plain(2), {{1, 0}, {0, 1}});
    auto g = mat(Q, plain(3), plain(3), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_THROW(compose(g, f), DomainMismatch);
}

TEST(Compose, MatchesDenseOracle) {
    for (int trial = 0; trial < 20; ++trial) {
        auto g0 = trivial_group();
        auto a = gen::graded_space("a", gen::uniform(0, 4), g0);
        auto b = gen::graded_space("b", gen::uniform(0, 4), g0);
        auto c = gen::graded_space("c", gen::uniform(0, 4), g0);
        auto f = gen::graded_map(Q, a, b), g = gen::graded_map(Q, b, c);
        auto df = dense(f), dg = dense(g), dgf = dense(compose(g, f));
        for (std::uint32_t i = 0; i < c.dim(); ++i)
            for (std::uint32_t j = 0; j < a.dim(); ++j) {
                mpq_class s = 0;
                for (std::uint32_t k = 0; k < b.dim(); ++k) s += dg[i][k] * df[k][j];
                EXPECT_EQ(s, dgf[i][j]);
            }
    }
}

TEST(Tensor, IdentityAndShape) {
    auto x = plain(2), y = plain(3, "y");
    EXPECT_EQ(tensor(LinMap::identity(Q, x), LinMap::identity(Q, y)), LinMap::identity(Q, x * y));
    auto f = mat(Q, plain(3, "s"), plain(2, "t"), {{1, 1, 0}, {0, 2, 1}});
    auto g = mat(Q, plain(1, "u"), plain(3, "v"), {{1}, {0}, {4}});
    auto fg = tensor(f, g);
    EXPECT_EQ(fg.tgt().dim(), 6u);
    EXPECT_EQ(fg.src().dim(), 3u);
    // entry ((i',j'),(i,j)) = f[i',i] g[j',j], left factor major
    EXPECT_EQ(fg.at(1 * 3 + 2, 2 * 1 + 0), Scalar::from_int(Q, 4));
}

TEST(Tensor, InterchangeLawOnRandomMaps) {
    auto g0 = trivial_group();
    for (int trial = 0; trial < 20; ++trial) {
        auto a = gen::graded_space("a", 2, g0), b = gen::graded_space("b", 2, g0), c = gen::graded_space("c", 2, g0);
        auto d = gen::graded_space("d", 2, g0), e = gen::graded_space("e", 2, g0), h = gen::graded_space("h", 2, g0);
        auto f = gen::graded_map(Q, b, c), f2 = gen::graded_map(Q, a, b);
        auto g = gen::graded_map(Q, e, h), g2 = gen::graded_map(Q, d, e);
        EXPECT_EQ(compose(tensor(f, g), tensor(f2, g2)), tensor(compose(f, f2), compose(g, g2)));
    }
}

TEST(Braiding, TrivialGroupIsSwap) {
    Bicharacter chi(Q);
    auto x = plain(2), y = plain(3, "y");
    auto c = braiding(x, y, chi);
    for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 3; ++j) EXPECT_TRUE(c.at(j * 2 + i, i * 3 + j).is_one());
    EXPECT_EQ(c.nnz(), 6u);
}

TEST(Braiding, OddLineSign) {
    auto chi = z2_q();
    auto odd = Space::atomic({"o"}, {1}, chi.group());
    auto c = braiding(odd, odd, chi);
    EXPECT_EQ(c.at(0, 0), Scalar::from_int(Q, -1));
}

TEST(Braiding, NonSymmetricOverF5) {
    auto chi = z4_f5();
    const Field F5 = chi.field();
    auto l = Space::atomic({"v"}, {1}, chi.group());
    auto cc = compose(braiding(l, l, chi), braiding(l, l, chi));
    // 2 * 2 = 4 != 1 in F_5
    EXPECT_EQ(cc.at(0, 0), Scalar::from_int(F5, 4));
    EXPECT_NE(cc, LinMap::identity(F5, l * l));
    EXPECT_FALSE(chi.symmetric_braiding());
}

TEST(Braiding, GradeOutsideGroup) {
    auto chi = z2_q();
    auto g3 = std::make_shared<const GradingGroup>(std::vector<std::uint32_t>{3});
    auto x = Space::atomic({"a"}, {1}, g3);
    EXPECT_THROW(braiding(x, x, chi), GradeOutsideGroup);
}

TEST(Bicharacter, RejectsNonMultiplicativeTable) {
    auto g = std::make_shared<const GradingGroup>(std::vector<std::uint32_t>{2});
    std::vector<Scalar> t{Scalar::one(Q), Scalar::one(Q), Scalar::one(Q), Scalar::from_int(Q, 2)};
    EXPECT_THROW(Bicharacter(Q, g, t), Error);
}

class BraidingProperties : public ::testing::TestWithParam<int> {};

TEST_P(BraidingProperties, HexagonNaturalityInverse) {
    const auto chi = GetParam() == 0 ? z2_q() : z4_f5();
    const Field f = chi.field();
    for (int trial = 0; trial < 15; ++trial) {
        auto x = gen::graded_space("x", gen::uniform(1, 3), chi.group());
        auto y = gen::graded_space("y", gen::uniform(1, 3), chi.group());
        auto z = gen::graded_space("z", gen::uniform(1, 3), chi.group());
        auto ix = LinMap::identity(f, x), iy = LinMap::identity(f, y), iz = LinMap::identity(f, z);
        // c_{X,Y(x)Z} = (1 (x) c_{X,Z})(c_{X,Y} (x) 1)
        EXPECT_EQ(braiding(x, y * z, chi), compose(tensor(iy, braiding(x, z, chi)), tensor(braiding(x, y, chi), iz)));
        // c_{X(x)Y,Z} = (c_{X,Z} (x) 1)(1 (x) c_{Y,Z})
        EXPECT_EQ(braiding(x * y, z, chi), compose(tensor(braiding(x, z, chi), iy), tensor(ix, braiding(y, z, chi))));
        EXPECT_EQ(compose(braiding_inv(x, y, chi), braiding(x, y, chi)), LinMap::identity(f, x * y));
        EXPECT_EQ(compose(braiding(x, y, chi), braiding_inv(x, y, chi)), LinMap::identity(f, y * x));
        auto x2 = gen::graded_space("p", gen::uniform(1, 3), chi.group());
        auto y2 = gen::graded_space("q", gen::uniform(1, 3), chi.group());
        auto fm = gen::graded_map(f, x, x2), gm = gen::graded_map(f, y, y2);
        EXPECT_EQ(compose(braiding(x2, y2, chi), tensor(fm, gm)), compose(tensor(gm, fm), braiding(x, y, chi)));
    }
}

INSTANTIATE_TEST_SUITE_P(Bicharacters, BraidingProperties, ::testing::Values(0, 1));

TEST(Dual, OneDimensional) {
    auto d = dual_space(Q, plain(1));
    EXPECT_TRUE(d.ev.at(0, 0).is_one());
    EXPECT_TRUE(d.coev.at(0, 0).is_one());
}

TEST(Dual, TriangleEqualities) {
    auto x = plain(3);
    auto d = dual_space(Q, x);
    auto ix = LinMap::identity(Q, x), ixs = LinMap::identity(Q, d.dual);
    EXPECT_EQ(compose(tensor(d.ev, ixs), tensor(ixs, d.coev)), ixs);
    EXPECT_EQ(compose(tensor(ix, d.ev), tensor(d.coev, ix)), ix);
}

TEST(Dual, GradedTriangleHasNoSigns) {
    auto chi = z2_q();
    auto x = Space::atomic({"e", "o"}, {0, 1}, chi.group());
    auto d = dual_space(Q, x);
    d.ev.check_grades();
    d.coev.check_grades();
    auto ix = LinMap::identity(Q, x);
    EXPECT_EQ(compose(tensor(ix, d.ev), tensor(d.coev, ix)), ix);
}

TEST(SplitIdempotent, Identity) {
    auto x = plain(2);
    auto s = split_idempotent(LinMap::identity(Q, x));
    EXPECT_EQ(s.image.dim(), 2u);
    EXPECT_EQ(compose(s.retract, s.section), LinMap::identity(Q, s.image));
}

TEST(SplitIdempotent, Zero) {
    auto x = plain(2);
    auto s = split_idempotent(LinMap(Q, x, x));
    EXPECT_EQ(s.image.dim(), 0u);
}

TEST(SplitIdempotent, RankOneProjection) {
    auto x = plain(2);
    auto e = mat(Q, x, x, {{1, 1}, {0, 0}});
    auto s = split_idempotent(e);
    EXPECT_EQ(s.image.dim(), 1u);
    EXPECT_EQ(compose(s.section, s.retract), e);
    EXPECT_TRUE(compose(s.retract, s.section).at(0, 0).is_one());
}

TEST(SplitIdempotent, RejectsNonIdempotent) {
    auto x = plain(2);
    EXPECT_THROW(split_idempotent(mat(Q, x, x, {{2, 0}, {0, 0}})), NotIdempotent);
}

TEST(Equalizer, Cases) {
    auto x = plain(2);
    auto id = LinMap::identity(Q, x);
    EXPECT_EQ(equalizer(id, id).object.dim(), 2u);
    EXPECT_EQ(equalizer(id, LinMap(Q, x, x)).object.dim(), 0u);
    auto f = mat(Q, x, x, {{1, -1}, {0, 0}});
    auto e = equalizer(f, LinMap(Q, x, x));
    ASSERT_EQ(e.object.dim(), 1u);
    EXPECT_EQ(e.incl.at(0, 0), e.incl.at(1, 0));
    EXPECT_TRUE(compose(f, e.incl).is_zero());
}

TEST(Equalizer, MaximalOnRandomMaps) {
    auto g0 = trivial_group();
    for (int trial = 0; trial < 10; ++trial) {
        auto a = gen::graded_space("a", 4, g0), b = gen::graded_space("b", 3, g0);
        auto f = gen::graded_map(Q, a, b), g = gen::graded_map(Q, a, b);
        auto e = equalizer(f, g);
        EXPECT_EQ(compose(f, e.incl), compose(g, e.incl));
        EXPECT_EQ(rank(e.incl), e.object.dim());
        EXPECT_EQ(e.object.dim() + rank(f - g), a.dim());
    }
}

TEST(SolveAffine, CertificateOnInconsistentSystem) {
    Dense m(Q, 2, 1);
    m(0, 0) = Scalar::one(Q);
    m(1, 0) = Scalar::one(Q);
    auto s = solve_affine(m, {Scalar::one(Q), Scalar::zero(Q)});
    ASSERT_FALSE(s.particular);
    ASSERT_EQ(s.certificate.size(), 2u);
    EXPECT_TRUE((s.certificate[0] + s.certificate[1]).is_zero());
}

TEST(Inverse, RandomInvertibleAndSingular) {
    const Space x = gen::graded_space("x", 4, std::make_shared<const GradingGroup>(std::vector<std::uint32_t>{2}));
    for (int trial = 0; trial < 20; ++trial) {
        const LinMap m = gen::graded_map(Q, x, x);
        const auto inv = inverse(m);
        const bool full = rank(m) == 4;
        ASSERT_EQ(inv.has_value(), full) << trial;
        if (full) {
            EXPECT_EQ(compose(*inv, m), LinMap::identity(Q, x));
            EXPECT_EQ(compose(m, *inv), LinMap::identity(Q, x));
        }
    }
    const Field F7 = Field::prime(7);
    const Space y = Space::atomic({"y0", "y1"});
    auto two = LinMap::identity(F7, y).scaled(Scalar::from_int(F7, 2));
    EXPECT_EQ(*inverse(two), LinMap::identity(F7, y).scaled(Scalar::from_int(F7, 4)));
}

TEST(Purity, RepeatedEvaluationIsIdentical) {
    auto g0 = trivial_group();
    auto a = gen::graded_space("a", 3, g0), b = gen::graded_space("b", 3, g0);
    auto f = gen::graded_map(Q, a, b), g = gen::graded_map(Q, b, a);
    EXPECT_EQ(compose(g, f).columns(), compose(g, f).columns());
}
