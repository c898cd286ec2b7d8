#include <doctest.h>

#include <map>

#include "delpezzo/relations.hpp"
#include "delpezzo/verify.hpp"

using namespace dp;

namespace {

Rationals Q;

PointConfiguration<Rationals> config_q(int r, std::vector<long> params) {
    Vec<Rationals> v;
    for (long p : params) v.push_back(Q.from_long(p));
    return PointConfiguration<Rationals>::standard(Q, r, v);
}

std::uint64_t reduce(const PrimeField& f, const mpq_class& x) {
    mpz_class p(static_cast<unsigned long>(f.modulus()));
    mpz_class num = x.get_num() % p, den = x.get_den() % p;
    if (num < 0) num += p;
    return f.div(num.get_ui(), den.get_ui());
}

}  // namespace

TEST_CASE("ideal sizes and block shapes for small r") {
    auto rs4 = full_ideal(config_q(4, {}));
    CHECK(rs4.total() == 5);
    CHECK(rs4.blocks.size() == 5);
    for (const auto& b : rs4.blocks) {
        CHECK(b.ruling.n == 1);
        CHECK(b.kernel.size() == b.ruling.monomials.size() - 2);
    }

    auto rs5 = full_ideal(config_q(5, {2, 3}));
    CHECK(rs5.total() == 20);
    CHECK(rs5.blocks.size() == 10);

    auto rs6 = full_ideal(config_q(6, {2, 3, 5, 7}));
    CHECK(rs6.total() == 81);
    CHECK(rs6.blocks.size() == 27);

    CHECK_THROWS_AS(full_ideal(config_q(3, {})), Error);
}

TEST_CASE("product matrices have rank n + 1") {
    auto cfg = config_q(5, {2, 3});
    auto forms = generator_forms(cfg);
    for (const auto& rl : enumerate_rulings(5, 1)) {
        auto m = product_matrix(Q, rl, forms);
        CHECK(m.size() == rl.monomials.size());
        CHECK(rank(Q, m) == 2);
    }
}

TEST_CASE("kernel rows are relations and units are not") {
    auto cfg = config_q(5, {2, 3});
    auto forms = generator_forms(cfg);
    for (const auto& block : full_ideal(cfg).blocks) {
        for (const auto& row : block.kernel)
            CHECK(span_contains(Q, block.ruling, row, forms));
        Vec<Rationals> unit(block.ruling.monomials.size(), Q.zero());
        unit[0] = Q.one();
        CHECK_FALSE(span_contains(Q, block.ruling, unit, forms));
        // membership is linear: twice a relation is still one
        auto doubled = block.kernel[0];
        for (auto& c : doubled) c = Q.mul(c, Q.from_long(2));
        CHECK(span_contains(block.ruling, doubled, cfg));
    }
}

TEST_CASE("span_contains rejects a length mismatch") {
    auto cfg = config_q(4, {});
    auto forms = generator_forms(cfg);
    auto rl = enumerate_rulings(4, 1).front();
    CHECK_THROWS_AS(span_contains(Q, rl, Vec<Rationals>(2, Q.zero()), forms), Error);
}

TEST_CASE("relations vanish along the variety") {
    auto cfg = config_q(5, {2, 3});
    auto forms = generator_forms(cfg);
    auto rs = full_ideal(cfg);
    for (std::uint64_t seed : {7u, 99u}) {
        auto val = sample_variety_point(cfg, forms, seed);
        for (const auto& block : rs.blocks)
            for (const auto& row : block.kernel)
                CHECK(Q.is_zero(evaluate_relation(Q, block.ruling, row, val.xi)));
    }
}

TEST_CASE("reduction mod p commutes with the kernel computation") {
    PrimeField F(32003);
    auto cfg_q = config_q(5, {2, 3});
    Vec<PrimeField> params{F.from_long(2), F.from_long(3)};
    auto cfg_p = PointConfiguration<PrimeField>::standard(F, 5, params);

    auto rs_q = full_ideal(cfg_q);
    auto rs_p = full_ideal(cfg_p);
    REQUIRE(rs_q.blocks.size() == rs_p.blocks.size());
    for (std::size_t b = 0; b < rs_q.blocks.size(); ++b) {
        const auto& bq = rs_q.blocks[b];
        const auto& bp = rs_p.blocks[b];
        CHECK(bq.ruling.cls == bp.ruling.cls);
        REQUIRE(bq.kernel.size() == bp.kernel.size());
        for (std::size_t i = 0; i < bq.kernel.size(); ++i)
            for (std::size_t j = 0; j < bq.kernel[i].size(); ++j)
                CHECK(reduce(F, bq.kernel[i][j]) == bp.kernel[i][j]);
    }
}

TEST_CASE("a rank mismatch raises DegeneracyError with both ranks") {
    auto cfg = config_q(4, {});
    auto forms = generator_forms(cfg);
    auto rl = enumerate_rulings(4, 1).front();
    rl.n = 2;  // demands rank 3 of a rank-2 system
    try {
        relations_for_ruling(Q, rl, forms);
        FAIL("expected DegeneracyError");
    } catch (const DegeneracyError& e) {
        CHECK(e.ruling_class == rl.cls);
        CHECK(e.expected_rank == 3);
        CHECK(e.measured_rank == 2);
    }
}

TEST_CASE("generator forms line up with the generator list") {
    auto cfg = config_q(8, {2, 3, 5, 7, 13, 17, 19, 23});
    auto forms = generator_forms(cfg);
    auto gens = generators(8);
    REQUIRE(forms.size() == 242);
    for (std::size_t i = 0; i < forms.size(); ++i)
        CHECK(forms[i].degree == gens[i].cls.h());
}
