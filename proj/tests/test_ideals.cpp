#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "qalg/ideals.hpp"

using namespace qalg;

namespace {

using Vec = std::vector<size_t>;

AlgP<Rationals> R32() {
    static AlgP<Rationals> a = from_monomial(fixtures::r32(), Rationals{});
    return a;
}

}  // namespace

TEST_CASE("build_context on the fixtures") {
    auto A = R32();
    SECTION("R32, E = {1}: dims 6 / 1 / 2 and B is the dual numbers") {
        auto ctx = build_context(A, std::vector<std::string>{"1"});
        CHECK(ctx.ideal_dim() == 6);
        CHECK(ctx.Abar->dim == 1);
        CHECK(ctx.B->dim == 2);
        CHECK(ctx.B->idem.size() == 1);  // local
        CHECK(ctx.B->labels == std::vector<std::string>{"e1", "a*b"});
        // x^2 = 0 in the corner: a*b composed with itself hits the relation
        size_t x = 1;
        for (size_t l = 0; l < ctx.B->dim; ++l)
            CHECK(ctx.B->field.is_zero(ctx.B->prod(x, x, l)));
    }
    SECTION("R32, E = {2}: symmetric dims") {
        auto ctx = build_context(A, std::vector<std::string>{"2"});
        CHECK(ctx.ideal_dim() == 6);
        CHECK(ctx.Abar->dim == 1);
        CHECK(ctx.B->dim == 2);
    }
    SECTION("A2, E = {2}: AeA = span{e2, a}") {
        auto A2 = from_monomial(fixtures::a2(), Rationals{});
        auto ctx = build_context(A2, std::vector<std::string>{"2"});
        CHECK(ctx.ideal_dim() == 2);
        CHECK(ctx.Abar->dim == 1);
        CHECK(ctx.B->dim == 1);
        CHECK(ctx.Abar->vertex_labels == std::vector<std::string>{"1"});
    }
    SECTION("E must be nonempty and in range") {
        CHECK_THROWS_AS(build_context(A, std::vector<size_t>{}), error);
        CHECK_THROWS_AS(build_context(A, std::vector<size_t>{7}), error);
    }
    SECTION("E = all vertices gives the zero quotient with a warning flag") {
        auto ctx = build_context(A, std::vector<size_t>{0, 1});
        CHECK(ctx.quotient_is_zero);
        CHECK(ctx.Abar->dim == 0);
        CHECK(ctx.ideal_dim() == 7);
    }
}

TEST_CASE("restriction to the corner") {
    auto A = R32();
    auto ctx1 = build_context(A, std::vector<size_t>{0});
    SECTION("restrict(Ae_v) is the projective B-module") {
        auto r = restrict_module(*projective(A, 0).mod, ctx1);
        CHECK(r->dim == 2);  // e1 P1 = {e1, a*b}
        CHECK(is_projective(r));
    }
    SECTION("restrict(S1) is the B-simple with radical acting as zero") {
        auto r = restrict_module(*simple(A, 0), ctx1);
        CHECK(r->dim == 1);
        CHECK(r->act(1).is_zero());  // the corner generator a*b acts as 0
        auto pd = proj_dim(r, 12);
        CHECK(pd.kind == DimVerdict::Kind::at_least);
        CHECK(pd.value == 13);
        REQUIRE(pd.cert.has_value());
        CHECK(*pd.cert == PeriodCert{0, 1});
    }
    SECTION("restrict kills modules supported away from E") {
        CHECK(restrict_module(*simple(A, 1), ctx1)->dim == 0);
    }
}

TEST_CASE("trace submodules") {
    auto A = R32();
    auto ctx1 = build_context(A, std::vector<size_t>{0});
    SECTION("trace of P1 is everything (top at vertex 1)") {
        auto P1 = projective(A, 0);
        auto tr = trace_submodule(P1.mod, ctx1);
        CHECK(tr.sub->dim == 4);
    }
    SECTION("trace of S2 vanishes") {
        CHECK(trace_submodule(simple(A, 1), ctx1).sub->dim == 0);
    }
    SECTION("trace of rad P1 is the dim-2 middle slice, quotient S2") {
        auto P1 = projective(A, 0);
        auto radp1 = submodule_from_columns(P1.mod, radical_span(*P1.mod)).sub;
        REQUIRE(loewy_layers(*radp1) == std::vector<Vec>{{0, 1}, {1, 0}, {0, 1}});
        auto tr = trace_submodule(radp1, ctx1);
        CHECK(tr.sub->dim == 2);
        CHECK(loewy_layers(*tr.sub) == std::vector<Vec>{{1, 0}, {0, 1}});
        auto quot = quotient_by_trace(radp1, ctx1);
        CHECK(quot->dim == 1);
        CHECK(rank(quot->act_idem(1)) == 1);  // it is S2
    }
}

TEST_CASE("in_add") {
    auto A = R32();
    auto ctx2 = build_context(A, std::vector<size_t>{1});
    auto P1 = projective(A, 0);
    CHECK(in_add(projective(A, 1).mod, ctx2));
    CHECK(!in_add(P1.mod, ctx2));
    auto radp1 = submodule_from_columns(P1.mod, radical_span(*P1.mod)).sub;
    CHECK(in_add(radp1, ctx2));  // rad P1 is isomorphic to P2
    CHECK(in_add(zero_module(A), ctx2));
}

TEST_CASE("P_e^k membership with route agreement") {
    auto A = R32();
    auto ctx1 = build_context(A, std::vector<size_t>{0});
    auto ctx2 = build_context(A, std::vector<size_t>{1});
    SECTION("projectives in add(Ae) pass every k") {
        for (size_t k : {size_t(0), size_t(3), size_t(8)})
            CHECK(pe_k_membership(projective(A, 1).mod, ctx2, k));
    }
    SECTION("S1 fails at k = 0 for E = {2}") {
        CHECK(!pe_k_membership(simple(A, 0), ctx2, 0));
    }
    SECTION("AeA for E = {1} passes through k = 12") {
        CHECK(pe_k_membership(ctx1.AeA_left, ctx1, 12));
    }
}

TEST_CASE("pe_infty_check verdicts") {
    auto A = R32();
    auto ctx1 = build_context(A, std::vector<size_t>{0});
    auto ctx2 = build_context(A, std::vector<size_t>{1});
    SECTION("the zero module is Proven") {
        CHECK(pe_infty_check(zero_module(A), ctx1, 12).verdict.is_proven());
    }
    SECTION("Ae1A: unknown at cutoff 12 with all degrees passing and a period cert") {
        auto rep = pe_infty_check(ctx1.AeA_left, ctx1, 12);
        CHECK(rep.verdict.is_unknown());
        CHECK(rep.verdict.degree == 12);
        CHECK(!rep.terminated);
        for (bool pass : rep.degree_passes) CHECK(pass);
        CHECK(rep.degree_passes.size() == 13);
        REQUIRE(rep.cert.has_value());
        CHECK(rep.cert->period == 1);
    }
    SECTION("S1 with E = {2} is refuted at degree 0") {
        auto rep = pe_infty_check(simple(A, 0), ctx2, 12);
        REQUIRE(rep.verdict.is_refuted());
        CHECK(rep.verdict.degree == 0);
    }
}

TEST_CASE("multiplication map and cps checks") {
    auto A = R32();
    SECTION("R32, E = {1}: iso holds, Tor vanishes, but no finite certificate") {
        auto ctx = build_context(A, std::vector<size_t>{0});
        CHECK(multiplication_map_check(ctx).iso);
        auto rep = cps_check(ctx, 12);
        CHECK(rep.verdict.is_unknown());
        for (size_t n = 1; n < rep.tor_dims.size(); ++n) CHECK(rep.tor_dims[n] == 0);
        CHECK(rep.pd_eA.kind == DimVerdict::Kind::at_least);
    }
    SECTION("R32, E = {2}: proven (eA is B-free here)") {
        auto ctx = build_context(A, std::vector<size_t>{1});
        auto rep = cps_check(ctx, 12);
        CHECK(rep.verdict.is_proven());
        CHECK(rep.pd_eA == DimVerdict::exactly(0));
    }
    SECTION("A2, E = {2}: proven") {
        auto A2 = from_monomial(fixtures::a2(), Rationals{});
        auto ctx = build_context(A2, std::vector<std::string>{"2"});
        CHECK(cps_check(ctx, 12).verdict.is_proven());
    }
}

TEST_CASE("strongly idempotent check") {
    auto A = R32();
    SECTION("R32, E = {1}: not refuted through cutoff 12") {
        auto ctx = build_context(A, std::vector<size_t>{0});
        auto rep = strongly_idempotent_check(ctx, 12);
        CHECK(!rep.verdict.is_refuted());
        CHECK(rep.verdict.is_unknown());
    }
    SECTION("R32, E = {2}: proven via both routes") {
        auto ctx = build_context(A, std::vector<size_t>{1});
        auto rep = strongly_idempotent_check(ctx, 12);
        CHECK(rep.verdict.is_proven());
        CHECK(rep.pe.verdict.is_proven());
        CHECK(rep.cps.verdict.is_proven());
    }
    SECTION("A2, E = {2}: proven, AeA is projective") {
        auto A2 = from_monomial(fixtures::a2(), Rationals{});
        auto ctx = build_context(A2, std::vector<std::string>{"2"});
        CHECK(is_projective(ctx.AeA_left));
        CHECK(strongly_idempotent_check(ctx, 12).verdict.is_proven());
    }
}

TEST_CASE("ext comparison over the quotient") {
    auto A = R32();
    auto ctx1 = build_context(A, std::vector<size_t>{0});
    SECTION("degree 0 always agrees; S2 agrees everywhere (E = {1})") {
        auto S2 = simple(A, 1);
        auto rows = ext_comparison(ctx1, S2, S2, 6);
        for (const auto& r : rows) {
            CHECK(r.equal);
            INFO("degree " << r.degree);
        }
    }
    SECTION("non-annihilated inputs are rejected") {
        CHECK_THROWS_AS(ext_comparison(ctx1, simple(A, 0), simple(A, 0), 4), error);
    }
}

TEST_CASE("bar module round trips") {
    auto A = R32();
    auto ctx1 = build_context(A, std::vector<size_t>{0});
    auto S2 = simple(A, 1);
    auto bar = to_bar_module(*S2, ctx1);
    CHECK(bar->dim == 1);
    auto lifted = lift_bar_module(*bar, ctx1);
    CHECK(lifted->dim == 1);
    for (size_t b = 0; b < A->dim; ++b) CHECK(lifted->act(b) == S2->act(b));
}
