#include <doctest.h>

#include "enhcat/fcategory.hpp"
#include "fixtures.hpp"

using namespace enhcat;

TEST_CASE("builders produce valid enhanced 2-categories") {
    CHECK_NOTHROW(terminal_fcategory());
    CHECK_NOTHROW(loose_arrow_shape());
    CHECK_NOTHROW(tight_arrow_shape());
    CHECK_NOTHROW(discrete_fcategory(3));
    CHECK_NOTHROW(fixtures::chain3_max_fcat());
    CHECK_NOTHROW(fixtures::two_cell_shape());
}

TEST_CASE("tightness bookkeeping") {
    auto la = loose_arrow_shape();
    int A = la->object_index("A"), B = la->object_index("B");
    auto f = la->cell1_by_name(A, B, "f");
    CHECK(!la->cell1_tight(f));
    CHECK(la->cell1_tight(la->unit(A)));
    auto ta = tight_arrow_shape();
    CHECK(ta->cell1_tight(ta->cell1_by_name(0, 1, "f")));
}

TEST_CASE("pasting: identities, vertical, horizontal, interchange") {
    auto s = fixtures::chain3_max_fcat();
    auto hom = s->hom(0, 0);
    Cell2 a{0, 0, hom.loose->morphism_index("a")};
    Cell2 b{0, 0, hom.loose->morphism_index("b")};
    Cell2 ida{0, 0, hom.loose->identity(hom.loose->object_index("0"))};

    // vertical: id then a
    CHECK(paste_vertical(*s, a, ida).mor == a.mor);
    CHECK(paste_vertical(*s, b, a).mor == hom.loose->morphism_index("ba"));
    CHECK_THROWS_AS(paste_vertical(*s, a, b), NotComposable);

    // horizontal identity whiskering: 1-cell "2" tensor a  (max: stays at 2)
    Cell1 two{0, 0, hom.loose->object_index("2")};
    auto wh = s->whisker_l(two, a);
    CHECK(s->cell2_identity(wh)); // max(2, -) collapses a to the identity at 2

    // interchange on the 4-cell instance: (b.a) tensor (b.a) both ways
    auto ba = paste_vertical(*s, b, a);
    auto lhs = paste_horizontal(*s, ba, ba);
    auto rhs = paste_vertical(*s, paste_horizontal(*s, b, b), paste_horizontal(*s, a, a));
    CHECK(lhs.mor == rhs.mor);

    // pasting two identity 2-cells is an identity
    CHECK(s->cell2_identity(paste_horizontal(*s, ida, ida)));
}

TEST_CASE("enhanced functor identity validates; unit breakage rejected") {
    auto s = fixtures::chain3_max_fcat();
    CHECK_NOTHROW(FFunctor::identity(s));
    auto id = FFunctor::identity(s);
    CHECK(id.on1({0, 0, 1}).ob == 1);
}

TEST_CASE("strict enhanced naturality (FNat)") {
    auto s = fixtures::chain3_max_fcat();
    auto idf = FFunctor::identity(s);
    CHECK_NOTHROW(FNat::identity(idf));
    CHECK(fnat_violations(FNat::identity(idf)).empty());
    // in the commutative max-monoid every central component is natural
    FNat central;
    central.source_functor = idf;
    central.target_functor = idf;
    central.comp = {s->hom(0, 0).tight->object_index("1")};
    CHECK(fnat_violations(central).empty());

    // a left-zero monoid fixture: a.x = a, so the component "a" fails
    // naturality against the 1-cell "b"
    auto d3 = cats::discrete(3); // objects d0 (unit), d1 (a), d2 (b)
    auto lz = fixtures::one_object_fcat(
        "leftzero", d3,
        [](const std::string& g, const std::string& f) { return g == "d0" ? f : g; },
        [&](const std::string& g, const std::string& f) {
            auto c = cats::discrete(3);
            int gi = c->morphism_index(g), fi = c->morphism_index(f);
            int s2 = c->src(gi) == 0 ? c->src(fi) : c->src(gi);
            return c->morphism_name(c->identity(s2));
        },
        "d0", {"d0", "d1", "d2"});
    auto idlz = FFunctor::identity(lz);
    FNat bad;
    bad.source_functor = idlz;
    bad.target_functor = idlz;
    bad.comp = {lz->hom(0, 0).tight->object_index("d1")};
    CHECK(!fnat_violations(bad).empty());
}

// Model-level fixtures over the arrow shapes.
namespace {

struct ArrowModels {
    FCatPtr shape;
    Diagram m, n;
};

// M(f) picks object 1, N(f) picks object 0 in the walking arrow; values
// terminal at A, walking arrow at B. Admits a lax but not pseudo component.
ArrowModels lax_fixture(bool tight_arrow) {
    auto shape = tight_arrow ? tight_arrow_shape() : loose_arrow_shape();
    auto pt = FObject::chordate(cats::terminal());
    auto arr = FObject::chordate(cats::walking_arrow());
    auto pick1 = FiniteFunctor::constant(cats::terminal(), cats::walking_arrow(), 1);
    auto pick0 = FiniteFunctor::constant(cats::terminal(), cats::walking_arrow(), 0);
    return {shape, fixtures::arrow_diagram(shape, pt, arr, pick1),
            fixtures::arrow_diagram(shape, pt, arr, pick0)};
}

LooseTransformation make_phi(const ArrowModels& fx, Weakness w, int comp_at_f) {
    LooseTransformation phi;
    phi.wprime = Weakness::Strict;
    phi.w = w;
    phi.comp1 = {FiniteFunctor::identity(fx.m.ob[0].loose),
                 FiniteFunctor::identity(fx.m.ob[1].loose)};
    const int n = 2;
    phi.comp2.resize(n * n);
    phi.comp2[0] = {NaturalTransformation::identity(phi.comp1[0])};
    phi.comp2[3] = {NaturalTransformation::identity(phi.comp1[1])};
    // 2-component at f: N(f).phi_A => phi_B.M(f): pick0 => pick1
    NaturalTransformation t;
    t.source_functor = w == Weakness::Colax ? fx.m.at1({0, 1, 0}) : fx.n.at1({0, 1, 0});
    t.target_functor = w == Weakness::Colax ? fx.n.at1({0, 1, 0}) : fx.m.at1({0, 1, 0});
    t.comp = {comp_at_f};
    phi.comp2[1] = {t};
    return phi;
}

} // namespace

TEST_CASE("identity transformation is valid and tight for every weakness") {
    for (bool ta : {false, true}) {
        auto fx = lax_fixture(ta);
        for (auto w : {Weakness::Strict, Weakness::Pseudo, Weakness::Lax, Weakness::Colax}) {
            auto id = LooseTransformation::identity(fx.m, Weakness::Strict, w);
            auto rep = check_loose_natural(id, fx.m, fx.m);
            CAPTURE(ta);
            CHECK(rep.valid());
            CHECK(rep.tight);
        }
    }
}

TEST_CASE("lax component accepted at a loose arrow, rejected at a tight one") {
    auto arrow = cats::walking_arrow();
    int a_mor = arrow->morphism_index("a");

    auto loose_fx = lax_fixture(false);
    auto philoose = make_phi(loose_fx, Weakness::Lax, a_mor);
    CHECK(check_loose_natural(philoose, loose_fx.m, loose_fx.n).valid());

    // same data with w = p must fail: the component is not invertible
    auto phip = make_phi(loose_fx, Weakness::Pseudo, a_mor);
    auto repp = check_loose_natural(phip, loose_fx.m, loose_fx.n);
    CHECK(!repp.valid());

    // over the tight arrow the (s, w) discipline forces an identity
    auto tight_fx = lax_fixture(true);
    auto phitight = make_phi(tight_fx, Weakness::Lax, a_mor);
    auto rept = check_loose_natural(phitight, tight_fx.m, tight_fx.n);
    CHECK(!rept.valid());
    bool mentions_f = false;
    for (auto& v : rept.violations) mentions_f = mentions_f || v.find("'f'") != std::string::npos;
    CHECK(mentions_f);
}

TEST_CASE("2-cell coherence is enforced") {
    // shape with a 2-cell t : f => g (f tight, g loose); values in the
    // parallel pair so M(t) and N(t) can genuinely differ
    auto shape = fixtures::two_cell_shape();
    auto pt = FObject::chordate(cats::terminal());
    auto pp = FObject::chordate(cats::parallel_pair());
    auto ppc = cats::parallel_pair();
    auto pick0 = FiniteFunctor::constant(cats::terminal(), ppc, 0);
    auto pick1 = FiniteFunctor::constant(cats::terminal(), ppc, 1);

    const int n = 2;
    int fi = shape->hom(0, 1).loose->object_index("f");
    int gi = shape->hom(0, 1).loose->object_index("g");
    auto build = [&](const std::string& tcomp) {
        std::vector<FObject> ob = {pt, pp};
        std::vector<std::vector<FiniteFunctor>> on1(n * n);
        std::vector<std::vector<NaturalTransformation>> on2(n * n);
        auto idpt = FiniteFunctor::identity(pt.loose);
        auto idpp = FiniteFunctor::identity(pp.loose);
        on1[0] = {idpt};
        on2[0] = {NaturalTransformation::identity(idpt)};
        on1[3] = {idpp};
        on2[3] = {NaturalTransformation::identity(idpp)};
        on1[1].resize(2);
        on1[1][fi] = pick0;
        on1[1][gi] = pick1;
        NaturalTransformation tt;
        tt.source_functor = pick0;
        tt.target_functor = pick1;
        tt.comp = {ppc->morphism_index(tcomp)};
        on2[1].resize(3);
        on2[1][shape->hom(0, 1).loose->morphism_index("t")] = tt;
        on2[1][shape->hom(0, 1).loose->morphism_index("1f")] = NaturalTransformation::identity(pick0);
        on2[1][shape->hom(0, 1).loose->morphism_index("1g")] = NaturalTransformation::identity(pick1);
        return Diagram::make(shape, ob, on1, on2);
    };
    auto M = build("u");
    auto Nsame = build("u");
    auto Ndiff = build("v");

    auto id = LooseTransformation::identity(M, Weakness::Strict, Weakness::Lax);
    CHECK(check_loose_natural(id, M, Nsame).valid());
    // M(t) = u but N(t) = v: the identity components cannot be coherent at t
    auto rep = check_loose_natural(id, M, Ndiff);
    CHECK(!rep.valid());
    bool mentions_t = false;
    for (auto& v : rep.violations) mentions_t = mentions_t || v.find("'t'") != std::string::npos;
    CHECK(mentions_t);
}

TEST_CASE("classification: tight / fit / loose") {
    // fit: 2-natural with a loose 1-component
    auto shape = terminal_fcategory();
    auto pt = cats::terminal();
    auto chord = FObject::chordate(pt);
    auto loosept = FObject::make(cats::empty(), pt,
                                 FiniteFunctor::make(cats::empty(), pt, {}, {}));
    auto M = Diagram::constant(shape, chord);
    auto N = Diagram::constant(shape, loosept);
    LooseTransformation phi;
    phi.wprime = Weakness::Strict;
    phi.w = Weakness::Lax;
    phi.comp1 = {FiniteFunctor::identity(pt)};
    phi.comp2 = {{NaturalTransformation::identity(FiniteFunctor::identity(pt))}};
    CHECK(classify_transformation(phi, M, M) == TransformationLevel::Tight);
    CHECK(classify_transformation(phi, M, N) == TransformationLevel::Fit);

    // loose: non-identity 2-component at a loose 1-cell
    auto fx = lax_fixture(false);
    auto phil = make_phi(fx, Weakness::Lax, cats::walking_arrow()->morphism_index("a"));
    CHECK(classify_transformation(phil, fx.m, fx.n) == TransformationLevel::Loose);

    // invalid data throws
    auto broken = make_phi(fx, Weakness::Strict, cats::walking_arrow()->morphism_index("a"));
    CHECK_THROWS_AS(classify_transformation(broken, fx.m, fx.n), InvalidTransformation);
}

TEST_CASE("enumeration of loose transformations is deterministic and validated") {
    auto fx = lax_fixture(false);
    auto all_l = enumerate_loose_transformations(fx.m, fx.n, Weakness::Lax);
    auto all_s = enumerate_loose_transformations(fx.m, fx.n, Weakness::Strict);
    // lax: phi_B in {const0, const1, id} each admits exactly one 2-component;
    // strict: only phi_B = const0 equalizes pick0 and phi_B . pick1
    CHECK(all_l.size() == 3);
    CHECK(all_s.size() == 1);
    for (auto& t : all_l) CHECK(check_loose_natural(t, fx.m, fx.n).valid());
    // strict transformations form a subsequence of the lax ones
    auto self_s = enumerate_loose_transformations(fx.m, fx.m, Weakness::Strict);
    auto self_l = enumerate_loose_transformations(fx.m, fx.m, Weakness::Lax);
    CHECK(!self_s.empty());
    CHECK(self_l.size() >= self_s.size());
}

TEST_CASE("modifications: identity valid, axiom enforced") {
    auto fx = lax_fixture(false);
    auto phis = enumerate_loose_transformations(fx.m, fx.n, Weakness::Lax);
    REQUIRE(!phis.empty());
    auto mods = enumerate_modifications(phis[0], phis[0], fx.m, fx.n);
    CHECK(!mods.empty());
    for (auto& mu : mods)
        CHECK(modification_violations(mu, phis[0], phis[0], fx.m, fx.n).empty());
}

TEST_CASE("duality: lax transformations correspond to colax ones on the co-dual") {
    auto fx = lax_fixture(false);
    auto lax = enumerate_loose_transformations(fx.m, fx.n, Weakness::Lax);
    auto co_shape = co_dual(fx.shape);
    auto co_m = co_dual(fx.m, co_shape);
    auto co_n = co_dual(fx.n, co_shape);
    auto colax_direct = enumerate_loose_transformations(co_m, co_n, Weakness::Colax);
    CHECK(lax.size() == colax_direct.size());
    for (auto& t : lax) {
        auto tc = co_dual(t, co_m, co_n);
        CHECK(check_loose_natural(tc, co_m, co_n).valid());
    }
}

TEST_CASE("compose_loose yields valid transformations") {
    auto fx = lax_fixture(false);
    auto phis = enumerate_loose_transformations(fx.m, fx.n, Weakness::Lax);
    REQUIRE(!phis.empty());
    auto idm = LooseTransformation::identity(fx.n, Weakness::Strict, Weakness::Lax);
    auto c = compose_loose(idm, phis[0], fx.m, fx.n, fx.n);
    CHECK(check_loose_natural(c, fx.m, fx.n).valid());
}
