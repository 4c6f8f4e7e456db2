#ifndef ENHCAT_TEST_FIXTURES_HPP
#define ENHCAT_TEST_FIXTURES_HPP

#include <functional>
#include <string>
#include <vector>

#include "enhcat/fcategory.hpp"

namespace enhcat::fixtures {

/// One-object enhanced 2-category whose hom is `homcat` with the strict
/// monoidal structure `tensor` (a functor homcat x homcat -> homcat given by
/// an object-name table) and unit object `unit`. `tight` lists the tight
/// 1-cells; it must contain the unit and be closed under tensor.
inline FCatPtr one_object_fcat(
    const std::string& label, const CatPtr& homcat,
    const std::function<std::string(const std::string&, const std::string&)>& tensor_ob,
    const std::function<std::string(const std::string&, const std::string&)>& tensor_mor,
    const std::string& unit, const std::vector<std::string>& tight) {
    std::vector<int> tight_idx;
    for (const auto& t : tight) tight_idx.push_back(homcat->object_index(t));
    std::sort(tight_idx.begin(), tight_idx.end());
    auto sub = full_subcategory(homcat, tight_idx);
    auto hom = FObject::make(sub.cat, homcat, sub.inclusion);
    auto prod = product_fobject(hom, hom);
    std::vector<int> ob(prod.ob.loose->num_objects());
    std::vector<int> mor(prod.ob.loose->num_morphisms());
    for (int p = 0; p < prod.ob.loose->num_objects(); ++p) {
        auto [g, f] = prod.loose_prod.pair_of_ob[p];
        ob[p] = homcat->object_index(tensor_ob(homcat->object_name(g), homcat->object_name(f)));
    }
    for (int p = 0; p < prod.ob.loose->num_morphisms(); ++p) {
        auto [g, f] = prod.loose_prod.pair_of_mor[p];
        mor[p] = homcat->morphism_index(tensor_mor(homcat->morphism_name(g), homcat->morphism_name(f)));
    }
    auto fl = FiniteFunctor::make(prod.ob.loose, homcat, std::move(ob), std::move(mor));
    auto ft = tight_restriction(fl, prod.ob, hom);
    FiniteFCategory::HComp hc{prod, FMap::make(prod.ob, hom, std::move(ft), std::move(fl))};
    return FiniteFCategory::make(label, {"*"}, {hom}, {hc},
                                 {hom.tight->object_index(unit)});
}

/// The max-monoid on the three-chain poset: a genuinely 2-dimensional
/// one-object fixture (2-cells a, b, ba compose vertically and tensor
/// horizontally).
inline FCatPtr chain3_max_fcat() {
    auto ch = cats::chain3();
    auto maxname = [&](const std::string& x, const std::string& y) {
        return std::stoi(x) >= std::stoi(y) ? x : y;
    };
    auto tensor_mor = [&](const std::string& g, const std::string& f) -> std::string {
        auto c = cats::chain3();
        int gi = c->morphism_index(g), fi = c->morphism_index(f);
        int s = std::max(c->src(gi), c->src(fi));
        int d = std::max(c->dst(gi), c->dst(fi));
        // thin category: the unique morphism s -> d
        return c->morphism_name(c->hom(s, d).at(0));
    };
    return one_object_fcat("Sigma(chain3,max)", ch, maxname, tensor_mor, "0", {"0", "1", "2"});
}

/// Two-object enhanced 2-category: tight f, loose g, both A -> B, plus a
/// 2-cell t : f => g in hom(A,B); homs otherwise trivial. Exercises 2-cell
/// coherence of loose transformations and tight/loose mixtures.
inline FCatPtr two_cell_shape() {
    // hom(A,B) = walking arrow category: objects f, g; morphism t: f -> g
    CategoryData hd;
    hd.label = "homAB";
    hd.objects = {"f", "g"};
    hd.morphisms = {{"t", "f", "g"}, {"1f", "f", "f"}, {"1g", "g", "g"}};
    hd.identities = {{"f", "1f"}, {"g", "1g"}};
    hd.compose = {{"1f", "1f", "1f"}, {"1g", "1g", "1g"}, {"t", "1f", "t"}, {"1g", "t", "t"}};
    auto homAB = FiniteCategory::make(std::move(hd));
    auto subf = full_subcategory(homAB, {homAB->object_index("f")});
    auto fobAB = FObject::make(subf.cat, homAB, subf.inclusion);

    auto term = cats::terminal();
    CategoryData ed;
    ed.label = "empty";
    auto emptyc = FiniteCategory::make(std::move(ed));
    auto unitA = FObject::chordate(term);

    std::vector<std::string> objects = {"A", "B"};
    std::vector<FObject> homs = {unitA, fobAB, FObject::chordate(emptyc), unitA};
    const int n = 2;
    std::vector<FiniteFCategory::HComp> hc;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto prod = product_fobject(homs[y * n + z], homs[x * n + y]);
                const auto& target = homs[x * n + z];
                std::vector<int> ob(prod.ob.loose->num_objects());
                std::vector<int> mor(prod.ob.loose->num_morphisms());
                for (int p = 0; p < prod.ob.loose->num_objects(); ++p) {
                    auto [g, f] = prod.loose_prod.pair_of_ob[p];
                    // unit homs are terminal: composite is the non-unit side
                    std::string gn = homs[y * n + z].loose->object_name(g);
                    std::string fn = homs[x * n + y].loose->object_name(f);
                    std::string img = (x == 0 && z == 1) ? (y == 0 ? gn : fn) : "*";
                    ob[p] = target.loose->object_index(img);
                }
                for (int p = 0; p < prod.ob.loose->num_morphisms(); ++p) {
                    auto [g, f] = prod.loose_prod.pair_of_mor[p];
                    std::string gn = homs[y * n + z].loose->morphism_name(g);
                    std::string fn = homs[x * n + y].loose->morphism_name(f);
                    std::string img;
                    if (x == 0 && z == 1)
                        img = (y == 0 ? gn : fn);
                    else
                        img = target.loose->morphism_name(target.loose->identity(0));
                    mor[p] = target.loose->morphism_index(img);
                }
                auto fl = FiniteFunctor::make(prod.ob.loose, target.loose, std::move(ob), std::move(mor));
                auto ft = tight_restriction(fl, prod.ob, target);
                hc.push_back({prod, FMap::make(prod.ob, target, std::move(ft), std::move(fl))});
            }
    std::vector<int> units = {0, 0};
    return FiniteFCategory::make("two-cell-shape", std::move(objects), std::move(homs),
                                 std::move(hc), std::move(units));
}

/// Diagram over the loose/tight arrow shape with chosen values and arrow
/// image.
inline Diagram arrow_diagram(const FCatPtr& shape, const FObject& va, const FObject& vb,
                             const FiniteFunctor& on_f) {
    const int n = 2;
    std::vector<FObject> ob = {va, vb};
    std::vector<std::vector<FiniteFunctor>> on1(n * n);
    std::vector<std::vector<NaturalTransformation>> on2(n * n);
    on1[0 * n + 0] = {FiniteFunctor::identity(va.loose)};
    on2[0 * n + 0] = {NaturalTransformation::identity(FiniteFunctor::identity(va.loose))};
    on1[0 * n + 1] = {on_f};
    on2[0 * n + 1] = {NaturalTransformation::identity(on_f)};
    on1[1 * n + 1] = {FiniteFunctor::identity(vb.loose)};
    on2[1 * n + 1] = {NaturalTransformation::identity(FiniteFunctor::identity(vb.loose))};
    return Diagram::make(shape, std::move(ob), std::move(on1), std::move(on2));
}

} // namespace enhcat::fixtures

#endif
