#include "enhcat/fcategory.hpp"

#include <algorithm>

namespace enhcat {

char weakness_letter(Weakness w) {
    switch (w) {
        case Weakness::Strict: return 's';
        case Weakness::Pseudo: return 'p';
        case Weakness::Lax: return 'l';
        case Weakness::Colax: return 'c';
    }
    return '?';
}

Weakness weakness_from_letter(char c) {
    switch (c) {
        case 's': return Weakness::Strict;
        case 'p': return Weakness::Pseudo;
        case 'l': return Weakness::Lax;
        case 'c': return Weakness::Colax;
    }
    throw ParseError(std::string("unknown weakness '") + c + "'");
}

bool weakness_leq(Weakness a, Weakness b) {
    if (a == b) return true;
    if (a == Weakness::Strict) return true;
    if (a == Weakness::Pseudo) return b == Weakness::Lax || b == Weakness::Colax;
    return false;
}

Weakness weakness_dual(Weakness w) {
    switch (w) {
        case Weakness::Lax: return Weakness::Colax;
        case Weakness::Colax: return Weakness::Lax;
        default: return w;
    }
}

// ---------------------------------------------------------------------------
// FiniteFCategory
// ---------------------------------------------------------------------------

std::vector<std::string> validate_fcategory(const std::vector<std::string>& objects,
                                            const std::vector<FObject>& homs,
                                            const std::vector<FiniteFCategory::HComp>& hcomp,
                                            const std::vector<int>& units) {
    std::vector<std::string> bad;
    const int n = static_cast<int>(objects.size());
    if (static_cast<int>(homs.size()) != n * n || static_cast<int>(hcomp.size()) != n * n * n ||
        static_cast<int>(units.size()) != n) {
        bad.push_back("hom/hcomp/unit table sizes do not match the object count");
        return bad;
    }
    auto hom = [&](int x, int y) -> const FObject& { return homs[x * n + y]; };
    auto hc = [&](int x, int y, int z) -> const FiniteFCategory::HComp& {
        return hcomp[(x * n + y) * n + z];
    };
    for (int x = 0; x < n; ++x)
        if (units[x] < 0 || units[x] >= hom(x, x).tight->num_objects())
            bad.push_back("unit of " + quoted(objects[x]) + " is not a tight 1-cell");
    if (!bad.empty()) return bad;

    // hcomp endpoint sanity
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const auto& h = hc(x, y, z);
                if (!same_category(h.prod.loose_prod.cat, h.map.src.loose) ||
                    !same_category(h.map.dst.loose, hom(x, z).loose))
                    bad.push_back("hcomp(" + objects[x] + "," + objects[y] + "," + objects[z] +
                                  ") has wrong endpoints");
            }
    if (!bad.empty()) return bad;

    auto comp1 = [&](int x, int y, int z, int g, int f) {
        const auto& h = hc(x, y, z);
        return h.map.fl.on_ob(h.prod.loose_prod.pair_ob(g, f));
    };
    auto comp2 = [&](int x, int y, int z, int gm, int fm) {
        const auto& h = hc(x, y, z);
        return h.map.fl.on_mor(h.prod.loose_prod.pair_mor(gm, fm));
    };

    // unit laws at the object and morphism level
    for (int x = 0; x < n && bad.size() < 32; ++x) {
        for (int y = 0; y < n; ++y) {
            int ex = hom(x, x).embed.on_ob(units[x]);
            int ey = hom(y, y).embed.on_ob(units[y]);
            const auto* L = hom(x, y).loose.get();
            for (int f = 0; f < L->num_objects(); ++f) {
                if (comp1(x, x, y, f, ex) != f)
                    bad.push_back("right unit law fails at 1-cell " + quoted(L->object_name(f)));
                if (comp1(x, y, y, ey, f) != f)
                    bad.push_back("left unit law fails at 1-cell " + quoted(L->object_name(f)));
            }
            int idex = L ? hom(x, x).loose->identity(ex) : -1;
            int idey = hom(y, y).loose->identity(ey);
            for (int m = 0; m < L->num_morphisms(); ++m) {
                if (comp2(x, x, y, m, idex) != m)
                    bad.push_back("right unit law fails at 2-cell " + quoted(L->morphism_name(m)));
                if (comp2(x, y, y, idey, m) != m)
                    bad.push_back("left unit law fails at 2-cell " + quoted(L->morphism_name(m)));
            }
        }
    }
    if (!bad.empty()) return bad;

    // associativity at the object and morphism level
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    const auto* Hxy = hom(x, y).loose.get();
                    const auto* Hyz = hom(y, z).loose.get();
                    const auto* Hzw = hom(z, w).loose.get();
                    for (int f = 0; f < Hxy->num_objects(); ++f)
                        for (int g = 0; g < Hyz->num_objects(); ++g)
                            for (int h = 0; h < Hzw->num_objects(); ++h)
                                if (comp1(x, z, w, h, comp1(x, y, z, g, f)) !=
                                    comp1(x, y, w, comp1(y, z, w, h, g), f)) {
                                    bad.push_back("associativity fails at 1-cells (" +
                                                  Hzw->object_name(h) + ", " + Hyz->object_name(g) +
                                                  ", " + Hxy->object_name(f) + ")");
                                    if (bad.size() > 32) return bad;
                                }
                    for (int fm = 0; fm < Hxy->num_morphisms(); ++fm)
                        for (int gm = 0; gm < Hyz->num_morphisms(); ++gm)
                            for (int hm = 0; hm < Hzw->num_morphisms(); ++hm)
                                if (comp2(x, z, w, hm, comp2(x, y, z, gm, fm)) !=
                                    comp2(x, y, w, comp2(y, z, w, hm, gm), fm)) {
                                    bad.push_back("associativity fails at 2-cells (" +
                                                  Hzw->morphism_name(hm) + ", " + Hyz->morphism_name(gm) +
                                                  ", " + Hxy->morphism_name(fm) + ")");
                                    if (bad.size() > 32) return bad;
                                }
                }
    return bad;
}

FCatPtr FiniteFCategory::make(std::string label, std::vector<std::string> objects,
                              std::vector<FObject> homs, std::vector<HComp> hcomp,
                              std::vector<int> units) {
    auto bad = validate_fcategory(objects, homs, hcomp, units);
    if (!bad.empty())
        throw ValidationError("enhanced 2-category " + quoted(label) + ": " + bad.front());
    auto c = std::shared_ptr<FiniteFCategory>(new FiniteFCategory());
    c->label_ = std::move(label);
    c->objects_ = std::move(objects);
    c->homs_ = std::move(homs);
    c->hcomp_ = std::move(hcomp);
    c->units_ = std::move(units);
    return c;
}

int FiniteFCategory::object_index(const std::string& name) const {
    for (int i = 0; i < num_objects(); ++i)
        if (objects_[i] == name) return i;
    return -1;
}

Cell1 FiniteFCategory::compose1(const Cell1& g, const Cell1& f) const {
    if (f.dst != g.src)
        throw NotComposable("1-cells " + cell1_name(g) + " and " + cell1_name(f));
    const auto& h = hcomp(f.src, f.dst, g.dst);
    return {f.src, g.dst, h.map.fl.on_ob(h.prod.loose_prod.pair_ob(g.ob, f.ob))};
}

Cell2 FiniteFCategory::compose2(const Cell2& beta, const Cell2& alpha) const {
    if (alpha.dst != beta.src)
        throw NotComposable("2-cells are not horizontally composable");
    const auto& h = hcomp(alpha.src, alpha.dst, beta.dst);
    return {alpha.src, beta.dst, h.map.fl.on_mor(h.prod.loose_prod.pair_mor(beta.mor, alpha.mor))};
}

Cell2 FiniteFCategory::vcomp(const Cell2& beta, const Cell2& alpha) const {
    if (alpha.src != beta.src || alpha.dst != beta.dst)
        throw NotComposable("2-cells live in different hom-categories");
    const auto& l = hom(alpha.src, alpha.dst).loose;
    if (!l->composable(beta.mor, alpha.mor))
        throw NotComposable("2-cells " + cell2_name(beta) + " and " + cell2_name(alpha) +
                            " are not vertically composable");
    return {alpha.src, alpha.dst, l->compose(beta.mor, alpha.mor)};
}

Cell2 FiniteFCategory::identity2(const Cell1& f) const {
    return {f.src, f.dst, hom(f.src, f.dst).loose->identity(f.ob)};
}

Cell2 FiniteFCategory::whisker_l(const Cell1& h, const Cell2& alpha) const {
    return compose2({alpha.dst, h.dst, hom(h.src, h.dst).loose->identity(h.ob)}, alpha);
}

Cell2 FiniteFCategory::whisker_r(const Cell2& beta, const Cell1& f) const {
    return compose2(beta, {f.src, f.dst, hom(f.src, f.dst).loose->identity(f.ob)});
}

std::string FiniteFCategory::cell1_name(const Cell1& f) const {
    return hom(f.src, f.dst).loose->object_name(f.ob);
}

std::string FiniteFCategory::cell2_name(const Cell2& a) const {
    return hom(a.src, a.dst).loose->morphism_name(a.mor);
}

Cell1 FiniteFCategory::cell1_by_name(int x, int y, const std::string& name) const {
    int ob = hom(x, y).loose->object_index(name);
    if (ob < 0) throw ParseError("unknown 1-cell " + quoted(name));
    return {x, y, ob};
}

Cell2 FiniteFCategory::cell2_by_name(int x, int y, const std::string& name) const {
    int mor = hom(x, y).loose->morphism_index(name);
    if (mor < 0) throw ParseError("unknown 2-cell " + quoted(name));
    return {x, y, mor};
}

Cell2 paste_vertical(const FiniteFCategory& a, const Cell2& beta, const Cell2& alpha) {
    return a.vcomp(beta, alpha);
}

Cell2 paste_horizontal(const FiniteFCategory& a, const Cell2& beta, const Cell2& alpha) {
    return a.compose2(beta, alpha);
}

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

FCatPtr chordate_fcategory(std::string label, std::vector<std::string> objects,
                           std::vector<CatPtr> homs, std::vector<FiniteFunctor> hcomp_functors,
                           std::vector<int> units) {
    const int n = static_cast<int>(objects.size());
    std::vector<FObject> fhoms;
    fhoms.reserve(homs.size());
    for (auto& h : homs) fhoms.push_back(FObject::chordate(h));
    std::vector<FiniteFCategory::HComp> hc;
    hc.reserve(hcomp_functors.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto prod = product_fobject(fhoms[y * n + z], fhoms[x * n + y]);
                const auto& fl = hcomp_functors[(x * n + y) * n + z];
                // the square of a chordate map is the functor itself
                auto flm = FiniteFunctor::make(prod.loose_prod.cat, fhoms[x * n + z].loose,
                                               fl.ob_map(), fl.mor_map());
                auto ftm = FiniteFunctor::make(prod.tight_prod.cat, fhoms[x * n + z].tight,
                                               fl.ob_map(), fl.mor_map());
                hc.push_back({prod, FMap::make(prod.ob, fhoms[x * n + z], ftm, flm)});
            }
    return FiniteFCategory::make(std::move(label), std::move(objects), std::move(fhoms),
                                 std::move(hc), std::move(units));
}

namespace {

struct DiscreteHomSpec {
    std::vector<std::string> cells;
    std::vector<bool> tight;
};

} // namespace

FCatPtr discrete_hom_fcategory(
    std::string label, std::vector<std::string> objects,
    const std::vector<std::vector<std::pair<std::string, bool>>>& cells,
    const std::vector<std::string>& units,
    const std::function<std::string(int, int, int, const std::string&, const std::string&)>& comp) {
    const int n = static_cast<int>(objects.size());
    std::vector<FObject> homs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& spec = cells[x * n + y];
            CategoryData loose;
            loose.label = label + "(" + objects[x] + "," + objects[y] + ")";
            std::vector<int> tight_obs;
            for (const auto& [name, tightflag] : spec) {
                loose.objects.push_back(name);
                loose.morphisms.push_back({"1" + name, name, name});
                loose.identities.emplace_back(name, "1" + name);
                loose.compose.push_back({"1" + name, "1" + name, "1" + name});
            }
            auto lc = FiniteCategory::make(std::move(loose));
            for (const auto& [name, tightflag] : spec)
                if (tightflag) tight_obs.push_back(lc->object_index(name));
            std::sort(tight_obs.begin(), tight_obs.end());
            auto sub = full_subcategory(lc, tight_obs);
            homs.push_back(FObject::make(sub.cat, lc, sub.inclusion));
        }
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
                    std::string img = comp(x, y, z, homs[y * n + z].loose->object_name(g),
                                           homs[x * n + y].loose->object_name(f));
                    int t = target.loose->object_index(img);
                    if (t < 0)
                        throw ValidationError("discrete hom composition lands outside the table: " + img);
                    ob[p] = t;
                    mor[prod.ob.loose->identity(p)] = target.loose->identity(t);
                }
                auto fl = FiniteFunctor::make(prod.ob.loose, target.loose, std::move(ob), std::move(mor));
                std::vector<int> tob(prod.ob.tight->num_objects());
                std::vector<int> tmor(prod.ob.tight->num_morphisms());
                for (int p = 0; p < prod.ob.tight->num_objects(); ++p) {
                    int lp = prod.ob.embed.on_ob(p);
                    int img = fl.on_ob(lp);
                    int timg = target.ob_preimage[img];
                    if (timg < 0)
                        throw ValidationError("tight cells are not closed under composition at " +
                                              target.loose->object_name(img));
                    tob[p] = timg;
                    tmor[prod.ob.tight->identity(p)] = target.tight->identity(timg);
                }
                auto ft = FiniteFunctor::make(prod.ob.tight, target.tight, std::move(tob), std::move(tmor));
                hc.push_back({prod, FMap::make(prod.ob, target, std::move(ft), std::move(fl))});
            }
    std::vector<int> unit_idx(n);
    for (int x = 0; x < n; ++x) {
        unit_idx[x] = homs[x * n + x].tight->object_index(units[x]);
        if (unit_idx[x] < 0)
            throw ValidationError("unit " + quoted(units[x]) + " is not a tight 1-cell");
    }
    return FiniteFCategory::make(std::move(label), std::move(objects), std::move(homs),
                                 std::move(hc), std::move(unit_idx));
}

FCatPtr terminal_fcategory() {
    return discrete_hom_fcategory(
        "pt", {"*"}, {{{"1", true}}}, {"1"},
        [](int, int, int, const std::string&, const std::string&) { return std::string("1"); });
}

FCatPtr discrete_fcategory(int n) {
    std::vector<std::string> objects;
    for (int i = 0; i < n; ++i) objects.push_back("d" + std::to_string(i));
    std::vector<std::vector<std::pair<std::string, bool>>> cells(n * n);
    std::vector<std::string> units(n);
    for (int i = 0; i < n; ++i) {
        cells[i * n + i] = {{"1" + objects[i], true}};
        units[i] = "1" + objects[i];
    }
    return discrete_hom_fcategory(
        "disc" + std::to_string(n), std::move(objects), cells, units,
        [&](int x, int, int, const std::string& g, const std::string&) { return g; });
}

namespace {

FCatPtr arrow_shape(bool tight_cell) {
    std::vector<std::string> objects = {"A", "B"};
    std::vector<std::vector<std::pair<std::string, bool>>> cells(4);
    cells[0 * 2 + 0] = {{"1A", true}};
    cells[0 * 2 + 1] = {{"f", tight_cell}};
    cells[1 * 2 + 1] = {{"1B", true}};
    std::vector<std::string> units = {"1A", "1B"};
    return discrete_hom_fcategory(
        tight_cell ? "tight-arrow" : "loose-arrow", std::move(objects), cells, units,
        [](int, int, int, const std::string& g, const std::string& f) {
            if (g[0] == '1') return f;
            return g;
        });
}

} // namespace

FCatPtr loose_arrow_shape() { return arrow_shape(false); }
FCatPtr tight_arrow_shape() { return arrow_shape(true); }

// ---------------------------------------------------------------------------
// FFunctor
// ---------------------------------------------------------------------------

std::vector<std::string> validate_ffunctor(const FCatPtr& src, const FCatPtr& dst,
                                           const std::vector<int>& ob,
                                           const std::vector<FMap>& hom_action) {
    std::vector<std::string> bad;
    const int n = src->num_objects();
    if (static_cast<int>(ob.size()) != n || static_cast<int>(hom_action.size()) != n * n) {
        bad.push_back("map sizes do not match the source");
        return bad;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& act = hom_action[x * n + y];
            if (!fobject_equal(act.src, src->hom(x, y)) ||
                !fobject_equal(act.dst, dst->hom(ob[x], ob[y]))) {
                bad.push_back("hom action (" + src->object_name(x) + "," + src->object_name(y) +
                              ") has wrong endpoints");
                return bad;
            }
        }
    for (int x = 0; x < n; ++x)
        if (hom_action[x * n + x].ft.on_ob(src->unit_tight(x)) != dst->unit_tight(ob[x]))
            bad.push_back("unit of " + quoted(src->object_name(x)) + " is not preserved");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const auto& h = src->hcomp(x, y, z);
                const auto* prod = h.prod.loose_prod.cat.get();
                for (int p = 0; p < prod->num_objects(); ++p) {
                    auto [g, f] = h.prod.loose_prod.pair_of_ob[p];
                    Cell1 gi{y, z, hom_action[y * n + z].fl.on_ob(g)};
                    Cell1 fi{x, y, hom_action[x * n + y].fl.on_ob(f)};
                    gi.src = ob[y]; gi.dst = ob[z];
                    fi.src = ob[x]; fi.dst = ob[y];
                    int lhs = hom_action[x * n + z].fl.on_ob(h.map.fl.on_ob(p));
                    if (dst->compose1(gi, fi).ob != lhs) {
                        bad.push_back("composition of 1-cells not preserved at (" +
                                      src->hom(y, z).loose->object_name(g) + ", " +
                                      src->hom(x, y).loose->object_name(f) + ")");
                        if (bad.size() > 16) return bad;
                    }
                }
                for (int pm = 0; pm < prod->num_morphisms(); ++pm) {
                    auto [gm, fm] = h.prod.loose_prod.pair_of_mor[pm];
                    Cell2 gi{ob[y], ob[z], hom_action[y * n + z].fl.on_mor(gm)};
                    Cell2 fi{ob[x], ob[y], hom_action[x * n + y].fl.on_mor(fm)};
                    int lhs = hom_action[x * n + z].fl.on_mor(h.map.fl.on_mor(pm));
                    if (dst->compose2(gi, fi).mor != lhs) {
                        bad.push_back("composition of 2-cells not preserved");
                        if (bad.size() > 16) return bad;
                    }
                }
            }
    return bad;
}

FFunctor FFunctor::make(FCatPtr src, FCatPtr dst, std::vector<int> ob,
                        std::vector<FMap> hom_action) {
    auto bad = validate_ffunctor(src, dst, ob, hom_action);
    if (!bad.empty()) throw ValidationError("enhanced functor: " + bad.front());
    FFunctor f;
    f.src = std::move(src);
    f.dst = std::move(dst);
    f.ob = std::move(ob);
    f.hom_action = std::move(hom_action);
    return f;
}

FFunctor FFunctor::identity(FCatPtr c) {
    std::vector<int> ob(c->num_objects());
    std::vector<FMap> act;
    for (int x = 0; x < c->num_objects(); ++x) ob[x] = x;
    for (int x = 0; x < c->num_objects(); ++x)
        for (int y = 0; y < c->num_objects(); ++y) act.push_back(FMap::identity(c->hom(x, y)));
    // reorder into row-major (x,y)
    std::vector<FMap> act2;
    act2.reserve(act.size());
    int n = c->num_objects();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) act2.push_back(FMap::identity(c->hom(x, y)));
    return make(c, c, std::move(ob), std::move(act2));
}

bool fcategory_equal(const FCatPtr& a, const FCatPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->num_objects() != b->num_objects()) return false;
    const int n = a->num_objects();
    for (int x = 0; x < n; ++x)
        if (a->object_name(x) != b->object_name(x)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!fobject_equal(a->hom(x, y), b->hom(x, y))) return false;
    for (int x = 0; x < n; ++x)
        if (a->unit_tight(x) != b->unit_tight(x)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const auto& ha = a->hcomp(x, y, z);
                const auto& hb = b->hcomp(x, y, z);
                if (!functor_equal(ha.map.fl, hb.map.fl)) return false;
            }
    return true;
}

bool ffunctor_equal(const FFunctor& a, const FFunctor& b) {
    if (a.ob != b.ob) return false;
    for (std::size_t i = 0; i < a.hom_action.size(); ++i)
        if (!functor_equal(a.hom_action[i].fl, b.hom_action[i].fl)) return false;
    return true;
}

FFunctor compose(const FFunctor& g, const FFunctor& f) {
    if (!fcategory_equal(f.dst, g.src))
        throw ShapeMismatch("enhanced functor composition: middle categories differ");
    std::vector<int> ob(f.src->num_objects());
    std::vector<FMap> act;
    const int n = f.src->num_objects();
    for (int x = 0; x < n; ++x) ob[x] = g.ob[f.ob[x]];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            act.push_back(fmap_compose(g.action(f.ob[x], f.ob[y]), f.action(x, y)));
    return FFunctor::make(f.src, g.dst, std::move(ob), std::move(act));
}

std::vector<FFunctor> enumerate_ffunctors(const FCatPtr& a, const FCatPtr& b, std::int64_t bound) {
    const int n = a->num_objects();
    std::vector<FFunctor> out;
    std::vector<int> ob(n, -1);
    std::int64_t steps = 0;
    // per object map, assemble hom actions from the tight squares of the
    // ambient hom between hom-objects
    auto rec = [&](auto&& self, int x) -> void {
        if (++steps > bound) throw EnumerationBoundExceeded("enhanced functor enumeration bound");
        if (x == n) {
            // candidate hom actions per (x,y)
            std::vector<std::vector<FMap>> cands(n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    auto h = hom_ambient_f(a->hom(i, j), b->hom(ob[i], ob[j]), bound);
                    cands[i * n + j] = h.tight_obs;
                    if (cands[i * n + j].empty() && a->hom(i, j).loose->num_objects() > 0) return;
                }
            std::vector<FMap> act(n * n, FMap{});
            auto rec2 = [&](auto&& self2, int k) -> void {
                if (++steps > bound)
                    throw EnumerationBoundExceeded("enhanced functor enumeration bound");
                if (k == n * n) {
                    if (validate_ffunctor(a, b, ob, act).empty()) {
                        FFunctor f;
                        f.src = a;
                        f.dst = b;
                        f.ob = ob;
                        f.hom_action = act;
                        out.push_back(std::move(f));
                    }
                    return;
                }
                for (const auto& c : cands[k]) {
                    act[k] = c;
                    self2(self2, k + 1);
                }
            };
            rec2(rec2, 0);
            return;
        }
        for (int img = 0; img < b->num_objects(); ++img) {
            ob[x] = img;
            self(self, x + 1);
        }
        ob[x] = -1;
    };
    rec(rec, 0);
    return out;
}

Cell1 FFunctor::on1(const Cell1& f) const {
    return {ob[f.src], ob[f.dst], action(f.src, f.dst).fl.on_ob(f.ob)};
}

Cell2 FFunctor::on2(const Cell2& a) const {
    return {ob[a.src], ob[a.dst], action(a.src, a.dst).fl.on_mor(a.mor)};
}

// ---------------------------------------------------------------------------
// FNat
// ---------------------------------------------------------------------------

std::vector<std::string> fnat_violations(const FNat& alpha) {
    const auto& f = alpha.source_functor;
    const auto& g = alpha.target_functor;
    std::vector<std::string> bad;
    if (f.src != g.src || f.dst != g.dst) {
        bad.push_back("functors are not parallel");
        return bad;
    }
    const auto& a = f.src;
    const auto& b = f.dst;
    if (static_cast<int>(alpha.comp.size()) != a->num_objects()) {
        bad.push_back("component count mismatch");
        return bad;
    }
    for (int x = 0; x < a->num_objects(); ++x) {
        const auto& h = b->hom(f.ob[x], g.ob[x]);
        if (alpha.comp[x] < 0 || alpha.comp[x] >= h.tight->num_objects()) {
            bad.push_back("component at " + quoted(a->object_name(x)) + " is not a tight 1-cell");
            return bad;
        }
    }
    auto at = [&](int x) -> Cell1 {
        const auto& h = b->hom(f.ob[x], g.ob[x]);
        return {f.ob[x], g.ob[x], h.embed.on_ob(alpha.comp[x])};
    };
    for (int x = 0; x < a->num_objects(); ++x)
        for (int y = 0; y < a->num_objects(); ++y) {
            const auto* L = a->hom(x, y).loose.get();
            for (int u = 0; u < L->num_objects(); ++u) {
                Cell1 uf = f.on1({x, y, u});
                Cell1 ug = g.on1({x, y, u});
                if (b->compose1(at(y), uf).ob != b->compose1(ug, at(x)).ob)
                    bad.push_back("naturality fails at 1-cell " + quoted(L->object_name(u)));
            }
            for (int m = 0; m < L->num_morphisms(); ++m) {
                Cell2 mf = f.on2({x, y, m});
                Cell2 mg = g.on2({x, y, m});
                if (b->whisker_l(at(y), mf).mor != b->whisker_r(mg, at(x)).mor)
                    bad.push_back("naturality fails at 2-cell " + quoted(L->morphism_name(m)));
            }
        }
    return bad;
}

FNat FNat::make(FFunctor f, FFunctor g, std::vector<int> comp) {
    FNat n;
    n.source_functor = std::move(f);
    n.target_functor = std::move(g);
    n.comp = std::move(comp);
    auto bad = fnat_violations(n);
    if (!bad.empty()) throw ValidationError("enhanced natural transformation: " + bad.front());
    return n;
}

FNat FNat::identity(const FFunctor& f) {
    FNat n;
    n.source_functor = f;
    n.target_functor = f;
    n.comp.resize(f.src->num_objects());
    for (int x = 0; x < f.src->num_objects(); ++x) n.comp[x] = f.dst->unit_tight(f.ob[x]);
    return n;
}

Cell1 FNat::at(int x) const {
    const auto& b = source_functor.dst;
    const auto& h = b->hom(source_functor.ob[x], target_functor.ob[x]);
    return {source_functor.ob[x], target_functor.ob[x], h.embed.on_ob(comp[x])};
}

// ---------------------------------------------------------------------------
// Diagram
// ---------------------------------------------------------------------------

bool functor_is_tight_cell(const FiniteFunctor& f, const FObject& a, const FObject& b) {
    for (int o = 0; o < a.tight->num_objects(); ++o)
        if (!b.ob_tight(f.on_ob(a.embed.on_ob(o)))) return false;
    for (int m = 0; m < a.tight->num_morphisms(); ++m)
        if (!b.mor_tight(f.on_mor(a.embed.on_mor(m)))) return false;
    return true;
}

FiniteFunctor tight_restriction(const FiniteFunctor& f, const FObject& a, const FObject& b) {
    std::vector<int> ob(a.tight->num_objects()), mor(a.tight->num_morphisms());
    for (int o = 0; o < a.tight->num_objects(); ++o) {
        int img = b.ob_preimage[f.on_ob(a.embed.on_ob(o))];
        if (img < 0) throw ShapeMismatch("functor does not preserve tight cells");
        ob[o] = img;
    }
    for (int m = 0; m < a.tight->num_morphisms(); ++m) {
        int img = b.mor_preimage[f.on_mor(a.embed.on_mor(m))];
        if (img < 0) throw ShapeMismatch("functor does not preserve tight cells");
        mor[m] = img;
    }
    return FiniteFunctor::make(a.tight, b.tight, std::move(ob), std::move(mor));
}

std::vector<std::string> validate_diagram(const Diagram& d) {
    std::vector<std::string> bad;
    const auto& s = d.src;
    const int n = s->num_objects();
    if (static_cast<int>(d.ob.size()) != n || static_cast<int>(d.on1.size()) != n * n ||
        static_cast<int>(d.on2.size()) != n * n) {
        bad.push_back("diagram table sizes do not match the shape");
        return bad;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = s->hom(x, y);
            const auto& c1 = d.on1[x * n + y];
            const auto& c2 = d.on2[x * n + y];
            if (static_cast<int>(c1.size()) != h.loose->num_objects() ||
                static_cast<int>(c2.size()) != h.loose->num_morphisms()) {
                bad.push_back("diagram hom tables have wrong sizes at (" + s->object_name(x) + "," +
                              s->object_name(y) + ")");
                return bad;
            }
            for (int f = 0; f < h.loose->num_objects(); ++f) {
                if (!same_category(c1[f].source(), d.ob[x].loose) ||
                    !same_category(c1[f].target(), d.ob[y].loose))
                    bad.push_back("image of 1-cell " + quoted(h.loose->object_name(f)) +
                                  " has wrong endpoints");
                else if (h.ob_tight(f) && !functor_is_tight_cell(c1[f], d.ob[x], d.ob[y]))
                    bad.push_back("tight 1-cell " + quoted(h.loose->object_name(f)) +
                                  " has a non-tight image");
            }
            if (!bad.empty()) return bad;
            for (int m = 0; m < h.loose->num_morphisms(); ++m) {
                const auto& t = c2[m];
                if (!functor_equal(t.source_functor, c1[h.loose->src(m)]) ||
                    !functor_equal(t.target_functor, c1[h.loose->dst(m)]))
                    bad.push_back("image of 2-cell " + quoted(h.loose->morphism_name(m)) +
                                  " has wrong endpoints");
                else {
                    auto nat = naturality_violations(t);
                    if (!nat.empty())
                        bad.push_back("image of 2-cell " + quoted(h.loose->morphism_name(m)) +
                                      " is not natural: " + nat.front());
                }
            }
            if (!bad.empty()) return bad;
            // vertical functoriality inside the hom
            for (int m = 0; m < h.loose->num_morphisms(); ++m) {
                for (int m2 = 0; m2 < h.loose->num_morphisms(); ++m2) {
                    if (!h.loose->composable(m2, m)) continue;
                    auto lhs = d.on2[x * n + y][h.loose->compose(m2, m)];
                    auto rhs = vcompose(c2[m2], c2[m]);
                    if (lhs.comp != rhs.comp)
                        bad.push_back("vertical composition not preserved at (" +
                                      h.loose->morphism_name(m2) + ", " + h.loose->morphism_name(m) + ")");
                }
            }
            if (static_cast<int>(bad.size()) > 16) return bad;
        }
    for (int x = 0; x < n; ++x) {
        const auto& u = d.on1[x * n + x][s->unit_loose(x)];
        if (!functor_equal(u, FiniteFunctor::identity(d.ob[x].loose)))
            bad.push_back("unit of " + quoted(s->object_name(x)) + " is not the identity functor");
    }
    if (!bad.empty()) return bad;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const auto& h = s->hcomp(x, y, z);
                const auto* prod = h.prod.loose_prod.cat.get();
                for (int p = 0; p < prod->num_objects(); ++p) {
                    auto [g, f] = h.prod.loose_prod.pair_of_ob[p];
                    auto lhs = d.on1[x * n + z][h.map.fl.on_ob(p)];
                    auto rhs = compose(d.on1[y * n + z][g], d.on1[x * n + y][f]);
                    if (!functor_equal(lhs, rhs)) {
                        bad.push_back("composition of 1-cells not preserved at (" +
                                      s->hom(y, z).loose->object_name(g) + ", " +
                                      s->hom(x, y).loose->object_name(f) + ")");
                        if (bad.size() > 16) return bad;
                    }
                }
                for (int pm = 0; pm < prod->num_morphisms(); ++pm) {
                    auto [gm, fm] = h.prod.loose_prod.pair_of_mor[pm];
                    auto lhs = d.on2[x * n + z][h.map.fl.on_mor(pm)];
                    auto rhs = hcompose(d.on2[y * n + z][gm], d.on2[x * n + y][fm]);
                    if (lhs.comp != rhs.comp) {
                        bad.push_back("horizontal composition of 2-cells not preserved");
                        if (bad.size() > 16) return bad;
                    }
                }
            }
    return bad;
}

Diagram Diagram::make(FCatPtr src, std::vector<FObject> ob,
                      std::vector<std::vector<FiniteFunctor>> on1,
                      std::vector<std::vector<NaturalTransformation>> on2) {
    Diagram d;
    d.src = std::move(src);
    d.ob = std::move(ob);
    d.on1 = std::move(on1);
    d.on2 = std::move(on2);
    auto bad = validate_diagram(d);
    if (!bad.empty()) throw ValidationError("diagram: " + bad.front());
    return d;
}

Diagram Diagram::constant(FCatPtr src, const FObject& value) {
    Diagram d;
    d.src = src;
    const int n = src->num_objects();
    d.ob.assign(n, value);
    d.on1.resize(n * n);
    d.on2.resize(n * n);
    auto idf = FiniteFunctor::identity(value.loose);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = src->hom(x, y);
            d.on1[x * n + y].assign(h.loose->num_objects(), idf);
            d.on2[x * n + y].assign(h.loose->num_morphisms(), NaturalTransformation::identity(idf));
        }
    auto bad = validate_diagram(d);
    if (!bad.empty()) throw ValidationError("constant diagram: " + bad.front());
    return d;
}

FiniteFunctor Diagram::tight_action(const Cell1& f) const {
    return tight_restriction(at1(f), ob[f.src], ob[f.dst]);
}

bool diagram_equal(const Diagram& a, const Diagram& b) {
    if (a.src != b.src && a.src->num_objects() != b.src->num_objects()) return false;
    const int n = a.src->num_objects();
    for (int x = 0; x < n; ++x)
        if (!fobject_equal(a.ob[x], b.ob[x])) return false;
    for (int i = 0; i < n * n; ++i) {
        if (a.on1[i].size() != b.on1[i].size() || a.on2[i].size() != b.on2[i].size()) return false;
        for (std::size_t j = 0; j < a.on1[i].size(); ++j)
            if (!functor_equal(a.on1[i][j], b.on1[i][j])) return false;
        for (std::size_t j = 0; j < a.on2[i].size(); ++j)
            if (a.on2[i][j].comp != b.on2[i][j].comp) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// loose transformations
// ---------------------------------------------------------------------------

LooseTransformation LooseTransformation::identity(const Diagram& m, Weakness wprime, Weakness w) {
    LooseTransformation t;
    t.wprime = wprime;
    t.w = w;
    const int n = m.src->num_objects();
    t.comp1.reserve(n);
    for (int x = 0; x < n; ++x) t.comp1.push_back(FiniteFunctor::identity(m.ob[x].loose));
    t.comp2.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = m.src->hom(x, y);
            for (int f = 0; f < h.loose->num_objects(); ++f)
                t.comp2[x * n + y].push_back(
                    NaturalTransformation::identity(m.at1({x, y, f})));
        }
    return t;
}

namespace {

/// Expected endpoints of the 2-component at f for the stored orientation.
/// Lax: N(f).phi_X => phi_Y.M(f); colax reversed; strict/pseudo use the lax
/// orientation (strict additionally demands the identity).
std::pair<FiniteFunctor, FiniteFunctor> comp2_endpoints(const LooseTransformation& t,
                                                        const Diagram& m, const Diagram& n,
                                                        const Cell1& f) {
    auto lhs = compose(n.at1(f), t.comp1[f.src]);  // N(f) . phi_X
    auto rhs = compose(t.comp1[f.dst], m.at1(f));  // phi_Y . M(f)
    if (t.w == Weakness::Colax) return {rhs, lhs};
    return {lhs, rhs};
}

} // namespace

LooseCheckReport check_loose_natural(const LooseTransformation& phi, const Diagram& m,
                                     const Diagram& n) {
    LooseCheckReport rep;
    auto& bad = rep.violations;
    if (m.src != n.src && m.src->num_objects() != n.src->num_objects())
        throw ShapeMismatch("loose transformation: functors have different shapes");
    const auto& s = m.src;
    const int N = s->num_objects();
    if (!weakness_leq(phi.wprime, phi.w)) bad.push_back("weakness pair violates w' <= w");
    if (static_cast<int>(phi.comp1.size()) != N ||
        static_cast<int>(phi.comp2.size()) != N * N) {
        bad.push_back("component tables have wrong sizes");
        return rep;
    }
    for (int x = 0; x < N; ++x) {
        if (!same_category(phi.comp1[x].source(), m.ob[x].loose) ||
            !same_category(phi.comp1[x].target(), n.ob[x].loose)) {
            bad.push_back("1-component at " + quoted(s->object_name(x)) + " has wrong endpoints");
            return rep;
        }
    }
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            const auto& h = s->hom(x, y);
            if (static_cast<int>(phi.comp2[x * N + y].size()) != h.loose->num_objects()) {
                bad.push_back("2-component table has wrong size at (" + s->object_name(x) + "," +
                              s->object_name(y) + ")");
                return rep;
            }
            for (int f = 0; f < h.loose->num_objects(); ++f) {
                const auto& t = phi.comp2[x * N + y][f];
                auto [from, to] = comp2_endpoints(phi, m, n, {x, y, f});
                if (!functor_equal(t.source_functor, from) || !functor_equal(t.target_functor, to)) {
                    bad.push_back("2-component at " + quoted(h.loose->object_name(f)) +
                                  " has wrong endpoints");
                    continue;
                }
                if (!naturality_violations(t).empty())
                    bad.push_back("2-component at " + quoted(h.loose->object_name(f)) +
                                  " is not a natural transformation");
            }
        }
    if (!bad.empty()) return rep;

    auto at2 = [&](const Cell1& f) -> const NaturalTransformation& {
        return phi.comp2[f.src * N + f.dst][f.ob];
    };

    // strict/pseudo global constraints
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            const auto& h = s->hom(x, y);
            for (int f = 0; f < h.loose->num_objects(); ++f) {
                const auto& t = phi.comp2[x * N + y][f];
                bool ident = t.is_identity_cells() &&
                             functor_equal(t.source_functor, t.target_functor);
                if (phi.w == Weakness::Strict && !ident)
                    bad.push_back("strict transformation has a non-identity 2-component at " +
                                  quoted(h.loose->object_name(f)));
                if (phi.w == Weakness::Pseudo) {
                    bool invertible = true;
                    for (int c : t.comp)
                        invertible = invertible && t.source_functor.target()->is_iso(c);
                    if (!invertible)
                        bad.push_back("pseudo transformation has a non-invertible 2-component at " +
                                      quoted(h.loose->object_name(f)));
                }
                if (h.ob_tight(f)) {
                    // w'-collapse on tight 1-cells
                    if (phi.wprime == Weakness::Strict && !ident)
                        bad.push_back("2-component at tight 1-cell " + quoted(h.loose->object_name(f)) +
                                      " must be an identity");
                    if (phi.wprime == Weakness::Pseudo) {
                        bool invertible = true;
                        for (int c : t.comp)
                            invertible = invertible && t.source_functor.target()->is_iso(c);
                        if (!invertible)
                            bad.push_back("2-component at tight 1-cell " +
                                          quoted(h.loose->object_name(f)) + " must be invertible");
                    }
                }
            }
        }

    // unit coherence
    for (int x = 0; x < N; ++x) {
        const auto& t = at2({x, x, s->unit_loose(x)});
        if (!t.is_identity_cells())
            bad.push_back("2-component at the unit of " + quoted(s->object_name(x)) +
                          " is not the identity");
    }

    // composite coherence
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            for (int z = 0; z < N; ++z) {
                const auto& hgx = s->hom(y, z);
                const auto& hfx = s->hom(x, y);
                for (int g = 0; g < hgx.loose->num_objects(); ++g)
                    for (int f = 0; f < hfx.loose->num_objects(); ++f) {
                        Cell1 gc{y, z, g}, fc{x, y, f};
                        Cell1 c = s->compose1(gc, fc);
                        NaturalTransformation expect =
                            phi.w == Weakness::Colax
                                ? vcompose(whisker_left(n.at1(gc), at2(fc)),
                                           whisker_right(at2(gc), m.at1(fc)))
                                : vcompose(whisker_right(at2(gc), m.at1(fc)),
                                           whisker_left(n.at1(gc), at2(fc)));
                        if (at2(c).comp != expect.comp) {
                            bad.push_back("composition coherence fails at (" +
                                          hgx.loose->object_name(g) + ", " +
                                          hfx.loose->object_name(f) + ")");
                            if (bad.size() > 24) return rep;
                        }
                    }
            }

    // 2-cell coherence
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            const auto& h = s->hom(x, y);
            for (int mor = 0; mor < h.loose->num_morphisms(); ++mor) {
                Cell1 f{x, y, h.loose->src(mor)};
                Cell1 f2{x, y, h.loose->dst(mor)};
                Cell2 gamma{x, y, mor};
                NaturalTransformation lhs, rhs;
                if (phi.w == Weakness::Colax) {
                    lhs = vcompose(whisker_right(n.at2(gamma), phi.comp1[x]), at2(f));
                    rhs = vcompose(at2(f2), whisker_left(phi.comp1[y], m.at2(gamma)));
                } else {
                    lhs = vcompose(at2(f2), whisker_right(n.at2(gamma), phi.comp1[x]));
                    rhs = vcompose(whisker_left(phi.comp1[y], m.at2(gamma)), at2(f));
                }
                if (lhs.comp != rhs.comp)
                    bad.push_back("2-cell coherence fails at " + quoted(h.loose->morphism_name(mor)));
            }
        }

    // tightness classification
    rep.tight = true;
    for (int x = 0; x < N && rep.tight; ++x)
        rep.tight = functor_is_tight_cell(phi.comp1[x], m.ob[x], n.ob[x]);
    return rep;
}

TransformationLevel classify_transformation(const LooseTransformation& phi, const Diagram& m,
                                            const Diagram& n) {
    auto rep = check_loose_natural(phi, m, n);
    if (!rep.valid())
        throw InvalidTransformation("classify: " + rep.violations.front());
    bool all_identity = true;
    const int N = m.src->num_objects();
    for (int i = 0; i < N * N && all_identity; ++i)
        for (const auto& t : phi.comp2[i])
            all_identity = all_identity && t.is_identity_cells();
    if (all_identity && rep.tight) return TransformationLevel::Tight;
    if (all_identity) return TransformationLevel::Fit;
    return TransformationLevel::Loose;
}

LooseTransformation compose_loose(const LooseTransformation& psi, const LooseTransformation& phi,
                                  const Diagram& m, const Diagram& n, const Diagram& p) {
    (void)n;
    (void)p;
    if (psi.w != phi.w || psi.wprime != phi.wprime)
        throw ShapeMismatch("compose_loose: weakness tags differ");
    LooseTransformation out;
    out.wprime = phi.wprime;
    out.w = phi.w;
    const int N = m.src->num_objects();
    out.comp1.reserve(N);
    for (int x = 0; x < N; ++x) out.comp1.push_back(compose(psi.comp1[x], phi.comp1[x]));
    out.comp2.resize(N * N);
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            const auto& h = m.src->hom(x, y);
            for (int f = 0; f < h.loose->num_objects(); ++f) {
                Cell1 fc{x, y, f};
                const auto& phif = phi.comp2[x * N + y][f];
                const auto& psif = psi.comp2[x * N + y][f];
                NaturalTransformation t =
                    phi.w == Weakness::Colax
                        ? vcompose(whisker_right(psif, phi.comp1[x]),
                                   whisker_left(psi.comp1[y], phif))
                        : vcompose(whisker_left(psi.comp1[y], phif),
                                   whisker_right(psif, phi.comp1[x]));
                out.comp2[x * N + y].push_back(std::move(t));
            }
        }
    return out;
}

std::vector<std::string> modification_violations(const ModificationCells& mu,
                                                 const LooseTransformation& phi,
                                                 const LooseTransformation& psi, const Diagram& m,
                                                 const Diagram& n) {
    std::vector<std::string> bad;
    const auto& s = m.src;
    const int N = s->num_objects();
    if (static_cast<int>(mu.comp.size()) != N) {
        bad.push_back("component count mismatch");
        return bad;
    }
    for (int x = 0; x < N; ++x) {
        const auto& t = mu.comp[x];
        if (!functor_equal(t.source_functor, phi.comp1[x]) ||
            !functor_equal(t.target_functor, psi.comp1[x])) {
            bad.push_back("component at " + quoted(s->object_name(x)) + " has wrong endpoints");
            return bad;
        }
        if (!naturality_violations(t).empty())
            bad.push_back("component at " + quoted(s->object_name(x)) + " is not natural");
    }
    if (!bad.empty()) return bad;
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            const auto& h = s->hom(x, y);
            for (int f = 0; f < h.loose->num_objects(); ++f) {
                Cell1 fc{x, y, f};
                const auto& phif = phi.comp2[x * N + y][f];
                const auto& psif = psi.comp2[x * N + y][f];
                NaturalTransformation lhs, rhs;
                if (phi.w == Weakness::Colax) {
                    // phi_f: phi_Y.M(f) => N(f).phi_X
                    lhs = vcompose(whisker_left(n.at1(fc), mu.comp[x]), phif);
                    rhs = vcompose(psif, whisker_right(mu.comp[y], m.at1(fc)));
                } else {
                    lhs = vcompose(whisker_right(mu.comp[y], m.at1(fc)), phif);
                    rhs = vcompose(psif, whisker_left(n.at1(fc), mu.comp[x]));
                }
                if (lhs.comp != rhs.comp)
                    bad.push_back("modification axiom fails at 1-cell " +
                                  quoted(h.loose->object_name(f)));
            }
        }
    return bad;
}

std::vector<LooseTransformation> enumerate_loose_transformations(const Diagram& m,
                                                                 const Diagram& n, Weakness w,
                                                                 std::int64_t bound) {
    const auto& s = m.src;
    const int N = s->num_objects();
    std::vector<LooseTransformation> out;
    std::int64_t steps = 0;
    auto bump = [&]() {
        if (++steps > bound)
            throw EnumerationBoundExceeded("loose transformation enumeration exceeded bound");
    };

    // candidate 1-component functors per object
    std::vector<std::vector<FiniteFunctor>> cand1(N);
    for (int x = 0; x < N; ++x) cand1[x] = enumerate_functors(m.ob[x].loose, n.ob[x].loose, bound);

    // loose 1-cells listed per hom; the DFS assigns 2-components in this order
    struct CellRef {
        int x, y, f;
        bool tight;
    };
    std::vector<CellRef> cells;
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            const auto& h = s->hom(x, y);
            for (int f = 0; f < h.loose->num_objects(); ++f)
                cells.push_back({x, y, f, h.ob_tight(f)});
        }

    std::vector<int> pick1(N, -1);
    LooseTransformation t;
    t.wprime = Weakness::Strict;
    t.w = w;
    t.comp1.resize(N);
    t.comp2.assign(N * N, {});

    auto rec_cells = [&](auto&& self, std::size_t i) -> void {
        bump();
        if (i == cells.size()) {
            auto rep = check_loose_natural(t, m, n);
            if (rep.valid()) out.push_back(t);
            return;
        }
        const auto& c = cells[i];
        Cell1 fc{c.x, c.y, c.f};
        auto [from, to] = comp2_endpoints(t, m, n, fc);
        bool force_identity =
            w == Weakness::Strict || c.tight || (c.x == c.y && c.f == s->unit_loose(c.x));
        if (force_identity) {
            if (!functor_equal(from, to)) return; // no identity cell available
            t.comp2[c.x * N + c.y][c.f] = NaturalTransformation::identity(from);
            self(self, i + 1);
            return;
        }
        for (auto& cand : enumerate_transformations(from, to, bound)) {
            if (w == Weakness::Pseudo) {
                bool invertible = true;
                for (int cc : cand.comp) invertible = invertible && from.target()->is_iso(cc);
                if (!invertible) continue;
            }
            t.comp2[c.x * N + c.y][c.f] = cand;
            self(self, i + 1);
        }
    };

    // early pruning: on tight 1-cells the (s, w) discipline forces strictly
    // commuting components, which cuts the candidate product down hard
    auto obs_consistent = [&](int upto) -> bool {
        for (int x = 0; x <= upto; ++x)
            for (int y = 0; y <= upto; ++y) {
                const auto& h = s->hom(x, y);
                for (int f = 0; f < h.loose->num_objects(); ++f) {
                    if (!h.ob_tight(f)) continue;
                    if (!functor_equal(compose(n.at1({x, y, f}), t.comp1[x]),
                                       compose(t.comp1[y], m.at1({x, y, f}))))
                        return false;
                }
            }
        return true;
    };
    auto rec_obs = [&](auto&& self, int x) -> void {
        bump();
        if (x == N) {
            for (int i = 0; i < N * N; ++i) {
                t.comp2[i].assign(m.src->hom(i / N, i % N).loose->num_objects(),
                                  NaturalTransformation());
            }
            rec_cells(rec_cells, 0);
            return;
        }
        for (std::size_t k = 0; k < cand1[x].size(); ++k) {
            pick1[x] = static_cast<int>(k);
            t.comp1[x] = cand1[x][k];
            if (obs_consistent(x)) self(self, x + 1);
        }
        pick1[x] = -1;
    };
    rec_obs(rec_obs, 0);
    return out;
}

std::vector<ModificationCells> enumerate_modifications(const LooseTransformation& phi,
                                                       const LooseTransformation& psi,
                                                       const Diagram& m, const Diagram& n,
                                                       std::int64_t bound) {
    const int N = m.src->num_objects();
    std::vector<std::vector<NaturalTransformation>> cand(N);
    for (int x = 0; x < N; ++x) cand[x] = enumerate_transformations(phi.comp1[x], psi.comp1[x], bound);
    std::vector<ModificationCells> out;
    ModificationCells mu;
    mu.comp.resize(N);
    std::int64_t steps = 0;
    auto rec = [&](auto&& self, int x) -> void {
        if (++steps > bound) throw EnumerationBoundExceeded("modification enumeration exceeded bound");
        if (x == N) {
            if (modification_violations(mu, phi, psi, m, n).empty()) out.push_back(mu);
            return;
        }
        for (auto& c : cand[x]) {
            mu.comp[x] = c;
            self(self, x + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// duality
// ---------------------------------------------------------------------------

CatPtr opposite_category(const CatPtr& c) {
    CategoryData d;
    d.label = c->label() + "^op";
    for (int o = 0; o < c->num_objects(); ++o) d.objects.push_back(c->object_name(o));
    for (int m = 0; m < c->num_morphisms(); ++m) {
        const auto& md = c->morphism(m);
        d.morphisms.push_back({md.name, md.dst, md.src});
    }
    for (int o = 0; o < c->num_objects(); ++o)
        d.identities.emplace_back(c->object_name(o), c->morphism_name(c->identity(o)));
    for (int g = 0; g < c->num_morphisms(); ++g)
        for (int f = 0; f < c->num_morphisms(); ++f)
            if (c->composable(g, f))
                d.compose.push_back({c->morphism_name(f), c->morphism_name(g),
                                     c->morphism_name(c->compose(g, f))});
    return FiniteCategory::make(std::move(d));
}

FiniteFunctor opposite_functor(const FiniteFunctor& f) {
    auto a = opposite_category(f.source());
    auto b = opposite_category(f.target());
    // names are preserved, so index maps carry over
    std::vector<int> ob(a->num_objects()), mor(a->num_morphisms());
    for (int o = 0; o < a->num_objects(); ++o)
        ob[o] = b->object_index(f.target()->object_name(f.on_ob(f.source()->object_index(a->object_name(o)))));
    for (int m = 0; m < a->num_morphisms(); ++m)
        mor[m] = b->morphism_index(
            f.target()->morphism_name(f.on_mor(f.source()->morphism_index(a->morphism_name(m)))));
    return FiniteFunctor::make(a, b, std::move(ob), std::move(mor));
}

FCatPtr co_dual(const FCatPtr& c) {
    const int n = c->num_objects();
    std::vector<std::string> objects;
    for (int x = 0; x < n; ++x) objects.push_back(c->object_name(x));
    std::vector<FObject> homs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = c->hom(x, y);
            homs.push_back(FObject::make(opposite_category(h.tight), opposite_category(h.loose),
                                         opposite_functor(h.embed)));
        }
    std::vector<FiniteFCategory::HComp> hc;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const auto& h = c->hcomp(x, y, z);
                auto prod = product_fobject(homs[y * n + z], homs[x * n + y]);
                // names agree with the original product, so maps carry over by name
                const auto& src_prod = h.prod.loose_prod.cat;
                const auto& dst = homs[x * n + z];
                std::vector<int> ob(prod.ob.loose->num_objects());
                std::vector<int> mor(prod.ob.loose->num_morphisms());
                for (int p = 0; p < prod.ob.loose->num_objects(); ++p) {
                    int orig = src_prod->object_index(prod.ob.loose->object_name(p));
                    ob[p] = dst.loose->object_index(
                        c->hom(x, z).loose->object_name(h.map.fl.on_ob(orig)));
                }
                for (int p = 0; p < prod.ob.loose->num_morphisms(); ++p) {
                    int orig = src_prod->morphism_index(prod.ob.loose->morphism_name(p));
                    mor[p] = dst.loose->morphism_index(
                        c->hom(x, z).loose->morphism_name(h.map.fl.on_mor(orig)));
                }
                auto fl = FiniteFunctor::make(prod.ob.loose, dst.loose, std::move(ob), std::move(mor));
                auto ft = tight_restriction(fl, prod.ob, dst);
                hc.push_back({prod, FMap::make(prod.ob, dst, std::move(ft), std::move(fl))});
            }
    std::vector<int> units;
    for (int x = 0; x < n; ++x) {
        const auto& h = c->hom(x, x);
        units.push_back(
            homs[x * n + x].tight->object_index(h.tight->object_name(c->unit_tight(x))));
    }
    return FiniteFCategory::make(c->label() + "^co", std::move(objects), std::move(homs),
                                 std::move(hc), std::move(units));
}

Diagram co_dual(const Diagram& d, const FCatPtr& co_src) {
    Diagram out;
    out.src = co_src;
    const int n = co_src->num_objects();
    for (int x = 0; x < n; ++x) {
        const auto& v = d.ob[x];
        out.ob.push_back(FObject::make(opposite_category(v.tight), opposite_category(v.loose),
                                       opposite_functor(v.embed)));
    }
    out.on1.resize(n * n);
    out.on2.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h_co = co_src->hom(x, y);
            const auto& h = d.src->hom(x, y);
            out.on1[x * n + y].resize(h_co.loose->num_objects());
            out.on2[x * n + y].resize(h_co.loose->num_morphisms());
            for (int f = 0; f < h_co.loose->num_objects(); ++f) {
                int orig = h.loose->object_index(h_co.loose->object_name(f));
                const auto& fun = d.on1[x * n + y][orig];
                std::vector<int> ob(out.ob[x].loose->num_objects());
                std::vector<int> mor(out.ob[x].loose->num_morphisms());
                for (int o = 0; o < out.ob[x].loose->num_objects(); ++o)
                    ob[o] = out.ob[y].loose->object_index(d.ob[y].loose->object_name(
                        fun.on_ob(d.ob[x].loose->object_index(out.ob[x].loose->object_name(o)))));
                for (int mm = 0; mm < out.ob[x].loose->num_morphisms(); ++mm)
                    mor[mm] = out.ob[y].loose->morphism_index(d.ob[y].loose->morphism_name(fun.on_mor(
                        d.ob[x].loose->morphism_index(out.ob[x].loose->morphism_name(mm)))));
                out.on1[x * n + y][f] =
                    FiniteFunctor::make(out.ob[x].loose, out.ob[y].loose, std::move(ob), std::move(mor));
            }
            for (int mm = 0; mm < h_co.loose->num_morphisms(); ++mm) {
                int orig = h.loose->morphism_index(h_co.loose->morphism_name(mm));
                const auto& t = d.on2[x * n + y][orig];
                NaturalTransformation o;
                // direction reverses in the co-dual
                o.source_functor = out.on1[x * n + y][h_co.loose->src(mm)];
                o.target_functor = out.on1[x * n + y][h_co.loose->dst(mm)];
                o.comp.resize(out.ob[x].loose->num_objects());
                for (int ox = 0; ox < out.ob[x].loose->num_objects(); ++ox)
                    o.comp[ox] = out.ob[y].loose->morphism_index(d.ob[y].loose->morphism_name(
                        t.comp[d.ob[x].loose->object_index(out.ob[x].loose->object_name(ox))]));
                out.on2[x * n + y][mm] = std::move(o);
            }
        }
    auto bad = validate_diagram(out);
    if (!bad.empty()) throw ValidationError("co-dual diagram: " + bad.front());
    return out;
}

LooseTransformation co_dual(const LooseTransformation& t, const Diagram& co_m,
                            const Diagram& co_n) {
    LooseTransformation out;
    out.wprime = weakness_dual(t.wprime);
    out.w = weakness_dual(t.w);
    const int n = co_m.src->num_objects();
    out.comp1.resize(n);
    for (int x = 0; x < n; ++x) {
        const auto& fun = t.comp1[x];
        std::vector<int> ob(co_m.ob[x].loose->num_objects());
        std::vector<int> mor(co_m.ob[x].loose->num_morphisms());
        for (int o = 0; o < co_m.ob[x].loose->num_objects(); ++o)
            ob[o] = co_n.ob[x].loose->object_index(
                fun.target()->object_name(fun.on_ob(fun.source()->object_index(co_m.ob[x].loose->object_name(o)))));
        for (int mm = 0; mm < co_m.ob[x].loose->num_morphisms(); ++mm)
            mor[mm] = co_n.ob[x].loose->morphism_index(fun.target()->morphism_name(
                fun.on_mor(fun.source()->morphism_index(co_m.ob[x].loose->morphism_name(mm)))));
        out.comp1[x] = FiniteFunctor::make(co_m.ob[x].loose, co_n.ob[x].loose, std::move(ob), std::move(mor));
    }
    out.comp2.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h_co = co_m.src->hom(x, y);
            for (int f = 0; f < h_co.loose->num_objects(); ++f) {
                // same components, opposite orientation
                int orig_f = f; // hom cell names/order coincide (same names sorted)
                const auto& tt = t.comp2[x * n + y][orig_f];
                NaturalTransformation o;
                auto lhs = compose(co_n.at1({x, y, f}), out.comp1[x]);
                auto rhs = compose(out.comp1[y], co_m.at1({x, y, f}));
                if (out.w == Weakness::Colax) {
                    o.source_functor = rhs;
                    o.target_functor = lhs;
                } else {
                    o.source_functor = lhs;
                    o.target_functor = rhs;
                }
                o.comp.resize(co_m.ob[x].loose->num_objects());
                for (int ox = 0; ox < co_m.ob[x].loose->num_objects(); ++ox) {
                    int orig_o = t.comp1[x].source()->object_index(co_m.ob[x].loose->object_name(ox));
                    o.comp[ox] = co_n.ob[y].loose->morphism_index(
                        t.comp2[x * n + y][orig_f].source_functor.target()->morphism_name(
                            tt.comp[orig_o]));
                }
                out.comp2[x * n + y].push_back(std::move(o));
            }
        }
    return out;
}

} // namespace enhcat
