#include "enhcat/sketch.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace enhcat {

// ---------------------------------------------------------------------------
// cones and sketches
// ---------------------------------------------------------------------------

std::vector<std::string> validate_cone(const FCatPtr& carrier, const SketchCone& c) {
    std::vector<std::string> bad;
    const int nj = c.shape->num_objects();
    if (c.apex < 0 || c.apex >= carrier->num_objects()) {
        bad.push_back("cone apex is not an object of the carrier");
        return bad;
    }
    if (static_cast<int>(c.gamma.size()) != nj) {
        bad.push_back("cone has the wrong number of legs");
        return bad;
    }
    auto wbad = validate_diagram(c.weight);
    if (!wbad.empty()) {
        bad.push_back("weight: " + wbad.front());
        return bad;
    }
    if (c.diagram.src != c.shape && c.diagram.src->num_objects() != nj) {
        bad.push_back("diagram shape mismatch");
        return bad;
    }
    for (int j = 0; j < nj; ++j) {
        const auto& g = c.gamma[j];
        if (!fobject_equal(g.src, c.weight.ob[j]) ||
            !fobject_equal(g.dst, carrier->hom(c.apex, c.diagram.ob[j]))) {
            bad.push_back("cone leg " + std::to_string(j) + " has wrong endpoints");
            return bad;
        }
    }
    // naturality of gamma over the shape
    for (int j = 0; j < nj; ++j)
        for (int k = 0; k < nj; ++k) {
            const auto& h = c.shape->hom(j, k);
            for (int u = 0; u < h.loose->num_objects(); ++u) {
                Cell1 du = c.diagram.on1({j, k, u});
                // postcomposition by D(u) after gamma_j vs gamma_k after W(u)
                const auto* wl = c.weight.ob[j].loose.get();
                for (int w = 0; w < wl->num_objects(); ++w) {
                    Cell1 leg{c.apex, c.diagram.ob[j], c.gamma[j].fl.on_ob(w)};
                    int lhs = carrier->compose1(du, leg).ob;
                    int rhs = c.gamma[k].fl.on_ob(c.weight.at1({j, k, u}).on_ob(w));
                    if (lhs != rhs) {
                        bad.push_back("cone is not natural at 1-cell " +
                                      quoted(h.loose->object_name(u)));
                        return bad;
                    }
                }
                for (int wm = 0; wm < wl->num_morphisms(); ++wm) {
                    Cell2 legm{c.apex, c.diagram.ob[j], c.gamma[j].fl.on_mor(wm)};
                    int lhs = carrier->whisker_l(du, legm).mor;
                    int rhs = c.gamma[k].fl.on_mor(c.weight.at1({j, k, u}).on_mor(wm));
                    if (lhs != rhs) {
                        bad.push_back("cone is not natural at 1-cell " +
                                      quoted(h.loose->object_name(u)) + " (2-level)");
                        return bad;
                    }
                }
            }
            for (int g2 = 0; g2 < h.loose->num_morphisms(); ++g2) {
                Cell2 dg = c.diagram.on2({j, k, g2});
                const auto* wl = c.weight.ob[j].loose.get();
                for (int w = 0; w < wl->num_objects(); ++w) {
                    Cell1 leg{c.apex, c.diagram.ob[j], c.gamma[j].fl.on_ob(w)};
                    int lhs = carrier->whisker_r(dg, leg).mor;
                    int rhs = c.gamma[k].fl.on_mor(c.weight.at2({j, k, g2}).comp[w]);
                    if (lhs != rhs) {
                        bad.push_back("cone is not natural at 2-cell " +
                                      quoted(h.loose->morphism_name(g2)));
                        return bad;
                    }
                }
            }
        }
    return bad;
}

Sketch Sketch::make(FCatPtr carrier, std::vector<SketchCone> cones, bool tight_cones) {
    for (std::size_t i = 0; i < cones.size(); ++i) {
        auto bad = validate_cone(carrier, cones[i]);
        if (!bad.empty())
            throw ValidationError("sketch cone " + std::to_string(i) + ": " + bad.front());
        if (tight_cones) {
            const auto& j = cones[i].shape;
            for (int x = 0; x < j->num_objects(); ++x)
                for (int y = 0; y < j->num_objects(); ++y)
                    if (!j->hom(x, y).is_chordate())
                        throw ValidationError("sketch cone " + std::to_string(i) +
                                              ": shape is not chordate but tight_cones is set");
        }
    }
    Sketch s;
    s.carrier = std::move(carrier);
    s.cones = std::move(cones);
    s.tight_cones = tight_cones;
    return s;
}

RClass rclass_from_string(const std::string& s) {
    if (s == "iso") return RClass::Iso;
    if (s == "equiv" || s == "equivalence") return RClass::Equivalence;
    throw ParseError("unknown class of morphisms " + quoted(s));
}

std::string to_string(RClass r) { return r == RClass::Iso ? "iso" : "equiv"; }

// ---------------------------------------------------------------------------
// model checking
// ---------------------------------------------------------------------------

Diagram compose_diagram(const Diagram& f, const FFunctor& d) {
    Diagram out;
    out.src = d.src;
    const int n = d.src->num_objects();
    out.ob.reserve(n);
    for (int j = 0; j < n; ++j) out.ob.push_back(f.ob[d.ob[j]]);
    out.on1.resize(n * n);
    out.on2.resize(n * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const auto& h = d.src->hom(j, k);
            for (int u = 0; u < h.loose->num_objects(); ++u)
                out.on1[j * n + k].push_back(f.at1(d.on1({j, k, u})));
            for (int m = 0; m < h.loose->num_morphisms(); ++m)
                out.on2[j * n + k].push_back(f.at2(d.on2({j, k, m})));
        }
    auto bad = validate_diagram(out);
    if (!bad.empty()) throw ValidationError("composite diagram: " + bad.front());
    return out;
}

ComparisonMap model_comparison_map(const Diagram& f, const Sketch& s, int cone_index,
                                   std::int64_t bound) {
    const auto& cone = s.cones[cone_index];
    const auto& carrier = s.carrier;
    ComparisonMap out;
    out.limit = weighted_limit_end(cone.weight, compose_diagram(f, cone.diagram), bound);
    const int nj = cone.shape->num_objects();
    const auto& fs = f.ob[cone.apex];

    // rho on a loose object xi of F(apex): the family w |-> F(gamma_j(w))(xi)
    auto family_of = [&](int xi) {
        std::vector<FiniteFunctor> fam(nj);
        for (int j = 0; j < nj; ++j) {
            const auto* wl = cone.weight.ob[j].loose.get();
            std::vector<int> ob(wl->num_objects()), mor(wl->num_morphisms());
            for (int w = 0; w < wl->num_objects(); ++w) {
                Cell1 leg{cone.apex, cone.diagram.ob[j], cone.gamma[j].fl.on_ob(w)};
                ob[w] = f.at1(leg).on_ob(xi);
            }
            for (int wm = 0; wm < wl->num_morphisms(); ++wm) {
                Cell2 legm{cone.apex, cone.diagram.ob[j], cone.gamma[j].fl.on_mor(wm)};
                mor[wm] = f.at2(legm).comp[xi];
            }
            fam[j] = FiniteFunctor::make(cone.weight.ob[j].loose, f.ob[cone.diagram.ob[j]].loose,
                                         std::move(ob), std::move(mor));
        }
        return fam;
    };
    auto find_family = [&](const std::vector<FiniteFunctor>& fam) {
        for (std::size_t i = 0; i < out.limit.families.size(); ++i) {
            bool eq = true;
            for (int j = 0; j < nj && eq; ++j) eq = functor_equal(out.limit.families[i][j], fam[j]);
            if (eq) return static_cast<int>(i);
        }
        return -1;
    };
    std::vector<int> ob(fs.loose->num_objects());
    for (int xi = 0; xi < fs.loose->num_objects(); ++xi) {
        ob[xi] = find_family(family_of(xi));
        if (ob[xi] < 0)
            throw ValidationError("comparison map: induced family is not a limit family");
    }
    std::vector<int> mor(fs.loose->num_morphisms());
    for (int hm = 0; hm < fs.loose->num_morphisms(); ++hm) {
        // modification with components F(gamma_j(w))(hm)
        std::vector<NaturalTransformation> mod(nj);
        for (int j = 0; j < nj; ++j) {
            const auto* wl = cone.weight.ob[j].loose.get();
            NaturalTransformation t;
            t.source_functor = out.limit.families[ob[fs.loose->src(hm)]][j];
            t.target_functor = out.limit.families[ob[fs.loose->dst(hm)]][j];
            t.comp.resize(wl->num_objects());
            for (int w = 0; w < wl->num_objects(); ++w) {
                Cell1 leg{cone.apex, cone.diagram.ob[j], cone.gamma[j].fl.on_ob(w)};
                t.comp[w] = f.at1(leg).on_mor(hm);
            }
            mod[j] = std::move(t);
        }
        int idx = -1;
        for (int cand = 0; cand < out.limit.apex.loose->num_morphisms() && idx < 0; ++cand) {
            if (out.limit.apex.loose->src(cand) != ob[fs.loose->src(hm)] ||
                out.limit.apex.loose->dst(cand) != ob[fs.loose->dst(hm)])
                continue;
            bool eq = true;
            for (int j = 0; j < nj && eq; ++j)
                eq = out.limit.family_mods[cand][j].comp == mod[j].comp;
            if (eq) idx = cand;
        }
        if (idx < 0) throw ValidationError("comparison map: induced modification missing");
        mor[hm] = idx;
    }
    auto fl = FiniteFunctor::make(fs.loose, out.limit.apex.loose, std::move(ob), std::move(mor));
    auto ft = tight_restriction(fl, fs, out.limit.apex);
    out.rho = FMap::make(fs, out.limit.apex, std::move(ft), std::move(fl));
    return out;
}

ModelReport check_model(const Diagram& f, const Sketch& s, RClass r, std::int64_t bound) {
    {
        auto bad = validate_diagram(f);
        if (!bad.empty()) throw ValidationError("model candidate: " + bad.front());
    }
    ModelReport rep;
    auto battery = fobject_test_battery(2);
    rep.battery_size = static_cast<int>(battery.size());
    for (std::size_t i = 0; i < s.cones.size(); ++i) {
        ConeVerdict v;
        ComparisonMap cm = model_comparison_map(f, s, static_cast<int>(i), bound);
        if (r == RClass::Iso) {
            // representables jointly reflect isomorphisms, so rho itself is
            // checked instead of hom(K, rho) over all K
            v.passed = fmap_is_iso(cm.rho);
            if (!v.passed)
                v.witness = "comparison map at cone " + std::to_string(i) +
                            " is not an isomorphism";
        } else {
            v.passed = true;
            for (const auto& k : battery) {
                auto hk_src = hom_ambient_f(k, cm.rho.src, bound);
                auto hk_dst = hom_ambient_f(k, cm.rho.dst, bound);
                auto fl = postcompose_functor(hk_src.loose_cat, hk_dst.loose_cat, cm.rho.fl);
                auto ft = tight_restriction(fl, hk_src.ob, hk_dst.ob);
                auto post = FMap::make(hk_src.ob, hk_dst.ob, std::move(ft), fl);
                if (!fmap_is_equivalence(post)) {
                    v.passed = false;
                    v.witness = "hom(K, rho) at cone " + std::to_string(i) +
                                " is not an equivalence for K = " + k.loose->label();
                    break;
                }
            }
        }
        rep.cones.push_back(std::move(v));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// sketch morphisms
// ---------------------------------------------------------------------------

namespace {

SketchCone transport_cone(const FFunctor& i, const SketchCone& c) {
    SketchCone out;
    out.shape = c.shape;
    out.weight = c.weight;
    out.diagram = compose(i, c.diagram);
    out.apex = i.ob[c.apex];
    out.gamma.reserve(c.gamma.size());
    for (std::size_t j = 0; j < c.gamma.size(); ++j)
        out.gamma.push_back(fmap_compose(i.action(c.apex, c.diagram.ob[j]), c.gamma[j]));
    return out;
}

bool cone_equal(const SketchCone& a, const SketchCone& b) {
    if (!fcategory_equal(a.shape, b.shape)) return false;
    if (!diagram_equal(a.weight, b.weight)) return false;
    if (!ffunctor_equal(a.diagram, b.diagram)) return false;
    if (a.apex != b.apex) return false;
    for (std::size_t j = 0; j < a.gamma.size(); ++j)
        if (!functor_equal(a.gamma[j].fl, b.gamma[j].fl)) return false;
    return true;
}

bool is_cone_of(const Sketch& s, const SketchCone& c) {
    for (const auto& sc : s.cones)
        if (cone_equal(sc, c)) return true;
    return false;
}

} // namespace

bool check_sketch_morphism(const FFunctor& i, const Sketch& s, const Sketch& t) {
    for (const auto& c : s.cones)
        if (!is_cone_of(t, transport_cone(i, c))) return false;
    return true;
}

bool check_cone_reflecting(const FFunctor& i, const Sketch& s, const Sketch& t,
                           std::int64_t bound) {
    // candidate shapes and weights: those appearing among the cones of S and T
    std::vector<const SketchCone*> templates;
    for (const auto& c : s.cones) templates.push_back(&c);
    for (const auto& c : t.cones) templates.push_back(&c);
    std::set<std::string> seen;
    for (const auto* tc : templates) {
        // dedup by shape label + weight value labels
        std::vector<std::string> kparts{tc->shape->label()};
        for (const auto& o : tc->weight.ob) kparts.push_back(o.loose->label());
        auto key = encode_name(kparts);
        if (!seen.insert(key).second) continue;
        auto ds = enumerate_ffunctors(tc->shape, s.carrier, bound);
        const int nj = tc->shape->num_objects();
        for (const auto& dcand : ds) {
            for (int apex = 0; apex < s.carrier->num_objects(); ++apex) {
                // enumerate legs: squares W(j) -> hom(apex, D j)
                std::vector<std::vector<FMap>> legcands(nj);
                bool feasible = true;
                for (int j = 0; j < nj && feasible; ++j) {
                    auto homs = hom_ambient_f(tc->weight.ob[j],
                                              s.carrier->hom(apex, dcand.ob[j]), bound);
                    legcands[j] = homs.tight_obs;
                    feasible = !legcands[j].empty();
                }
                if (!feasible) continue;
                SketchCone cand;
                cand.shape = tc->shape;
                cand.weight = tc->weight;
                cand.diagram = dcand;
                cand.apex = apex;
                cand.gamma.assign(nj, FMap{});
                std::int64_t steps = 0;
                bool ok = true;
                auto rec = [&](auto&& self, int j) -> void {
                    if (!ok) return;
                    if (++steps > bound)
                        throw EnumerationBoundExceeded("cone reflection enumeration bound");
                    if (j == nj) {
                        if (!validate_cone(s.carrier, cand).empty()) return;
                        if (is_cone_of(t, transport_cone(i, cand)) && !is_cone_of(s, cand))
                            ok = false;
                        return;
                    }
                    for (const auto& leg : legcands[j]) {
                        cand.gamma[j] = leg;
                        self(self, j + 1);
                    }
                };
                rec(rec, 0);
                if (!ok) return false;
            }
        }
    }
    return true;
}

Diagram restrict_model(const FFunctor& i, const Diagram& f, const Sketch& s, const Sketch& t,
                       RClass r, std::int64_t bound) {
    auto restricted = compose_diagram(f, i);
    auto rep = check_model(restricted, s, r, bound);
    if (!rep.is_model()) {
        std::string w;
        for (const auto& c : rep.cones)
            if (!c.passed) w = c.witness;
        throw ModelCheckFailed("restriction is not a model: " + w);
    }
    return restricted;
}

TightPart tight_part_sketch(const Sketch& t) {
    const auto& c = t.carrier;
    const int n = c->num_objects();
    std::vector<std::string> objects;
    for (int x = 0; x < n; ++x) objects.push_back(c->object_name(x));
    std::vector<CatPtr> homs;
    std::vector<FiniteFunctor> hcomps;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) homs.push_back(c->hom(x, y).tight);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) hcomps.push_back(c->hcomp(x, y, z).map.ft);
    std::vector<int> units;
    for (int x = 0; x < n; ++x) units.push_back(c->unit_tight(x));
    auto tau = chordate_fcategory(c->label() + "_tau", objects, homs, hcomps, units);

    // inclusion
    std::vector<int> ob(n);
    std::iota(ob.begin(), ob.end(), 0);
    std::vector<FMap> act;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = c->hom(x, y);
            act.push_back(FMap::make(tau->hom(x, y), h, FiniteFunctor::identity(h.tight), h.embed));
        }
    auto incl = FFunctor::make(tau, c, std::move(ob), std::move(act));

    // inherited cones: legs must land tight
    std::vector<SketchCone> cones;
    for (const auto& cone : t.cones) {
        SketchCone tc;
        tc.shape = cone.shape;
        tc.weight = cone.weight;
        tc.apex = cone.apex;
        // D factors through the tight part (chordate shapes only)
        std::vector<FMap> dact;
        const int nj = cone.shape->num_objects();
        for (int j = 0; j < nj; ++j)
            for (int k = 0; k < nj; ++k) {
                const auto& a = cone.diagram.action(j, k);
                const auto& th = tau->hom(cone.diagram.ob[j], cone.diagram.ob[k]);
                dact.push_back(FMap::make(cone.shape->hom(j, k), th, a.ft, a.ft));
            }
        tc.diagram = FFunctor::make(cone.shape, tau, cone.diagram.ob, std::move(dact));
        for (int j = 0; j < nj; ++j) {
            const auto& g = cone.gamma[j];
            const auto& h = c->hom(cone.apex, cone.diagram.ob[j]);
            if (!functor_is_tight_cell(g.fl, cone.weight.ob[j], h))
                throw ValidationError("tight part: a cone leg does not land in tight cells");
            auto fl = tight_restriction(g.fl, cone.weight.ob[j], h);
            tc.gamma.push_back(
                FMap::make(cone.weight.ob[j], tau->hom(cone.apex, cone.diagram.ob[j]), g.ft, fl));
        }
        cones.push_back(std::move(tc));
    }
    TightPart out;
    out.sketch = Sketch::make(tau, std::move(cones), t.tight_cones);
    out.inclusion = std::move(incl);
    return out;
}

// ---------------------------------------------------------------------------
// presheaves
// ---------------------------------------------------------------------------

Diagram yoneda_diagram(const FCatPtr& carrier, int s) {
    Diagram out;
    out.src = carrier;
    const int n = carrier->num_objects();
    out.ob.reserve(n);
    for (int x = 0; x < n; ++x) out.ob.push_back(carrier->hom(s, x));
    out.on1.resize(n * n);
    out.on2.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = carrier->hom(x, y);
            for (int u = 0; u < h.loose->num_objects(); ++u) {
                // postcomposition by u: hom(s,x) -> hom(s,y)
                const auto* hsx = carrier->hom(s, x).loose.get();
                std::vector<int> ob(hsx->num_objects()), mor(hsx->num_morphisms());
                for (int g = 0; g < hsx->num_objects(); ++g)
                    ob[g] = carrier->compose1({x, y, u}, {s, x, g}).ob;
                for (int gm = 0; gm < hsx->num_morphisms(); ++gm)
                    mor[gm] = carrier->whisker_l({x, y, u}, {s, x, gm}).mor;
                out.on1[x * n + y].push_back(FiniteFunctor::make(
                    carrier->hom(s, x).loose, carrier->hom(s, y).loose, std::move(ob), std::move(mor)));
            }
            for (int m = 0; m < h.loose->num_morphisms(); ++m) {
                const auto* hsx = carrier->hom(s, x).loose.get();
                NaturalTransformation t;
                t.source_functor = out.on1[x * n + y][h.loose->src(m)];
                t.target_functor = out.on1[x * n + y][h.loose->dst(m)];
                t.comp.resize(hsx->num_objects());
                for (int g = 0; g < hsx->num_objects(); ++g)
                    t.comp[g] = carrier->whisker_r({x, y, m}, {s, x, g}).mor;
                out.on2[x * n + y].push_back(std::move(t));
            }
        }
    auto bad = validate_diagram(out);
    if (!bad.empty()) throw ValidationError("representable presheaf: " + bad.front());
    return out;
}

Diagram hom_presheaf(const FObject& k, const Diagram& f, std::int64_t bound) {
    Diagram out;
    out.src = f.src;
    const int n = f.src->num_objects();
    std::vector<FHom> homs;
    homs.reserve(n);
    for (int x = 0; x < n; ++x) homs.push_back(hom_ambient_f(k, f.ob[x], bound));
    for (int x = 0; x < n; ++x) out.ob.push_back(homs[x].ob);
    out.on1.resize(n * n);
    out.on2.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = f.src->hom(x, y);
            for (int u = 0; u < h.loose->num_objects(); ++u)
                out.on1[x * n + y].push_back(
                    postcompose_functor(homs[x].loose_cat, homs[y].loose_cat, f.at1({x, y, u})));
            for (int m = 0; m < h.loose->num_morphisms(); ++m)
                out.on2[x * n + y].push_back(
                    postwhisker(homs[x].loose_cat, homs[y].loose_cat, f.at2({x, y, m})));
        }
    auto bad = validate_diagram(out);
    if (!bad.empty()) throw ValidationError("hom presheaf: " + bad.front());
    return out;
}

std::vector<std::string> validate_presheaf_map(const Diagram& from, const Diagram& to,
                                               const PresheafMap& m) {
    std::vector<std::string> bad;
    const auto& s = from.src;
    const int n = s->num_objects();
    if (static_cast<int>(m.comp.size()) != n) {
        bad.push_back("component count mismatch");
        return bad;
    }
    for (int x = 0; x < n; ++x) {
        if (!fobject_equal(m.comp[x].src, from.ob[x]) || !fobject_equal(m.comp[x].dst, to.ob[x])) {
            bad.push_back("component at " + quoted(s->object_name(x)) + " has wrong endpoints");
            return bad;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = s->hom(x, y);
            for (int u = 0; u < h.loose->num_objects(); ++u) {
                if (!functor_equal(compose(to.at1({x, y, u}), m.comp[x].fl),
                                   compose(m.comp[y].fl, from.at1({x, y, u}))))
                    bad.push_back("naturality fails at 1-cell " + quoted(h.loose->object_name(u)));
            }
            for (int mm = 0; mm < h.loose->num_morphisms(); ++mm) {
                auto lhs = whisker_right(to.at2({x, y, mm}), m.comp[x].fl);
                auto rhs = whisker_left(m.comp[y].fl, from.at2({x, y, mm}));
                if (lhs.comp != rhs.comp)
                    bad.push_back("naturality fails at 2-cell " + quoted(h.loose->morphism_name(mm)));
            }
        }
    return bad;
}

// ---------------------------------------------------------------------------
// bounded colimits of categories (glued pieces)
// ---------------------------------------------------------------------------

namespace {

/// A colimit of categories presented by pieces with object and morphism
/// identifications, computed inside the bounded universe of composite paths.
/// Stabilization (every maximal-length path reduces to a shorter one) is
/// required; otherwise the colimit is reported as not finite within the
/// bound.
struct GluedColimit {
    std::vector<CatPtr> pieces;
    int max_len = 4;
    std::int64_t bound = kDefaultBound;

    // object classes
    std::vector<int> ob_class;       // flattened (piece, ob) -> class
    std::vector<int> ob_offset;      // per piece
    int n_ob_classes = 0;

    // generators: flattened (piece, mor)
    std::vector<int> gen_offset;
    int n_gens = 0;
    std::vector<int> gen_src_class, gen_dst_class;

    // path universe
    std::vector<std::vector<int>> paths;        // generator sequences (first applied first)
    std::map<std::vector<int>, int> path_index; // includes empty paths keyed {-1-class}
    std::vector<int> path_src, path_dst;
    std::vector<int> parent;                    // union-find over paths

    CatPtr cat;
    std::vector<int> class_of_pathclass;        // path class root -> morphism index of cat
    std::vector<int> object_of_class;           // object class -> object index of cat

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }

    int ob_cls(int piece, int ob) const { return ob_class[ob_offset[piece] + ob]; }
    int gen_id(int piece, int mor) const { return gen_offset[piece] + mor; }

    void build(const std::vector<std::array<int, 4>>& ob_ids,
               const std::vector<std::array<int, 4>>& mor_ids) {
        // object classes by union-find
        ob_offset.resize(pieces.size());
        int total_ob = 0;
        for (std::size_t p = 0; p < pieces.size(); ++p) {
            ob_offset[p] = total_ob;
            total_ob += pieces[p]->num_objects();
        }
        std::vector<int> uf(total_ob);
        std::iota(uf.begin(), uf.end(), 0);
        std::function<int(int)> f_ob = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const auto& [p1, o1, p2, o2] : ob_ids)
            uf[f_ob(ob_offset[p1] + o1)] = f_ob(ob_offset[p2] + o2);
        ob_class.resize(total_ob);
        std::map<int, int> root_to_class;
        for (int i = 0; i < total_ob; ++i) {
            int r = f_ob(i);
            auto it = root_to_class.find(r);
            if (it == root_to_class.end())
                it = root_to_class.emplace(r, static_cast<int>(root_to_class.size())).first;
            ob_class[i] = it->second;
        }
        n_ob_classes = static_cast<int>(root_to_class.size());

        // generators
        gen_offset.resize(pieces.size());
        n_gens = 0;
        for (std::size_t p = 0; p < pieces.size(); ++p) {
            gen_offset[p] = n_gens;
            n_gens += pieces[p]->num_morphisms();
        }
        gen_src_class.resize(n_gens);
        gen_dst_class.resize(n_gens);
        for (std::size_t p = 0; p < pieces.size(); ++p)
            for (int m = 0; m < pieces[p]->num_morphisms(); ++m) {
                gen_src_class[gen_id(static_cast<int>(p), m)] = ob_cls(static_cast<int>(p), pieces[p]->src(m));
                gen_dst_class[gen_id(static_cast<int>(p), m)] = ob_cls(static_cast<int>(p), pieces[p]->dst(m));
            }

        // path universe: empty paths per class, then composable sequences
        auto add_path = [&](std::vector<int> seq, int src, int dst) -> int {
            auto key = seq;
            if (seq.empty()) key = {-1 - src};
            auto it = path_index.find(key);
            if (it != path_index.end()) return it->second;
            int id = static_cast<int>(paths.size());
            paths.push_back(std::move(seq));
            path_index.emplace(std::move(key), id);
            path_src.push_back(src);
            path_dst.push_back(dst);
            return id;
        };
        for (int c = 0; c < n_ob_classes; ++c) add_path({}, c, c);
        std::size_t frontier_begin = 0;
        for (int len = 1; len <= max_len; ++len) {
            std::size_t frontier_end = paths.size();
            for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
                if (static_cast<int>(paths[i].size()) != len - 1) continue;
                for (int g = 0; g < n_gens; ++g) {
                    if (gen_src_class[g] != path_dst[i]) continue;
                    auto seq = paths[i];
                    seq.push_back(g);
                    add_path(std::move(seq), path_src[i], gen_dst_class[g]);
                    if (static_cast<std::int64_t>(paths.size()) > bound)
                        throw FinitenessExceeded(
                            "glued colimit generates too many composites within the bound");
                }
            }
            frontier_begin = frontier_end;
        }

        parent.resize(paths.size());
        std::iota(parent.begin(), parent.end(), 0);

        // base relations
        for (std::size_t p = 0; p < pieces.size(); ++p) {
            for (int o = 0; o < pieces[p]->num_objects(); ++o) {
                int idg = gen_id(static_cast<int>(p), pieces[p]->identity(o));
                unite(path_index.at({idg}), path_index.at({-1 - ob_cls(static_cast<int>(p), o)}));
            }
            for (int g = 0; g < pieces[p]->num_morphisms(); ++g)
                for (int f2 = 0; f2 < pieces[p]->num_morphisms(); ++f2)
                    if (pieces[p]->composable(g, f2)) {
                        int a = gen_id(static_cast<int>(p), f2);
                        int b = gen_id(static_cast<int>(p), g);
                        int c = gen_id(static_cast<int>(p), pieces[p]->compose(g, f2));
                        if (max_len >= 2) unite(path_index.at({a, b}), path_index.at({c}));
                    }
        }
        for (const auto& [p1, m1, p2, m2] : mor_ids)
            unite(path_index.at({gen_id(p1, m1)}), path_index.at({gen_id(p2, m2)}));

        // congruence closure by single-generator extension
        bool changed = true;
        while (changed) {
            changed = false;
            std::map<int, std::vector<int>> groups;
            for (std::size_t i = 0; i < paths.size(); ++i) groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));
            for (auto& [root, members] : groups) {
                (void)root;
                if (members.size() < 2) continue;
                for (int g = 0; g < n_gens; ++g) {
                    int target = -1;
                    for (int mcand : members) {
                        if (gen_src_class[g] != path_dst[mcand]) continue;
                        if (static_cast<int>(paths[mcand].size()) + 1 > max_len) continue;
                        auto seq = paths[mcand];
                        seq.push_back(g);
                        auto it = path_index.find(seq);
                        if (it == path_index.end()) continue;
                        if (target == -1)
                            target = find(it->second);
                        else if (find(it->second) != target) {
                            unite(it->second, target);
                            changed = true;
                        }
                    }
                }
                // left extension
                for (int g = 0; g < n_gens; ++g) {
                    int target = -1;
                    for (int mcand : members) {
                        if (gen_dst_class[g] != path_src[mcand]) continue;
                        if (static_cast<int>(paths[mcand].size()) + 1 > max_len) continue;
                        std::vector<int> seq;
                        seq.push_back(g);
                        seq.insert(seq.end(), paths[mcand].begin(), paths[mcand].end());
                        auto it = path_index.find(seq);
                        if (it == path_index.end()) continue;
                        if (target == -1)
                            target = find(it->second);
                        else if (find(it->second) != target) {
                            unite(it->second, target);
                            changed = true;
                        }
                    }
                }
            }
        }

        // stabilization: every maximal path must be congruent to a shorter one
        for (std::size_t i = 0; i < paths.size(); ++i) {
            if (static_cast<int>(paths[i].size()) != max_len) continue;
            bool reduces = false;
            for (std::size_t j = 0; j < paths.size() && !reduces; ++j)
                reduces = paths[j].size() < static_cast<std::size_t>(max_len) &&
                          find(static_cast<int>(j)) == find(static_cast<int>(i));
            if (!reduces)
                throw FinitenessExceeded(
                    "glued colimit did not stabilize within the generation bound");
        }

        // build the quotient category
        std::vector<int> roots;
        std::map<int, int> root_to_mor;
        std::vector<std::string> root_key(paths.size());
        for (std::size_t i = 0; i < paths.size(); ++i) {
            int r = find(static_cast<int>(i));
            std::vector<std::string> parts;
            for (int g : paths[i]) parts.push_back(std::to_string(g));
            auto key = encode_name(parts);
            if (root_key[r].empty() || key < root_key[r]) root_key[r] = key;
        }
        CategoryData data;
        data.label = "glued";
        for (int c = 0; c < n_ob_classes; ++c) data.objects.push_back("q" + std::to_string(c));
        std::map<int, std::string> root_name;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            int r = find(static_cast<int>(i));
            if (root_name.count(r)) continue;
            root_name[r] = encode_name({"p", root_key[r]});
            data.morphisms.push_back({root_name[r], "q" + std::to_string(path_src[i]),
                                      "q" + std::to_string(path_dst[i])});
        }
        for (int c = 0; c < n_ob_classes; ++c)
            data.identities.emplace_back("q" + std::to_string(c),
                                         root_name.at(find(path_index.at({-1 - c}))));
        // composition by splicing reduced representatives
        auto reduce_to_class = [&](std::vector<int> seq, int src) -> int {
            for (;;) {
                std::vector<int> key = seq;
                if (seq.empty()) key = {-1 - src};
                auto it = path_index.find(key);
                if (it != path_index.end()) return find(it->second);
                // replace the length-max_len prefix with a shorter representative
                std::vector<int> prefix(seq.begin(), seq.begin() + max_len);
                int pi = find(path_index.at(prefix));
                // find a shorter member of that class
                std::vector<int> best;
                bool found = false;
                for (std::size_t j = 0; j < paths.size(); ++j)
                    if (find(static_cast<int>(j)) == pi &&
                        paths[j].size() < static_cast<std::size_t>(max_len)) {
                        if (!found || paths[j].size() < best.size()) {
                            best = paths[j];
                            found = true;
                        }
                    }
                if (!found) throw FinitenessExceeded("glued colimit reduction failed");
                std::vector<int> next = best;
                next.insert(next.end(), seq.begin() + max_len, seq.end());
                seq = std::move(next);
            }
        };
        std::map<int, std::pair<int, std::vector<int>>> class_rep; // root -> (src, seq)
        for (std::size_t i = 0; i < paths.size(); ++i) {
            int r = find(static_cast<int>(i));
            auto it = class_rep.find(r);
            if (it == class_rep.end() || paths[i].size() < it->second.second.size())
                class_rep[r] = {path_src[i], paths[i]};
        }
        for (auto& [r1, rep1] : class_rep)
            for (auto& [r2, rep2] : class_rep) {
                // compose rep2 after rep1
                int r1root = find(path_index.count(rep1.second.empty()
                                                       ? std::vector<int>{-1 - rep1.first}
                                                       : rep1.second)
                                      ? path_index.at(rep1.second.empty()
                                                          ? std::vector<int>{-1 - rep1.first}
                                                          : rep1.second)
                                      : 0);
                (void)r1root;
                int dst1 = rep1.second.empty() ? rep1.first : gen_dst_class[rep1.second.back()];
                int src2 = rep2.first;
                if (dst1 != src2) continue;
                std::vector<int> seq = rep1.second;
                seq.insert(seq.end(), rep2.second.begin(), rep2.second.end());
                int rc = reduce_to_class(std::move(seq), rep1.first);
                data.compose.push_back({root_name.at(r2), root_name.at(r1), root_name.at(rc)});
            }
        cat = FiniteCategory::make(std::move(data));
        object_of_class.resize(n_ob_classes);
        for (int c = 0; c < n_ob_classes; ++c)
            object_of_class[c] = cat->object_index("q" + std::to_string(c));
        class_of_pathclass.assign(paths.size(), -1);
        for (auto& [r, name] : root_name) class_of_pathclass[r] = cat->morphism_index(name);
    }

    int object_in_cat(int piece, int ob) const { return object_of_class[ob_cls(piece, ob)]; }
    int morphism_in_cat(int piece, int mor) {
        return class_of_pathclass[find(path_index.at({gen_id(piece, mor)}))];
    }
    int path_in_cat(const std::vector<std::pair<int, int>>& gens, int src_class) {
        std::vector<int> seq;
        for (auto [p, m] : gens) seq.push_back(gen_id(p, m));
        // reduce
        for (;;) {
            std::vector<int> key = seq;
            if (seq.empty()) key = {-1 - src_class};
            auto it = path_index.find(key);
            if (it != path_index.end()) return class_of_pathclass[find(it->second)];
            std::vector<int> prefix(seq.begin(), seq.begin() + max_len);
            int pi = find(path_index.at(prefix));
            std::vector<int> best;
            bool found = false;
            for (std::size_t j = 0; j < paths.size(); ++j)
                if (find(static_cast<int>(j)) == pi &&
                    paths[j].size() < static_cast<std::size_t>(max_len)) {
                    if (!found || paths[j].size() < best.size()) {
                        best = paths[j];
                        found = true;
                    }
                }
            if (!found) throw FinitenessExceeded("glued colimit reduction failed");
            std::vector<int> next = best;
            next.insert(next.end(), seq.begin() + max_len, seq.end());
            seq = std::move(next);
        }
    }
};

} // namespace

SigmaResult sigma_map(const Sketch& s, int cone_index, int colimit_bound, std::int64_t bound) {
    const auto& cone = s.cones[cone_index];
    const auto& carrier = s.carrier;
    const int n = carrier->num_objects();
    const int nj = cone.shape->num_objects();

    SigmaResult out;
    out.colimit.src = carrier;
    out.colimit.ob.resize(n);
    out.colimit.on1.resize(n * n);
    out.colimit.on2.resize(n * n);
    out.sigma.comp.resize(n);

    // per carrier object x: the coend of W(j) x hom(D j, x)
    std::vector<std::shared_ptr<GluedColimit>> glue(n);
    std::vector<std::vector<ProductCategory>> prods(n); // per x, per j
    for (int x = 0; x < n; ++x) {
        auto g = std::make_shared<GluedColimit>();
        g->max_len = colimit_bound;
        g->bound = bound;
        prods[x].reserve(nj);
        for (int j = 0; j < nj; ++j) {
            prods[x].push_back(
                product_category(cone.weight.ob[j].loose, carrier->hom(cone.diagram.ob[j], x).loose));
            g->pieces.push_back(prods[x][j].cat);
        }
        std::vector<std::array<int, 4>> ob_ids, mor_ids;
        for (int j = 0; j < nj; ++j)
            for (int k = 0; k < nj; ++k) {
                const auto& hjk = cone.shape->hom(j, k);
                for (int u = 0; u < hjk.loose->num_objects(); ++u) {
                    Cell1 du = cone.diagram.on1({j, k, u});
                    const auto* wj = cone.weight.ob[j].loose.get();
                    const auto* hk = carrier->hom(cone.diagram.ob[k], x).loose.get();
                    for (int w = 0; w < wj->num_objects(); ++w)
                        for (int m = 0; m < hk->num_objects(); ++m) {
                            int m_du = carrier->compose1({cone.diagram.ob[k], x, m}, du).ob;
                            int wu = cone.weight.at1({j, k, u}).on_ob(w);
                            ob_ids.push_back({j, prods[x][j].pair_ob(w, m_du), k,
                                              prods[x][k].pair_ob(wu, m)});
                        }
                    const auto* wjm = cone.weight.ob[j].loose.get();
                    for (int wm = 0; wm < wjm->num_morphisms(); ++wm)
                        for (int mm = 0; mm < hk->num_morphisms(); ++mm) {
                            int mm_du = carrier->whisker_r({cone.diagram.ob[k], x, mm}, du).mor;
                            int wum = cone.weight.at1({j, k, u}).on_mor(wm);
                            mor_ids.push_back({j, prods[x][j].pair_mor(wm, mm_du), k,
                                               prods[x][k].pair_mor(wum, mm)});
                        }
                }
                for (int g2 = 0; g2 < hjk.loose->num_morphisms(); ++g2) {
                    Cell2 dg = cone.diagram.on2({j, k, g2});
                    const auto* wj = cone.weight.ob[j].loose.get();
                    const auto* hk = carrier->hom(cone.diagram.ob[k], x).loose.get();
                    int u = hjk.loose->src(g2);
                    Cell1 du = cone.diagram.on1({j, k, u});
                    for (int w = 0; w < wj->num_objects(); ++w)
                        for (int m = 0; m < hk->num_objects(); ++m) {
                            // (id_w, m * D(gamma)) ~ ((W gamma)_w, id_m)
                            int mdg = carrier->whisker_l({cone.diagram.ob[k], x, m}, dg).mor;
                            int widm = wj->identity(w);
                            int wgw = cone.weight.at2({j, k, g2}).comp[w];
                            int mid = hk->identity(m);
                            mor_ids.push_back({j, prods[x][j].pair_mor(widm, mdg), k,
                                               prods[x][k].pair_mor(wgw, mid)});
                        }
                    (void)du;
                }
            }
        g->build(ob_ids, mor_ids);
        glue[x] = g;

        // the FObject at x: tight part = full image of the tight pairs
        std::set<int> tight_set;
        for (int j = 0; j < nj; ++j) {
            const auto& wj = cone.weight.ob[j];
            const auto& hj = carrier->hom(cone.diagram.ob[j], x);
            for (int wt = 0; wt < wj.tight->num_objects(); ++wt)
                for (int mt = 0; mt < hj.tight->num_objects(); ++mt) {
                    int pair = prods[x][j].pair_ob(wj.embed.on_ob(wt), hj.embed.on_ob(mt));
                    tight_set.insert(g->object_in_cat(j, pair));
                }
        }
        std::vector<int> tight(tight_set.begin(), tight_set.end());
        auto sub = full_subcategory(g->cat, tight);
        out.colimit.ob[x] = FObject::make(sub.cat, g->cat, sub.inclusion);
    }

    // functorial action on carrier cells
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = carrier->hom(x, y);
            for (int u = 0; u < h.loose->num_objects(); ++u) {
                std::vector<int> ob(glue[x]->cat->num_objects(), -1);
                std::vector<int> mor(glue[x]->cat->num_morphisms(), -1);
                // generators map componentwise: (w, m) -> (w, u . m)
                for (int j = 0; j < nj; ++j) {
                    const auto* pj = prods[x][j].cat.get();
                    for (int po = 0; po < pj->num_objects(); ++po) {
                        auto [w, m] = prods[x][j].pair_of_ob[po];
                        int um = carrier->compose1({x, y, u}, {cone.diagram.ob[j], x, m}).ob;
                        ob[glue[x]->object_in_cat(j, po)] =
                            glue[y]->object_in_cat(j, prods[y][j].pair_ob(w, um));
                    }
                }
                // morphisms: map each path representative generator by generator
                for (std::size_t pi = 0; pi < glue[x]->paths.size(); ++pi) {
                    int target = glue[x]->class_of_pathclass[glue[x]->find(static_cast<int>(pi))];
                    if (target < 0 || mor[target] >= 0) continue;
                    std::vector<std::pair<int, int>> image;
                    int src_class = glue[x]->path_src[pi];
                    bool okpath = true;
                    for (int gidx : glue[x]->paths[pi]) {
                        // identify which piece this generator belongs to
                        int piece = 0;
                        while (piece + 1 < nj && glue[x]->gen_offset[piece + 1] <= gidx) ++piece;
                        int local = gidx - glue[x]->gen_offset[piece];
                        auto [wm, mm] = prods[x][piece].pair_of_mor[local];
                        int umm = carrier->whisker_l({x, y, u}, {cone.diagram.ob[piece], x, mm}).mor;
                        image.emplace_back(piece, prods[y][piece].pair_mor(wm, umm));
                        (void)okpath;
                    }
                    // source class in y-glue: image of the source object class
                    int src_in_y = -1;
                    // find a member (piece, ob) of the x-class
                    for (int j = 0; j < nj && src_in_y < 0; ++j) {
                        const auto* pj = prods[x][j].cat.get();
                        for (int po = 0; po < pj->num_objects() && src_in_y < 0; ++po)
                            if (glue[x]->ob_cls(j, po) == src_class) {
                                auto [w, m] = prods[x][j].pair_of_ob[po];
                                int um = carrier->compose1({x, y, u}, {cone.diagram.ob[j], x, m}).ob;
                                src_in_y = glue[y]->ob_cls(j, prods[y][j].pair_ob(w, um));
                            }
                    }
                    mor[target] = glue[y]->path_in_cat(image, src_in_y);
                }
                out.colimit.on1[x * n + y].push_back(
                    FiniteFunctor::make(glue[x]->cat, glue[y]->cat, std::move(ob), std::move(mor)));
            }
            for (int mm = 0; mm < h.loose->num_morphisms(); ++mm) {
                int u = h.loose->src(mm);
                NaturalTransformation t;
                t.source_functor = out.colimit.on1[x * n + y][u];
                t.target_functor = out.colimit.on1[x * n + y][h.loose->dst(mm)];
                t.comp.resize(glue[x]->cat->num_objects());
                for (int j = 0; j < nj; ++j) {
                    const auto* pj = prods[x][j].cat.get();
                    for (int po = 0; po < pj->num_objects(); ++po) {
                        auto [w, m] = prods[x][j].pair_of_ob[po];
                        int rm = carrier->whisker_r({x, y, mm}, {cone.diagram.ob[j], x, m}).mor;
                        int wid = cone.weight.ob[j].loose->identity(w);
                        t.comp[glue[x]->object_in_cat(j, po)] =
                            glue[y]->path_in_cat({{j, prods[y][j].pair_mor(wid, rm)}},
                                                 glue[y]->ob_cls(j, prods[y][j].pair_ob(
                                                                         w, carrier->compose1({x, y, u},
                                                                                              {cone.diagram.ob[j], x, m})
                                                                                .ob)));
                    }
                }
                out.colimit.on2[x * n + y].push_back(std::move(t));
            }
        }

    {
        auto bad = validate_diagram(out.colimit);
        if (!bad.empty()) throw ValidationError("colimit presheaf: " + bad.front());
    }

    // sigma components
    auto yo = yoneda_diagram(carrier, cone.apex);
    for (int x = 0; x < n; ++x) {
        const auto& hx = carrier->hom(cone.apex, x);
        std::vector<int> ob(glue[x]->cat->num_objects(), -1);
        std::vector<int> mor(glue[x]->cat->num_morphisms(), -1);
        for (int j = 0; j < nj; ++j) {
            const auto* pj = prods[x][j].cat.get();
            for (int po = 0; po < pj->num_objects(); ++po) {
                auto [w, m] = prods[x][j].pair_of_ob[po];
                Cell1 leg{cone.apex, cone.diagram.ob[j], cone.gamma[j].fl.on_ob(w)};
                ob[glue[x]->object_in_cat(j, po)] =
                    carrier->compose1({cone.diagram.ob[j], x, m}, leg).ob;
            }
        }
        for (std::size_t pi = 0; pi < glue[x]->paths.size(); ++pi) {
            int target = glue[x]->class_of_pathclass[glue[x]->find(static_cast<int>(pi))];
            if (target < 0 || mor[target] >= 0) continue;
            // image of each generator, composed vertically in hom(apex, x)
            int src_class = glue[x]->path_src[pi];
            int cur_ob = -1;
            // locate the source object image
            for (int j = 0; j < nj && cur_ob < 0; ++j) {
                const auto* pj = prods[x][j].cat.get();
                for (int po = 0; po < pj->num_objects() && cur_ob < 0; ++po)
                    if (glue[x]->ob_cls(j, po) == src_class) {
                        auto [w, m] = prods[x][j].pair_of_ob[po];
                        Cell1 leg{cone.apex, cone.diagram.ob[j], cone.gamma[j].fl.on_ob(w)};
                        cur_ob = carrier->compose1({cone.diagram.ob[j], x, m}, leg).ob;
                    }
            }
            int acc = hx.loose->identity(cur_ob);
            for (int gidx : glue[x]->paths[pi]) {
                int piece = 0;
                while (piece + 1 < nj && glue[x]->gen_offset[piece + 1] <= gidx) ++piece;
                int local = gidx - glue[x]->gen_offset[piece];
                auto [wm, mm] = prods[x][piece].pair_of_mor[local];
                Cell2 legm{cone.apex, cone.diagram.ob[piece], cone.gamma[piece].fl.on_mor(wm)};
                Cell2 mc{cone.diagram.ob[piece], x, mm};
                int img = carrier->compose2(mc, legm).mor;
                acc = hx.loose->compose(img, acc);
            }
            mor[target] = acc;
        }
        auto fl = FiniteFunctor::make(glue[x]->cat, hx.loose, std::move(ob), std::move(mor));
        auto ft = tight_restriction(fl, out.colimit.ob[x], hx);
        out.sigma.comp[x] = FMap::make(out.colimit.ob[x], hx, std::move(ft), std::move(fl));
    }
    {
        auto bad = validate_presheaf_map(out.colimit, yo, out.sigma);
        if (!bad.empty()) throw ValidationError("sigma: " + bad.front());
    }
    return out;
}

bool presheaf_orthogonal(const PresheafMap& sigma, const Diagram& h, const Diagram& p,
                         const Diagram& g, RClass r, std::int64_t bound) {
    auto pg = weighted_limit_end(p, g, bound); // {P, G}
    auto hg = weighted_limit_end(h, g, bound); // {H, G}
    const int n = p.src->num_objects();
    // precomposition: a family over P maps to the family over H
    std::vector<int> ob(pg.apex.loose->num_objects());
    for (int i = 0; i < pg.apex.loose->num_objects(); ++i) {
        std::vector<FiniteFunctor> fam(n);
        for (int x = 0; x < n; ++x) fam[x] = compose(pg.families[i][x], sigma.comp[x].fl);
        int idx = -1;
        for (std::size_t j = 0; j < hg.families.size() && idx < 0; ++j) {
            bool eq = true;
            for (int x = 0; x < n && eq; ++x) eq = functor_equal(hg.families[j][x], fam[x]);
            if (eq) idx = static_cast<int>(j);
        }
        if (idx < 0) throw ValidationError("precomposition leaves the limit families");
        ob[i] = idx;
    }
    std::vector<int> mor(pg.apex.loose->num_morphisms());
    for (int i = 0; i < pg.apex.loose->num_morphisms(); ++i) {
        int idx = -1;
        for (int cand = 0; cand < hg.apex.loose->num_morphisms() && idx < 0; ++cand) {
            if (hg.apex.loose->src(cand) != ob[pg.apex.loose->src(i)] ||
                hg.apex.loose->dst(cand) != ob[pg.apex.loose->dst(i)])
                continue;
            bool eq = true;
            for (int x = 0; x < n && eq; ++x) {
                auto whisk = whisker_right(pg.family_mods[i][x], sigma.comp[x].fl);
                eq = hg.family_mods[cand][x].comp == whisk.comp;
            }
            if (eq) idx = cand;
        }
        if (idx < 0) throw ValidationError("precomposition misses a modification");
        mor[i] = idx;
    }
    auto fl = FiniteFunctor::make(pg.apex.loose, hg.apex.loose, std::move(ob), std::move(mor));
    auto ft = tight_restriction(fl, pg.apex, hg.apex);
    auto pre = FMap::make(pg.apex, hg.apex, std::move(ft), std::move(fl));
    return r == RClass::Iso ? fmap_is_iso(pre) : fmap_is_equivalence(pre);
}

} // namespace enhcat
