#include "enhcat/limits.hpp"

#include <algorithm>
#include <map>

namespace enhcat {

// ---------------------------------------------------------------------------
// markings
// ---------------------------------------------------------------------------

Marking Marking::identities_only(const FCatPtr& c) {
    Marking m;
    m.n = c->num_objects();
    m.marked.resize(m.n * m.n);
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
            m.marked[x * m.n + y].assign(c->hom(x, y).loose->num_objects(), false);
    for (int x = 0; x < m.n; ++x) m.marked[x * m.n + x][c->unit_loose(x)] = true;
    return m;
}

Marking Marking::all_cells(const FCatPtr& c) {
    Marking m;
    m.n = c->num_objects();
    m.marked.resize(m.n * m.n);
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
            m.marked[x * m.n + y].assign(c->hom(x, y).loose->num_objects(), true);
    return m;
}

std::vector<std::string> validate_marking(const FCatPtr& c, const Marking& m) {
    std::vector<std::string> bad;
    const int n = c->num_objects();
    if (m.n != n || static_cast<int>(m.marked.size()) != n * n) {
        bad.push_back("marking tables have the wrong size");
        return bad;
    }
    for (int x = 0; x < n; ++x)
        if (!m.marked[x * n + x][c->unit_loose(x)])
            bad.push_back("marking misses the identity at " + quoted(c->object_name(x)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const auto* hg = c->hom(y, z).loose.get();
                const auto* hf = c->hom(x, y).loose.get();
                for (int g = 0; g < hg->num_objects(); ++g)
                    for (int f = 0; f < hf->num_objects(); ++f) {
                        if (!m.marked[y * n + z][g] || !m.marked[x * n + y][f]) continue;
                        Cell1 comp = c->compose1({y, z, g}, {x, y, f});
                        if (!m.marked[x * n + z][comp.ob])
                            bad.push_back("marking is not closed under composition at (" +
                                          hg->object_name(g) + ", " + hf->object_name(f) + ")");
                    }
            }
    return bad;
}

std::vector<std::string> validate_dotted(const DottedShape& d) {
    auto bad = validate_marking(d.cat, d.sigma);
    const int n = d.cat->num_objects();
    if (static_cast<int>(d.dotted.size()) != n) {
        bad.push_back("dotted set has the wrong size");
        return bad;
    }
    for (int a = 0; a < n; ++a) {
        if (!d.dotted[a]) continue;
        for (int b = 0; b < n; ++b) {
            const auto& h = d.cat->hom(a, b);
            for (int f = 0; f < h.loose->num_objects(); ++f)
                if (h.ob_tight(f) && d.sigma.marked[a * n + b][f] && !d.dotted[b])
                    bad.push_back("dotted objects not closed under the tight marked 1-cell " +
                                  quoted(h.loose->object_name(f)));
        }
    }
    return bad;
}

DottedShape loose_arrow_dotted() {
    DottedShape d;
    d.cat = loose_arrow_shape();
    d.sigma = Marking::identities_only(d.cat);
    d.dotted = {true, true};
    return d;
}

// ---------------------------------------------------------------------------
// dotted-lax limits by cone enumeration
// ---------------------------------------------------------------------------

namespace {

struct ConeEnumerator {
    const DottedShape& d;
    const Diagram& s;
    Weakness w;
    std::int64_t bound;
    std::int64_t steps = 0;
    int n;

    void bump() {
        if (++steps > bound) throw EnumerationBoundExceeded("cone enumeration exceeded bound");
    }

    // endpoints of the cell at f for legs x
    std::pair<int, int> cell_endpoints(const Cell1& f, const std::vector<int>& leg) const {
        int image = s.at1(f).on_ob(leg[f.src]);
        if (w == Weakness::Colax) return {leg[f.dst], image};
        return {image, leg[f.dst]};
    }

    bool coherent(const ConeObject& c) const {
        // units
        for (int a = 0; a < n; ++a) {
            int u = d.cat->unit_loose(a);
            if (c.cell[a * n + a][u] != s.ob[a].loose->identity(c.leg[a])) return false;
        }
        // marked cells must be identities (endpoint equality was forced)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const auto* h = d.cat->hom(a, b).loose.get();
                for (int f = 0; f < h->num_objects(); ++f)
                    if (d.sigma.marked[a * n + b][f] &&
                        !s.ob[b].loose->is_identity(c.cell[a * n + b][f]))
                        return false;
            }
        // composition
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int cc = 0; cc < n; ++cc) {
                    const auto* hg = d.cat->hom(b, cc).loose.get();
                    const auto* hf = d.cat->hom(a, b).loose.get();
                    for (int g = 0; g < hg->num_objects(); ++g)
                        for (int f = 0; f < hf->num_objects(); ++f) {
                            Cell1 comp = d.cat->compose1({b, cc, g}, {a, b, f});
                            int xf = c.cell[a * n + b][f];
                            int xg = c.cell[b * n + cc][g];
                            int expect;
                            if (w == Weakness::Colax)
                                expect = s.ob[cc].loose->compose(
                                    s.at1({b, cc, g}).on_mor(xf), xg);
                            else
                                expect = s.ob[cc].loose->compose(
                                    xg, s.at1({b, cc, g}).on_mor(xf));
                            if (c.cell[a * n + cc][comp.ob] != expect) return false;
                        }
                }
        // 2-cells
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const auto* h = d.cat->hom(a, b).loose.get();
                for (int mor = 0; mor < h->num_morphisms(); ++mor) {
                    int f = h->src(mor), f2 = h->dst(mor);
                    int comp_at_leg = s.at2({a, b, mor}).comp[c.leg[a]];
                    if (w == Weakness::Colax) {
                        if (c.cell[a * n + b][f2] !=
                            s.ob[b].loose->compose(comp_at_leg, c.cell[a * n + b][f]))
                            return false;
                    } else {
                        if (c.cell[a * n + b][f] !=
                            s.ob[b].loose->compose(c.cell[a * n + b][f2], comp_at_leg))
                            return false;
                    }
                }
            }
        return true;
    }

    std::string cone_name(const ConeObject& c) const {
        std::vector<std::string> parts{"cn"};
        for (int a = 0; a < n; ++a) parts.push_back(s.ob[a].loose->object_name(c.leg[a]));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const auto* h = d.cat->hom(a, b).loose.get();
                for (int f = 0; f < h->num_objects(); ++f)
                    parts.push_back(s.ob[b].loose->morphism_name(c.cell[a * n + b][f]));
            }
        return encode_name(parts);
    }

    std::vector<ConeObject> enumerate() {
        std::vector<ConeObject> out;
        ConeObject c;
        c.leg.assign(n, -1);
        c.cell.assign(n * n, {});
        // list of (a,b,f) slots
        struct Slot {
            int a, b, f;
        };
        std::vector<Slot> slots;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const auto* h = d.cat->hom(a, b).loose.get();
                for (int f = 0; f < h->num_objects(); ++f) slots.push_back({a, b, f});
            }
        auto rec_cells = [&](auto&& self, std::size_t i) -> void {
            bump();
            if (i == slots.size()) {
                if (coherent(c)) {
                    c.name = cone_name(c);
                    out.push_back(c);
                }
                return;
            }
            auto [a, b, f] = slots[i];
            auto [from, to] = cell_endpoints({a, b, f}, c.leg);
            bool forced = d.sigma.marked[a * n + b][f];
            if (forced) {
                if (from != to) return;
                c.cell[a * n + b][f] = s.ob[b].loose->identity(from);
                self(self, i + 1);
                c.cell[a * n + b][f] = -1;
                return;
            }
            for (int mor : s.ob[b].loose->hom(from, to)) {
                c.cell[a * n + b][f] = mor;
                self(self, i + 1);
                c.cell[a * n + b][f] = -1;
            }
        };
        auto rec_legs = [&](auto&& self, int a) -> void {
            bump();
            if (a == n) {
                for (int i = 0; i < n * n; ++i)
                    c.cell[i].assign(d.cat->hom(i / n, i % n).loose->num_objects(), -1);
                rec_cells(rec_cells, 0);
                return;
            }
            for (int ob = 0; ob < s.ob[a].loose->num_objects(); ++ob) {
                c.leg[a] = ob;
                self(self, a + 1);
            }
            c.leg[a] = -1;
        };
        rec_legs(rec_legs, 0);
        return out;
    }

    // cone morphisms x -> y: components per object, commuting with cells
    std::vector<std::vector<int>> cone_morphisms(const ConeObject& x, const ConeObject& y) {
        std::vector<std::vector<int>> out;
        std::vector<int> comp(n, -1);
        auto ok = [&]() {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const auto* h = d.cat->hom(a, b).loose.get();
                    const auto* lb = s.ob[b].loose.get();
                    for (int f = 0; f < h->num_objects(); ++f) {
                        int ximg = s.at1({a, b, f}).on_mor(comp[a]);
                        if (w == Weakness::Colax) {
                            if (lb->compose(ximg, x.cell[a * n + b][f]) !=
                                lb->compose(y.cell[a * n + b][f], comp[b]))
                                return false;
                        } else {
                            if (lb->compose(y.cell[a * n + b][f], ximg) !=
                                lb->compose(comp[b], x.cell[a * n + b][f]))
                                return false;
                        }
                    }
                }
            return true;
        };
        auto rec = [&](auto&& self, int a) -> void {
            bump();
            if (a == n) {
                if (ok()) out.push_back(comp);
                return;
            }
            for (int mor : s.ob[a].loose->hom(x.leg[a], y.leg[a])) {
                comp[a] = mor;
                self(self, a + 1);
            }
            comp[a] = -1;
        };
        rec(rec, 0);
        return out;
    }
};

std::string cone_mor_name(const std::vector<CatPtr>& looses, const std::string& from,
                          const std::string& to, const std::vector<int>& comp) {
    std::vector<std::string> parts{"cm", from, to};
    for (std::size_t a = 0; a < comp.size(); ++a)
        parts.push_back(looses[a]->morphism_name(comp[a]));
    return encode_name(parts);
}

std::vector<CatPtr> diagram_looses(const Diagram& s) {
    std::vector<CatPtr> out;
    out.reserve(s.ob.size());
    for (const auto& o : s.ob) out.push_back(o.loose);
    return out;
}

} // namespace

ConeApex dotted_lax_limit(const DottedShape& d, const Diagram& s, Weakness w, std::int64_t bound) {
    if (w != Weakness::Lax && w != Weakness::Colax)
        throw ShapeMismatch("dotted limits take the lax or colax orientation");
    {
        auto bad = validate_dotted(d);
        if (!bad.empty()) throw ValidationError("dotted shape: " + bad.front());
    }
    const int n = d.cat->num_objects();
    ConeEnumerator en{d, s, w, bound, 0, n};
    ConeApex out;
    out.w = w;
    out.cones = en.enumerate();

    CategoryData data;
    data.label = "dotlim";
    for (const auto& c : out.cones) data.objects.push_back(c.name);
    struct MorRec {
        int from, to;
        std::vector<int> comp;
        std::string name;
    };
    std::vector<MorRec> mors;
    for (std::size_t i = 0; i < out.cones.size(); ++i)
        for (std::size_t j = 0; j < out.cones.size(); ++j)
            for (auto& comp : en.cone_morphisms(out.cones[i], out.cones[j])) {
                MorRec r{static_cast<int>(i), static_cast<int>(j), comp,
                         cone_mor_name(diagram_looses(s), out.cones[i].name, out.cones[j].name, comp)};
                data.morphisms.push_back({r.name, out.cones[i].name, out.cones[j].name});
                mors.push_back(std::move(r));
            }
    for (std::size_t i = 0; i < out.cones.size(); ++i) {
        std::vector<int> idcomp(n);
        for (int a = 0; a < n; ++a) idcomp[a] = s.ob[a].loose->identity(out.cones[i].leg[a]);
        data.identities.emplace_back(
            out.cones[i].name,
            cone_mor_name(diagram_looses(s), out.cones[i].name, out.cones[i].name, idcomp));
    }
    for (const auto& g : mors)
        for (const auto& f : mors) {
            if (f.to != g.from) continue;
            std::vector<int> comp(n);
            for (int a = 0; a < n; ++a) comp[a] = s.ob[a].loose->compose(g.comp[a], f.comp[a]);
            data.compose.push_back(
                {g.name, f.name,
                 cone_mor_name(diagram_looses(s), out.cones[f.from].name, out.cones[g.to].name, comp)});
        }
    auto loose = FiniteCategory::make(std::move(data));

    out.cone_mors.resize(loose->num_morphisms());
    for (const auto& r : mors) out.cone_mors[loose->morphism_index(r.name)] = r.comp;

    // reorder cones to match the sorted object order
    std::vector<ConeObject> sorted(out.cones.size());
    for (auto& c : out.cones) sorted[loose->object_index(c.name)] = c;
    out.cones = std::move(sorted);

    // tight part: cones whose legs are tight at every dotted object
    std::vector<int> tight;
    for (int i = 0; i < loose->num_objects(); ++i) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (d.dotted[a]) ok = s.ob[a].ob_tight(out.cones[i].leg[a]);
        if (ok) tight.push_back(i);
    }
    auto sub = full_subcategory(loose, tight);
    out.apex = FObject::make(sub.cat, loose, sub.inclusion);
    return out;
}

ConeApex marked_lax_limit(const MarkedTwoCategory& m, const Diagram& s, Weakness w,
                          std::int64_t bound) {
    DottedShape d;
    d.cat = m.cat;
    d.sigma = m.sigma;
    d.dotted.assign(m.cat->num_objects(), false);
    return dotted_lax_limit(d, s, w, bound);
}

std::vector<FObject> fobject_test_battery(int max_objects) {
    std::vector<FObject> out;
    for (auto& c : cats::test_battery(max_objects)) out.push_back(FObject::chordate(c));
    // genuinely mixed embeddings
    auto arrow = cats::walking_arrow();
    if (max_objects >= 1) {
        auto sube = full_subcategory(cats::terminal(), {});
        out.push_back(FObject::make(sube.cat, cats::terminal(), sube.inclusion));
    }
    if (max_objects >= 2) {
        auto sub0 = full_subcategory(arrow, {0});
        out.push_back(FObject::make(sub0.cat, arrow, sub0.inclusion));
        auto sube = full_subcategory(arrow, {});
        out.push_back(FObject::make(sube.cat, arrow, sube.inclusion));
    }
    return out;
}

// ---------------------------------------------------------------------------
// universal property of dotted-lax limits
// ---------------------------------------------------------------------------

namespace {

/// Cones from a test object K, serialized canonically.
struct KCone {
    std::vector<FiniteFunctor> leg;                  // per a: K.loose -> S(a).loose
    std::vector<std::vector<NaturalTransformation>> cell; // per hom, per loose 1-cell
    std::string key;
};

std::string kcone_key(const DottedShape& d, const Diagram& s, const KCone& c) {
    const int n = d.cat->num_objects();
    std::vector<std::string> parts{"kcone"};
    for (int a = 0; a < n; ++a) parts.push_back(c.leg[a].encode());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (const auto& t : c.cell[a * n + b]) parts.push_back(t.encode());
    return encode_name(parts);
}

struct KConeEnumerator {
    const DottedShape& d;
    const Diagram& s;
    Weakness w;
    const FObject& k;
    std::int64_t bound;
    std::int64_t steps = 0;

    bool coherent(const KCone& c) const {
        const int n = d.cat->num_objects();
        for (int a = 0; a < n; ++a) {
            const auto& t = c.cell[a * n + a][d.cat->unit_loose(a)];
            if (!t.is_identity_cells()) return false;
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int e = 0; e < n; ++e) {
                    const auto* hg = d.cat->hom(b, e).loose.get();
                    const auto* hf = d.cat->hom(a, b).loose.get();
                    for (int g = 0; g < hg->num_objects(); ++g)
                        for (int f = 0; f < hf->num_objects(); ++f) {
                            Cell1 comp = d.cat->compose1({b, e, g}, {a, b, f});
                            NaturalTransformation expect =
                                w == Weakness::Colax
                                    ? vcompose(whisker_left(s.at1({b, e, g}), c.cell[a * d.cat->num_objects() + b][f]),
                                               c.cell[b * n + e][g])
                                    : vcompose(c.cell[b * n + e][g],
                                               whisker_left(s.at1({b, e, g}), c.cell[a * n + b][f]));
                            if (c.cell[a * n + e][comp.ob].comp != expect.comp) return false;
                        }
                }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const auto* h = d.cat->hom(a, b).loose.get();
                for (int mor = 0; mor < h->num_morphisms(); ++mor) {
                    int f = h->src(mor), f2 = h->dst(mor);
                    auto whisk = whisker_right(s.at2({a, b, mor}), c.leg[a]);
                    if (w == Weakness::Colax) {
                        if (c.cell[a * n + b][f2].comp != vcompose(whisk, c.cell[a * n + b][f]).comp)
                            return false;
                    } else {
                        if (c.cell[a * n + b][f].comp != vcompose(c.cell[a * n + b][f2], whisk).comp)
                            return false;
                    }
                }
            }
        return true;
    }

    std::vector<KCone> enumerate(bool dotted_only) {
        const int n = d.cat->num_objects();
        std::vector<KCone> out;
        KCone c;
        c.leg.resize(n);
        c.cell.assign(n * n, {});
        std::vector<std::vector<FiniteFunctor>> legcands(n);
        for (int a = 0; a < n; ++a) {
            for (auto& h : enumerate_functors(k.loose, s.ob[a].loose, bound)) {
                if (dotted_only && d.dotted[a] && !functor_is_tight_cell(h, k, s.ob[a])) continue;
                legcands[a].push_back(h);
            }
        }
        struct Slot {
            int a, b, f;
        };
        std::vector<Slot> slots;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int f = 0; f < d.cat->hom(a, b).loose->num_objects(); ++f)
                    slots.push_back({a, b, f});
        auto rec_cells = [&](auto&& self, std::size_t i) -> void {
            if (++steps > bound) throw EnumerationBoundExceeded("cone-from-K enumeration bound");
            if (i == slots.size()) {
                if (coherent(c)) {
                    c.key = kcone_key(d, s, c);
                    out.push_back(c);
                }
                return;
            }
            auto [a, b, f] = slots[i];
            auto from = compose(s.at1({a, b, f}), c.leg[a]);
            auto to = c.leg[b];
            if (w == Weakness::Colax) std::swap(from, to);
            if (d.sigma.marked[a * n + b][f]) {
                if (!functor_equal(from, to)) return;
                c.cell[a * n + b][f] = NaturalTransformation::identity(from);
                self(self, i + 1);
                return;
            }
            for (auto& t : enumerate_transformations(from, to, bound)) {
                c.cell[a * n + b][f] = t;
                self(self, i + 1);
            }
        };
        auto rec_legs = [&](auto&& self, int a) -> void {
            if (++steps > bound) throw EnumerationBoundExceeded("cone-from-K enumeration bound");
            if (a == n) {
                for (int i = 0; i < n * n; ++i)
                    c.cell[i].assign(d.cat->hom(i / n, i % n).loose->num_objects(),
                                     NaturalTransformation());
                rec_cells(rec_cells, 0);
                return;
            }
            for (auto& h : legcands[a]) {
                c.leg[a] = h;
                self(self, a + 1);
            }
        };
        rec_legs(rec_legs, 0);
        return out;
    }
};

} // namespace

bool check_dotted_limit_universal(const DottedShape& d, const Diagram& s, const ConeApex& cand,
                                  const std::vector<FObject>& tests,
                                  std::vector<std::string>* report, std::int64_t bound) {
    const int n = d.cat->num_objects();
    bool ok = true;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (report) report->push_back(msg);
    };

    // evaluation legs of the candidate; an ill-typed candidate fails the
    // certification instead of crashing it
    std::vector<FiniteFunctor> proj(n);
    try {
        for (int a = 0; a < n; ++a) {
            std::vector<int> ob(cand.apex.loose->num_objects());
            std::vector<int> mor(cand.apex.loose->num_morphisms());
            for (int i = 0; i < cand.apex.loose->num_objects(); ++i) ob[i] = cand.cones[i].leg[a];
            for (int i = 0; i < cand.apex.loose->num_morphisms(); ++i) mor[i] = cand.cone_mors[i][a];
            proj[a] = FiniteFunctor::make(cand.apex.loose, s.ob[a].loose, std::move(ob), std::move(mor));
        }
    } catch (const Error& e) {
        fail(std::string("candidate interpretation is ill-formed: ") + e.what());
        return ok;
    }

    for (const auto& k : tests) {
        KConeEnumerator en{d, s, cand.w, k, bound, 0};
        auto cones = en.enumerate(false);
        auto dotted_cones = en.enumerate(true);
        std::map<std::string, int> cone_count, dotted_count;
        for (auto& c : cones) ++cone_count[c.key];
        for (auto& c : dotted_cones) ++dotted_count[c.key];

        // loose cells K -> apex
        auto cells = enumerate_functors(k.loose, cand.apex.loose, bound);
        std::map<std::string, int> image_count, image_tight_count;
        for (auto& u : cells) {
            KCone c;
            c.leg.resize(n);
            c.cell.assign(n * n, {});
            for (int a = 0; a < n; ++a) c.leg[a] = compose(proj[a], u);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const auto* h = d.cat->hom(a, b).loose.get();
                    c.cell[a * n + b].resize(h->num_objects());
                    for (int f = 0; f < h->num_objects(); ++f) {
                        NaturalTransformation t;
                        auto from = compose(s.at1({a, b, f}), c.leg[a]);
                        auto to = c.leg[b];
                        if (cand.w == Weakness::Colax) std::swap(from, to);
                        t.source_functor = from;
                        t.target_functor = to;
                        t.comp.resize(k.loose->num_objects());
                        for (int ko = 0; ko < k.loose->num_objects(); ++ko)
                            t.comp[ko] = cand.cones[u.on_ob(ko)].cell[a * n + b][f];
                        c.cell[a * n + b][f] = std::move(t);
                    }
                }
            auto key = kcone_key(d, s, c);
            ++image_count[key];
            if (functor_is_tight_cell(u, k, cand.apex)) ++image_tight_count[key];
            if (!cone_count.count(key)) fail("a cell K -> apex maps to a non-cone");
        }
        if (image_count != cone_count)
            fail("1-dimensional universal property fails (loose) against test " + k.loose->label());
        if (image_tight_count != dotted_count)
            fail("1-dimensional universal property fails (tight) against test " + k.loose->label());

        // 2-dimensional: natural transformations u => u' vs cone morphisms
        std::int64_t lhs2 = 0, rhs2 = 0;
        for (auto& u : cells)
            for (auto& u2 : cells) lhs2 += static_cast<std::int64_t>(enumerate_transformations(u, u2, bound).size());
        // cone morphisms: families mu_a : h_a => h'_a with the cell condition
        for (auto& c1 : cones)
            for (auto& c2 : cones) {
                std::vector<std::vector<NaturalTransformation>> cand_mu(n);
                for (int a = 0; a < n; ++a)
                    cand_mu[a] = enumerate_transformations(c1.leg[a], c2.leg[a], bound);
                std::vector<int> pick(n, 0);
                std::vector<NaturalTransformation> mu(n);
                auto rec = [&](auto&& self, int a) -> void {
                    if (a == n) {
                        for (int x = 0; x < n; ++x)
                            for (int y = 0; y < n; ++y) {
                                const auto* h = d.cat->hom(x, y).loose.get();
                                for (int f = 0; f < h->num_objects(); ++f) {
                                    if (cand.w == Weakness::Colax) {
                                        auto lhs = vcompose(whisker_left(s.at1({x, y, f}), mu[x]),
                                                            c1.cell[x * n + y][f]);
                                        auto rhs = vcompose(c2.cell[x * n + y][f], mu[y]);
                                        if (lhs.comp != rhs.comp) return;
                                    } else {
                                        auto lhs = vcompose(c2.cell[x * n + y][f],
                                                            whisker_left(s.at1({x, y, f}), mu[x]));
                                        auto rhs = vcompose(mu[y], c1.cell[x * n + y][f]);
                                        if (lhs.comp != rhs.comp) return;
                                    }
                                }
                            }
                        ++rhs2;
                        return;
                    }
                    for (auto& t : cand_mu[a]) {
                        mu[a] = t;
                        self(self, a + 1);
                    }
                };
                rec(rec, 0);
            }
        if (lhs2 != rhs2)
            fail("2-dimensional universal property fails against test " + k.loose->label());
    }
    return ok;
}

// ---------------------------------------------------------------------------
// weighted limits via the end formula
// ---------------------------------------------------------------------------

namespace {

std::string family_name(const Diagram& d, const std::vector<FiniteFunctor>& fam) {
    std::vector<std::string> parts{"fam"};
    (void)d;
    for (const auto& f : fam) parts.push_back(f.encode());
    return encode_name(parts);
}

std::string family_mod_name(const std::string& from, const std::string& to,
                            const std::vector<NaturalTransformation>& mod) {
    std::vector<std::string> parts{"fmod", from, to};
    for (const auto& t : mod) parts.push_back(t.encode());
    return encode_name(parts);
}

bool family_natural(const Diagram& w, const Diagram& d, const std::vector<FiniteFunctor>& fam) {
    const auto& s = w.src;
    const int n = s->num_objects();
    for (int j = 0; j < n; ++j)
        for (int kk = 0; kk < n; ++kk) {
            const auto* h = s->hom(j, kk).loose.get();
            for (int u = 0; u < h->num_objects(); ++u) {
                if (!functor_equal(compose(d.at1({j, kk, u}), fam[j]),
                                   compose(fam[kk], w.at1({j, kk, u}))))
                    return false;
            }
            for (int mor = 0; mor < h->num_morphisms(); ++mor) {
                auto lhs = whisker_right(d.at2({j, kk, mor}), fam[j]);
                auto rhs = whisker_left(fam[kk], w.at2({j, kk, mor}));
                if (lhs.comp != rhs.comp) return false;
            }
        }
    return true;
}

bool family_mod_ok(const Diagram& w, const Diagram& d, const std::vector<FiniteFunctor>& from,
                   const std::vector<FiniteFunctor>& to,
                   const std::vector<NaturalTransformation>& mod) {
    (void)from;
    (void)to;
    const auto& s = w.src;
    const int n = s->num_objects();
    for (int j = 0; j < n; ++j)
        for (int kk = 0; kk < n; ++kk) {
            const auto* h = s->hom(j, kk).loose.get();
            for (int u = 0; u < h->num_objects(); ++u) {
                auto lhs = whisker_left(d.at1({j, kk, u}), mod[j]);
                auto rhs = whisker_right(mod[kk], w.at1({j, kk, u}));
                if (lhs.comp != rhs.comp) return false;
            }
        }
    return true;
}

} // namespace

WeightedLimitResult weighted_limit_end(const Diagram& w, const Diagram& d, std::int64_t bound) {
    if (w.src != d.src && w.src->num_objects() != d.src->num_objects())
        throw ShapeMismatch("weight and diagram have different shapes");
    const auto& s = w.src;
    const int n = s->num_objects();
    std::int64_t steps = 0;
    auto bump = [&]() {
        if (++steps > bound) throw EnumerationBoundExceeded("weighted limit enumeration bound");
    };

    std::vector<std::vector<FiniteFunctor>> cands(n);
    for (int j = 0; j < n; ++j) cands[j] = enumerate_functors(w.ob[j].loose, d.ob[j].loose, bound);

    WeightedLimitResult out;
    std::vector<FiniteFunctor> fam(n);
    auto rec = [&](auto&& self, int j) -> void {
        bump();
        if (j == n) {
            if (family_natural(w, d, fam)) out.families.push_back(fam);
            return;
        }
        for (auto& f : cands[j]) {
            fam[j] = f;
            self(self, j + 1);
        }
    };
    rec(rec, 0);

    CategoryData data;
    data.label = "wlim";
    for (auto& f : out.families) data.objects.push_back(family_name(d, f));
    struct MorRec {
        int from, to;
        std::vector<NaturalTransformation> mod;
        std::string name;
    };
    std::vector<MorRec> mors;
    for (std::size_t i = 0; i < out.families.size(); ++i)
        for (std::size_t j2 = 0; j2 < out.families.size(); ++j2) {
            std::vector<std::vector<NaturalTransformation>> tc(n);
            for (int j = 0; j < n; ++j)
                tc[j] = enumerate_transformations(out.families[i][j], out.families[j2][j], bound);
            std::vector<NaturalTransformation> mod(n);
            auto rec2 = [&](auto&& self, int j) -> void {
                bump();
                if (j == n) {
                    if (family_mod_ok(w, d, out.families[i], out.families[j2], mod)) {
                        MorRec r{static_cast<int>(i), static_cast<int>(j2), mod,
                                 family_mod_name(family_name(d, out.families[i]),
                                                 family_name(d, out.families[j2]), mod)};
                        data.morphisms.push_back({r.name, family_name(d, out.families[i]),
                                                  family_name(d, out.families[j2])});
                        mors.push_back(std::move(r));
                    }
                    return;
                }
                for (auto& t : tc[j]) {
                    mod[j] = t;
                    self(self, j + 1);
                }
            };
            rec2(rec2, 0);
        }
    for (auto& f : out.families) {
        std::vector<NaturalTransformation> idmod;
        for (int j = 0; j < n; ++j) idmod.push_back(NaturalTransformation::identity(f[j]));
        data.identities.emplace_back(family_name(d, f),
                                     family_mod_name(family_name(d, f), family_name(d, f), idmod));
    }
    for (auto& g : mors)
        for (auto& f : mors) {
            if (f.to != g.from) continue;
            std::vector<NaturalTransformation> mod(n);
            for (int j = 0; j < n; ++j) mod[j] = vcompose(g.mod[j], f.mod[j]);
            data.compose.push_back({g.name, f.name,
                                    family_mod_name(family_name(d, out.families[f.from]),
                                                    family_name(d, out.families[g.to]), mod)});
        }
    auto loose = FiniteCategory::make(std::move(data));
    // reorder families by sorted object index
    std::vector<std::vector<FiniteFunctor>> sorted(out.families.size());
    for (auto& f : out.families) sorted[loose->object_index(family_name(d, f))] = f;
    out.families = std::move(sorted);
    out.family_mods.resize(loose->num_morphisms());
    for (auto& r : mors) out.family_mods[loose->morphism_index(r.name)] = r.mod;

    std::vector<int> tight;
    for (int i = 0; i < loose->num_objects(); ++i) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            ok = functor_is_tight_cell(out.families[i][j], w.ob[j], d.ob[j]);
        if (ok) tight.push_back(i);
    }
    auto sub = full_subcategory(loose, tight);
    out.apex = FObject::make(sub.cat, loose, sub.inclusion);
    return out;
}

FObject weighted_limit_oracle(const Diagram& w, const Diagram& d, std::int64_t bound) {
    // cones from the terminal object, computed through hom_ambient_f
    const auto& s = w.src;
    const int n = s->num_objects();
    auto one = terminal_fobject();
    std::vector<FHom> homs;
    homs.reserve(n);
    for (int j = 0; j < n; ++j) homs.push_back(hom_ambient_f(one, d.ob[j], bound));

    std::int64_t steps = 0;
    auto bump = [&]() {
        if (++steps > bound) throw EnumerationBoundExceeded("oracle enumeration bound");
    };

    // families c_j : W(j).loose -> hom(1, D j).loose, 2-natural
    std::vector<std::vector<FiniteFunctor>> cands(n);
    for (int j = 0; j < n; ++j)
        cands[j] = enumerate_functors(w.ob[j].loose, homs[j].ob.loose, bound);

    auto natural = [&](const std::vector<FiniteFunctor>& fam) {
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk) {
                const auto* h = s->hom(j, kk).loose.get();
                for (int u = 0; u < h->num_objects(); ++u) {
                    auto post = postcompose_functor(homs[j].loose_cat, homs[kk].loose_cat,
                                                    d.at1({j, kk, u}));
                    if (!functor_equal(compose(post, fam[j]), compose(fam[kk], w.at1({j, kk, u}))))
                        return false;
                }
                for (int mor = 0; mor < h->num_morphisms(); ++mor) {
                    auto post = postwhisker(homs[j].loose_cat, homs[kk].loose_cat, d.at2({j, kk, mor}));
                    auto lhs = whisker_right(post, fam[j]);
                    auto rhs = whisker_left(fam[kk], w.at2({j, kk, mor}));
                    if (lhs.comp != rhs.comp) return false;
                }
            }
        return true;
    };

    std::vector<std::vector<FiniteFunctor>> families;
    std::vector<FiniteFunctor> fam(n);
    auto rec = [&](auto&& self, int j) -> void {
        bump();
        if (j == n) {
            if (natural(fam)) families.push_back(fam);
            return;
        }
        for (auto& f : cands[j]) {
            fam[j] = f;
            self(self, j + 1);
        }
    };
    rec(rec, 0);

    auto fam_name = [&](const std::vector<FiniteFunctor>& f) {
        std::vector<std::string> parts{"ocone"};
        for (auto& x : f) parts.push_back(x.encode());
        return encode_name(parts);
    };
    CategoryData data;
    data.label = "wlim-oracle";
    for (auto& f : families) data.objects.push_back(fam_name(f));
    struct MorRec {
        int from, to;
        std::vector<NaturalTransformation> mod;
        std::string name;
    };
    std::vector<MorRec> mors;
    auto mod_ok = [&](const std::vector<NaturalTransformation>& mod) {
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk) {
                const auto* h = s->hom(j, kk).loose.get();
                for (int u = 0; u < h->num_objects(); ++u) {
                    auto post = postcompose_functor(homs[j].loose_cat, homs[kk].loose_cat,
                                                    d.at1({j, kk, u}));
                    auto lhs = whisker_left(post, mod[j]);
                    auto rhs = whisker_right(mod[kk], w.at1({j, kk, u}));
                    if (lhs.comp != rhs.comp) return false;
                }
            }
        return true;
    };
    for (std::size_t i = 0; i < families.size(); ++i)
        for (std::size_t j2 = 0; j2 < families.size(); ++j2) {
            std::vector<std::vector<NaturalTransformation>> tc(n);
            for (int j = 0; j < n; ++j)
                tc[j] = enumerate_transformations(families[i][j], families[j2][j], bound);
            std::vector<NaturalTransformation> mod(n);
            auto rec2 = [&](auto&& self, int j) -> void {
                bump();
                if (j == n) {
                    if (mod_ok(mod)) {
                        std::vector<std::string> parts{"omod", fam_name(families[i]),
                                                       fam_name(families[j2])};
                        for (auto& t : mod) parts.push_back(t.encode());
                        MorRec r{static_cast<int>(i), static_cast<int>(j2), mod, encode_name(parts)};
                        data.morphisms.push_back({r.name, fam_name(families[i]), fam_name(families[j2])});
                        mors.push_back(std::move(r));
                    }
                    return;
                }
                for (auto& t : tc[j]) {
                    mod[j] = t;
                    self(self, j + 1);
                }
            };
            rec2(rec2, 0);
        }
    for (std::size_t i = 0; i < families.size(); ++i) {
        std::vector<std::string> parts{"omod", fam_name(families[i]), fam_name(families[i])};
        std::vector<NaturalTransformation> idm;
        for (int j = 0; j < n; ++j) idm.push_back(NaturalTransformation::identity(families[i][j]));
        for (auto& t : idm) parts.push_back(t.encode());
        data.identities.emplace_back(fam_name(families[i]), encode_name(parts));
    }
    for (auto& g : mors)
        for (auto& f : mors) {
            if (f.to != g.from) continue;
            std::vector<NaturalTransformation> mod(n);
            for (int j = 0; j < n; ++j) mod[j] = vcompose(g.mod[j], f.mod[j]);
            std::vector<std::string> parts{"omod", fam_name(families[f.from]), fam_name(families[g.to])};
            for (auto& t : mod) parts.push_back(t.encode());
            data.compose.push_back({g.name, f.name, encode_name(parts)});
        }
    auto loose = FiniteCategory::make(std::move(data));
    std::vector<std::vector<FiniteFunctor>> sorted(families.size());
    for (auto& f : families) sorted[loose->object_index(fam_name(f))] = f;
    families = std::move(sorted);

    std::vector<int> tight;
    for (int i = 0; i < loose->num_objects(); ++i) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            // tight cone: each value is a tight cell of hom(1, D j)
            for (int wo = 0; wo < w.ob[j].tight->num_objects() && ok; ++wo)
                ok = homs[j].ob.ob_tight(families[i][j].on_ob(w.ob[j].embed.on_ob(wo)));
            for (int wm = 0; wm < w.ob[j].tight->num_morphisms() && ok; ++wm)
                ok = homs[j].ob.mor_tight(families[i][j].on_mor(w.ob[j].embed.on_mor(wm)));
        }
        if (ok) tight.push_back(i);
    }
    auto sub = full_subcategory(loose, tight);
    return FObject::make(sub.cat, loose, sub.inclusion);
}

bool check_weighted_limit_universal(const Diagram& w, const Diagram& d,
                                    const WeightedLimitResult& cand,
                                    const std::vector<FObject>& tests,
                                    std::vector<std::string>* report, std::int64_t bound) {
    const auto& s = w.src;
    const int n = s->num_objects();
    bool ok = true;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (report) report->push_back(msg);
    };

    for (const auto& k : tests) {
        // hom categories [K, D j]
        std::vector<FunctorCategory> kd(n);
        for (int j = 0; j < n; ++j) kd[j] = functor_category(k.loose, d.ob[j].loose, bound);

        // enumerate weighted cones from K: 2-natural families W(j) -> [K, D j]
        std::vector<std::vector<FiniteFunctor>> cands(n);
        for (int j = 0; j < n; ++j) cands[j] = enumerate_functors(w.ob[j].loose, kd[j].cat, bound);
        auto natural = [&](const std::vector<FiniteFunctor>& fam) {
            for (int j = 0; j < n; ++j)
                for (int kk = 0; kk < n; ++kk) {
                    const auto* h = s->hom(j, kk).loose.get();
                    for (int u = 0; u < h->num_objects(); ++u) {
                        auto post = postcompose_functor(kd[j], kd[kk], d.at1({j, kk, u}));
                        if (!functor_equal(compose(post, fam[j]), compose(fam[kk], w.at1({j, kk, u}))))
                            return false;
                    }
                    for (int mor = 0; mor < h->num_morphisms(); ++mor) {
                        auto post = postwhisker(kd[j], kd[kk], d.at2({j, kk, mor}));
                        auto lhs = whisker_right(post, fam[j]);
                        auto rhs = whisker_left(fam[kk], w.at2({j, kk, mor}));
                        if (lhs.comp != rhs.comp) return false;
                    }
                }
            return true;
        };
        auto tight_cone = [&](const std::vector<FiniteFunctor>& fam) {
            for (int j = 0; j < n; ++j) {
                for (int wo = 0; wo < w.ob[j].tight->num_objects(); ++wo) {
                    const auto& hfun = kd[j].obs[fam[j].on_ob(w.ob[j].embed.on_ob(wo))];
                    if (!functor_is_tight_cell(hfun, k, d.ob[j])) return false;
                }
                // fullness of the embeddings takes care of the morphism level
            }
            return true;
        };
        std::map<std::string, int> cone_count, tight_cone_count;
        std::vector<std::vector<FiniteFunctor>> fams;
        {
            std::vector<FiniteFunctor> fam(n);
            std::int64_t steps = 0;
            auto rec = [&](auto&& self, int j) -> void {
                if (++steps > bound) throw EnumerationBoundExceeded("cone enumeration bound");
                if (j == n) {
                    if (natural(fam)) fams.push_back(fam);
                    return;
                }
                for (auto& f : cands[j]) {
                    fam[j] = f;
                    self(self, j + 1);
                }
            };
            rec(rec, 0);
        }
        auto fam_key = [&](const std::vector<FiniteFunctor>& fam) {
            std::vector<std::string> parts{"kwcone"};
            for (auto& f : fam) parts.push_back(f.encode());
            return encode_name(parts);
        };
        for (auto& f : fams) {
            ++cone_count[fam_key(f)];
            if (tight_cone(f)) ++tight_cone_count[fam_key(f)];
        }

        // canonical map: cells K -> apex to cones
        auto cells = enumerate_functors(k.loose, cand.apex.loose, bound);
        std::map<std::string, int> image_count, image_tight_count;
        for (auto& u : cells) {
            std::vector<FiniteFunctor> fam(n);
            for (int j = 0; j < n; ++j) {
                std::vector<int> ob(w.ob[j].loose->num_objects());
                std::vector<int> mor(w.ob[j].loose->num_morphisms());
                for (int wo = 0; wo < w.ob[j].loose->num_objects(); ++wo) {
                    // the functor k |-> families[u(k)][j](wo)
                    std::vector<int> fob(k.loose->num_objects()), fmor(k.loose->num_morphisms());
                    for (int ko = 0; ko < k.loose->num_objects(); ++ko)
                        fob[ko] = cand.families[u.on_ob(ko)][j].on_ob(wo);
                    for (int km = 0; km < k.loose->num_morphisms(); ++km)
                        fmor[km] = cand.family_mods[u.on_mor(km)][j].comp[wo];
                    FiniteFunctor val = FiniteFunctor::make(k.loose, d.ob[j].loose, std::move(fob),
                                                            std::move(fmor));
                    ob[wo] = kd[j].ob_index(val);
                }
                for (int wm = 0; wm < w.ob[j].loose->num_morphisms(); ++wm) {
                    // the transformation k |-> families[u(k)][j](wm)
                    NaturalTransformation t;
                    int wsrc = w.ob[j].loose->src(wm), wdst = w.ob[j].loose->dst(wm);
                    t.source_functor = kd[j].obs[ob[wsrc]];
                    t.target_functor = kd[j].obs[ob[wdst]];
                    t.comp.resize(k.loose->num_objects());
                    for (int ko = 0; ko < k.loose->num_objects(); ++ko)
                        t.comp[ko] = cand.families[u.on_ob(ko)][j].on_mor(wm);
                    mor[wm] = kd[j].mor_index(t);
                }
                fam[j] = FiniteFunctor::make(w.ob[j].loose, kd[j].cat, std::move(ob), std::move(mor));
            }
            auto key = fam_key(fam);
            if (!cone_count.count(key)) {
                fail("a cell K -> apex maps outside the cones against " + k.loose->label());
                continue;
            }
            ++image_count[key];
            if (functor_is_tight_cell(u, k, cand.apex)) ++image_tight_count[key];
        }
        if (image_count != cone_count)
            fail("1-dimensional weighted universal property fails (loose) vs " + k.loose->label());
        if (image_tight_count != tight_cone_count)
            fail("1-dimensional weighted universal property fails (tight) vs " + k.loose->label());

        // 2-dimensional counts
        std::int64_t lhs2 = 0;
        for (auto& u : cells)
            for (auto& u2 : cells) lhs2 += static_cast<std::int64_t>(enumerate_transformations(u, u2, bound).size());
        std::int64_t rhs2 = 0;
        for (auto& f1 : fams)
            for (auto& f2 : fams) {
                std::vector<std::vector<NaturalTransformation>> tc(n);
                for (int j = 0; j < n; ++j) tc[j] = enumerate_transformations(f1[j], f2[j], bound);
                std::vector<NaturalTransformation> mod(n);
                auto mod_ok = [&]() {
                    for (int j = 0; j < n; ++j)
                        for (int kk = 0; kk < n; ++kk) {
                            const auto* h = s->hom(j, kk).loose.get();
                            for (int u = 0; u < h->num_objects(); ++u) {
                                auto post = postcompose_functor(kd[j], kd[kk], d.at1({j, kk, u}));
                                auto lhs = whisker_left(post, mod[j]);
                                auto rhs = whisker_right(mod[kk], w.at1({j, kk, u}));
                                if (lhs.comp != rhs.comp) return false;
                            }
                        }
                    return true;
                };
                auto rec = [&](auto&& self, int j) -> void {
                    if (j == n) {
                        if (mod_ok()) ++rhs2;
                        return;
                    }
                    for (auto& t : tc[j]) {
                        mod[j] = t;
                        self(self, j + 1);
                    }
                };
                rec(rec, 0);
            }
        if (lhs2 != rhs2)
            fail("2-dimensional weighted universal property fails vs " + k.loose->label());
    }
    return ok;
}

// ---------------------------------------------------------------------------
// pointwise limits of loose morphisms
// ---------------------------------------------------------------------------

namespace {

Diagram arrow_value_diagram(const FCatPtr& shape, const FObject& va, const FObject& vb,
                            const FiniteFunctor& on_f) {
    const int n = 2;
    std::vector<FObject> ob = {va, vb};
    std::vector<std::vector<FiniteFunctor>> on1(n * n);
    std::vector<std::vector<NaturalTransformation>> on2(n * n);
    auto ida = FiniteFunctor::identity(va.loose);
    auto idb = FiniteFunctor::identity(vb.loose);
    on1[0] = {ida};
    on2[0] = {NaturalTransformation::identity(ida)};
    on1[1] = {on_f};
    on2[1] = {NaturalTransformation::identity(on_f)};
    on1[3] = {idb};
    on2[3] = {NaturalTransformation::identity(idb)};
    return Diagram::make(shape, std::move(ob), std::move(on1), std::move(on2));
}

} // namespace

PointwiseLimit pointwiseModelLimitImpl(const Diagram& m, const Diagram& n,
                                       const LooseTransformation& phi, std::int64_t bound) {
    auto repm = check_loose_natural(phi, m, n);
    if (!repm.valid())
        throw ValidationError("pointwise limit: the connecting transformation is invalid: " +
                              repm.violations.front());
    if (phi.w != Weakness::Lax && phi.w != Weakness::Colax)
        throw ShapeMismatch("pointwise limit expects a lax or colax connecting transformation");
    Weakness orient = weakness_dual(phi.w); // colax phi -> lax limit and vice versa

    const auto& shape = m.src;
    const int N = shape->num_objects();
    auto dshape = loose_arrow_dotted();
    int iA = dshape.cat->object_index("A");
    int iB = dshape.cat->object_index("B");

    PointwiseLimit out;
    out.per_object.resize(N);
    for (int t = 0; t < N; ++t) {
        auto diag = arrow_value_diagram(dshape.cat, m.ob[t], n.ob[t], phi.comp1[t]);
        out.per_object[t] = dotted_lax_limit(dshape, diag, orient, bound);
    }

    // assemble L
    Diagram l;
    l.src = shape;
    l.ob.reserve(N);
    for (int t = 0; t < N; ++t) l.ob.push_back(out.per_object[t].apex);
    l.on1.resize(N * N);
    l.on2.resize(N * N);
    auto map_cone = [&](int t1, int t2, const Cell1& tc, const ConeObject& cone) {
        // image of a cone under L_t
        int x = cone.leg[iA], y = cone.leg[iB];
        int beta = cone.cell[iA * 2 + iB][0];
        int x2 = m.at1(tc).on_ob(x);
        int y2 = n.at1(tc).on_ob(y);
        const auto& phit = phi.at2(shape, tc);
        int beta2;
        if (orient == Weakness::Lax) {
            // beta: phi_t1(x) -> y;   beta2 = N(t)(beta) . (phi_t)_x
            beta2 = n.ob[t2].loose->compose(n.at1(tc).on_mor(beta), phit.comp[x]);
        } else {
            // beta: y -> phi_t1(x);   beta2 = (phi_t)_x . N(t)(beta)
            beta2 = n.ob[t2].loose->compose(phit.comp[x], n.at1(tc).on_mor(beta));
        }
        ConeObject img;
        img.leg = {0, 0};
        img.leg[iA] = x2;
        img.leg[iB] = y2;
        img.cell.assign(4, {});
        img.cell[iA * 2 + iA] = {m.ob[t2].loose->identity(x2)};
        img.cell[iA * 2 + iB] = {beta2};
        img.cell[iB * 2 + iB] = {n.ob[t2].loose->identity(y2)};
        (void)t1;
        // canonical name (must match the enumerator's naming)
        std::vector<std::string> parts{"cn"};
        parts.push_back(m.ob[t2].loose->object_name(x2));
        parts.push_back(n.ob[t2].loose->object_name(y2));
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const auto* h = dshape.cat->hom(a, b).loose.get();
                const auto& vb = (b == iA ? m.ob[t2] : n.ob[t2]);
                for (int f = 0; f < h->num_objects(); ++f)
                    parts.push_back(vb.loose->morphism_name(img.cell[a * 2 + b][f]));
            }
        img.name = encode_name(parts);
        return img;
    };

    for (int t1 = 0; t1 < N; ++t1)
        for (int t2 = 0; t2 < N; ++t2) {
            const auto& h = shape->hom(t1, t2);
            auto& tab1 = l.on1[t1 * N + t2];
            auto& tab2 = l.on2[t1 * N + t2];
            tab1.resize(h.loose->num_objects());
            tab2.resize(h.loose->num_morphisms());
            for (int f = 0; f < h.loose->num_objects(); ++f) {
                Cell1 tc{t1, t2, f};
                const auto& src_apex = out.per_object[t1];
                const auto& dst_apex = out.per_object[t2];
                std::vector<int> ob(src_apex.apex.loose->num_objects());
                for (int i = 0; i < src_apex.apex.loose->num_objects(); ++i) {
                    auto img = map_cone(t1, t2, tc, src_apex.cones[i]);
                    int idx = dst_apex.apex.loose->object_index(img.name);
                    if (idx < 0)
                        throw ValidationError("pointwise limit: mapped cone missing at " +
                                              shape->object_name(t2));
                    ob[i] = idx;
                }
                std::vector<CatPtr> looses2(2);
                looses2[iA] = m.ob[t2].loose;
                looses2[iB] = n.ob[t2].loose;
                std::vector<int> mor(src_apex.apex.loose->num_morphisms());
                for (int i = 0; i < src_apex.apex.loose->num_morphisms(); ++i) {
                    std::vector<int> comp(2);
                    comp[iA] = m.at1(tc).on_mor(src_apex.cone_mors[i][iA]);
                    comp[iB] = n.at1(tc).on_mor(src_apex.cone_mors[i][iB]);
                    int from = ob[src_apex.apex.loose->src(i)];
                    int to = ob[src_apex.apex.loose->dst(i)];
                    auto name = cone_mor_name(looses2, dst_apex.cones[from].name,
                                              dst_apex.cones[to].name, comp);
                    int idx = dst_apex.apex.loose->morphism_index(name);
                    if (idx < 0)
                        throw ValidationError("pointwise limit: mapped cone morphism missing");
                    mor[i] = idx;
                }
                tab1[f] = FiniteFunctor::make(src_apex.apex.loose, dst_apex.apex.loose,
                                              std::move(ob), std::move(mor));
            }
            for (int mm = 0; mm < h.loose->num_morphisms(); ++mm) {
                Cell2 gc{t1, t2, mm};
                int tf = h.loose->src(mm), ts = h.loose->dst(mm);
                const auto& src_apex = out.per_object[t1];
                const auto& dst_apex = out.per_object[t2];
                NaturalTransformation t;
                t.source_functor = tab1[tf];
                t.target_functor = tab1[ts];
                std::vector<CatPtr> looses2(2);
                looses2[iA] = m.ob[t2].loose;
                looses2[iB] = n.ob[t2].loose;
                t.comp.resize(src_apex.apex.loose->num_objects());
                for (int i = 0; i < src_apex.apex.loose->num_objects(); ++i) {
                    std::vector<int> comp(2);
                    comp[iA] = m.at2(gc).comp[src_apex.cones[i].leg[iA]];
                    comp[iB] = n.at2(gc).comp[src_apex.cones[i].leg[iB]];
                    auto name = cone_mor_name(looses2, dst_apex.cones[tab1[tf].on_ob(i)].name,
                                              dst_apex.cones[tab1[ts].on_ob(i)].name, comp);
                    int idx = dst_apex.apex.loose->morphism_index(name);
                    if (idx < 0)
                        throw ValidationError("pointwise limit: missing 2-cell component");
                    t.comp[i] = idx;
                }
                tab2[mm] = std::move(t);
            }
        }
    {
        auto bad = validate_diagram(l);
        if (!bad.empty())
            throw ValidationError("pointwise limit is not functorial: " + bad.front());
    }
    out.l = std::move(l);

    // eta_a, eta_b: strict projections
    auto mk_eta = [&](int which) {
        LooseTransformation eta;
        eta.wprime = Weakness::Strict;
        eta.w = phi.w;
        eta.comp1.resize(N);
        for (int t = 0; t < N; ++t) {
            const auto& apexc = out.per_object[t];
            const auto& target = which == 0 ? m.ob[t] : n.ob[t];
            std::vector<int> ob(apexc.apex.loose->num_objects());
            std::vector<int> mor(apexc.apex.loose->num_morphisms());
            for (int i = 0; i < apexc.apex.loose->num_objects(); ++i)
                ob[i] = apexc.cones[i].leg[which == 0 ? iA : iB];
            for (int i = 0; i < apexc.apex.loose->num_morphisms(); ++i)
                mor[i] = apexc.cone_mors[i][which == 0 ? iA : iB];
            eta.comp1[t] = FiniteFunctor::make(apexc.apex.loose, target.loose, std::move(ob),
                                               std::move(mor));
        }
        eta.comp2.resize(N * N);
        for (int t1 = 0; t1 < N; ++t1)
            for (int t2 = 0; t2 < N; ++t2) {
                const auto& h = shape->hom(t1, t2);
                const auto& target = which == 0 ? m : n;
                for (int f = 0; f < h.loose->num_objects(); ++f) {
                    auto fun = compose(target.at1({t1, t2, f}), eta.comp1[t1]);
                    auto fun2 = compose(eta.comp1[t2], out.l.at1({t1, t2, f}));
                    if (!functor_equal(fun, fun2))
                        throw ValidationError("pointwise limit: projection is not strictly natural");
                    eta.comp2[t1 * N + t2].push_back(NaturalTransformation::identity(fun));
                }
            }
        return eta;
    };
    out.eta_a = mk_eta(0);
    out.eta_b = mk_eta(1);

    // eta_f: comparison modification with components beta
    out.eta_f.comp.resize(N);
    for (int t = 0; t < N; ++t) {
        const auto& apexc = out.per_object[t];
        NaturalTransformation c;
        auto pa = compose(phi.comp1[t], out.eta_a.comp1[t]);
        auto pb = out.eta_b.comp1[t];
        if (orient == Weakness::Lax) {
            c.source_functor = pa;
            c.target_functor = pb;
        } else {
            c.source_functor = pb;
            c.target_functor = pa;
        }
        c.comp.resize(apexc.apex.loose->num_objects());
        for (int i = 0; i < apexc.apex.loose->num_objects(); ++i)
            c.comp[i] = apexc.cones[i].cell[iA * 2 + iB][0];
        out.eta_f.comp[t] = std::move(c);
    }
    return out;
}

PointwiseLimit pointwise_model_limit(const Diagram& m, const Diagram& n,
                                     const LooseTransformation& phi, std::int64_t bound) {
    return pointwiseModelLimitImpl(m, n, phi, bound);
}

bool check_pointwise_limit_universal(const Diagram& m, const Diagram& n,
                                     const LooseTransformation& phi, const PointwiseLimit& lim,
                                     const std::vector<Diagram>& tests,
                                     std::vector<std::string>* report, std::int64_t bound) {
    bool ok = true;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (report) report->push_back(msg);
    };
    Weakness w = phi.w;
    Weakness orient = weakness_dual(w);
    const int N = m.src->num_objects();

    for (const auto& x : tests) {
        auto zetasA = enumerate_loose_transformations(x, m, w, bound);
        auto zetasB = enumerate_loose_transformations(x, n, w, bound);
        auto key_of = [&](const LooseTransformation& za, const LooseTransformation& zb,
                          const ModificationCells& zf) {
            std::vector<std::string> parts{"fcone"};
            for (auto& f : za.comp1) parts.push_back(f.encode());
            for (auto& hom : za.comp2)
                for (auto& t : hom) parts.push_back(t.encode());
            for (auto& f : zb.comp1) parts.push_back(f.encode());
            for (auto& hom : zb.comp2)
                for (auto& t : hom) parts.push_back(t.encode());
            for (auto& t : zf.comp) parts.push_back(t.encode());
            return encode_name(parts);
        };
        // enumerate cones (zetaA, zetaB, zeta_f)
        std::map<std::string, int> cone_count, tight_cone_count;
        for (auto& za : zetasA)
            for (auto& zb : zetasB) {
                auto pa = compose_loose(phi, za, x, m, n);
                const LooseTransformation& from = orient == Weakness::Lax ? pa : zb;
                const LooseTransformation& to = orient == Weakness::Lax ? zb : pa;
                for (auto& zf : enumerate_modifications(from, to, x, n, bound)) {
                    auto key = key_of(za, zb, zf);
                    ++cone_count[key];
                    auto ra = check_loose_natural(za, x, m);
                    auto rb = check_loose_natural(zb, x, n);
                    if (ra.tight && rb.tight) ++tight_cone_count[key];
                }
            }
        // cells X -> L
        auto chis = enumerate_loose_transformations(x, lim.l, w, bound);
        std::map<std::string, int> image_count, image_tight_count;
        for (auto& chi : chis) {
            auto za = compose_loose(lim.eta_a, chi, x, lim.l, m);
            auto zb = compose_loose(lim.eta_b, chi, x, lim.l, n);
            ModificationCells zf;
            zf.comp.resize(N);
            for (int t = 0; t < N; ++t)
                zf.comp[t] = whisker_right(lim.eta_f.comp[t], chi.comp1[t]);
            auto key = key_of(za, zb, zf);
            if (!cone_count.count(key)) {
                fail("a transformation X => L pastes to a non-cone");
                continue;
            }
            ++image_count[key];
            if (check_loose_natural(chi, x, lim.l).tight) ++image_tight_count[key];
        }
        if (image_count != cone_count) fail("functor-level 1-dimensional property fails (loose)");
        if (image_tight_count != tight_cone_count)
            fail("functor-level 1-dimensional property fails (tight)");

        // 2-dimensional counts: modifications X => L vs cone modifications
        std::int64_t lhs2 = 0, rhs2 = 0;
        for (auto& chi : chis)
            for (auto& chi2 : chis)
                lhs2 += static_cast<std::int64_t>(enumerate_modifications(chi, chi2, x, lim.l, bound).size());
        // cone modifications: pairs (muA, muB) commuting with zeta_f
        for (auto& za : zetasA)
            for (auto& zb : zetasB) {
                auto pa = compose_loose(phi, za, x, m, n);
                const LooseTransformation& from1 = orient == Weakness::Lax ? pa : zb;
                const LooseTransformation& to1 = orient == Weakness::Lax ? zb : pa;
                auto zfs = enumerate_modifications(from1, to1, x, n, bound);
                for (auto& za2 : zetasA)
                    for (auto& zb2 : zetasB) {
                        auto pa2 = compose_loose(phi, za2, x, m, n);
                        const LooseTransformation& from2 = orient == Weakness::Lax ? pa2 : zb2;
                        const LooseTransformation& to2 = orient == Weakness::Lax ? zb2 : pa2;
                        auto zfs2 = enumerate_modifications(from2, to2, x, n, bound);
                        for (auto& zf : zfs)
                            for (auto& zf2 : zfs2)
                                for (auto& muA : enumerate_modifications(za, za2, x, m, bound))
                                    for (auto& muB : enumerate_modifications(zb, zb2, x, n, bound)) {
                                        // compatibility: zf2 . (phi * muA) == muB . zf (lax)
                                        bool good = true;
                                        for (int t = 0; t < N && good; ++t) {
                                            auto phimu = whisker_left(phi.comp1[t], muA.comp[t]);
                                            if (orient == Weakness::Lax) {
                                                auto lhs = vcompose(zf2.comp[t], phimu);
                                                auto rhs = vcompose(muB.comp[t], zf.comp[t]);
                                                good = lhs.comp == rhs.comp;
                                            } else {
                                                auto lhs = vcompose(phimu, zf.comp[t]);
                                                auto rhs = vcompose(zf2.comp[t], muB.comp[t]);
                                                good = lhs.comp == rhs.comp;
                                            }
                                        }
                                        if (good) ++rhs2;
                                    }
                    }
            }
        if (lhs2 != rhs2) fail("functor-level 2-dimensional property fails");
    }
    return ok;
}

} // namespace enhcat
