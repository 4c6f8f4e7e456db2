#ifndef ENHCAT_TEST_FIXTURES_MONOIDAL_HPP
#define ENHCAT_TEST_FIXTURES_MONOIDAL_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "enhcat/sketch.hpp"
#include "fixtures.hpp"

namespace enhcat::fixtures {

// ---------------------------------------------------------------------------
// The multiplication sketch: a carrier on the powers c0..c3 of one object,
// with tight projections, loose multiplication and unit, the two whiskered
// multiplications (so strict associativity becomes an equation of 1-cells)
// and the loose unit insertions (so strict unit laws become equations).
// 1-cells c^n -> c^m are m-tuples of words in n variables; composition is
// substitution; tight cells are the tuples of bare variables.
// ---------------------------------------------------------------------------

struct MonCell {
    int src = 0, dst = 0;
    std::vector<std::vector<int>> words; // dst-many words over {0..src-1}

    bool tight() const {
        for (const auto& w : words)
            if (w.size() != 1) return false;
        return true;
    }
    std::string name() const {
        std::vector<std::string> parts{"w", std::to_string(src), std::to_string(dst)};
        for (const auto& w : words) {
            std::string ws;
            for (int v : w) ws += static_cast<char>('a' + v);
            parts.push_back(ws);
        }
        return encode_name(parts);
    }
};

inline MonCell mon_compose(const MonCell& g, const MonCell& f) {
    MonCell out;
    out.src = f.src;
    out.dst = g.dst;
    for (const auto& gw : g.words) {
        std::vector<int> w;
        for (int v : gw) w.insert(w.end(), f.words[v].begin(), f.words[v].end());
        out.words.push_back(std::move(w));
    }
    return out;
}

struct MonoidalSketch {
    FCatPtr carrier;
    Sketch sketch;
    std::map<std::string, MonCell> cells; // by name
    // handles: object indices and distinguished cell names
    int c0, c1, c2, c3;
    std::string mu, iota, u1, u2, x12, x23;
};

inline MonCell mon_identity(int n) {
    MonCell c;
    c.src = c.dst = n;
    for (int i = 0; i < n; ++i) c.words.push_back({i});
    return c;
}

inline MonoidalSketch monoidal_sketch() {
    std::vector<MonCell> gens;
    for (int n = 0; n <= 3; ++n) gens.push_back(mon_identity(n));
    gens.push_back({2, 1, {{0}}});          // projection 1
    gens.push_back({2, 1, {{1}}});          // projection 2
    gens.push_back({3, 1, {{0}}});
    gens.push_back({3, 1, {{1}}});
    gens.push_back({3, 1, {{2}}});
    for (int n = 1; n <= 3; ++n) gens.push_back({n, 0, {}}); // collapse to c0
    gens.push_back({0, 1, {{}}});           // unit insertion
    gens.push_back({2, 1, {{0, 1}}});       // multiplication
    gens.push_back({1, 2, {{}, {0}}});      // U1
    gens.push_back({1, 2, {{0}, {}}});      // U2
    gens.push_back({3, 2, {{0, 1}, {2}}});  // mu x 1
    gens.push_back({3, 2, {{0}, {1, 2}}});  // 1 x mu

    // closure under substitution
    std::map<std::string, MonCell> cells;
    for (const auto& g : gens) cells[g.name()] = g;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<MonCell> current;
        for (auto& [k, v] : cells) current.push_back(v);
        for (const auto& g : current)
            for (const auto& f : current) {
                if (f.dst != g.src) continue;
                auto c = mon_compose(g, f);
                if (!cells.count(c.name())) {
                    cells[c.name()] = c;
                    grew = true;
                }
            }
        if (cells.size() > 300) throw std::runtime_error("monoidal carrier closure exploded");
    }

    // group per hom
    const int nobj = 4;
    std::vector<std::vector<std::pair<std::string, bool>>> homcells(nobj * nobj);
    for (auto& [k, v] : cells) homcells[v.src * nobj + v.dst].emplace_back(k, v.tight());
    std::vector<std::string> units;
    for (int n = 0; n < nobj; ++n) units.push_back(mon_identity(n).name());
    std::vector<std::string> objects = {"c0", "c1", "c2", "c3"};

    auto comp = [cells](int, int, int, const std::string& g, const std::string& f) {
        return mon_compose(cells.at(g), cells.at(f)).name();
    };
    // objects are named c0..c3, and discrete_hom_fcategory indexes homs by
    // (x, y) in the given object order
    std::vector<std::vector<std::pair<std::string, bool>>> ordered(nobj * nobj);
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y) {
            auto v = homcells[x * nobj + y];
            std::sort(v.begin(), v.end());
            ordered[x * nobj + y] = std::move(v);
        }
    auto carrier = discrete_hom_fcategory("Tmon", objects, ordered, units, comp);

    MonoidalSketch out;
    out.carrier = carrier;
    out.cells = cells;
    out.c0 = carrier->object_index("c0");
    out.c1 = carrier->object_index("c1");
    out.c2 = carrier->object_index("c2");
    out.c3 = carrier->object_index("c3");
    out.mu = MonCell{2, 1, {{0, 1}}}.name();
    out.iota = MonCell{0, 1, {{}}}.name();
    out.u1 = MonCell{1, 2, {{}, {0}}}.name();
    out.u2 = MonCell{1, 2, {{0}, {}}}.name();
    out.x12 = MonCell{3, 2, {{0, 1}, {2}}}.name();
    out.x23 = MonCell{3, 2, {{0}, {1, 2}}}.name();

    // cones: binary product on c2, ternary product on c3, empty product on c0
    auto terminal_weight = [&](const FCatPtr& shape) {
        return Diagram::constant(shape, FObject::chordate(cats::terminal()));
    };
    auto const_leg = [&](const FObject& w, const FObject& h, const std::string& cellname) {
        int lo = h.loose->object_index(cellname);
        int ti = h.ob_preimage[lo];
        std::vector<int> obt(w.tight->num_objects(), ti), mort(w.tight->num_morphisms());
        for (int i = 0; i < w.tight->num_morphisms(); ++i) mort[i] = h.tight->identity(ti);
        std::vector<int> obl(w.loose->num_objects(), lo), morl(w.loose->num_morphisms());
        for (int i = 0; i < w.loose->num_morphisms(); ++i) morl[i] = h.loose->identity(lo);
        return FMap::make(w, h,
                          FiniteFunctor::make(w.tight, h.tight, std::move(obt), std::move(mort)),
                          FiniteFunctor::make(w.loose, h.loose, std::move(obl), std::move(morl)));
    };
    auto discrete_ffunctor = [&](const FCatPtr& shape, const std::vector<int>& obmap) {
        const int m = shape->num_objects();
        std::vector<FMap> act;
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                const auto& sh = shape->hom(x, y);
                const auto& th = carrier->hom(obmap[x], obmap[y]);
                std::vector<int> obt(sh.tight->num_objects()), mort(sh.tight->num_morphisms());
                std::vector<int> obl(sh.loose->num_objects()), morl(sh.loose->num_morphisms());
                if (x == y) {
                    obt[sh.tight->object_index(shape->hom(x, x).tight->object_name(shape->unit_tight(x)))] =
                        carrier->unit_tight(obmap[x]);
                    for (int i = 0; i < sh.tight->num_morphisms(); ++i)
                        mort[i] = th.tight->identity(carrier->unit_tight(obmap[x]));
                    obl[shape->unit_loose(x)] = carrier->unit_loose(obmap[x]);
                    for (int i = 0; i < sh.loose->num_morphisms(); ++i)
                        morl[i] = th.loose->identity(carrier->unit_loose(obmap[x]));
                }
                act.push_back(FMap::make(
                    sh, th, FiniteFunctor::make(sh.tight, th.tight, std::move(obt), std::move(mort)),
                    FiniteFunctor::make(sh.loose, th.loose, std::move(obl), std::move(morl))));
            }
        return FFunctor::make(shape, carrier, obmap, std::move(act));
    };

    std::vector<SketchCone> cones;
    {
        SketchCone bin;
        bin.shape = discrete_fcategory(2);
        bin.weight = terminal_weight(bin.shape);
        bin.diagram = discrete_ffunctor(bin.shape, {out.c1, out.c1});
        bin.apex = out.c2;
        bin.gamma = {const_leg(bin.weight.ob[0], carrier->hom(out.c2, out.c1),
                               MonCell{2, 1, {{0}}}.name()),
                     const_leg(bin.weight.ob[1], carrier->hom(out.c2, out.c1),
                               MonCell{2, 1, {{1}}}.name())};
        cones.push_back(std::move(bin));
    }
    {
        SketchCone tri;
        tri.shape = discrete_fcategory(3);
        tri.weight = terminal_weight(tri.shape);
        tri.diagram = discrete_ffunctor(tri.shape, {out.c1, out.c1, out.c1});
        tri.apex = out.c3;
        tri.gamma = {const_leg(tri.weight.ob[0], carrier->hom(out.c3, out.c1),
                               MonCell{3, 1, {{0}}}.name()),
                     const_leg(tri.weight.ob[1], carrier->hom(out.c3, out.c1),
                               MonCell{3, 1, {{1}}}.name()),
                     const_leg(tri.weight.ob[2], carrier->hom(out.c3, out.c1),
                               MonCell{3, 1, {{2}}}.name())};
        cones.push_back(std::move(tri));
    }
    {
        SketchCone nullary;
        nullary.shape = discrete_fcategory(0);
        nullary.weight = Diagram::constant(nullary.shape, FObject::chordate(cats::terminal()));
        nullary.diagram = FFunctor::make(nullary.shape, carrier, {}, {});
        nullary.apex = out.c0;
        cones.push_back(std::move(nullary));
    }
    out.sketch = Sketch::make(carrier, std::move(cones), true);
    return out;
}

// ---------------------------------------------------------------------------
// strict monoidal categories and the models they induce
// ---------------------------------------------------------------------------

struct StrictMonoidal {
    CatPtr cat;
    ProductCategory square; // cat x cat
    FiniteFunctor tensor;   // square.cat -> cat
    int unit = 0;           // unit object
    std::string label;
};

/// The chain 0 <= 1 with max as tensor, unit 0.
inline StrictMonoidal poset2_max() {
    StrictMonoidal m;
    m.cat = cats::walking_arrow();
    m.square = product_category(m.cat, m.cat);
    std::vector<int> ob(m.square.cat->num_objects()), mor(m.square.cat->num_morphisms());
    for (int i = 0; i < m.square.cat->num_objects(); ++i) {
        auto [a, b] = m.square.pair_of_ob[i];
        ob[i] = std::max(a, b);
    }
    for (int i = 0; i < m.square.cat->num_morphisms(); ++i) {
        auto [f, g] = m.square.pair_of_mor[i];
        int s = std::max(m.cat->src(f), m.cat->src(g));
        int d = std::max(m.cat->dst(f), m.cat->dst(g));
        mor[i] = m.cat->hom(s, d).at(0);
    }
    m.tensor = FiniteFunctor::make(m.square.cat, m.cat, std::move(ob), std::move(mor));
    m.unit = 0;
    m.label = "2max";
    return m;
}

/// The chain 0 <= 1 with min as tensor, unit 1.
inline StrictMonoidal poset2_min() {
    StrictMonoidal m;
    m.cat = cats::walking_arrow();
    m.square = product_category(m.cat, m.cat);
    std::vector<int> ob(m.square.cat->num_objects()), mor(m.square.cat->num_morphisms());
    for (int i = 0; i < m.square.cat->num_objects(); ++i) {
        auto [a, b] = m.square.pair_of_ob[i];
        ob[i] = std::min(a, b);
    }
    for (int i = 0; i < m.square.cat->num_morphisms(); ++i) {
        auto [f, g] = m.square.pair_of_mor[i];
        int s = std::min(m.cat->src(f), m.cat->src(g));
        int d = std::min(m.cat->dst(f), m.cat->dst(g));
        mor[i] = m.cat->hom(s, d).at(0);
    }
    m.tensor = FiniteFunctor::make(m.square.cat, m.cat, std::move(ob), std::move(mor));
    m.unit = 1;
    m.label = "2min";
    return m;
}

/// The one-object category {1, e}, e.e = e, with composition as tensor.
inline StrictMonoidal idem_monoid() {
    StrictMonoidal m;
    m.cat = cats::walking_idempotent();
    m.square = product_category(m.cat, m.cat);
    std::vector<int> ob(m.square.cat->num_objects(), 0);
    std::vector<int> mor(m.square.cat->num_morphisms());
    for (int i = 0; i < m.square.cat->num_morphisms(); ++i) {
        auto [f, g] = m.square.pair_of_mor[i];
        mor[i] = m.cat->compose(f, g);
    }
    m.tensor = FiniteFunctor::make(m.square.cat, m.cat, std::move(ob), std::move(mor));
    m.unit = 0;
    m.label = "idem";
    return m;
}

/// Powers A^0..A^3 with coordinate access, left-nested.
struct MonPowers {
    StrictMonoidal a;
    std::vector<CatPtr> pow;           // pow[0] = terminal, pow[1] = A, ...
    ProductCategory p2, p3;            // pow2 = A x A, pow3 = pow2 x A

    std::vector<int> ob_coords(int n, int idx) const {
        if (n == 0) return {};
        if (n == 1) return {idx};
        if (n == 2) {
            auto [x, y] = p2.pair_of_ob[idx];
            return {x, y};
        }
        auto [xy, z] = p3.pair_of_ob[idx];
        auto c = ob_coords(2, xy);
        c.push_back(z);
        return c;
    }
    std::vector<int> mor_coords(int n, int idx) const {
        if (n == 0) return {};
        if (n == 1) return {idx};
        if (n == 2) {
            auto [x, y] = p2.pair_of_mor[idx];
            return {x, y};
        }
        auto [xy, z] = p3.pair_of_mor[idx];
        auto c = mor_coords(2, xy);
        c.push_back(z);
        return c;
    }
    int ob_of_coords(int n, const std::vector<int>& c) const {
        if (n == 0) return 0;
        if (n == 1) return c[0];
        if (n == 2) return p2.pair_ob(c[0], c[1]);
        return p3.pair_ob(p2.pair_ob(c[0], c[1]), c[2]);
    }
    int mor_of_coords(int n, const std::vector<int>& c) const {
        if (n == 0) return 0;
        if (n == 1) return c[0];
        if (n == 2) return p2.pair_mor(c[0], c[1]);
        return p3.pair_mor(p2.pair_mor(c[0], c[1]), c[2]);
    }
    int eval_word_ob(const std::vector<int>& w, const std::vector<int>& coords) const {
        if (w.empty()) return a.unit;
        int acc = coords[w[0]];
        for (std::size_t i = 1; i < w.size(); ++i)
            acc = a.tensor.on_ob(a.square.pair_ob(acc, coords[w[i]]));
        return acc;
    }
    int eval_word_mor(const std::vector<int>& w, const std::vector<int>& coords) const {
        if (w.empty()) return a.cat->identity(a.unit);
        int acc = coords[w[0]];
        for (std::size_t i = 1; i < w.size(); ++i)
            acc = a.tensor.on_mor(a.square.pair_mor(acc, coords[w[i]]));
        return acc;
    }
};

inline MonPowers mon_powers(const StrictMonoidal& a) {
    MonPowers p{a, {}, product_category(a.cat, a.cat), {}};
    p.p3 = product_category(p.p2.cat, a.cat);
    p.pow = {cats::terminal(), a.cat, p.p2.cat, p.p3.cat};
    return p;
}

/// The model of the multiplication sketch induced by a strict monoidal
/// category.
inline Diagram monoidal_model(const MonoidalSketch& sk, const MonPowers& p) {
    const auto& carrier = sk.carrier;
    const int n = carrier->num_objects();
    Diagram out;
    out.src = carrier;
    out.ob.resize(n);
    std::vector<int> power_of(n);
    power_of[sk.c0] = 0;
    power_of[sk.c1] = 1;
    power_of[sk.c2] = 2;
    power_of[sk.c3] = 3;
    for (int x = 0; x < n; ++x) out.ob[x] = FObject::chordate(p.pow[power_of[x]]);
    out.on1.resize(n * n);
    out.on2.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = carrier->hom(x, y);
            int sn = power_of[x], dn = power_of[y];
            for (int f = 0; f < h.loose->num_objects(); ++f) {
                const auto& cell = sk.cells.at(h.loose->object_name(f));
                std::vector<int> ob(p.pow[sn]->num_objects()), mor(p.pow[sn]->num_morphisms());
                for (int o = 0; o < p.pow[sn]->num_objects(); ++o) {
                    auto coords = p.ob_coords(sn, o);
                    std::vector<int> vals;
                    for (const auto& w : cell.words) vals.push_back(p.eval_word_ob(w, coords));
                    ob[o] = p.ob_of_coords(dn, vals);
                }
                for (int m = 0; m < p.pow[sn]->num_morphisms(); ++m) {
                    auto coords = p.mor_coords(sn, m);
                    std::vector<int> vals;
                    for (const auto& w : cell.words) vals.push_back(p.eval_word_mor(w, coords));
                    mor[m] = p.mor_of_coords(dn, vals);
                }
                out.on1[x * n + y].push_back(
                    FiniteFunctor::make(p.pow[sn], p.pow[dn], std::move(ob), std::move(mor)));
            }
            for (int m = 0; m < h.loose->num_morphisms(); ++m)
                out.on2[x * n + y].push_back(
                    NaturalTransformation::identity(out.on1[x * n + y][h.loose->src(m)]));
        }
    auto bad = validate_diagram(out);
    if (!bad.empty()) throw ValidationError("monoidal model: " + bad.front());
    return out;
}

// ---------------------------------------------------------------------------
// independent oracle: lax monoidal functors enumerated from first principles
// ---------------------------------------------------------------------------

/// Canonical key for comparison against the sketch-side enumeration:
/// the underlying functor, the unit map, and the multiplication components
/// indexed by pairs of objects of A.
inline std::string lax_monoidal_key(const StrictMonoidal& a, const StrictMonoidal& b,
                                    const FiniteFunctor& f, int f0,
                                    const std::vector<int>& f2 /* a.square object -> b mor */) {
    std::vector<std::string> parts{"laxmon", f.encode(), b.cat->morphism_name(f0)};
    for (int i = 0; i < a.square.cat->num_objects(); ++i)
        parts.push_back(b.cat->morphism_name(f2[i]));
    return encode_name(parts);
}

inline std::vector<std::string> enumerate_lax_monoidal_keys(const StrictMonoidal& a,
                                                            const StrictMonoidal& b) {
    std::vector<std::string> out;
    for (const auto& f : enumerate_functors(a.cat, b.cat)) {
        std::vector<int> f0cands = b.cat->hom(b.unit, f.on_ob(a.unit));
        const int nsq = a.square.cat->num_objects();
        std::vector<std::vector<int>> f2cands(nsq);
        for (int i = 0; i < nsq; ++i) {
            auto [x, y] = a.square.pair_of_ob[i];
            int from = b.tensor.on_ob(b.square.pair_ob(f.on_ob(x), f.on_ob(y)));
            int to = f.on_ob(a.tensor.on_ob(i));
            f2cands[i] = b.cat->hom(from, to);
        }
        std::vector<int> f2(nsq, -1);
        auto axioms_hold = [&](int f0) {
            // naturality in both arguments
            for (int m = 0; m < a.square.cat->num_morphisms(); ++m) {
                auto [g, h] = a.square.pair_of_mor[m];
                int src_pair = a.square.pair_ob(a.cat->src(g), a.cat->src(h));
                int dst_pair = a.square.pair_ob(a.cat->dst(g), a.cat->dst(h));
                int lhs = b.cat->compose(f2[dst_pair],
                                         b.tensor.on_mor(b.square.pair_mor(f.on_mor(g), f.on_mor(h))));
                int rhs = b.cat->compose(f.on_mor(a.tensor.on_mor(m)), f2[src_pair]);
                if (lhs != rhs) return false;
            }
            // associativity
            for (int xo = 0; xo < a.cat->num_objects(); ++xo)
                for (int yo = 0; yo < a.cat->num_objects(); ++yo)
                    for (int zo = 0; zo < a.cat->num_objects(); ++zo) {
                        int xy = a.tensor.on_ob(a.square.pair_ob(xo, yo));
                        int yz = a.tensor.on_ob(a.square.pair_ob(yo, zo));
                        int lhs = b.cat->compose(
                            f2[a.square.pair_ob(xy, zo)],
                            b.tensor.on_mor(b.square.pair_mor(
                                f2[a.square.pair_ob(xo, yo)],
                                b.cat->identity(f.on_ob(zo)))));
                        int rhs = b.cat->compose(
                            f2[a.square.pair_ob(xo, yz)],
                            b.tensor.on_mor(b.square.pair_mor(b.cat->identity(f.on_ob(xo)),
                                                              f2[a.square.pair_ob(yo, zo)])));
                        if (lhs != rhs) return false;
                    }
            // unit laws
            for (int xo = 0; xo < a.cat->num_objects(); ++xo) {
                int left = b.cat->compose(
                    f2[a.square.pair_ob(a.unit, xo)],
                    b.tensor.on_mor(b.square.pair_mor(f0, b.cat->identity(f.on_ob(xo)))));
                if (left != b.cat->identity(f.on_ob(xo))) return false;
                int right = b.cat->compose(
                    f2[a.square.pair_ob(xo, a.unit)],
                    b.tensor.on_mor(b.square.pair_mor(b.cat->identity(f.on_ob(xo)), f0)));
                if (right != b.cat->identity(f.on_ob(xo))) return false;
            }
            return true;
        };
        auto rec = [&](auto&& self, int i, int f0) -> void {
            if (i == nsq) {
                if (axioms_hold(f0)) out.push_back(lax_monoidal_key(a, b, f, f0, f2));
                return;
            }
            for (int cand : f2cands[i]) {
                f2[i] = cand;
                self(self, i + 1, f0);
            }
        };
        for (int f0 : f0cands) rec(rec, 0, f0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Extraction of the (F, F0, F2) data from a loose transformation between
/// monoidal models, in the same key format.
inline std::string extract_lax_monoidal_key(const MonoidalSketch& sk, const MonPowers& pa,
                                            const MonPowers& pb, const LooseTransformation& phi) {
    const auto& carrier = sk.carrier;
    const int n = carrier->num_objects();
    const auto& f = phi.comp1[sk.c1];
    // F0: component of the 2-cell at iota
    const auto& hiota = carrier->hom(sk.c0, sk.c1);
    const auto& tiota = phi.comp2[sk.c0 * n + sk.c1][hiota.loose->object_index(sk.iota)];
    int f0 = tiota.comp[0];
    // F2: components of the 2-cell at mu, reindexed by the pair coordinates
    const auto& hmu = carrier->hom(sk.c2, sk.c1);
    const auto& tmu = phi.comp2[sk.c2 * n + sk.c1][hmu.loose->object_index(sk.mu)];
    std::vector<int> f2(pa.a.square.cat->num_objects());
    for (int i = 0; i < pa.a.square.cat->num_objects(); ++i) f2[i] = tmu.comp[i];
    StrictMonoidal bdummy = pb.a;
    return lax_monoidal_key(pa.a, bdummy, f, f0, f2);
}

} // namespace enhcat::fixtures

#endif
