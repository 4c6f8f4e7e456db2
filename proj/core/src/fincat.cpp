#include "enhcat/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace enhcat {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string encode_name(const std::vector<std::string>& parts) {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += "\"";
        for (char c : parts[i]) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        out += "\"";
    }
    out += "]";
    return out;
}

namespace {

std::string pad_index(int i, int total) {
    int width = 1;
    for (int t = total - 1; t >= 10; t /= 10) ++width;
    std::string digits = std::to_string(i);
    return std::string(width - static_cast<int>(digits.size()) > 0
                           ? width - static_cast<int>(digits.size())
                           : 0,
                       '0') +
           digits;
}

} // namespace

// ---------------------------------------------------------------------------
// validation and construction
// ---------------------------------------------------------------------------

std::vector<std::string> validate_category(const CategoryData& data) {
    std::vector<std::string> bad;
    std::unordered_map<std::string, int> oidx, midx;
    for (std::size_t i = 0; i < data.objects.size(); ++i) {
        if (!oidx.emplace(data.objects[i], static_cast<int>(i)).second)
            bad.push_back("duplicate object " + quoted(data.objects[i]));
    }
    for (std::size_t i = 0; i < data.morphisms.size(); ++i) {
        const auto& m = data.morphisms[i];
        if (!midx.emplace(m.name, static_cast<int>(i)).second)
            bad.push_back("duplicate morphism " + quoted(m.name));
        if (!oidx.count(m.src))
            bad.push_back("morphism " + quoted(m.name) + " has unknown source " + quoted(m.src));
        if (!oidx.count(m.dst))
            bad.push_back("morphism " + quoted(m.name) + " has unknown target " + quoted(m.dst));
    }
    if (!bad.empty()) return bad; // later checks need consistent indices

    const int n_ob = static_cast<int>(data.objects.size());
    const int n_mor = static_cast<int>(data.morphisms.size());
    std::vector<int> ident(n_ob, -1);
    for (const auto& [ob, mor] : data.identities) {
        auto oi = oidx.find(ob);
        auto mi = midx.find(mor);
        if (oi == oidx.end()) {
            bad.push_back("identity assigned to unknown object " + quoted(ob));
            continue;
        }
        if (mi == midx.end()) {
            bad.push_back("identity of " + quoted(ob) + " references unknown morphism " + quoted(mor));
            continue;
        }
        const auto& m = data.morphisms[mi->second];
        if (m.src != ob || m.dst != ob)
            bad.push_back("identity of " + quoted(ob) + " is " + quoted(mor) + " with wrong endpoints");
        if (ident[oi->second] != -1)
            bad.push_back("object " + quoted(ob) + " has two identity assignments");
        ident[oi->second] = mi->second;
    }
    for (int o = 0; o < n_ob; ++o)
        if (ident[o] == -1) bad.push_back("object " + quoted(data.objects[o]) + " has no identity");
    if (!bad.empty()) return bad;

    std::vector<int> comp(static_cast<std::size_t>(n_mor) * n_mor, -1);
    auto src_of = [&](int m) { return oidx[data.morphisms[m].src]; };
    auto dst_of = [&](int m) { return oidx[data.morphisms[m].dst]; };
    for (const auto& [g, f, gf] : data.compose) {
        auto gi = midx.find(g), fi = midx.find(f), ri = midx.find(gf);
        if (gi == midx.end() || fi == midx.end() || ri == midx.end()) {
            bad.push_back("compose entry (" + g + ", " + f + ") -> " + gf + " references unknown morphisms");
            continue;
        }
        if (dst_of(fi->second) != src_of(gi->second)) {
            bad.push_back("compose entry (" + g + ", " + f + ") is not a composable pair");
            continue;
        }
        if (src_of(ri->second) != src_of(fi->second) || dst_of(ri->second) != dst_of(gi->second)) {
            bad.push_back("compose entry (" + g + ", " + f + ") -> " + gf + " has wrong endpoints");
            continue;
        }
        int& slot = comp[static_cast<std::size_t>(gi->second) * n_mor + fi->second];
        if (slot != -1 && slot != ri->second)
            bad.push_back("conflicting compose entries for (" + g + ", " + f + ")");
        slot = ri->second;
    }
    if (!bad.empty()) return bad;

    for (int f = 0; f < n_mor; ++f)
        for (int g = 0; g < n_mor; ++g)
            if (dst_of(f) == src_of(g) && comp[static_cast<std::size_t>(g) * n_mor + f] == -1)
                bad.push_back("missing compose entry for (" + data.morphisms[g].name + ", " +
                              data.morphisms[f].name + ")");
    if (!bad.empty()) return bad;

    auto cc = [&](int g, int f) { return comp[static_cast<std::size_t>(g) * n_mor + f]; };
    for (int m = 0; m < n_mor; ++m) {
        if (cc(ident[dst_of(m)], m) != m)
            bad.push_back("left identity law fails at " + quoted(data.morphisms[m].name));
        if (cc(m, ident[src_of(m)]) != m)
            bad.push_back("right identity law fails at " + quoted(data.morphisms[m].name));
    }

    // Associativity over composable triples, grouped to skip non-composable pairs.
    std::vector<std::vector<int>> by_src(n_ob);
    for (int m = 0; m < n_mor; ++m) by_src[src_of(m)].push_back(m);
    for (int f = 0; f < n_mor; ++f) {
        for (int g : by_src[dst_of(f)]) {
            int gf = cc(g, f);
            for (int h : by_src[dst_of(g)]) {
                if (cc(h, gf) != cc(cc(h, g), f))
                    bad.push_back("associativity fails at (" + data.morphisms[h].name + ", " +
                                  data.morphisms[g].name + ", " + data.morphisms[f].name + ")");
            }
        }
    }
    return bad;
}

CatPtr FiniteCategory::make(CategoryData data) {
    std::sort(data.objects.begin(), data.objects.end());
    std::sort(data.morphisms.begin(), data.morphisms.end(),
              [](const MorphismData& a, const MorphismData& b) { return a.name < b.name; });
    auto bad = validate_category(data);
    if (!bad.empty())
        throw ValidationError("category " + quoted(data.label) + ": " + bad.front());

    auto cat = std::shared_ptr<FiniteCategory>(new FiniteCategory());
    cat->label_ = data.label;
    cat->objects_ = data.objects;
    cat->morphisms_ = data.morphisms;
    const int n_ob = cat->num_objects();
    const int n_mor = cat->num_morphisms();

    std::unordered_map<std::string, int> oidx, midx;
    for (int i = 0; i < n_ob; ++i) oidx[cat->objects_[i]] = i;
    for (int i = 0; i < n_mor; ++i) midx[cat->morphisms_[i].name] = i;
    cat->msrc_.resize(n_mor);
    cat->mdst_.resize(n_mor);
    for (int i = 0; i < n_mor; ++i) {
        cat->msrc_[i] = oidx[cat->morphisms_[i].src];
        cat->mdst_[i] = oidx[cat->morphisms_[i].dst];
    }
    cat->identity_.assign(n_ob, -1);
    for (const auto& [ob, mor] : data.identities) cat->identity_[oidx[ob]] = midx[mor];
    cat->comp_.assign(static_cast<std::size_t>(n_mor) * n_mor, -1);
    for (const auto& [g, f, gf] : data.compose)
        cat->comp_[static_cast<std::size_t>(midx[g]) * n_mor + midx[f]] = midx[gf];
    cat->homs_.assign(static_cast<std::size_t>(n_ob) * n_ob, {});
    for (int m = 0; m < n_mor; ++m)
        cat->homs_[static_cast<std::size_t>(cat->msrc_[m]) * n_ob + cat->mdst_[m]].push_back(m);

    cat->inverse_.assign(n_mor, -1);
    for (int m = 0; m < n_mor; ++m) {
        if (cat->inverse_[m] >= 0) continue;
        int a = cat->msrc_[m], b = cat->mdst_[m];
        for (int n : cat->hom(b, a)) {
            if (cat->comp_[static_cast<std::size_t>(n) * n_mor + m] == cat->identity_[a] &&
                cat->comp_[static_cast<std::size_t>(m) * n_mor + n] == cat->identity_[b]) {
                cat->inverse_[m] = n;
                cat->inverse_[n] = m;
                break;
            }
        }
    }
    cat->data_ = std::move(data);
    return cat;
}

int FiniteCategory::object_index(const std::string& name) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), name);
    if (it != objects_.end() && *it == name) return static_cast<int>(it - objects_.begin());
    return -1;
}

int FiniteCategory::morphism_index(const std::string& name) const {
    int lo = 0, hi = num_morphisms();
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (morphisms_[mid].name < name)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < num_morphisms() && morphisms_[lo].name == name) return lo;
    return -1;
}

int FiniteCategory::compose(int g, int f) const {
    if (!composable(g, f))
        throw NotComposable("compose(" + morphisms_[g].name + ", " + morphisms_[f].name +
                            "): target of " + morphisms_[f].name + " is not source of " +
                            morphisms_[g].name);
    return comp_[static_cast<std::size_t>(g) * num_morphisms() + f];
}

bool FiniteCategory::objects_isomorphic(int a, int b) const {
    if (a == b) return true;
    for (int m : hom(a, b))
        if (is_iso(m)) return true;
    return false;
}

int FiniteCategory::compose_path(const std::vector<int>& path, int at) const {
    int acc = identity(at);
    for (int m : path) acc = compose(m, acc);
    return acc;
}

bool same_category(const CatPtr& a, const CatPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->num_objects() != b->num_objects() || a->num_morphisms() != b->num_morphisms())
        return false;
    for (int o = 0; o < a->num_objects(); ++o)
        if (a->object_name(o) != b->object_name(o)) return false;
    for (int m = 0; m < a->num_morphisms(); ++m) {
        const auto& am = a->morphism(m);
        const auto& bm = b->morphism(m);
        if (am.name != bm.name || am.src != bm.src || am.dst != bm.dst) return false;
    }
    for (int o = 0; o < a->num_objects(); ++o)
        if (a->identity(o) != b->identity(o)) return false;
    const int n = a->num_morphisms();
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f)
            if (a->composable(g, f) && a->compose(g, f) != b->compose(g, f)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// functors
// ---------------------------------------------------------------------------

std::vector<std::string> validate_functor(const CatPtr& source, const CatPtr& target,
                                          const std::vector<int>& ob, const std::vector<int>& mor) {
    std::vector<std::string> bad;
    if (static_cast<int>(ob.size()) != source->num_objects() ||
        static_cast<int>(mor.size()) != source->num_morphisms()) {
        bad.push_back("object/morphism map sizes do not match the source category");
        return bad;
    }
    for (int m = 0; m < source->num_morphisms(); ++m) {
        if (target->src(mor[m]) != ob[source->src(m)] || target->dst(mor[m]) != ob[source->dst(m)])
            bad.push_back("image of " + quoted(source->morphism_name(m)) + " has wrong endpoints");
    }
    if (!bad.empty()) return bad;
    for (int o = 0; o < source->num_objects(); ++o)
        if (mor[source->identity(o)] != target->identity(ob[o]))
            bad.push_back("identity of " + quoted(source->object_name(o)) + " is not preserved");
    for (int f = 0; f < source->num_morphisms(); ++f) {
        for (int o = 0; o < source->num_objects(); ++o) {
            for (int g : source->hom(source->dst(f), o)) {
                if (mor[source->compose(g, f)] != target->compose(mor[g], mor[f]))
                    bad.push_back("composition of (" + source->morphism_name(g) + ", " +
                                  source->morphism_name(f) + ") is not preserved");
            }
        }
    }
    return bad;
}

FiniteFunctor FiniteFunctor::make(CatPtr source, CatPtr target, std::vector<int> ob,
                                  std::vector<int> mor) {
    auto bad = validate_functor(source, target, ob, mor);
    if (!bad.empty()) throw ValidationError("functor: " + bad.front());
    FiniteFunctor f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.ob_ = std::move(ob);
    f.mor_ = std::move(mor);
    return f;
}

FiniteFunctor FiniteFunctor::make_by_names(
    CatPtr source, CatPtr target, const std::vector<std::pair<std::string, std::string>>& ob,
    const std::vector<std::pair<std::string, std::string>>& mor) {
    std::vector<int> o(source->num_objects(), -1), m(source->num_morphisms(), -1);
    for (const auto& [from, to] : ob) {
        int i = source->object_index(from), j = target->object_index(to);
        if (i < 0 || j < 0) throw ValidationError("functor object map names unknown: " + from + " -> " + to);
        o[i] = j;
    }
    for (const auto& [from, to] : mor) {
        int i = source->morphism_index(from), j = target->morphism_index(to);
        if (i < 0 || j < 0) throw ValidationError("functor morphism map names unknown: " + from + " -> " + to);
        m[i] = j;
    }
    // identities may be omitted; fill them in from the object map
    for (int i = 0; i < source->num_objects(); ++i)
        if (o[i] >= 0 && m[source->identity(i)] < 0) m[source->identity(i)] = target->identity(o[i]);
    for (int i = 0; i < source->num_objects(); ++i)
        if (o[i] < 0) throw ValidationError("functor object map is missing " + quoted(source->object_name(i)));
    for (int i = 0; i < source->num_morphisms(); ++i)
        if (m[i] < 0) throw ValidationError("functor morphism map is missing " + quoted(source->morphism_name(i)));
    return make(std::move(source), std::move(target), std::move(o), std::move(m));
}

FiniteFunctor FiniteFunctor::identity(CatPtr c) {
    std::vector<int> ob(c->num_objects()), mor(c->num_morphisms());
    for (int i = 0; i < c->num_objects(); ++i) ob[i] = i;
    for (int i = 0; i < c->num_morphisms(); ++i) mor[i] = i;
    FiniteFunctor f;
    f.source_ = c;
    f.target_ = std::move(c);
    f.ob_ = std::move(ob);
    f.mor_ = std::move(mor);
    return f;
}

FiniteFunctor FiniteFunctor::constant(CatPtr source, CatPtr target, int target_object) {
    std::vector<int> ob(source->num_objects(), target_object);
    std::vector<int> mor(source->num_morphisms(), target->identity(target_object));
    return make(std::move(source), std::move(target), std::move(ob), std::move(mor));
}

std::string FiniteFunctor::encode() const {
    std::vector<std::string> parts;
    parts.reserve(ob_.size() + mor_.size() + 1);
    parts.push_back("F");
    for (int o : ob_) parts.push_back(target_->object_name(o));
    for (int m : mor_) parts.push_back(target_->morphism_name(m));
    return encode_name(parts);
}

bool functor_equal(const FiniteFunctor& a, const FiniteFunctor& b) {
    return same_category(a.source(), b.source()) && same_category(a.target(), b.target()) &&
           a.ob_map() == b.ob_map() && a.mor_map() == b.mor_map();
}

FiniteFunctor compose(const FiniteFunctor& g, const FiniteFunctor& f) {
    if (!same_category(f.target(), g.source()))
        throw ShapeMismatch("functor composition: middle categories differ");
    std::vector<int> ob(f.source()->num_objects()), mor(f.source()->num_morphisms());
    for (std::size_t i = 0; i < ob.size(); ++i) ob[i] = g.on_ob(f.on_ob(static_cast<int>(i)));
    for (std::size_t i = 0; i < mor.size(); ++i) mor[i] = g.on_mor(f.on_mor(static_cast<int>(i)));
    return FiniteFunctor::make(f.source(), g.target(), std::move(ob), std::move(mor));
}

bool is_isomorphism(const FiniteFunctor& f) {
    const auto& a = f.source();
    const auto& b = f.target();
    if (a->num_objects() != b->num_objects() || a->num_morphisms() != b->num_morphisms())
        return false;
    std::vector<int> oinv(b->num_objects(), -1), minv(b->num_morphisms(), -1);
    for (int o = 0; o < a->num_objects(); ++o) {
        if (oinv[f.on_ob(o)] != -1) return false;
        oinv[f.on_ob(o)] = o;
    }
    for (int m = 0; m < a->num_morphisms(); ++m) {
        if (minv[f.on_mor(m)] != -1) return false;
        minv[f.on_mor(m)] = m;
    }
    // the inverse assignment must itself be a functor
    return validate_functor(b, a, oinv, minv).empty();
}

bool is_equivalence(const FiniteFunctor& f) {
    const auto& a = f.source();
    const auto& b = f.target();
    // fully faithful: bijection on each hom-set
    for (int x = 0; x < a->num_objects(); ++x) {
        for (int y = 0; y < a->num_objects(); ++y) {
            const auto& ha = a->hom(x, y);
            const auto& hb = b->hom(f.on_ob(x), f.on_ob(y));
            if (ha.size() != hb.size()) return false;
            std::set<int> images;
            for (int m : ha) images.insert(f.on_mor(m));
            if (images.size() != ha.size()) return false;
        }
    }
    // essentially surjective
    for (int y = 0; y < b->num_objects(); ++y) {
        bool hit = false;
        for (int x = 0; x < a->num_objects() && !hit; ++x)
            hit = b->objects_isomorphic(f.on_ob(x), y);
        if (!hit) return false;
    }
    return true;
}

namespace {

struct FunctorSearch {
    const FiniteCategory& a;
    const FiniteCategory& b;
    std::int64_t bound;
    std::int64_t steps = 0;
    std::vector<int> ob, mor;
    std::vector<FiniteFunctor> out;
    CatPtr pa, pb;

    void bump() {
        if (++steps > bound)
            throw EnumerationBoundExceeded("functor enumeration exceeded bound of " +
                                           std::to_string(bound) + " steps");
    }

    bool mor_ok(int m, int img) {
        if (b.src(img) != ob[a.src(m)] || b.dst(img) != ob[a.dst(m)]) return false;
        if (a.is_identity(m) && img != b.identity(ob[a.src(m)])) return false;
        // every fully-assigned composition triple involving m must agree
        mor[m] = img;
        bool ok = true;
        for (int g = 0; g < a.num_morphisms() && ok; ++g) {
            if (mor[g] < 0) continue;
            for (int f = 0; f < a.num_morphisms() && ok; ++f) {
                if (mor[f] < 0 || !a.composable(g, f)) continue;
                int c = a.compose(g, f);
                if (mor[c] < 0) continue;
                if (g != m && f != m && c != m) continue;
                if (b.compose(mor[g], mor[f]) != mor[c]) ok = false;
            }
        }
        mor[m] = -1;
        return ok;
    }

    void assign_mor(int m) {
        bump();
        if (m == a.num_morphisms()) {
            out.push_back(FiniteFunctor::make(pa, pb, ob, mor));
            return;
        }
        if (mor[m] >= 0) { // forced earlier (identity fill)
            assign_mor(m + 1);
            return;
        }
        for (int img = 0; img < b.num_morphisms(); ++img) {
            if (!mor_ok(m, img)) continue;
            mor[m] = img;
            assign_mor(m + 1);
            mor[m] = -1;
        }
    }

    bool ob_ok(int o, int img) {
        // a nonempty hom must land in a nonempty hom
        for (int p = 0; p <= o; ++p) {
            if (ob[p] < 0 && p != o) continue;
            int pi = (p == o) ? img : ob[p];
            if (!a.hom(p, o).empty() && b.hom(pi, img).empty()) return false;
            if (!a.hom(o, p).empty() && b.hom(img, pi).empty()) return false;
        }
        return true;
    }

    void assign_ob(int o) {
        bump();
        if (o == a.num_objects()) {
            mor.assign(a.num_morphisms(), -1);
            for (int x = 0; x < a.num_objects(); ++x) mor[a.identity(x)] = b.identity(ob[x]);
            assign_mor(0);
            return;
        }
        for (int img = 0; img < b.num_objects(); ++img) {
            if (!ob_ok(o, img)) continue;
            ob[o] = img;
            assign_ob(o + 1);
        }
        ob[o] = -1;
    }
};

} // namespace

std::vector<FiniteFunctor> enumerate_functors(const CatPtr& a, const CatPtr& b,
                                              std::int64_t bound) {
    FunctorSearch s{*a, *b, bound, 0, {}, {}, {}, a, b};
    if (a->num_objects() == 0) {
        s.out.push_back(FiniteFunctor::make(a, b, {}, {}));
        return s.out;
    }
    if (b->num_objects() == 0) return {};
    s.ob.assign(a->num_objects(), -1);
    s.assign_ob(0);
    return s.out;
}

// ---------------------------------------------------------------------------
// natural transformations
// ---------------------------------------------------------------------------

NaturalTransformation NaturalTransformation::make(FiniteFunctor f, FiniteFunctor g,
                                                  std::vector<int> comp) {
    NaturalTransformation t;
    t.source_functor = std::move(f);
    t.target_functor = std::move(g);
    t.comp = std::move(comp);
    auto bad = naturality_violations(t);
    if (!bad.empty()) throw ValidationError("natural transformation: " + bad.front());
    return t;
}

NaturalTransformation NaturalTransformation::identity(const FiniteFunctor& f) {
    NaturalTransformation t;
    t.source_functor = f;
    t.target_functor = f;
    t.comp.resize(f.source()->num_objects());
    for (int o = 0; o < f.source()->num_objects(); ++o)
        t.comp[o] = f.target()->identity(f.on_ob(o));
    return t;
}

std::string NaturalTransformation::encode() const {
    std::vector<std::string> parts;
    parts.push_back("NT");
    const auto& b = source_functor.target();
    for (int c : comp) parts.push_back(b->morphism_name(c));
    return encode_name(parts);
}

bool NaturalTransformation::is_identity_cells() const {
    const auto& b = source_functor.target();
    for (int c : comp)
        if (!b->is_identity(c)) return false;
    return true;
}

std::vector<std::string> naturality_violations(const NaturalTransformation& alpha) {
    const auto& f = alpha.source_functor;
    const auto& g = alpha.target_functor;
    if (!same_category(f.source(), g.source()) || !same_category(f.target(), g.target()))
        throw ShapeMismatch("natural transformation between non-parallel functors");
    const auto& a = f.source();
    const auto& b = f.target();
    std::vector<std::string> bad;
    if (static_cast<int>(alpha.comp.size()) != a->num_objects()) {
        bad.push_back("component count does not match the source category");
        return bad;
    }
    for (int o = 0; o < a->num_objects(); ++o) {
        int c = alpha.comp[o];
        if (b->src(c) != f.on_ob(o) || b->dst(c) != g.on_ob(o))
            bad.push_back("component at " + quoted(a->object_name(o)) + " has wrong endpoints");
    }
    if (!bad.empty()) return bad;
    for (int m = 0; m < a->num_morphisms(); ++m) {
        int x = a->src(m), y = a->dst(m);
        if (b->compose(alpha.comp[y], f.on_mor(m)) != b->compose(g.on_mor(m), alpha.comp[x]))
            bad.push_back("naturality square fails at " + quoted(a->morphism_name(m)));
    }
    return bad;
}

bool check_naturality(const NaturalTransformation& alpha) {
    return naturality_violations(alpha).empty();
}

bool transformation_equal(const NaturalTransformation& a, const NaturalTransformation& b) {
    return functor_equal(a.source_functor, b.source_functor) &&
           functor_equal(a.target_functor, b.target_functor) && a.comp == b.comp;
}

NaturalTransformation vcompose(const NaturalTransformation& beta, const NaturalTransformation& alpha) {
    if (!functor_equal(beta.source_functor, alpha.target_functor))
        throw ShapeMismatch("vertical composition: middle functors differ");
    std::vector<int> comp(alpha.comp.size());
    const auto& b = alpha.source_functor.target();
    for (std::size_t o = 0; o < comp.size(); ++o) comp[o] = b->compose(beta.comp[o], alpha.comp[o]);
    NaturalTransformation t;
    t.source_functor = alpha.source_functor;
    t.target_functor = beta.target_functor;
    t.comp = std::move(comp);
    return t;
}

NaturalTransformation whisker_left(const FiniteFunctor& h, const NaturalTransformation& alpha) {
    if (!same_category(h.source(), alpha.source_functor.target()))
        throw ShapeMismatch("left whisker: categories differ");
    std::vector<int> comp(alpha.comp.size());
    for (std::size_t o = 0; o < comp.size(); ++o) comp[o] = h.on_mor(alpha.comp[o]);
    NaturalTransformation t;
    t.source_functor = compose(h, alpha.source_functor);
    t.target_functor = compose(h, alpha.target_functor);
    t.comp = std::move(comp);
    return t;
}

NaturalTransformation whisker_right(const NaturalTransformation& alpha, const FiniteFunctor& h) {
    if (!same_category(h.target(), alpha.source_functor.source()))
        throw ShapeMismatch("right whisker: categories differ");
    std::vector<int> comp(h.source()->num_objects());
    for (int o = 0; o < h.source()->num_objects(); ++o) comp[o] = alpha.comp[h.on_ob(o)];
    NaturalTransformation t;
    t.source_functor = compose(alpha.source_functor, h);
    t.target_functor = compose(alpha.target_functor, h);
    t.comp = std::move(comp);
    return t;
}

NaturalTransformation hcompose(const NaturalTransformation& beta, const NaturalTransformation& alpha) {
    // beta: H => H' (B -> C), alpha: F => F' (A -> B)
    return vcompose(whisker_right(beta, alpha.target_functor),
                    whisker_left(beta.source_functor, alpha));
}

NaturalTransformation invert(const NaturalTransformation& alpha) {
    const auto& b = alpha.source_functor.target();
    std::vector<int> comp(alpha.comp.size());
    for (std::size_t o = 0; o < comp.size(); ++o) {
        int inv = b->inverse(alpha.comp[o]);
        if (inv < 0) throw ValidationError("invert: component is not invertible");
        comp[o] = inv;
    }
    NaturalTransformation t;
    t.source_functor = alpha.target_functor;
    t.target_functor = alpha.source_functor;
    t.comp = std::move(comp);
    return t;
}

std::vector<NaturalTransformation> enumerate_transformations(const FiniteFunctor& f,
                                                             const FiniteFunctor& g,
                                                             std::int64_t bound) {
    if (!same_category(f.source(), g.source()) || !same_category(f.target(), g.target()))
        throw ShapeMismatch("enumerate_transformations: functors are not parallel");
    const auto& a = f.source();
    const auto& b = f.target();
    std::vector<NaturalTransformation> out;
    std::vector<int> comp(a->num_objects(), -1);
    std::int64_t steps = 0;
    auto natural_so_far = [&](int o) {
        for (int m = 0; m < a->num_morphisms(); ++m) {
            int x = a->src(m), y = a->dst(m);
            if (comp[x] < 0 || comp[y] < 0) continue;
            if (x != o && y != o) continue;
            if (b->compose(comp[y], f.on_mor(m)) != b->compose(g.on_mor(m), comp[x])) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int o) -> void {
        if (++steps > bound)
            throw EnumerationBoundExceeded("transformation enumeration exceeded bound");
        if (o == a->num_objects()) {
            NaturalTransformation t;
            t.source_functor = f;
            t.target_functor = g;
            t.comp = comp;
            out.push_back(std::move(t));
            return;
        }
        for (int c : b->hom(f.on_ob(o), g.on_ob(o))) {
            comp[o] = c;
            if (natural_so_far(o)) self(self, o + 1);
            comp[o] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// pullbacks, products, functor categories
// ---------------------------------------------------------------------------

PullbackCategory pullback_category(const FiniteFunctor& f, const FiniteFunctor& g) {
    if (!same_category(f.target(), g.target()))
        throw ShapeMismatch("pullback_category: functors do not share a target");
    const auto& a = f.source();
    const auto& b = g.source();
    CategoryData data;
    data.label = "pb(" + a->label() + "," + b->label() + ")";
    std::vector<std::pair<int, int>> obs, mors;
    for (int x = 0; x < a->num_objects(); ++x)
        for (int y = 0; y < b->num_objects(); ++y)
            if (f.on_ob(x) == g.on_ob(y)) {
                obs.emplace_back(x, y);
                data.objects.push_back(encode_name({a->object_name(x), b->object_name(y)}));
            }
    for (int m = 0; m < a->num_morphisms(); ++m)
        for (int n = 0; n < b->num_morphisms(); ++n)
            if (f.on_mor(m) == g.on_mor(n)) {
                mors.emplace_back(m, n);
                data.morphisms.push_back(
                    {encode_name({a->morphism_name(m), b->morphism_name(n)}),
                     encode_name({a->object_name(a->src(m)), b->object_name(b->src(n))}),
                     encode_name({a->object_name(a->dst(m)), b->object_name(b->dst(n))})});
            }
    for (auto [x, y] : obs)
        data.identities.emplace_back(
            encode_name({a->object_name(x), b->object_name(y)}),
            encode_name({a->morphism_name(a->identity(x)), b->morphism_name(b->identity(y))}));
    for (auto [m, n] : mors)
        for (auto [p, q] : mors)
            if (a->composable(m, p) && b->composable(n, q))
                data.compose.push_back(
                    {encode_name({a->morphism_name(m), b->morphism_name(n)}),
                     encode_name({a->morphism_name(p), b->morphism_name(q)}),
                     encode_name({a->morphism_name(a->compose(m, p)), b->morphism_name(b->compose(n, q))})});
    auto cat = FiniteCategory::make(std::move(data));
    std::vector<int> p1o(cat->num_objects()), p1m(cat->num_morphisms());
    std::vector<int> p2o(cat->num_objects()), p2m(cat->num_morphisms());
    for (std::size_t i = 0; i < obs.size(); ++i) {
        int idx = cat->object_index(encode_name({a->object_name(obs[i].first), b->object_name(obs[i].second)}));
        p1o[idx] = obs[i].first;
        p2o[idx] = obs[i].second;
    }
    for (std::size_t i = 0; i < mors.size(); ++i) {
        int idx = cat->morphism_index(
            encode_name({a->morphism_name(mors[i].first), b->morphism_name(mors[i].second)}));
        p1m[idx] = mors[i].first;
        p2m[idx] = mors[i].second;
    }
    PullbackCategory out;
    out.cat = cat;
    out.proj1 = FiniteFunctor::make(cat, a, std::move(p1o), std::move(p1m));
    out.proj2 = FiniteFunctor::make(cat, b, std::move(p2o), std::move(p2m));
    return out;
}

ProductCategory product_category(const CatPtr& a, const CatPtr& b) {
    // product = pullback over the terminal category, built directly
    CategoryData data;
    data.label = "(" + a->label() + "x" + b->label() + ")";
    for (int x = 0; x < a->num_objects(); ++x)
        for (int y = 0; y < b->num_objects(); ++y)
            data.objects.push_back(encode_name({a->object_name(x), b->object_name(y)}));
    for (int m = 0; m < a->num_morphisms(); ++m)
        for (int n = 0; n < b->num_morphisms(); ++n)
            data.morphisms.push_back(
                {encode_name({a->morphism_name(m), b->morphism_name(n)}),
                 encode_name({a->object_name(a->src(m)), b->object_name(b->src(n))}),
                 encode_name({a->object_name(a->dst(m)), b->object_name(b->dst(n))})});
    for (int x = 0; x < a->num_objects(); ++x)
        for (int y = 0; y < b->num_objects(); ++y)
            data.identities.emplace_back(
                encode_name({a->object_name(x), b->object_name(y)}),
                encode_name({a->morphism_name(a->identity(x)), b->morphism_name(b->identity(y))}));
    for (int m = 0; m < a->num_morphisms(); ++m)
        for (int n = 0; n < b->num_morphisms(); ++n)
            for (int p = 0; p < a->num_morphisms(); ++p)
                for (int q = 0; q < b->num_morphisms(); ++q)
                    if (a->composable(m, p) && b->composable(n, q))
                        data.compose.push_back(
                            {encode_name({a->morphism_name(m), b->morphism_name(n)}),
                             encode_name({a->morphism_name(p), b->morphism_name(q)}),
                             encode_name({a->morphism_name(a->compose(m, p)),
                                          b->morphism_name(b->compose(n, q))})});
    ProductCategory out;
    out.cat = FiniteCategory::make(std::move(data));
    out.ob_count_b = b->num_objects();
    out.mor_count_b = b->num_morphisms();
    out.ob_of_pair.assign(static_cast<std::size_t>(a->num_objects()) * b->num_objects(), -1);
    out.mor_of_pair.assign(static_cast<std::size_t>(a->num_morphisms()) * b->num_morphisms(), -1);
    out.pair_of_ob.resize(out.cat->num_objects());
    out.pair_of_mor.resize(out.cat->num_morphisms());
    std::vector<int> p1o(out.cat->num_objects()), p2o(out.cat->num_objects());
    std::vector<int> p1m(out.cat->num_morphisms()), p2m(out.cat->num_morphisms());
    for (int x = 0; x < a->num_objects(); ++x)
        for (int y = 0; y < b->num_objects(); ++y) {
            int idx = out.cat->object_index(encode_name({a->object_name(x), b->object_name(y)}));
            out.ob_of_pair[static_cast<std::size_t>(x) * b->num_objects() + y] = idx;
            out.pair_of_ob[idx] = {x, y};
            p1o[idx] = x;
            p2o[idx] = y;
        }
    for (int m = 0; m < a->num_morphisms(); ++m)
        for (int n = 0; n < b->num_morphisms(); ++n) {
            int idx = out.cat->morphism_index(encode_name({a->morphism_name(m), b->morphism_name(n)}));
            out.mor_of_pair[static_cast<std::size_t>(m) * b->num_morphisms() + n] = idx;
            out.pair_of_mor[idx] = {m, n};
            p1m[idx] = m;
            p2m[idx] = n;
        }
    out.proj1 = FiniteFunctor::make(out.cat, a, std::move(p1o), std::move(p1m));
    out.proj2 = FiniteFunctor::make(out.cat, b, std::move(p2o), std::move(p2m));
    return out;
}

FiniteFunctor pair_into_product(const ProductCategory& prod, const FiniteFunctor& f,
                                const FiniteFunctor& g) {
    if (!same_category(f.source(), g.source()))
        throw ShapeMismatch("pair_into_product: sources differ");
    std::vector<int> ob(f.source()->num_objects()), mor(f.source()->num_morphisms());
    for (std::size_t o = 0; o < ob.size(); ++o)
        ob[o] = prod.pair_ob(f.on_ob(static_cast<int>(o)), g.on_ob(static_cast<int>(o)));
    for (std::size_t m = 0; m < mor.size(); ++m)
        mor[m] = prod.pair_mor(f.on_mor(static_cast<int>(m)), g.on_mor(static_cast<int>(m)));
    return FiniteFunctor::make(f.source(), prod.cat, std::move(ob), std::move(mor));
}

int FunctorCategory::ob_index(const FiniteFunctor& f) const {
    return cat->object_index(f.encode());
}

int FunctorCategory::mor_index(const NaturalTransformation& t) const {
    return cat->morphism_index(
        encode_name({t.source_functor.encode(), t.target_functor.encode(), t.encode()}));
}

FunctorCategory functor_category(const CatPtr& a, const CatPtr& b, std::int64_t bound) {
    FunctorCategory out;
    auto functors = enumerate_functors(a, b, bound);
    CategoryData data;
    data.label = "[" + a->label() + "," + b->label() + "]";
    for (const auto& f : functors) data.objects.push_back(f.encode());
    std::int64_t count = 0;
    std::vector<NaturalTransformation> all;
    for (const auto& f : functors) {
        for (const auto& g : functors) {
            for (auto& t : enumerate_transformations(f, g, bound)) {
                if (++count > bound)
                    throw EnumerationBoundExceeded("functor category exceeded bound");
                data.morphisms.push_back({encode_name({f.encode(), g.encode(), t.encode()}),
                                          f.encode(), g.encode()});
                all.push_back(std::move(t));
            }
        }
    }
    for (const auto& f : functors)
        data.identities.emplace_back(
            f.encode(), encode_name({f.encode(), f.encode(),
                                     NaturalTransformation::identity(f).encode()}));
    auto name_of = [&](const NaturalTransformation& t) {
        return encode_name({t.source_functor.encode(), t.target_functor.encode(), t.encode()});
    };
    for (const auto& t : all)
        for (const auto& s : all)
            if (functor_equal(s.target_functor, t.source_functor))
                data.compose.push_back({name_of(t), name_of(s), name_of(vcompose(t, s))});
    out.cat = FiniteCategory::make(std::move(data));
    out.obs.resize(out.cat->num_objects());
    out.mors.resize(out.cat->num_morphisms());
    for (auto& f : functors) out.obs[out.cat->object_index(f.encode())] = f;
    for (auto& t : all) out.mors[out.cat->morphism_index(name_of(t))] = t;
    return out;
}

FiniteFunctor postcompose_functor(const FunctorCategory& from, const FunctorCategory& to,
                                  const FiniteFunctor& g) {
    std::vector<int> ob(from.cat->num_objects()), mor(from.cat->num_morphisms());
    for (int i = 0; i < from.cat->num_objects(); ++i) ob[i] = to.ob_index(compose(g, from.obs[i]));
    for (int i = 0; i < from.cat->num_morphisms(); ++i)
        mor[i] = to.mor_index(whisker_left(g, from.mors[i]));
    return FiniteFunctor::make(from.cat, to.cat, std::move(ob), std::move(mor));
}

NaturalTransformation postwhisker(const FunctorCategory& from, const FunctorCategory& to,
                                  const NaturalTransformation& g) {
    NaturalTransformation t;
    t.source_functor = postcompose_functor(from, to, g.source_functor);
    t.target_functor = postcompose_functor(from, to, g.target_functor);
    t.comp.resize(from.cat->num_objects());
    for (int i = 0; i < from.cat->num_objects(); ++i)
        t.comp[i] = to.mor_index(whisker_right(g, from.obs[i]));
    return t;
}

// ---------------------------------------------------------------------------
// isomorphism search and canonical renaming
// ---------------------------------------------------------------------------

namespace {

struct IsoSearch {
    const FiniteCategory& a;
    const FiniteCategory& b;
    std::vector<int> omap, mmap;
    CatPtr pa, pb;

    bool check_mor(int m, int img) {
        if (b.src(img) != omap[a.src(m)] || b.dst(img) != omap[a.dst(m)]) return false;
        if (a.is_identity(m) != b.is_identity(img)) return false;
        mmap[m] = img;
        bool ok = true;
        for (int g = 0; g < a.num_morphisms() && ok; ++g) {
            if (mmap[g] < 0) continue;
            for (int f = 0; f < a.num_morphisms() && ok; ++f) {
                if (mmap[f] < 0 || !a.composable(g, f)) continue;
                int c = a.compose(g, f);
                if (mmap[c] < 0) continue;
                if (g != m && f != m && c != m) continue;
                if (b.compose(mmap[g], mmap[f]) != mmap[c]) ok = false;
            }
        }
        mmap[m] = -1;
        return ok;
    }
    bool assign_mors(int m) {
        while (m < a.num_morphisms() && mmap[m] >= 0) ++m;
        if (m == a.num_morphisms()) return true;
        std::vector<bool> used(b.num_morphisms(), false);
        for (int x = 0; x < a.num_morphisms(); ++x)
            if (mmap[x] >= 0) used[mmap[x]] = true;
        for (int img : b.hom(omap[a.src(m)], omap[a.dst(m)])) {
            if (used[img] || !check_mor(m, img)) continue;
            mmap[m] = img;
            if (assign_mors(m + 1)) return true;
            mmap[m] = -1;
        }
        return false;
    }
    bool assign_obs(int o) {
        if (o == a.num_objects()) {
            mmap.assign(a.num_morphisms(), -1);
            for (int x = 0; x < a.num_objects(); ++x) mmap[a.identity(x)] = b.identity(omap[x]);
            // hom sizes must match before trying morphisms
            for (int x = 0; x < a.num_objects(); ++x)
                for (int y = 0; y < a.num_objects(); ++y)
                    if (a.hom(x, y).size() != b.hom(omap[x], omap[y]).size()) return false;
            return assign_mors(0);
        }
        std::vector<bool> used(b.num_objects(), false);
        for (int x = 0; x < o; ++x) used[omap[x]] = true;
        for (int img = 0; img < b.num_objects(); ++img) {
            if (used[img]) continue;
            if (a.hom(o, o).size() != b.hom(img, img).size()) continue;
            omap[o] = img;
            if (assign_obs(o + 1)) return true;
            omap[o] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<FiniteFunctor> find_isomorphism(const CatPtr& a, const CatPtr& b) {
    if (a->num_objects() != b->num_objects() || a->num_morphisms() != b->num_morphisms())
        return std::nullopt;
    IsoSearch s{*a, *b, {}, {}, a, b};
    s.omap.assign(a->num_objects(), -1);
    if (a->num_objects() == 0) return FiniteFunctor::make(a, b, {}, {});
    if (!s.assign_obs(0)) return std::nullopt;
    return FiniteFunctor::make(a, b, s.omap, s.mmap);
}

Subcategory full_subcategory(const CatPtr& c, const std::vector<int>& objects) {
    std::vector<bool> keep(c->num_objects(), false);
    for (int o : objects) keep[o] = true;
    CategoryData data;
    data.label = c->label() + "|full";
    for (int o = 0; o < c->num_objects(); ++o)
        if (keep[o]) data.objects.push_back(c->object_name(o));
    for (int m = 0; m < c->num_morphisms(); ++m)
        if (keep[c->src(m)] && keep[c->dst(m)])
            data.morphisms.push_back(c->morphism(m));
    for (int o = 0; o < c->num_objects(); ++o)
        if (keep[o])
            data.identities.emplace_back(c->object_name(o), c->morphism_name(c->identity(o)));
    for (int g = 0; g < c->num_morphisms(); ++g) {
        if (!keep[c->src(g)] || !keep[c->dst(g)]) continue;
        for (int f = 0; f < c->num_morphisms(); ++f) {
            if (!keep[c->src(f)] || !keep[c->dst(f)]) continue;
            if (c->composable(g, f))
                data.compose.push_back({c->morphism_name(g), c->morphism_name(f),
                                        c->morphism_name(c->compose(g, f))});
        }
    }
    Subcategory out;
    out.cat = FiniteCategory::make(std::move(data));
    std::vector<int> ob(out.cat->num_objects()), mor(out.cat->num_morphisms());
    for (int o = 0; o < out.cat->num_objects(); ++o)
        ob[o] = c->object_index(out.cat->object_name(o));
    for (int m = 0; m < out.cat->num_morphisms(); ++m)
        mor[m] = c->morphism_index(out.cat->morphism_name(m));
    out.inclusion = FiniteFunctor::make(out.cat, c, std::move(ob), std::move(mor));
    return out;
}

std::pair<CatPtr, FiniteFunctor> canonical_rename(const CatPtr& c, const std::string& prefix) {
    CategoryData data;
    data.label = c->label();
    for (int o = 0; o < c->num_objects(); ++o)
        data.objects.push_back(prefix + "o" + pad_index(o, c->num_objects()));
    auto oname = [&](int o) { return prefix + "o" + pad_index(o, c->num_objects()); };
    auto mname = [&](int m) { return prefix + "m" + pad_index(m, c->num_morphisms()); };
    for (int m = 0; m < c->num_morphisms(); ++m)
        data.morphisms.push_back({mname(m), oname(c->src(m)), oname(c->dst(m))});
    for (int o = 0; o < c->num_objects(); ++o)
        data.identities.emplace_back(oname(o), mname(c->identity(o)));
    for (int g = 0; g < c->num_morphisms(); ++g)
        for (int f = 0; f < c->num_morphisms(); ++f)
            if (c->composable(g, f))
                data.compose.push_back({mname(g), mname(f), mname(c->compose(g, f))});
    auto renamed = FiniteCategory::make(std::move(data));
    std::vector<int> ob(c->num_objects()), mor(c->num_morphisms());
    for (int o = 0; o < c->num_objects(); ++o) ob[o] = renamed->object_index(oname(o));
    for (int m = 0; m < c->num_morphisms(); ++m) mor[m] = renamed->morphism_index(mname(m));
    return {renamed, FiniteFunctor::make(c, renamed, std::move(ob), std::move(mor))};
}

// ---------------------------------------------------------------------------
// standard categories
// ---------------------------------------------------------------------------

namespace cats {

CatPtr empty() {
    static CatPtr c = FiniteCategory::make({"empty", {}, {}, {}, {}});
    return c;
}

CatPtr terminal() {
    static CatPtr c = FiniteCategory::make(
        {"terminal", {"*"}, {{"id*", "*", "*"}}, {{"*", "id*"}}, {{"id*", "id*", "id*"}}});
    return c;
}

CatPtr discrete(int n) {
    CategoryData d;
    d.label = "discrete" + std::to_string(n);
    for (int i = 0; i < n; ++i) {
        std::string o = "d" + std::to_string(i);
        d.objects.push_back(o);
        d.morphisms.push_back({"id_" + o, o, o});
        d.identities.emplace_back(o, "id_" + o);
        d.compose.push_back({"id_" + o, "id_" + o, "id_" + o});
    }
    return FiniteCategory::make(std::move(d));
}

CatPtr walking_arrow() {
    static CatPtr c = FiniteCategory::make({"arrow",
                                            {"0", "1"},
                                            {{"a", "0", "1"}, {"id0", "0", "0"}, {"id1", "1", "1"}},
                                            {{"0", "id0"}, {"1", "id1"}},
                                            {{"id0", "id0", "id0"},
                                             {"id1", "id1", "id1"},
                                             {"a", "id0", "a"},
                                             {"id1", "a", "a"}}});
    return c;
}

CatPtr chain3() {
    static CatPtr c = FiniteCategory::make(
        {"chain3",
         {"0", "1", "2"},
         {{"a", "0", "1"}, {"b", "1", "2"}, {"ba", "0", "2"},
          {"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"}},
         {{"0", "id0"}, {"1", "id1"}, {"2", "id2"}},
         {{"id0", "id0", "id0"}, {"id1", "id1", "id1"}, {"id2", "id2", "id2"},
          {"a", "id0", "a"}, {"id1", "a", "a"},
          {"b", "id1", "b"}, {"id2", "b", "b"},
          {"ba", "id0", "ba"}, {"id2", "ba", "ba"},
          {"b", "a", "ba"}}});
    return c;
}

CatPtr parallel_pair() {
    static CatPtr c = FiniteCategory::make(
        {"parallel",
         {"0", "1"},
         {{"u", "0", "1"}, {"v", "0", "1"}, {"id0", "0", "0"}, {"id1", "1", "1"}},
         {{"0", "id0"}, {"1", "id1"}},
         {{"id0", "id0", "id0"}, {"id1", "id1", "id1"},
          {"u", "id0", "u"}, {"id1", "u", "u"},
          {"v", "id0", "v"}, {"id1", "v", "v"}}});
    return c;
}

CatPtr walking_iso() {
    static CatPtr c = FiniteCategory::make(
        {"iso",
         {"0", "1"},
         {{"f", "0", "1"}, {"g", "1", "0"}, {"id0", "0", "0"}, {"id1", "1", "1"}},
         {{"0", "id0"}, {"1", "id1"}},
         {{"id0", "id0", "id0"}, {"id1", "id1", "id1"},
          {"f", "id0", "f"}, {"id1", "f", "f"},
          {"g", "id1", "g"}, {"id0", "g", "g"},
          {"g", "f", "id0"}, {"f", "g", "id1"}}});
    return c;
}

CatPtr walking_idempotent() {
    static CatPtr c = FiniteCategory::make({"idem",
                                            {"*"},
                                            {{"e", "*", "*"}, {"id*", "*", "*"}},
                                            {{"*", "id*"}},
                                            {{"id*", "id*", "id*"},
                                             {"e", "id*", "e"},
                                             {"id*", "e", "e"},
                                             {"e", "e", "e"}}});
    return c;
}

CatPtr span() {
    static CatPtr c = FiniteCategory::make(
        {"span",
         {"0", "1", "2"},
         {{"l", "0", "1"}, {"r", "0", "2"},
          {"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"}},
         {{"0", "id0"}, {"1", "id1"}, {"2", "id2"}},
         {{"id0", "id0", "id0"}, {"id1", "id1", "id1"}, {"id2", "id2", "id2"},
          {"l", "id0", "l"}, {"id1", "l", "l"},
          {"r", "id0", "r"}, {"id2", "r", "r"}}});
    return c;
}

CatPtr cospan() {
    static CatPtr c = FiniteCategory::make(
        {"cospan",
         {"0", "1", "2"},
         {{"l", "0", "2"}, {"r", "1", "2"},
          {"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"}},
         {{"0", "id0"}, {"1", "id1"}, {"2", "id2"}},
         {{"id0", "id0", "id0"}, {"id1", "id1", "id1"}, {"id2", "id2", "id2"},
          {"l", "id0", "l"}, {"id2", "l", "l"},
          {"r", "id1", "r"}, {"id2", "r", "r"}}});
    return c;
}

CatPtr poset2() { return walking_arrow(); }

CatPtr chaotic(int n) {
    CategoryData d;
    d.label = "chaotic" + std::to_string(n);
    auto on = [](int i) { return "c" + std::to_string(i); };
    auto mn = [&](int i, int j) { return "u" + std::to_string(i) + std::to_string(j); };
    for (int i = 0; i < n; ++i) d.objects.push_back(on(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.morphisms.push_back({mn(i, j), on(i), on(j)});
    for (int i = 0; i < n; ++i) d.identities.emplace_back(on(i), mn(i, i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                d.compose.push_back({mn(j, k), mn(i, j), mn(i, k)});
    return FiniteCategory::make(std::move(d));
}

std::vector<CatPtr> test_battery(int max_objects) {
    std::vector<CatPtr> out;
    out.push_back(terminal());
    if (max_objects >= 2) {
        out.push_back(discrete(2));
        out.push_back(walking_arrow());
        out.push_back(parallel_pair());
        out.push_back(walking_idempotent());
        out.push_back(walking_iso());
    }
    if (max_objects >= 3) {
        out.push_back(chain3());
        out.push_back(span());
        out.push_back(cospan());
    }
    return out;
}

CatPtr random_category(Rng& rng, int max_obj, int max_extra_mor) {
    // Free category on a random DAG, so the table is valid by construction.
    int n = 1 + rng.pick(max_obj);
    std::vector<std::array<int, 2>> edges;
    int n_edges = rng.pick(max_extra_mor + 1);
    for (int e = 0; e < n_edges && n >= 2; ++e) {
        int i = rng.pick(n - 1);
        int j = i + 1 + rng.pick(n - i - 1);
        edges.push_back({i, j});
    }
    // enumerate all paths i -> j (finitely many: DAG)
    CategoryData d;
    d.label = "rand";
    auto on = [](int i) { return "r" + std::to_string(i); };
    for (int i = 0; i < n; ++i) d.objects.push_back(on(i));
    struct Path {
        int src, dst;
        std::vector<int> edges;
        std::string name;
    };
    std::vector<Path> paths;
    for (int i = 0; i < n; ++i) paths.push_back({i, i, {}, "id_" + on(i)});
    std::size_t head = 0;
    while (head < paths.size()) {
        Path p = paths[head++];
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (edges[e][0] != p.dst) continue;
            Path q = p;
            q.dst = edges[e][1];
            q.edges.push_back(static_cast<int>(e));
            q.name = p.edges.empty() ? "e" + std::to_string(e) : p.name + ".e" + std::to_string(e);
            paths.push_back(q);
        }
    }
    for (const auto& p : paths) {
        if (p.edges.empty()) {
            d.morphisms.push_back({p.name, on(p.src), on(p.src)});
            d.identities.emplace_back(on(p.src), p.name);
        } else {
            d.morphisms.push_back({p.name, on(p.src), on(p.dst)});
        }
    }
    auto path_name = [&](const Path& a, const Path& b) {
        // composite of b-then-a (a after b)
        Path c;
        c.src = b.src;
        c.dst = a.dst;
        c.edges = b.edges;
        c.edges.insert(c.edges.end(), a.edges.begin(), a.edges.end());
        if (c.edges.empty()) return "id_" + on(c.src);
        std::string nm;
        for (std::size_t i = 0; i < c.edges.size(); ++i)
            nm += (i ? ".e" : "e") + std::to_string(c.edges[i]);
        return nm;
    };
    for (const auto& g : paths)
        for (const auto& f : paths)
            if (f.dst == g.src) d.compose.push_back({g.name, f.name, path_name(g, f)});
    return FiniteCategory::make(std::move(d));
}

} // namespace cats

} // namespace enhcat
