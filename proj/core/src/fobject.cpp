#include "enhcat/fobject.hpp"

#include <algorithm>

namespace enhcat {

std::vector<std::string> validate_fobject(const CatPtr& tight, const CatPtr& loose,
                                          const FiniteFunctor& embed) {
    std::vector<std::string> bad;
    if (!same_category(embed.source(), tight) || !same_category(embed.target(), loose)) {
        bad.push_back("embedding endpoints do not match tight/loose parts");
        return bad;
    }
    std::vector<int> seen(loose->num_objects(), -1);
    for (int o = 0; o < tight->num_objects(); ++o) {
        if (seen[embed.on_ob(o)] != -1)
            bad.push_back("embedding identifies objects " + quoted(tight->object_name(seen[embed.on_ob(o)])) +
                          " and " + quoted(tight->object_name(o)));
        seen[embed.on_ob(o)] = o;
    }
    for (int a = 0; a < tight->num_objects(); ++a) {
        for (int b = 0; b < tight->num_objects(); ++b) {
            const auto& ht = tight->hom(a, b);
            const auto& hl = loose->hom(embed.on_ob(a), embed.on_ob(b));
            if (ht.size() != hl.size()) {
                bad.push_back("embedding is not full on hom(" + tight->object_name(a) + ", " +
                              tight->object_name(b) + ")");
                continue;
            }
            std::vector<int> images;
            for (int m : ht) images.push_back(embed.on_mor(m));
            std::sort(images.begin(), images.end());
            if (std::unique(images.begin(), images.end()) != images.end() || images != hl)
                bad.push_back("embedding is not faithful-and-full on hom(" + tight->object_name(a) +
                              ", " + tight->object_name(b) + ")");
        }
    }
    return bad;
}

FObject FObject::make(CatPtr tight, CatPtr loose, FiniteFunctor embed) {
    auto bad = validate_fobject(tight, loose, embed);
    if (!bad.empty()) throw ValidationError("full embedding: " + bad.front());
    FObject f;
    f.tight = std::move(tight);
    f.loose = std::move(loose);
    f.embed = std::move(embed);
    f.ob_preimage.assign(f.loose->num_objects(), -1);
    f.mor_preimage.assign(f.loose->num_morphisms(), -1);
    for (int o = 0; o < f.tight->num_objects(); ++o) f.ob_preimage[f.embed.on_ob(o)] = o;
    for (int m = 0; m < f.tight->num_morphisms(); ++m) f.mor_preimage[f.embed.on_mor(m)] = m;
    return f;
}

FObject FObject::chordate(CatPtr c) {
    return make(c, c, FiniteFunctor::identity(c));
}

bool FObject::is_chordate() const {
    return tight->num_objects() == loose->num_objects() &&
           tight->num_morphisms() == loose->num_morphisms();
}

bool fobject_equal(const FObject& a, const FObject& b) {
    return same_category(a.tight, b.tight) && same_category(a.loose, b.loose) &&
           a.embed.ob_map() == b.embed.ob_map() && a.embed.mor_map() == b.embed.mor_map();
}

FObject terminal_fobject() { return FObject::chordate(cats::terminal()); }
FObject empty_fobject() { return FObject::chordate(cats::empty()); }

std::vector<std::string> validate_fmap(const FObject& src, const FObject& dst,
                                       const FiniteFunctor& ft, const FiniteFunctor& fl) {
    std::vector<std::string> bad;
    if (!same_category(ft.source(), src.tight) || !same_category(ft.target(), dst.tight) ||
        !same_category(fl.source(), src.loose) || !same_category(fl.target(), dst.loose)) {
        bad.push_back("component endpoints do not match");
        return bad;
    }
    for (int o = 0; o < src.tight->num_objects(); ++o)
        if (fl.on_ob(src.embed.on_ob(o)) != dst.embed.on_ob(ft.on_ob(o)))
            bad.push_back("square does not commute on object " + quoted(src.tight->object_name(o)));
    for (int m = 0; m < src.tight->num_morphisms(); ++m)
        if (fl.on_mor(src.embed.on_mor(m)) != dst.embed.on_mor(ft.on_mor(m)))
            bad.push_back("square does not commute on morphism " + quoted(src.tight->morphism_name(m)));
    return bad;
}

FMap FMap::make(FObject src, FObject dst, FiniteFunctor ft, FiniteFunctor fl) {
    auto bad = validate_fmap(src, dst, ft, fl);
    if (!bad.empty()) throw ValidationError("square of embeddings: " + bad.front());
    FMap f;
    f.src = std::move(src);
    f.dst = std::move(dst);
    f.ft = std::move(ft);
    f.fl = std::move(fl);
    return f;
}

FMap FMap::identity(const FObject& a) {
    return make(a, a, FiniteFunctor::identity(a.tight), FiniteFunctor::identity(a.loose));
}

bool fmap_equal(const FMap& a, const FMap& b) {
    return fobject_equal(a.src, b.src) && fobject_equal(a.dst, b.dst) &&
           functor_equal(a.ft, b.ft) && functor_equal(a.fl, b.fl);
}

FMap fmap_compose(const FMap& g, const FMap& f) {
    if (!fobject_equal(f.dst, g.src)) throw ShapeMismatch("square composition: middle objects differ");
    return FMap::make(f.src, g.dst, compose(g.ft, f.ft), compose(g.fl, f.fl));
}

bool fmap_is_iso(const FMap& f) { return is_isomorphism(f.ft) && is_isomorphism(f.fl); }

bool fmap_is_equivalence(const FMap& f) { return is_equivalence(f.ft) && is_equivalence(f.fl); }

ProductFObject product_fobject(const FObject& a, const FObject& b) {
    ProductFObject out;
    out.tight_prod = product_category(a.tight, b.tight);
    out.loose_prod = product_category(a.loose, b.loose);
    // induced embedding on pairs
    std::vector<int> ob(out.tight_prod.cat->num_objects());
    std::vector<int> mor(out.tight_prod.cat->num_morphisms());
    for (int o = 0; o < out.tight_prod.cat->num_objects(); ++o) {
        auto [x, y] = out.tight_prod.pair_of_ob[o];
        ob[o] = out.loose_prod.pair_ob(a.embed.on_ob(x), b.embed.on_ob(y));
    }
    for (int m = 0; m < out.tight_prod.cat->num_morphisms(); ++m) {
        auto [x, y] = out.tight_prod.pair_of_mor[m];
        mor[m] = out.loose_prod.pair_mor(a.embed.on_mor(x), b.embed.on_mor(y));
    }
    auto embed = FiniteFunctor::make(out.tight_prod.cat, out.loose_prod.cat, std::move(ob), std::move(mor));
    out.ob = FObject::make(out.tight_prod.cat, out.loose_prod.cat, std::move(embed));
    out.proj1 = FMap::make(out.ob, a, out.tight_prod.proj1, out.loose_prod.proj1);
    out.proj2 = FMap::make(out.ob, b, out.tight_prod.proj2, out.loose_prod.proj2);
    return out;
}

PullbackFObject pullback_fobject(const FMap& f, const FMap& g) {
    if (!fobject_equal(f.dst, g.dst)) throw ShapeMismatch("pullback of squares: targets differ");
    auto pt = pullback_category(f.ft, g.ft);
    auto pl = pullback_category(f.fl, g.fl);
    // embedding: a pair of tight objects maps to the pair of embedded objects
    std::vector<int> ob(pt.cat->num_objects()), mor(pt.cat->num_morphisms());
    for (int o = 0; o < pt.cat->num_objects(); ++o) {
        int x = f.src.embed.on_ob(pt.proj1.on_ob(o));
        int y = g.src.embed.on_ob(pt.proj2.on_ob(o));
        ob[o] = pl.cat->object_index(
            encode_name({f.src.loose->object_name(x), g.src.loose->object_name(y)}));
    }
    for (int m = 0; m < pt.cat->num_morphisms(); ++m) {
        int x = f.src.embed.on_mor(pt.proj1.on_mor(m));
        int y = g.src.embed.on_mor(pt.proj2.on_mor(m));
        mor[m] = pl.cat->morphism_index(
            encode_name({f.src.loose->morphism_name(x), g.src.loose->morphism_name(y)}));
    }
    PullbackFObject out;
    auto embed = FiniteFunctor::make(pt.cat, pl.cat, std::move(ob), std::move(mor));
    out.ob = FObject::make(pt.cat, pl.cat, std::move(embed));
    out.proj1 = FMap::make(out.ob, f.src, pt.proj1, pl.proj1);
    out.proj2 = FMap::make(out.ob, g.src, pt.proj2, pl.proj2);
    return out;
}

int FHom::tight_index_of(const FMap& f) const {
    for (std::size_t i = 0; i < tight_obs.size(); ++i)
        if (functor_equal(tight_obs[i].ft, f.ft) && functor_equal(tight_obs[i].fl, f.fl))
            return static_cast<int>(i);
    return -1;
}

FHom hom_ambient_f(const FObject& a, const FObject& b, std::int64_t bound) {
    FHom out;
    out.loose_cat = functor_category(a.loose, b.loose, bound);
    // tight objects: loose functors carrying tight cells to tight cells; the
    // tight component is then the unique lift through the target embedding
    std::vector<int> tights;
    for (int o = 0; o < out.loose_cat.cat->num_objects(); ++o) {
        const auto& fl = out.loose_cat.obs[o];
        bool preserves = true;
        for (int to = 0; to < a.tight->num_objects() && preserves; ++to)
            preserves = b.ob_tight(fl.on_ob(a.embed.on_ob(to)));
        for (int tm = 0; tm < a.tight->num_morphisms() && preserves; ++tm)
            preserves = b.mor_tight(fl.on_mor(a.embed.on_mor(tm)));
        if (preserves) tights.push_back(o);
    }
    auto sub = full_subcategory(out.loose_cat.cat, tights);
    out.ob = FObject::make(sub.cat, out.loose_cat.cat, sub.inclusion);
    out.tight_to_loose.resize(sub.cat->num_objects());
    for (int o = 0; o < sub.cat->num_objects(); ++o) {
        int lo = sub.inclusion.on_ob(o);
        out.tight_to_loose[o] = lo;
        const auto& fl = out.loose_cat.obs[lo];
        std::vector<int> ft_ob(a.tight->num_objects()), ft_mor(a.tight->num_morphisms());
        for (int to = 0; to < a.tight->num_objects(); ++to)
            ft_ob[to] = b.ob_preimage[fl.on_ob(a.embed.on_ob(to))];
        for (int tm = 0; tm < a.tight->num_morphisms(); ++tm)
            ft_mor[tm] = b.mor_preimage[fl.on_mor(a.embed.on_mor(tm))];
        auto ft = FiniteFunctor::make(a.tight, b.tight, std::move(ft_ob), std::move(ft_mor));
        out.tight_obs.push_back(FMap::make(a, b, std::move(ft), fl));
    }
    return out;
}

F2Hom F2Hom::make(CatPtr tight, CatPtr fit, CatPtr loose, FiniteFunctor embed_tf,
                  FiniteFunctor embed_fl) {
    auto bad = validate_fobject(tight, fit, embed_tf);
    if (bad.empty()) {
        auto more = validate_fobject(fit, loose, embed_fl);
        bad.insert(bad.end(), more.begin(), more.end());
    }
    if (bad.empty()) {
        auto comp = validate_fobject(tight, loose, compose(embed_fl, embed_tf));
        bad.insert(bad.end(), comp.begin(), comp.end());
    }
    if (!bad.empty()) throw ValidationError("three-level hom: " + bad.front());
    F2Hom h;
    h.tight = std::move(tight);
    h.fit = std::move(fit);
    h.loose = std::move(loose);
    h.embed_tf = std::move(embed_tf);
    h.embed_fl = std::move(embed_fl);
    return h;
}

FObject random_fobject(Rng& rng, int max_obj, int max_extra_mor) {
    auto loose = cats::random_category(rng, max_obj, max_extra_mor);
    std::vector<int> keep;
    for (int o = 0; o < loose->num_objects(); ++o)
        if (rng.coin()) keep.push_back(o);
    auto sub = full_subcategory(loose, keep);
    return FObject::make(sub.cat, loose, sub.inclusion);
}

FMap random_fmap(Rng& rng) {
    for (;;) {
        auto a = random_fobject(rng, 3, 3);
        if (rng.pick(3) == 0) {
            // an isomorphism: relabel both parts
            auto [lr, lfun] = canonical_rename(a.loose, "w");
            std::vector<int> keep;
            for (int o = 0; o < a.tight->num_objects(); ++o)
                keep.push_back(lfun.on_ob(a.embed.on_ob(o)));
            auto sub = full_subcategory(lr, keep);
            auto b = FObject::make(sub.cat, lr, sub.inclusion);
            std::vector<int> ft_ob(a.tight->num_objects()), ft_mor(a.tight->num_morphisms());
            for (int o = 0; o < a.tight->num_objects(); ++o)
                ft_ob[o] = b.ob_preimage[lfun.on_ob(a.embed.on_ob(o))];
            for (int m = 0; m < a.tight->num_morphisms(); ++m)
                ft_mor[m] = b.mor_preimage[lfun.on_mor(a.embed.on_mor(m))];
            auto ft = FiniteFunctor::make(a.tight, b.tight, std::move(ft_ob), std::move(ft_mor));
            return FMap::make(a, b, std::move(ft), lfun);
        }
        auto b = random_fobject(rng, 3, 3);
        // collect loose functors that preserve tightness; pick one at random
        std::vector<FiniteFunctor> candidates;
        try {
            for (auto& fl : enumerate_functors(a.loose, b.loose, 20000)) {
                bool preserves = true;
                for (int to = 0; to < a.tight->num_objects() && preserves; ++to)
                    preserves = b.ob_tight(fl.on_ob(a.embed.on_ob(to)));
                for (int tm = 0; tm < a.tight->num_morphisms() && preserves; ++tm)
                    preserves = b.mor_tight(fl.on_mor(a.embed.on_mor(tm)));
                if (preserves) candidates.push_back(fl);
            }
        } catch (const EnumerationBoundExceeded&) {
            continue;
        }
        if (candidates.empty()) continue;
        const auto& fl = candidates[rng.pick(static_cast<int>(candidates.size()))];
        std::vector<int> ft_ob(a.tight->num_objects()), ft_mor(a.tight->num_morphisms());
        for (int to = 0; to < a.tight->num_objects(); ++to)
            ft_ob[to] = b.ob_preimage[fl.on_ob(a.embed.on_ob(to))];
        for (int tm = 0; tm < a.tight->num_morphisms(); ++tm)
            ft_mor[tm] = b.mor_preimage[fl.on_mor(a.embed.on_mor(tm))];
        auto ft = FiniteFunctor::make(a.tight, b.tight, std::move(ft_ob), std::move(ft_mor));
        return FMap::make(a, b, std::move(ft), fl);
    }
}

} // namespace enhcat
