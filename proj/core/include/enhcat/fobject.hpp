#ifndef ENHCAT_FOBJECT_HPP
#define ENHCAT_FOBJECT_HPP

#include <optional>

#include "enhcat/fincat.hpp"

namespace enhcat {

/// A full embedding of finite categories: the tight part sits inside the
/// loose part injectively on objects and fully faithfully on homs.
struct FObject {
    CatPtr tight;
    CatPtr loose;
    FiniteFunctor embed; // tight -> loose

    // loose index -> tight preimage index, or -1 when the cell is not tight
    std::vector<int> ob_preimage;
    std::vector<int> mor_preimage;

    static FObject make(CatPtr tight, CatPtr loose, FiniteFunctor embed);
    /// Every cell tight: tight = loose, identity embedding.
    static FObject chordate(CatPtr c);

    bool ob_tight(int loose_ob) const { return ob_preimage[loose_ob] >= 0; }
    bool mor_tight(int loose_mor) const { return mor_preimage[loose_mor] >= 0; }
    bool is_chordate() const;
};

std::vector<std::string> validate_fobject(const CatPtr& tight, const CatPtr& loose,
                                          const FiniteFunctor& embed);

bool fobject_equal(const FObject& a, const FObject& b);

FObject terminal_fobject();
FObject empty_fobject();

/// A morphism of full embeddings: a strictly commuting square.
struct FMap {
    FObject src, dst;
    FiniteFunctor ft; // tight components
    FiniteFunctor fl; // loose components

    static FMap make(FObject src, FObject dst, FiniteFunctor ft, FiniteFunctor fl);
    static FMap identity(const FObject& a);
};

std::vector<std::string> validate_fmap(const FObject& src, const FObject& dst,
                                       const FiniteFunctor& ft, const FiniteFunctor& fl);

bool fmap_equal(const FMap& a, const FMap& b);
FMap fmap_compose(const FMap& g, const FMap& f);
/// Both components isomorphisms of categories.
bool fmap_is_iso(const FMap& f);
/// Both components equivalences of categories.
bool fmap_is_equivalence(const FMap& f);

struct ProductFObject {
    FObject ob;
    ProductCategory tight_prod, loose_prod;
    FMap proj1, proj2;
};
ProductFObject product_fobject(const FObject& a, const FObject& b);

struct PullbackFObject {
    FObject ob;
    FMap proj1, proj2;
};
/// Componentwise pullback of FMaps with a shared target.
PullbackFObject pullback_fobject(const FMap& f, const FMap& g);

/// The hom of the ambient enhanced 2-category of full embeddings:
/// tight part = squares A -> B (equivalently, loose functors preserving
/// tightness), loose part = functors between loose parts, embedding the
/// evident inclusion.
struct FHom {
    FObject ob;
    FunctorCategory loose_cat;            // loose part with interpretations
    std::vector<int> tight_to_loose;      // tight object idx -> loose object idx
    std::vector<FMap> tight_obs;          // tight object idx -> the square

    const FiniteFunctor& loose_functor(int loose_ob) const { return loose_cat.obs[loose_ob]; }
    int loose_index_of(const FiniteFunctor& f) const { return loose_cat.ob_index(f); }
    /// Index of an FMap in the tight part, -1 when absent.
    int tight_index_of(const FMap& f) const;
};

FHom hom_ambient_f(const FObject& a, const FObject& b, std::int64_t bound = kDefaultBound);

/// A composable pair of full embeddings (three-level hom data).
struct F2Hom {
    CatPtr tight, fit, loose;
    FiniteFunctor embed_tf; // tight -> fit
    FiniteFunctor embed_fl; // fit -> loose

    static F2Hom make(CatPtr tight, CatPtr fit, CatPtr loose, FiniteFunctor embed_tf,
                      FiniteFunctor embed_fl);
};

/// Seeded generators used by the factorization-system audit.
FObject random_fobject(Rng& rng, int max_obj, int max_extra_mor);
/// A random square between random embeddings; isos are produced with
/// roughly one-in-three frequency so both sides of the audit get exercised.
FMap random_fmap(Rng& rng);

} // namespace enhcat

#endif
