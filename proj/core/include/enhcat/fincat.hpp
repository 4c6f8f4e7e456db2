#ifndef ENHCAT_FINCAT_HPP
#define ENHCAT_FINCAT_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enhcat/errors.hpp"
#include "enhcat/util.hpp"

namespace enhcat {

/// Default ceiling on enumeration candidates. Exceeding a bound is an error,
/// never silent truncation.
inline constexpr std::int64_t kDefaultBound = 100000;

struct MorphismData {
    std::string name;
    std::string src;
    std::string dst;
};

/// Plain serializable category data: objects, morphisms, identity assignment
/// and a total composition table on composable pairs.
struct CategoryData {
    std::string label;
    std::vector<std::string> objects;
    std::vector<MorphismData> morphisms;
    std::vector<std::pair<std::string, std::string>> identities; // (object, morphism)
    std::vector<std::array<std::string, 3>> compose;             // (g, f, g.f)
};

class FiniteCategory;
using CatPtr = std::shared_ptr<const FiniteCategory>;

/// A finite category given by a total composition table. Objects and
/// morphisms are ordered by identifier so every derived enumeration is
/// reproducible. Instances are immutable after validation and safe to share
/// across threads.
class FiniteCategory {
  public:
    /// Validates the data (identity and associativity laws, totality of the
    /// table) and builds the category. Throws ValidationError with a located
    /// witness on the first violation.
    static CatPtr make(CategoryData data);

    const std::string& label() const { return label_; }
    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms_.size()); }

    const std::string& object_name(int o) const { return objects_[o]; }
    const MorphismData& morphism(int m) const { return morphisms_[m]; }
    const std::string& morphism_name(int m) const { return morphisms_[m].name; }

    /// Index lookups return -1 when the name is absent.
    int object_index(const std::string& name) const;
    int morphism_index(const std::string& name) const;

    int src(int m) const { return msrc_[m]; }
    int dst(int m) const { return mdst_[m]; }
    int identity(int o) const { return identity_[o]; }
    bool is_identity(int m) const { return identity_[msrc_[m]] == m && msrc_[m] == mdst_[m]; }

    bool composable(int g, int f) const { return mdst_[f] == msrc_[g]; }

    /// Composite g.f per the table; throws NotComposable on mismatch.
    int compose(int g, int f) const;

    /// Morphism indices from a to b, ascending.
    const std::vector<int>& hom(int a, int b) const { return homs_[a * num_objects() + b]; }

    /// Inverse morphism index, or -1 when m is not invertible.
    int inverse(int m) const { return inverse_[m]; }
    bool is_iso(int m) const { return inverse_[m] >= 0; }
    bool objects_isomorphic(int a, int b) const;

    /// Composes a path m_k . ... . m_1 given in application order
    /// (first applied first). Empty path yields identity(at).
    int compose_path(const std::vector<int>& path, int at) const;

    const CategoryData& data() const { return data_; }

  private:
    FiniteCategory() = default;

    std::string label_;
    std::vector<std::string> objects_;
    std::vector<MorphismData> morphisms_;
    std::vector<int> msrc_, mdst_;
    std::vector<int> identity_;
    std::vector<int> comp_;   // comp_[g * M + f], -1 when not composable
    std::vector<int> inverse_;
    std::vector<std::vector<int>> homs_;
    CategoryData data_;
};

/// Validates raw data without constructing; returns every violation, each
/// with a witness naming the offending cell. Empty result means valid.
std::vector<std::string> validate_category(const CategoryData& data);

/// Two categories are interchangeable when they are the same object or have
/// identical sorted data.
bool same_category(const CatPtr& a, const CatPtr& b);

/// A functor between finite categories; preserves identities and
/// composition (validated on construction).
class FiniteFunctor {
  public:
    FiniteFunctor() = default;
    static FiniteFunctor make(CatPtr source, CatPtr target, std::vector<int> ob,
                              std::vector<int> mor);
    static FiniteFunctor make_by_names(CatPtr source, CatPtr target,
                                       const std::vector<std::pair<std::string, std::string>>& ob,
                                       const std::vector<std::pair<std::string, std::string>>& mor);
    static FiniteFunctor identity(CatPtr c);
    /// The unique functor into a one-object, one-morphism category.
    static FiniteFunctor constant(CatPtr source, CatPtr target, int target_object);

    const CatPtr& source() const { return source_; }
    const CatPtr& target() const { return target_; }
    int on_ob(int o) const { return ob_[o]; }
    int on_mor(int m) const { return mor_[m]; }
    const std::vector<int>& ob_map() const { return ob_; }
    const std::vector<int>& mor_map() const { return mor_; }

    /// Canonical encoding (object and morphism images by name), used to give
    /// synthesized structures deterministic identifiers.
    std::string encode() const;

  private:
    CatPtr source_, target_;
    std::vector<int> ob_, mor_;
};

/// Report-style functor validation; empty result means valid.
std::vector<std::string> validate_functor(const CatPtr& source, const CatPtr& target,
                                          const std::vector<int>& ob, const std::vector<int>& mor);

bool functor_equal(const FiniteFunctor& a, const FiniteFunctor& b);
FiniteFunctor compose(const FiniteFunctor& g, const FiniteFunctor& f);

/// true iff both maps are bijections and the inverse assignment is a functor.
bool is_isomorphism(const FiniteFunctor& f);
/// Fully faithful and essentially surjective, decided exhaustively.
bool is_equivalence(const FiniteFunctor& f);

/// All functors A -> B in lexicographic order of (object map, morphism map).
/// Throws EnumerationBoundExceeded when the search exceeds `bound` steps.
std::vector<FiniteFunctor> enumerate_functors(const CatPtr& a, const CatPtr& b,
                                              std::int64_t bound = kDefaultBound);

/// A natural transformation between parallel functors.
struct NaturalTransformation {
    FiniteFunctor source_functor; // F
    FiniteFunctor target_functor; // G
    std::vector<int> comp;        // per object of dom(F): morphism of cod(F)

    static NaturalTransformation make(FiniteFunctor f, FiniteFunctor g, std::vector<int> comp);
    static NaturalTransformation identity(const FiniteFunctor& f);
    std::string encode() const;
    bool is_identity_cells() const;
};

/// Lists every failing naturality square (empty = natural).
/// Throws ShapeMismatch when the functors are not parallel.
std::vector<std::string> naturality_violations(const NaturalTransformation& alpha);
bool check_naturality(const NaturalTransformation& alpha);

bool transformation_equal(const NaturalTransformation& a, const NaturalTransformation& b);
NaturalTransformation vcompose(const NaturalTransformation& beta, const NaturalTransformation& alpha);
/// Whisker a functor on the left: (h * alpha)_x = h(alpha_x).
NaturalTransformation whisker_left(const FiniteFunctor& h, const NaturalTransformation& alpha);
/// Whisker a functor on the right: (alpha * h)_x = alpha_{h(x)}.
NaturalTransformation whisker_right(const NaturalTransformation& alpha, const FiniteFunctor& h);
/// Horizontal (Godement) composite of beta: H => H' with alpha: F => F'.
NaturalTransformation hcompose(const NaturalTransformation& beta, const NaturalTransformation& alpha);
/// Componentwise inverse; requires every component invertible.
NaturalTransformation invert(const NaturalTransformation& alpha);

/// All natural transformations F => G in lexicographic component order.
std::vector<NaturalTransformation> enumerate_transformations(const FiniteFunctor& f,
                                                             const FiniteFunctor& g,
                                                             std::int64_t bound = kDefaultBound);

struct PullbackCategory {
    CatPtr cat;
    FiniteFunctor proj1; // to source(F)
    FiniteFunctor proj2; // to source(G)
};

/// Pullback of F: A -> C along G: B -> C: pairs agreeing in C.
PullbackCategory pullback_category(const FiniteFunctor& f, const FiniteFunctor& g);

struct ProductCategory {
    CatPtr cat;
    FiniteFunctor proj1, proj2;
    int ob_count_b = 0, mor_count_b = 0;
    std::vector<int> ob_of_pair;  // ia * ob_count_b + ib -> product object
    std::vector<int> mor_of_pair; // ma * mor_count_b + mb -> product morphism
    std::vector<std::pair<int, int>> pair_of_ob;
    std::vector<std::pair<int, int>> pair_of_mor;

    int pair_ob(int a, int b) const { return ob_of_pair[a * ob_count_b + b]; }
    int pair_mor(int a, int b) const { return mor_of_pair[a * mor_count_b + b]; }
};

ProductCategory product_category(const CatPtr& a, const CatPtr& b);

/// Pairing of functors F: X -> A, G: X -> B into a product built by
/// product_category(A, B).
FiniteFunctor pair_into_product(const ProductCategory& prod, const FiniteFunctor& f,
                                const FiniteFunctor& g);

struct FunctorCategory {
    CatPtr cat;                                // objects named by encodings
    std::vector<FiniteFunctor> obs;            // per object index
    std::vector<NaturalTransformation> mors;   // per morphism index
    int ob_index(const FiniteFunctor& f) const;
    int mor_index(const NaturalTransformation& t) const;
};

/// The category of functors A -> B and natural transformations.
FunctorCategory functor_category(const CatPtr& a, const CatPtr& b,
                                 std::int64_t bound = kDefaultBound);

/// Postcomposition by g as a functor between functor categories.
FiniteFunctor postcompose_functor(const FunctorCategory& from, const FunctorCategory& to,
                                  const FiniteFunctor& g);
/// Post-whiskering by a transformation, between postcomposition functors.
NaturalTransformation postwhisker(const FunctorCategory& from, const FunctorCategory& to,
                                  const NaturalTransformation& g);

/// Searches for an isomorphism of categories A ~= B.
std::optional<FiniteFunctor> find_isomorphism(const CatPtr& a, const CatPtr& b);

struct Subcategory {
    CatPtr cat;
    FiniteFunctor inclusion;
};

/// Full subcategory spanned by the given objects (indices into c), keeping
/// object and morphism names.
Subcategory full_subcategory(const CatPtr& c, const std::vector<int>& objects);

/// Renames objects to "o0", "o1", ... and morphisms to "m0", ... following
/// the canonical order. Returns the renamed category and the relabeling
/// functor old -> new.
std::pair<CatPtr, FiniteFunctor> canonical_rename(const CatPtr& c, const std::string& prefix);

/// Standard small categories used as fixtures and test apexes.
namespace cats {
CatPtr empty();
CatPtr terminal();
CatPtr discrete(int n);
CatPtr walking_arrow();            // 0 -> 1
CatPtr chain3();                   // 0 -> 1 -> 2 with composite
CatPtr parallel_pair();            // 0 => 1
CatPtr walking_iso();              // 0 <-> 1
CatPtr walking_idempotent();       // one object, e.e = e
CatPtr span();                     // 1 <- 0 -> 2
CatPtr cospan();                   // 0 -> 2 <- 1
CatPtr poset2();                   // alias of walking_arrow with poset labels
CatPtr chaotic(int n);             // n objects, every hom a singleton

/// Deterministic battery of test apexes with at most `max_objects` objects.
/// Universal properties are certified against exactly this family.
std::vector<CatPtr> test_battery(int max_objects);

/// Seeded random category: up to max_obj objects and a composition table
/// built from a random preorder-with-loops construction (always valid).
CatPtr random_category(Rng& rng, int max_obj, int max_extra_mor);
} // namespace cats

} // namespace enhcat

#endif
