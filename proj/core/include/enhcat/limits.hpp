#ifndef ENHCAT_LIMITS_HPP
#define ENHCAT_LIMITS_HPP

#include "enhcat/fcategory.hpp"

namespace enhcat {

// ---------------------------------------------------------------------------
// markings and dotted shapes
// ---------------------------------------------------------------------------

/// A class of 1-cells containing identities and closed under composition.
struct Marking {
    std::vector<std::vector<bool>> marked; // per hom (x,y), per loose object

    bool is_marked(const Cell1& f) const { return marked[f.src * n + f.dst][f.ob]; }
    int n = 0;

    static Marking identities_only(const FCatPtr& c);
    static Marking all_cells(const FCatPtr& c);
};

std::vector<std::string> validate_marking(const FCatPtr& c, const Marking& m);

/// A 2-category (chordate enhanced 2-category) with a marked class of
/// 1-cells.
struct MarkedTwoCategory {
    FCatPtr cat; // expected chordate
    Marking sigma;
};

/// A marked enhanced 2-category with a set of dotted objects, closed under
/// tight marked 1-cells.
struct DottedShape {
    FCatPtr cat;
    Marking sigma;
    std::vector<bool> dotted; // per object
};

std::vector<std::string> validate_dotted(const DottedShape& d);

/// The two-dotted-objects, one-loose-arrow shape with only identities
/// marked.
DottedShape loose_arrow_dotted();

// ---------------------------------------------------------------------------
// cone-enumeration limits (marked-lax / dotted-lax)
// ---------------------------------------------------------------------------

/// A single cone from the point: a leg object per shape object and a 2-cell
/// per loose 1-cell of the shape (identity on marked cells).
struct ConeObject {
    std::vector<int> leg;                 // per object a: loose object of S(a)
    std::vector<std::vector<int>> cell;   // per hom (a,b), per loose 1-cell: morphism of S(b).loose
    std::string name;
};

/// A dotted-lax (or dotted-colax) limit computed by exhaustive cone
/// enumeration. The tight part of the apex spans the cones whose legs are
/// tight at the dotted objects.
struct ConeApex {
    Weakness w = Weakness::Lax; // Lax or Colax orientation of the cone cells
    FObject apex;
    std::vector<ConeObject> cones;           // per apex loose object
    std::vector<std::vector<int>> cone_mors; // per apex loose morphism: per object a: morphism of S(a)

    int cone_index(const std::string& name) const { return apex.loose->object_index(name); }
};

/// Cone cells point  S(f) . x_a  =>  x_b  for w = Lax and the reverse for
/// w = Colax (matching the global lax convention for transformations out of
/// a constant diagram).
ConeApex dotted_lax_limit(const DottedShape& d, const Diagram& s, Weakness w = Weakness::Lax,
                          std::int64_t bound = kDefaultBound);

/// Marked-lax limit of a 2-functor into finite categories; the apex is
/// chordate.
ConeApex marked_lax_limit(const MarkedTwoCategory& m, const Diagram& s,
                          Weakness w = Weakness::Lax, std::int64_t bound = kDefaultBound);

/// Deterministic battery of enhanced test objects (chordate standard
/// categories plus genuinely mixed embeddings) with at most max_objects
/// loose objects.
std::vector<FObject> fobject_test_battery(int max_objects);

/// 1- and 2-dimensional universal property of a candidate dotted-lax apex,
/// certified against every test object: cells K -> apex must biject with
/// (dotted-/marked-) lax cones from K, and morphisms with cone morphisms.
/// Violations (if any) are appended to *report.
bool check_dotted_limit_universal(const DottedShape& d, const Diagram& s, const ConeApex& cand,
                                  const std::vector<FObject>& tests,
                                  std::vector<std::string>* report = nullptr,
                                  std::int64_t bound = kDefaultBound);

// ---------------------------------------------------------------------------
// weighted limits via the end formula
// ---------------------------------------------------------------------------

/// Weighted limit {W, D} of diagrams W, D over the same shape, computed by
/// the end formula: loose objects are strictly 2-natural families
/// t_j : W(j) -> D(j) of loose functors, morphisms are modifications, and
/// the tight part spans the families of squares.
struct WeightedLimitResult {
    FObject apex;
    std::vector<std::vector<FiniteFunctor>> families;            // per apex loose ob, per shape ob
    std::vector<std::vector<NaturalTransformation>> family_mods; // per apex loose mor, per shape ob
    int family_index(const std::string& name) const { return apex.loose->object_index(name); }
};

WeightedLimitResult weighted_limit_end(const Diagram& w, const Diagram& d,
                                       std::int64_t bound = kDefaultBound);

/// The universal property of a candidate weighted-limit apex: for every test
/// object K, cells K -> apex biject with weighted cones from K, one- and
/// two-dimensionally.
bool check_weighted_limit_universal(const Diagram& w, const Diagram& d,
                                    const WeightedLimitResult& cand,
                                    const std::vector<FObject>& tests,
                                    std::vector<std::string>* report = nullptr,
                                    std::int64_t bound = kDefaultBound);

/// Independent oracle construction of the same apex through the
/// internal-hom route: objects are weighted cones from the terminal object
/// computed via hom_ambient_f, morphisms their modifications. Used to
/// cross-check weighted_limit_end.
FObject weighted_limit_oracle(const Diagram& w, const Diagram& d,
                              std::int64_t bound = kDefaultBound);

// ---------------------------------------------------------------------------
// pointwise limits of loose morphisms between models
// ---------------------------------------------------------------------------

/// The pointwise dotted-lax limit of a loose morphism phi : M ~> N between
/// enhanced functors T -> ambient. For w = Colax (phi colax) the limit is
/// lax; for w = Lax it is colax. Returns the assembled functor L with its
/// projection transformations and comparison modification, plus the
/// per-object apexes.
struct PointwiseLimit {
    Diagram l;
    std::vector<ConeApex> per_object;   // indexed by objects of the source shape
    LooseTransformation eta_a;          // L => M, strict components
    LooseTransformation eta_b;          // L => N
    ModificationCells eta_f;            // between phi . eta_a and eta_b (orientation per w)
};

PointwiseLimit pointwise_model_limit(const Diagram& m, const Diagram& n,
                                     const LooseTransformation& phi,
                                     std::int64_t bound = kDefaultBound);

/// Functor-level universal property of the pointwise limit: cones from each
/// test functor X (given as diagrams over the same shape) biject with loose
/// (s,w)-transformations X => L, and their modifications with cone
/// morphisms.
bool check_pointwise_limit_universal(const Diagram& m, const Diagram& n,
                                     const LooseTransformation& phi, const PointwiseLimit& lim,
                                     const std::vector<Diagram>& tests,
                                     std::vector<std::string>* report = nullptr,
                                     std::int64_t bound = kDefaultBound);

} // namespace enhcat

#endif
