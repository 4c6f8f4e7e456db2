#ifndef ENHCAT_FCATEGORY_HPP
#define ENHCAT_FCATEGORY_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "enhcat/fobject.hpp"

namespace enhcat {

enum class Weakness { Strict, Pseudo, Lax, Colax };

char weakness_letter(Weakness w);
Weakness weakness_from_letter(char c);
/// s-p-l / s-p-c order; l and c are incomparable.
bool weakness_leq(Weakness a, Weakness b);
/// s and p are self-dual; l and c swap.
Weakness weakness_dual(Weakness w);

/// A loose 1-cell of a finite enhanced 2-category: an object of the loose
/// part of hom(src, dst).
struct Cell1 {
    int src = -1, dst = -1, ob = -1;
    bool operator==(const Cell1&) const = default;
};

/// A 2-cell: a morphism of the loose part of hom(src, dst).
struct Cell2 {
    int src = -1, dst = -1, mor = -1;
    bool operator==(const Cell2&) const = default;
};

class FiniteFCategory;
using FCatPtr = std::shared_ptr<const FiniteFCategory>;

/// A finite 2-category with a tightness marking on every hom, given by
/// explicit horizontal-composition tables. The loose parts form a strict
/// 2-category; tight cells include units and are closed under composition;
/// each per-hom embedding is full, so every 2-cell between tight 1-cells is
/// tight. All of this is validated exhaustively by make().
class FiniteFCategory {
  public:
    struct HComp {
        ProductFObject prod; // hom(y,z) (x) hom(x,y)
        FMap map;            // into hom(x,z)
    };

    static FCatPtr make(std::string label, std::vector<std::string> objects,
                        std::vector<FObject> homs, std::vector<HComp> hcomp,
                        std::vector<int> units);

    const std::string& label() const { return label_; }
    int num_objects() const { return static_cast<int>(objects_.size()); }
    const std::string& object_name(int o) const { return objects_[o]; }
    int object_index(const std::string& name) const;

    const FObject& hom(int x, int y) const { return homs_[x * num_objects() + y]; }
    const HComp& hcomp(int x, int y, int z) const {
        return hcomp_[(x * num_objects() + y) * num_objects() + z];
    }
    /// Unit 1-cell at x as a tight object of hom(x,x).
    int unit_tight(int x) const { return units_[x]; }
    /// Unit 1-cell at x in the loose part.
    int unit_loose(int x) const { return hom(x, x).embed.on_ob(units_[x]); }

    bool cell1_tight(const Cell1& f) const { return hom(f.src, f.dst).ob_tight(f.ob); }
    Cell1 unit(int x) const { return {x, x, unit_loose(x)}; }

    /// g after f on loose 1-cells.
    Cell1 compose1(const Cell1& g, const Cell1& f) const;
    /// Horizontal composite of 2-cells (interchange-complete).
    Cell2 compose2(const Cell2& beta, const Cell2& alpha) const;
    /// Vertical composition inside a hom-category.
    Cell2 vcomp(const Cell2& beta, const Cell2& alpha) const;
    Cell2 identity2(const Cell1& f) const;
    /// Whisker a 1-cell h : y -> z with a 2-cell alpha in hom(x,y).
    Cell2 whisker_l(const Cell1& h, const Cell2& alpha) const;
    /// Whisker a 2-cell beta in hom(y,z) with a 1-cell f : x -> y.
    Cell2 whisker_r(const Cell2& beta, const Cell1& f) const;

    int cell2_src_ob(const Cell2& a) const { return hom(a.src, a.dst).loose->src(a.mor); }
    int cell2_dst_ob(const Cell2& a) const { return hom(a.src, a.dst).loose->dst(a.mor); }
    bool cell2_invertible(const Cell2& a) const { return hom(a.src, a.dst).loose->is_iso(a.mor); }
    bool cell2_identity(const Cell2& a) const { return hom(a.src, a.dst).loose->is_identity(a.mor); }

    std::string cell1_name(const Cell1& f) const;
    std::string cell2_name(const Cell2& a) const;
    Cell1 cell1_by_name(int x, int y, const std::string& name) const;
    Cell2 cell2_by_name(int x, int y, const std::string& name) const;

  private:
    FiniteFCategory() = default;
    std::string label_;
    std::vector<std::string> objects_;
    std::vector<FObject> homs_;
    std::vector<HComp> hcomp_;
    std::vector<int> units_;
};

std::vector<std::string> validate_fcategory(const std::vector<std::string>& objects,
                                            const std::vector<FObject>& homs,
                                            const std::vector<FiniteFCategory::HComp>& hcomp,
                                            const std::vector<int>& units);

/// Vertical pasting of 2-cells in a hom-category of A.
Cell2 paste_vertical(const FiniteFCategory& a, const Cell2& beta, const Cell2& alpha);
/// Horizontal pasting (image under the horizontal-composition square).
Cell2 paste_horizontal(const FiniteFCategory& a, const Cell2& beta, const Cell2& alpha);

/// Builders.
/// Chordate enhanced 2-category from hom-categories: every cell tight.
FCatPtr chordate_fcategory(std::string label, std::vector<std::string> objects,
                           std::vector<CatPtr> homs,
                           std::vector<FiniteFunctor> hcomp_functors, // per (x,y,z) on products
                           std::vector<int> units);
/// One object, a single identity 1-cell.
FCatPtr terminal_fcategory();
/// The shape with two objects and one loose, non-identity 1-cell between
/// them; every hom otherwise trivial.
FCatPtr loose_arrow_shape();
/// Chordate walking-arrow shape (one tight, non-identity 1-cell).
FCatPtr tight_arrow_shape();
/// Discrete enhanced 2-category on n objects.
FCatPtr discrete_fcategory(int n);

/// Builder for enhanced 2-categories whose homs are discrete (identity
/// 2-cells only): per hom a list of (1-cell name, tight?) and a composition
/// table on names. Most sketch carriers in the fixtures are of this kind.
FCatPtr discrete_hom_fcategory(
    std::string label, std::vector<std::string> objects,
    const std::vector<std::vector<std::pair<std::string, bool>>>& cells,
    const std::vector<std::string>& units,
    const std::function<std::string(int, int, int, const std::string&, const std::string&)>& comp);

/// An enhanced functor between finite enhanced 2-categories.
struct FFunctor {
    FCatPtr src, dst;
    std::vector<int> ob;               // object map
    std::vector<FMap> hom_action;      // per (x,y): hom_src(x,y) -> hom_dst(Fx,Fy)

    static FFunctor make(FCatPtr src, FCatPtr dst, std::vector<int> ob,
                         std::vector<FMap> hom_action);
    static FFunctor identity(FCatPtr c);

    const FMap& action(int x, int y) const { return hom_action[x * src->num_objects() + y]; }
    Cell1 on1(const Cell1& f) const;
    Cell2 on2(const Cell2& a) const;
};

std::vector<std::string> validate_ffunctor(const FCatPtr& src, const FCatPtr& dst,
                                           const std::vector<int>& ob,
                                           const std::vector<FMap>& hom_action);

bool fcategory_equal(const FCatPtr& a, const FCatPtr& b);
bool ffunctor_equal(const FFunctor& a, const FFunctor& b);
FFunctor compose(const FFunctor& g, const FFunctor& f);

/// All enhanced functors A -> B in deterministic order.
std::vector<FFunctor> enumerate_ffunctors(const FCatPtr& a, const FCatPtr& b,
                                          std::int64_t bound = kDefaultBound);

/// Strict enhanced natural transformation between FFunctors: tight
/// components, strictly 2-natural at the loose level.
struct FNat {
    FFunctor source_functor, target_functor;
    std::vector<int> comp; // per object x: tight object of hom_dst(Fx, Gx)

    static FNat make(FFunctor f, FFunctor g, std::vector<int> comp);
    static FNat identity(const FFunctor& f);
    Cell1 at(int x) const;
};

std::vector<std::string> fnat_violations(const FNat& alpha);

// ---------------------------------------------------------------------------
// Diagrams valued in the ambient of full embeddings
// ---------------------------------------------------------------------------

/// An enhanced functor from a finite enhanced 2-category into the ambient of
/// finite full embeddings: objects carry FObjects, loose 1-cells carry
/// functors of loose parts, tight 1-cells restrict to tight parts, 2-cells
/// carry natural transformations. Plain finite categories enter as chordate
/// values.
struct Diagram {
    FCatPtr src;
    std::vector<FObject> ob;
    // per hom (x,y): indexed by loose objects / loose morphisms of the hom
    std::vector<std::vector<FiniteFunctor>> on1;
    std::vector<std::vector<NaturalTransformation>> on2;

    static Diagram make(FCatPtr src, std::vector<FObject> ob,
                        std::vector<std::vector<FiniteFunctor>> on1,
                        std::vector<std::vector<NaturalTransformation>> on2);
    /// Constant diagram at an FObject.
    static Diagram constant(FCatPtr src, const FObject& value);

    const FiniteFunctor& at1(const Cell1& f) const { return on1[f.src * src->num_objects() + f.dst][f.ob]; }
    const NaturalTransformation& at2(const Cell2& a) const {
        return on2[a.src * src->num_objects() + a.dst][a.mor];
    }
    /// Tight-part functor of the image of a tight 1-cell.
    FiniteFunctor tight_action(const Cell1& f) const;
};

std::vector<std::string> validate_diagram(const Diagram& d);

bool diagram_equal(const Diagram& a, const Diagram& b);

/// Whether a functor between loose parts is a tight 1-cell of the ambient,
/// i.e. restricts to the tight parts.
bool functor_is_tight_cell(const FiniteFunctor& f, const FObject& a, const FObject& b);
/// The tight restriction (requires functor_is_tight_cell).
FiniteFunctor tight_restriction(const FiniteFunctor& f, const FObject& a, const FObject& b);

// ---------------------------------------------------------------------------
// Loose (w', w)-natural transformations and modifications
// ---------------------------------------------------------------------------

/// Orientation convention, fixed globally: for w = lax the 2-component at
/// f : X ~> Y is a 2-cell  N(f) . phi_X  =>  phi_Y . M(f);  colax is the
/// reverse. Pseudo stores the lax orientation with every component
/// invertible; strict components are identities.
struct LooseTransformation {
    Weakness wprime = Weakness::Strict;
    Weakness w = Weakness::Lax;
    std::vector<FiniteFunctor> comp1;                      // per object of the shape
    std::vector<std::vector<NaturalTransformation>> comp2; // per hom, per loose 1-cell

    const FiniteFunctor& at1(int x) const { return comp1[x]; }
    const NaturalTransformation& at2(const FCatPtr& shape, const Cell1& f) const {
        return comp2[f.src * shape->num_objects() + f.dst][f.ob];
    }

    static LooseTransformation identity(const Diagram& m, Weakness wprime, Weakness w);
};

struct LooseCheckReport {
    std::vector<std::string> violations;
    bool tight = false; // every 1-component tight, 2-components at tights are w'-cells
    bool valid() const { return violations.empty(); }
};

/// Full coherence check: w-naturality on all 1-cells (unit, composition and
/// 2-cell coherence), w'-collapse on tight 1-cells, invertibility when
/// w = p, identities when w = s. Also classifies tightness.
LooseCheckReport check_loose_natural(const LooseTransformation& phi, const Diagram& m,
                                     const Diagram& n);

enum class TransformationLevel { Tight, Fit, Loose };

/// Stratification of a valid loose (s,w)-transformation: tight when
/// enhanced-natural (tight components, identity 2-components), fit when
/// 2-natural between loose parts (identity 2-components only), loose
/// otherwise. Throws InvalidTransformation when phi fails coherence.
TransformationLevel classify_transformation(const LooseTransformation& phi, const Diagram& m,
                                            const Diagram& n);

/// Vertical composite (psi after phi) of loose transformations of equal
/// weakness.
LooseTransformation compose_loose(const LooseTransformation& psi, const LooseTransformation& phi,
                                  const Diagram& m, const Diagram& n, const Diagram& p);

/// A modification between parallel loose transformations.
struct ModificationCells {
    std::vector<NaturalTransformation> comp; // per object: phi_X => psi_X
};

std::vector<std::string> modification_violations(const ModificationCells& mu,
                                                 const LooseTransformation& phi,
                                                 const LooseTransformation& psi, const Diagram& m,
                                                 const Diagram& n);

/// Enumerates all loose (s,w)-natural transformations M => N in
/// lexicographic order (oracle-grade brute force).
std::vector<LooseTransformation> enumerate_loose_transformations(const Diagram& m,
                                                                 const Diagram& n, Weakness w,
                                                                 std::int64_t bound = kDefaultBound);

std::vector<ModificationCells> enumerate_modifications(const LooseTransformation& phi,
                                                       const LooseTransformation& psi,
                                                       const Diagram& m, const Diagram& n,
                                                       std::int64_t bound = kDefaultBound);

// ---------------------------------------------------------------------------
// 2-cell duality
// ---------------------------------------------------------------------------

CatPtr opposite_category(const CatPtr& c);
FiniteFunctor opposite_functor(const FiniteFunctor& f);
/// Reverses every 2-cell (hom-categories become opposites).
FCatPtr co_dual(const FCatPtr& c);
Diagram co_dual(const Diagram& d, const FCatPtr& co_src);
/// The 2-cell-reversed image of a transformation: lax and colax swap.
LooseTransformation co_dual(const LooseTransformation& t, const Diagram& co_m,
                            const Diagram& co_n);

} // namespace enhcat

#endif
