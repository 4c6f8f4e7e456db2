#ifndef ENHCAT_SKETCH_HPP
#define ENHCAT_SKETCH_HPP

#include "enhcat/limits.hpp"

namespace enhcat {

/// A weighted cone of a limit sketch: a shape, a weight on it, a diagram
/// into the carrier, an apex and the cone legs as squares into the carrier
/// homs.
struct SketchCone {
    FCatPtr shape;            // J
    Diagram weight;           // W over J
    FFunctor diagram;         // D : J -> carrier
    int apex = -1;            // object of the carrier
    std::vector<FMap> gamma;  // per shape object j: W(j) -> carrier.hom(apex, D j)
};

std::vector<std::string> validate_cone(const FCatPtr& carrier, const SketchCone& c);

/// An enhanced limit 2-sketch: a carrier with chosen weighted cones.
struct Sketch {
    FCatPtr carrier;
    std::vector<SketchCone> cones;
    bool tight_cones = false; // every shape chordate

    static Sketch make(FCatPtr carrier, std::vector<SketchCone> cones, bool tight_cones);
};

/// The class of base morphisms a model's comparison maps must land in.
enum class RClass { Iso, Equivalence };

RClass rclass_from_string(const std::string& s);
std::string to_string(RClass r);

struct ConeVerdict {
    bool passed = false;
    std::string witness; // empty when passed
};

struct ModelReport {
    std::vector<ConeVerdict> cones;
    int battery_size = 0; // equivalence checks are certified up to this battery
    bool is_model() const {
        for (const auto& c : cones)
            if (!c.passed) return false;
        return true;
    }
};

/// Comparison map rho of one cone: the weighted limit of F.D and the induced
/// square F(apex) -> {W, F.D}.
struct ComparisonMap {
    WeightedLimitResult limit;
    FMap rho;
};

ComparisonMap model_comparison_map(const Diagram& f, const Sketch& s, int cone_index,
                                   std::int64_t bound = kDefaultBound);

/// Decides per cone whether rho lands in R. For R = Iso the square itself is
/// checked (representables jointly reflect isomorphisms); for R = Equivalence
/// the induced maps hom(K, rho) are checked over the test battery.
ModelReport check_model(const Diagram& f, const Sketch& s, RClass r,
                        std::int64_t bound = kDefaultBound);

/// Composite of a diagram with an enhanced functor into its shape.
Diagram compose_diagram(const Diagram& f, const FFunctor& d);

/// Cone preservation: the image of each cone of S is a cone of T (strict
/// data equality after transport).
bool check_sketch_morphism(const FFunctor& i, const Sketch& s, const Sketch& t);

/// Cone reflection: every candidate quadruple over S whose image under i is
/// a cone of T is itself a cone of S. Candidate diagrams and legs are
/// enumerated exhaustively from the shapes of T's cones.
bool check_cone_reflecting(const FFunctor& i, const Sketch& s, const Sketch& t,
                           std::int64_t bound = kDefaultBound);

/// Pre-composition of a model along a cone-preserving and cone-reflecting
/// sketch morphism; revalidates and throws ModelCheckFailed when the result
/// is not a model of S.
Diagram restrict_model(const FFunctor& i, const Diagram& f, const Sketch& s, const Sketch& t,
                       RClass r, std::int64_t bound = kDefaultBound);

/// The chordate sketch on the tight part of the carrier with the inherited
/// cones, together with the inclusion. Requires every cone leg to land in
/// tight cells.
struct TightPart {
    Sketch sketch;
    FFunctor inclusion;
};
TightPart tight_part_sketch(const Sketch& t);

// ---------------------------------------------------------------------------
// presheaves and the orthogonality construction
// ---------------------------------------------------------------------------

/// The representable presheaf of an object: x -> hom(s, x).
Diagram yoneda_diagram(const FCatPtr& carrier, int s);

/// The hom presheaf of a model: x -> hom(K, F x) in the ambient.
Diagram hom_presheaf(const FObject& k, const Diagram& f, std::int64_t bound = kDefaultBound);

/// A morphism of presheaves: componentwise squares, natural in the carrier.
struct PresheafMap {
    std::vector<FMap> comp; // per carrier object
};

std::vector<std::string> validate_presheaf_map(const Diagram& from, const Diagram& to,
                                               const PresheafMap& m);

/// The classifying map of a cone: the bounded-generation weighted colimit
/// W * yo(D-) together with sigma into yo(apex). Throws FinitenessExceeded
/// when the colimit does not close up within colimit_bound composition
/// steps.
struct SigmaResult {
    Diagram colimit;  // the presheaf W * yo D^op
    PresheafMap sigma;
};

SigmaResult sigma_map(const Sketch& s, int cone_index, int colimit_bound = 6,
                      std::int64_t bound = kDefaultBound);

/// Orthogonality of a presheaf G to sigma : H -> P with respect to R:
/// the precomposition {P, G} -> {H, G} lands in R.
bool presheaf_orthogonal(const PresheafMap& sigma, const Diagram& h, const Diagram& p,
                         const Diagram& g, RClass r, std::int64_t bound = kDefaultBound);

} // namespace enhcat

#endif
