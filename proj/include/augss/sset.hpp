#pragma once

// Finite augmented simplicial sets in Eilenberg-Zilber normal form: every
// simplex is stored or produced as a degeneracy operator applied to a
// non-degenerate generator.  The dim -1 layer is a genuine grading level;
// the single face of a dim 0 generator is its augmentation value.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "augss/ordinal.hpp"

namespace augss {

/// Handle of a generator inside one AugSimplicialSet: (dimension, index).
struct GeneratorId {
    int dim = -1;
    int index = 0;
    auto operator<=>(const GeneratorId&) const = default;
};

/// A simplex in EZ normal form: op applied to a non-degenerate generator.
/// The simplex dimension is op.src().n; non-degenerate iff op is identity.
struct SimplexRef {
    DegeneracyOp op;
    GeneratorId gen;

    int dim() const { return op.src().n; }
    bool is_nondegenerate() const { return op.is_identity(); }
    auto operator<=>(const SimplexRef&) const = default;
};

enum class AugKind { trivial, canonical, explicit_ };

std::string to_string(AugKind kind);

/// Raised when a presentation is structurally unusable (dangling references,
/// operator dimension mismatches, duplicate names).
class structure_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AugSimplicialSet {
public:
    struct Generator {
        std::string name;
        // dim m >= 1: the m+1 faces, each of dimension m-1.
        // dim 0: exactly one entry, the augmentation value (dim -1).
        // dim -1: empty.
        std::vector<SimplexRef> faces;
        bool operator==(const Generator&) const = default;
    };

    /// The empty augmented simplicial set.
    AugSimplicialSet();

    /// layers[d + 1] lists the generators of dimension d.  Checks structural
    /// soundness (reference targets, operator shapes, unique names) and
    /// throws structure_error on violation.  Simplicial identities are the
    /// business of validate(), not the constructor.
    AugSimplicialSet(std::string name, AugKind kind, std::vector<std::vector<Generator>> layers);

    const std::string& name() const { return name_; }
    AugKind aug_kind() const { return kind_; }

    /// Largest dimension carrying a generator; -1 when only augmentation
    /// elements exist (or the set is empty).
    int topdim() const { return static_cast<int>(layers_.size()) - 2; }

    int count(int dim) const;
    int total_generators() const;

    const Generator& gen(GeneratorId id) const;
    const std::string& gen_name(GeneratorId id) const { return gen(id).name; }
    std::span<const SimplexRef> faces(GeneratorId id) const;
    /// Stored face i of a generator (the augmentation value when dim = 0).
    const SimplexRef& face(GeneratorId id, int i) const;

    std::optional<GeneratorId> find(const std::string& name) const;
    std::vector<GeneratorId> all_generators() const;  // (dim, index) order

    /// The identity-operator simplex sitting on a generator.
    SimplexRef nondeg(GeneratorId id) const;

    bool operator==(const AugSimplicialSet&) const;

private:
    std::string name_;
    AugKind kind_ = AugKind::explicit_;
    std::vector<std::vector<Generator>> layers_;
    std::map<std::string, GeneratorId> by_name_;
};

/// The contravariant presheaf action in EZ normal form: the simplex x.alpha
/// for alpha : [k] -> [dim x].  Face reads walk the stored data; the result
/// lands in the dim -1 layer when k = -1.
SimplexRef act(const AugSimplicialSet& X, const SimplexRef& x, const MonotoneMap& alpha);

/// d_i x = x . delta_i.
SimplexRef face_of(const AugSimplicialSet& X, const SimplexRef& x, int i);

/// s_i x = x . sigma_i.
SimplexRef degeneracy_of(const AugSimplicialSet& X, const SimplexRef& x, int i);

/// The standard n-simplex Delta[n] as an augmented simplicial set,
/// n >= -1; Delta[-1] is the join unit (one dim -1 element, nothing else).
AugSimplicialSet standard_simplex(int n);

/// The boundary of Delta[n] (top generator removed), n >= 1.
AugSimplicialSet boundary(int n);

AugSimplicialSet disjoint_union(const AugSimplicialSet& X, const AugSimplicialSet& Y);

/// Two points, trivially augmented: the simplicial 0-sphere.
AugSimplicialSet zero_sphere();

/// Replace the dim -1 layer by a single point.
AugSimplicialSet trivial_augmentation(const AugSimplicialSet& X);

/// Augment by connected components (vertex-edge graph).
AugSimplicialSet canonical_augmentation(const AugSimplicialSet& X);

/// Number of connected components of the vertex-edge graph.
int pi0(const AugSimplicialSet& X);

class subcomplex_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Collapse a face-closed generator set (dims >= 0, nonempty in dim 0) to a
/// single fresh vertex; the result is trivially augmented.
AugSimplicialSet quotient_collapse(const AugSimplicialSet& X, const std::vector<GeneratorId>& sub);

/// Sigma^n = Delta[n] / boundary, n >= 1: exactly one vertex and one n-cell.
AugSimplicialSet sigma(int n);

/// Decalage: level n holds all (n+1)-simplices of Y, operators act through
/// ordinal_sum(alpha, id_[0]), the dim -1 layer is the vertex set of Y, and
/// the augmentation is induced by the unique coface (q = d_0).
AugSimplicialSet dec(const AugSimplicialSet& Y);

class SimplicialMap {
public:
    SimplicialMap(std::shared_ptr<const AugSimplicialSet> src,
                  std::shared_ptr<const AugSimplicialSet> dst,
                  std::vector<std::vector<SimplexRef>> assign);

    const AugSimplicialSet& src() const { return *src_; }
    const AugSimplicialSet& dst() const { return *dst_; }
    std::shared_ptr<const AugSimplicialSet> src_ptr() const { return src_; }
    std::shared_ptr<const AugSimplicialSet> dst_ptr() const { return dst_; }

    const SimplexRef& image(GeneratorId id) const;
    /// f(g . eta) = f(g) . eta, renormalized in dst.
    SimplexRef apply(const SimplexRef& x) const;

    /// Face/augmentation commutation over every generator.
    bool commutes() const;
    /// Graded bijection onto generators (identity operators) that commutes.
    bool is_isomorphism() const;
    /// Inverse of an isomorphism.
    SimplicialMap inverse() const;

    bool operator==(const SimplicialMap& other) const { return assign_ == other.assign_; }

private:
    std::shared_ptr<const AugSimplicialSet> src_, dst_;
    std::vector<std::vector<SimplexRef>> assign_;  // [dim + 1][index]
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// All augmentation-respecting simplicial maps X -> Y, in deterministic
/// order (generators by (dim, index), candidates by (gen, operator)).
std::vector<SimplicialMap> enumerate_maps(const AugSimplicialSet& X, const AugSimplicialSet& Y);

/// [X,Y]_n = |ASS(X, Dec^{n+1} Y)|.  For X = Delta[-1] this counts the
/// dim -1 elements of Dec^{n+1} Y (maps out of the join unit are exactly
/// choices of an augmentation element).
long long internal_hom_level(const AugSimplicialSet& X, const AugSimplicialSet& Y, int n);

/// Search for an isomorphism (graded generator bijection commuting with
/// faces); returns it if found.
std::optional<SimplicialMap> are_isomorphic(const AugSimplicialSet& X, const AugSimplicialSet& Y);

struct Violation {
    GeneratorId gen;
    int i = 0, j = 0;  // d_i d_j != d_{j-1} d_i
    SimplexRef lhs, rhs;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool clean() const { return violations.empty(); }
    std::string to_text(const AugSimplicialSet& X) const;
};

/// Check every simplicial identity d_i d_j = d_{j-1} d_i (i < j) through the
/// action; on dim 1 generators the (0,1) case is augmentation coherence
/// q d_0 = q d_1.
ValidationReport validate(const AugSimplicialSet& X);

/// Simplex census indexed from dim -1.  Non-degenerate counts run to topdim;
/// the all-simplices census runs to up_to_dim (default topdim), counting EZ
/// pairs.
std::vector<long long> f_vector(const AugSimplicialSet& X, bool nondegenerate_only,
                                int up_to_dim = -2);

/// All simplices of X of the given dimension, deterministic order.
std::vector<SimplexRef> simplices_of_dim(const AugSimplicialSet& X, int dim);

/// "<collapsed|-> <name>", the face-line form of a simplex handle.
std::string ref_text(const AugSimplicialSet& X, const SimplexRef& r);

/// base, primed until it avoids every name in used; records the result.
std::string unique_name(std::string base, std::set<std::string>& used);

}  // namespace augss
