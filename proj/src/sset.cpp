#include "augss/sset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace augss {

std::string to_string(AugKind kind) {
    switch (kind) {
        case AugKind::trivial: return "trivial";
        case AugKind::canonical: return "canonical";
        case AugKind::explicit_: return "explicit";
    }
    return "?";
}

AugSimplicialSet::AugSimplicialSet() : name_("empty"), layers_(1) {}

AugSimplicialSet::AugSimplicialSet(std::string name, AugKind kind,
                                   std::vector<std::vector<Generator>> layers)
    : name_(std::move(name)), kind_(kind), layers_(std::move(layers)) {
    if (layers_.empty())
        layers_.resize(1);
    while (layers_.size() > 1 && layers_.back().empty())
        layers_.pop_back();

    for (int d = -1; d <= topdim(); ++d) {
        const auto& layer = layers_[static_cast<size_t>(d + 1)];
        for (int idx = 0; idx < static_cast<int>(layer.size()); ++idx) {
            const Generator& g = layer[static_cast<size_t>(idx)];
            if (g.name.empty() || g.name.find_first_of(" \t\r\n") != std::string::npos)
                throw structure_error("bad generator name '" + g.name + "'");
            if (!by_name_.emplace(g.name, GeneratorId{d, idx}).second)
                throw structure_error("duplicate generator name '" + g.name + "'");

            const int expected = d == -1 ? 0 : (d == 0 ? 1 : d + 1);
            if (static_cast<int>(g.faces.size()) != expected)
                throw structure_error("generator '" + g.name + "' must carry " +
                                      std::to_string(expected) + " faces");
            for (const SimplexRef& r : g.faces) {
                if (r.op.src().n != d - 1)
                    throw structure_error("face of '" + g.name + "' has wrong dimension");
                if (r.gen.dim != r.op.dst().n)
                    throw structure_error("face of '" + g.name + "' has inconsistent target");
                if (r.gen.dim < -1 || r.gen.dim > topdim() || r.gen.index < 0 ||
                    r.gen.index >= count(r.gen.dim))
                    throw structure_error("face of '" + g.name + "' references a missing generator");
            }
        }
    }
}

int AugSimplicialSet::count(int dim) const {
    if (dim < -1 || dim > topdim())
        return 0;
    return static_cast<int>(layers_[static_cast<size_t>(dim + 1)].size());
}

int AugSimplicialSet::total_generators() const {
    int total = 0;
    for (const auto& layer : layers_)
        total += static_cast<int>(layer.size());
    return total;
}

const AugSimplicialSet::Generator& AugSimplicialSet::gen(GeneratorId id) const {
    if (id.dim < -1 || id.dim > topdim() || id.index < 0 || id.index >= count(id.dim))
        throw structure_error("generator id out of range");
    return layers_[static_cast<size_t>(id.dim + 1)][static_cast<size_t>(id.index)];
}

std::span<const SimplexRef> AugSimplicialSet::faces(GeneratorId id) const {
    return gen(id).faces;
}

const SimplexRef& AugSimplicialSet::face(GeneratorId id, int i) const {
    const Generator& g = gen(id);
    if (i < 0 || i >= static_cast<int>(g.faces.size()))
        throw structure_error("face index out of range");
    return g.faces[static_cast<size_t>(i)];
}

std::optional<GeneratorId> AugSimplicialSet::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

std::vector<GeneratorId> AugSimplicialSet::all_generators() const {
    std::vector<GeneratorId> out;
    for (int d = -1; d <= topdim(); ++d)
        for (int i = 0; i < count(d); ++i)
            out.push_back({d, i});
    return out;
}

SimplexRef AugSimplicialSet::nondeg(GeneratorId id) const {
    gen(id);
    return {DegeneracyOp::identity(Ordinal(id.dim)), id};
}

bool AugSimplicialSet::operator==(const AugSimplicialSet& other) const {
    return name_ == other.name_ && kind_ == other.kind_ && layers_ == other.layers_;
}

// ---------------------------------------------------------------------------
// Presheaf action

namespace {

SimplexRef eval_injection(const AugSimplicialSet& X, GeneratorId g, const MonotoneMap& mono);

}  // namespace

SimplexRef act(const AugSimplicialSet& X, const SimplexRef& x, const MonotoneMap& alpha) {
    if (alpha.dst().n != x.dim())
        throw std::invalid_argument("act: operator codomain must equal the simplex dimension");
    MonotoneMap composite = compose(x.op.as_map(), alpha);
    EpiMonoFactorization fac = epi_mono_factor(composite);
    SimplexRef base = eval_injection(X, x.gen, fac.mono);
    if (fac.epi.is_identity())
        return base;
    return {DegeneracyOp::from_map(compose(base.op.as_map(), fac.epi.as_map())), base.gen};
}

namespace {

// g . mono for an injection mono : [j] -> [dim g].  One missed value is
// peeled per step (largest first); each peel reads one stored face.
SimplexRef eval_injection(const AugSimplicialSet& X, GeneratorId g, const MonotoneMap& mono) {
    if (mono.src() == mono.dst())
        return {DegeneracyOp::identity(mono.src()), g};
    const int n = mono.dst().n;
    int i = n;
    {
        std::vector<char> hit(static_cast<size_t>(n + 1), 0);
        for (int v : mono.values())
            hit[static_cast<size_t>(v)] = 1;
        while (hit[static_cast<size_t>(i)])
            --i;
    }
    std::vector<int> rest(mono.values().size());
    for (size_t k = 0; k < rest.size(); ++k) {
        int v = mono.values()[k];
        rest[k] = v < i ? v : v - 1;
    }
    const SimplexRef& fi = X.face(g, i);
    return act(X, fi, MonotoneMap(mono.src(), Ordinal(n - 1), std::move(rest)));
}

}  // namespace

SimplexRef face_of(const AugSimplicialSet& X, const SimplexRef& x, int i) {
    return act(X, x, MonotoneMap::coface(Ordinal(x.dim()), i));
}

SimplexRef degeneracy_of(const AugSimplicialSet& X, const SimplexRef& x, int i) {
    return act(X, x, MonotoneMap::codegeneracy(Ordinal(x.dim()), i));
}

// ---------------------------------------------------------------------------
// Constructors

std::string unique_name(std::string base, std::set<std::string>& used) {
    while (used.count(base))
        base += '\'';
    used.insert(base);
    return base;
}

namespace {

using Generator = AugSimplicialSet::Generator;
using Layers = std::vector<std::vector<Generator>>;

std::set<std::string> names_of(const AugSimplicialSet& X) {
    std::set<std::string> used;
    for (GeneratorId id : X.all_generators())
        used.insert(X.gen_name(id));
    return used;
}

std::string vertex_label(const std::vector<int>& verts, int n) {
    std::string out;
    for (size_t k = 0; k < verts.size(); ++k) {
        if (n > 9 && k > 0)
            out += '_';
        out += std::to_string(verts[k]);
    }
    return out;
}

AugSimplicialSet renamed(const AugSimplicialSet& X, std::string name) {
    Layers layers;
    for (int d = -1; d <= X.topdim(); ++d) {
        layers.emplace_back();
        for (int i = 0; i < X.count(d); ++i) {
            GeneratorId id{d, i};
            layers.back().push_back({X.gen_name(id),
                                     {X.faces(id).begin(), X.faces(id).end()}});
        }
    }
    return {std::move(name), X.aug_kind(), std::move(layers)};
}

}  // namespace

AugSimplicialSet standard_simplex(int n) {
    if (n < -1)
        throw std::invalid_argument("standard_simplex: n must be >= -1");
    Layers layers(static_cast<size_t>(std::max(n + 2, 1)));
    layers[0].push_back({"*", {}});
    std::vector<std::map<std::vector<int>, int>> index_of(static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        auto injections = all_injections(Ordinal(k), Ordinal(n));
        for (int idx = 0; idx < static_cast<int>(injections.size()); ++idx) {
            const std::vector<int>& verts = injections[static_cast<size_t>(idx)].values();
            index_of[static_cast<size_t>(k)][verts] = idx;
            Generator g{vertex_label(verts, n), {}};
            if (k == 0) {
                g.faces.push_back({DegeneracyOp::identity(Ordinal(-1)), {-1, 0}});
            } else {
                for (int i = 0; i <= k; ++i) {
                    std::vector<int> sub = verts;
                    sub.erase(sub.begin() + i);
                    int target = index_of[static_cast<size_t>(k - 1)].at(sub);
                    g.faces.push_back({DegeneracyOp::identity(Ordinal(k - 1)), {k - 1, target}});
                }
            }
            layers[static_cast<size_t>(k + 1)].push_back(std::move(g));
        }
    }
    return {n == -1 ? "Delta[-1]" : "Delta[" + std::to_string(n) + "]", AugKind::trivial,
            std::move(layers)};
}

AugSimplicialSet boundary(int n) {
    if (n < 1)
        throw std::invalid_argument("boundary: n must be >= 1");
    AugSimplicialSet full = standard_simplex(n);
    Layers layers;
    for (int d = -1; d <= n - 1; ++d) {
        layers.emplace_back();
        for (int i = 0; i < full.count(d); ++i) {
            GeneratorId id{d, i};
            layers.back().push_back({full.gen_name(id),
                                     {full.faces(id).begin(), full.faces(id).end()}});
        }
    }
    return {"dDelta[" + std::to_string(n) + "]", AugKind::trivial, std::move(layers)};
}

AugSimplicialSet disjoint_union(const AugSimplicialSet& X, const AugSimplicialSet& Y) {
    Layers layers(static_cast<size_t>(std::max({X.topdim(), Y.topdim(), -1}) + 2));
    std::set<std::string> used;
    for (int d = -1; d <= X.topdim(); ++d)
        for (int i = 0; i < X.count(d); ++i) {
            GeneratorId id{d, i};
            layers[static_cast<size_t>(d + 1)].push_back(
                {unique_name(X.gen_name(id), used), {X.faces(id).begin(), X.faces(id).end()}});
        }
    for (int d = -1; d <= Y.topdim(); ++d)
        for (int i = 0; i < Y.count(d); ++i) {
            GeneratorId id{d, i};
            Generator g{unique_name(Y.gen_name(id), used), {}};
            for (const SimplexRef& r : Y.faces(id))
                g.faces.push_back({r.op, {r.gen.dim, r.gen.index + X.count(r.gen.dim)}});
            layers[static_cast<size_t>(d + 1)].push_back(std::move(g));
        }
    return {X.name() + "+" + Y.name(), AugKind::explicit_, std::move(layers)};
}

AugSimplicialSet zero_sphere() {
    Layers layers(2);
    layers[0].push_back({"*", {}});
    SimplexRef aug{DegeneracyOp::identity(Ordinal(-1)), {-1, 0}};
    layers[1].push_back({"a", {aug}});
    layers[1].push_back({"b", {aug}});
    return {"S0", AugKind::trivial, std::move(layers)};
}

AugSimplicialSet trivial_augmentation(const AugSimplicialSet& X) {
    Layers layers(static_cast<size_t>(std::max(X.topdim(), -1) + 2));
    std::set<std::string> used;
    for (int d = 0; d <= X.topdim(); ++d)
        for (int i = 0; i < X.count(d); ++i)
            used.insert(X.gen_name({d, i}));
    layers[0].push_back({unique_name("*", used), {}});
    for (int d = 0; d <= X.topdim(); ++d)
        for (int i = 0; i < X.count(d); ++i) {
            GeneratorId id{d, i};
            Generator g{X.gen_name(id), {X.faces(id).begin(), X.faces(id).end()}};
            if (d == 0)
                g.faces = {{DegeneracyOp::identity(Ordinal(-1)), {-1, 0}}};
            layers[static_cast<size_t>(d + 1)].push_back(std::move(g));
        }
    return {X.name(), AugKind::trivial, std::move(layers)};
}

namespace {

// Connected components of the vertex-edge graph; component numbers follow
// the first vertex (by index) seen in each class.
std::pair<std::vector<int>, int> vertex_components(const AugSimplicialSet& X) {
    const int nv = X.count(0);
    std::vector<int> parent(static_cast<size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (int e = 0; e < X.count(1); ++e) {
        int a = find(X.face({1, e}, 0).gen.index);
        int b = find(X.face({1, e}, 1).gen.index);
        if (a != b)
            parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> comp(static_cast<size_t>(nv), -1);
    int ncomp = 0;
    for (int v = 0; v < nv; ++v) {
        int root = find(v);
        if (comp[static_cast<size_t>(root)] == -1)
            comp[static_cast<size_t>(root)] = ncomp++;
        comp[static_cast<size_t>(v)] = comp[static_cast<size_t>(root)];
    }
    return {std::move(comp), ncomp};
}

}  // namespace

AugSimplicialSet canonical_augmentation(const AugSimplicialSet& X) {
    auto [comp, ncomp] = vertex_components(X);
    Layers layers(static_cast<size_t>(std::max(X.topdim(), -1) + 2));
    std::set<std::string> used;
    for (int d = 0; d <= X.topdim(); ++d)
        for (int i = 0; i < X.count(d); ++i)
            used.insert(X.gen_name({d, i}));
    for (int c = 0; c < ncomp; ++c)
        layers[0].push_back({unique_name("c" + std::to_string(c), used), {}});
    for (int d = 0; d <= X.topdim(); ++d)
        for (int i = 0; i < X.count(d); ++i) {
            GeneratorId id{d, i};
            Generator g{X.gen_name(id), {X.faces(id).begin(), X.faces(id).end()}};
            if (d == 0)
                g.faces = {{DegeneracyOp::identity(Ordinal(-1)), {-1, comp[static_cast<size_t>(i)]}}};
            layers[static_cast<size_t>(d + 1)].push_back(std::move(g));
        }
    return {X.name(), AugKind::canonical, std::move(layers)};
}

int pi0(const AugSimplicialSet& X) {
    return vertex_components(X).second;
}

AugSimplicialSet quotient_collapse(const AugSimplicialSet& X, const std::vector<GeneratorId>& sub) {
    std::set<GeneratorId> in_sub(sub.begin(), sub.end());
    bool has_vertex = false;
    for (GeneratorId id : in_sub) {
        if (id.dim < 0)
            throw subcomplex_error("collapse set must live in dimensions >= 0");
        X.gen(id);
        if (id.dim == 0)
            has_vertex = true;
        for (const SimplexRef& r : X.faces(id))
            if (r.gen.dim >= 0 && !in_sub.count(r.gen))
                throw subcomplex_error("collapse set is not face-closed at '" + X.gen_name(id) + "'");
    }
    if (!has_vertex)
        throw subcomplex_error("collapse set has no vertex");

    Layers layers(static_cast<size_t>(std::max(X.topdim(), 0) + 2));
    std::set<std::string> used;
    for (GeneratorId id : X.all_generators())
        if (id.dim >= 0 && !in_sub.count(id))
            used.insert(X.gen_name(id));
    const std::string aug_name = unique_name("*", used);
    const std::string pt_name = unique_name("pt", used);
    layers[0].push_back({aug_name, {}});
    layers[1].push_back({pt_name, {{DegeneracyOp::identity(Ordinal(-1)), {-1, 0}}}});

    std::map<GeneratorId, GeneratorId> remap;
    for (int d = 0; d <= X.topdim(); ++d)
        for (int i = 0; i < X.count(d); ++i)
            if (!in_sub.count({d, i})) {
                remap[{d, i}] = {d, static_cast<int>(layers[static_cast<size_t>(d + 1)].size())};
                layers[static_cast<size_t>(d + 1)].push_back({X.gen_name({d, i}), {}});
            }
    for (auto& [old_id, new_id] : remap) {
        Generator& g = layers[static_cast<size_t>(new_id.dim + 1)][static_cast<size_t>(new_id.index)];
        if (old_id.dim == 0) {
            g.faces = {{DegeneracyOp::identity(Ordinal(-1)), {-1, 0}}};
            continue;
        }
        for (const SimplexRef& r : X.faces(old_id)) {
            if (in_sub.count(r.gen))
                g.faces.push_back({DegeneracyOp::collapse_to_point(Ordinal(old_id.dim - 1)), {0, 0}});
            else
                g.faces.push_back({r.op, remap.at(r.gen)});
        }
    }
    return {X.name() + "/c", AugKind::trivial, std::move(layers)};
}

AugSimplicialSet sigma(int n) {
    if (n < 1)
        throw std::invalid_argument("sigma: n must be >= 1");
    AugSimplicialSet simplex = standard_simplex(n);
    std::vector<GeneratorId> sub;
    for (int d = 0; d < n; ++d)
        for (int i = 0; i < simplex.count(d); ++i)
            sub.push_back({d, i});
    return renamed(quotient_collapse(simplex, sub), "Sigma" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Decalage

namespace {

// A simplex of Y is non-degenerate as a decalage simplex iff its EZ operator
// collapses at most the last position: only the forgotten final degeneracy
// becomes invisible after the shift.
struct DecIds {
    // base[g] = id of the decalage generator carried by a Y-generator of
    // dimension m (lives in decalage dimension m - 1);
    // tilde[g] = id of the one carried by its last degeneracy (dimension m).
    std::map<GeneratorId, GeneratorId> base, tilde;
};

SimplexRef dec_normalize(const DecIds& ids, const SimplexRef& z) {
    const int n = z.dim();
    std::vector<int> collapsed = z.op.collapsed();
    if (!collapsed.empty() && collapsed.back() == n - 1) {
        collapsed.pop_back();
        return {DegeneracyOp(Ordinal(n - 1), std::move(collapsed)), ids.tilde.at(z.gen)};
    }
    return {DegeneracyOp(Ordinal(n - 1), std::move(collapsed)), ids.base.at(z.gen)};
}

}  // namespace

AugSimplicialSet dec(const AugSimplicialSet& Y) {
    const int td = Y.topdim();
    Layers layers(static_cast<size_t>(std::max(td, -1) + 2));
    DecIds ids;
    std::set<std::string> used;

    for (int v = 0; v < Y.count(0); ++v) {
        ids.base[{0, v}] = {-1, v};
        layers[0].push_back({unique_name(Y.gen_name({0, v}), used), {}});
    }
    for (int n = 0; n <= td; ++n) {
        auto& layer = layers[static_cast<size_t>(n + 1)];
        for (int i = 0; i < Y.count(n + 1); ++i) {
            ids.base[{n + 1, i}] = {n, static_cast<int>(layer.size())};
            layer.push_back({unique_name(Y.gen_name({n + 1, i}), used), {}});
        }
        for (int i = 0; i < Y.count(n); ++i) {
            ids.tilde[{n, i}] = {n, static_cast<int>(layer.size())};
            layer.push_back({unique_name(Y.gen_name({n, i}) + "~", used), {}});
        }
    }

    auto fill_faces = [&](GeneratorId dec_id, const SimplexRef& y) {
        const int n = dec_id.dim;
        Generator& g = layers[static_cast<size_t>(n + 1)][static_cast<size_t>(dec_id.index)];
        for (int i = 0; i <= std::max(n, 0); ++i) {
            SimplexRef z = act(Y, y, MonotoneMap::coface(Ordinal(n + 1), i));
            g.faces.push_back(dec_normalize(ids, z));
        }
    };
    for (const auto& [ygen, dec_id] : ids.base)
        if (dec_id.dim >= 0)
            fill_faces(dec_id, Y.nondeg(ygen));
    for (const auto& [ygen, dec_id] : ids.tilde) {
        SimplexRef last_degeneracy{
            DegeneracyOp(Ordinal(ygen.dim + 1), {ygen.dim}), ygen};
        fill_faces(dec_id, last_degeneracy);
    }

    return {"Dec(" + Y.name() + ")", AugKind::explicit_, std::move(layers)};
}

// ---------------------------------------------------------------------------
// Simplicial maps

SimplicialMap::SimplicialMap(std::shared_ptr<const AugSimplicialSet> src,
                             std::shared_ptr<const AugSimplicialSet> dst,
                             std::vector<std::vector<SimplexRef>> assign)
    : src_(std::move(src)), dst_(std::move(dst)), assign_(std::move(assign)) {
    if (static_cast<int>(assign_.size()) != src_->topdim() + 2)
        throw structure_error("SimplicialMap: assignment layer count mismatch");
    for (int d = -1; d <= src_->topdim(); ++d) {
        const auto& layer = assign_[static_cast<size_t>(d + 1)];
        if (static_cast<int>(layer.size()) != src_->count(d))
            throw structure_error("SimplicialMap: assignment count mismatch at dim " +
                                  std::to_string(d));
        for (const SimplexRef& r : layer) {
            if (r.dim() != d)
                throw structure_error("SimplicialMap: image dimension mismatch");
            dst_->gen(r.gen);
            if (r.gen.dim != r.op.dst().n)
                throw structure_error("SimplicialMap: inconsistent image reference");
        }
    }
}

const SimplexRef& SimplicialMap::image(GeneratorId id) const {
    return assign_.at(static_cast<size_t>(id.dim + 1)).at(static_cast<size_t>(id.index));
}

SimplexRef SimplicialMap::apply(const SimplexRef& x) const {
    return act(*dst_, image(x.gen), x.op.as_map());
}

bool SimplicialMap::commutes() const {
    for (GeneratorId id : src_->all_generators()) {
        if (id.dim < 0)
            continue;
        for (int i = 0; i < static_cast<int>(src_->faces(id).size()); ++i) {
            SimplexRef lhs = apply(src_->face(id, i));
            SimplexRef rhs = face_of(*dst_, image(id), i);
            if (lhs != rhs)
                return false;
        }
    }
    return true;
}

bool SimplicialMap::is_isomorphism() const {
    if (src_->topdim() != dst_->topdim())
        return false;
    for (int d = -1; d <= src_->topdim(); ++d) {
        if (src_->count(d) != dst_->count(d))
            return false;
        std::vector<char> hit(static_cast<size_t>(dst_->count(d)), 0);
        for (int i = 0; i < src_->count(d); ++i) {
            const SimplexRef& r = image({d, i});
            if (!r.is_nondegenerate())
                return false;
            if (hit[static_cast<size_t>(r.gen.index)])
                return false;
            hit[static_cast<size_t>(r.gen.index)] = 1;
        }
    }
    return commutes();
}

SimplicialMap SimplicialMap::inverse() const {
    if (!is_isomorphism())
        throw std::invalid_argument("inverse: map is not an isomorphism");
    std::vector<std::vector<SimplexRef>> assign(static_cast<size_t>(dst_->topdim() + 2));
    for (int d = -1; d <= dst_->topdim(); ++d)
        assign[static_cast<size_t>(d + 1)].resize(static_cast<size_t>(dst_->count(d)),
                                                  SimplexRef{DegeneracyOp::identity(Ordinal(d)), {d, 0}});
    for (int d = -1; d <= src_->topdim(); ++d)
        for (int i = 0; i < src_->count(d); ++i) {
            const SimplexRef& r = image({d, i});
            assign[static_cast<size_t>(d + 1)][static_cast<size_t>(r.gen.index)] =
                src_->nondeg({d, i});
        }
    return {dst_, src_, std::move(assign)};
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!(f.dst() == g.src()))
        throw std::invalid_argument("compose: middle objects differ");
    std::vector<std::vector<SimplexRef>> assign(static_cast<size_t>(f.src().topdim() + 2));
    for (int d = -1; d <= f.src().topdim(); ++d)
        for (int i = 0; i < f.src().count(d); ++i)
            assign[static_cast<size_t>(d + 1)].push_back(g.apply(f.image({d, i})));
    return {f.src_ptr(), g.dst_ptr(), std::move(assign)};
}

// ---------------------------------------------------------------------------
// Hom enumeration and isomorphism search

std::vector<SimplexRef> simplices_of_dim(const AugSimplicialSet& X, int dim) {
    std::vector<SimplexRef> out;
    for (int m = -1; m <= std::min(dim, X.topdim()); ++m)
        for (int i = 0; i < X.count(m); ++i)
            for (DegeneracyOp& op : all_degeneracy_ops(Ordinal(dim), Ordinal(m)))
                out.push_back({std::move(op), {m, i}});
    return out;
}

namespace {

struct MapSearch {
    const AugSimplicialSet& X;
    const AugSimplicialSet& Y;
    std::vector<GeneratorId> order;
    std::vector<std::vector<SimplexRef>> assign;
    std::vector<std::vector<SimplexRef>> candidates_by_dim;  // index dim + 1
    std::vector<SimplicialMap>* results = nullptr;
    std::shared_ptr<const AugSimplicialSet> xp, yp;

    SimplexRef mapped(const SimplexRef& r) const {
        const SimplexRef& im =
            assign[static_cast<size_t>(r.gen.dim + 1)][static_cast<size_t>(r.gen.index)];
        return act(Y, im, r.op.as_map());
    }

    bool admissible(GeneratorId g, const SimplexRef& cand) {
        if (g.dim < 0)
            return true;
        for (int i = 0; i < static_cast<int>(X.faces(g).size()); ++i) {
            if (mapped(X.face(g, i)) != face_of(Y, cand, i))
                return false;
        }
        return true;
    }

    void run(size_t depth) {
        if (depth == order.size()) {
            results->emplace_back(xp, yp, assign);
            return;
        }
        GeneratorId g = order[depth];
        for (const SimplexRef& cand : candidates_by_dim[static_cast<size_t>(g.dim + 1)]) {
            assign[static_cast<size_t>(g.dim + 1)][static_cast<size_t>(g.index)] = cand;
            if (admissible(g, cand))
                run(depth + 1);
        }
    }
};

}  // namespace

std::vector<SimplicialMap> enumerate_maps(const AugSimplicialSet& X, const AugSimplicialSet& Y) {
    std::vector<SimplicialMap> results;
    MapSearch search{X, Y, X.all_generators(), {}, {}, &results,
                     std::make_shared<AugSimplicialSet>(X), std::make_shared<AugSimplicialSet>(Y)};
    search.assign.resize(static_cast<size_t>(X.topdim() + 2));
    search.candidates_by_dim.resize(static_cast<size_t>(X.topdim() + 2));
    for (int d = -1; d <= X.topdim(); ++d) {
        search.assign[static_cast<size_t>(d + 1)].resize(
            static_cast<size_t>(X.count(d)),
            SimplexRef{DegeneracyOp::identity(Ordinal(d)), {d, 0}});
        search.candidates_by_dim[static_cast<size_t>(d + 1)] = simplices_of_dim(Y, d);
        if (X.count(d) > 0 && search.candidates_by_dim[static_cast<size_t>(d + 1)].empty())
            return results;  // no possible image in this dimension
    }
    search.run(0);
    return results;
}

long long internal_hom_level(const AugSimplicialSet& X, const AugSimplicialSet& Y, int n) {
    if (n < 0)
        throw std::invalid_argument("internal_hom_level: n must be >= 0");
    AugSimplicialSet shifted = Y;
    for (int k = 0; k <= n; ++k)
        shifted = dec(shifted);
    return static_cast<long long>(enumerate_maps(X, shifted).size());
}

namespace {

// Isomorphism-invariant fingerprint: own face shape plus the multiset of
// incoming face references.
std::vector<std::string> fingerprints(const AugSimplicialSet& X) {
    std::map<GeneratorId, std::multiset<std::string>> incoming;
    std::vector<std::string> out;
    for (GeneratorId id : X.all_generators())
        for (int i = 0; i < static_cast<int>(X.faces(id).size()); ++i) {
            const SimplexRef& r = X.face(id, i);
            incoming[r.gen].insert(std::to_string(id.dim) + ":" + std::to_string(i) + ":" +
                                   collapsed_text(r.op));
        }
    for (GeneratorId id : X.all_generators()) {
        std::ostringstream os;
        os << id.dim << '|';
        for (const SimplexRef& r : X.faces(id))
            os << collapsed_text(r.op) << '>' << r.gen.dim << ';';
        os << '|';
        for (const std::string& s : incoming[id])
            os << s << ';';
        out.push_back(os.str());
    }
    return out;
}

struct IsoSearch {
    const AugSimplicialSet& X;
    const AugSimplicialSet& Y;
    std::vector<std::string> fx, fy;  // fingerprints in all_generators() order
    std::vector<std::vector<int>> image;   // [dim+1][i] -> Y index or -1
    std::vector<std::vector<char>> used;   // [dim+1][j]
    std::vector<GeneratorId> order;

    int fp_index(const AugSimplicialSet& Z, GeneratorId id) const {
        int k = 0;
        for (int d = -1; d < id.dim; ++d)
            k += Z.count(d);
        return k + id.index;
    }

    bool admissible(GeneratorId g, int j) {
        if (fx[static_cast<size_t>(fp_index(X, g))] != fy[static_cast<size_t>(fp_index(Y, {g.dim, j}))])
            return false;
        for (int i = 0; i < static_cast<int>(X.faces(g).size()); ++i) {
            const SimplexRef& rx = X.face(g, i);
            const SimplexRef& ry = Y.face({g.dim, j}, i);
            if (rx.op != ry.op)
                return false;
            if (image[static_cast<size_t>(rx.gen.dim + 1)][static_cast<size_t>(rx.gen.index)] !=
                ry.gen.index)
                return false;
        }
        return true;
    }

    bool run(size_t depth) {
        if (depth == order.size())
            return true;
        GeneratorId g = order[depth];
        for (int j = 0; j < Y.count(g.dim); ++j) {
            if (used[static_cast<size_t>(g.dim + 1)][static_cast<size_t>(j)])
                continue;
            if (!admissible(g, j))
                continue;
            image[static_cast<size_t>(g.dim + 1)][static_cast<size_t>(g.index)] = j;
            used[static_cast<size_t>(g.dim + 1)][static_cast<size_t>(j)] = 1;
            if (run(depth + 1))
                return true;
            image[static_cast<size_t>(g.dim + 1)][static_cast<size_t>(g.index)] = -1;
            used[static_cast<size_t>(g.dim + 1)][static_cast<size_t>(j)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<SimplicialMap> are_isomorphic(const AugSimplicialSet& X, const AugSimplicialSet& Y) {
    if (X.topdim() != Y.topdim())
        return std::nullopt;
    for (int d = -1; d <= X.topdim(); ++d)
        if (X.count(d) != Y.count(d))
            return std::nullopt;

    IsoSearch search{X, Y, fingerprints(X), fingerprints(Y), {}, {}, X.all_generators()};
    {
        auto mx = search.fx;
        auto my = search.fy;
        std::sort(mx.begin(), mx.end());
        std::sort(my.begin(), my.end());
        if (mx != my)
            return std::nullopt;
    }
    search.image.resize(static_cast<size_t>(X.topdim() + 2));
    search.used.resize(static_cast<size_t>(X.topdim() + 2));
    for (int d = -1; d <= X.topdim(); ++d) {
        search.image[static_cast<size_t>(d + 1)].assign(static_cast<size_t>(X.count(d)), -1);
        search.used[static_cast<size_t>(d + 1)].assign(static_cast<size_t>(Y.count(d)), 0);
    }
    if (!search.run(0))
        return std::nullopt;

    std::vector<std::vector<SimplexRef>> assign(static_cast<size_t>(X.topdim() + 2));
    for (int d = -1; d <= X.topdim(); ++d)
        for (int i = 0; i < X.count(d); ++i)
            assign[static_cast<size_t>(d + 1)].push_back(
                {DegeneracyOp::identity(Ordinal(d)),
                 {d, search.image[static_cast<size_t>(d + 1)][static_cast<size_t>(i)]}});
    return SimplicialMap(std::make_shared<AugSimplicialSet>(X),
                         std::make_shared<AugSimplicialSet>(Y), std::move(assign));
}

// ---------------------------------------------------------------------------
// Validation and censuses

ValidationReport validate(const AugSimplicialSet& X) {
    ValidationReport report;
    for (int d = 1; d <= X.topdim(); ++d)
        for (int g = 0; g < X.count(d); ++g) {
            SimplexRef top = X.nondeg({d, g});
            for (int j = 1; j <= d; ++j)
                for (int i = 0; i < j; ++i) {
                    SimplexRef lhs = face_of(X, face_of(X, top, j), i);
                    SimplexRef rhs = face_of(X, face_of(X, top, i), j - 1);
                    if (lhs != rhs)
                        report.violations.push_back({{d, g}, i, j, lhs, rhs});
                }
        }
    return report;
}

std::string ref_text(const AugSimplicialSet& X, const SimplexRef& r) {
    return collapsed_text(r.op) + " " + X.gen_name(r.gen);
}

std::string ValidationReport::to_text(const AugSimplicialSet& X) const {
    std::ostringstream os;
    for (const Violation& v : violations) {
        os << "identity violation on " << X.gen_name(v.gen) << ": d" << v.i << " d" << v.j
           << " = [" << ref_text(X, v.lhs) << "] but d" << v.j - 1 << " d" << v.i << " = ["
           << ref_text(X, v.rhs) << "]";
        if (v.gen.dim == 1 && v.i == 0 && v.j == 1)
            os << " (augmentation coherence q d0 = q d1)";
        os << '\n';
    }
    return os.str();
}

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

}  // namespace

std::vector<long long> f_vector(const AugSimplicialSet& X, bool nondegenerate_only,
                                int up_to_dim) {
    const int top = X.topdim();
    const int dmax = up_to_dim == -2 ? top : up_to_dim;
    std::vector<long long> out;
    if (dmax < -1)
        return out;
    for (int d = -1; d <= dmax; ++d) {
        if (nondegenerate_only) {
            out.push_back(X.count(d));
            continue;
        }
        long long total = 0;
        if (d == -1)
            total = X.count(-1);
        else
            for (int m = 0; m <= std::min(d, top); ++m)
                total += static_cast<long long>(X.count(m)) * binom(d, d - m);
        out.push_back(total);
    }
    return out;
}

}  // namespace augss
