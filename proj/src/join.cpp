#include "augss/join.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace augss {

namespace {

using Generator = AugSimplicialSet::Generator;
using Layers = std::vector<std::vector<Generator>>;

void require_valid(const AugSimplicialSet& X) {
    ValidationReport report = validate(X);
    if (!report.clean())
        throw std::invalid_argument("join: input '" + X.name() +
                                    "' violates simplicial identities:\n" + report.to_text(X));
}

}  // namespace

JoinResult join_indexed(const AugSimplicialSet& X, const AugSimplicialSet& Y) {
    require_valid(X);
    require_valid(Y);

    JoinResult result;
    const int top = X.topdim() + Y.topdim() + 1;
    Layers layers(static_cast<size_t>(std::max(top, -1) + 2));
    std::set<std::string> used;

    for (int n = -1; n <= top; ++n)
        for (int a = -1; a <= X.topdim(); ++a) {
            const int b = n - 1 - a;
            if (b < -1 || b > Y.topdim())
                continue;
            for (int xi = 0; xi < X.count(a); ++xi)
                for (int yi = 0; yi < Y.count(b); ++yi) {
                    GeneratorId id{n, static_cast<int>(layers[static_cast<size_t>(n + 1)].size())};
                    GeneratorId xg{a, xi}, yg{b, yi};
                    result.pair_to_id[{xg, yg}] = id;
                    result.id_to_pair[id] = {xg, yg};
                    layers[static_cast<size_t>(n + 1)].push_back(
                        {unique_name("(" + X.gen_name(xg) + "|" + Y.gen_name(yg) + ")", used),
                         {}});
                }
        }

    for (const auto& [id, pair] : result.id_to_pair) {
        const int n = id.dim;
        if (n < 0)
            continue;
        const auto& [xg, yg] = pair;
        const int a = xg.dim;
        Generator& g = layers[static_cast<size_t>(n + 1)][static_cast<size_t>(id.index)];
        const int nfaces = n == 0 ? 1 : n + 1;
        for (int i = 0; i < nfaces; ++i) {
            if (i <= a) {
                const SimplexRef& r = X.face(xg, i);
                MonotoneMap lift = ordinal_sum(r.op.as_map(), MonotoneMap::identity(Ordinal(yg.dim)));
                g.faces.push_back({DegeneracyOp::from_map(lift),
                                   result.pair_to_id.at({r.gen, yg})});
            } else {
                const SimplexRef& r = Y.face(yg, i - a - 1);
                MonotoneMap lift = ordinal_sum(MonotoneMap::identity(Ordinal(a)), r.op.as_map());
                g.faces.push_back({DegeneracyOp::from_map(lift),
                                   result.pair_to_id.at({xg, r.gen})});
            }
        }
    }

    AugKind kind = (X.aug_kind() == AugKind::trivial && Y.aug_kind() == AugKind::trivial)
                       ? AugKind::trivial
                       : AugKind::explicit_;
    result.sset = AugSimplicialSet("(" + X.name() + "|" + Y.name() + ")", kind, std::move(layers));
    return result;
}

AugSimplicialSet join(const AugSimplicialSet& X, const AugSimplicialSet& Y) {
    return join_indexed(X, Y).sset;
}

std::vector<long long> join_f_vector(const AugSimplicialSet& X, const AugSimplicialSet& Y) {
    const int top = X.topdim() + Y.topdim() + 1;
    std::vector<long long> out;
    for (int n = -1; n <= std::max(top, -1); ++n) {
        long long total = 0;
        for (int a = -1; a <= X.topdim(); ++a)
            total += static_cast<long long>(X.count(a)) * Y.count(n - 1 - a);
        out.push_back(total);
    }
    return out;
}

AugSimplicialSet sphere(int n) {
    if (n < 0)
        throw std::invalid_argument("sphere: n must be >= 0");
    AugSimplicialSet out = zero_sphere();
    for (int k = 1; k <= n; ++k)
        out = join(out, zero_sphere());
    Layers layers;
    for (int d = -1; d <= out.topdim(); ++d) {
        layers.emplace_back();
        for (int i = 0; i < out.count(d); ++i)
            layers.back().push_back({out.gen_name({d, i}),
                                     {out.faces({d, i}).begin(), out.faces({d, i}).end()}});
    }
    return {"S" + std::to_string(n), out.aug_kind(), std::move(layers)};
}

SimplicialMap assoc_witness(const AugSimplicialSet& X, const AugSimplicialSet& Y,
                            const AugSimplicialSet& Z) {
    JoinResult xy = join_indexed(X, Y);
    JoinResult xy_z = join_indexed(xy.sset, Z);
    JoinResult yz = join_indexed(Y, Z);
    JoinResult x_yz = join_indexed(X, yz.sset);

    std::vector<std::vector<SimplexRef>> assign(static_cast<size_t>(xy_z.sset.topdim() + 2));
    for (int d = -1; d <= xy_z.sset.topdim(); ++d)
        for (int i = 0; i < xy_z.sset.count(d); ++i) {
            const auto& [pq, zg] = xy_z.id_to_pair.at({d, i});
            const auto& [xg, yg] = xy.id_to_pair.at(pq);
            GeneratorId target = x_yz.pair_to_id.at({xg, yz.pair_to_id.at({yg, zg})});
            assign[static_cast<size_t>(d + 1)].push_back(
                {DegeneracyOp::identity(Ordinal(d)), target});
        }
    return {std::make_shared<AugSimplicialSet>(std::move(xy_z.sset)),
            std::make_shared<AugSimplicialSet>(std::move(x_yz.sset)), std::move(assign)};
}

}  // namespace augss
