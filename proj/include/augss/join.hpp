#pragma once

// The combinatorial join of augmented simplicial sets, induced by the
// ordinal sum: non-degenerate n-simplices of X (.) Y are the pairs of
// generators (x, y) with dim x + dim y + 1 = n (the dim -1 layer is
// X_{-1} x Y_{-1}), and faces act block-wise through the operator lifts
// ordinal_sum(eta, id) / ordinal_sum(id, eta).

#include <map>
#include <utility>
#include <vector>

#include "augss/sset.hpp"

namespace augss {

struct JoinResult {
    AugSimplicialSet sset;
    std::map<std::pair<GeneratorId, GeneratorId>, GeneratorId> pair_to_id;
    std::map<GeneratorId, std::pair<GeneratorId, GeneratorId>> id_to_pair;
};

JoinResult join_indexed(const AugSimplicialSet& X, const AugSimplicialSet& Y);

AugSimplicialSet join(const AugSimplicialSet& X, const AugSimplicialSet& Y);

/// Non-degenerate census of the join, computed from the input censuses
/// alone (convolution over splittings); indexed from dim -1.
std::vector<long long> join_f_vector(const AugSimplicialSet& X, const AugSimplicialSet& Y);

/// S^n: the left-associated join of n + 1 copies of the 0-sphere
/// (the boundary of the (n+1)-cross-polytope).
AugSimplicialSet sphere(int n);

/// The reassociation isomorphism (X (.) Y) (.) Z -> X (.) (Y (.) Z),
/// ((x, y), z) |-> (x, (y, z)) on generators.
SimplicialMap assoc_witness(const AugSimplicialSet& X, const AugSimplicialSet& Y,
                            const AugSimplicialSet& Z);

}  // namespace augss
