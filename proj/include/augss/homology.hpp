#pragma once

// Normalized integral chain complexes of finite augmented simplicial sets
// and their homology via Smith normal form.  All arithmetic is exact with
// unbounded integers; intermediate entry growth in the reduction must never
// overflow silently.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "augss/sset.hpp"

namespace augss {

using Int = boost::multiprecision::cpp_int;

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols);
    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c);
    const Int& at(int r, int c) const;

    bool is_zero() const;
    bool operator==(const IntegerMatrix&) const = default;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void add_row(int target, int source, const Int& factor);  // row[target] += factor * row[source]
    void add_col(int target, int source, const Int& factor);
    void negate_row(int r);
    void negate_col(int c);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... .
struct SmithResult {
    IntegerMatrix D, U, V;
    int rank = 0;
    std::vector<Int> divisors;  // the nonzero diagonal, divisibility-chained
};

SmithResult smith_normal_form(const IntegerMatrix& M);

/// Boundaries of the normalized complex: a face whose EZ form carries a
/// non-identity operator contributes zero.  boundaries[k] is d_k for
/// k >= 1; boundaries[0] is the augmentation matrix when reduced, else
/// the zero map out of degree 0.
struct ChainComplex {
    bool reduced = false;
    std::vector<int> ranks;                 // ranks[k] = non-degenerate k-simplices
    std::vector<IntegerMatrix> boundaries;  // same length as ranks
};

/// Refuses (std::invalid_argument) when validate(X) is not clean; checks
/// d d = 0 on the result.
ChainComplex chain_complex(const AugSimplicialSet& X, bool reduced);

struct HomologyGroup {
    int betti = 0;
    std::vector<Int> torsion;  // entries > 1 in divisibility order
    bool operator==(const HomologyGroup&) const = default;
};

struct HomologyResult {
    std::vector<HomologyGroup> groups;  // index = dimension

    const HomologyGroup& at(int k) const;
    /// One line per dimension: "H<k> = Z^<betti>" plus " + Z/<t>" per torsion entry.
    std::string to_text() const;
    bool operator==(const HomologyResult&) const = default;
};

HomologyResult homology(const AugSimplicialSet& X, bool reduced = false);

/// Alternating sum of the non-degenerate census over dims >= 0; the reduced
/// variant lets the dim -1 layer contribute with sign -1.
long long euler_characteristic(const AugSimplicialSet& X, bool reduced = false);

}  // namespace augss
