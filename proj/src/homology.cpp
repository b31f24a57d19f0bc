#include "augss/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace augss {

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("IntegerMatrix: negative shape");
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Int& IntegerMatrix::at(int r, int c) {
    return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

const Int& IntegerMatrix::at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& e) { return e == 0; });
}

void IntegerMatrix::swap_rows(int a, int b) {
    for (int c = 0; c < cols_; ++c)
        std::swap(at(a, c), at(b, c));
}

void IntegerMatrix::swap_cols(int a, int b) {
    for (int r = 0; r < rows_; ++r)
        std::swap(at(r, a), at(r, b));
}

void IntegerMatrix::add_row(int target, int source, const Int& factor) {
    for (int c = 0; c < cols_; ++c)
        at(target, c) += factor * at(source, c);
}

void IntegerMatrix::add_col(int target, int source, const Int& factor) {
    for (int r = 0; r < rows_; ++r)
        at(r, target) += factor * at(r, source);
}

void IntegerMatrix::negate_row(int r) {
    for (int c = 0; c < cols_; ++c)
        at(r, c) = -at(r, c);
}

void IntegerMatrix::negate_col(int c) {
    for (int r = 0; r < rows_; ++r)
        at(r, c) = -at(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
    IntegerMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

namespace {

// Minimal-absolute-value pivot in the trailing submatrix, ties row-major.
bool find_pivot(const IntegerMatrix& D, int t, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int r = t; r < D.rows(); ++r)
        for (int c = t; c < D.cols(); ++c) {
            const Int& e = D.at(r, c);
            if (e == 0)
                continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = r;
                pc = c;
            }
        }
    return found;
}

bool pivot_is_lone(const IntegerMatrix& D, int t) {
    for (int r = t + 1; r < D.rows(); ++r)
        if (D.at(r, t) != 0)
            return false;
    for (int c = t + 1; c < D.cols(); ++c)
        if (D.at(t, c) != 0)
            return false;
    return true;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& M) {
    SmithResult res;
    res.D = M;
    res.U = IntegerMatrix::identity(M.rows());
    res.V = IntegerMatrix::identity(M.cols());
    IntegerMatrix& D = res.D;

    const int steps = std::min(M.rows(), M.cols());
    for (int t = 0; t < steps; ++t) {
        int pr = t, pc = t;
        if (!find_pivot(D, t, pr, pc))
            break;
        D.swap_rows(t, pr);
        res.U.swap_rows(t, pr);
        D.swap_cols(t, pc);
        res.V.swap_cols(t, pc);

        while (true) {
            for (int r = t + 1; r < D.rows(); ++r) {
                if (D.at(r, t) == 0)
                    continue;
                Int q = D.at(r, t) / D.at(t, t);
                D.add_row(r, t, -q);
                res.U.add_row(r, t, -q);
            }
            for (int c = t + 1; c < D.cols(); ++c) {
                if (D.at(t, c) == 0)
                    continue;
                Int q = D.at(t, c) / D.at(t, t);
                D.add_col(c, t, -q);
                res.V.add_col(c, t, -q);
            }
            if (!pivot_is_lone(D, t)) {
                // Truncated division left remainders; re-pick the smaller pivot.
                find_pivot(D, t, pr, pc);
                D.swap_rows(t, pr);
                res.U.swap_rows(t, pr);
                D.swap_cols(t, pc);
                res.V.swap_cols(t, pc);
                continue;
            }
            // Enforce the divisibility chain: the pivot must divide every
            // entry of the trailing block.
            int br = -1, bc = -1;
            for (int r = t + 1; r < D.rows() && br < 0; ++r)
                for (int c = t + 1; c < D.cols(); ++c)
                    if (D.at(r, c) % D.at(t, t) != 0) {
                        br = r;
                        bc = c;
                        break;
                    }
            if (br < 0)
                break;
            D.add_row(t, br, 1);
            res.U.add_row(t, br, 1);
        }
        if (D.at(t, t) < 0) {
            D.negate_row(t);
            res.U.negate_row(t);
        }
    }
    for (int t = 0; t < steps; ++t)
        if (D.at(t, t) != 0) {
            ++res.rank;
            res.divisors.push_back(D.at(t, t));
        }
    return res;
}

ChainComplex chain_complex(const AugSimplicialSet& X, bool reduced) {
    ValidationReport report = validate(X);
    if (!report.clean())
        throw std::invalid_argument("chain_complex: '" + X.name() +
                                    "' violates simplicial identities:\n" + report.to_text(X));

    ChainComplex cc;
    cc.reduced = reduced;
    const int top = X.topdim();
    for (int k = 0; k <= top; ++k)
        cc.ranks.push_back(X.count(k));

    cc.boundaries.resize(cc.ranks.size());
    if (!cc.ranks.empty()) {
        cc.boundaries[0] = IntegerMatrix(reduced ? X.count(-1) : 0, cc.ranks[0]);
        if (reduced)
            for (int v = 0; v < X.count(0); ++v)
                cc.boundaries[0].at(X.face({0, v}, 0).gen.index, v) = 1;
    }
    for (int k = 1; k <= top; ++k) {
        IntegerMatrix d(cc.ranks[static_cast<size_t>(k - 1)], cc.ranks[static_cast<size_t>(k)]);
        for (int g = 0; g < X.count(k); ++g) {
            int sign = 1;
            for (int i = 0; i <= k; ++i, sign = -sign) {
                const SimplexRef& r = X.face({k, g}, i);
                if (r.is_nondegenerate())
                    d.at(r.gen.index, g) += sign;
            }
        }
        cc.boundaries[static_cast<size_t>(k)] = std::move(d);
    }
    for (int k = 1; k <= top; ++k) {
        if (cc.boundaries[static_cast<size_t>(k - 1)].rows() == 0)
            continue;
        if (!(cc.boundaries[static_cast<size_t>(k - 1)] * cc.boundaries[static_cast<size_t>(k)])
                 .is_zero())
            throw std::logic_error("chain_complex: d d != 0 in degree " + std::to_string(k));
    }
    return cc;
}

const HomologyGroup& HomologyResult::at(int k) const {
    static const HomologyGroup zero;
    if (k < 0 || k >= static_cast<int>(groups.size()))
        return zero;
    return groups[static_cast<size_t>(k)];
}

std::string HomologyResult::to_text() const {
    std::ostringstream os;
    for (size_t k = 0; k < groups.size(); ++k) {
        os << 'H' << k << " = Z^" << groups[k].betti;
        for (const Int& t : groups[k].torsion)
            os << " + Z/" << t;
        os << '\n';
    }
    return os.str();
}

HomologyResult homology(const AugSimplicialSet& X, bool reduced) {
    ChainComplex cc = chain_complex(X, reduced);
    HomologyResult out;
    const int top = static_cast<int>(cc.ranks.size()) - 1;
    std::vector<SmithResult> snf(cc.boundaries.size());
    for (size_t k = 0; k < cc.boundaries.size(); ++k)
        snf[k] = smith_normal_form(cc.boundaries[k]);
    for (int k = 0; k <= top; ++k) {
        HomologyGroup g;
        const int rank_in = k < top ? snf[static_cast<size_t>(k + 1)].rank : 0;
        g.betti = cc.ranks[static_cast<size_t>(k)] - snf[static_cast<size_t>(k)].rank - rank_in;
        if (k < top)
            for (const Int& d : snf[static_cast<size_t>(k + 1)].divisors)
                if (d > 1)
                    g.torsion.push_back(d);
        out.groups.push_back(std::move(g));
    }
    return out;
}

long long euler_characteristic(const AugSimplicialSet& X, bool reduced) {
    long long chi = 0;
    for (int k = 0; k <= X.topdim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(X.count(k));
    if (reduced)
        chi -= X.count(-1);
    return chi;
}

}  // namespace augss
