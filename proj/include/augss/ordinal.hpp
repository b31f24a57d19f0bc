#pragma once

// The augmented simplex category: finite ordinals [n] = {0 < ... < n}
// (including the empty ordinal [-1]), monotone maps, composition,
// epi-mono factorization, and the ordinal sum.

#include <compare>
#include <string>
#include <vector>

namespace augss {

/// Object of the augmented simplex category. [-1] is the empty ordinal.
struct Ordinal {
    int n = -1;

    Ordinal() = default;
    explicit Ordinal(int value);

    /// Number of elements, n + 1.
    int size() const { return n + 1; }

    auto operator<=>(const Ordinal&) const = default;
};

/// Weakly increasing map [src] -> [dst], stored as its full value sequence.
class MonotoneMap {
public:
    MonotoneMap(Ordinal src, Ordinal dst, std::vector<int> values);

    static MonotoneMap identity(Ordinal o);
    /// Coface delta_i : [n-1] -> [n], the injection missing i.  dst = [n], 0 <= i <= n.
    static MonotoneMap coface(Ordinal dst, int i);
    /// Codegeneracy sigma_i : [n+1] -> [n], repeating i.  dst = [n], 0 <= i <= n.
    static MonotoneMap codegeneracy(Ordinal dst, int i);
    /// The unique map [-1] -> dst.
    static MonotoneMap from_empty(Ordinal dst);

    Ordinal src() const { return src_; }
    Ordinal dst() const { return dst_; }
    const std::vector<int>& values() const { return values_; }
    int operator()(int k) const { return values_.at(static_cast<size_t>(k)); }

    bool is_identity() const;
    bool is_injective() const;
    bool is_surjective() const;

    auto operator<=>(const MonotoneMap&) const = default;

private:
    Ordinal src_, dst_;
    std::vector<int> values_;
};

/// Composite g . f (first f, then g).  Throws if f.dst != g.src.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// Ordinal sum on objects: [a] or [b] = [a + b + 1].  [-1] is the unit.
Ordinal ordinal_sum(Ordinal a, Ordinal b);

/// Ordinal sum on maps: block f0 on 0..p0, block f1 shifted by q0 + 1 above.
MonotoneMap ordinal_sum(const MonotoneMap& f0, const MonotoneMap& f1);

/// Surjection of the simplex category in canonical form: the set of
/// positions j with eta(j) = eta(j+1) determines eta uniquely.
class DegeneracyOp {
public:
    DegeneracyOp(Ordinal src, std::vector<int> collapsed);

    static DegeneracyOp identity(Ordinal o);
    /// Canonical form of a surjective monotone map.  Throws if not surjective.
    static DegeneracyOp from_map(const MonotoneMap& m);
    /// The unique surjection [n] ->> [0], n >= 0.
    static DegeneracyOp collapse_to_point(Ordinal src);

    Ordinal src() const { return src_; }
    Ordinal dst() const { return dst_; }
    const std::vector<int>& collapsed() const { return collapsed_; }

    MonotoneMap as_map() const;
    bool is_identity() const { return collapsed_.empty(); }

    auto operator<=>(const DegeneracyOp&) const = default;

private:
    Ordinal src_, dst_;
    std::vector<int> collapsed_;
};

/// f = mono . epi, the unique surjection-injection factorization in the
/// augmented simplex category.
struct EpiMonoFactorization {
    DegeneracyOp epi;
    MonotoneMap mono;
};

EpiMonoFactorization epi_mono_factor(const MonotoneMap& f);

/// All monotone maps src -> dst, lexicographic by value sequence.
std::vector<MonotoneMap> all_monotone_maps(Ordinal src, Ordinal dst);

/// All injections src -> dst, lexicographic.
std::vector<MonotoneMap> all_injections(Ordinal src, Ordinal dst);

/// All surjections src ->> dst in canonical form, collapsed sets lexicographic.
std::vector<DegeneracyOp> all_degeneracy_ops(Ordinal src, Ordinal dst);

// Text forms: "map <src> <dst> : v0 v1 ..." and "deg <src> <dst> : j0 j1 ..."
std::string to_text(const MonotoneMap& m);
std::string to_text(const DegeneracyOp& op);
MonotoneMap parse_monotone_map(const std::string& line);
DegeneracyOp parse_degeneracy_op(const std::string& line);

/// Collapsed positions as a single token: "-" for the identity, else
/// comma-separated ascending positions ("0,2").
std::string collapsed_text(const DegeneracyOp& op);
/// Inverse of collapsed_text; throws on malformed tokens.
std::vector<int> parse_collapsed(const std::string& token);

}  // namespace augss
