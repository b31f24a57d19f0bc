#include "augss/ordinal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace augss {

Ordinal::Ordinal(int value) : n(value) {
    if (n < -1)
        throw std::invalid_argument("Ordinal: n must be >= -1");
}

MonotoneMap::MonotoneMap(Ordinal src, Ordinal dst, std::vector<int> values)
    : src_(src), dst_(dst), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != src_.size())
        throw std::invalid_argument("MonotoneMap: value count must be src.n + 1");
    if (dst_.n == -1 && src_.n != -1)
        throw std::invalid_argument("MonotoneMap: no map to [-1] except from [-1]");
    int prev = 0;
    for (size_t k = 0; k < values_.size(); ++k) {
        int v = values_[k];
        if (v < 0 || v > dst_.n)
            throw std::invalid_argument("MonotoneMap: value out of range");
        if (k > 0 && v < prev)
            throw std::invalid_argument("MonotoneMap: values must be weakly increasing");
        prev = v;
    }
}

MonotoneMap MonotoneMap::identity(Ordinal o) {
    std::vector<int> values(static_cast<size_t>(o.size()));
    for (int k = 0; k <= o.n; ++k)
        values[static_cast<size_t>(k)] = k;
    return {o, o, std::move(values)};
}

MonotoneMap MonotoneMap::coface(Ordinal dst, int i) {
    if (dst.n < 0 || i < 0 || i > dst.n)
        throw std::invalid_argument("coface: need 0 <= i <= n, n >= 0");
    std::vector<int> values(static_cast<size_t>(dst.n));
    for (int k = 0; k < dst.n; ++k)
        values[static_cast<size_t>(k)] = k < i ? k : k + 1;
    return {Ordinal(dst.n - 1), dst, std::move(values)};
}

MonotoneMap MonotoneMap::codegeneracy(Ordinal dst, int i) {
    if (dst.n < 0 || i < 0 || i > dst.n)
        throw std::invalid_argument("codegeneracy: need 0 <= i <= n, n >= 0");
    std::vector<int> values(static_cast<size_t>(dst.n + 2));
    for (int k = 0; k <= dst.n + 1; ++k)
        values[static_cast<size_t>(k)] = k <= i ? k : k - 1;
    return {Ordinal(dst.n + 1), dst, std::move(values)};
}

MonotoneMap MonotoneMap::from_empty(Ordinal dst) {
    return {Ordinal(-1), dst, {}};
}

bool MonotoneMap::is_identity() const {
    if (src_ != dst_)
        return false;
    for (int k = 0; k <= src_.n; ++k)
        if (values_[static_cast<size_t>(k)] != k)
            return false;
    return true;
}

bool MonotoneMap::is_injective() const {
    for (size_t k = 1; k < values_.size(); ++k)
        if (values_[k] == values_[k - 1])
            return false;
    return true;
}

bool MonotoneMap::is_surjective() const {
    if (dst_.n == -1)
        return true;
    if (src_.n == -1)
        return false;
    if (values_.front() != 0 || values_.back() != dst_.n)
        return false;
    for (size_t k = 1; k < values_.size(); ++k)
        if (values_[k] - values_[k - 1] > 1)
            return false;
    return true;
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (f.dst() != g.src())
        throw std::invalid_argument("compose: f.dst must equal g.src");
    std::vector<int> values(f.values().size());
    for (size_t k = 0; k < values.size(); ++k)
        values[k] = g(f.values()[k]);
    return {f.src(), g.dst(), std::move(values)};
}

Ordinal ordinal_sum(Ordinal a, Ordinal b) {
    return Ordinal(a.n + b.n + 1);
}

MonotoneMap ordinal_sum(const MonotoneMap& f0, const MonotoneMap& f1) {
    const int p0 = f0.src().n;
    const int q0 = f0.dst().n;
    Ordinal src = ordinal_sum(f0.src(), f1.src());
    Ordinal dst = ordinal_sum(f0.dst(), f1.dst());
    std::vector<int> values(static_cast<size_t>(src.size()));
    for (int k = 0; k <= src.n; ++k) {
        if (k <= p0)
            values[static_cast<size_t>(k)] = f0(k);
        else
            values[static_cast<size_t>(k)] = f1(k - p0 - 1) + q0 + 1;
    }
    return {src, dst, std::move(values)};
}

DegeneracyOp::DegeneracyOp(Ordinal src, std::vector<int> collapsed)
    : src_(src), dst_(src.n - static_cast<int>(collapsed.size())), collapsed_(std::move(collapsed)) {
    int prev = -1;
    for (int j : collapsed_) {
        if (j < 0 || j > src_.n - 1)
            throw std::invalid_argument("DegeneracyOp: collapsed position out of range");
        if (j <= prev)
            throw std::invalid_argument("DegeneracyOp: collapsed positions must strictly increase");
        prev = j;
    }
}

DegeneracyOp DegeneracyOp::identity(Ordinal o) {
    return {o, {}};
}

DegeneracyOp DegeneracyOp::from_map(const MonotoneMap& m) {
    if (!m.is_surjective())
        throw std::invalid_argument("DegeneracyOp: map is not surjective");
    std::vector<int> collapsed;
    for (int k = 0; k < m.src().n; ++k)
        if (m(k) == m(k + 1))
            collapsed.push_back(k);
    return {m.src(), std::move(collapsed)};
}

DegeneracyOp DegeneracyOp::collapse_to_point(Ordinal src) {
    if (src.n < 0)
        throw std::invalid_argument("collapse_to_point: src must be >= [0]");
    std::vector<int> collapsed(static_cast<size_t>(src.n));
    for (int j = 0; j < src.n; ++j)
        collapsed[static_cast<size_t>(j)] = j;
    return {src, std::move(collapsed)};
}

MonotoneMap DegeneracyOp::as_map() const {
    std::vector<int> values(static_cast<size_t>(src_.size()));
    size_t c = 0;
    int v = 0;
    for (int k = 0; k <= src_.n; ++k) {
        values[static_cast<size_t>(k)] = v;
        if (c < collapsed_.size() && collapsed_[c] == k)
            ++c;
        else
            ++v;
    }
    return {src_, dst_, std::move(values)};
}

EpiMonoFactorization epi_mono_factor(const MonotoneMap& f) {
    std::vector<int> image = f.values();
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::vector<int> collapsed;
    for (int k = 0; k < f.src().n; ++k)
        if (f(k) == f(k + 1))
            collapsed.push_back(k);
    DegeneracyOp epi(f.src(), std::move(collapsed));
    MonotoneMap mono(epi.dst(), f.dst(), std::move(image));
    return {std::move(epi), std::move(mono)};
}

namespace {

// k-element subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m)
        return out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == m - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

std::vector<MonotoneMap> all_monotone_maps(Ordinal src, Ordinal dst) {
    std::vector<MonotoneMap> out;
    if (src.n == -1) {
        if (dst.n >= -1)
            out.push_back(MonotoneMap::from_empty(dst));
        return out;
    }
    if (dst.n == -1)
        return out;
    std::vector<int> v(static_cast<size_t>(src.size()), 0);
    while (true) {
        out.emplace_back(src, dst, v);
        int i = src.n;
        while (i >= 0 && v[static_cast<size_t>(i)] == dst.n)
            --i;
        if (i < 0)
            break;
        int next = v[static_cast<size_t>(i)] + 1;
        for (int j = i; j <= src.n; ++j)
            v[static_cast<size_t>(j)] = next;
    }
    return out;
}

std::vector<MonotoneMap> all_injections(Ordinal src, Ordinal dst) {
    std::vector<MonotoneMap> out;
    if (src.n == -1) {
        out.push_back(MonotoneMap::from_empty(dst));
        return out;
    }
    for (auto& s : subsets(dst.size(), src.size()))
        out.emplace_back(src, dst, s);
    return out;
}

std::vector<DegeneracyOp> all_degeneracy_ops(Ordinal src, Ordinal dst) {
    std::vector<DegeneracyOp> out;
    if (dst.n > src.n || dst.n < -1)
        return out;
    if (dst.n == -1 && src.n != -1)
        return out;
    for (auto& s : subsets(std::max(src.n, 0), src.n - dst.n))
        out.emplace_back(src, s);
    return out;
}

std::string to_text(const MonotoneMap& m) {
    std::ostringstream os;
    os << "map " << m.src().n << ' ' << m.dst().n << " :";
    for (int v : m.values())
        os << ' ' << v;
    return os.str();
}

std::string to_text(const DegeneracyOp& op) {
    std::ostringstream os;
    os << "deg " << op.src().n << ' ' << op.dst().n << " :";
    for (int j : op.collapsed())
        os << ' ' << j;
    return os.str();
}

namespace {

std::vector<int> parse_tail(std::istringstream& is, const char* what) {
    std::string colon;
    if (!(is >> colon) || colon != ":")
        throw std::invalid_argument(std::string(what) + ": expected ':'");
    std::vector<int> xs;
    int x;
    while (is >> x)
        xs.push_back(x);
    return xs;
}

}  // namespace

MonotoneMap parse_monotone_map(const std::string& line) {
    std::istringstream is(line);
    std::string tag;
    int src, dst;
    if (!(is >> tag >> src >> dst) || tag != "map")
        throw std::invalid_argument("parse_monotone_map: bad header");
    return {Ordinal(src), Ordinal(dst), parse_tail(is, "parse_monotone_map")};
}

DegeneracyOp parse_degeneracy_op(const std::string& line) {
    std::istringstream is(line);
    std::string tag;
    int src, dst;
    if (!(is >> tag >> src >> dst) || tag != "deg")
        throw std::invalid_argument("parse_degeneracy_op: bad header");
    DegeneracyOp op(Ordinal(src), parse_tail(is, "parse_degeneracy_op"));
    if (op.dst().n != dst)
        throw std::invalid_argument("parse_degeneracy_op: dst inconsistent with positions");
    return op;
}

std::string collapsed_text(const DegeneracyOp& op) {
    if (op.is_identity())
        return "-";
    std::string out;
    for (size_t k = 0; k < op.collapsed().size(); ++k) {
        if (k > 0)
            out += ',';
        out += std::to_string(op.collapsed()[k]);
    }
    return out;
}

std::vector<int> parse_collapsed(const std::string& token) {
    if (token == "-")
        return {};
    std::vector<int> out;
    size_t pos = 0;
    while (pos < token.size()) {
        size_t next = token.find(',', pos);
        std::string part = token.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("parse_collapsed: bad position '" + part + "'");
        out.push_back(std::stoi(part));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

}  // namespace augss
