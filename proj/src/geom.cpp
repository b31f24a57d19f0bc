#include "augss/geom.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace augss {

BaryPoint BaryPoint::vertex(int m, int i) {
    if (m < 0 || i < 0 || i > m)
        throw std::invalid_argument("BaryPoint::vertex: bad indices");
    BaryPoint pt;
    pt.coords.assign(static_cast<size_t>(m + 1), Rational(0));
    pt.coords[static_cast<size_t>(i)] = 1;
    return pt;
}

bool BaryPoint::valid() const {
    if (coords.empty())
        return false;
    Rational sum = 0;
    for (const Rational& c : coords) {
        if (c < 0)
            return false;
        sum += c;
    }
    return sum == 1;
}

bool JoinPoint::valid() const {
    return r >= 0 && s >= 0 && r + s == 1 && left.valid() && right.valid();
}

bool JoinPoint::same_point(const JoinPoint& other) const {
    if (r != other.r || s != other.s)
        return false;
    if (r != 0 && !(left == other.left))
        return false;
    if (s != 0 && !(right == other.right))
        return false;
    return true;
}

BaryPoint join_to_simplex(const JoinPoint& pt) {
    if (!pt.valid())
        throw std::invalid_argument("join_to_simplex: invalid join point");
    BaryPoint out;
    out.coords.reserve(pt.left.coords.size() + pt.right.coords.size());
    for (const Rational& c : pt.left.coords)
        out.coords.push_back(pt.r * c);
    for (const Rational& c : pt.right.coords)
        out.coords.push_back(pt.s * c);
    return out;
}

namespace {

constexpr int kDenominator = 1000;

BaryPoint random_bary(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> pick(0, kDenominator);
    BaryPoint pt;
    pt.coords.resize(static_cast<size_t>(m + 1));
    long long total = 0;
    while (total == 0) {
        total = 0;
        for (auto& c : pt.coords) {
            int w = pick(rng);
            c = w;
            total += w;
        }
    }
    for (auto& c : pt.coords)
        c /= total;
    return pt;
}

std::string bary_text(const BaryPoint& pt) {
    std::ostringstream os;
    os << '(';
    for (size_t k = 0; k < pt.coords.size(); ++k) {
        if (k)
            os << ',';
        os << pt.coords[k];
    }
    os << ')';
    return os.str();
}

std::string point_text(const JoinPoint& pt) {
    std::ostringstream os;
    os << "r=" << pt.r << " u=" << bary_text(pt.left) << " s=" << pt.s << " v="
       << bary_text(pt.right);
    return os.str();
}

}  // namespace

std::string GeomReport::to_text() const {
    std::ostringstream os;
    os << "samples " << checked_samples << " of " << requested_samples << '\n';
    for (const std::string& line : vertex_table)
        os << "vertex " << line << '\n';
    os << "failures " << failures.size() << '\n';
    for (const std::string& f : failures)
        os << "  " << f << '\n';
    return os.str();
}

GeomReport verify_affine_simplex(int p, int q, int samples, std::uint64_t seed) {
    if (p < 0 || q < 0)
        throw std::invalid_argument("verify_affine_simplex: p, q must be >= 0");
    GeomReport report;
    report.requested_samples = samples;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, kDenominator);
    std::uniform_int_distribution<int> mode(0, 15);

    std::vector<JoinPoint> points;
    points.reserve(static_cast<size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        JoinPoint pt;
        int m = mode(rng);
        if (m == 0)
            pt.r = 0;  // exercise the "u ignored" identification
        else if (m == 1)
            pt.r = 1;  // exercise the "v ignored" identification
        else
            pt.r = Rational(pick(rng), kDenominator);
        pt.s = 1 - pt.r;
        pt.left = random_bary(rng, p);
        pt.right = random_bary(rng, q);
        points.push_back(std::move(pt));
    }

    for (const JoinPoint& pt : points) {
        BaryPoint image = join_to_simplex(pt);
        ++report.checked_samples;
        if (image.dim() != p + q + 1) {
            report.failures.push_back("image of " + point_text(pt) + " has wrong dimension");
            continue;
        }
        if (!image.valid())
            report.failures.push_back("image of " + point_text(pt) +
                                      " leaves the simplex: " + bary_text(image));
    }

    // Injectivity modulo the ignore rules: equal images must come from
    // identified points.
    {
        std::map<std::vector<Rational>, size_t> seen;
        for (size_t k = 0; k < points.size(); ++k) {
            BaryPoint image = join_to_simplex(points[k]);
            auto [it, inserted] = seen.emplace(image.coords, k);
            if (!inserted && !points[k].same_point(points[it->second]))
                report.failures.push_back("collision: " + point_text(points[it->second]) +
                                          " and " + point_text(points[k]) + " share image " +
                                          bary_text(image));
        }
    }

    for (int i = 0; i <= p; ++i) {
        JoinPoint v{1, 0, BaryPoint::vertex(p, i), BaryPoint::vertex(q, 0)};
        BaryPoint image = join_to_simplex(v);
        bool ok = image == BaryPoint::vertex(p + q + 1, i);
        report.vertex_table.push_back("left " + std::to_string(i) + " -> e" + std::to_string(i) +
                                      (ok ? " ok" : " MISMATCH"));
        if (!ok)
            report.failures.push_back("left vertex " + std::to_string(i) +
                                      " does not map to the standard basis");
    }
    for (int j = 0; j <= q; ++j) {
        JoinPoint v{0, 1, BaryPoint::vertex(p, 0), BaryPoint::vertex(q, j)};
        BaryPoint image = join_to_simplex(v);
        bool ok = image == BaryPoint::vertex(p + q + 1, p + 1 + j);
        report.vertex_table.push_back("right " + std::to_string(j) + " -> e" +
                                      std::to_string(p + 1 + j) + (ok ? " ok" : " MISMATCH"));
        if (!ok)
            report.failures.push_back("right vertex " + std::to_string(j) +
                                      " does not map to the standard basis");
    }
    return report;
}

}  // namespace augss
