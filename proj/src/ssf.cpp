#include "augss/ssf.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

namespace augss {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t)
        toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line, const char* what) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ssf_error(line, std::string("expected integer for ") + what);
    }
    if (pos != tok.size())
        throw ssf_error(line, std::string("expected integer for ") + what);
    return value;
}

struct PendingGen {
    std::string name;
    int dim = 0;
    int line = 0;
    std::vector<bool> have;
    std::vector<SimplexRef> faces;
};

}  // namespace

AugSimplicialSet parse_ssf(std::istream& in) {
    std::string line;
    int lineno = 0;
    int stage = 0;  // 0: header, 1: set, 2: aug, 3: gens, 4: faces
    std::string set_name;
    std::vector<std::string> aug_names;
    std::vector<PendingGen> gens;
    std::map<std::string, int> gen_index;   // name -> index into gens
    std::map<std::string, int> aug_index;   // name -> dim -1 index
    std::map<std::string, char> all_names;

    auto declare = [&](const std::string& name, int ln) {
        if (name.empty())
            throw ssf_error(ln, "empty name");
        if (!all_names.emplace(name, 1).second)
            throw ssf_error(ln, "duplicate name '" + name + "'");
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto toks = tokens_of(line);
        if (toks.empty())
            continue;
        const std::string& kw = toks[0];

        if (stage == 0) {
            if (toks.size() != 2 || kw != "ssf" || toks[1] != "1")
                throw ssf_error(lineno, "expected header 'ssf 1'");
            stage = 1;
            continue;
        }
        if (kw == "set") {
            if (stage != 1)
                throw ssf_error(lineno, "misplaced 'set' line");
            if (toks.size() != 2)
                throw ssf_error(lineno, "expected 'set <name>'");
            set_name = toks[1];
            stage = 2;
            continue;
        }
        if (kw == "aug") {
            if (stage != 2)
                throw ssf_error(lineno, "misplaced 'aug' line");
            for (size_t k = 1; k < toks.size(); ++k) {
                declare(toks[k], lineno);
                aug_index[toks[k]] = static_cast<int>(aug_names.size());
                aug_names.push_back(toks[k]);
            }
            stage = 3;
            continue;
        }
        if (kw == "gen") {
            if (stage != 3)
                throw ssf_error(lineno, "misplaced 'gen' line");
            if (toks.size() != 3)
                throw ssf_error(lineno, "expected 'gen <dim> <name>'");
            int dim = parse_int(toks[1], lineno, "generator dimension");
            if (dim < 0)
                throw ssf_error(lineno, "generator dimension must be >= 0");
            declare(toks[2], lineno);
            gen_index[toks[2]] = static_cast<int>(gens.size());
            PendingGen g;
            g.name = toks[2];
            g.dim = dim;
            g.line = lineno;
            int nfaces = dim == 0 ? 1 : dim + 1;
            g.have.assign(static_cast<size_t>(nfaces), false);
            g.faces.assign(static_cast<size_t>(nfaces),
                           SimplexRef{DegeneracyOp::identity(Ordinal(-1)), {-1, 0}});
            gens.push_back(std::move(g));
            continue;
        }
        if (kw == "face") {
            if (stage != 3 && stage != 4)
                throw ssf_error(lineno, "misplaced 'face' line");
            stage = 4;
            if (toks.size() != 6 || toks[3] != "=")
                throw ssf_error(lineno, "expected 'face <gen> <i> = <collapsed|-> <target>'");
            auto git = gen_index.find(toks[1]);
            if (git == gen_index.end())
                throw ssf_error(lineno, "unknown generator '" + toks[1] + "'");
            PendingGen& g = gens[static_cast<size_t>(git->second)];
            int i = parse_int(toks[2], lineno, "face index");
            if (i < 0 || i >= static_cast<int>(g.have.size()))
                throw ssf_error(lineno, "face index out of range for '" + g.name + "'");
            if (g.have[static_cast<size_t>(i)])
                throw ssf_error(lineno, "face " + std::to_string(i) + " of '" + g.name +
                                            "' given twice");
            std::vector<int> collapsed;
            try {
                collapsed = parse_collapsed(toks[4]);
            } catch (const std::exception& e) {
                throw ssf_error(lineno, e.what());
            }
            DegeneracyOp op = [&] {
                try {
                    return DegeneracyOp(Ordinal(g.dim - 1), collapsed);
                } catch (const std::exception& e) {
                    throw ssf_error(lineno, e.what());
                }
            }();
            GeneratorId target;
            if (auto ait = aug_index.find(toks[5]); ait != aug_index.end()) {
                target = {-1, ait->second};
            } else if (auto tit = gen_index.find(toks[5]); tit != gen_index.end()) {
                target = {gens[static_cast<size_t>(tit->second)].dim, tit->second};
            } else {
                throw ssf_error(lineno, "unknown face target '" + toks[5] + "'");
            }
            if (target.dim != op.dst().n)
                throw ssf_error(lineno, "face target '" + toks[5] + "' has dimension " +
                                            std::to_string(target.dim) + ", operator needs " +
                                            std::to_string(op.dst().n));
            g.have[static_cast<size_t>(i)] = true;
            g.faces[static_cast<size_t>(i)] = {std::move(op), target};
            continue;
        }
        throw ssf_error(lineno, "unknown directive '" + kw + "'");
    }
    if (stage == 0)
        throw ssf_error(lineno + 1, "truncated file: missing 'ssf 1' header");
    if (stage == 1)
        throw ssf_error(lineno + 1, "truncated file: missing 'set'");
    if (stage == 2)
        throw ssf_error(lineno + 1, "truncated file: missing 'aug'");

    for (const PendingGen& g : gens)
        for (size_t i = 0; i < g.have.size(); ++i)
            if (!g.have[i])
                throw ssf_error(g.line, "missing face " + std::to_string(i) + " of '" + g.name + "'");

    // Re-index per dimension in declaration order and translate references.
    int topdim = -1;
    for (const PendingGen& g : gens)
        topdim = std::max(topdim, g.dim);
    std::vector<std::vector<AugSimplicialSet::Generator>> layers(
        static_cast<size_t>(topdim + 2));
    for (const std::string& e : aug_names)
        layers[0].push_back({e, {}});
    std::vector<GeneratorId> placed(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
        auto& layer = layers[static_cast<size_t>(gens[k].dim + 1)];
        placed[k] = {gens[k].dim, static_cast<int>(layer.size())};
        layer.push_back({gens[k].name, {}});
    }
    for (size_t k = 0; k < gens.size(); ++k) {
        auto& g = layers[static_cast<size_t>(gens[k].dim + 1)][static_cast<size_t>(placed[k].index)];
        for (const SimplexRef& r : gens[k].faces) {
            GeneratorId target = r.gen;
            if (target.dim >= 0)
                target = placed[static_cast<size_t>(target.index)];
            g.faces.push_back({r.op, target});
        }
    }

    // A single augmentation element is exactly the trivial augmentation;
    // "canonical" is a constructor provenance marker the file does not carry.
    AugKind kind = aug_names.size() == 1 ? AugKind::trivial : AugKind::explicit_;
    try {
        return {set_name, kind, std::move(layers)};
    } catch (const structure_error& e) {
        throw ssf_error(lineno, e.what());
    }
}

AugSimplicialSet parse_ssf_text(const std::string& text) {
    std::istringstream is(text);
    return parse_ssf(is);
}

std::string print_ssf(const AugSimplicialSet& X) {
    std::ostringstream os;
    os << "ssf 1\n";
    os << "set " << (X.name().empty() ? "unnamed" : X.name()) << '\n';
    os << "aug";
    for (int i = 0; i < X.count(-1); ++i)
        os << ' ' << X.gen_name({-1, i});
    os << '\n';
    for (int d = 0; d <= X.topdim(); ++d)
        for (int i = 0; i < X.count(d); ++i)
            os << "gen " << d << ' ' << X.gen_name({d, i}) << '\n';
    for (int d = 0; d <= X.topdim(); ++d)
        for (int i = 0; i < X.count(d); ++i) {
            GeneratorId id{d, i};
            auto fs = X.faces(id);
            for (int k = 0; k < static_cast<int>(fs.size()); ++k)
                os << "face " << X.gen_name(id) << ' ' << k << " = "
                   << collapsed_text(fs[static_cast<size_t>(k)].op) << ' '
                   << X.gen_name(fs[static_cast<size_t>(k)].gen) << '\n';
        }
    return os.str();
}

}  // namespace augss
