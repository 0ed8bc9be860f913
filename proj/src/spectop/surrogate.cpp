#include "gfh/spectop.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gfh {

SpectrumSurrogate suspension_spectrum(SimplicialComplex k, std::string label, std::optional<std::vector<int>> splitting) {
    return {std::move(k), 0, std::move(label), std::move(splitting)};
}

SpectrumSurrogate named_surrogate(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'S' &&
        std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); })) {
        const int n = std::stoi(name.substr(1));
        if (n > 12) throw InvalidInput("sphere dimension above 12 is not supported");
        return suspension_spectrum(sphere_complex(n), name, std::vector<int>{n});
    }
    // stable splitting of the torus: Sigma T^2 is a wedge S^2 v S^2 v S^3
    if (name == "T2") return suspension_spectrum(torus_complex(), name, std::vector<int>{1, 1, 2});
    if (name == "RP2") return suspension_spectrum(rp2_complex(), name);
    if (name == "CP2") return suspension_spectrum(cp2_complex(), name);
    throw InvalidInput("unknown complex '" + name + "' (expected S<n>, T2, RP2 or CP2)");
}

GradedRanks spec_homology(const SpectrumSurrogate& x, Ring ring) {
    return x.cells.reduced_homology(ring).shifted(-x.shift);
}

SpectrumSurrogate shift(const SpectrumSurrogate& x, int n) {
    SpectrumSurrogate y = x;
    y.shift -= n;
    return y;
}

SpectrumSurrogate wedge(const SpectrumSurrogate& x, const SpectrumSurrogate& y) {
    const int m = std::max(x.shift, y.shift);
    auto lift = [m](const SpectrumSurrogate& s) {
        SimplicialComplex k = s.cells;
        for (int i = s.shift; i < m; ++i) k = k.suspension();
        std::optional<std::vector<int>> split = s.splitting;
        if (split)
            for (int& d : *split) d += m - s.shift;
        return std::make_pair(k, split);
    };
    auto [kx, sx] = lift(x);
    auto [ky, sy] = lift(y);
    SpectrumSurrogate out;
    out.cells = SimplicialComplex::wedge(kx, ky);
    out.shift = m;
    out.label = x.label + "+" + y.label;
    if (sx && sy) {
        std::vector<int> dims = *sx;
        dims.insert(dims.end(), sy->begin(), sy->end());
        out.splitting = dims;
    }
    return out;
}

const std::vector<std::string>& stable_stems() {
    static const std::vector<std::string> table{"Z", "Z/2", "Z/2", "Z/24", "0", "0", "Z/2", "Z/240", "Z/2 x Z/2"};
    return table;
}

SphereWedge as_sphere_wedge(const SpectrumSurrogate& x) {
    if (!x.splitting)
        throw InvalidInput("'" + x.label + "' has no known splitting into spheres; homotopy lookup unavailable");
    return {*x.splitting, -x.shift};
}

std::string pi_s_lookup(const SphereWedge& w, int k) {
    std::vector<std::string> parts;
    for (int d : w.dims) {
        const int stem = k - (d + w.shift);
        if (stem > kStemHorizon) {
            std::ostringstream os;
            os << "table horizon exceeded: stem " << stem << " of S^" << d + w.shift << " lies beyond "
               << kStemHorizon;
            throw TableHorizonExceeded(os.str());
        }
        if (stem < 0) continue;
        const std::string& g = stable_stems()[static_cast<std::size_t>(stem)];
        if (g != "0") parts.push_back(g);
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

std::string SuspensionVerdict::summary() const {
    switch (kind) {
        case Kind::Possible: return "possible";
        case Kind::Obstructed: return "obstructed: " + reason;
        case Kind::Inconclusive: return "inconclusive: " + reason;
    }
    return "inconclusive";
}

SuspensionVerdict suspension_obstruction(const SpectrumSurrogate& x) {
    SuspensionVerdict v;
    std::size_t cells = 0;
    for (std::size_t c : x.cells.f_vector()) cells += c;
    if (cells > 200000) {
        v.reason = "cochain structure too large to examine";
        return v;
    }
    for (Ring r : {Ring::Z, Ring::Z2}) {
        const GradedRanks h = spec_homology(x, r);
        for (const auto& [deg, g] : h.groups())
            if (deg <= 0) {
                v.kind = SuspensionVerdict::Kind::Obstructed;
                v.reason = "nonzero homology in degree " + std::to_string(deg);
                v.homology_level = true;
                v.degree = deg;
                return v;
            }
    }
    for (int n = 1; n <= x.cells.dim(); ++n) {
        const int d = n - x.shift;
        for (const Cochain& c : cohomology_basis_mod2(x.cells, n)) {
            if (n > d && 2 * n <= x.cells.dim() && !is_coboundary_mod2(x.cells, 2 * n, cup_square(x.cells, n, c))) {
                v.kind = SuspensionVerdict::Kind::Obstructed;
                v.reason = "Sq" + std::to_string(n) + " instability";
                v.degree = d;
                v.operation = n;
                return v;
            }
            if (1 > d && n < x.cells.dim() && !is_coboundary_mod2(x.cells, n + 1, bockstein(x.cells, n, c))) {
                v.kind = SuspensionVerdict::Kind::Obstructed;
                v.reason = "Sq1 instability";
                v.degree = d;
                v.operation = 1;
                return v;
            }
        }
    }
    v.kind = SuspensionVerdict::Kind::Possible;
    return v;
}

namespace {

std::vector<std::string> tokens(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput("expected an integer for " + what + ", got '" + s + "'");
}

SpectrumSurrogate parse_sum(const std::string& literal) {
    std::optional<SpectrumSurrogate> acc;
    std::size_t start = 0;
    while (start <= literal.size()) {
        const std::size_t plus = literal.find('+', start);
        const std::string part = literal.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        if (part.empty()) throw InvalidInput("empty summand in '" + literal + "'");
        SpectrumSurrogate s = named_surrogate(part);
        acc = acc ? wedge(*acc, s) : s;
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return *acc;
}

}  // namespace

SpectrumSurrogate parse_surrogate(const std::string& literal) {
    auto t = tokens(literal);
    if (t.empty()) throw InvalidInput("empty spectrum literal");
    SpectrumSurrogate x = parse_sum(t[0]);
    if (t.size() == 3 && t[1] == "@shift") return shift(x, parse_int(t[2], "@shift"));
    if (t.size() != 1) throw InvalidInput("expected '<summands> [@shift n]', got '" + literal + "'");
    return x;
}

SpectrumExpression parse_expression(const std::string& text) {
    auto t = tokens(text);
    SpectrumExpression e;
    int pending = 0;
    bool have_value = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string& w = t[i];
        auto arg = [&](const char* what) {
            if (i + 1 >= t.size()) throw InvalidInput(std::string("missing argument after ") + what);
            return parse_int(t[++i], what);
        };
        if (w == "desusp") pending -= arg("desusp");
        else if (w == "susp") pending += arg("susp");
        else if (w == "@shift") {
            if (!have_value) throw InvalidInput("@shift must follow a complex");
            e.value = shift(e.value, arg("@shift"));
        } else if (w == "homology") e.commands.push_back({SpectrumCommand::Kind::Homology, 0});
        else if (w == "pi") e.commands.push_back({SpectrumCommand::Kind::Pi, arg("pi")});
        else if (w == "obstruct") e.commands.push_back({SpectrumCommand::Kind::Obstruct, 0});
        else {
            if (have_value) throw InvalidInput("unexpected token '" + w + "'");
            e.value = parse_sum(w);
            have_value = true;
        }
    }
    if (!have_value) throw InvalidInput("expression names no complex");
    e.value = shift(e.value, pending);
    if (e.commands.empty()) e.commands.push_back({SpectrumCommand::Kind::Homology, 0});
    return e;
}

}  // namespace gfh
