#include "gfh/spectop.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gfh {

const std::vector<Simplex> SimplicialComplex::empty_;

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
    std::vector<std::set<Simplex>> by_dim;
    for (Simplex f : facets) {
        std::sort(f.begin(), f.end());
        if (f.empty()) throw InvalidInput("empty facet");
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InvalidInput("facet repeats a vertex");
        if (f.size() > 20) throw InvalidInput("facet dimension too large");
        const int n = static_cast<int>(f.size());
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Simplex s;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(f[static_cast<std::size_t>(i)]);
            if (by_dim.size() < s.size()) by_dim.resize(s.size());
            by_dim[s.size() - 1].insert(std::move(s));
        }
    }
    SimplicialComplex k;
    for (auto& s : by_dim) k.simplices_.emplace_back(s.begin(), s.end());
    return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    if (k < 0 || k > dim()) return empty_;
    return simplices_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& s : simplices_) f.push_back(s.size());
    return f;
}

std::size_t SimplicialComplex::index(const Simplex& s) const {
    const auto& list = simplices(static_cast<int>(s.size()) - 1);
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) throw InvalidInput("simplex not in complex");
    return static_cast<std::size_t>(it - list.begin());
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (int k = dim(); k >= 0; --k)
        for (const auto& s : simplices(k)) {
            bool covered = false;
            for (const auto& t : simplices(k + 1))
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                    covered = true;
                    break;
                }
            if (!covered) out.push_back(s);
        }
    return out;
}

ChainComplex SimplicialComplex::chain_complex() const {
    std::vector<std::size_t> dims = f_vector();
    ChainComplex c(0, dims);
    for (int k = 1; k <= dim(); ++k) {
        SparseMatrix m(count(k - 1), count(k));
        const auto& cells = simplices(k);
        for (std::size_t j = 0; j < cells.size(); ++j)
            for (std::size_t i = 0; i < cells[j].size(); ++i) {
                Simplex face = cells[j];
                face.erase(face.begin() + static_cast<long>(i));
                m.add(index(face), j, (i % 2) ? -1 : 1);
            }
        c.set_boundary(k, std::move(m));
    }
    return c;
}

GradedRanks SimplicialComplex::reduced_homology(Ring ring) const {
    if (simplices_.empty()) return {};
    GradedRanks h = homology(chain_complex(), ring);
    GroupRank h0 = h.get(0);
    h0.free -= 1;
    h.set(0, h0);
    return h;
}

SimplicialComplex SimplicialComplex::suspension() const {
    const auto& verts = simplices(0);
    const int top = verts.empty() ? 0 : verts.back()[0] + 1;
    std::vector<Simplex> out;
    for (auto f : facets())
        for (int pole : {top, top + 1}) {
            Simplex g = f;
            g.push_back(pole);
            out.push_back(g);
        }
    if (out.empty()) out = {{top}, {top + 1}};
    return from_facets(out);
}

SimplicialComplex SimplicialComplex::barycentric_subdivision() const {
    std::map<Simplex, int> id;
    for (const auto& layer : simplices_)
        for (const auto& s : layer) id.emplace(s, static_cast<int>(id.size()));
    std::vector<Simplex> out;
    std::function<void(const Simplex&, Simplex&)> chains = [&](const Simplex& s, Simplex& flag) {
        flag.push_back(id.at(s));
        if (s.size() == 1) {
            out.push_back(flag);
        } else {
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex t = s;
                t.erase(t.begin() + static_cast<long>(i));
                chains(t, flag);
            }
        }
        flag.pop_back();
    };
    for (const auto& f : facets()) {
        Simplex flag;
        chains(f, flag);
    }
    return from_facets(out);
}

SimplicialComplex SimplicialComplex::stellar_subdivision(const Simplex& s0) const {
    Simplex s = s0;
    std::sort(s.begin(), s.end());
    index(s);
    const int v = simplices(0).back()[0] + 1;
    std::vector<Simplex> out;
    for (const auto& f : facets()) {
        if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) {
            out.push_back(f);
            continue;
        }
        Simplex rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex g = rest;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) g.push_back(s[j]);
            g.push_back(v);
            out.push_back(g);
        }
    }
    return from_facets(out);
}

SimplicialComplex SimplicialComplex::wedge(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.simplices_.empty()) return b;
    if (b.simplices_.empty()) return a;
    std::map<int, int> ra, rb;
    for (const auto& v : a.simplices(0)) ra.emplace(v[0], static_cast<int>(ra.size()));
    const int base = static_cast<int>(ra.size());
    for (const auto& v : b.simplices(0)) {
        const int next = rb.empty() ? 0 : base + static_cast<int>(rb.size()) - 1;
        rb.emplace(v[0], next);
    }
    std::vector<Simplex> out;
    for (const auto* m : {&ra, &rb}) {
        const SimplicialComplex& src = m == &ra ? a : b;
        for (auto f : src.facets()) {
            for (int& x : f) x = m->at(x);
            out.push_back(f);
        }
    }
    return from_facets(out);
}

SimplicialComplex sphere_complex(int n) {
    if (n < 0) throw InvalidInput("sphere dimension must be nonnegative");
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= n + 1; ++skip) {
        Simplex f;
        for (int v = 0; v <= n + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex torus_complex() {
    std::vector<Simplex> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex rp2_complex() {
    return SimplicialComplex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                           {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

SimplicialComplex cp2_complex() {
    // minimal nine-vertex triangulation
    return SimplicialComplex::from_facets(
        {{1, 2, 4, 5, 6}, {2, 3, 5, 6, 4}, {3, 1, 6, 4, 5}, {1, 2, 4, 5, 9}, {2, 3, 5, 6, 7}, {3, 1, 6, 4, 8},
         {2, 3, 6, 4, 9}, {3, 1, 4, 5, 7}, {1, 2, 5, 6, 8}, {3, 1, 5, 6, 9}, {1, 2, 6, 4, 7}, {2, 3, 4, 5, 8},
         {4, 5, 7, 8, 9}, {5, 6, 8, 9, 7}, {6, 4, 9, 7, 8}, {4, 5, 7, 8, 3}, {5, 6, 8, 9, 1}, {6, 4, 9, 7, 2},
         {5, 6, 9, 7, 3}, {6, 4, 7, 8, 1}, {4, 5, 8, 9, 2}, {6, 4, 8, 9, 3}, {4, 5, 9, 7, 1}, {5, 6, 7, 8, 2},
         {7, 8, 1, 2, 3}, {8, 9, 2, 3, 1}, {9, 7, 3, 1, 2}, {7, 8, 1, 2, 6}, {8, 9, 2, 3, 4}, {9, 7, 3, 1, 5},
         {8, 9, 3, 1, 6}, {9, 7, 1, 2, 4}, {7, 8, 2, 3, 5}, {9, 7, 2, 3, 6}, {7, 8, 3, 1, 4}, {8, 9, 1, 2, 5}});
}

}  // namespace gfh
