#include "gfh/spectop.hpp"

#include <map>

namespace gfh {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const Cochain& c) {
    Bits b((c.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] & 1) b[i / 64] |= std::uint64_t{1} << (i % 64);
    return b;
}

Cochain from_bits(const Bits& b, std::size_t n) {
    Cochain c(n, 0);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint8_t>((b[i / 64] >> (i % 64)) & 1);
    return c;
}

long lowest_bit(const Bits& b) {
    for (std::size_t w = 0; w < b.size(); ++w)
        if (b[w]) return static_cast<long>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(b[w])));
    return -1;
}

void xor_into(Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

/// Row echelon form keyed by the lowest set bit.
struct Echelon {
    std::map<long, Bits> rows;

    Bits reduce(Bits v) const {
        for (long p = lowest_bit(v); p >= 0;) {
            auto it = rows.find(p);
            if (it == rows.end()) return v;
            xor_into(v, it->second);
            p = lowest_bit(v);
        }
        return v;
    }
    bool insert(const Bits& v) {
        Bits r = reduce(v);
        const long p = lowest_bit(r);
        if (p < 0) return false;
        rows.emplace(p, std::move(r));
        return true;
    }
};

// Coboundary of the indicator cochain of one (n)-simplex, as a vector on (n+1)-simplices.
Bits coboundary_of_simplex(const SimplicialComplex& k, int n, std::size_t idx,
                           const std::vector<std::vector<std::size_t>>& cofaces) {
    Bits b((k.count(n + 1) + 63) / 64, 0);
    for (std::size_t j : cofaces[idx]) b[j / 64] ^= std::uint64_t{1} << (j % 64);
    (void)n;
    return b;
}

std::vector<std::vector<std::size_t>> coface_table(const SimplicialComplex& k, int n) {
    std::vector<std::vector<std::size_t>> cof(k.count(n));
    const auto& up = k.simplices(n + 1);
    for (std::size_t j = 0; j < up.size(); ++j)
        for (std::size_t i = 0; i < up[j].size(); ++i) {
            Simplex f = up[j];
            f.erase(f.begin() + static_cast<long>(i));
            cof[k.index(f)].push_back(j);
        }
    return cof;
}

Echelon coboundaries(const SimplicialComplex& k, int n) {
    Echelon e;
    if (n <= 0) return e;
    auto cof = coface_table(k, n - 1);
    for (std::size_t i = 0; i < k.count(n - 1); ++i) e.insert(coboundary_of_simplex(k, n - 1, i, cof));
    return e;
}

std::vector<Bits> cocycles(const SimplicialComplex& k, int n) {
    const std::size_t dim = k.count(n), words = (dim + 63) / 64;
    auto cof = coface_table(k, n);
    // eliminate images while tracking the combination that produced them
    std::map<long, std::pair<Bits, Bits>> piv;
    std::vector<Bits> kernel;
    for (std::size_t i = 0; i < dim; ++i) {
        Bits img = coboundary_of_simplex(k, n, i, cof);
        Bits combo(words, 0);
        combo[i / 64] |= std::uint64_t{1} << (i % 64);
        for (long p = lowest_bit(img); p >= 0; p = lowest_bit(img)) {
            auto it = piv.find(p);
            if (it == piv.end()) break;
            xor_into(img, it->second.first);
            xor_into(combo, it->second.second);
        }
        const long p = lowest_bit(img);
        if (p < 0) kernel.push_back(std::move(combo));
        else piv.emplace(p, std::make_pair(std::move(img), std::move(combo)));
    }
    return kernel;
}

void check_cochain(const SimplicialComplex& k, int n, const Cochain& c) {
    if (c.size() != k.count(n)) throw InvalidInput("cochain size does not match the number of simplices");
}

}  // namespace

std::vector<Cochain> cohomology_basis_mod2(const SimplicialComplex& k, int n) {
    std::vector<Cochain> out;
    if (n < 0 || n > k.dim()) return out;
    Echelon span = coboundaries(k, n);
    if (n == 0) {
        // reduced cohomology: the constant cochain is excluded
        span.insert(to_bits(Cochain(k.count(0), 1)));
    }
    for (const Bits& z : cocycles(k, n))
        if (span.insert(z)) out.push_back(from_bits(z, k.count(n)));
    return out;
}

bool is_coboundary_mod2(const SimplicialComplex& k, int n, const Cochain& c) {
    check_cochain(k, n, c);
    Bits r = coboundaries(k, n).reduce(to_bits(c));
    return lowest_bit(r) < 0;
}

Cochain cup_square(const SimplicialComplex& k, int n, const Cochain& x) {
    check_cochain(k, n, x);
    Cochain out(k.count(2 * n), 0);
    const auto& top = k.simplices(2 * n);
    for (std::size_t j = 0; j < top.size(); ++j) {
        const Simplex front(top[j].begin(), top[j].begin() + n + 1);
        const Simplex back(top[j].begin() + n, top[j].end());
        out[j] = static_cast<std::uint8_t>(x[k.index(front)] & x[k.index(back)]);
    }
    return out;
}

Cochain bockstein(const SimplicialComplex& k, int n, const Cochain& x) {
    check_cochain(k, n, x);
    Cochain out(k.count(n + 1), 0);
    const auto& up = k.simplices(n + 1);
    for (std::size_t j = 0; j < up.size(); ++j) {
        long v = 0;
        for (std::size_t i = 0; i < up[j].size(); ++i) {
            Simplex f = up[j];
            f.erase(f.begin() + static_cast<long>(i));
            const long xi = x[k.index(f)] & 1;
            v += (i % 2) ? -xi : xi;
        }
        if (v % 2 != 0) throw InvalidInput("bockstein needs a mod-2 cocycle");
        out[j] = static_cast<std::uint8_t>(((v / 2) % 2 + 2) % 2);
    }
    return out;
}

}  // namespace gfh
