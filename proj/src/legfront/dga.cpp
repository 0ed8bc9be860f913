#include "simulate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gfh {

namespace {

struct DiskState {
    std::size_t event;
    int lower, upper;
    std::vector<std::size_t> upper_corners, lower_corners;
};

// Boundary words of the resolved front, keyed by the event holding the
// positive corner. Each disk starts at a left cusp and is swept rightwards.
std::map<std::size_t, std::vector<std::vector<std::size_t>>> disk_words(const FrontDiagram& fd,
                                                                       std::size_t budget) {
    std::map<std::size_t, std::vector<std::vector<std::size_t>>> out;
    const auto& ev = fd.events;
    auto record = [&](std::size_t e, const DiskState& s) {
        std::vector<std::size_t> w(s.upper_corners.rbegin(), s.upper_corners.rend());
        w.insert(w.end(), s.lower_corners.begin(), s.lower_corners.end());
        out[e].push_back(std::move(w));
    };
    for (std::size_t start = 0; start < ev.size(); ++start) {
        if (ev[start].type != EventType::LeftCusp) continue;
        std::vector<DiskState> stack{{start + 1, ev[start].level, ev[start].level + 1, {}, {}}};
        while (!stack.empty()) {
            DiskState s = std::move(stack.back());
            stack.pop_back();
            if (s.event >= ev.size()) continue;
            if (s.upper_corners.size() + s.lower_corners.size() > budget)
                throw SearchBudgetExceeded("polygon search exceeded the word budget of " + std::to_string(budget));
            const int k = ev[s.event].level;
            const std::size_t e = s.event;
            ++s.event;
            switch (ev[e].type) {
                case EventType::LeftCusp:
                    if (s.lower >= k) s.lower += 2;
                    if (s.upper >= k) s.upper += 2;
                    stack.push_back(std::move(s));
                    break;
                case EventType::RightCusp: {
                    if (s.lower == k && s.upper == k + 1) {
                        record(e, s);
                        break;
                    }
                    auto hits = [k](int p) { return p == k || p == k + 1; };
                    if (hits(s.lower) || hits(s.upper)) break;
                    if (s.lower > k + 1) s.lower -= 2;
                    if (s.upper > k + 1) s.upper -= 2;
                    stack.push_back(std::move(s));
                    break;
                }
                case EventType::Crossing: {
                    if (s.lower == k && s.upper == k + 1) {
                        record(e, s);
                        break;
                    }
                    std::vector<std::pair<int, bool>> up{{s.upper, false}}, lo{{s.lower, false}};
                    if (s.upper == k + 1) up = {{k, false}};
                    else if (s.upper == k) up = {{k + 1, false}, {k, true}};
                    if (s.lower == k + 1) lo = {{k, false}, {k + 1, true}};
                    else if (s.lower == k) lo = {{k + 1, false}};
                    for (auto [u, uc] : up)
                        for (auto [l, lc] : lo) {
                            if (!(l < u)) continue;
                            DiskState n = s;
                            n.upper = u;
                            n.lower = l;
                            if (uc) n.upper_corners.push_back(e);
                            if (lc) n.lower_corners.push_back(e);
                            stack.push_back(std::move(n));
                        }
                    break;
                }
            }
        }
    }
    return out;
}

void xor_insert(std::map<Word, bool>& acc, const Word& w) {
    auto [it, fresh] = acc.emplace(w, true);
    if (!fresh) acc.erase(it);
}

std::vector<Word> collect(const std::map<Word, bool>& acc) {
    std::vector<Word> out;
    for (const auto& [w, _] : acc) out.push_back(w);
    return out;
}

}  // namespace

DGA chekanov_dga(const FrontDiagram& fd, std::size_t word_budget) {
    const std::vector<int> mu = maslov_potential(fd);
    const detail::Simulation s = detail::simulate(fd);
    DGA d;
    std::map<std::size_t, int> gen_of_event;
    std::map<std::size_t, int> degree_of_event;
    for (const auto& c : s.crossings)
        degree_of_event[c.event] = mu[static_cast<std::size_t>(c.top)] - mu[static_cast<std::size_t>(c.bottom)];
    for (const auto& c : s.right) degree_of_event[c.event] = 1;
    int crossings = 0, cusps = 0;
    for (const auto& [e, deg] : degree_of_event) {
        DGAGenerator g;
        g.event = e;
        g.type = fd.events[e].type;
        g.degree = deg;
        g.name = g.type == EventType::Crossing ? "a" + std::to_string(++crossings) : "c" + std::to_string(++cusps);
        gen_of_event[e] = static_cast<int>(d.generators.size());
        d.generators.push_back(g);
    }
    const auto disks = disk_words(fd, word_budget);
    d.differential.resize(d.generators.size());
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
        std::map<Word, bool> acc;
        if (d.generators[i].type == EventType::RightCusp) xor_insert(acc, {});
        auto it = disks.find(d.generators[i].event);
        if (it != disks.end())
            for (const auto& w : it->second) {
                Word word;
                for (std::size_t e : w) word.push_back(gen_of_event.at(e));
                xor_insert(acc, word);
            }
        d.differential[i] = collect(acc);
    }
    if (!d.grading_ok()) throw std::logic_error("internal error: differential does not lower degree by 1");
    if (!d.d_squared_zero()) throw std::logic_error("internal error: differential does not square to zero");
    return d;
}

bool DGA::grading_ok() const {
    for (std::size_t g = 0; g < generators.size(); ++g)
        for (const auto& w : differential[g]) {
            int total = 0;
            for (int x : w) total += generators[static_cast<std::size_t>(x)].degree;
            if (total != generators[g].degree - 1) return false;
        }
    return true;
}

bool DGA::d_squared_zero() const {
    for (std::size_t g = 0; g < generators.size(); ++g) {
        std::map<Word, bool> acc;
        for (const auto& w : differential[g])
            for (std::size_t i = 0; i < w.size(); ++i)
                for (const auto& t : differential[static_cast<std::size_t>(w[i])]) {
                    Word n(w.begin(), w.begin() + static_cast<long>(i));
                    n.insert(n.end(), t.begin(), t.end());
                    n.insert(n.end(), w.begin() + static_cast<long>(i) + 1, w.end());
                    xor_insert(acc, n);
                }
        if (!acc.empty()) return false;
    }
    return true;
}

std::string DGA::differential_string(std::size_t g) const {
    if (differential[g].empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& w : differential[g]) {
        if (!first) os << " + ";
        first = false;
        if (w.empty()) os << "1";
        for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << generators[static_cast<std::size_t>(w[i])].name;
    }
    return os.str();
}

bool is_augmentation(const DGA& d, const Augmentation& e) {
    if (e.size() != d.generators.size()) return false;
    for (std::size_t g = 0; g < e.size(); ++g)
        if (e[g] && d.generators[g].degree != 0) return false;
    for (std::size_t g = 0; g < d.generators.size(); ++g) {
        int sum = 0;
        for (const auto& w : d.differential[g]) {
            int p = 1;
            for (int x : w) p &= e[static_cast<std::size_t>(x)];
            sum ^= p;
        }
        if (sum) return false;
    }
    return true;
}

std::vector<Augmentation> augmentations(const DGA& d) {
    std::vector<std::size_t> zero;
    for (std::size_t g = 0; g < d.generators.size(); ++g)
        if (d.generators[g].degree == 0) zero.push_back(g);
    if (zero.size() > 26) throw SearchBudgetExceeded("too many degree-0 generators for exhaustive enumeration");
    std::vector<Augmentation> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << zero.size()); ++bits) {
        Augmentation e(d.generators.size(), 0);
        for (std::size_t i = 0; i < zero.size(); ++i) e[zero[i]] = static_cast<std::uint8_t>((bits >> i) & 1);
        if (is_augmentation(d, e)) out.push_back(std::move(e));
    }
    return out;
}

GradedRanks lch(const DGA& d, const Augmentation& e) {
    if (!is_augmentation(d, e)) throw InvalidInput("not an augmentation of this DGA");
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t g = 0; g < d.generators.size(); ++g) by_degree[d.generators[g].degree].push_back(g);
    std::vector<std::size_t> index(d.generators.size());
    for (auto& [deg, gens] : by_degree)
        for (std::size_t i = 0; i < gens.size(); ++i) index[gens[i]] = i;

    // linear part of the conjugated differential, as a matrix per source degree
    auto linearized = [&](int k) {
        const auto src = by_degree.find(k);
        const auto dst = by_degree.find(k - 1);
        const std::size_t rows = dst == by_degree.end() ? 0 : dst->second.size();
        const std::size_t cols = src == by_degree.end() ? 0 : src->second.size();
        std::map<std::pair<std::size_t, std::size_t>, int> bits;
        if (src != by_degree.end())
            for (std::size_t c = 0; c < cols; ++c)
                for (const auto& w : d.differential[src->second[c]])
                    for (std::size_t i = 0; i < w.size(); ++i) {
                        int p = 1;
                        for (std::size_t j = 0; j < w.size() && p; ++j)
                            if (j != i) p &= e[static_cast<std::size_t>(w[j])];
                        if (p) bits[{index[static_cast<std::size_t>(w[i])], c}] ^= 1;
                    }
        SparseMatrix m(rows, cols);
        for (const auto& [rc, v] : bits)
            if (v) m.add(rc.first, rc.second, 1);
        return m;
    };
    GradedRanks out;
    for (const auto& [k, gens] : by_degree) {
        const std::size_t h = gens.size() - rank_mod2(linearized(k)) - rank_mod2(linearized(k + 1));
        if (h) out.set_free(k, h);
    }
    return out;
}

GradedRanks gfh_from_lch(const GradedRanks& l) { return l.shifted(1); }

}  // namespace gfh
