#include "simulate.hpp"

#include <algorithm>
#include <map>

namespace gfh {

std::string event_name(EventType t) {
    switch (t) {
        case EventType::LeftCusp: return "lcusp";
        case EventType::RightCusp: return "rcusp";
        case EventType::Crossing: return "cross";
    }
    return "?";
}

EventType parse_event(const std::string& s) {
    if (s == "lcusp") return EventType::LeftCusp;
    if (s == "rcusp") return EventType::RightCusp;
    if (s == "cross") return EventType::Crossing;
    throw InvalidInput("unknown front event type '" + s + "'");
}

std::size_t FrontDiagram::left_cusps() const {
    return static_cast<std::size_t>(
        std::count_if(events.begin(), events.end(), [](const FrontEvent& e) { return e.type == EventType::LeftCusp; }));
}

void FrontDiagram::validate() const {
    if (events.empty()) throw InvalidInput("front has no events");
    int n = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& e = events[i];
        const std::string where = "event " + std::to_string(i) + " (" + event_name(e.type) + " at " +
                                  std::to_string(e.level) + ")";
        switch (e.type) {
            case EventType::LeftCusp:
                if (e.level < 0 || e.level > n) throw InvalidInput(where + ": level out of range");
                n += 2;
                break;
            case EventType::RightCusp:
            case EventType::Crossing:
                if (e.level < 0 || e.level + 1 >= n) throw InvalidInput(where + ": needs strands at level and level+1");
                if (e.type == EventType::RightCusp) n -= 2;
                break;
        }
        if (n > strands) throw InvalidInput(where + ": exceeds the declared " + std::to_string(strands) + " strands");
    }
    if (n != 0) throw InvalidInput("front leaves " + std::to_string(n) + " strands open");
    if (maslov && maslov->size() != arc_count())
        throw InvalidInput("maslov list needs one entry per arc (" + std::to_string(arc_count()) + ")");
}

namespace detail {

Simulation simulate(const FrontDiagram& fd) {
    fd.validate();
    Simulation s;
    std::vector<int> strand;
    for (std::size_t i = 0; i < fd.events.size(); ++i) {
        const auto& e = fd.events[i];
        const auto k = static_cast<std::size_t>(e.level);
        if (e.type == EventType::LeftCusp) {
            const int lo = s.arcs++, hi = s.arcs++;
            strand.insert(strand.begin() + static_cast<long>(k), {lo, hi});
            s.left.push_back({i, lo, hi});
        } else if (e.type == EventType::RightCusp) {
            s.right.push_back({i, strand[k], strand[k + 1]});
            strand.erase(strand.begin() + static_cast<long>(k), strand.begin() + static_cast<long>(k) + 2);
        } else {
            s.crossings.push_back({i, strand[k + 1], strand[k]});
            std::swap(strand[k], strand[k + 1]);
        }
    }
    return s;
}

}  // namespace detail

using detail::simulate;

std::vector<int> maslov_potential(const FrontDiagram& fd) {
    const detail::Simulation s = simulate(fd);
    const auto n = static_cast<std::size_t>(s.arcs);
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (const auto* list : {&s.left, &s.right})
        for (const auto& c : *list) {
            adj[static_cast<std::size_t>(c.hi)].push_back({c.lo, -1});
            adj[static_cast<std::size_t>(c.lo)].push_back({c.hi, 1});
        }
    std::vector<std::optional<int>> mu(n);
    for (std::size_t start = 0; start < n; ++start) {
        if (mu[start]) continue;
        mu[start] = fd.maslov ? (*fd.maslov)[start] : 0;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (auto [y, d] : adj[x]) {
                const auto yy = static_cast<std::size_t>(y);
                if (!mu[yy]) {
                    mu[yy] = *mu[x] + d;
                    stack.push_back(yy);
                } else if (*mu[yy] != *mu[x] + d) {
                    throw RotationError("nonzero rotation number: no consistent Maslov potential");
                }
            }
        }
    }
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = *mu[i];
    if (fd.maslov && out != *fd.maslov)
        throw InvalidInput("supplied Maslov potential must drop by 1 from upper to lower strand at every cusp");
    return out;
}

ClassicalInvariants classical_invariants(const FrontDiagram& fd) {
    maslov_potential(fd);
    const detail::Simulation s = simulate(fd);
    const auto n = static_cast<std::size_t>(s.arcs);
    std::vector<int> at_left(n), at_right(n);
    for (const auto& c : s.left) at_left[static_cast<std::size_t>(c.lo)] = c.hi, at_left[static_cast<std::size_t>(c.hi)] = c.lo;
    for (const auto& c : s.right)
        at_right[static_cast<std::size_t>(c.lo)] = c.hi, at_right[static_cast<std::size_t>(c.hi)] = c.lo;

    // +1 when the arc is traversed left to right
    ClassicalInvariants ci;
    std::vector<int> dir(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (dir[start]) continue;
        ++ci.components;
        std::size_t x = start;
        int d = 1;
        while (!dir[x]) {
            dir[x] = d;
            x = static_cast<std::size_t>(d == 1 ? at_right[x] : at_left[x]);
            d = -d;
        }
    }
    for (const auto& c : s.crossings) {
        const int dt = dir[static_cast<std::size_t>(c.top)], db = dir[static_cast<std::size_t>(c.bottom)];
        // top strand heads down-right, bottom strand up-right
        const int cross = dt * db - (-dt) * db;
        ci.writhe += cross > 0 ? 1 : -1;
    }
    ci.right_cusps = static_cast<int>(s.right.size());
    ci.tb = ci.writhe - ci.right_cusps;
    ci.rot = 0;
    return ci;
}

FrontDiagram unknot_front() {
    return {2, {{EventType::LeftCusp, 0}, {EventType::RightCusp, 0}}, std::nullopt};
}

FrontDiagram trefoil_front() {
    using E = EventType;
    return {4,
            {{E::LeftCusp, 0}, {E::LeftCusp, 2}, {E::Crossing, 1}, {E::Crossing, 1}, {E::Crossing, 1},
             {E::RightCusp, 2}, {E::RightCusp, 0}},
            std::nullopt};
}

FrontDiagram twist_knot(int d) {
    if (d < 1) throw InvalidInput("twist knot needs d >= 1");
    // positions counted from the top, converted to bottom levels as we go
    std::vector<std::pair<EventType, int>> ops{{EventType::LeftCusp, 0}, {EventType::LeftCusp, 2},
                                               {EventType::Crossing, 1}, {EventType::Crossing, 1}};
    for (int i = 1; i < d; ++i) ops.push_back({EventType::LeftCusp, 2 * i});
    for (int i = 1; i <= d; ++i) ops.push_back({EventType::Crossing, 2 * i - 1});
    for (int i = d - 1; i >= 1; --i) ops.push_back({EventType::RightCusp, 2 * i});
    ops.push_back({EventType::RightCusp, 0});
    ops.push_back({EventType::RightCusp, 0});
    FrontDiagram fd;
    int n = 0;
    for (auto [t, p] : ops) {
        if (t == EventType::LeftCusp) {
            fd.events.push_back({t, n - p});
            n += 2;
        } else {
            fd.events.push_back({t, n - 2 - p});
            if (t == EventType::RightCusp) n -= 2;
        }
        fd.strands = std::max(fd.strands, n);
    }
    return fd;
}

}  // namespace gfh
