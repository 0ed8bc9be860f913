#include "gfh/cli.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace gfh {

std::string decimal(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double real_from_json(const Json& j, const std::string& what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        double v = 0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec == std::errc() && res.ptr == s.data() + s.size()) return v;
    }
    throw InvalidInput(what + " must be a decimal string or number");
}

Json ranks_to_json(const GradedRanks& g) {
    Json out = Json::object();
    for (const auto& [k, grp] : g.groups()) {
        Json e;
        e["free"] = grp.free;
        if (!grp.torsion.empty()) {
            Json t = Json::array();
            for (const auto& v : grp.torsion) t.push_back(v.str());
            e["torsion"] = t;
        }
        out[std::to_string(k)] = e;
    }
    return out;
}

Json compact_ranks_to_json(const GradedRanks& g) {
    Json out = Json::object();
    for (const auto& [k, grp] : g.groups()) {
        if (grp.torsion.empty()) {
            out[std::to_string(k)] = grp.free;
        } else {
            Json e = Json::object();
            e["free"] = grp.free;
            Json t = Json::array();
            for (const auto& v : grp.torsion) t.push_back(v.str());
            e["torsion"] = t;
            out[std::to_string(k)] = e;
        }
    }
    return out;
}

namespace {

int parse_degree(const std::string& key) {
    try {
        std::size_t used = 0;
        const int k = std::stoi(key, &used);
        if (used == key.size()) return k;
    } catch (const std::exception&) {
    }
    throw InvalidInput("degree key '" + key + "' is not an integer");
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw InvalidInput(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<double> real_list(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidInput(what + " must be an array");
    std::vector<double> out;
    for (const auto& v : j) out.push_back(real_from_json(v, what));
    return out;
}

}  // namespace

GradedRanks ranks_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("graded ranks must be an object keyed by degree");
    GradedRanks g;
    for (const auto& [key, v] : j.items()) {
        GroupRank r;
        if (v.is_number_integer()) {
            if (v.get<long long>() < 0) throw InvalidInput("ranks must be nonnegative");
            r.free = v.get<std::size_t>();
        } else if (v.is_object()) {
            if (v.contains("free")) {
                if (!v["free"].is_number_integer() || v["free"].get<long long>() < 0)
                    throw InvalidInput("'free' must be a nonnegative integer");
                r.free = v["free"].get<std::size_t>();
            }
            if (v.contains("torsion")) {
                std::vector<BigInt> t;
                for (const auto& x : v["torsion"]) {
                    BigInt b = x.is_string() ? BigInt(x.get<std::string>()) : BigInt(x.get<long long>());
                    if (b < 2) throw InvalidInput("torsion coefficients must exceed 1");
                    t.push_back(b);
                }
                r.torsion = prime_power_decomposition(t);
            }
        } else {
            throw InvalidInput("rank entry for degree " + key + " must be an integer or object");
        }
        g.set(parse_degree(key), r);
    }
    return g;
}

GFDescriptor descriptor_from_json(const Json& j) {
    GFDescriptor g;
    g.base_dim = int_field(j, "baseDim");
    g.fiber_dim = int_field(j, "fiberDim");
    if (j.contains("core"))
        for (const auto& m : j["core"]) {
            Monomial mono;
            mono.coeff = real_from_json(field(m, "coeff"), "core coeff");
            for (const auto& e : field(m, "exponents")) {
                if (!e.is_number_integer()) throw InvalidInput("exponents must be integers");
                mono.exponents.push_back(e.get<int>());
            }
            g.core.push_back(mono);
        }
    if (j.contains("supportBox"))
        for (const auto& iv : j["supportBox"]) {
            auto v = real_list(iv, "supportBox interval");
            if (v.size() != 2) throw InvalidInput("supportBox intervals need two endpoints");
            g.support_box.push_back({v[0], v[1]});
        }
    if (j.contains("blendRadius")) g.blend_radius = real_from_json(j["blendRadius"], "blendRadius");
    g.tail = real_list(field(j, "tail"), "tail");
    if (j.contains("stabilization"))
        for (const auto& s : j["stabilization"]) {
            if (!s.is_number_integer()) throw InvalidInput("stabilization signs must be integers");
            g.stabilization.push_back(s.get<int>());
        }
    if (j.contains("bumps"))
        for (const auto& b : j["bumps"]) {
            Bump bump;
            bump.amplitude = real_from_json(field(b, "amplitude"), "bump amplitude");
            bump.center = real_list(field(b, "center"), "bump center");
            bump.radius = real_from_json(field(b, "radius"), "bump radius");
            g.bumps.push_back(bump);
        }
    g.validate();
    return g;
}

Json descriptor_to_json(const GFDescriptor& g) {
    Json j;
    j["baseDim"] = g.base_dim;
    j["fiberDim"] = g.fiber_dim;
    j["core"] = Json::array();
    for (const auto& m : g.core) j["core"].push_back({{"coeff", decimal(m.coeff)}, {"exponents", m.exponents}});
    j["supportBox"] = Json::array();
    for (const auto& [lo, hi] : g.support_box) j["supportBox"].push_back({decimal(lo), decimal(hi)});
    j["blendRadius"] = decimal(g.blend_radius);
    j["tail"] = Json::array();
    for (double a : g.tail) j["tail"].push_back(decimal(a));
    if (!g.stabilization.empty()) j["stabilization"] = g.stabilization;
    return j;
}

ShearSpec shear_from_json(const Json& j) {
    ShearSpec s;
    if (j.contains("u")) s.u = real_from_json(j["u"], "u");
    if (j.contains("mu")) s.mu = real_from_json(j["mu"], "mu");
    if (j.contains("Omega")) s.Omega = real_from_json(j["Omega"], "Omega");
    if (j.contains("tMinus")) s.t_minus = real_from_json(j["tMinus"], "tMinus");
    return s;
}

FrontDiagram front_from_json(const Json& j) {
    FrontDiagram fd;
    fd.strands = int_field(j, "strands");
    for (const auto& e : field(j, "events")) {
        const Json& t = field(e, "type");
        if (!t.is_string()) throw InvalidInput("event type must be a string");
        fd.events.push_back({parse_event(t.get<std::string>()), int_field(e, "level")});
    }
    if (j.contains("maslov")) {
        std::vector<int> mu;
        for (const auto& v : j["maslov"]) {
            if (!v.is_number_integer()) throw InvalidInput("maslov entries must be integers");
            mu.push_back(v.get<int>());
        }
        fd.maslov = mu;
    }
    fd.validate();
    return fd;
}

GFHProfile profile_from_json(const Json& j) {
    GFHProfile p;
    if (j.contains("name")) p.name = j["name"].get<std::string>();
    if (j.contains("m")) p.m = int_field(j, "m");
    if (j.contains("connected")) p.connected = field(j, "connected").get<bool>();
    for (const auto& [ring, ranks] : field(j, "rings").items()) p.rings.push_back({parse_ring(ring), ranks_from_json(ranks)});
    p.validate();
    return p;
}

SurfaceFilling filling_surface_from_json(const Json& j) {
    SurfaceFilling s;
    s.genus = int_field(j, "genus");
    s.boundary = int_field(j, "boundary");
    if (j.contains("orientable")) s.orientable = j["orientable"].get<bool>();
    s.validate();
    return s;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string data = ss.str();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

}  // namespace gfh
