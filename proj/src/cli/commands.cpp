#include "gfh/cli.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace gfh {

namespace {

struct Common {
    std::string ring = "z";
    double budget = kDefaultCellBudget;
    std::string out;
};

struct Run {
    Json manifest;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Run(const std::string& command, const std::vector<std::string>& inputs) {
        manifest["command"] = command;
        manifest["tool"] = std::string("gfh ") + kToolVersion;
        Json digests = Json::object();
        for (const auto& p : inputs) digests[p] = sha256_file(p);
        manifest["inputDigests"] = digests;
    }
    Json finish() {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        manifest["wallTimeSeconds"] = decimal(std::round(secs * 1000) / 1000);
        return manifest;
    }
};

void emit(const Json& result, Run& run, const std::string& out_path, std::ostream& out) {
    Json doc;
    doc["result"] = result;
    doc["manifest"] = run.finish();
    const std::string text = doc.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw InvalidInput("cannot write '" + out_path + "'");
        f << text;
    }
    out << text;
}

std::size_t auto_samples(std::size_t dim, double budget) {
    std::size_t n = 201;
    while (n > 3 && std::pow(2.0 * static_cast<double>(n) - 1, static_cast<double>(dim)) > budget) n -= 2;
    return n;
}

Json window_json(const Window& w) { return {{"eps", decimal(w.eps)}, {"omega", decimal(w.omega)}}; }

Json spectrum_json(const Spectrum& s) {
    Json a = Json::array();
    for (double v : s.lengths) a.push_back(decimal(v));
    return a;
}

// -- numeric -------------------------------------------------------------

struct NumericArgs {
    std::string input;
    std::string grid;
    std::size_t samples = 0;
    std::optional<double> eps, omega;
    int stabilize = 0;
    std::string export_field;
};

int cmd_numeric(const NumericArgs& a, const Common& c, std::ostream& out) {
    Run run("numeric", {a.input});
    const Json doc = read_json_file(a.input);
    GFDescriptor g = descriptor_from_json(doc.contains("descriptor") ? doc["descriptor"] : doc);
    for (int i = 0; i < std::abs(a.stabilize); ++i) g = stabilize(g, a.stabilize > 0 ? 1 : -1);
    const std::size_t dim = static_cast<std::size_t>(g.base_dim + 2 * g.fiber_dim);
    GridSpec grid;
    if (!a.grid.empty()) grid = GridSpec::parse(a.grid);
    else grid = default_grid(g, a.samples ? a.samples : auto_samples(dim, c.budget));
    std::optional<Window> win;
    if (a.eps || a.omega) {
        if (!(a.eps && a.omega) && g.is_linear()) throw ChoiceViolation("a linear family needs both --eps and --omega");
    }
    const Ring ring = parse_ring(c.ring);
    GFHResult r;
    if (a.eps && a.omega) {
        r = compute_gfh(g, grid, Window{*a.eps, *a.omega}, ring, c.budget);
    } else if (a.eps || a.omega) {
        // one-sided override: fill the other side from the detected spectrum
        GFHResult probe = compute_gfh(g, grid, std::nullopt, ring, c.budget);
        const Window w = choose_window(probe.spectrum, a.eps, a.omega);
        r = compute_gfh(g, grid, w, ring, c.budget);
    } else {
        r = compute_gfh(g, grid, std::nullopt, ring, c.budget);
    }
    if (!a.export_field.empty()) {
        SampledField f = SampledField::sample(grid, difference_function(g));
        std::ofstream fo(a.export_field, std::ios::binary);
        if (!fo) throw InvalidInput("cannot write '" + a.export_field + "'");
        f.write_binary(fo);
    }
    Json res;
    res["gfh"] = ranks_to_json(r.ranks);
    res["pairHomology"] = ranks_to_json(r.raw);
    res["N"] = r.fiber_dim;
    res["ring"] = ring_name(ring);
    res["window"] = window_json(r.window);
    res["grid"] = r.grid.to_string();
    res["lengthSpectrum"] = spectrum_json(r.spectrum);
    res["truncation"] = g.is_linear() ? "linear family: no compact support to cover"
                                      : "grid covers the support box with at least 20% margin per axis";
    res["relativeCells"] = r.stats.relative_cells;
    res["criticalCells"] = r.stats.residual_cells;
    res["warnings"] = r.stats.warnings;
    run.manifest["grid"] = r.grid.to_string();
    run.manifest["budget"] = decimal(c.budget);
    run.manifest["window"] = window_json(r.window);
    run.manifest["stabilize"] = a.stabilize;
    emit(res, run, c.out, out);
    return kExitOk;
}

// -- front ---------------------------------------------------------------

struct FrontArgs {
    std::string input;
    bool list_aug = false;
    std::size_t word_budget = kDefaultWordBudget;
};

Json augmentation_json(const DGA& d, const Augmentation& e) {
    Json bits = Json::object();
    for (std::size_t g = 0; g < d.generators.size(); ++g)
        if (d.generators[g].degree == 0) bits[d.generators[g].name] = static_cast<int>(e[g]);
    return bits;
}

int cmd_front(const FrontArgs& a, const Common& c, std::ostream& out) {
    Run run("front", {a.input});
    const FrontDiagram fd = front_from_json(read_json_file(a.input));
    const ClassicalInvariants ci = classical_invariants(fd);
    const DGA d = chekanov_dga(fd, a.word_budget);
    const auto augs = augmentations(d);
    long long signed_gens = 0;
    for (const auto& g : d.generators) signed_gens += g.degree % 2 == 0 ? 1 : -1;

    Json res;
    if (a.list_aug) {
        res = Json::array();
        for (const auto& e : augs) res.push_back(augmentation_json(d, e));
        emit(res, run, c.out, out);
        return kExitOk;
    }
    res["tb"] = ci.tb;
    res["rot"] = ci.rot;
    res["writhe"] = ci.writhe;
    res["rightCusps"] = ci.right_cusps;
    res["components"] = ci.components;
    res["generators"] = Json::array();
    for (std::size_t g = 0; g < d.generators.size(); ++g)
        res["generators"].push_back({{"name", d.generators[g].name},
                                     {"kind", event_name(d.generators[g].type)},
                                     {"event", d.generators[g].event},
                                     {"degree", d.generators[g].degree},
                                     {"differential", d.differential_string(g)}});
    res["augmentationCount"] = augs.size();
    res["augmentations"] = Json::array();
    bool euler_ok = true;
    for (const auto& e : augs) {
        const GradedRanks l = lch(d, e);
        euler_ok = euler_ok && l.euler_characteristic() == signed_gens;
        res["augmentations"].push_back(
            {{"assignment", augmentation_json(d, e)}, {"lch", ranks_to_json(l)}, {"gfh", ranks_to_json(gfh_from_lch(l))}});
    }
    res["checks"] = {{"dSquaredZero", d.d_squared_zero()}, {"grading", d.grading_ok()}, {"eulerCharacteristic", euler_ok}};
    run.manifest["wordBudget"] = a.word_budget;
    emit(res, run, c.out, out);
    return d.d_squared_zero() && d.grading_ok() && euler_ok ? kExitOk : kExitCheckFailed;
}

// -- seidel --------------------------------------------------------------

struct SeidelArgs {
    std::string input;
    std::string grid;
    std::optional<double> u, mu, Omega, tminus;
    std::string csv;
};

void write_lambda_csv(const std::string& path, const ShearSpec& s, const LemmaReport& lem) {
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write '" + path + "'");
    const Shear h(s.u);
    f << "t,H,lambda_minus_mu,lambda_Omega,lambda_sigma\n";
    const std::size_t n = 2000;
    for (std::size_t i = 1; i <= n; ++i) {
        const double t = lem.t_max * static_cast<double>(i) / static_cast<double>(n);
        f << decimal(t) << "," << decimal(h.H(t)) << "," << decimal(h.lambda(-s.mu, t)) << ","
          << decimal(h.lambda(s.Omega, t)) << "," << decimal(h.lambda(lem.sigma, t)) << "\n";
    }
}

int cmd_seidel(const SeidelArgs& a, const Common& c, std::ostream& out) {
    Run run("seidel", {a.input});
    const Json doc = read_json_file(a.input);
    FillingDescriptorNumeric fd;
    fd.base = descriptor_from_json(doc.contains("base") ? doc["base"] : doc);
    ShearSpec spec = doc.contains("shear") ? shear_from_json(doc["shear"]) : ShearSpec{};
    if (a.u) spec.u = *a.u;
    if (a.mu) spec.mu = *a.mu;
    if (a.Omega) spec.Omega = *a.Omega;
    if (a.tminus) spec.t_minus = *a.tminus;
    fd.t_minus = spec.t_minus;
    std::string gs = a.grid;
    if (gs.empty() && doc.contains("grid")) gs = doc["grid"].get<std::string>();
    if (gs.empty()) throw InvalidInput("seidel needs a (t, eta, eta~) grid: pass --grid or set \"grid\"");
    const GridSpec grid = GridSpec::parse(gs);
    std::optional<Spectrum> spectrum;
    if (doc.contains("spectrum")) {
        Spectrum s;
        for (const auto& v : doc["spectrum"]) s.lengths.push_back(real_from_json(v, "spectrum"));
        std::sort(s.lengths.begin(), s.lengths.end());
        spectrum = s;
    }
    const Ring ring = parse_ring(c.ring);
    const SeidelReport r = seidel_decomposition(fd, spec, grid, ring, c.budget, spectrum);
    if (!a.csv.empty()) write_lambda_csv(a.csv, spec, r.lemmas);

    Json res;
    res["W"] = ranks_to_json(r.W);
    res["A"] = ranks_to_json(r.A);
    res["B"] = ranks_to_json(r.B);
    res["C"] = ranks_to_json(r.C);
    res["reference"] = ranks_to_json(r.reference);
    res["referenceWindow"] = window_json(r.reference_window);
    res["verdict"] = r.match ? "MATCH" : "MISMATCH";
    res["ring"] = ring_name(ring);
    res["lengthSpectrum"] = spectrum_json(r.spectrum);
    res["tAxis"] = {{"w", decimal(r.w)}, {"u", decimal(spec.u)}, {"uIndex", r.u_index}, {"v", decimal(r.v)}};
    Json lem;
    lem["pass"] = r.lemmas.pass;
    lem["samples"] = r.lemmas.samples;
    lem["sigma"] = decimal(r.lemmas.sigma);
    lem["tMax"] = decimal(r.lemmas.t_max);
    lem["checks"] = Json::array();
    for (const auto& ch : r.lemmas.checks)
        lem["checks"].push_back(
            {{"name", ch.name}, {"pass", ch.pass}, {"margin", decimal(ch.margin)}, {"witness", decimal(ch.witness)}});
    res["lemmas"] = lem;
    run.manifest["grid"] = grid.to_string();
    run.manifest["budget"] = decimal(c.budget);
    run.manifest["shear"] = {{"u", decimal(spec.u)},
                             {"mu", decimal(spec.mu)},
                             {"Omega", decimal(spec.Omega)},
                             {"tMinus", decimal(spec.t_minus)}};
    emit(res, run, c.out, out);
    return r.match ? kExitOk : kExitCheckFailed;
}

// -- obstruct ------------------------------------------------------------

Json verdicts(const GFHProfile& p, const std::optional<SpectrumSurrogate>& spectrum,
              const std::optional<SurfaceFilling>& filling) {
    Json v;
    v["nmin"] = nmin_lower_bound(p);
    v["fillability"] = fillability_name(fillability_obstruction(p));
    if (p.find(Ring::Z2)) {
        const DualityReport d = duality_audit(p);
        v["duality"] = d.pass ? "pass" : "fail";
        Json pairs = Json::array();
        for (auto [lo, hi] : d.pairs) pairs.push_back({lo, hi});
        v["dualityPairs"] = pairs;
        if (d.witness) v["dualityWitness"] = {{"k", d.witness->first}, {"partnerDegree", d.witness->second}};
    } else {
        v["duality"] = "skipped: no Z/2 profile";
    }
    const NminReport nr = nmin_report(p, spectrum);
    Json bounds;
    bounds["homologyLevelBound"] = nr.homology_bound;
    if (spectrum) {
        if (nr.steenrod_bound) bounds["steenrodEnhancedBound"] = *nr.steenrod_bound;
        else bounds["steenrodEnhancedBound"] = nullptr;
        bounds["steenrodWitness"] = nr.steenrod_witness;
    } else {
        bounds["steenrodEnhancedBound"] = "not computed: no spectrum surrogate supplied";
    }
    v["nminBounds"] = bounds;
    if (filling) {
        for (const auto& [ring, g] : p.rings) {
            const SeidelComparison cmp = compare_seidel(g, *filling, ring);
            v["seidel"][ring_name(ring)] = {{"match", cmp.match},
                                            {"expected", ranks_to_json(cmp.expected)},
                                            {"mismatchedDegrees", cmp.mismatched_degrees}};
        }
    }
    return v;
}

int cmd_obstruct(const std::string& input, const Common& c, std::ostream& out) {
    Run run("obstruct", {input});
    const Json doc = read_json_file(input);
    std::optional<SpectrumSurrogate> spectrum;
    if (doc.contains("spectrum")) spectrum = parse_expression(doc["spectrum"].get<std::string>()).value;
    std::optional<SurfaceFilling> filling;
    if (doc.contains("filling")) filling = filling_surface_from_json(doc["filling"]);

    Json res;
    if (doc.contains("events")) {
        const FrontDiagram fd = front_from_json(doc);
        const ClassicalInvariants ci = classical_invariants(fd);
        const DGA d = chekanov_dga(fd);
        std::map<std::string, std::pair<GradedRanks, int>> classes;
        for (const auto& e : augmentations(d)) {
            const GradedRanks g = gfh_from_lch(lch(d, e));
            auto& slot = classes[g.to_string()];
            slot.first = g;
            ++slot.second;
        }
        if (classes.empty()) throw InvalidInput("front has no augmentation, so no GFH profile to examine");
        res["profiles"] = Json::array();
        for (const auto& [_, entry] : classes) {
            GFHProfile p{input, 1, ci.components == 1, {{Ring::Z2, entry.first}}};
            Json v = verdicts(p, spectrum, filling);
            v["gfh"] = ranks_to_json(entry.first);
            v["augmentations"] = entry.second;
            res["profiles"].push_back(v);
        }
        if (classes.size() == 1) {
            Json single = res["profiles"][0];
            res = single;
        }
    } else {
        const GFHProfile p = profile_from_json(doc);
        res = verdicts(p, spectrum, filling);
    }
    emit(res, run, c.out, out);
    return kExitOk;
}

// -- spectrum ------------------------------------------------------------

int cmd_spectrum(const std::vector<std::string>& words, const Common& c, std::ostream& out) {
    std::string text;
    for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
    const SpectrumExpression e = parse_expression(text);
    const Ring ring = parse_ring(c.ring);
    std::ostringstream os;
    for (const auto& cmd : e.commands) {
        switch (cmd.kind) {
            case SpectrumCommand::Kind::Homology: os << compact_ranks_to_json(spec_homology(e.value, ring)).dump() << "\n"; break;
            case SpectrumCommand::Kind::Pi: os << pi_s_lookup(as_sphere_wedge(e.value), cmd.k) << "\n"; break;
            case SpectrumCommand::Kind::Obstruct: os << suspension_obstruction(e.value).summary() << "\n"; break;
        }
    }
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        f << os.str();
    }
    out << os.str();
    return kExitOk;
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--ring", c.ring, "coefficient ring: z or z2")->check(CLI::IsMember({"z", "z2", "Z", "Z2"}));
    sub->add_option("--budget", c.budget, "cell budget (word budget for fronts)");
    sub->add_option("--out", c.out, "also write the output to this file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generating-family homology toolkit"};
    app.require_subcommand(1);
    Common common;

    NumericArgs na;
    auto* numeric = app.add_subcommand("numeric", "GFH of a generating-family descriptor by sublevel homology");
    numeric->add_option("descriptor", na.input, "descriptor JSON")->required();
    numeric->add_option("--grid", na.grid, "lo:hi:n per axis, comma separated (base, eta, eta~)");
    numeric->add_option("--samples", na.samples, "samples per axis for the default grid");
    numeric->add_option("--eps", na.eps, "lower window threshold");
    numeric->add_option("--omega", na.omega, "upper window threshold");
    numeric->add_option("--stabilize", na.stabilize, "add |K| stabilizing fibers, sign of K");
    numeric->add_option("--export-field", na.export_field, "write the sampled difference field (binary)");
    add_common(numeric, common);

    FrontArgs fa;
    auto* front = app.add_subcommand("front", "GFH of a front diagram via linearized contact homology");
    front->add_option("front", fa.input, "front JSON")->required();
    front->add_flag("--list-aug", fa.list_aug, "print only the augmentations");
    front->add_option("--word-budget", fa.word_budget, "maximum boundary word length");
    add_common(front, common);

    SeidelArgs sa;
    auto* seidel = app.add_subcommand("seidel", "W/A/B/C pair decomposition of a filling family");
    seidel->add_option("filling", sa.input, "filling JSON")->required();
    seidel->add_option("--grid", sa.grid, "t, eta, eta~ axes");
    seidel->add_option("--u", sa.u);
    seidel->add_option("--mu", sa.mu);
    seidel->add_option("--Omega", sa.Omega);
    seidel->add_option("--tminus", sa.tminus);
    seidel->add_option("--csv", sa.csv, "write a lambda sweep as CSV");
    add_common(seidel, common);

    std::string obstruct_input;
    auto* obstruct = app.add_subcommand("obstruct", "fiber-dimension bound, fillability and duality verdicts");
    obstruct->add_option("input", obstruct_input, "profile or front JSON")->required();
    add_common(obstruct, common);

    std::vector<std::string> words;
    auto* spectrum = app.add_subcommand("spectrum", "spectrum surrogate expression, e.g. \"desusp 1 CP2 obstruct\"");
    spectrum->add_option("expression", words, "expression words")->required();
    add_common(spectrum, common);

    std::vector<std::string> argv_store{"gfh"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*numeric) return cmd_numeric(na, common, out);
        if (*front) {
            if (common.budget != kDefaultCellBudget) fa.word_budget = static_cast<std::size_t>(common.budget);
            return cmd_front(fa, common, out);
        }
        if (*seidel) return cmd_seidel(sa, common, out);
        if (*obstruct) return cmd_obstruct(obstruct_input, common, out);
        if (*spectrum) return cmd_spectrum(words, common, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const SearchBudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ChoiceViolation& e) {
        err << "choice violation: " << e.what() << "\n";
        return kExitChoice;
    } catch (const RotationError& e) {
        err << e.what() << "\n";
        return kExitRotation;
    } catch (const TableHorizonExceeded& e) {
        err << e.what() << "\n";
        return kExitInvalid;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace gfh
