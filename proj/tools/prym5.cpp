#include "CLI11.hpp"
#include "json.hpp"
#include "prym5/pipeline.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace prym5;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "prym5-report/1";

enum Exit { pass = 0, verdict_failure = 1, input_error = 2, budget_abort = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string field = "11";
    std::uint64_t seed = 1;
    std::string fixture;
    bool json = false;
    std::uint64_t budget_lines = 10'000'000;
    std::uint64_t budget_points = kDefaultBudget;
};

GF parse_field(const std::string& spec) {
    unsigned p = 0, k = 1;
    char comma = 0;
    std::istringstream is(spec);
    is >> p;
    if (is >> comma) {
        if (comma != ',' || !(is >> k)) throw InputError("bad --field '" + spec + "', expected p or p,k");
    }
    std::string rest;
    if (is >> rest || p == 0) throw InputError("bad --field '" + spec + "', expected p or p,k");
    try {
        FieldTag tag = parse_field_tag("GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
        return GF(tag.p, tag.k);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::string read_fixture(const std::string& name) {
    namespace fs = std::filesystem;
    fs::path path(name);
    if (!fs::exists(path)) {
        if (const char* dir = std::getenv("PRYM5_FIXTURES"); dir && fs::exists(fs::path(dir) / name))
            path = fs::path(dir) / name;
        else
            throw InputError("fixture not found: " + name);
    }
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json point_json(const PointF& p) { return p.str(); }

template <class Range>
ordered_json points_json(const Range& pts) {
    ordered_json a = ordered_json::array();
    for (auto& p : pts) a.push_back(point_json(p));
    return a;
}

ordered_json vector_json(const std::vector<Fq>& v) {
    ordered_json a = ordered_json::array();
    for (auto& x : v) a.push_back(x.str());
    return a;
}

// Report skeleton with the run configuration and a list of named checks.
class Report {
public:
    Report(std::string verb, const Config& cfg, const GF& field) {
        j_["schema"] = kSchema;
        j_["verb"] = std::move(verb);
        j_["field"] = field.tag();
        j_["seed"] = cfg.seed;
        if (!cfg.fixture.empty()) j_["fixture"] = cfg.fixture;
        j_["checks"] = ordered_json::array();
    }

    ordered_json& operator[](const char* key) { return j_[key]; }

    void check(const std::string& tag, bool ok) {
        j_["checks"].push_back({{"tag", tag}, {"passed", ok}});
        all_ &= ok;
    }

    int finish(const Config& cfg) {
        j_["status"] = all_ ? "pass" : "fail";
        emit(j_, cfg.json);
        return all_ ? pass : verdict_failure;
    }

    static void emit(const ordered_json& j, bool as_json) {
        if (as_json) {
            std::cout << j.dump(2) << "\n";
            return;
        }
        print_text(j, "");
    }

private:
    static void print_text(const ordered_json& j, const std::string& path) {
        if (j.is_object()) {
            for (auto& [k, v] : j.items()) print_text(v, path.empty() ? k : path + "." + k);
        } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
            for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], path + "[" + std::to_string(i) + "]");
        } else {
            std::cout << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
        }
    }

    ordered_json j_;
    bool all_ = true;
};

// --- net ---------------------------------------------------------------------

ordered_json analysis_json(const SymNet& net, const NetAnalysis& a) {
    ordered_json j;
    j["net"] = format_net(net);
    j["admissible"] = a.admission.ok();
    if (!a.admission.ok()) j["admissibility_failure"] = a.admission.failure;
    j["gamma"] = a.disc.gamma.str();
    j["gamma_degenerate"] = a.disc.trigonal;
    j["gamma_squarefree"] = a.squarefree;
    j["split"] = to_string(a.split.base_verdict);
    if (a.split.base) {
        j["conic"] = a.split.base->conic.str();
        j["cubic"] = a.split.base->cubic.str();
    }
    j["split_quadratic_extension"] = to_string(a.split.quadratic_verdict);
    j["base_points_F"] = a.admission.base_F.size();
    j["base_points_F2"] = a.admission.base_E.size();
    j["involution"] = to_string(a.involution.status);
    if (a.involution.sigma) {
        j["eigensignature"] = {a.signature.first, a.signature.second};
        j["fixed_point_free"] = a.fixed_point_free_F && a.fixed_point_free_E;
    }
    ordered_json hf;
    for (auto [d, h] : a.hilbert) hf[std::to_string(d)] = h;
    j["hilbert"] = hf;
    return j;
}

int cmd_net(const Config& cfg, bool random) {
    GF F = parse_field(cfg.field);
    SymNet net;
    Rng rng(cfg.seed);
    if (!cfg.fixture.empty()) {
        net = parse_net(read_fixture(cfg.fixture));
    } else if (random) {
        net = random_net(rng, F);
    } else {
        DrawStats stats;
        auto drawn = draw_admissible_block_net(rng, F, stats, false, 200, cfg.budget_points);
        if (!drawn) {
            Report r("net", cfg, F);
            r["draws"] = stats.drawn;
            r.check("admissible_block_net_drawn", false);
            return r.finish(cfg);
        }
        net = drawn->first;
    }
    Report r("net", cfg, net.field);
    r["source"] = !cfg.fixture.empty() ? "fixture" : random ? "random" : "block";
    auto a = analyze_net(net, cfg.budget_points);
    r["analysis"] = analysis_json(net, a);
    r.check("gamma_nondegenerate", !a.disc.trigonal);
    r.check("base_locus_smooth", a.smooth);
    r.check("hilbert_signature", hilbert_signature_holds(a.hilbert));
    // The conic-cubic split is equivalent to the involution with signature (2,3)
    // acting without fixed points; random nets are expected to have neither.
    bool has_inv = a.involution.status == InvolutionStatus::found;
    bool fpf = has_inv && a.signature == std::pair<std::size_t, std::size_t>{2, 3} && a.fixed_point_free_F &&
               a.fixed_point_free_E;
    bool split = a.split.base_verdict == SplitVerdict::split;
    r.check("split_iff_free_involution", split == fpf);
    return r.finish(cfg);
}

// --- quintic -------------------------------------------------------------------

int cmd_quintic(const Config& cfg) {
    GF F = parse_field(cfg.field);
    SymNet net;
    if (!cfg.fixture.empty()) {
        net = parse_net(read_fixture(cfg.fixture));
    } else {
        Rng rng(cfg.seed);
        DrawStats stats;
        auto drawn = draw_admissible_block_net(rng, F, stats, false, 200, cfg.budget_points);
        if (!drawn) throw InputError("no admissible block net in 200 draws");
        net = drawn->first;
    }
    Report r("quintic", cfg, net.field);
    auto d = discriminant_quintic(net);
    r["gamma"] = d.gamma.str();
    r.check("gamma_nondegenerate", !d.trigonal);
    if (d.trigonal) return r.finish(cfg);
    GF E(net.field.characteristic(), 2 * net.field.degree());
    r["terms"] = d.gamma.size();
    r["squarefree"] = squarefree_test(d.gamma);
    auto sing = singular_points(d.gamma, E, cfg.budget_points);
    ordered_json s = ordered_json::array();
    for (auto& p : sing) s.push_back({{"point", p.point.str()}, {"node", p.node}});
    r["singular_points_F2"] = s;
    ordered_json lines = ordered_json::array();
    for (auto& l : lines_in_curve(d.gamma, net.field, cfg.budget_points)) lines.push_back(l.str());
    r["lines"] = lines;
    auto sr = split_report(d.gamma);
    r["split"] = to_string(sr.base_verdict);
    if (sr.base) {
        r["conic"] = sr.base->conic.str();
        r["cubic"] = sr.base->cubic.str();
        r.check("split_certificate", sr.base->conic * sr.base->cubic == d.gamma);
    }
    r["split_quadratic_extension"] = to_string(sr.quadratic_verdict);
    return r.finish(cfg);
}

// --- g2 --------------------------------------------------------------------------

std::vector<Fq> parse_quadric_coords(const GF& F, const std::string& s) {
    std::vector<Fq> t;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            t.push_back(F.of(std::stoll(tok)));
        } catch (const std::exception&) {
            throw InputError("bad --quadric coordinate '" + tok + "'");
        }
    }
    if (t.size() != 4) throw InputError("--quadric takes 4 comma-separated web coordinates");
    return t;
}

int cmd_elliptic_union(const Config& cfg, const std::string& text) {
    auto U = parse_elliptic_union(text);
    Report r("g2", cfg, U.field);
    r["kind"] = "elliptic_union";
    r["points"] = U.points.size();
    r["common_point"] = U.P.str();
    bool vertex = true;
    ordered_json ranks = ordered_json::array();
    for (auto& M : U.web.coeff) {
        ranks.push_back(M.rank());
        for (auto& v : M.apply(U.P.x)) vertex &= v.is_zero();
    }
    r["basis_ranks"] = ranks;
    r["web_dimension"] = U.web.coeff.size();
    r.check("every_member_singular", determinant(U.web.matrix()).is_zero());
    r.check("vertex_contains_common_point", vertex);
    return r.finish(cfg);
}

int cmd_g2(const Config& cfg, const std::string& stage, const std::string& quadric_spec) {
    if (cfg.fixture.empty()) throw InputError("g2 needs --fixture");
    std::string text = read_fixture(cfg.fixture);
    if (text.find("E1:") != std::string::npos) return cmd_elliptic_union(cfg, text);
    auto fx = parse_genus2(text);
    GF F = fx.curve.field;
    std::optional<std::vector<Fq>> quadric;
    if (!quadric_spec.empty()) quadric = parse_quadric_coords(F, quadric_spec);
    auto g = run_genus2(fx, quadric, cfg.seed);
    bool all = stage == "all";

    Report r("g2", cfg, F);
    r["stage"] = stage;
    r["kind"] = fx.divisor.kind == DivisorKind::three_k ? "3K" : "2K+D";
    Genus2Embedding emb(fx.curve, fx.divisor);
    r["basis"] = emb.basis();
    r["sample_points"] = g.sample_points;
    r.check("no_trisecant_in_sample", g.trisecant_free);

    if (all || stage == "web") {
        ordered_json w = ordered_json::array();
        for (auto& M : g.web.coeff) w.push_back(quadric_form(M).str());
        r["web"] = w;
        r["web_dimension"] = g.web.coeff.size();
    }
    if (all || stage == "discriminant") {
        r["plane"] = g.disc.plane.str();
        r["quartic"] = g.disc.quartic.str();
        r.check("plane_times_quartic", g.disc.plane * g.disc.quartic == g.disc.det);
        std::size_t nodes = 0;
        for (auto& s : g.quartic_singular) nodes += s.node;
        r["quartic_singular_F2"] = g.quartic_singular.size();
        r["quartic_nodes_F2"] = nodes;
        r.check("quartic_singularities_are_nodes", g.all_nodes() && nodes <= 16);
        bool trope = g.section.is_zero() || poly_square_root(g.section).has_value();
        r["plane_is_trope"] = trope;
        if (!trope) {
            r["section_singular_F2"] = g.section_singular.size();
            r.check("section_single_singular_point", g.section_singular.size() == 1);
        }
    }
    if (all || stage == "tropes" || stage == "polar") {
        r["tropes_full_scan"] = g.tropes_scanned;
        ordered_json tr = ordered_json::array();
        for (std::size_t i = 0; i < g.tropes.size(); ++i) {
            ordered_json t;
            t["plane"] = vector_json(g.tropes[i].plane);
            t["conic"] = g.tropes[i].conic.str();
            if (all || stage == "polar") {
                const auto& p = g.polar[i];
                t["polar_rank"] = p.rank;
                t["nodes_on_plane"] = p.nodes_on_trope;
                r.check("polar_map_trope_" + std::to_string(i), p.passed());
            }
            tr.push_back(t);
        }
        r["tropes"] = tr;
    }
    if ((all || stage == "bisecant") && g.quadric) {
        r["quadric"] = vector_json(*g.quadric);
        const auto& a = *g.admissibility;
        r["admissible"] = a.admissible;
        r["quadric_rank"] = a.rank;
        ordered_json wl = ordered_json::array();
        for (auto [i, j] : a.weierstrass_lines) wl.push_back({i, j});
        r["weierstrass_lines"] = wl;
        r["pencil_lines"] = a.pencil_lines;
        if (a.admissible) {
            r["bisecant_pairs"] = g.bisecants.size();
            r["window"] = {g.bisecant_window.lo, g.bisecant_window.hi};
            r.check("bisecant_count_in_window", g.bisecant_window.contains(static_cast<double>(g.bisecants.size())));
        }
    } else if (stage == "bisecant") {
        throw InputError("g2 bisecant needs --quadric");
    }
    return r.finish(cfg);
}

// --- p3 and pipelines --------------------------------------------------------------

ordered_json census_json(const SecantCensus& c) {
    ordered_json j;
    j["lines_scanned"] = c.lines_scanned;
    ordered_json by;
    for (auto [k, n] : c.by_incidence) by[std::to_string(k)] = n;
    j["by_incidence"] = by;
    ordered_json rich = ordered_json::array();
    for (auto& [L, k] : c.rich) rich.push_back({{"line", vector_json(L.key())}, {"incidence", k}});
    j["rich_lines"] = rich;
    return j;
}

void pipeline_body(Report& r, const Pipeline316& p, bool census_only) {
    r["draws"] = p.draws.drawn;
    ordered_json rej = ordered_json::object();
    for (auto& [k, n] : p.draws.rejected) rej[k] = n;
    r["rejections"] = rej;
    if (p.net) r["net"] = format_net(*p.net);
    r.check("base_locus_smooth", p.smooth);
    if (!p.smooth) return;
    r["curve_points_F"] = p.curve_points_F;
    r["curve_points_F2"] = p.curve_points_E;
    r.check("involution_found", p.involution_found);
    if (!p.involution_found) return;
    r.check("involution_fixed_point_free", p.fixed_point_free);
    r["centre"] = p.centre.str();
    r["projection_collisions"] = p.collisions;
    r["sample_points_on_line"] = p.meets_line;
    r["census"] = census_json(p.census);
    r["quadrisecants"] = p.quadrisecants();
    r["window"] = {p.window.lo, p.window.hi};
    r.check("projection_injective_on_sample", p.collisions == 0);
    r.check("no_quintisecant", p.no_quintisecant());
    r.check("at_most_two_quadrisecants_per_point", p.max_quadrisecants_per_point <= 2);
    r.check("quadrisecant_count_in_window", p.window.contains(static_cast<double>(p.quadrisecants())));
    if (census_only) return;
    r["cubics_through"] = p.cubics;
    r["double_ideal_degree7"] = p.double_ideal7;
    r.check("no_cubic_through", p.cubics == 0);
    r.check("double_ideal_degree7_at_least_4", p.double_ideal7 >= 4);
}

int cmd_pipeline_3_16(const Config& cfg, bool singular, const char* verb) {
    GF F = parse_field(cfg.field);
    Report r(verb, cfg, F);
    auto p = run_pipeline_3_16(F, cfg.seed, singular, cfg.budget_points, cfg.budget_lines);
    if (singular) {
        r["net"] = p.net ? format_net(*p.net) : "";
        r.check("base_locus_smooth", false);
        return r.finish(cfg);
    }
    pipeline_body(r, p, std::string(verb) == "p3 census");
    return r.finish(cfg);
}

void liaison_body(Report& r, const LiaisonRun& l) {
    const auto& rep = l.report;
    r["cones"] = {rep.cones[0].str(), rep.cones[1].str()};
    r["residual_points_F2"] = rep.residual_points.size();
    ordered_json ci, res;
    for (auto [d, h] : rep.complete_intersection_hf) ci[std::to_string(d)] = h;
    for (auto [d, h] : rep.residual_hf) res[std::to_string(d)] = h;
    r["complete_intersection_hf"] = ci;
    r["residual_hf"] = res;
    r["residual_degree"] = rep.residual_degree;
    r["vertices"] = points_json(rep.vertices);
    r.check("residual_degree_8", rep.residual_degree == 8);
    for (std::size_t i = 0; i < rep.vertices.size(); ++i) {
        r.check("vertex_" + std::to_string(i) + "_on_residual", rep.vertex_on_curve[i]);
        r.check("vertex_" + std::to_string(i) + "_singular", rep.vertex_singular[i]);
    }
}

int cmd_p3(const Config& cfg, const std::string& what) {
    if (what == "census") return cmd_pipeline_3_16(cfg, false, "p3 census");
    if (what == "liaison") {
        GF F = parse_field(cfg.field);
        Report r("p3 liaison", cfg, F);
        liaison_body(r, run_liaison(F, cfg.seed));
        return r.finish(cfg);
    }
    Report r("p3 numerology", cfg, parse_field(cfg.field));
    ordered_json segre = ordered_json::array();
    for (auto [D, sigma] : {std::pair{8, 0}, {8, 1}, {7, 0}, {7, 1}}) {
        auto q = segre_quadratic(8, D, 3, sigma);
        segre.push_back({{"degC", D}, {"degS", 3}, {"sigma", sigma}, {"quadratic", {q.a, q.b, q.c}},
                         {"integer_roots", q.integer_roots()}});
    }
    r["segre"] = segre;
    auto q = segre_quadratic(8, 8, 3, 0);
    r.check("segre_root_k3", q.a == 3 && q.b == -17 && q.c == 24 && q.integer_roots() == std::vector<long long>{3});
    ordered_json ruled = ordered_json::array();
    for (auto [n, p] : {std::pair{6, 2}, {6, 3}}) {
        auto rn = ruled_numerology(n, p);
        ruled.push_back({{"n", n}, {"p", p}, {"P", rn.P}, {"nodes", rn.nodes}});
    }
    r["ruled"] = ruled;
    r.check("ruled_values", ruled_numerology(6, 2).P == 5 && ruled_numerology(6, 3).P == 6 &&
                                ruled_numerology(6, 2).nodes == 8);
    ordered_json cast;
    for (int n = 4; n <= 7; ++n) cast[std::to_string(n)] = castelnuovo_bound(n);
    r["castelnuovo"] = cast;
    r.check("castelnuovo_values", castelnuovo_bound(4) == 1 && castelnuovo_bound(5) == 2 &&
                                      castelnuovo_bound(6) == 4 && castelnuovo_bound(7) == 6);
    return r.finish(cfg);
}

int cmd_pipeline_liaison(const Config& cfg) {
    GF F = parse_field(cfg.field);
    Report r("pipeline-liaison", cfg, F);
    std::string name = cfg.fixture.empty() ? "elliptic_union_f7.txt" : cfg.fixture;
    auto U = parse_elliptic_union(read_fixture(name));
    bool vertex = true;
    for (auto& M : U.web.coeff)
        for (auto& v : M.apply(U.P.x)) vertex &= v.is_zero();
    r["union_points"] = U.points.size();
    r.check("union_every_member_singular", determinant(U.web.matrix()).is_zero());
    r.check("union_vertex_contains_common_point", vertex);
    liaison_body(r, run_liaison(F, cfg.seed));
    return r.finish(cfg);
}

int error_report(const char* status, const std::string& msg, bool json) {
    ordered_json j;
    j["schema"] = kSchema;
    j["status"] = status;
    j["message"] = msg;
    Report::emit(j, json);
    return std::string(status) == "budget_exceeded" ? budget_abort : input_error;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prym5: nets of quadrics, genus-2 webs and space curves over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--field", cfg.field, "Field p or p,k")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed")->capture_default_str();
    app.add_option("--fixture", cfg.fixture, "Fixture file (also looked up in $PRYM5_FIXTURES)");
    app.add_flag("--json", cfg.json, "JSON output");
    app.add_option("--budget-lines", cfg.budget_lines, "Line scan budget")->check(CLI::PositiveNumber);
    app.add_option("--budget-points", cfg.budget_points, "Point enumeration budget")->check(CLI::PositiveNumber);

    bool block = false, random = false, singular = false;
    auto* net = app.add_subcommand("net", "Analyse a net of quadrics");
    auto* kind = net->add_option_group("kind");
    kind->add_flag("--block", block, "Block-diagonal net from the seed");
    kind->add_flag("--random", random, "Random net from the seed");
    kind->require_option(0, 1);
    auto* quintic = app.add_subcommand("quintic", "Discriminant quintic of a net");
    std::string stage = "all", quadric;
    auto* g2 = app.add_subcommand("g2", "Genus-2 web of quadrics");
    g2->add_option("stage", stage)->check(CLI::IsMember({"web", "discriminant", "bisecant", "tropes", "polar", "all"}));
    g2->add_option("--quadric", quadric, "Web coordinates a,b,c,d of a quadric");
    std::string p3what;
    auto* p3 = app.add_subcommand("p3", "Space curve checks");
    p3->add_option("what", p3what)->required()->check(CLI::IsMember({"census", "liaison", "numerology"}));
    auto* p316 = app.add_subcommand("pipeline-3-16", "Block net to projected space curve");
    p316->add_flag("--singular", singular, "Use a net with a singular base point");
    auto* plia = app.add_subcommand("pipeline-liaison", "Elliptic union web and cone liaison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : input_error;
    }

    try {
        if (*net) return cmd_net(cfg, random);
        if (*quintic) return cmd_quintic(cfg);
        if (*g2) return cmd_g2(cfg, stage, quadric);
        if (*p3) return cmd_p3(cfg, p3what);
        if (*p316) return cmd_pipeline_3_16(cfg, singular, "pipeline-3-16");
        if (*plia) return cmd_pipeline_liaison(cfg);
    } catch (const BudgetExceeded& e) {
        return error_report("budget_exceeded", e.what(), cfg.json);
    } catch (const InputError& e) {
        return error_report("input_error", e.what(), cfg.json);
    } catch (const std::invalid_argument& e) {
        return error_report("input_error", e.what(), cfg.json);
    }
    return input_error;
}
