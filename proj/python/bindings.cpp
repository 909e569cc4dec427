#include "prym5/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace prym5;

namespace {

std::vector<std::string> points_str(const std::vector<PointF>& pts) {
    std::vector<std::string> out;
    for (auto& p : pts) out.push_back(p.str());
    return out;
}

py::dict analysis_dict(const SymNet& net, const NetAnalysis& a) {
    py::dict d;
    d["net"] = format_net(net);
    d["admissible"] = a.admission.ok();
    d["admissibility_failure"] = a.admission.failure;
    d["gamma"] = a.disc.gamma.str();
    d["split"] = to_string(a.split.base_verdict);
    if (a.split.base) {
        d["conic"] = a.split.base->conic.str();
        d["cubic"] = a.split.base->cubic.str();
    }
    d["base_points_F"] = a.admission.base_F.size();
    d["base_points_F2"] = a.admission.base_E.size();
    d["involution"] = to_string(a.involution.status);
    d["eigensignature"] = a.signature;
    d["fixed_point_free"] = a.fixed_point_free_F && a.fixed_point_free_E;
    d["hilbert"] = a.hilbert;
    return d;
}

py::dict block_net(unsigned p, std::uint64_t seed) {
    Rng rng(seed);
    DrawStats stats;
    auto drawn = draw_admissible_block_net(rng, GF(p), stats);
    if (!drawn) throw std::runtime_error("no admissible block net in 200 draws");
    auto d = analysis_dict(drawn->first, analyze_net(drawn->first));
    d["draws"] = stats.drawn;
    return d;
}

py::dict net_fixture(const std::string& text) {
    SymNet net = parse_net(text);
    return analysis_dict(net, analyze_net(net));
}

py::dict pipeline(unsigned p, std::uint64_t seed, bool singular) {
    auto r = run_pipeline_3_16(GF(p), seed, singular);
    py::dict d;
    d["seed"] = r.seed;
    d["passed"] = r.passed();
    d["smooth"] = r.smooth;
    d["involution_found"] = r.involution_found;
    d["fixed_point_free"] = r.fixed_point_free;
    d["curve_points_F"] = r.curve_points_F;
    d["curve_points_F2"] = r.curve_points_E;
    d["collisions"] = r.collisions;
    d["by_incidence"] = r.census.by_incidence;
    d["quadrisecants"] = r.quadrisecants();
    d["max_quadrisecants_per_point"] = r.max_quadrisecants_per_point;
    d["cubics_through"] = r.cubics;
    d["double_ideal_degree7"] = r.double_ideal7;
    d["window"] = std::pair{r.window.lo, r.window.hi};
    return d;
}

py::dict genus2(const std::string& text, std::optional<std::vector<long long>> quadric, std::uint64_t seed) {
    auto fx = parse_genus2(text);
    std::optional<std::vector<Fq>> q;
    if (quadric) {
        q.emplace();
        for (auto c : *quadric) q->push_back(fx.curve.field.of(c));
    }
    auto g = run_genus2(fx, q, seed);
    py::dict d;
    d["sample_points"] = g.sample_points;
    d["plane"] = g.disc.plane.str();
    d["quartic"] = g.disc.quartic.str();
    d["certified"] = g.disc.plane * g.disc.quartic == g.disc.det;
    std::size_t nodes = 0;
    for (auto& s : g.quartic_singular) nodes += s.node;
    d["nodes"] = nodes;
    d["all_nodes"] = g.all_nodes();
    d["section_singular"] = g.section_singular.size();
    d["tropes"] = g.tropes.size();
    std::vector<bool> polar;
    for (auto& c : g.polar) polar.push_back(c.passed());
    d["polar_passed"] = polar;
    if (g.admissibility) {
        d["admissible"] = g.admissibility->admissible;
        d["bisecant_pairs"] = g.bisecants.size();
    }
    return d;
}

py::dict liaison(unsigned p, std::uint64_t seed) {
    auto r = run_liaison(GF(p), seed);
    py::dict d;
    d["passed"] = r.passed();
    d["residual_degree"] = r.report.residual_degree;
    d["residual_hf"] = r.report.residual_hf;
    d["vertices"] = points_str(r.report.vertices);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Nets of quadrics, genus-2 webs and space curves over finite fields";
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    m.def("block_net", &block_net, py::arg("p"), py::arg("seed"), "Analyse the first admissible block net of a seed");
    m.def("net_fixture", &net_fixture, py::arg("text"), "Analyse a net given in fixture text");
    m.def("pipeline_3_16", &pipeline, py::arg("p"), py::arg("seed"), py::arg("singular") = false);
    m.def("genus2", &genus2, py::arg("text"), py::arg("quadric") = py::none(), py::arg("seed") = 1);
    m.def("liaison", &liaison, py::arg("p"), py::arg("seed"));
    m.def(
        "segre_quadratic",
        [](long long t, long long degC, long long degS, long long sigma) {
            auto q = segre_quadratic(t, degC, degS, sigma);
            return std::tuple{q.a, q.b, q.c, q.integer_roots()};
        },
        py::arg("twice_g_minus_2"), py::arg("degC"), py::arg("degS"), py::arg("sigma"));
    m.def(
        "ruled_numerology",
        [](long long n, long long p) {
            auto r = ruled_numerology(n, p);
            return std::pair{r.P, r.nodes};
        },
        py::arg("n"), py::arg("p"));
    m.def("castelnuovo_bound", &castelnuovo_bound, py::arg("n"));
}
