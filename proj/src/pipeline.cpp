#include "prym5/pipeline.hpp"

#include <cmath>

namespace prym5 {

namespace {

GF quadratic_extension(const GF& F) { return GF(F.characteristic(), 2 * F.degree()); }

bool has_rational_point(const Admission& a) { return !a.base_F.empty(); }

}  // namespace

std::map<int, long long> hilbert_signature(const SymNet& net) {
    std::map<int, long long> hf;
    auto gens = net.quadrics();
    for (int d = 2; d <= 6; ++d) hf[d] = hilbert_function<Fq>(net.field, 5, gens, d);
    return hf;
}

bool hilbert_signature_holds(const std::map<int, long long>& hf) {
    for (int d = 2; d <= 6; ++d) {
        auto it = hf.find(d);
        if (it == hf.end() || it->second != 8LL * d - 4) return false;
    }
    return true;
}

Admission check_admissible(const SymNet& net, std::uint64_t budget) {
    Admission a;
    GF F = net.field, E = quadratic_extension(net.field);
    if (!coefficients_independent(net)) {
        a.failure = "dependent_coefficients";
        return a;
    }
    if (!no_plane_pair_members(net, {F, E})) {
        a.failure = "rank_le_2_member";
        return a;
    }
    if (discriminant_quintic(net).trigonal) {
        a.failure = "degenerate_discriminant";
        return a;
    }
    a.base_F = base_locus(net, F, budget);
    a.base_E = base_locus(net, E, budget);
    if (!smoothness_check(net, a.base_F) || !smoothness_check(net, a.base_E)) a.failure = "singular_base_locus";
    return a;
}

NetAnalysis analyze_net(const SymNet& net, std::uint64_t budget) {
    NetAnalysis r;
    r.admission = check_admissible(net, budget);
    r.disc = discriminant_quintic(net);
    r.hilbert = hilbert_signature(net);
    if (r.disc.trigonal) return r;
    r.squarefree = squarefree_test(r.disc.gamma);
    r.split = split_report(r.disc.gamma);
    r.smooth = r.admission.failure != "singular_base_locus" && r.admission.ok();
    r.involution = recover_involution(net);
    if (r.involution.status == InvolutionStatus::found) {
        const MatF& s = *r.involution.sigma;
        r.signature = eigensignature(s);
        r.fixed_point_free_F = fixed_point_check(net, s, net.field, budget).fixed_point_free;
        r.fixed_point_free_E = fixed_point_check(net, s, quadratic_extension(net.field), budget).fixed_point_free;
    }
    return r;
}

std::optional<std::pair<SymNet, Admission>> draw_admissible_block_net(Rng& rng, const GF& F, DrawStats& stats,
                                                                      bool need_rational_point, int max_draws,
                                                                      std::uint64_t budget) {
    for (int i = 0; i < max_draws; ++i) {
        ++stats.drawn;
        SymNet net = make_block_net(random_block_pair(rng, F));
        Admission a = check_admissible(net, budget);
        if (!a.ok()) {
            ++stats.rejected[a.failure];
            continue;
        }
        if (need_rational_point && !has_rational_point(a)) {
            ++stats.rejected["no_rational_base_point"];
            continue;
        }
        return std::make_pair(std::move(net), std::move(a));
    }
    return std::nullopt;
}

std::optional<SymNet> draw_singular_block_net(Rng& rng, const GF& F, int max_draws, std::uint64_t budget) {
    for (int i = 0; i < max_draws; ++i) {
        SymNet net = make_block_net(random_block_pair(rng, F));
        if (!coefficients_independent(net)) continue;
        auto pts = base_locus(net, F, budget);
        if (!smoothness_check(net, pts)) return net;
    }
    return std::nullopt;
}

Window hasse_weil_window(std::uint64_t q, int genus, double slack) {
    double c = static_cast<double>(q) + 1, w = 2.0 * genus * std::sqrt(static_cast<double>(q));
    return {c - w - slack, c + w + slack};
}

bool Pipeline316::passed() const {
    return smooth && involution_found && fixed_point_free && collisions == 0 && no_quintisecant() && cubics == 0 &&
           double_ideal7 >= 4 && max_quadrisecants_per_point <= 2 && window.contains(static_cast<double>(quadrisecants()));
}

Pipeline316 run_pipeline_3_16(const GF& F, std::uint64_t seed, bool singular, std::uint64_t budget_points,
                              std::uint64_t budget_lines) {
    Pipeline316 r;
    r.seed = seed;
    r.window = hasse_weil_window(F.order(), 2, 8);
    Rng rng(seed);
    if (singular) {
        r.net = draw_singular_block_net(rng, F, 500, budget_points);
        return r;
    }
    auto drawn = draw_admissible_block_net(rng, F, r.draws, true, 200, budget_points);
    if (!drawn) return r;
    auto& [net, adm] = *drawn;
    r.net = net;
    r.smooth = true;
    r.curve_points_F = adm.base_F.size();
    r.curve_points_E = adm.base_E.size();

    auto inv = recover_involution(net);
    r.involution_found = inv.status == InvolutionStatus::found;
    if (!r.involution_found) return r;
    const MatF& sigma = *inv.sigma;
    r.fixed_point_free = fixed_point_check(net, sigma, F, budget_points).fixed_point_free &&
                         fixed_point_check(net, sigma, quadratic_extension(F), budget_points).fixed_point_free;

    r.centre = adm.base_F.front();
    auto pr = project_from_point(adm.base_E, r.centre, net.quadrics(), F);
    r.collisions = pr.collisions;
    auto vminus = (sigma + MatF::identity(F, 5)).nullspace();
    ProjLine L = ProjLine::through(pr.matrix.apply(vminus[0]), pr.matrix.apply(vminus[1]));
    SpaceCurveSample C = pr.image;
    C.lines.push_back(L);
    for (auto& P : C.points) r.meets_line += L.contains(P.x);

    r.census = secant_census(C, budget_lines);
    r.max_quadrisecants_per_point = max_quadrisecants_through_rational_point(C, r.census);
    r.cubics = cubic_through(C);
    r.double_ideal7 = double_ideal_dimension(C, 7);
    return r;
}

PolarChecks check_polar(const PolyF& quartic, const Trope& trope, const std::vector<SingularPoint>& nodes, Rng& rng,
                        int samples) {
    PolarChecks c;
    GF F = quartic.domain();
    PolarMap pm = polar_cubic_map(quartic, trope);
    c.rank = pm.rank;

    std::vector<Fq> e0(4, F.zero());
    e0[0] = F.one();
    auto back = pm.to_adapted.inverse();
    c.unit_point_gives_F3 = back && polar_cubic(pm, back->apply(e0)) == pm.F3;

    // Nodes of the quartic on the trope plane, in plane coordinates.
    std::vector<std::vector<Fq>> plane_nodes;
    for (auto& s : nodes) {
        auto xa = lift(pm.to_adapted, s.point.x[0].domain()).apply(s.point.x);
        if (!xa[0].is_zero()) continue;
        plane_nodes.push_back({xa[1], xa[2], xa[3]});
    }
    c.nodes_on_trope = plane_nodes.size();

    c.plane_points_divisible = true;
    c.nodes_on_images = true;
    for (int i = 0; i < samples; ++i) {
        std::vector<Fq> x(4);
        for (auto& v : x) v = rng.element(F);
        PolyF img = polar_cubic(pm, x);
        for (auto& u : plane_nodes)
            if (!lift(img, u[0].domain()).evaluate(u).is_zero()) c.nodes_on_images = false;
        std::vector<Fq> xa(4, F.zero());
        for (int k = 1; k < 4; ++k) xa[k] = rng.element(F);
        PolyF on_plane = polar_cubic_adapted(pm, xa);
        if (!on_plane.is_zero() && !exact_divide(on_plane, pm.C2)) c.plane_points_divisible = false;
    }
    return c;
}

bool Genus2Run::all_nodes() const {
    for (auto& s : quartic_singular)
        if (!s.node) return false;
    return true;
}

Genus2Run run_genus2(const Genus2Fixture& fx, std::optional<std::vector<Fq>> quadric, std::uint64_t seed) {
    Genus2Run r;
    r.fixture = fx;
    GF F = fx.curve.field, E = quadratic_extension(F);
    Genus2Embedding emb(fx.curve, fx.divisor);
    auto pts = embedded_sample(emb);
    r.sample_points = pts.size();
    r.trisecant_free = trisecant_absence(pts);
    r.web = quadric_web(pts, F);
    r.disc = web_discriminant(r.web);
    r.quartic_singular = singular_locus(r.disc.quartic, E);

    std::vector<Fq> h;
    for (int i = 0; i < 4; ++i) {
        Monomial m;
        m.e[i] = 1;
        h.push_back(r.disc.plane.coeff(m));
    }
    r.section = pull_back(r.disc.quartic, hyperplane_basis(h));
    if (!r.section.is_zero() && !poly_square_root(r.section)) r.section_singular = singular_locus(r.section, E);

    r.tropes_scanned = F.order() <= 7;
    if (r.tropes_scanned) {
        r.tropes = trope_planes(r.disc.quartic);
    } else if (auto t = trope_on_plane(r.disc.quartic, h)) {
        r.tropes.push_back(*t);
    }
    Rng rng = Rng(seed).split(0x706f6c6172);
    for (auto& t : r.tropes) r.polar.push_back(check_polar(r.disc.quartic, t, r.quartic_singular, rng));

    if (quadric) {
        if (!emb.three_k()) throw std::invalid_argument("--quadric needs the divisor class 3K");
        if (quadric->size() != 4) throw std::invalid_argument("a web quadric has 4 coordinates");
        MatF Q = r.web.at(*quadric);
        r.quadric = quadric;
        r.admissibility = admissible_quadric(emb, Q);
        r.bisecant_window = hasse_weil_window(F.order(), 5, 0);
        if (r.admissibility->admissible) r.bisecants = bisecant_curve(emb, Q);
    }
    return r;
}

bool LiaisonRun::passed() const {
    if (report.residual_degree != 8 || report.vertices.size() != 2) return false;
    for (std::size_t i = 0; i < 2; ++i)
        if (!report.vertex_on_curve[i] || !report.vertex_singular[i]) return false;
    return true;
}

LiaisonRun run_liaison(const GF& F, std::uint64_t seed) {
    LiaisonRun r;
    r.seed = seed;
    Rng rng(seed);
    auto cone = [&]() {
        std::vector<PolyF::Term> ts;
        for (auto& m : monomials(3, 3))
            if (m.e[0] != 3) ts.push_back({m, rng.element(F)});
        return PolyF::from_terms(F, 3, 3, ts);
    };
    PolyF g1 = cone();
    PolyF g2 = cone();
    r.report = cone_liaison(g1, g2);
    return r;
}

}  // namespace prym5
