#include "berge/bounds.hpp"

#include <cmath>

#include "berge/canonical.hpp"
#include "berge/parallel.hpp"

namespace berge {

namespace {

double log_of(double x, double base) {
    return base <= 0.0 ? std::log(x) : std::log(x) / std::log(base);
}

std::string log_note(double base) {
    return base <= 0.0 ? "log: natural" : "log: base " + std::to_string(base);
}

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

int ceil_half(int n) { return (n + 1) / 2; }

} // namespace

hypothesis_witness check_hypotheses(const graph& f0, const graph& f, const graph& f_prime) {
    hypothesis_witness w;
    if (f.vertex_count() != f0.vertex_count() + 1) return w;
    if (f_prime.vertex_count() != f.vertex_count() - 1) return w;
    bool found_edge = false;
    for (vpair e : f0.edges()) {
        if (is_isomorphic(subdivide_edge(f0, e), f)) {
            w.subdivided_edge = e;
            found_edge = true;
            break;
        }
    }
    if (!found_edge) return w;
    for (int v = 0; v < f.vertex_count(); ++v) {
        if (is_isomorphic(delete_vertex(f, v), f_prime)) {
            w.deleted_vertex = v;
            w.ok = true;
            return w;
        }
    }
    return w;
}

bound_report theorem1_bound(const std::string& variant, int n, int r,
                            const theorem1_quantities& q) {
    require(variant == "i" || variant == "ii", errc::invalid_parameter,
            "variant must be 'i' or 'ii'");
    bound_report rep;
    rep.parameters = {{"n", static_cast<double>(n)}, {"r", static_cast<double>(r)}};
    rep.assumptions = q.assumptions;
    double two_pow = std::ldexp(1.0, r - 1);
    require(q.has_ex_f0, errc::incomplete_input, "missing quantity ex(n, F0)");
    require(q.has_ex_lin, errc::incomplete_input, "missing quantity ex_r^lin(n, Berge-F)");
    if (variant == "i") {
        require(q.has_ex_kr_f, errc::incomplete_input, "missing quantity ex(n, K_r, F)");
        rep.name = "theorem1-i";
        rep.components = {{"ex(n,K_r,F)", q.ex_kr_f},
                          {"2^{r-1} ex(n,F0)", two_pow * q.ex_f0},
                          {"ex_r^lin(n,Berge-F)", q.ex_lin}};
    } else {
        require(q.has_c, errc::incomplete_input, "missing constant c");
        rep.name = "theorem1-ii";
        double factor = std::max(1.0, 2.0 * q.c / static_cast<double>(r));
        rep.components = {{"max{1,2c/r} 2^{r-1} ex(n,F0)", factor * two_pow * q.ex_f0},
                          {"ex_r^lin(n,Berge-F)", q.ex_lin}};
        rep.parameters.push_back({"c", q.c});
        rep.assumptions.push_back("max{1,2c/r} evaluated literally");
    }
    for (const auto& [what, v] : rep.components) rep.value += v;
    (void)n;
    return rep;
}

bound_report theorem2_bound(int n, int k, bound_source source, double log_base,
                            const search_options& opt) {
    require(k > 1, errc::out_of_domain, "theorem2 needs k > 1");
    bound_report rep;
    rep.name = "theorem2";
    rep.parameters = {{"n", static_cast<double>(n)}, {"k", static_cast<double>(k)}};
    int half = ceil_half(n);
    if (source == bound_source::exact) {
        auto even_cycle = exact_ex_graph(half, family_spec::cycle(2 * k), opt);
        auto lin = exact_ex_berge(n, 3, family_spec::cycle(2 * k + 1), true, opt);
        rep.components = {
            {"(16k-16)/3 ex(ceil(n/2),C_2k)",
             (16.0 * k - 16.0) / 3.0 * static_cast<double>(even_cycle.value)},
            {"ex_3^lin(n,Berge-C_{2k+1})", static_cast<double>(lin.value)}};
        rep.assumptions = {"ex(ceil(n/2),C_2k): exact", "ex_3^lin: exact"};
    } else {
        double coeff = (1280.0 * k - 1280.0) / 3.0 * std::sqrt(k * log_of(k, log_base));
        rep.components = {
            {"(1280k-1280)/3 sqrt(k log k) ceil(n/2)^{1+1/k}",
             coeff * std::pow(static_cast<double>(half), 1.0 + 1.0 / k)},
            {"2k n^{1+1/k}", 2.0 * k * std::pow(static_cast<double>(n), 1.0 + 1.0 / k)},
            {"(10k^2+9k)n", (10.0 * k * k + 9.0 * k) * static_cast<double>(n)}};
        rep.assumptions = {log_note(log_base), "ex(ceil(n/2),C_2k): Bukh-Jiang upper bound",
                           "ex_3^lin: Furedi-Ozkahya upper bound"};
    }
    for (const auto& [what, v] : rep.components) rep.value += v;
    return rep;
}

std::vector<std::string> cited_bound_names() {
    return {"erdos_gallai",       "luo",
            "bukh_jiang",         "furedi_ozkahya_lin",
            "furedi_ozkahya_odd", "bollobas_gyori",
            "ergemlidze_methuku", "alon_shikhelman_odd",
            "gyori_li"};
}

bound_report cited_bound(const std::string& name, const cited_params& p) {
    bound_report rep;
    rep.name = name;
    double n = static_cast<double>(p.n);
    if (name == "erdos_gallai") {
        require(p.k >= 1 && p.n >= 0, errc::invalid_parameter, "need k >= 1, n >= 0");
        rep.parameters = {{"k", static_cast<double>(p.k)}, {"n", n}};
        rep.components = {{"(k-1)n", (p.k - 1.0) * n}};
    } else if (name == "luo") {
        require(p.k >= 1 && p.r >= 2 && p.n >= 0, errc::invalid_parameter,
                "need k >= 1, r >= 2, n >= 0");
        rep.parameters = {{"k", static_cast<double>(p.k)},
                          {"r", static_cast<double>(p.r)},
                          {"n", n}};
        rep.components = {
            {"n/(2k-1) binom(2k-1,r-1)", n / (2.0 * p.k - 1.0) * binom(2 * p.k - 1, p.r - 1)}};
    } else if (name == "bukh_jiang") {
        require(p.k >= 2 && p.n >= 1, errc::invalid_parameter, "need k >= 2, n >= 1");
        rep.parameters = {{"k", static_cast<double>(p.k)}, {"n", n}};
        rep.components = {
            {"80 sqrt(k log k) n^{1+1/k}",
             80.0 * std::sqrt(p.k * log_of(p.k, p.log_base)) * std::pow(n, 1.0 + 1.0 / p.k)},
            {"10k^2 n", 10.0 * p.k * p.k * n}};
        rep.assumptions = {log_note(p.log_base)};
    } else if (name == "furedi_ozkahya_lin") {
        require(p.k >= 2 && p.n >= 0, errc::invalid_parameter, "need k >= 2, n >= 0");
        rep.parameters = {{"k", static_cast<double>(p.k)}, {"n", n}};
        rep.components = {{"2k n^{1+1/k}", 2.0 * p.k * std::pow(n, 1.0 + 1.0 / p.k)},
                          {"9kn", 9.0 * p.k * n}};
    } else if (name == "furedi_ozkahya_odd") {
        require(p.k >= 2 && p.n >= 1, errc::invalid_parameter, "need k >= 2, n >= 1");
        rep.parameters = {{"k", static_cast<double>(p.k)}, {"n", n}};
        if (p.source == bound_source::exact) {
            auto tri = exact_generalized_ex(p.n, 3, family_spec::cycle(2 * p.k + 1), p.search);
            auto odd = exact_ex_graph(p.n, family_spec::cycle(2 * p.k + 1), p.search);
            auto lin = exact_ex_berge(p.n, 3, family_spec::cycle(2 * p.k + 1), true, p.search);
            rep.components = {{"ex(n,K_3,C_{2k+1})", static_cast<double>(tri.value)},
                              {"4 ex(n,C_{2k+1})", 4.0 * static_cast<double>(odd.value)},
                              {"12 ex_3^lin", 12.0 * static_cast<double>(lin.value)}};
            rep.assumptions = {"all addends exact"};
        } else {
            double as_term = cited_bound("alon_shikhelman_odd", p).value;
            rep.components = {{"ex(n,K_3,C_{2k+1})", as_term},
                              {"4 ex(n,C_{2k+1})", 4.0 * (n * n / 4.0)},
                              {"12 ex_3^lin", 12.0 * cited_bound("furedi_ozkahya_lin", p).value}};
            rep.assumptions = {log_note(p.log_base),
                               "ex(n,K_3,C_{2k+1}): Alon-Shikhelman via Bukh-Jiang",
                               "ex(n,C_{2k+1}): bipartite bound n^2/4 (needs n >= 4k)"};
        }
    } else if (name == "bollobas_gyori") {
        require(p.n >= 0, errc::invalid_parameter, "need n >= 0");
        rep.parameters = {{"n", n}};
        rep.components = {{"sqrt(2) n^{3/2}", std::sqrt(2.0) * std::pow(n, 1.5)},
                          {"4.5n", 4.5 * n}};
    } else if (name == "ergemlidze_methuku") {
        require(p.n >= 0, errc::invalid_parameter, "need n >= 0");
        rep.parameters = {{"n", n}};
        rep.components = {{"0.231975 n^{3/2}", 0.231975 * std::pow(n, 1.5)}};
    } else if (name == "alon_shikhelman_odd") {
        require(p.k >= 2 && p.n >= 1, errc::invalid_parameter, "need k >= 2, n >= 1");
        rep.parameters = {{"k", static_cast<double>(p.k)}, {"n", n}};
        double even_cycle;
        if (p.source == bound_source::exact) {
            even_cycle = static_cast<double>(
                exact_ex_graph(ceil_half(p.n), family_spec::cycle(2 * p.k), p.search).value);
            rep.assumptions = {"ex(ceil(n/2),C_2k): exact"};
        } else {
            cited_params sub = p;
            sub.n = ceil_half(p.n);
            even_cycle = cited_bound("bukh_jiang", sub).value;
            rep.assumptions = {log_note(p.log_base), "ex(ceil(n/2),C_2k): Bukh-Jiang upper bound"};
        }
        rep.components = {{"(16k-8)/3 ex(ceil(n/2),C_2k)", (16.0 * p.k - 8.0) / 3.0 * even_cycle}};
    } else if (name == "gyori_li") {
        require(p.k >= 2 && p.n >= 1, errc::invalid_parameter, "need k >= 2, n >= 1");
        rep.parameters = {{"k", static_cast<double>(p.k)}, {"n", n}};
        double even_cycle;
        if (p.source == bound_source::exact) {
            even_cycle = static_cast<double>(
                exact_ex_graph(p.n, family_spec::cycle(2 * p.k), p.search).value);
            rep.assumptions = {"ex(n,C_2k): exact"};
        } else {
            even_cycle = cited_bound("bukh_jiang", p).value;
            rep.assumptions = {log_note(p.log_base), "ex(n,C_2k): Bukh-Jiang upper bound"};
        }
        rep.components = {
            {"(2k-2)(16k-8)/3 ex(n,C_2k)", (2.0 * p.k - 2.0) * (16.0 * p.k - 8.0) / 3.0 * even_cycle}};
    } else {
        fail(errc::invalid_parameter, "unknown bound name: " + name);
    }
    for (const auto& [what, v] : rep.components) rep.value += v;
    return rep;
}

record bound_report_record(const bound_report& rep) {
    record rec;
    rec.add("name", rep.name);
    std::string params;
    for (std::size_t i = 0; i < rep.parameters.size(); ++i) {
        if (i) params += "; ";
        params += rep.parameters[i].first + " = " + format_double(rep.parameters[i].second);
    }
    rec.add("parameters", params);
    rec.add("value", rep.value);
    std::string comps;
    for (std::size_t i = 0; i < rep.components.size(); ++i) {
        if (i) comps += "; ";
        comps += rep.components[i].first + " = " + format_double(rep.components[i].second);
    }
    rec.add("components", comps);
    std::string assume;
    for (std::size_t i = 0; i < rep.assumptions.size(); ++i) {
        if (i) assume += "; ";
        assume += rep.assumptions[i];
    }
    rec.add("assumptions", assume);
    return rec;
}

std::vector<dashboard_row> bound_dashboard(const std::vector<int>& ns, int k, bound_source source,
                                           double log_base, const search_options& opt) {
    std::vector<dashboard_row> rows(ns.size());
    parallelism ctx{opt.workers};
    search_options row_opt = opt;
    row_opt.workers = 1; // rows are the parallel unit
    parallel_for(ns.size(), ctx, [&](std::size_t i) {
        dashboard_row row;
        row.n = ns[i];
        row.theorem2 = theorem2_bound(ns[i], k, source, log_base, row_opt);
        cited_params p;
        p.n = ns[i];
        p.k = k;
        p.log_base = log_base;
        p.source = source;
        p.search = row_opt;
        row.furedi_ozkahya_odd = cited_bound("furedi_ozkahya_odd", p);
        if (source == bound_source::exact)
            row.exact_berge =
                exact_ex_berge(ns[i], 3, family_spec::cycle(2 * k + 1), false, row_opt).value;
        row.improved = row.theorem2.value < row.furedi_ozkahya_odd.value;
        rows[i] = row;
    });
    return rows;
}

} // namespace berge
