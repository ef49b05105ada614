#ifndef BERGE_BOUNDS_HPP
#define BERGE_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "berge/core.hpp"
#include "berge/report.hpp"
#include "berge/search.hpp"

namespace berge {

struct bound_report {
    std::string name;
    std::vector<std::pair<std::string, double>> parameters;
    double value = 0.0;
    std::vector<std::pair<std::string, double>> components; // value = sum of these
    std::vector<std::string> assumptions;
};

struct hypothesis_witness {
    bool ok = false;
    vpair subdivided_edge{0, 0}; // edge of f0 whose subdivision gives f
    int deleted_vertex = -1;     // vertex of f whose deletion gives f_prime
};

// f obtained from f0 by subdividing an edge, f_prime from f by deleting a
// vertex; returns the witnessing edge and vertex.
hypothesis_witness check_hypotheses(const graph& f0, const graph& f, const graph& f_prime);

struct theorem1_quantities {
    double ex_kr_f = 0;  // ex(n, K_r, F)
    double ex_f0 = 0;    // ex(n, F0)
    double ex_lin = 0;   // ex_r^lin(n, Berge-F)
    double c = 0;        // ex(n, K_{r-1}, F') <= c n   (variant ii)
    bool has_ex_kr_f = false, has_ex_f0 = false, has_ex_lin = false, has_c = false;
    std::vector<std::string> assumptions; // provenance of each quantity
};

// (i)  ex(n,K_r,F) + 2^{r-1} ex(n,F0) + ex_r^lin
// (ii) max{1, 2c/r} 2^{r-1} ex(n,F0) + ex_r^lin, the max evaluated literally.
bound_report theorem1_bound(const std::string& variant, int n, int r,
                            const theorem1_quantities& q);

enum class bound_source { exact, formula };

// (16k-16)/3 ex(ceil(n/2), C_2k) + ex_3^lin(n, Berge-C_{2k+1}); the formula
// source evaluates the explicit closed-form chain instead.
bound_report theorem2_bound(int n, int k, bound_source source, double log_base = 0.0,
                            const search_options& opt = {});

struct cited_params {
    int n = 0;
    int k = 0;
    int r = 0;
    double log_base = 0.0;              // 0: natural log
    bound_source source = bound_source::formula; // for composite evaluators
    search_options search = {};
};

// erdos_gallai, luo, bukh_jiang, furedi_ozkahya_lin, furedi_ozkahya_odd,
// bollobas_gyori, ergemlidze_methuku, alon_shikhelman_odd, gyori_li
bound_report cited_bound(const std::string& name, const cited_params& p);
std::vector<std::string> cited_bound_names();

struct dashboard_row {
    int n = 0;
    bound_report theorem2;
    bound_report furedi_ozkahya_odd;
    std::optional<long long> exact_berge; // ex_3(n, Berge-C_{2k+1}) when caps allow
    bool improved = false;                // theorem2 < furedi_ozkahya_odd
};

std::vector<dashboard_row> bound_dashboard(const std::vector<int>& ns, int k,
                                           bound_source source, double log_base = 0.0,
                                           const search_options& opt = {});

// Flat record with name/parameters/value/components/assumptions fields.
record bound_report_record(const bound_report& rep);

} // namespace berge

#endif
