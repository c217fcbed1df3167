#include "bouquet/json_io.hpp"

#include <cmath>
#include <sstream>

namespace bouquet {

namespace {

void write(const Json& j, std::string& out)
{
    switch (j.type()) {
    case Json::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first)
                out += ',';
            first = false;
            out += Json(key).dump();
            out += ':';
            write(value, out);
        }
        out += '}';
        break;
    }
    case Json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& value : j) {
            if (!first)
                out += ',';
            first = false;
            write(value, out);
        }
        out += ']';
        break;
    }
    case Json::value_t::number_float: {
        const double x = j.get<double>();
        out += std::isfinite(x) ? format_real(x) : "null";
        break;
    }
    default:
        out += j.dump();
    }
}

Json real_or_null(double x)
{
    return std::isfinite(x) ? Json(x) : Json(nullptr);
}

Json scalar_json(double x) { return real_or_null(x); }
Json scalar_json(const Rational& q) { return to_fraction_string(q); }

template <class S>
Json point_json(const ThomaConePoint<S>& omega)
{
    Json alpha = Json::array();
    Json beta = Json::array();
    for (const auto& a : omega.alpha)
        alpha.push_back(scalar_json(a));
    for (const auto& b : omega.beta)
        beta.push_back(scalar_json(b));
    return Json{{"alpha", alpha}, {"beta", beta}, {"delta", scalar_json(omega.delta)}};
}

} // namespace

std::string dump(const Json& j)
{
    std::string out;
    write(j, out);
    return out;
}

Json to_json(const Rational& q) { return to_fraction_string(q); }

Json to_json(const GaussianRational& z) { return to_string(z); }

Json to_json(const Partition& p)
{
    Json out = Json::array();
    for (int part : p.parts())
        out.push_back(part);
    return out;
}

Json to_json(const Signature& s) { return Json{{"coords", s.coords()}}; }

Json to_json(const PascalVertex& v) { return Json::array({v.n1, v.n2}); }

Json to_json(long n) { return n; }

Json to_json(const ExactPoint& omega) { return point_json(omega); }

Json to_json(const RealPoint& omega) { return point_json(omega); }

Json to_json(const CoherenceReport& report)
{
    Json items = Json::array();
    for (const auto& it : report.items)
        items.push_back(Json{{"vertex", it.vertex},
                             {"lhs", real_or_null(it.lhs)},
                             {"rhs", real_or_null(it.rhs)},
                             {"discrepancy", real_or_null(it.discrepancy)},
                             {"tail_bound", real_or_null(it.tail_bound)}});
    Json out{{"cutoff_used", report.cutoff_used}, {"exact", report.exact}};
    if (report.exact)
        out["exact_equal"] = report.exact_equal;
    out["max_discrepancy"] = real_or_null(report.max_discrepancy());
    out["max_tail_bound"] = real_or_null(report.max_tail_bound());
    out["items"] = std::move(items);
    return out;
}

Json to_json(const SweepReport& report)
{
    Json params = Json::object();
    for (const auto& [k, v] : report.parameters)
        params[k] = v;
    Json points = Json::array();
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
        Json p{{"param", real_or_null(report.grid[i])}, {"error", real_or_null(report.errors[i])}};
        if (i < report.exact_errors.size() && report.exact_errors[i])
            p["error_exact"] = to_json(*report.exact_errors[i]);
        p["tail_bound"] = real_or_null(report.tail_bounds[i]);
        if (i < report.realized_ratio.size())
            p["realized_ratio"] = real_or_null(report.realized_ratio[i]);
        points.push_back(std::move(p));
    }
    Json out{{"sweep", report.name},
             {"parameters", params},
             {"points", points},
             {"fitted_exponent", real_or_null(report.fitted_exponent)},
             {"fit_residual", real_or_null(report.fit_residual)}};
    if (report.bound_constant > 0.0)
        out["bound_constant"] = report.bound_constant;
    out["passed"] = report.passed;
    out["criterion"] = report.verdict;
    return out;
}

Json to_json(const JumpPath& path)
{
    Json jumps = Json::array();
    for (double t : path.jumps)
        jumps.push_back(t);
    return Json{{"horizon", path.horizon}, {"count", path.jumps.size()}, {"jumps", jumps}};
}

Json to_json(const GeneralizedTableau& t)
{
    return Json{{"shape", to_json(t.shape)}, {"horizon", t.horizon}, {"fill", t.fill}};
}

Json to_json(const StandardTableau& t) { return Json{{"shape", to_json(t.shape())}, {"rows", t.rows}}; }

Json to_json(const SSYT& t)
{
    return Json{{"shape", to_json(t.shape())}, {"max_entry", t.max_entry}, {"rows", t.rows}};
}

Json to_json(const GTScheme& scheme) { return Json{{"rows", scheme.rows}}; }

Json to_json(const DegenerationReport& report)
{
    Json levels = Json::array();
    for (std::size_t i = 0; i < report.scales.size(); ++i)
        levels.push_back(Json{{"L", report.scales[i]},
                              {"N", report.levels[i]},
                              {"discrepancy", report.discrepancy[i]},
                              {"means", report.means[i]}});
    return Json{{"samples", report.samples},
                {"reference_samples", report.reference_samples},
                {"reference_means", report.reference_means},
                {"reference_second_moments", report.reference_second_moments},
                {"levels", levels},
                {"decreasing", report.decreasing()}};
}

Json to_json(const ZWNormalization& norm)
{
    return Json{{"cutoff", norm.cutoff},
                {"signatures", norm.signatures},
                {"sum", real_or_null(norm.sum)},
                {"normalization_constant", real_or_null(norm.normalization_constant)},
                {"unnormalized_sum", real_or_null(norm.sum / norm.normalization_constant)},
                {"last_shell_mass", real_or_null(norm.last_shell)},
                {"tail_note", "last-shell mass is an empirical proxy, not a bound"}};
}

std::string sweep_csv(const SweepReport& report)
{
    std::ostringstream out;
    out << "param,error,tail_bound,error_exact\n";
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
        out << format_real(report.grid[i]) << ',' << format_real(report.errors[i]) << ','
            << format_real(report.tail_bounds[i]) << ',';
        if (i < report.exact_errors.size() && report.exact_errors[i])
            out << to_fraction_string(*report.exact_errors[i]);
        out << '\n';
    }
    return out.str();
}

} // namespace bouquet
