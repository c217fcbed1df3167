#include "bouquet/cli.hpp"

#include "bouquet/boundary.hpp"
#include "bouquet/json_io.hpp"
#include "bouquet/limits.hpp"
#include "bouquet/links.hpp"
#include "bouquet/measures.hpp"
#include "bouquet/paths.hpp"
#include "bouquet/symfunc.hpp"

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace bouquet::cli {

namespace {

struct Options {
    double epsilon = 1e-9;
    std::uint64_t seed = 0;
    std::string output = "-";

    std::string system;
    std::string family;
    std::string theorem;
    std::string suite;

    std::string nu;
    std::string mu;
    std::string signature;
    std::string shape;
    int m = -1;
    int level = -1;
    std::string q;
    std::string r_from;
    std::string r_to;
    std::string r;
    std::string r_prime;
    std::string ratio;
    std::string x;
    std::string c;
    std::string z;
    std::string zp;
    std::string w;
    std::string wp;
    std::string alpha;
    std::string beta;
    std::string delta;
    std::string alpha_minus;
    std::string beta_minus;
    std::string delta_minus;
    std::string route = "auto";
    std::string phi_range;
    std::string grid;
    std::string x_grid;
    int k = 0;
    long cutoff = -1;
    long n_samples = 1;
    int max_entry = -1;
    std::string out_dir;
};

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<std::string> split(const std::string& text, char sep = ',')
{
    std::vector<std::string> out;
    if (text.empty())
        return out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        out.push_back(item);
    return out;
}

long parse_long(const std::string& s)
{
    const Rational q = parse_rational(s);
    if (!is_integer(q))
        throw InvalidInput("expected an integer, got '" + s + "'");
    return q.get_num().get_si();
}

std::vector<long> parse_long_list(const std::string& text)
{
    std::vector<long> out;
    for (const auto& s : split(text))
        out.push_back(parse_long(s));
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text)
{
    std::vector<Rational> out;
    for (const auto& s : split(text))
        out.push_back(parse_rational(s));
    return out;
}

std::vector<double> parse_double_list(const std::string& text)
{
    std::vector<double> out;
    for (const auto& q : parse_rational_list(text))
        out.push_back(q.get_d());
    return out;
}

Partition parse_partition(const std::string& text)
{
    if (text.empty() || text == "-" || text == "0")
        return {};
    std::vector<int> parts;
    for (long v : parse_long_list(text))
        parts.push_back(static_cast<int>(v));
    return Partition(parts);
}

Signature parse_signature(const std::string& text)
{
    return Signature(parse_long_list(text));
}

Rational required_rational(const std::string& value, const char* flag)
{
    if (value.empty())
        throw InvalidInput(std::string("missing required flag ") + flag);
    return parse_rational(value);
}

GaussianRational required_gaussian(const std::string& value, const char* flag)
{
    if (value.empty())
        throw InvalidInput(std::string("missing required flag ") + flag);
    return parse_gaussian(value);
}

ExactPoint exact_point(const std::string& alpha, const std::string& beta, const std::string& delta)
{
    ExactPoint p;
    p.alpha = parse_rational_list(alpha);
    p.beta = parse_rational_list(beta);
    if (delta.empty()) {
        p.delta = 0;
        for (const auto& a : p.alpha)
            p.delta += a;
        for (const auto& b : p.beta)
            p.delta += b;
    } else {
        p.delta = parse_rational(delta);
    }
    p.validate();
    return p;
}

TailBudget budget_of(const Options& o)
{
    TailBudget b;
    b.epsilon = o.epsilon;
    if (o.cutoff > 0)
        b.max_cutoff = o.cutoff;
    b.validate();
    return b;
}

DeterminantRoute parse_route(const std::string& s)
{
    if (s == "auto")
        return DeterminantRoute::automatic;
    if (s == "full")
        return DeterminantRoute::full;
    if (s == "collapsed")
        return DeterminantRoute::collapsed;
    throw InvalidInput("unknown determinant route '" + s + "'");
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    int kernel();
    int boundary();
    int measure();
    int sweep(Json& footer);
    int sample();
    int verify(Json& footer);

private:
    void emit(const Json& j) { out_ << dump(j) << '\n'; }
    SweepReport run_sweep(const std::string& theorem);
    std::vector<Check> suite(const std::string& name);

    const Options& o_;
    std::ostream& out_;
};

int Runner::kernel()
{
    const std::string& s = o_.system;
    auto ratio = [&]() -> std::pair<Rational, Rational> {
        if (!o_.q.empty())
            return {Rational(1), parse_rational(o_.q)};
        return {required_rational(o_.r_from, "--r-from"), required_rational(o_.r_to, "--r-to")};
    };
    if (s == "binom") {
        const auto [from, to] = ratio();
        emit(to_json(binom_link(parse_long(o_.nu), from, to)));
    } else if (s == "young") {
        if (o_.m < 0)
            throw InvalidInput("young kernel requires --m");
        emit(to_json(young_link(parse_partition(o_.nu), o_.m)));
    } else if (s == "gt") {
        if (o_.level < 1)
            throw InvalidInput("gt kernel requires --level");
        emit(to_json(gt_link(parse_signature(o_.nu), o_.level)));
    } else if (s == "yb") {
        const auto [from, to] = ratio();
        emit(to_json(yb_link(parse_partition(o_.nu), from, to)));
    } else if (s == "pascal") {
        const auto v = parse_long_list(o_.nu);
        if (v.size() != 2)
            throw InvalidInput("pascal vertex is given as n1,n2");
        emit(to_json(pascal_link({v[0], v[1]})));
    } else {
        throw InvalidInput("unknown system '" + s + "'");
    }
    return ok;
}

int Runner::boundary()
{
    const std::string& s = o_.system;
    const TailBudget budget = budget_of(o_);
    if (s == "young") {
        const ExactPoint p = exact_point(o_.alpha, o_.beta, o_.delta);
        const Rational v = young_boundary_kernel(p, parse_partition(o_.mu));
        emit(Json{{"point", to_json(p)}, {"mu", to_json(parse_partition(o_.mu))}, {"value", to_json(v)},
                  {"value_decimal", v.get_d()}});
    } else if (s == "yb") {
        const ExactPoint p = exact_point(o_.alpha, o_.beta, o_.delta);
        const double r = required_rational(o_.r, "--r").get_d();
        emit(Json{{"point", to_json(p)}, {"r", r}, {"mu", to_json(parse_partition(o_.mu))},
                  {"value", yb_boundary_kernel(p, r, parse_partition(o_.mu))}});
    } else if (s == "poisson") {
        const double x = required_rational(o_.x, "--x").get_d();
        const double r = required_rational(o_.r, "--r").get_d();
        if (o_.m < 0)
            throw InvalidInput("poisson kernel requires --m");
        emit(Json{{"x", x}, {"r", r}, {"m", o_.m}, {"value", poisson_kernel(x, r, o_.m)}});
    } else if (s == "gt" || s == "phi") {
        GTBoundaryPoint point{to_real(exact_point(o_.alpha, o_.beta, o_.delta)),
                              to_real(exact_point(o_.alpha_minus, o_.beta_minus, o_.delta_minus))};
        if (s == "phi") {
            const auto range = parse_long_list(o_.phi_range.empty() ? "-5,5" : o_.phi_range);
            if (range.size() != 2 || range[0] > range[1])
                throw InvalidInput("--phi-range expects first,last");
            const PhiSeries phi = gt_phi(point, budget);
            Json coeffs = Json::array();
            for (long n = range[0]; n <= range[1]; ++n)
                coeffs.push_back(Json{{"n", n}, {"value", phi(n)}});
            emit(Json{{"plus", to_json(point.plus)}, {"minus", to_json(point.minus)}, {"degree", phi.degree()},
                      {"tail_bound", phi.tail_bound()}, {"coefficients", coeffs}});
        } else {
            const Signature mu = parse_signature(o_.signature.empty() ? o_.mu : o_.signature);
            const BoundaryValue v = gt_boundary_kernel(point, mu, budget, parse_route(o_.route));
            emit(Json{{"plus", to_json(point.plus)}, {"minus", to_json(point.minus)}, {"signature", to_json(mu)},
                      {"value", v.value}, {"coefficient_tail_bound", v.tail_bound}, {"degree", v.cutoff_used}});
        }
    } else {
        throw InvalidInput("unknown boundary system '" + s + "'");
    }
    return ok;
}

int Runner::measure()
{
    const std::string& f = o_.family;
    if (f == "negbinom") {
        const Rational c = required_rational(o_.c, "--c");
        const Rational r = required_rational(o_.r, "--r");
        if (o_.m < 0)
            throw InvalidInput("negbinom requires --m");
        Json j{{"c", to_json(c)}, {"r", to_json(r)}, {"m", o_.m}};
        if (is_integer(c))
            j["value"] = to_json(neg_binom(c, r, o_.m));
        j["value_decimal"] = neg_binom(c.get_d(), r.get_d(), o_.m);
        emit(j);
    } else if (f == "z") {
        const ZParams zp{required_gaussian(o_.z, "--z"), required_gaussian(o_.zp, "--zp")};
        Json j{{"z", to_json(zp.z)}, {"z_prime", to_json(zp.z_prime)}, {"series", to_string(zp.series())}};
        zp.validate();
        j["c"] = to_json(zp.c());
        if (o_.level >= 0) {
            Json entries = Json::array();
            Rational total = 0;
            for (const auto& [mu, p] : z_measure_level(zp, o_.level)) {
                entries.push_back(Json{{"mu", to_json(mu)}, {"p", to_json(p)}});
                total += p;
            }
            j["level"] = o_.level;
            j["entries"] = entries;
            j["total"] = to_json(total);
        } else {
            const Rational r = required_rational(o_.r, "--r");
            const Partition mu = parse_partition(o_.mu);
            j["r"] = to_json(r);
            j["mu"] = to_json(mu);
            if (is_integer(zp.c()))
                j["value"] = to_json(z_measure_exact(zp, r, mu));
            j["value_decimal"] = z_measure(zp, r.get_d(), mu);
        }
        emit(j);
    } else if (f == "zw") {
        const ZWParams p{required_gaussian(o_.z, "--z"), required_gaussian(o_.zp, "--zp"),
                         required_gaussian(o_.w, "--w"), required_gaussian(o_.wp, "--wp")};
        p.validate();
        Json j{{"z", to_json(p.z)}, {"z_prime", to_json(p.z_prime)}, {"w", to_json(p.w)}, {"w_prime", to_json(p.w_prime)}};
        if (o_.cutoff >= 0 && o_.signature.empty()) {
            if (o_.level < 1)
                throw InvalidInput("zw normalization requires --level");
            j["level"] = o_.level;
            j["normalization"] = to_json(zw_normalization(p, o_.level, o_.cutoff));
        } else {
            const Signature mu = parse_signature(o_.signature);
            j["signature"] = to_json(mu);
            j["value"] = zw_measure(p, mu);
            j["value_rewritten"] = zw_measure_rewritten(p, mu);
        }
        emit(j);
    } else {
        throw InvalidInput("unknown measure family '" + f + "'");
    }
    return ok;
}

SweepReport Runner::run_sweep(const std::string& t)
{
    if (t == "thm5") {
        const Rational r = o_.r.empty() ? Rational(1) : parse_rational(o_.r);
        const Rational rp = !o_.r_prime.empty() ? parse_rational(o_.r_prime)
                                                : Rational(r * required_rational(o_.ratio, "--ratio"));
        const auto grid = parse_long_list(o_.grid.empty() ? "10,20,40,80" : o_.grid);
        return thm5_sweep(parse_partition(o_.mu), parse_partition(o_.nu), r, rp, grid);
    }
    if (t == "thm6") {
        const ZParams zp{required_gaussian(o_.z, "--z"), required_gaussian(o_.zp, "--zp")};
        const Rational r = o_.r.empty() ? Rational(1) : parse_rational(o_.r);
        return thm6_sweep(zp, r, parse_partition(o_.mu), parse_long_list(o_.grid.empty() ? "20,40,80" : o_.grid));
    }
    if (t == "thm7") {
        const RealPoint omega = to_real(exact_point(o_.alpha, o_.beta, o_.delta));
        const double r = o_.r.empty() ? 1.0 : parse_rational(o_.r).get_d();
        return thm7_sweep(omega, r, parse_partition(o_.mu),
                          parse_double_list(o_.grid.empty() ? "1/20,1/40,1/80" : o_.grid), budget_of(o_));
    }
    if (t == "lemma5") {
        const double r = o_.r.empty() ? 1.0 : parse_rational(o_.r).get_d();
        std::vector<double> xs = parse_double_list(o_.x_grid);
        if (xs.empty())
            for (int i = 0; i <= 1000; ++i)
                xs.push_back(50.0 / r * i / 1000.0);
        return lemma5_sup(r, o_.k, parse_double_list(o_.grid.empty() ? "10,100" : o_.grid), xs);
    }
    if (t == "cor2") {
        return cor2_sup(parse_partition(o_.mu), parse_long_list(o_.grid.empty() ? "10,15,20,25" : o_.grid));
    }
    throw InvalidInput("unknown sweep '" + t + "'");
}

int Runner::sweep(Json& footer)
{
    const SweepReport report = run_sweep(o_.theorem);
    const std::string csv = sweep_csv(report);
    Json summary = to_json(report);
    summary.erase("points");
    if (!o_.out_dir.empty()) {
        const std::string file = o_.out_dir + "/" + report.name + "_" + fnv1a_hex(dump(to_json(report)["parameters"])
                                                                                   + dump(to_json(report)["points"][0]))
            + ".csv";
        std::ofstream f(file);
        if (!f)
            throw InvalidInput("cannot write " + file);
        f << csv << "# " << dump(summary) << '\n';
        footer["csv_file"] = file;
    }
    out_ << csv;
    footer["sweep"] = summary;
    return ok;
}

int Runner::sample()
{
    const std::string& s = o_.system;
    if (o_.n_samples < 0)
        throw InvalidInput("--n must be nonnegative");
    const long n = o_.n_samples;
    Json summary{{"system", s}, {"samples", n}, {"seed", o_.seed}, {"seed_rule", "replica i uses splitmix64(seed ^ i*0x9E3779B97F4A7C15)"}};
    double total_size = 0.0;
    if (s == "poisson-path") {
        const double x = required_rational(o_.x, "--x").get_d();
        const double r = required_rational(o_.r, "--r").get_d();
        for (long i = 0; i < n; ++i) {
            Rng rng(replica_seed(o_.seed, static_cast<std::uint64_t>(i)));
            const JumpPath p = sample_poisson_path(x, r, rng);
            total_size += static_cast<double>(p.jumps.size());
            emit(to_json(p));
        }
    } else if (s == "standard-tableau") {
        StandardTableauSampler sampler(parse_partition(o_.shape));
        for (long i = 0; i < n; ++i) {
            Rng rng(replica_seed(o_.seed, static_cast<std::uint64_t>(i)));
            emit(to_json(sampler.sample(rng)));
        }
    } else if (s == "ssyt" || s == "gt-scheme") {
        if (o_.max_entry < 1)
            throw InvalidInput("--max-entry is required");
        SsytSampler sampler(parse_partition(o_.shape), o_.max_entry);
        for (long i = 0; i < n; ++i) {
            Rng rng(replica_seed(o_.seed, static_cast<std::uint64_t>(i)));
            if (s == "ssyt")
                emit(to_json(sampler.sample(rng)));
            else
                emit(to_json(sampler.sample_scheme(rng)));
        }
    } else if (s == "yb-path") {
        const ExactPoint omega = exact_point(o_.alpha, o_.beta, o_.delta);
        const double r = required_rational(o_.r, "--r").get_d();
        YBPathSampler sampler(omega, r, budget_of(o_));
        for (long i = 0; i < n; ++i) {
            Rng rng(replica_seed(o_.seed, static_cast<std::uint64_t>(i)));
            const GeneralizedTableau t = sampler.sample(rng);
            total_size += t.shape.size();
            emit(to_json(t));
        }
        summary["endpoint_tail_bound"] = sampler.tail_bound();
    } else {
        throw InvalidInput("unknown sampling system '" + s + "'");
    }
    if (s == "poisson-path" || s == "yb-path")
        summary["mean_size"] = n > 0 ? total_size / static_cast<double>(n) : 0.0;
    emit(Json{{"summary", summary}});
    return ok;
}

std::vector<Check> Runner::suite(const std::string& name)
{
    std::vector<Check> checks;
    const TailBudget tight{1e-13, 32, 512, 400};
    auto add = [&](std::string n, bool p, std::string d) { checks.push_back({std::move(n), p, std::move(d)}); };
    auto sweep_check = [&](const SweepReport& r) {
        out_ << sweep_csv(r);
        char buf[160];
        std::snprintf(buf, sizeof buf, "fitted exponent %.4f, residual %.3g; %s", r.fitted_exponent, r.fit_residual,
                      r.verdict.c_str());
        add(r.name, r.passed, buf);
    };
    if (name == "stochasticity") {
        bool all = true;
        for (int n = 0; n <= 8; ++n)
            for (const auto& nu : enumerate_partitions(n)) {
                for (int m = 0; m <= n; ++m)
                    all = all && young_link(nu, m).total() == 1;
                all = all && yb_link(nu, Rational(1, 2)).total() == 1;
            }
        add("young and yb rows sum to 1", all, "|nu| <= 8");
        bool gt = true;
        for (int level = 2; level <= 5; ++level)
            for (int n = 0; n <= 5; ++n)
                for (const auto& shape : enumerate_partitions(n))
                    if (shape.length() <= level)
                        for (int to = 1; to < level; ++to)
                            gt = gt && gt_link(Signature(shape, level), to).total() == 1;
        add("gt rows sum to 1", gt, "N' <= 5, |nu| <= 5");
    } else if (name == "coherence-all") {
        ExactPoint p;
        p.alpha = {Rational(1, 2)};
        p.beta = {Rational(1, 4)};
        p.delta = 1;
        for (int level = 0; level <= 4; ++level) {
            const auto rep = verify_young_coherence(p, level);
            add("young level " + std::to_string(level), rep.passed(0.0), "exact");
        }
        const auto b = verify_binomial_coherence(1.5, 1.0, 2.0, 8, tight);
        add("binomial", b.passed(1e-10), "max discrepancy " + format_real(b.max_discrepancy()));
        const auto yb = verify_yb_coherence(p, Rational(1, 2), Rational(1), 3, tight);
        add("yb", yb.passed(1e-10), "max discrepancy " + format_real(yb.max_discrepancy()));
        const auto gt = verify_gt_coherence(to_real(p).scaled(0.5), 2, 3, tight);
        add("gt", gt.passed(1e-8), "max discrepancy " + format_real(gt.max_discrepancy()));
        const auto nb = verify_neg_binom_coherence(2.5, 1.0, 2.0, 8, tight);
        add("negative binomial", nb.passed(1e-10), "max discrepancy " + format_real(nb.max_discrepancy()));
        const ZParams zp{GaussianRational(Rational(2)), GaussianRational(Rational(3))};
        const auto z = verify_z_coherence(zp, 5, 3);
        add("z-measure levels 5 -> 3", z.passed(0.0), "exact");
    } else if (name == "z-measures") {
        const std::vector<ZParams> reps{{GaussianRational(Rational(2)), GaussianRational(Rational(3))},
                                        {GaussianRational(Rational(1, 2)), GaussianRational(Rational(1, 2))},
                                        {GaussianRational(1, 1), GaussianRational(1, -1)}};
        for (const auto& zp : reps) {
            bool norm = true;
            for (int m = 0; m <= 5; ++m) {
                Rational t = 0;
                for (const auto& [mu, v] : z_measure_level(zp, m))
                    t += v;
                norm = norm && t == 1;
            }
            add("normalization " + to_string(zp.z) + "," + to_string(zp.z_prime), norm, "levels <= 5, exact");
        }
    } else if (name == "zw-normalization") {
        const GaussianRational half(Rational(1, 2));
        const ZWNormalization nz = zw_normalization({half, half, half, half}, 1, o_.cutoff > 0 ? o_.cutoff : 40);
        const double bilateral = nz.sum / nz.normalization_constant;
        add("bilateral sum = 2 within 1e-6", std::abs(bilateral - 2.0) <= 1e-6,
            "sum " + format_real(bilateral) + ", last shell " + format_real(nz.last_shell));
    } else if (name == "thm5" || name == "thm6" || name == "thm7" || name == "lemma5" || name == "cor2") {
        sweep_check(run_sweep(name));
    } else if (name == "gibbs") {
        bool exact = true;
        for (int n = 1; n <= 5; ++n)
            for (const auto& lambda : enumerate_partitions(n)) {
                StandardTableauSampler sampler(lambda);
                Rng rng(o_.seed);
                const Rational expected(1, dim_standard(lambda));
                for (int k = 0; k < 4; ++k)
                    exact = exact && sampler.probability(sampler.sample(rng)) == expected;
            }
        add("downward chain gives 1/dim", exact, "|lambda| <= 5");
    } else {
        throw InvalidInput("unknown suite '" + name + "'");
    }
    return checks;
}

int Runner::verify(Json& footer)
{
    const auto checks = suite(o_.suite);
    bool all = true;
    Json table = Json::array();
    for (const auto& c : checks) {
        out_ << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
        table.push_back(Json{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        all = all && c.passed;
    }
    footer["suite"] = o_.suite;
    footer["checks"] = table;
    footer["passed"] = all;
    return all ? ok : tolerance_failure;
}

std::string option_value(const CLI::Option* opt)
{
    if (opt->count() > 0) {
        std::string v;
        for (const auto& r : opt->results())
            v += (v.empty() ? "" : ",") + r;
        return v;
    }
    return opt->get_default_str();
}

} // namespace

std::string fnv1a_hex(const std::string& text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Projective systems, boundaries and coherent measures on branching graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* eps_opt = app.add_option("--epsilon", o.epsilon, "tail budget for truncated sums (default 1e-9, or $BOUQUET_EPSILON)")
                        ->capture_default_str();
    app.add_option("--seed", o.seed, "64-bit seed for samplers")->capture_default_str();
    app.add_option("--output", o.output, "output file, '-' for standard output")->capture_default_str();

    auto* kernel = app.add_subcommand("kernel", "one row of a link, exact");
    kernel->add_option("--system", o.system, "binom | young | gt | yb | pascal")->required();
    kernel->add_option("--nu", o.nu, "source vertex: n, partition 2,1, signature 3,1,0 or n1,n2")->required();
    kernel->add_option("--m", o.m, "target level for young");
    kernel->add_option("--level", o.level, "target level N for gt");
    kernel->add_option("--q", o.q, "ratio r/r' in (0,1) for binom and yb");
    kernel->add_option("--r-from", o.r_from, "upper level r'");
    kernel->add_option("--r-to", o.r_to, "lower level r");

    auto* boundary = app.add_subcommand("boundary", "boundary kernels and phi coefficients");
    boundary->add_option("--system", o.system, "young | yb | gt | phi | poisson")->required();
    boundary->add_option("--alpha", o.alpha, "alpha entries, comma separated rationals");
    boundary->add_option("--beta", o.beta, "beta entries");
    boundary->add_option("--delta", o.delta, "delta (default: sum of alpha and beta)");
    boundary->add_option("--alpha-minus", o.alpha_minus, "alpha entries of omega- (gt)");
    boundary->add_option("--beta-minus", o.beta_minus, "beta entries of omega- (gt)");
    boundary->add_option("--delta-minus", o.delta_minus, "delta of omega- (gt)");
    boundary->add_option("--mu", o.mu, "partition");
    boundary->add_option("--signature", o.signature, "signature coordinates (gt)");
    boundary->add_option("--r", o.r, "level r (yb, poisson)");
    boundary->add_option("--x", o.x, "point x (poisson)");
    boundary->add_option("--m", o.m, "level m (poisson)");
    boundary->add_option("--route", o.route, "auto | full | collapsed")->capture_default_str();
    boundary->add_option("--phi-range", o.phi_range, "first,last coefficient index (phi)");
    boundary->add_option("--cutoff", o.cutoff, "cap on truncation cutoffs");

    auto* measure = app.add_subcommand("measure", "negative binomial, z- and zw-measures");
    measure->add_option("--family", o.family, "negbinom | z | zw")->required();
    measure->add_option("--c", o.c, "negbinom parameter c");
    measure->add_option("--r", o.r, "level r");
    measure->add_option("--m", o.m, "negbinom point m");
    measure->add_option("--z", o.z, "z, rational or a+bi");
    measure->add_option("--zp", o.zp, "z'");
    measure->add_option("--w", o.w, "w (zw)");
    measure->add_option("--wp", o.wp, "w' (zw)");
    measure->add_option("--level", o.level, "level m (z) or N (zw normalization)");
    measure->add_option("--mu", o.mu, "partition (z with --r)");
    measure->add_option("--signature", o.signature, "signature (zw)");
    measure->add_option("--cutoff", o.cutoff, "zw normalization window max|mu_i| <= K");

    auto* sweep = app.add_subcommand("sweep", "limit-transition sweeps as CSV");
    sweep->add_option("--theorem", o.theorem, "thm5 | thm6 | thm7 | lemma5 | cor2")->required();
    auto add_sweep_flags = [&](CLI::App* sub) {
        sub->add_option("--mu", o.mu, "partition mu");
        sub->add_option("--nu", o.nu, "partition nu (thm5)");
        sub->add_option("--r", o.r, "level r (default 1)");
        sub->add_option("--r-prime", o.r_prime, "level r' (thm5)");
        sub->add_option("--ratio", o.ratio, "r'/r (thm5)");
        sub->add_option("--z", o.z, "z (thm6)");
        sub->add_option("--zp", o.zp, "z' (thm6)");
        sub->add_option("--alpha", o.alpha, "alpha (thm7)");
        sub->add_option("--beta", o.beta, "beta (thm7)");
        sub->add_option("--delta", o.delta, "delta (thm7)");
        sub->add_option("--k", o.k, "power k (lemma5)");
        sub->add_option("--grid", o.grid, "comma separated grid");
        sub->add_option("--x-grid", o.x_grid, "x grid (lemma5; default 1001 points on [0, 50/r])");
        sub->add_option("--cutoff", o.cutoff, "cap on truncation cutoffs");
    };
    add_sweep_flags(sweep);
    sweep->add_option("--out-dir", o.out_dir, "directory for {theorem}_{hash}.csv");

    auto* sample = app.add_subcommand("sample", "seeded samplers, one JSON object per line");
    sample->add_option("--system", o.system, "poisson-path | standard-tableau | ssyt | gt-scheme | yb-path")->required();
    sample->add_option("--x", o.x, "intensity x (poisson-path)");
    sample->add_option("--r", o.r, "horizon r");
    sample->add_option("--n,--n-samples", o.n_samples, "number of samples")->capture_default_str();
    sample->add_option("--shape", o.shape, "partition (tableaux)");
    sample->add_option("--max-entry", o.max_entry, "N for ssyt and gt-scheme");
    sample->add_option("--alpha", o.alpha, "alpha (yb-path)");
    sample->add_option("--beta", o.beta, "beta (yb-path)");
    sample->add_option("--delta", o.delta, "delta (yb-path)");
    sample->add_option("--cutoff", o.cutoff, "cap on the endpoint size");

    auto* verify = app.add_subcommand("verify", "named verification suites with a pass/fail table");
    verify->add_option("--suite", o.suite,
                       "stochasticity | coherence-all | z-measures | zw-normalization | thm5 | thm6 | thm7 | lemma5 | "
                       "cor2 | gibbs")
        ->required();
    add_sweep_flags(verify);

    std::vector<std::string> argv_store{"bouquet"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return invalid_input;
    }

    Json env = Json::object();
    if (eps_opt->count() == 0) {
        if (const char* v = std::getenv("BOUQUET_EPSILON")) {
            env["BOUQUET_EPSILON"] = v;
            try {
                o.epsilon = parse_rational(v).get_d();
            } catch (const std::exception& e) {
                err << "error: BOUQUET_EPSILON: " << e.what() << '\n';
                return invalid_input;
            }
        }
    }

    CLI::App* chosen = app.get_subcommands().front();
    Json config{{"subcommand", chosen->get_name()}, {"epsilon", o.epsilon}, {"seed", o.seed}, {"output", o.output}};
    for (const CLI::Option* opt : chosen->get_options()) {
        if (opt->get_lnames().empty() || opt->get_lnames().front() == "help")
            continue;
        config[opt->get_lnames().front()] = option_value(opt);
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (o.output != "-") {
        file.open(o.output);
        if (!file) {
            err << "error: cannot open " << o.output << '\n';
            return invalid_input;
        }
        sink = &file;
    }

    Json footer = Json::object();
    int code = ok;
    try {
        Runner runner(o, *sink);
        const std::string name = chosen->get_name();
        if (name == "kernel")
            code = runner.kernel();
        else if (name == "boundary")
            code = runner.boundary();
        else if (name == "measure")
            code = runner.measure();
        else if (name == "sweep")
            code = runner.sweep(footer);
        else if (name == "sample")
            code = runner.sample();
        else
            code = runner.verify(footer);
    } catch (const TailBudgetError& e) {
        err << "tail budget failure: " << e.what() << '\n';
        footer["error"] = e.what();
        code = tolerance_failure;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        footer["error"] = e.what();
        code = invalid_input;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << '\n';
        footer["error"] = e.what();
        code = invalid_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        footer["error"] = e.what();
        code = internal_error;
    }
    footer["config"] = config;
    if (!env.empty())
        footer["env"] = env;
    footer["exit_code"] = code;
    const bool csv_output = chosen->get_name() == "sweep" || (chosen->get_name() == "verify");
    *sink << (csv_output ? "# " : "") << dump(Json{{"footer", footer}}) << '\n';
    return code;
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace bouquet::cli
