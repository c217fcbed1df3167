#include "bouquet/paths.hpp"

#include "bouquet/symfunc.hpp"

#include <algorithm>
#include <cmath>

namespace bouquet {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Partition shape_of_rows(const std::vector<std::size_t>& lengths)
{
    std::vector<int> parts;
    for (std::size_t len : lengths)
        parts.push_back(static_cast<int>(len));
    return Partition(parts);
}

template <class Rows>
Partition rows_shape(const Rows& rows)
{
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0 && rows[i].size() > rows[i - 1].size())
            throw InvalidInput("tableau rows must have weakly decreasing lengths");
        lengths.push_back(rows[i].size());
    }
    return shape_of_rows(lengths);
}

// Index of the row whose last box differs between ν and the smaller diagram.
int removed_row(const Partition& nu, const Partition& smaller)
{
    for (int i = 0; i < nu.length(); ++i)
        if (nu.row(static_cast<std::size_t>(i)) != smaller.row(static_cast<std::size_t>(i)))
            return i;
    throw InvalidInput("diagrams do not differ by a box");
}

std::vector<long> padded(const std::vector<long>& prefix, int level)
{
    std::vector<long> out(prefix);
    out.resize(static_cast<std::size_t>(level), 0);
    return out;
}

} // namespace

double Rng::uniform()
{
    return 1.0 - static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t replica_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(seed ^ (index * 0x9E3779B97F4A7C15ULL));
}

long sample_poisson(Rng& rng, double mean)
{
    if (mean < 0.0)
        throw InvalidInput("Poisson mean must be nonnegative");
    if (mean == 0.0)
        return 0;
    long count = 0;
    double t = -std::log(rng.uniform());
    while (t <= mean) {
        ++count;
        t -= std::log(rng.uniform());
    }
    return count;
}

long JumpPath::count_at(double t) const
{
    return std::upper_bound(jumps.begin(), jumps.end(), t) - jumps.begin();
}

void JumpPath::validate() const
{
    if (!(horizon > 0.0))
        throw InvalidInput("jump path horizon must be positive");
    for (std::size_t i = 0; i < jumps.size(); ++i) {
        if (!(jumps[i] > 0.0) || jumps[i] > horizon)
            throw InvalidInput("jump times must lie in (0, r]");
        if (i > 0 && !(jumps[i] > jumps[i - 1]))
            throw InvalidInput("jump times must be strictly increasing");
    }
}

Partition GeneralizedTableau::shape_at(double t) const
{
    std::vector<std::size_t> lengths;
    for (const auto& row : fill) {
        const auto len = static_cast<std::size_t>(std::upper_bound(row.begin(), row.end(), t) - row.begin());
        if (len == 0)
            break;
        lengths.push_back(len);
    }
    return shape_of_rows(lengths);
}

void GeneralizedTableau::validate() const
{
    if (rows_shape(fill) != shape)
        throw InvalidInput("generalized tableau fill does not match its shape");
    for (std::size_t i = 0; i < fill.size(); ++i) {
        for (std::size_t j = 0; j < fill[i].size(); ++j) {
            const double v = fill[i][j];
            if (!(v > 0.0) || v > horizon)
                throw InvalidInput("generalized tableau entries must lie in (0, r]");
            if (j > 0 && !(v > fill[i][j - 1]))
                throw InvalidInput("generalized tableau rows must increase strictly");
            if (i > 0 && !(v > fill[i - 1][j]))
                throw InvalidInput("generalized tableau columns must increase strictly");
        }
    }
}

Partition StandardTableau::shape() const { return rows_shape(rows); }

void StandardTableau::validate() const
{
    const Partition s = shape();
    std::vector<bool> seen(static_cast<std::size_t>(s.size()) + 1, false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const int v = rows[i][j];
            if (v < 1 || v > s.size() || seen[static_cast<std::size_t>(v)])
                throw InvalidInput("standard tableau must use each of 1..n once");
            seen[static_cast<std::size_t>(v)] = true;
            if (j > 0 && v <= rows[i][j - 1])
                throw InvalidInput("standard tableau rows must increase");
            if (i > 0 && v <= rows[i - 1][j])
                throw InvalidInput("standard tableau columns must increase");
        }
    }
}

Partition SSYT::shape() const { return rows_shape(rows); }

void SSYT::validate() const
{
    shape();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const int v = rows[i][j];
            if (v < 1 || v > max_entry)
                throw InvalidInput("SSYT entries must lie in 1..N");
            if (j > 0 && v < rows[i][j - 1])
                throw InvalidInput("SSYT rows must weakly increase");
            if (i > 0 && v <= rows[i - 1][j])
                throw InvalidInput("SSYT columns must strictly increase");
        }
    }
}

void GTScheme::validate() const
{
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() != k + 1)
            throw InvalidInput("GT scheme row k must have k entries");
        for (std::size_t i = 1; i < rows[k].size(); ++i)
            if (rows[k][i] > rows[k][i - 1])
                throw InvalidInput("GT scheme rows must weakly decrease");
        if (k > 0)
            for (std::size_t i = 0; i < k; ++i)
                if (!(rows[k][i] >= rows[k - 1][i] && rows[k - 1][i] >= rows[k][i + 1]))
                    throw InvalidInput("GT scheme rows must interlace");
    }
}

SSYT GTScheme::to_ssyt() const
{
    validate();
    SSYT out;
    out.max_entry = static_cast<int>(rows.size());
    if (rows.empty())
        return out;
    if (rows.back().back() < 0)
        throw InvalidInput("only nonnegative GT schemes correspond to SSYT");
    const Partition top(std::vector<int>(rows.back().begin(), rows.back().end()));
    out.rows.resize(static_cast<std::size_t>(top.length()));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (std::size_t i = 0; i < rows[k].size() && i < out.rows.size(); ++i) {
            const long start = (k > 0 && i < k) ? rows[k - 1][i] : 0;
            for (long j = start; j < rows[k][i]; ++j)
                out.rows[i].push_back(static_cast<int>(k) + 1);
        }
    }
    return out;
}

JumpPath sample_poisson_path(double x, double r, std::uint64_t seed)
{
    Rng rng(seed);
    return sample_poisson_path(x, r, rng);
}

JumpPath sample_poisson_path(double x, double r, Rng& rng)
{
    if (x < 0.0 || !(r > 0.0))
        throw InvalidInput("poisson path requires x >= 0 and r > 0");
    JumpPath path;
    path.horizon = r;
    const long n = sample_poisson(rng, x * r);
    for (long k = 0; k < n; ++k)
        path.jumps.push_back(r * rng.uniform());
    std::sort(path.jumps.begin(), path.jumps.end());
    return path;
}

StandardTableauSampler::StandardTableauSampler(Partition shape) : shape_(std::move(shape)) {}

const BigInt& StandardTableauSampler::dim(const Partition& p)
{
    auto it = dims_.find(p);
    if (it == dims_.end())
        it = dims_.emplace(p, dim_standard(p)).first;
    return it->second;
}

StandardTableau StandardTableauSampler::sample(Rng& rng)
{
    StandardTableau t;
    for (int i = 0; i < shape_.length(); ++i)
        t.rows.emplace_back(static_cast<std::size_t>(shape_.row(static_cast<std::size_t>(i))), 0);
    Partition current = shape_;
    for (int entry = shape_.size(); entry >= 1; --entry) {
        const auto children = current.remove_one_box();
        const double total = dim(current).get_d();
        const double u = rng.uniform() * total;
        double acc = 0.0;
        std::size_t pick = children.size() - 1;
        for (std::size_t k = 0; k < children.size(); ++k) {
            acc += dim(children[k]).get_d();
            if (u <= acc) {
                pick = k;
                break;
            }
        }
        const int row = removed_row(current, children[pick]);
        t.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(current.row(static_cast<std::size_t>(row))) - 1]
            = entry;
        current = children[pick];
    }
    return t;
}

Rational StandardTableauSampler::probability(const StandardTableau& t)
{
    t.validate();
    if (t.shape() != shape_)
        throw InvalidInput("tableau shape differs from the sampler's shape");
    const auto path = young_path(t);
    Rational p = 1;
    for (std::size_t k = 1; k < path.size(); ++k)
        p *= Rational(dim(path[k - 1])) / Rational(dim(path[k]));
    return p;
}

StandardTableau sample_standard_tableau(const Partition& shape, std::uint64_t seed)
{
    Rng rng(seed);
    return StandardTableauSampler(shape).sample(rng);
}

SsytSampler::SsytSampler(Partition shape, int max_entry) : shape_(std::move(shape)), max_entry_(max_entry)
{
    if (max_entry_ < 1)
        throw InvalidInput("SSYT sampler requires N >= 1");
    if (shape_.length() > max_entry_)
        throw InvalidInput("SSYT sampler requires l(lambda) <= N");
}

const SsytSampler::Step& SsytSampler::step(int level, const std::vector<long>& nu)
{
    auto key = std::make_pair(level, nu);
    auto it = steps_.find(key);
    if (it != steps_.end())
        return it->second;
    // μ at level − 1 with ν_{i+1} ≤ μ_i ≤ ν_i; only the first min(level − 1, ℓ) entries can be nonzero.
    const std::size_t len = std::min<std::size_t>(nu.size(), static_cast<std::size_t>(level - 1));
    const std::vector<long> full_nu = padded(nu, level);
    const double dim_nu = weyl_dim(Signature(full_nu)).get_d();
    Step s;
    std::vector<long> mu(len);
    double acc = 0.0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == len) {
            acc += weyl_dim(Signature(padded(mu, level - 1))).get_d() / dim_nu;
            s.targets.push_back(mu);
            s.cumulative.push_back(acc);
            return;
        }
        for (long v = full_nu[i + 1]; v <= full_nu[i]; ++v) {
            mu[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return steps_.emplace(std::move(key), std::move(s)).first->second;
}

std::vector<std::vector<long>> SsytSampler::sample_rows(Rng& rng)
{
    std::vector<std::vector<long>> rows(static_cast<std::size_t>(max_entry_));
    std::vector<long> nu(shape_.parts().begin(), shape_.parts().end());
    for (int level = max_entry_; level >= 1; --level) {
        rows[static_cast<std::size_t>(level) - 1] = nu;
        if (level == 1)
            break;
        const Step& s = step(level, nu);
        const double u = rng.uniform() * s.cumulative.back();
        const auto pos = std::lower_bound(s.cumulative.begin(), s.cumulative.end(), u) - s.cumulative.begin();
        nu = s.targets[static_cast<std::size_t>(std::min<std::ptrdiff_t>(pos, static_cast<std::ptrdiff_t>(s.targets.size()) - 1))];
        while (!nu.empty() && nu.back() == 0)
            nu.pop_back();
    }
    return rows;
}

GTScheme SsytSampler::sample_scheme(Rng& rng)
{
    GTScheme scheme;
    const auto rows = sample_rows(rng);
    for (std::size_t k = 0; k < rows.size(); ++k)
        scheme.rows.push_back(padded(rows[k], static_cast<int>(k) + 1));
    return scheme;
}

SSYT SsytSampler::sample(Rng& rng)
{
    const auto rows = sample_rows(rng);
    SSYT out;
    out.max_entry = max_entry_;
    out.rows.resize(static_cast<std::size_t>(shape_.length()));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (std::size_t i = 0; i < rows[k].size(); ++i) {
            const long start = (k > 0 && i < rows[k - 1].size()) ? rows[k - 1][i] : 0;
            for (long j = start; j < rows[k][i]; ++j)
                out.rows[i].push_back(static_cast<int>(k) + 1);
        }
    }
    return out;
}

SSYT sample_uniform_ssyt(const Partition& shape, int max_entry, std::uint64_t seed)
{
    Rng rng(seed);
    return SsytSampler(shape, max_entry).sample(rng);
}

YBPathSampler::YBPathSampler(ExactPoint omega, double r, const TailBudget& budget)
    : omega_(std::move(omega)), r_(r), max_size_(budget.max_cutoff), tail_bound_(0.0)
{
    omega_.validate();
    budget.validate();
    if (!(r_ > 0.0))
        throw InvalidInput("YB path sampler requires r > 0");
    if (!omega_.is_origin()) {
        omega_hat_ = omega_.scaled(Rational(1 / omega_.delta));
        tail_bound_ = poisson_tail_bound(r_ * omega_.delta.get_d(), max_size_);
        if (tail_bound_ > budget.epsilon)
            throw TailBudgetError("YB endpoint size: Poisson tail above epsilon at the cutoff cap");
    }
}

const Rational& YBPathSampler::schur_value(const Partition& p)
{
    auto it = schur_.find(p);
    if (it == schur_.end())
        it = schur_.emplace(p, schur(p, omega_hat_)).first;
    return it->second;
}

Partition YBPathSampler::sample_endpoint(Rng& rng)
{
    if (omega_.is_origin())
        return {};
    const long n = sample_poisson(rng, r_ * omega_.delta.get_d());
    if (n > max_size_)
        throw TailBudgetError("YB endpoint size exceeded the cutoff cap");
    // Up-chain of the Thoma measures: P(ν → κ) = S_κ(ω̂) / S_ν(ω̂).
    Partition current;
    for (long k = 0; k < n; ++k) {
        const auto children = current.add_one_box();
        const double total = schur_value(current).get_d();
        const double u = rng.uniform() * total;
        double acc = 0.0;
        std::size_t pick = children.size();
        for (std::size_t c = 0; c < children.size(); ++c) {
            const double w = schur_value(children[c]).get_d();
            if (w <= 0.0)
                continue;
            acc += w;
            pick = c;
            if (u <= acc)
                break;
        }
        current = children[pick];
    }
    return current;
}

GeneralizedTableau YBPathSampler::sample(Rng& rng)
{
    GeneralizedTableau out;
    out.horizon = r_;
    out.shape = sample_endpoint(rng);
    auto it = tableaux_.find(out.shape);
    if (it == tableaux_.end())
        it = tableaux_.emplace(out.shape, StandardTableauSampler(out.shape)).first;
    const StandardTableau t = it->second.sample(rng);
    std::vector<double> times;
    for (int k = 0; k < out.shape.size(); ++k)
        times.push_back(r_ * rng.uniform());
    std::sort(times.begin(), times.end());
    for (const auto& row : t.rows) {
        std::vector<double> filled;
        for (int v : row)
            filled.push_back(times[static_cast<std::size_t>(v) - 1]);
        out.fill.push_back(std::move(filled));
    }
    return out;
}

GeneralizedTableau sample_yb_path(const ExactPoint& omega, double r, std::uint64_t seed, const TailBudget& budget)
{
    Rng rng(seed);
    return YBPathSampler(omega, r, budget).sample(rng);
}

std::vector<Partition> young_path(const StandardTableau& t)
{
    t.validate();
    const int n = t.shape().size();
    std::vector<Partition> path;
    std::vector<int> rows(t.rows.size(), 0);
    path.emplace_back();
    for (int entry = 1; entry <= n; ++entry) {
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const auto& row = t.rows[i];
            if (std::find(row.begin(), row.end(), entry) != row.end()) {
                ++rows[i];
                break;
            }
        }
        std::vector<int> parts;
        for (int len : rows)
            if (len > 0)
                parts.push_back(len);
        path.emplace_back(parts);
    }
    return path;
}

std::vector<Signature> gt_path(const GTScheme& scheme)
{
    scheme.validate();
    std::vector<Signature> out;
    for (const auto& row : scheme.rows)
        out.emplace_back(row);
    return out;
}

Rational cylinder_probability_young(const std::vector<Partition>& path,
                                    const std::function<Rational(const Partition&)>& family)
{
    if (path.empty() || !path.front().empty())
        throw InvalidInput("Young path must start at the empty diagram");
    Rational p = family(path.back());
    for (std::size_t k = 1; k < path.size(); ++k) {
        if (!covers(path[k - 1], path[k]))
            throw InvalidInput("Young path steps must add one box");
        p *= Rational(dim_standard(path[k - 1])) / Rational(dim_standard(path[k]));
    }
    return p;
}

Rational cylinder_probability_gt(const std::vector<Signature>& path,
                                 const std::function<Rational(const Signature&)>& family)
{
    if (path.empty() || path.front().level() != 1)
        throw InvalidInput("GT path must start at level 1");
    for (const auto& s : path)
        if (!s.is_nonnegative())
            throw InvalidInput("GT+ paths use nonnegative signatures");
    Rational p = family(path.back());
    for (std::size_t k = 1; k < path.size(); ++k) {
        if (path[k].level() != path[k - 1].level() + 1 || !interlaces(path[k - 1], path[k]))
            throw InvalidInput("GT path steps must interlace one level up");
        p *= Rational(weyl_dim(path[k - 1])) / Rational(weyl_dim(path[k]));
    }
    return p;
}

Rational cylinder_probability_pascal(const std::vector<PascalVertex>& path,
                                     const std::function<Rational(const PascalVertex&)>& family)
{
    if (path.empty() || path.front().level() != 0)
        throw InvalidInput("Pascal path must start at (0, 0)");
    Rational p = family(path.back());
    for (std::size_t k = 1; k < path.size(); ++k) {
        const PascalVertex& v = path[k];
        const PascalVertex& u = path[k - 1];
        if (v.level() != u.level() + 1 || v.n1 < u.n1 || v.n2 < u.n2)
            throw InvalidInput("Pascal path steps must increase one coordinate by 1");
        p *= pascal_link(v).at(u);
    }
    return p;
}

bool DegenerationReport::decreasing() const
{
    for (std::size_t i = 1; i < discrepancy.size(); ++i)
        if (!(discrepancy[i] < discrepancy[i - 1]))
            return false;
    return true;
}

DegenerationReport path_degeneration_experiment(const Partition& shape, double r, const std::vector<double>& scales,
                                                std::uint64_t seed, long samples)
{
    if (!(r > 0.0) || samples < 1)
        throw InvalidInput("degeneration experiment requires r > 0 and samples >= 1");
    DegenerationReport report;
    report.scales = scales;
    report.samples = samples;
    report.reference_samples = samples;
    const std::size_t boxes = static_cast<std::size_t>(shape.size());

    // Reference: uniform points of (0, r]^n satisfying the tableau order, by rejection.
    {
        Rng rng(replica_seed(seed, 0));
        report.reference_means.assign(boxes, 0.0);
        report.reference_second_moments.assign(boxes, 0.0);
        std::vector<double> x(boxes);
        long accepted = 0;
        while (accepted < samples) {
            for (auto& v : x)
                v = r * rng.uniform();
            bool ok = true;
            std::size_t idx = 0;
            for (int i = 0; i < shape.length() && ok; ++i) {
                for (int j = 0; j < shape.row(static_cast<std::size_t>(i)); ++j, ++idx) {
                    if (j > 0 && x[idx] < x[idx - 1])
                        ok = false;
                    if (i > 0 && x[idx] <= x[idx - static_cast<std::size_t>(shape.row(static_cast<std::size_t>(i - 1)))])
                        ok = false;
                }
            }
            if (!ok)
                continue;
            ++accepted;
            for (std::size_t b = 0; b < boxes; ++b) {
                report.reference_means[b] += x[b];
                report.reference_second_moments[b] += x[b] * x[b];
            }
        }
        for (std::size_t b = 0; b < boxes; ++b) {
            report.reference_means[b] /= static_cast<double>(samples);
            report.reference_second_moments[b] /= static_cast<double>(samples);
        }
    }

    for (std::size_t s = 0; s < scales.size(); ++s) {
        const double scale = scales[s];
        const long level = std::lround(r * scale);
        if (level < std::max(1, shape.length()))
            throw InvalidInput("degeneration experiment: round(rL) must be at least max(1, l(lambda))");
        report.levels.push_back(level);
        SsytSampler sampler(shape, static_cast<int>(level));
        Rng rng(replica_seed(seed, s + 1));
        std::vector<double> m1(boxes, 0.0), m2(boxes, 0.0);
        for (long k = 0; k < samples; ++k) {
            const SSYT t = sampler.sample(rng);
            std::size_t idx = 0;
            for (const auto& row : t.rows)
                for (int v : row) {
                    const double y = v / scale;
                    m1[idx] += y;
                    m2[idx] += y * y;
                    ++idx;
                }
        }
        double worst = 0.0;
        for (std::size_t b = 0; b < boxes; ++b) {
            m1[b] /= static_cast<double>(samples);
            m2[b] /= static_cast<double>(samples);
            worst = std::max(worst, std::abs(m1[b] - report.reference_means[b]));
            worst = std::max(worst, std::abs(m2[b] - report.reference_second_moments[b]));
        }
        report.means.push_back(m1);
        report.discrepancy.push_back(worst);
    }
    return report;
}

} // namespace bouquet
