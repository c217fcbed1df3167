#pragma once

#include "bouquet/boundary.hpp"
#include "bouquet/limits.hpp"
#include "bouquet/links.hpp"
#include "bouquet/measures.hpp"
#include "bouquet/paths.hpp"

#include <json.hpp>

#include <string>

namespace bouquet {

using Json = nlohmann::ordered_json;

/// Serializes with every floating-point value at 17 significant digits; NaN and infinities become null.
std::string dump(const Json& j);

Json to_json(const Rational& q);
Json to_json(const GaussianRational& z);
Json to_json(const Partition& p);
Json to_json(const Signature& s);
Json to_json(const PascalVertex& v);
Json to_json(long n);
Json to_json(const ExactPoint& omega);
Json to_json(const RealPoint& omega);
Json to_json(const CoherenceReport& report);
Json to_json(const SweepReport& report);
Json to_json(const JumpPath& path);
Json to_json(const GeneralizedTableau& t);
Json to_json(const StandardTableau& t);
Json to_json(const SSYT& t);
Json to_json(const GTScheme& scheme);
Json to_json(const DegenerationReport& report);
Json to_json(const ZWNormalization& norm);

template <class V>
Json to_json(const KernelRow<V>& row)
{
    Json entries = Json::array();
    for (const auto& [target, p] : row.entries)
        entries.push_back(Json{{"target", to_json(target)}, {"p", to_json(p)}});
    return Json{{"source", to_json(row.source)},
                {"level_from", to_json(row.level_from)},
                {"level_to", to_json(row.level_to)},
                {"entries", std::move(entries)},
                {"total", to_json(row.total())}};
}

/// Rows "param,error,tail_bound" for a sweep; exact errors are written as p/q in an extra column.
std::string sweep_csv(const SweepReport& report);

} // namespace bouquet
