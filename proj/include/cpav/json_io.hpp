#pragma once

#include <string>

#include "cpav/analytics.hpp"
#include "cpav/classify.hpp"
#include "cpav/cluster.hpp"
#include "cpav/layout.hpp"
#include "cpav/series.hpp"
#include "json.hpp"

namespace cpav {

std::string rat_str(const mpq_class& q);
std::string float17(double v);

nlohmann::json series_json(const EgfSeries& s);
nlohmann::json series_json(const OgfSeries& s);
nlohmann::json cluster_json(const ClusterPolynomial& r);
nlohmann::json feet_json(const FeetTable& t);
nlohmann::json layout_json(const OccurrenceLayout& l);
nlohmann::json partition_json(const ClassPartition& p);
nlohmann::json growth_json(const GrowthReport& g);
nlohmann::json dominance_json(const DominanceReport& d);
nlohmann::json blowup_json(const BlowupReport& b);

}  // namespace cpav
