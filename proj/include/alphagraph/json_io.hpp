#ifndef ALPHAGRAPH_JSON_IO_HPP
#define ALPHAGRAPH_JSON_IO_HPP

#include <json.hpp>

#include "alphagraph/approx.hpp"
#include "alphagraph/center_search.hpp"
#include "alphagraph/classifier.hpp"
#include "alphagraph/generators.hpp"
#include "alphagraph/oracle.hpp"

namespace alphagraph {

// Reports are emitted with a fixed key order so identical runs produce
// byte-identical documents.
using Json = nlohmann::ordered_json;

Json to_json(const MetricProfile& profile);
Json to_json(const EccReport& report);
Json to_json(const CenterInfo& info);
Json to_json(const ApproxEccReport& report);
Json to_json(const SpanningTree& tree);
Json to_json(const SweepTrace& trace);
Json to_json(const GenSpec& spec);
Json to_json(const CenterSearchTrace& trace);
Json to_json(const DeltaSearchTrace& trace);

}  // namespace alphagraph

#endif
