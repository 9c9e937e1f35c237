#include "cmif_cli/report.hpp"

#include <limits>
#include <ostream>

#include "json.hpp"

namespace cmif::cli {
namespace {

nlohmann::json wide(u128 v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
    return to_string(v);
}

}  // namespace

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const PrimeRecord& r) {
    out << r.p << ',' << to_string(r.kind) << ',' << r.a_p << ',' << r.pi_a << ',' << r.pi_b << ',' << r.n << ','
        << r.d << ',' << r.e << '\n';
}

std::string summary_json(const std::string& label, std::uint64_t seed, std::uint64_t xmax,
                         const SumAccumulator& acc) {
    nlohmann::ordered_json j;
    j["curve"] = label;
    j["seed"] = seed;
    j["xmax"] = xmax;
    j["sum_dp"] = wide(acc.sum_dp);
    j["sum_ep"] = wide(acc.sum_ep);
    auto cps = nlohmann::ordered_json::array();
    for (const auto& c : acc.checkpoints) {
        nlohmann::ordered_json o;
        o["x"] = c.x;
        o["sum_dp"] = wide(c.sum_dp);
        o["sum_ep"] = wide(c.sum_ep);
        o["pi_x"] = c.pi_x;
        cps.push_back(std::move(o));
    }
    j["checkpoints"] = std::move(cps);
    j["counts"] = {{"bad", acc.count_bad},
                   {"ord", acc.count_ordinary},
                   {"ss", acc.count_ss},
                   {"small", acc.count_small}};
    return j.dump(2);
}

}  // namespace cmif::cli
