#include "ffsq/report.hpp"

#include <json.hpp>

#include "ffsq/hyperoct.hpp"

namespace ffsq {
namespace {

std::string num_str(const Rat& x) { return boost::multiprecision::numerator(x).str(); }
std::string den_str(const Rat& x) { return boost::multiprecision::denominator(x).str(); }

}  // namespace

std::string report_to_json(const DensityReport& r) {
    nlohmann::json j;
    j["q"] = r.q;
    j["p"] = r.p;
    j["k"] = r.k;
    j["n"] = r.n;
    j["m"] = r.m;
    if (r.epsilon)
        j["epsilon"] = rational_string(*r.epsilon);
    else
        j["epsilon"] = nullptr;
    j["f0"] = r.f0;
    j["total"] = r.total;
    j["hits"] = r.hits;
    j["mean_num"] = num_str(r.mean);
    j["mean_den"] = den_str(r.mean);
    j["reference_num"] = num_str(r.reference);
    j["reference_den"] = den_str(r.reference);
    j["deviation_decimal"] = decimal_string(r.deviation());
    j["mode"] = r.mode;
    if (r.samples) j["samples"] = *r.samples;
    if (r.seed)
        j["seed"] = *r.seed;
    else
        j["seed"] = nullptr;
    j["skipped"] = r.skipped;
    for (auto& [key, value] : r.extra) j[key] = value;
    return j.dump(2) + "\n";
}

std::string report_csv_header(const DensityReport& r) {
    std::string h =
        "q,p,k,n,m,epsilon,f0,total,hits,mean_num,mean_den,reference_num,"
        "reference_den,deviation_decimal,mode,seed,skipped";
    for (auto& [key, value] : r.extra) h += "," + key;
    return h;
}

std::string report_to_csv_row(const DensityReport& r) {
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    std::string row;
    row += std::to_string(r.q) + ",";
    row += std::to_string(r.p) + ",";
    row += std::to_string(r.k) + ",";
    row += std::to_string(r.n) + ",";
    row += std::to_string(r.m) + ",";
    row += (r.epsilon ? rational_string(*r.epsilon) : "") + ",";
    row += quote(r.f0) + ",";
    row += std::to_string(r.total) + ",";
    row += std::to_string(r.hits) + ",";
    row += num_str(r.mean) + "," + den_str(r.mean) + ",";
    row += num_str(r.reference) + "," + den_str(r.reference) + ",";
    row += decimal_string(r.deviation()) + ",";
    row += r.mode + ",";
    row += (r.seed ? std::to_string(*r.seed) : "") + ",";
    row += std::to_string(r.skipped);
    for (auto& [key, value] : r.extra) row += "," + value;
    return row;
}

std::string histogram_to_csv(const SignedTypeHistogram& h) {
    std::string out =
        "signed_type,count,probability_num,probability_den,theoretical_num,theoretical_den\n";
    uint64_t denom = h.counted();
    for (const SignedCycleType& t : enumerate_signed_types(static_cast<uint32_t>(h.n))) {
        auto it = h.counts.find(t);
        uint64_t c = it == h.counts.end() ? 0 : it->second;
        Rat prob = denom == 0 ? Rat(0) : Rat(c, denom);
        Rat theo = signed_type_probability(t);
        out += "\"" + t.to_string() + "\"," + std::to_string(c) + "," + num_str(prob) + "," +
               den_str(prob) + "," + num_str(theo) + "," + den_str(theo) + "\n";
    }
    return out;
}

Rat histogram_tv_distance(const SignedTypeHistogram& h) {
    uint64_t denom = h.counted();
    Rat sum = 0;
    for (const SignedCycleType& t : enumerate_signed_types(static_cast<uint32_t>(h.n))) {
        auto it = h.counts.find(t);
        uint64_t c = it == h.counts.end() ? 0 : it->second;
        Rat prob = denom == 0 ? Rat(0) : Rat(c, denom);
        sum += abs_diff(prob, signed_type_probability(t));
    }
    return sum / 2;
}

}  // namespace ffsq
