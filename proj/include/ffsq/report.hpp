#ifndef FFSQ_REPORT_HPP
#define FFSQ_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffsq/rational.hpp"
#include "ffsq/signed_type.hpp"

namespace ffsq {

/// Outcome of a density scan. Counts and exact rationals only; decimals
/// appear in the rendered output (12 significant digits).
struct DensityReport {
    uint64_t q = 0;
    uint32_t p = 0, k = 0;
    int n = 0, m = 0;
    std::optional<Rat> epsilon;
    std::string f0;

    uint64_t total = 0, hits = 0, skipped = 0;
    Rat mean, reference;
    std::string mode;  // "exhaustive" or "monte_carlo"
    std::optional<uint64_t> samples, seed;

    /// Extra schema fields (the affine experiments add nu, c_p_num, ...).
    /// Values are already-rendered strings.
    std::vector<std::pair<std::string, std::string>> extra;

    Rat deviation() const { return abs_diff(mean, reference); }
};

std::string report_to_json(const DensityReport& r);
std::string report_csv_header(const DensityReport& r);
std::string report_to_csv_row(const DensityReport& r);

/// Empirical distribution of signed Frobenius types over an interval,
/// among members that are squarefree with nonzero constant term; the
/// rest are tallied in `skipped`.
struct SignedTypeHistogram {
    uint64_t q = 0;
    uint32_t p = 0, k = 0;
    int n = 0, m = 0;
    std::optional<Rat> epsilon;
    std::string f0;

    uint64_t total = 0;    // all interval members
    uint64_t skipped = 0;  // non-squarefree or f(0) = 0
    std::map<SignedCycleType, uint64_t> counts;

    uint64_t counted() const { return total - skipped; }
};

/// CSV rows: signed_type,count,probability_num,probability_den,
/// theoretical_num,theoretical_den — one row per signed type of size n
/// (zero-count rows included), plus a header line.
std::string histogram_to_csv(const SignedTypeHistogram& h);

/// Total-variation distance between the empirical distribution and the
/// uniform-measure prediction of signed_type_probability.
Rat histogram_tv_distance(const SignedTypeHistogram& h);

}  // namespace ffsq

#endif
