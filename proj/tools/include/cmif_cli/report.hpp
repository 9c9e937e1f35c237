#pragma once

// Record and summary formats of the command-line tool.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cmif/frobenius.hpp"
#include "cmif/stats.hpp"

namespace cmif::cli {

inline constexpr const char* kCsvHeader = "p,kind,a_p,pi_a,pi_b,N,d_p,e_p";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const PrimeRecord& r);

/// Label, seed, xmax, per-checkpoint sums and counts by reduction kind.
/// Sums that overflow 64 bits are written as decimal strings.
std::string summary_json(const std::string& label, std::uint64_t seed, std::uint64_t xmax,
                         const SumAccumulator& acc);

}  // namespace cmif::cli
