#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gmdiv/errors.hpp"

namespace gmdiv::cli {

// Inclusive bounds; lo > hi denotes the empty range.
struct Range {
  std::uint64_t lo;
  std::uint64_t hi;
};

// "lo:hi" or a single value "v" (meaning v:v).
Range parse_range(const std::string& text);

enum class Format { kTable, kJson, kCsv };

Format parse_format(const std::string& text);

struct SweepConfig {
  Range a{2, 5};
  Range m{1, 24};
  Range k{1, 4};
  Range d{2, 6};
  bool include_poly = false;
  std::uint64_t max_bits = kDefaultMaxBits;
  std::uint64_t jobs = 1;
  Format format = Format::kTable;
  std::uint64_t seed = 0;
};

struct SweepRecord {
  std::uint64_t a, m, k, d;
  bool criterion;
  bool oracle;
  std::optional<bool> poly;
  std::uint64_t elapsed_micros;
};

// Walks the grid in lexicographic (a, m, k, d) order, comparing
// divides_criterion against divides_oracle (and the polynomial division
// when include_poly is set). Work is partitioned across jobs by the
// leading coordinate; records are merged back in grid order, so output is
// independent of the job count. Records go to out, diagnostics and the
// summary to err.
//
// Exit status: 0 all records agree; 2 criterion/oracle mismatch (stops at
// the offending tuple); 3 polynomial disagreement; 4 when instances were
// skipped by the bit-size guard (the sweep is incomplete).
int run_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gmdiv::cli
