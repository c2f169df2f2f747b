#include "sweep.hpp"

#include <chrono>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gmdiv/bigint.hpp"
#include "gmdiv/mersenne.hpp"
#include "gmdiv/polyring.hpp"

namespace gmdiv::cli {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

struct Entry {
  SweepRecord rec;
  bool skipped = false;
  std::string note;
};

Entry evaluate(std::uint64_t a, std::uint64_t m, std::uint64_t k,
               std::uint64_t d, const SweepConfig& cfg) {
  Entry e;
  e.rec = {a, m, k, d, false, false, std::nullopt, 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    e.rec.criterion = divides_criterion(m, k, d);
    e.rec.oracle = divides_oracle(DivInstance(a, m, k, d), cfg.max_bits);
    if (cfg.include_poly) {
      std::uint64_t deg = sat_mul(std::max(m, k), d);
      if (deg > kDefaultMaxDegree)
        throw GuardExceeded("polynomial degree exceeds " +
                            std::to_string(kDefaultMaxDegree));
      e.rec.poly =
          poly_exact_div(poly_mersenne(d, m), poly_mersenne(d, k)).has_value();
    }
  } catch (const GuardExceeded& ex) {
    e.skipped = true;
    e.note = ex.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  e.rec.elapsed_micros = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
  return e;
}

void print_record(std::ostream& out, const SweepRecord& r, Format fmt) {
  switch (fmt) {
    case Format::kJson:
      out << "{\"a\":" << r.a << ",\"m\":" << r.m << ",\"k\":" << r.k
          << ",\"d\":" << r.d << ",\"criterion\":" << bool_str(r.criterion)
          << ",\"oracle\":" << bool_str(r.oracle) << ",\"poly\":"
          << (r.poly ? bool_str(*r.poly) : "null")
          << ",\"elapsed_micros\":" << r.elapsed_micros << "}\n";
      break;
    case Format::kCsv:
      out << r.a << ',' << r.m << ',' << r.k << ',' << r.d << ','
          << bool_str(r.criterion) << ',' << bool_str(r.oracle) << ','
          << (r.poly ? bool_str(*r.poly) : "") << ',' << r.elapsed_micros
          << '\n';
      break;
    case Format::kTable:
      out << std::setw(4) << r.a << ' ' << std::setw(4) << r.m << ' '
          << std::setw(4) << r.k << ' ' << std::setw(4) << r.d << ' '
          << std::setw(9) << bool_str(r.criterion) << ' ' << std::setw(6)
          << bool_str(r.oracle) << ' ' << std::setw(5)
          << (r.poly ? bool_str(*r.poly) : "-") << ' ' << std::setw(14)
          << r.elapsed_micros << '\n';
      break;
  }
}

void print_header(std::ostream& out, Format fmt) {
  switch (fmt) {
    case Format::kJson:
      break;
    case Format::kCsv:
      out << "a,m,k,d,criterion,oracle,poly,elapsed_micros\n";
      break;
    case Format::kTable:
      out << std::setw(4) << "a" << ' ' << std::setw(4) << "m" << ' '
          << std::setw(4) << "k" << ' ' << std::setw(4) << "d" << ' '
          << std::setw(9) << "criterion" << ' ' << std::setw(6) << "oracle"
          << ' ' << std::setw(5) << "poly" << ' ' << std::setw(14)
          << "elapsed_micros" << '\n';
      break;
  }
}

}  // namespace

Range parse_range(const std::string& text) {
  auto parse_u64 = [&](const std::string& part) {
    std::size_t used = 0;
    std::uint64_t v;
    try {
      v = std::stoull(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad range '" + text + "'");
    }
    if (used != part.size() || part.empty())
      throw std::invalid_argument("bad range '" + text + "'");
    return v;
  };
  std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    std::uint64_t v = parse_u64(text);
    return {v, v};
  }
  return {parse_u64(text.substr(0, colon)), parse_u64(text.substr(colon + 1))};
}

Format parse_format(const std::string& text) {
  if (text == "table") return Format::kTable;
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw std::invalid_argument("unknown format '" + text +
                              "' (expected json, csv, or table)");
}

int run_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.jobs < 1) throw std::invalid_argument("sweep: jobs must be >= 1");
  auto nonempty = [](const Range& r) { return r.lo <= r.hi; };
  if (nonempty(cfg.a) && cfg.a.lo < 2)
    throw std::invalid_argument("sweep: a must start at 2 or above");
  if (nonempty(cfg.d) && cfg.d.lo < 2)
    throw std::invalid_argument("sweep: d must start at 2 or above");
  if (nonempty(cfg.m) && cfg.m.lo < 1)
    throw std::invalid_argument("sweep: m must start at 1 or above");
  if (nonempty(cfg.k) && cfg.k.lo < 1)
    throw std::invalid_argument("sweep: k must start at 1 or above");

  std::uint64_t a_count = nonempty(cfg.a) ? cfg.a.hi - cfg.a.lo + 1 : 0;
  std::vector<std::vector<Entry>> by_a(a_count);

  auto t0 = std::chrono::steady_clock::now();
  auto work = [&](std::uint64_t worker, std::uint64_t stride) {
    for (std::uint64_t i = worker; i < a_count; i += stride) {
      std::uint64_t a = cfg.a.lo + i;
      std::vector<Entry>& rows = by_a[i];
      for (std::uint64_t m = cfg.m.lo; nonempty(cfg.m) && m <= cfg.m.hi; ++m)
        for (std::uint64_t k = cfg.k.lo; nonempty(cfg.k) && k <= cfg.k.hi; ++k)
          for (std::uint64_t d = cfg.d.lo; nonempty(cfg.d) && d <= cfg.d.hi;
               ++d)
            rows.push_back(evaluate(a, m, k, d, cfg));
    }
  };

  std::uint64_t workers = std::min<std::uint64_t>(cfg.jobs, a_count);
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::uint64_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          work(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& ep : errors)
      if (ep) std::rethrow_exception(ep);
  }
  auto t1 = std::chrono::steady_clock::now();

  std::uint64_t total = 0, divides = 0, non_divides = 0, skipped = 0;
  print_header(out, cfg.format);
  for (const std::vector<Entry>& rows : by_a) {
    for (const Entry& e : rows) {
      if (e.skipped) {
        ++skipped;
        err << "guard-skipped: a=" << e.rec.a << " m=" << e.rec.m
            << " k=" << e.rec.k << " d=" << e.rec.d << " (" << e.note << ")\n";
        continue;
      }
      print_record(out, e.rec, cfg.format);
      ++total;
      if (e.rec.oracle)
        ++divides;
      else
        ++non_divides;
      if (e.rec.criterion != e.rec.oracle) {
        err << "mismatch: a=" << e.rec.a << " m=" << e.rec.m
            << " k=" << e.rec.k << " d=" << e.rec.d
            << " criterion=" << bool_str(e.rec.criterion)
            << " oracle=" << bool_str(e.rec.oracle) << "\n";
        return 2;
      }
      if (e.rec.poly && *e.rec.poly != e.rec.criterion) {
        err << "polynomial disagreement: a=" << e.rec.a << " m=" << e.rec.m
            << " k=" << e.rec.k << " d=" << e.rec.d << "\n";
        return 3;
      }
    }
  }
  std::uint64_t elapsed = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
  err << "sweep: total=" << total << " divides=" << divides
      << " non_divides=" << non_divides << " guard_skipped=" << skipped
      << " mismatches=0 elapsed_micros=" << elapsed << "\n";
  return skipped > 0 ? 4 : 0;
}

}  // namespace gmdiv::cli
