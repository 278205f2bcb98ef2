#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrcast {

// Error taxonomy mirrored by the C API / CLI exit codes:
// ConfigError -> 2, DataError -> 3, NumericError -> 4.
class ConfigError : public std::runtime_error {
  public: using std::runtime_error::runtime_error;
};
class DataError : public std::runtime_error {
  public: using std::runtime_error::runtime_error;
};
class NumericError : public std::runtime_error {
  public: using std::runtime_error::runtime_error;
};

/// Calendar month. Months are compared and iterated through a flat
/// index (year*12 + month-1) so contiguity checks are integer arithmetic.
struct YearMonth {
    int year = 0;
    int month = 1;  // 1..12

    int index() const { return year * 12 + (month - 1); }
    static YearMonth from_index(int idx);
    YearMonth plus(int months) const { return from_index(index() + months); }
    std::string str() const;  // "2021-03"
    static YearMonth parse(const std::string& s);

    bool operator==(const YearMonth& o) const { return year == o.year && month == o.month; }
    bool operator!=(const YearMonth& o) const { return !(*this == o); }
    bool operator<(const YearMonth& o) const { return index() < o.index(); }
    bool operator<=(const YearMonth& o) const { return index() <= o.index(); }
};

/// Inclusive contiguous month range.
struct MonthRange {
    YearMonth first;
    YearMonth last;

    int size() const { return last.index() - first.index() + 1; }
    bool contains(const YearMonth& m) const {
        return first.index() <= m.index() && m.index() <= last.index();
    }
    bool contains(const MonthRange& r) const {
        return contains(r.first) && contains(r.last);
    }
    YearMonth at(int offset) const { return first.plus(offset); }
};

std::string format_double(double v);        // shortest round-trip decimal
double parse_double(const std::string& s);  // locale-independent, throws DataError
long long parse_int(const std::string& s);

std::vector<std::string> split(const std::string& line, char sep);
std::string trim(const std::string& s);

uint64_t fnv1a64(const void* data, size_t n, uint64_t seed = 0xcbf29ce484222325ull);
uint64_t fnv1a64(const std::string& s, uint64_t seed = 0xcbf29ce484222325ull);

/// Deterministic RNG: mt19937_64 with an explicitly coded Box-Muller
/// normal so draws are fully specified by the seed and call order.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    double uniform() {  // (0,1)
        return (static_cast<double>(engine_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }
    double normal();
    uint64_t next_u64() { return engine_(); }

    std::mt19937_64& engine() { return engine_; }

    /// Stable per-task substream, independent of evaluation order.
    static uint64_t derive(uint64_t seed, const std::string& tag) {
        return fnv1a64(tag, seed ^ 0x9e3779b97f4a7c15ull);
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Type-7 empirical quantile (linear interpolation between order statistics).
double quantile(std::vector<double> v, double p);

double log_sum_exp(const std::vector<double>& v);

}  // namespace rrcast
