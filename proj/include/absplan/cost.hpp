#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace absplan {

// Non-negative plan cost, with infinity as a distinguished state rather than
// a sentinel integer. Infinity means "proven unreachable" in heuristic use.
class Cost {
 public:
  Cost() : value_(0), infinite_(false) {}

  static Cost finite(std::uint64_t v) { return Cost(v, false); }
  static Cost infinity() { return Cost(0, true); }

  bool is_infinite() const { return infinite_; }
  std::uint64_t value() const { return value_; }  // meaningful only when finite

  Cost operator+(const Cost& other) const {
    if (infinite_ || other.infinite_) return infinity();
    return finite(value_ + other.value_);
  }

  bool operator==(const Cost& other) const {
    return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
  }
  bool operator!=(const Cost& other) const { return !(*this == other); }
  bool operator<(const Cost& other) const {
    if (infinite_) return false;
    if (other.infinite_) return true;
    return value_ < other.value_;
  }
  bool operator<=(const Cost& other) const { return *this < other || *this == other; }
  bool operator>(const Cost& other) const { return other < *this; }
  bool operator>=(const Cost& other) const { return other <= *this; }

  double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity()
                     : static_cast<double>(value_);
  }

  std::string to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
  }

 private:
  Cost(std::uint64_t v, bool inf) : value_(v), infinite_(inf) {}

  std::uint64_t value_;
  bool infinite_;
};

inline Cost min(const Cost& a, const Cost& b) { return a < b ? a : b; }
inline Cost max(const Cost& a, const Cost& b) { return a < b ? b : a; }

}  // namespace absplan
