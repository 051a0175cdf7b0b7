#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <optional>
#include <string>
#include <utility>

namespace cedga {

// Action/length filtration values are nonnegative rationals.
using Weight = boost::rational<long long>;

// Poor-man's expected<T, string>: operations that can fail on invalid input
// return a Result carrying either a value or a human-readable witness.
template <typename T>
struct Result {
  std::optional<T> value;
  std::string error;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  T& operator*() { return *value; }
  const T* operator->() const { return &*value; }
  T* operator->() { return &*value; }

  static Result success(T v) { return Result{std::move(v), std::string{}}; }
  static Result failure(std::string msg) {
    return Result{std::nullopt, std::move(msg)};
  }
};

inline std::string weight_to_string(const Weight& w) {
  if (w.denominator() == 1) return std::to_string(w.numerator());
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

inline std::optional<Weight> weight_from_string(const std::string& s) {
  auto parse_ll = [](const std::string& t) -> std::optional<long long> {
    long long v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size()) return std::nullopt;
    return v;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    auto n = parse_ll(s);
    if (!n) return std::nullopt;
    return Weight(*n);
  }
  auto n = parse_ll(s.substr(0, slash));
  auto d = parse_ll(s.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Weight(*n, *d);
}

}  // namespace cedga
