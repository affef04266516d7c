#pragma once

#include <boost/rational.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootlet {

// Exact rational scalar.  All geometry in this project is done over Q; nothing
// here ever touches floating point.
using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

inline long long as_integer(const Rat& q) {
  if (!is_integer(q)) throw std::logic_error("expected an integer, got " + std::to_string(q.numerator()) + "/" + std::to_string(q.denominator()));
  return q.numerator();
}

inline std::string rat_string(const Rat& q) {
  std::string s = std::to_string(q.numerator());
  if (q.denominator() != 1) s += "/" + std::to_string(q.denominator());
  return s;
}

inline RatVec to_ratvec(const std::vector<int>& v) {
  RatVec out;
  out.reserve(v.size());
  for (int c : v) out.emplace_back(c);
  return out;
}

}  // namespace rootlet
