#ifndef RIBBONMC_RATIONAL_HPP
#define RIBBONMC_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace ribbonmc {

// Exact rationals everywhere; no floating point in the pipeline.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" in lowest terms, "p" when q == 1.
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace ribbonmc

#endif
