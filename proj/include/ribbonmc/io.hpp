#ifndef RIBBONMC_IO_HPP
#define RIBBONMC_IO_HPP

#include <string>

#include "ribbonmc/algebra.hpp"

namespace ribbonmc {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixture file grammar (UTF-8, # comments):
//   n <int>
//   basis <name> deg <int>
//   pair <a> <b> <rational>
//   d <a> -> <coef> <basis> [+ <coef> <basis> ...] | 0
//   mul <a> <b> -> <coef> <basis> [+ ...] | 0
CyclicDGA parse_dga(const std::string& text);
std::string serialize_dga(const CyclicDGA& a);

CyclicDGA load_dga_file(const std::string& path);

}  // namespace ribbonmc

#endif
