// Error taxonomy shared by every module: domain violations, poles, branch
// cuts, and accuracy failures that carry the best estimate obtained so far.
#ifndef HDET_ERRORS_HPP
#define HDET_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace hdet {

class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class pole_error : public std::runtime_error {
 public:
  explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

class branch_cut_error : public std::runtime_error {
 public:
  explicit branch_cut_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised when an adaptive scheme cannot certify the requested target; the
// best estimate and its certified bound remain available to the caller.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, std::complex<double> best_estimate,
                 double err_bound)
      : std::runtime_error(what),
        best_estimate(best_estimate),
        err_bound(err_bound) {}
  std::complex<double> best_estimate;
  double err_bound;
};

// Spectrum-file rejection with the offending position (1-based).
class spectrum_parse_error : public std::runtime_error {
 public:
  spectrum_parse_error(const std::string& what, int line, int column)
      : std::runtime_error(what), line(line), column(column) {}
  int line;
  int column;
};

}  // namespace hdet

#endif  // HDET_ERRORS_HPP
