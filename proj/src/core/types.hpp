#ifndef ELW_CORE_TYPES_HPP
#define ELW_CORE_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace elw {

using Complex = std::complex<double>;
using CVec3 = Eigen::Vector3cd;
using CMat3 = Eigen::Matrix3cd;
using CVec9 = Eigen::Matrix<Complex, 9, 1>;
using CMat9 = Eigen::Matrix<Complex, 9, 9>;
using RVec3 = Eigen::Vector3d;
using RMat3 = Eigen::Matrix3d;
using RVec8 = Eigen::Matrix<double, 8, 1>;
using RVec16 = Eigen::Matrix<double, 16, 1>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class ErrorCode {
  invalid_argument,
  index_out_of_range,
  not_hermitian,
  not_traceless,
  not_unitary,
  not_symmetric,
  not_maximally_entangled,
  not_root_vector,
  invalid_epsilon,
  degenerate_polynomial,
  symmetrization_incomplete,
  out_of_domain,
  io_error,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace elw

#endif
