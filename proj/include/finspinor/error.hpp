#pragma once

#include <stdexcept>
#include <string>

namespace finspinor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation (non-square, wrong extent, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Wrong number of spinors or mismatched spinor dimension.
class ShapeError : public DimensionError {
 public:
  using DimensionError::DimensionError;
};

/// Spintensors of different valency combined where equal valency is required.
class ValencyError : public DimensionError {
 public:
  using DimensionError::DimensionError;
};

/// Contraction slots of the wrong class (upper/lower, dotted/undotted).
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Matrix too close to singular to invert.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double abs_det)
      : Error(what), abs_det_(abs_det) {}
  double abs_det() const noexcept { return abs_det_; }

 private:
  double abs_det_;
};

/// Matrix expected in SL(N,C) is not unimodular.
class GroupMembershipError : public Error {
 public:
  GroupMembershipError(const std::string& what, double det_re, double det_im)
      : Error(what), det_re_(det_re), det_im_(det_im) {}
  double det_re() const noexcept { return det_re_; }
  double det_im() const noexcept { return det_im_; }

 private:
  double det_re_;
  double det_im_;
};

/// Input expected to be Hermitian is not.
class SymmetryError : public Error {
 public:
  SymmetryError(const std::string& what, double max_asymmetry)
      : Error(what), max_asymmetry_(max_asymmetry) {}
  double max_asymmetry() const noexcept { return max_asymmetry_; }

 private:
  double max_asymmetry_;
};

/// Argument outside the domain of the operation (e.g. m33 = 0 for the SL(3,C)
/// decomposition, nonpositive modulus).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result that must be real/exact by construction came out otherwise.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace finspinor
