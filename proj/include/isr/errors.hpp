#pragma once

#include <stdexcept>
#include <string>

namespace isr {

// Exit-code contract used by the CLI: 0 success, 2 certificate violation,
// 3 resource cap exceeded, 1 anything else.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct RankError : Error {
  using Error::Error;
};

// A mathematical guarantee backed by a certificate failed to hold; either
// the certificate is forged or the caller passed a wrong guarantee level.
struct CertificateError : Error {
  using Error::Error;
};

// An enumeration exceeded its configured cap; never silently truncated.
struct ResourceError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const CertificateError*>(&e)) return 2;
  if (dynamic_cast<const ResourceError*>(&e)) return 3;
  return 1;
}

}  // namespace isr
