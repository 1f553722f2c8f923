#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ucat {

enum class ErrorKind {
  EmptyTree,
  DuplicateVertexId,
  UnknownVertex,
  NonPositiveLength,
  CycleDetected,
  Disconnected,
  UnknownEdge,
  EndpointSubdivision,
  InvalidDensity,
  ZeroDensity,
  TreeMismatch,
  EmptyModeSet,
  NonTermination,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyTree: return "EmptyTree";
    case ErrorKind::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::EndpointSubdivision: return "EndpointSubdivision";
    case ErrorKind::InvalidDensity: return "InvalidDensity";
    case ErrorKind::ZeroDensity: return "ZeroDensity";
    case ErrorKind::TreeMismatch: return "TreeMismatch";
    case ErrorKind::EmptyModeSet: return "EmptyModeSet";
    case ErrorKind::NonTermination: return "NonTermination";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace ucat
