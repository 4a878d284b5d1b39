#pragma once

#include <stdexcept>
#include <string>

namespace tigraph {

// Failure categories surfaced by the library. The CLI maps these to exit
// codes and tests dispatch on them, so keep the set stable.
enum class Errc {
  InvalidEdge,
  DuplicateEdge,
  Disconnected,
  MalformedGraph6,
  NotAnEdge,
  EmptySubset,
  InvalidShift,
  BadArity,
  BadLength,
  BadOrder,
  BadParam,
  NotConnectedSubtree,
  RootIsLeaf,
  NotATree,
  NotAProperPath,
  NotTI,
  UnknownPredicate,
  OrderTooLarge,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::InvalidShift: return "InvalidShift";
    case Errc::BadArity: return "BadArity";
    case Errc::BadLength: return "BadLength";
    case Errc::BadOrder: return "BadOrder";
    case Errc::BadParam: return "BadParam";
    case Errc::NotConnectedSubtree: return "NotConnectedSubtree";
    case Errc::RootIsLeaf: return "RootIsLeaf";
    case Errc::NotATree: return "NotATree";
    case Errc::NotAProperPath: return "NotAProperPath";
    case Errc::NotTI: return "NotTI";
    case Errc::UnknownPredicate: return "UnknownPredicate";
    case Errc::OrderTooLarge: return "OrderTooLarge";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tigraph
