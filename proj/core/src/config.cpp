#include "ringlab/config.hpp"

#include "ringlab/error.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace ringlab {

namespace {

std::size_t initial_cap() {
  const char* env = std::getenv("RINGLAB_CAP");
  if (env == nullptr) {
    return kDefaultCarrierCap;
  }
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
  if (ec != std::errc{} || *ptr != '\0' || value == 0) {
    return kDefaultCarrierCap;
  }
  return value;
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConstruction: return "InvalidConstruction";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NotMultClosed: return "NotMultClosed";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotADomain: return "NotADomain";
    case ErrorKind::UnknownLaw: return "UnknownLaw";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NameError: return "NameError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

std::size_t carrier_cap() { return cap_storage().load(std::memory_order_relaxed); }

void set_carrier_cap(std::size_t cap) {
  if (cap == 0) {
    throw Error(ErrorKind::InvalidConstruction, "carrier cap must be positive");
  }
  cap_storage().store(cap, std::memory_order_relaxed);
}

void check_cap(std::size_t size, std::string_view what) {
  const std::size_t cap = carrier_cap();
  if (size > cap) {
    throw Error(ErrorKind::CapExceeded,
                std::string(what) + " has " + std::to_string(size) +
                    " elements, above the carrier cap of " + std::to_string(cap));
  }
}

}  // namespace ringlab
