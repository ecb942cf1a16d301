#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phantom {

enum class Status { kCertifiedMember, kCertifiedNonMember, kWitnessedUpTo, kNoWitnessUpTo, kUnknown };

// How a status is named in reports: membership, a property holding at a spot,
// phantomness of an element, or regularity of a sequence element.
enum class Reading { kMembership, kHolds, kPhantom, kRegular };

struct Certificate {
  enum class Kind { kTrivial, kFrobenius, kTestElement };
  Kind kind = Kind::kTrivial;
  // Frobenius witness q, or the q' with c*z^q' outside N^[q'].
  std::uint64_t q = 1;
  // Normal form of the tested element modulo the tested submodule.
  std::string reduction;
  // Filled by composite scans: the Frobenius level, generator index and element.
  std::optional<unsigned> level;
  std::optional<std::size_t> generator;
  std::string element;
};

struct Verdict {
  Status status = Status::kUnknown;
  std::optional<Certificate> certificate;
  unsigned e_max = 0;
  std::uint64_t q0 = 1;
  // What a certified negative status rests on, e.g. "declared test element";
  // empty when unconditional.
  std::string conditional_on;
  Reading reading = Reading::kMembership;

  bool certified_member() const { return status == Status::kCertifiedMember; }
  bool certified_non_member() const { return status == Status::kCertifiedNonMember; }
  std::string status_name() const;
  Verdict as(Reading r) const {
    Verdict v = *this;
    v.reading = r;
    return v;
  }
};

// Position in the order used for universal statements: a certified failure is
// the strongest outcome, then unknown, no witness, witnessed, certified.
int verdict_rank(Status s);

// Verdict of "all parts hold". Takes the lowest-ranked status; among equal
// ranks the certificate with the smallest (level, generator, q) is kept, so
// the result does not depend on evaluation order.
Verdict join_all(const std::vector<Verdict>& parts, unsigned e_max, std::uint64_t q0, Reading reading);

std::string certificate_kind_name(Certificate::Kind k);

}  // namespace phantom
