#include "phantom/closures/verdict.hpp"

#include <tuple>

namespace phantom {

std::string Verdict::status_name() const {
  switch (status) {
    case Status::kCertifiedMember:
      switch (reading) {
        case Reading::kMembership: return "CertifiedMember";
        case Reading::kHolds: return "CertifiedHolds";
        case Reading::kPhantom: return "CertifiedPhantom";
        case Reading::kRegular: return "CertifiedYes";
      }
      break;
    case Status::kCertifiedNonMember:
      switch (reading) {
        case Reading::kMembership: return "CertifiedNonMember";
        case Reading::kHolds: return "CertifiedFails";
        case Reading::kPhantom: return "CertifiedNotPhantom";
        case Reading::kRegular: return "CertifiedNo";
      }
      break;
    case Status::kWitnessedUpTo: return "WitnessedUpTo(" + std::to_string(e_max) + ")";
    case Status::kNoWitnessUpTo: return "NoWitnessUpTo(" + std::to_string(e_max) + ")";
    case Status::kUnknown: return "Unknown";
  }
  return "Unknown";
}

int verdict_rank(Status s) {
  switch (s) {
    case Status::kCertifiedNonMember: return 0;
    case Status::kUnknown: return 1;
    case Status::kNoWitnessUpTo: return 2;
    case Status::kWitnessedUpTo: return 3;
    case Status::kCertifiedMember: return 4;
  }
  return 1;
}

namespace {

auto certificate_key(const Verdict& v) {
  if (!v.certificate) return std::make_tuple(1, 0u, std::size_t{0}, std::uint64_t{0});
  const auto& c = *v.certificate;
  return std::make_tuple(0, c.level.value_or(0), c.generator.value_or(0), c.q);
}

}  // namespace

Verdict join_all(const std::vector<Verdict>& parts, unsigned e_max, std::uint64_t q0, Reading reading) {
  Verdict out;
  out.status = Status::kCertifiedMember;
  out.e_max = e_max;
  out.q0 = q0;
  out.reading = reading;
  const Verdict* best = nullptr;
  for (const auto& p : parts) {
    if (!best || verdict_rank(p.status) < verdict_rank(best->status) ||
        (verdict_rank(p.status) == verdict_rank(best->status) && certificate_key(p) < certificate_key(*best))) {
      best = &p;
    }
  }
  if (best) {
    out.status = best->status;
    if (best->status == Status::kCertifiedNonMember) {
      out.certificate = best->certificate;
      out.conditional_on = best->conditional_on;
    }
  }
  return out;
}

std::string certificate_kind_name(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::kTrivial: return "trivial";
    case Certificate::Kind::kFrobenius: return "frobenius";
    case Certificate::Kind::kTestElement: return "test_element";
  }
  return "trivial";
}

}  // namespace phantom
