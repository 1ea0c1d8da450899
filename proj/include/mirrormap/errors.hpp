#ifndef MIRRORMAP_ERRORS_HPP
#define MIRRORMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mirrormap {

struct DivisionByNonUnit : std::domain_error {
  DivisionByNonUnit() : std::domain_error("series division by a non-unit (constant term 0)") {}
};

struct ExpOfUnit : std::domain_error {
  ExpOfUnit() : std::domain_error("series exp of an argument with nonzero constant term") {}
};

struct NotReversible : std::domain_error {
  explicit NotReversible(const std::string& why)
      : std::domain_error("series not reversible: " + why) {}
};

struct NoZeroPlateau : std::domain_error {
  explicit NoZeroPlateau(const std::string& spec)
      : std::domain_error("no zero plateau on [1/M, 1): " + spec) {}
};

struct NotRPartitionable : std::domain_error {
  NotRPartitionable(long denominator, long have, long need)
      : std::domain_error("multiset not R-partitionable: denominator " +
                          std::to_string(denominator) + " has " + std::to_string(have) +
                          " residues, full blocks need a multiple of " +
                          std::to_string(need)),
        denominator(denominator),
        residue_count(have) {}
  long denominator;
  long residue_count;
};

struct ConstantMismatch : std::domain_error {
  explicit ConstantMismatch(const std::string& detail)
      : std::domain_error("hypergeometric constant mismatch: " + detail) {}
};

struct NoWitness : std::domain_error {
  explicit NoWitness(const std::string& why) : std::domain_error("no witness: " + why) {}
};

struct EquivalenceViolation : std::logic_error {
  explicit EquivalenceViolation(const std::string& detail)
      : std::logic_error("equivalence check mismatch (implementation bug): " + detail) {}
};

struct DegenerateDenominator : std::domain_error {
  DegenerateDenominator() : std::domain_error("degenerate denominator factor") {}
};

}  // namespace mirrormap

#endif
