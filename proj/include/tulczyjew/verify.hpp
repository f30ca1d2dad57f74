#ifndef TULCZYJEW__VERIFY_HPP_
#define TULCZYJEW__VERIFY_HPP_

#include "tulczyjew/lie_algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tulczyjew {

struct PropertyResult
{
  std::string name;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance    = 0.0;

  bool pass() const { return max_residual <= tolerance; }
};

struct VerifyReport
{
  std::vector<PropertyResult> results;

  bool ok() const;
  const PropertyResult * find(const std::string & name) const;
  void print(std::ostream & out) const;
};

struct VerifyOptions
{
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  /// Checked alongside the built-in algebras when set.
  std::optional<LieAlgebra> extra_algebra;
};

/// Runs every property suite. Deterministic given the options.
VerifyReport run_verification(const VerifyOptions & opts);

}  // namespace tulczyjew

#endif
