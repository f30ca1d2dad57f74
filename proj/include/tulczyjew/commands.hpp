#ifndef TULCZYJEW__COMMANDS_HPP_
#define TULCZYJEW__COMMANDS_HPP_

#include "tulczyjew/config.hpp"
#include "tulczyjew/mechanics.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace tulczyjew {

constexpr int kExitOk           = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError  = 2;
constexpr int kExitNumericError = 3;

/// Runs the configured rigid body; X0 is mapped to A0 through the inertia form.
/// Throws ConvergenceError if the state stops being finite.
TrajectoryRecord simulate(const SimulationConfig & cfg);

int cmd_simulate(const std::string & config_path, std::ostream & out, std::ostream & err);

/// `algebra_path` may be empty; otherwise a JSON algebra checked alongside the built-ins.
int cmd_verify(std::uint64_t seed, std::size_t samples, const std::string & algebra_path, std::ostream & out,
               std::ostream & err);

/// Prints {"inertia", "eigenvalues", "rank", "total_mass"} as JSON. A rank-deficient
/// body still prints, with a warning on err, and returns kExitNumericError.
int cmd_inertia(const std::string & config_path, std::ostream & out, std::ostream & err);

/**
 * @brief Applies one bundle map to a literal point.
 *
 * `point` is a JSON array [g, s1, s2, s3] where g is "e" or a square nested
 * array and the slots are coordinate arrays in the order of the source bundle.
 * `algebra` is "so3" or "abelian" (translations of the slot dimension).
 * Map names: kappa, alpha, alpha_inv, beta, beta_inv, gamma, gamma_inv.
 */
int cmd_maps(const std::string & name, const std::string & point, const std::string & algebra, std::ostream & out,
             std::ostream & err);

}  // namespace tulczyjew

#endif
