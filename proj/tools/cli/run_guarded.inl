#pragma once

#include <ostream>

#include "tribo/error.hpp"
#include "tribo/factor_scan.hpp"

namespace tribo::cli {

template <typename Fn>
int run_guarded(std::ostream& diag, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    diag << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SaturationFailure& e) {
    diag << "saturation failure: " << e.what() << "\n";
    return kExitSaturation;
  } catch (const ConfigError& e) {
    diag << "resource limit: " << e.what() << "\n";
    return kExitSaturation;
  } catch (const InvalidInput& e) {
    diag << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidRepresentation& e) {
    diag << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    diag << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << "\n";
    return kExitClaimFailure;
  }
}

}  // namespace tribo::cli
