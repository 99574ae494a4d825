#ifndef SND_MILP_MPS_HPP
#define SND_MILP_MPS_HPP

#include <ostream>
#include <string>

#include "snd/milp/model.hpp"

namespace snd::milp {

// MPS-style textual dump: fixed column order (model order), full-precision
// numbers, INTORG/INTEND markers around integer columns, explicit bounds for
// every variable. Deterministic byte-for-byte for a given model.
void write_mps(const MilpModel& model, std::ostream& os);
std::string to_mps(const MilpModel& model);

}  // namespace snd::milp

#endif
