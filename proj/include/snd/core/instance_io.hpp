#ifndef SND_CORE_INSTANCE_IO_HPP
#define SND_CORE_INSTANCE_IO_HPP

#include <json.hpp>

#include <string>

#include "snd/core/instance.hpp"
#include "snd/core/types.hpp"

namespace snd::core {

// Lossless, key-ordered JSON round trip for instances and period matrices.
nlohmann::ordered_json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::ordered_json& j);
void save_instance(const std::string& path, const Instance& inst);
Instance load_instance(const std::string& path);

nlohmann::ordered_json matrix_to_json(const DemandMatrix& m);
DemandMatrix matrix_from_json(const nlohmann::ordered_json& j);
void save_matrix(const std::string& path, const DemandMatrix& m);
DemandMatrix load_matrix(const std::string& path);

nlohmann::ordered_json parse_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace snd::core

#endif
