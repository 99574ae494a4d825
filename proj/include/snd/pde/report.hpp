#ifndef SND_PDE_REPORT_HPP
#define SND_PDE_REPORT_HPP

#include <json.hpp>

#include <string>

namespace snd::pde {

// Render an analysis document (the JSON produced by analysis1_to_json or
// analysis2_to_json) as an aligned text table or as CSV. The CSV prints
// doubles with enough digits to read back the exact same value.
std::string render_table(const nlohmann::ordered_json& analysis);
std::string render_csv(const nlohmann::ordered_json& analysis);

}  // namespace snd::pde

#endif
