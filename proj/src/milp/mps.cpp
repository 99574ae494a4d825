#include "snd/milp/mps.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace snd::milp {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_mps(const MilpModel& model, std::ostream& os) {
  model.validate();
  os << "NAME " << model.name << "\n";
  os << "ROWS\n";
  os << " N OBJ\n";
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    char s = model.rows[i].sense == RowSense::LE ? 'L' : model.rows[i].sense == RowSense::GE ? 'G' : 'E';
    std::string rname = model.rows[i].name.empty() ? "R" + std::to_string(i) : model.rows[i].name;
    os << " " << s << " " << rname << "\n";
  }
  auto row_name = [&](int i) {
    return model.rows[i].name.empty() ? "R" + std::to_string(i) : model.rows[i].name;
  };
  auto col_name = [&](int j) {
    return model.vars[j].name.empty() ? "C" + std::to_string(j) : model.vars[j].name;
  };

  // column-major entries, in variable order then row order
  std::vector<std::vector<std::pair<int, double>>> cols(model.vars.size());
  for (std::size_t i = 0; i < model.rows.size(); ++i)
    for (const auto& e : model.rows[i].terms)
      cols[e.var].emplace_back(static_cast<int>(i), e.coef);

  os << "COLUMNS\n";
  bool in_int = false;
  int marker = 0;
  for (std::size_t j = 0; j < model.vars.size(); ++j) {
    bool is_int = model.vars[j].kind != VarKind::Continuous;
    if (is_int != in_int) {
      os << "    MARKER" << marker++ << " 'MARKER' " << (is_int ? "'INTORG'" : "'INTEND'") << "\n";
      in_int = is_int;
    }
    if (model.vars[j].objective != 0.0)
      os << "    " << col_name(static_cast<int>(j)) << " OBJ " << num(model.vars[j].objective) << "\n";
    for (const auto& [row, coef] : cols[j])
      os << "    " << col_name(static_cast<int>(j)) << " " << row_name(row) << " " << num(coef) << "\n";
  }
  if (in_int) os << "    MARKER" << marker++ << " 'MARKER' 'INTEND'\n";

  os << "RHS\n";
  for (std::size_t i = 0; i < model.rows.size(); ++i)
    if (model.rows[i].rhs != 0.0)
      os << "    RHS " << row_name(static_cast<int>(i)) << " " << num(model.rows[i].rhs) << "\n";

  os << "BOUNDS\n";
  for (std::size_t j = 0; j < model.vars.size(); ++j) {
    const auto& v = model.vars[j];
    if (v.lower == v.upper) {
      os << " FX BND " << col_name(static_cast<int>(j)) << " " << num(v.lower) << "\n";
      continue;
    }
    os << " LO BND " << col_name(static_cast<int>(j)) << " " << num(v.lower) << "\n";
    if (std::isfinite(v.upper))
      os << " UP BND " << col_name(static_cast<int>(j)) << " " << num(v.upper) << "\n";
  }
  os << "ENDATA\n";
}

std::string to_mps(const MilpModel& model) {
  std::ostringstream os;
  write_mps(model, os);
  return os.str();
}

}  // namespace snd::milp
