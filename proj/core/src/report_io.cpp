#include "nehari/report_io.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace nehari {

namespace {

using nlohmann::ordered_json;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string census_path(const std::string& path) {
  const auto dot = path.rfind('.');
  const auto slash = path.find_last_of("/\\");
  const bool has_ext =
      dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? path.substr(0, dot) : path) + ".census.csv";
}

ordered_json membership_json(const MembershipReport& m) {
  return ordered_json{{"member", m.member},
                      {"nonneg_min", m.nonneg_min},
                      {"symmetry_defect", m.symmetry_defect},
                      {"concavity_defect", m.concavity_defect},
                      {"harnack_margin", m.harnack_margin},
                      {"quarter_min_margin", m.quarter_min_margin}};
}

ordered_json solve_json(const NehariSolveReport& rep) {
  return ordered_json{{"converged", rep.converged},
                      {"failure", rep.failure},
                      {"t_v", rep.t_v},
                      {"residual_sup", rep.residual_sup},
                      {"residual_w1p", rep.residual_w1p},
                      {"annulus_lower_ok", rep.annulus_lower_ok},
                      {"annulus_upper_ok", rep.annulus_upper_ok},
                      {"iterations", rep.iterations},
                      {"cone_membership", membership_json(rep.cone_membership)}};
}

ordered_json hypothesis_json(const HypothesisReport& rep) {
  ordered_json witnesses = ordered_json::object();
  for (const auto& [name, value] : rep.witnesses) witnesses[name] = value;
  return ordered_json{{"condition", rep.condition},
                      {"verdict", to_string(rep.verdict)},
                      {"samples", rep.samples},
                      {"seed", rep.seed},
                      {"witnesses", witnesses},
                      {"note", rep.note}};
}

}  // namespace

void emit_csv(const RadialProfile& profile, const std::string& path) {
  {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << "t,potential,energy\n";
    for (std::size_t i = 0; i < profile.t.size(); ++i) {
      out << fmt(profile.t[i]) << "," << fmt(profile.potential[i]) << ","
          << fmt(profile.energy[i]) << "\n";
    }
  }
  const std::string cpath = census_path(path);
  std::ofstream out(cpath);
  if (!out) throw Error("cannot write '" + cpath + "'");
  out << "t,kind\n";
  for (const auto& c : profile.census) {
    out << fmt(c.t) << ","
        << (c.kind == CriticalPoint::Kind::Maximum ? "maximum" : "minimum")
        << "\n";
  }
}

std::string to_json(const NehariSolveReport& rep) {
  return solve_json(rep).dump(2) + "\n";
}

std::string to_json(const HypothesisReport& rep) {
  return hypothesis_json(rep).dump(2) + "\n";
}

std::string to_json(const std::vector<HypothesisReport>& reps) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reps) arr.push_back(hypothesis_json(r));
  return arr.dump(2) + "\n";
}

std::string to_json(const std::vector<NehariSolveReport>& reps) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reps) arr.push_back(solve_json(r));
  return arr.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace nehari
