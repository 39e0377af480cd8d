#pragma once

#include <string>
#include <vector>

#include "nehari/solver.hpp"
#include "nehari/verify.hpp"

namespace nehari {

/// Writes "t,potential,energy" rows in sample order to `path`, and the
/// census as "t,kind" rows (ordered by t) to the companion path with the
/// extension replaced by ".census.csv". Numbers are printed with %.17g so
/// identical profiles produce byte-identical files.
void emit_csv(const RadialProfile& profile, const std::string& path);

/// JSON renderings of the run reports (deterministic key order).
std::string to_json(const NehariSolveReport& rep);
std::string to_json(const HypothesisReport& rep);
std::string to_json(const std::vector<HypothesisReport>& reps);
std::string to_json(const std::vector<NehariSolveReport>& reps);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace nehari
