#ifndef SPCALAB_IO_HPP
#define SPCALAB_IO_HPP

#include <string>

#include <json.hpp>

#include "spcalab/hardness.hpp"

namespace spcalab {

using json = nlohmann::json;

// {"n": int, "rows": [[...], ...]}; symmetry is validated on load.
json matrix_to_json(const SymmetricMatrix& s);
SymmetricMatrix matrix_from_json(const json& j);

// {"matrix": {...}, "r": int, "M": real} with "M" omitted when absent.
json instance_to_json(const SpcaInstance& inst);
SpcaInstance instance_from_json(const json& j);

// {"support": [ints], "values": [reals], "value": real}
json solution_to_json(const SpcaSolution& sol);
SpcaSolution solution_from_json(const json& j);

// Report columns: instance_id, family, n, K_or_ell, solver, achieved,
// threshold, decision, ground_truth, correct. The CSV carries the config
// echo and the aggregate as '#' comment lines; the JSON mirror nests them.
std::string report_to_csv(const ExperimentReport& report);
json report_to_json(const ExperimentReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace spcalab

#endif  // SPCALAB_IO_HPP
