#include "fqc/experiment.hpp"

#include <chrono>
#include <ostream>

#include <json.hpp>

namespace fqc {

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
  auto F = std::make_shared<Fq>(spec.q);
  PatternGraph G = PatternGraph::parse(spec.pattern);

  std::vector<code_t> ratios;
  switch (spec.r_selection) {
    case RSelection::all_nonzero:
      for (code_t r = 1; r < F->q(); ++r) ratios.push_back(r);
      break;
    case RSelection::squares_only:
      ratios = F->qr_set();
      break;
    case RSelection::explicit_list:
      ratios = spec.r_list;
      break;
  }
  for (code_t r : ratios)
    if (r == 0 || r >= F->q()) throw std::invalid_argument("bad dilation ratio");

  std::vector<ExperimentRow> rows;
  std::uint64_t index = 0;
  for (std::size_t size : spec.sizes) {
    for (code_t r : ratios) {
      for (unsigned trial = 0; trial < spec.trials; ++trial, ++index) {
        ExperimentRow row{spec.q, spec.d, spec.pattern, r, size, trial,
                          false,  0,      0,            0, ""};
        auto t0 = std::chrono::steady_clock::now();
        try {
          GenSpec gen = spec.generator;
          gen.size = size;
          PointSet E = generate_set(F, spec.d, gen, CounterRng::derive(spec.seed, index));
          SearchResult res = find_witness(E, r, G);
          row.found = res.witness.has_value();
          row.nodes_visited = res.nodes_visited;
          if (row.found && !validate_witness(E, r, G, *res.witness))
            row.error = "witness failed revalidation";
          if (spec.count_nondegenerate)
            row.count = count_witnesses(E, r, G, spec.budget);
        } catch (const std::exception& ex) {
          row.error = ex.what();
        }
        if (spec.record_timing) {
          auto t1 = std::chrono::steady_clock::now();
          row.ms = static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "q,d,pattern,r,size,trial,found,count,nodes_visited,ms\n";
  for (const auto& r : rows) {
    out << r.q << ',' << r.d << ',' << r.pattern << ',' << r.r << ',' << r.size << ','
        << r.trial << ',' << (r.found ? 1 : 0) << ',' << r.count << ','
        << r.nodes_visited << ',' << r.ms << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"q", r.q},         {"d", r.d},
                     {"pattern", r.pattern}, {"r", r.r},
                     {"size", r.size},   {"trial", r.trial},
                     {"found", r.found}, {"count", r.count},
                     {"nodes_visited", r.nodes_visited}, {"ms", r.ms}};
    if (!r.error.empty()) j["error"] = r.error;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

}  // namespace fqc
