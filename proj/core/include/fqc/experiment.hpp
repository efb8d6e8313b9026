#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fqc/configs.hpp"
#include "fqc/generate.hpp"

namespace fqc {

enum class RSelection { all_nonzero, squares_only, explicit_list };

struct ExperimentSpec {
  std::uint64_t q = 3;
  unsigned d = 2;
  std::string pattern = "star:2";     // PatternGraph::parse form
  RSelection r_selection = RSelection::all_nonzero;
  std::vector<code_t> r_list;
  std::vector<std::size_t> sizes;
  unsigned trials = 1;
  std::uint64_t seed = 0;
  GenSpec generator;
  bool count_nondegenerate = false;   // adds a count_witnesses pass per trial
  bool record_timing = false;         // ms column stays 0 when off
  std::uint64_t budget = kDefaultBudget;
};

struct ExperimentRow {
  std::uint64_t q;
  unsigned d;
  std::string pattern;
  code_t r;
  std::size_t size;
  unsigned trial;
  bool found;
  std::uint64_t count;          // nondegenerate witness count, 0 unless requested
  std::uint64_t nodes_visited;
  std::uint64_t ms;
  std::string error;            // nonempty on a row-level failure
};

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

/// Fixed column set: q,d,pattern,r,size,trial,found,count,nodes_visited,ms.
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
void write_json(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace fqc
