// Copyright 2026 The Submax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "acceptance.h"
#include "error.h"
#include "experiment.h"
#include "io.h"
#include "objectives.h"
#include "submax/submax.h"

struct smx_instance {
  submax::Instance instance;
  std::unique_ptr<submax::Objective> objective;
};

struct smx_result {
  submax::AlgorithmRun run;
  std::vector<std::int64_t> round_queries;
};

namespace {

thread_local std::string last_error;

smx_status Record(smx_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, mapping exceptions to status codes.
template <typename Body>
smx_status Guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return SMX_OK;
  } catch (const submax::Error& e) {
    return Record(static_cast<smx_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Record(SMX_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return Record(SMX_INTERNAL_ERROR, e.what());
  }
}

void Require(bool condition, const char* message) {
  if (!condition) submax::Fail(submax::ErrorCode::kInvalidArgument, message);
}

smx_instance* Wrap(submax::Instance instance) {
  auto handle = std::make_unique<smx_instance>();
  handle->objective = submax::MakeObjective(instance);
  handle->instance = std::move(instance);
  return handle.release();
}

std::optional<std::int64_t> Samples(std::int64_t samples) {
  Require(samples >= 0, "samples must be >= 0");
  if (samples == 0) return std::nullopt;
  return samples;
}

}  // namespace

extern "C" {

const char* smx_last_error(void) { return last_error.c_str(); }

const char* smx_status_name(smx_status status) {
  switch (status) {
    case SMX_OK:
      return "ok";
    case SMX_INVALID_ARGUMENT:
      return "invalid argument";
    case SMX_INVALID_SUBSET:
      return "invalid subset";
    case SMX_PARSE_ERROR:
      return "parse error";
    case SMX_IO_ERROR:
      return "i/o error";
    case SMX_TOO_LARGE:
      return "too large";
    case SMX_UNKNOWN_NAME:
      return "unknown name";
    case SMX_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

smx_status smx_instance_generate(const char* objective, const char* spec, uint64_t seed,
                                 smx_instance** out) {
  return Guard([&] {
    Require(objective != nullptr && out != nullptr, "null argument");
    const submax::SyntheticSpec parsed =
        spec == nullptr ? submax::SyntheticSpec{} : submax::ParseSyntheticSpec(spec);
    *out = Wrap(submax::GenerateSynthetic(submax::ParseInstanceKind(objective), parsed, seed));
  });
}

smx_status smx_instance_load(const char* objective, const char* path, int node_count,
                             double lambda, smx_instance** out) {
  return Guard([&] {
    Require(objective != nullptr && path != nullptr && out != nullptr, "null argument");
    submax::RunConfig config;
    config.objective = submax::ParseInstanceKind(objective);
    config.data_path = path;
    if (node_count > 0) config.node_count = node_count;
    if (lambda >= 0.0) config.synthetic.lambda = lambda;
    *out = Wrap(submax::LoadInstance(config));
  });
}

smx_status smx_instance_save(const smx_instance* instance, const char* path) {
  return Guard([&] {
    Require(instance != nullptr && path != nullptr, "null argument");
    std::ofstream file(path);
    if (!file) submax::Fail(submax::ErrorCode::kIo, std::string("cannot write '") + path + "'");
    if (const auto* m = std::get_if<submax::SimilarityMatrix>(&instance->instance.data)) {
      submax::WriteSimilarityCsv(file, *m);
    } else {
      submax::WriteEdgeList(file, std::get<submax::WeightedGraph>(instance->instance.data));
    }
    if (!file) submax::Fail(submax::ErrorCode::kIo, std::string("write failed: ") + path);
  });
}

void smx_instance_free(smx_instance* instance) { delete instance; }

int smx_instance_size(const smx_instance* instance) {
  return instance == nullptr ? 0 : instance->objective->n();
}

int smx_instance_has_negative_similarity(const smx_instance* instance) {
  if (instance == nullptr) return 0;
  const auto* m = std::get_if<submax::SimilarityMatrix>(&instance->instance.data);
  return m != nullptr && m->has_negative() ? 1 : 0;
}

smx_status smx_instance_evaluate(const smx_instance* instance, const int32_t* members,
                                 size_t count, double* value) {
  return Guard([&] {
    Require(instance != nullptr && value != nullptr, "null argument");
    Require(members != nullptr || count == 0, "null member list");
    const submax::Subset s = submax::Subset::Of(
        instance->objective->n(), std::span<const submax::ElementId>(members, count));
    *value = submax::EvaluateOffLedger(*instance->objective, s);
  });
}

void smx_run_options_init(smx_run_options* options) {
  if (options == nullptr) return;
  options->algorithm = "anm";
  options->k = 10;
  options->eps = 0.0;
  options->delta = 0.05;
  options->samples = 100;
  options->parallelism = 1;
  options->seed = 0;
}

smx_status smx_run(const smx_instance* instance, const smx_run_options* options,
                   smx_result** out) {
  return Guard([&] {
    Require(instance != nullptr && options != nullptr && out != nullptr, "null argument");
    Require(options->algorithm != nullptr, "null algorithm");
    const submax::Algorithm algorithm = submax::ParseAlgorithm(options->algorithm);
    Require(options->k >= 1 && options->k <= instance->objective->n(), "k must lie in [1, n]");
    submax::AlgorithmSettings settings;
    settings.k = options->k;
    settings.eps = options->eps > 0.0 ? options->eps : submax::DefaultEps(algorithm);
    settings.delta = options->delta;
    settings.samples = Samples(options->samples);
    settings.parallelism = options->parallelism;
    submax::Rng rng(options->seed);
    auto result = std::make_unique<smx_result>();
    result->run = submax::RunAlgorithm(*instance->objective, algorithm, settings, rng);
    const auto per_round = result->run.ledger.per_round();
    result->round_queries.assign(per_round.begin(), per_round.end());
    *out = result.release();
  });
}

void smx_result_free(smx_result* result) { delete result; }

double smx_result_value(const smx_result* result) {
  return result == nullptr ? 0.0 : result->run.value;
}

size_t smx_result_solution(const smx_result* result, const int32_t** members) {
  if (result == nullptr) return 0;
  const auto s = result->run.solution.members();
  if (members != nullptr) *members = s.data();
  return s.size();
}

int smx_result_rounds(const smx_result* result) {
  return result == nullptr ? 0 : result->run.ledger.rounds();
}

int64_t smx_result_queries(const smx_result* result) {
  return result == nullptr ? 0 : result->run.ledger.total_queries();
}

const int64_t* smx_result_round_queries(const smx_result* result) {
  return result == nullptr ? nullptr : result->round_queries.data();
}

const double* smx_result_round_values(const smx_result* result) {
  return result == nullptr ? nullptr : result->run.best_by_round.data();
}

void smx_experiment_config_init(smx_experiment_config* config) {
  if (config == nullptr) return;
  *config = smx_experiment_config{};
  config->objective = "synthetic-cut";
  config->algorithm = "anm";
  config->lambda = -1.0;
  config->delta = 0.05;
  config->trials = 1;
  config->samples = 100;
  config->parallelism = 1;
  config->timestamp = 1;
}

smx_status smx_run_experiment(const smx_experiment_config* config) {
  return Guard([&] {
    Require(config != nullptr && config->objective != nullptr && config->algorithm != nullptr,
            "null argument");
    Require(config->ks != nullptr && config->k_count > 0, "at least one k is required");
    submax::RunConfig run;
    run.objective = submax::ParseInstanceKind(config->objective);
    run.algorithm = submax::ParseAlgorithm(config->algorithm);
    if (config->data_path != nullptr) run.data_path = config->data_path;
    if (config->synthetic != nullptr) run.synthetic = submax::ParseSyntheticSpec(config->synthetic);
    if (config->node_count > 0) run.node_count = config->node_count;
    if (config->lambda >= 0.0) run.synthetic.lambda = config->lambda;
    run.ks.assign(config->ks, config->ks + config->k_count);
    if (config->eps > 0.0) run.eps = config->eps;
    run.delta = config->delta;
    run.trials = config->trials;
    run.seed = config->seed;
    run.samples = Samples(config->samples);
    run.parallelism = config->parallelism;
    if (config->out_path != nullptr) run.out_path = config->out_path;
    if (config->trace_path != nullptr) run.trace_path = config->trace_path;
    if (config->debug_trace_path != nullptr) run.debug_trace_path = config->debug_trace_path;
    run.timestamp = config->timestamp != 0;
    submax::RunExperimentToFiles(run);
  });
}

smx_status smx_run_acceptance(const char* suite, uint64_t seed, smx_line_sink sink,
                              void* user, int* all_passed) {
  return Guard([&] {
    Require(suite != nullptr, "null suite");
    const auto results = submax::RunAcceptanceSuite(suite, seed, [&](const std::string& line) {
      if (sink != nullptr) sink(line.c_str(), user);
    });
    bool passed = true;
    for (const auto& r : results) passed = passed && r.passed;
    if (all_passed != nullptr) *all_passed = passed ? 1 : 0;
  });
}

}  // extern "C"
