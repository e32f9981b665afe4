// tools/ttsprep.cpp

// Copyright 2026  ttsprep authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ttsprep/analysis.hpp"
#include "ttsprep/config.hpp"
#include "ttsprep/manifest.hpp"
#include "ttsprep/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitConfigError = 2;

struct CommonArgs {
  std::string manifest;
  std::string ctm;
  std::string config;
  std::string out;
  int jobs = 0;
  bool write_denoised = false;
};

// Config problems exit 2; everything else fatal exits 1.
ttsprep::PipelineConfig load_config_or_default(const std::string& path) {
  if (path.empty()) return {};
  return ttsprep::load_config(path);
}

int cmd_run(const CommonArgs& args) {
  ttsprep::PipelineOptions opts;
  opts.manifest_path = args.manifest;
  opts.ctm_path = args.ctm;
  opts.config_path = args.config;
  opts.out_dir = args.out;
  opts.jobs = args.jobs;
  opts.write_denoised = args.write_denoised;
  const int kept = ttsprep::run_pipeline(opts);
  std::cout << "kept " << kept << " utterances; artifacts in " << args.out
            << "\n";
  return kExitOk;
}

int cmd_stage(const std::string& stage, const CommonArgs& args) {
  namespace fs = std::filesystem;
  const fs::path out_dir = args.out;
  const fs::path state_path = out_dir / "state.json";

  ttsprep::PipelineState state;
  if (fs::exists(state_path)) {
    state = ttsprep::load_state(state_path);
    if (!args.config.empty()) {
      state.config = ttsprep::load_config(args.config);
    }
  } else {
    if (args.manifest.empty()) {
      throw ttsprep::Error(
          "no pipeline state at " + state_path.string() +
          "; start with 'normalize' or 'denoise' and --manifest");
    }
    state = ttsprep::make_state(ttsprep::load_manifest(args.manifest),
                                load_config_or_default(args.config));
  }

  ttsprep::StageOptions opts;
  opts.out_dir = out_dir;
  opts.ctm_path = args.ctm;
  opts.jobs = args.jobs;
  ttsprep::run_stage(state, stage, opts);
  fs::create_directories(out_dir);
  ttsprep::save_state(state, state_path);

  if (stage == "report" || stage == "select") {
    std::vector<ttsprep::UtteranceRecord> records;
    for (const auto& item : state.items) records.push_back(item.record);
    const auto summary = ttsprep::selection_summary(records);
    std::cout << "total " << summary.total << ", kept " << summary.kept
              << ", rejected " << summary.rejected << "\n";
    for (const auto& [reason, count] : summary.by_reason) {
      std::cout << "  " << reason << ": " << count << "\n";
    }
  }
  return kExitOk;
}

int cmd_mds(const std::string& input, const std::string& reference) {
  const ttsprep::CmosMatrix matrix = ttsprep::load_cmos(input);
  const ttsprep::MdsResult result = ttsprep::mds_1d(matrix, reference);
  for (std::size_t i = 0; i < matrix.systems.size(); ++i) {
    std::printf("%s\t%.6f\n", matrix.systems[i].c_str(),
                result.coordinates[i]);
  }
  std::cout << "ordering:";
  for (std::size_t i = 0; i < result.ordering.size(); ++i) {
    std::cout << (i == 0 ? " " : " < ") << result.ordering[i];
  }
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"found-data speech corpus curation for TTS training"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string mds_input, mds_ref;

  auto add_common = [&](CLI::App* cmd, bool manifest, bool ctm) {
    if (manifest) cmd->add_option("--manifest", args.manifest,
                                  "input manifest (id<TAB>path<TAB>text)");
    if (ctm) cmd->add_option("--ctm", args.ctm, "decoded hypotheses (CTM)");
    cmd->add_option("--config", args.config, "pipeline config JSON");
    cmd->add_option("--out", args.out, "output directory")->required();
    cmd->add_option("--jobs,-j", args.jobs,
                    "parallel workers (0 = all cores)");
    return cmd;
  };

  CLI::App* run = add_common(
      app.add_subcommand("run", "run the whole pipeline"), true, true);
  run->get_option("--manifest")->required();
  run->get_option("--ctm")->required();
  run->add_flag("--write-denoised", args.write_denoised,
                "keep denoised wavs under <out>/denoised");

  for (const std::string& stage : ttsprep::stage_names()) {
    add_common(app.add_subcommand(stage, "run the '" + stage + "' stage"),
               true, stage == "align");
  }

  CLI::App* mds = app.add_subcommand("mds", "1-D MDS over a CMOS matrix");
  mds->add_option("--input", mds_input, "CMOS CSV matrix")->required();
  mds->add_option("--ref", mds_ref, "reference system name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(args);
    if (mds->parsed()) return cmd_mds(mds_input, mds_ref);
    for (const std::string& stage : ttsprep::stage_names()) {
      if (app.get_subcommand(stage)->parsed()) return cmd_stage(stage, args);
    }
  } catch (const ttsprep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool config_error =
        std::string_view(e.what()).substr(0, 7) == "config:";
    return config_error ? kExitConfigError : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
