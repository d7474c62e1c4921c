// Copyright 2026 The tensorcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

void add_common(CLI::App* sub, tcone::cli::RunConfig& c) {
  sub->add_option("--type", c.cartan_type, "Cartan type, e.g. A2, B3, A1xA1")
      ->envname("TENSORCONE_TYPE")
      ->required();
  sub->add_option("--s", c.s, "Number of weights minus one")->envname("TENSORCONE_S");
  sub->add_option("--format", c.format, "Output format")
      ->envname("TENSORCONE_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", c.out, "Write the report to this file")->envname("TENSORCONE_OUT");
  sub->add_option("--jobs", c.jobs, "Worker threads (0: all cores)")->envname("TENSORCONE_JOBS");
  sub->add_option("--budget", c.budget, "Cap on enumerated Schubert tuples")
      ->envname("TENSORCONE_BUDGET");
  sub->add_option("--max-rank", c.max_rank, "Cap on the total rank")->envname("TENSORCONE_MAX_RANK");
}

void add_sampling(CLI::App* sub, tcone::cli::RunConfig& c) {
  sub->add_option("--depth", c.depth, "Saturation depth of the oracle sample")
      ->envname("TENSORCONE_DEPTH");
  sub->add_option("--orient-box", c.orient_box, "Box of the sample that orients facets")
      ->envname("TENSORCONE_ORIENT_BOX");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faces of tensor product cones of semisimple groups", "tensorcone"};
  app.require_subcommand(1);
  tcone::cli::RunConfig config;

  auto* facets = app.add_subcommand("facets", "Facet inequalities of the tensor cone");
  add_common(facets, config);
  add_sampling(facets, config);

  auto* faces = app.add_subcommand("faces", "Face lattice up to a codimension, with covers");
  add_common(faces, config);
  faces->add_option("--max-codim", config.max_codim, "Largest codimension (default: rank)")
      ->envname("TENSORCONE_MAX_CODIM");

  auto* verify = app.add_subcommand("verify", "Cross-check the facets against the oracle");
  add_common(verify, config);
  add_sampling(verify, config);
  verify->add_option("--box", config.box, "Coordinate bound of the checked box (default 4)")
      ->envname("TENSORCONE_BOX");
  verify->add_option("--max-codim", config.max_codim, "Largest codimension of checked faces")
      ->envname("TENSORCONE_MAX_CODIM");
  verify->add_option("--inequalities", config.inequalities,
                     "Facets JSON to verify instead of the computed facets");
  verify->add_flag("--with-sample", config.with_sample, "Include certified points in JSON output");

  auto* cup = app.add_subcommand("cup-table", "Cup product structure constants of G/P");
  auto* bk = app.add_subcommand("bk-table", "Belkale-Kumar structure constants of G/P");
  for (auto* sub : {cup, bk}) {
    add_common(sub, config);
    sub->add_option("--parabolic", config.parabolic,
                    "Simple roots outside the Levi, 1-based, comma separated")
        ->envname("TENSORCONE_PARABOLIC");
  }

  auto* membership = app.add_subcommand("membership", "Locate a tuple of weights in the cone");
  add_common(membership, config);
  add_sampling(membership, config);
  membership->add_option("--point", config.point,
                         "Weights separated by ';', coordinates by ',' (e.g. \"1;1;2\")")
      ->envname("TENSORCONE_POINT");
  membership->add_option("--box", config.box, "Box of the orientation sample")
      ->envname("TENSORCONE_BOX");
  membership->add_option("--max-codim", config.max_codim, "Largest codimension of reported faces")
      ->envname("TENSORCONE_MAX_CODIM");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tcone::cli::kExitConfig;
  }

  for (auto* sub : app.get_subcommands()) {
    return tcone::cli::run_command(sub->get_name(), config, std::cout, std::cerr);
  }
  return tcone::cli::kExitConfig;
}
