// Copyright 2026 The ldiqec Authors
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

#include "CLI11.hpp"
#include "ldiqec/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"ldiqec: local-dimension-invariant qudit stabilizer codes"};
    app.require_subcommand(1);
    int status = ldiqec::kExitOk;

    auto* inspect = app.add_subcommand("inspect", "Summarize a code file");
    std::string inspect_path;
    inspect->add_option("file", inspect_path, "code file")->required();
    inspect->callback([&] { status = ldiqec::cmd_inspect(inspect_path, std::cout, std::cerr); });

    auto* ldi = app.add_subcommand("ldi", "Write an LDI form of a mod-q code");
    ldiqec::LdiArgs ldi_args;
    ldi->add_option("file", ldi_args.input, "code file")->required();
    ldi->add_option("--method", ldi_args.method, "prescriptive or signs")
        ->check(CLI::IsMember({"prescriptive", "signs"}));
    ldi->add_option("--out,-o", ldi_args.output, "output file (stdout when absent)");
    ldi->add_option("--d", ldi_args.distance, "known distance; computed when absent")->check(CLI::PositiveNumber);
    ldi->callback([&] { status = ldiqec::cmd_ldi(ldi_args, std::cout, std::cerr); });

    auto* distance = app.add_subcommand("distance", "Exact distance at one prime");
    ldiqec::DistanceArgs distance_args;
    distance->add_option("file", distance_args.input, "code file")->required();
    distance->add_option("--p", distance_args.p, "prime (LDI files; defaults to the origin)");
    distance->add_option("--wmax", distance_args.wmax, "largest weight searched (default n)");
    distance->add_flag("--css", distance_args.css, "block-wise search on pure-X / pure-Z generators");
    distance->add_flag("--csv", distance_args.csv, "CSV output");
    distance->add_option("--threads", distance_args.threads, "worker threads")->check(CLI::PositiveNumber);
    distance->callback([&] { status = ldiqec::cmd_distance(distance_args, std::cout, std::cerr); });

    auto* bounds = app.add_subcommand("bounds", "Hamming bound, distance cutoffs and entry bound");
    ldiqec::BoundsArgs bounds_args;
    bounds->add_option("--n", bounds_args.n);
    bounds->add_option("--k", bounds_args.k);
    bounds->add_option("--d", bounds_args.d);
    bounds->add_option("--q", bounds_args.q);
    bounds->add_option("--B", bounds_args.B);
    bounds->callback([&] { status = ldiqec::cmd_bounds(bounds_args, std::cout, std::cerr); });

    auto* hamming = app.add_subcommand("hamming", "Quantum Hamming code for N >= 3");
    ldiqec::HammingArgs hamming_args;
    hamming->add_option("--N", hamming_args.N)->required();
    hamming->add_flag("--ldi", hamming_args.ldi, "B = 1 LDI form");
    hamming->add_option("--out,-o", hamming_args.output, "output file (stdout when absent)");
    hamming->callback([&] { status = ldiqec::cmd_hamming(hamming_args, std::cout, std::cerr); });

    auto* sweep = app.add_subcommand("sweep", "Distance of an LDI code across primes (CSV)");
    ldiqec::SweepArgs sweep_args;
    sweep->add_option("file", sweep_args.input, "LDI code file")->required();
    sweep->add_option("--primes", sweep_args.primes, "primes, comma separated")->delimiter(',');
    sweep->add_option("--wmax", sweep_args.wmax, "largest weight searched (default n)");
    sweep->add_option("--out,-o", sweep_args.output, "CSV file (stdout when absent)");
    sweep->callback([&] { status = ldiqec::cmd_sweep(sweep_args, std::cout, std::cerr); });

    auto* random = app.add_subcommand("random", "Rejection-sample a code with distance >= d");
    ldiqec::RandomArgs random_args;
    random->add_option("--n", random_args.n)->required();
    random->add_option("--k", random_args.k)->required();
    random->add_option("--d", random_args.d)->required();
    random->add_option("--q", random_args.q)->required();
    random->add_option("--trials", random_args.trials);
    random->add_option("--seed", random_args.seed);
    random->add_flag("--strict-gqhb", random_args.strict_gqhb, "refuse parameters that violate the Hamming bound");
    random->add_option("--out,-o", random_args.output, "output file (stdout when absent)");
    random->callback([&] { status = ldiqec::cmd_random(random_args, std::cout, std::cerr); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ldiqec::kExitInvalid;
    }
    return status;
}
