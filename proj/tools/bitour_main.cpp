#include "commands.hpp"

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>

namespace {

using bitour::Score;
using bitour::cli::CheckCriterion;
using bitour::cli::Format;

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}};

void add_pair_options(CLI::App* cmd, bitour::cli::PairOptions& opts) {
  cmd->add_option("pair", opts.input, "sequence pair, e.g. \"1,3,4,5 | 0,1,2,2,2\"")->required();
  cmd->add_option("--bound-a", opts.bound_a, "bound of A (default: length of B)");
  cmd->add_option("--bound-b", opts.bound_b, "bound of B (default: length of A)");
  cmd->add_flag("--trace", opts.trace, "print the intermediate steps");
  cmd->add_option("--format", opts.format, "text or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Score sequences of bitournaments: check, realize, trim, enumerate"};
  app.require_subcommand(1);

  bitour::cli::PairOptions check_opts;
  CheckCriterion criterion = CheckCriterion::both;
  auto* check = app.add_subcommand("check", "decide whether a pair is a bitournament score sequence");
  add_pair_options(check, check_opts);
  check->add_option("--criterion", criterion, "moon, trim or both")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, CheckCriterion>{
              {"moon", CheckCriterion::moon}, {"trim", CheckCriterion::trim}, {"both", CheckCriterion::both}},
          CLI::ignore_case));

  bitour::cli::PairOptions realize_opts;
  std::optional<std::string> dot_path;
  auto* realize = app.add_subcommand("realize", "construct a bitournament with the given scores");
  add_pair_options(realize, realize_opts);
  realize->add_option("--dot", dot_path, "also write the bitournament as DOT to this path");

  std::string trim_seq;
  std::string trim_schedule;
  std::optional<Score> trim_bound;
  bool trim_trace = false;
  auto* trim = app.add_subcommand("trim", "apply successive normal trimmings");
  trim->add_option("sequence", trim_seq, "comma-separated sequence")->required();
  trim->add_option("--schedule", trim_schedule, "comma-separated trim amounts")->required();
  trim->add_option("--bound", trim_bound, "bound of the sequence (default: its maximum)");
  trim->add_flag("--trace", trim_trace, "print every intermediate sequence");

  std::string conj_seq;
  Score conj_bound = 0;
  auto* conj = app.add_subcommand("conjugate", "elementwise bound - element");
  conj->add_option("sequence", conj_seq, "comma-separated sequence")->required();
  conj->add_option("--bound", conj_bound, "bound n of the (m,n)-sequence")->required();

  std::size_t rows = 0;
  std::size_t cols = 0;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  auto* census = app.add_subcommand("census", "CSV census of sorted score pairs of all orientations of K_{m,n}");
  census->add_option("m", rows)->required();
  census->add_option("n", cols)->required();
  census->add_option("--workers", workers, "enumeration threads");
  auto* verify = app.add_subcommand("verify", "cross-validate enumeration, Moon and trimming on K_{m,n}");
  verify->add_option("m", rows)->required();
  verify->add_option("n", cols)->required();
  verify->add_option("--workers", workers, "enumeration threads");

  std::string single_seq;
  Format single_format = Format::text;
  auto* landau = app.add_subcommand("landau", "tournament score sequence test");
  auto* avery = app.add_subcommand("avery", "digraph score sequence test (Avery scores)");
  for (auto* cmd : {landau, avery}) {
    cmd->add_option("sequence", single_seq, "comma-separated sequence")->required();
    cmd->add_option("--format", single_format, "text or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bitour::cli::kInputError;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  try {
    if (*check) return bitour::cli::cmd_check(check_opts, criterion, out, err);
    if (*realize) return bitour::cli::cmd_realize(realize_opts, dot_path, out, err);
    if (*trim) return bitour::cli::cmd_trim(trim_seq, trim_schedule, trim_bound, trim_trace, out, err);
    if (*conj) return bitour::cli::cmd_conjugate(conj_seq, conj_bound, out, err);
    if (*census) return bitour::cli::cmd_census(rows, cols, workers, out, err);
    if (*verify) return bitour::cli::cmd_verify(rows, cols, workers, out, err);
    if (*landau) return bitour::cli::cmd_sequence_check(single_seq, bitour::Criterion::landau, single_format, out, err);
    if (*avery) return bitour::cli::cmd_sequence_check(single_seq, bitour::Criterion::avery, single_format, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return bitour::cli::kInternalError;
  }
  return bitour::cli::kInputError;
}
