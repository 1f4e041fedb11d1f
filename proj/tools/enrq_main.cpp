#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "enrq/jobs.hpp"

namespace {

using nlohmann::json;

// Splits comma-separated option values; "1,0 --x 2" style repeats are also
// accepted since CLI11 collects every occurrence.
std::vector<std::string> split_entries(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& chunk : raw) {
    std::stringstream ss(chunk);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
  }
  return out;
}

json vector_param(const std::vector<std::string>& raw) {
  json a = json::array();
  for (const auto& e : split_entries(raw)) {
    try {
      size_t pos = 0;
      long v = std::stol(e, &pos);
      if (pos == e.size()) {
        a.push_back(v);
        continue;
      }
    } catch (...) {
    }
    a.push_back(e);
  }
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of moduli of rank-2 twisted sheaves on Enriques surfaces"};
  app.require_subcommand(0, 1);

  std::string job_file;
  app.add_option("--job", job_file, "Run a job described by a JSON file");

  std::string output = "json";
  app.add_option("--output", output, "Output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // Flags mirror the JSON params of each command one-to-one.
  long c1sq = 0, lsq = -6;
  std::string ch2;

  auto* vdim = app.add_subcommand("vdim", "Virtual dimension of the twisted moduli space");
  vdim->add_option("--c1sq", c1sq, "Self-intersection of c1 (even)");
  vdim->add_option("--ch2", ch2, "Degree-4 part of the twisted character, e.g. -7/4")->required();
  vdim->add_option("--lsq", lsq, "Self-intersection of the Beauville class L (default -6)");

  auto* evir = app.add_subcommand("evir", "Virtual Euler characteristic with both routes");
  evir->add_option("--c1sq", c1sq, "Self-intersection of c1 (even)");
  evir->add_option("--ch2", ch2, "Degree-4 part of the twisted character, e.g. -7/4")->required();
  evir->add_option("--lsq", lsq, "Self-intersection of the Beauville class L (default -6)");

  long euler = 12, terms = 11;
  auto* goe = app.add_subcommand("goettsche", "Hilbert-scheme Euler characteristic series");
  goe->add_option("--euler", euler, "Euler characteristic of the surface")->required();
  goe->add_option("--terms", terms, "Number of coefficients to print")->required();

  long fix_n = 0;
  auto* fix = app.add_subcommand("fix-euler", "Euler characteristic of the fixed locus");
  fix->add_option("--n", fix_n, "Even moduli dimension N")->required();

  long norm = -6, bound = 3;
  std::vector<std::string> gram_rows;
  auto* beau = app.add_subcommand("beauville-search", "Search for Beauville witness classes");
  beau->add_option("--norm", norm, "Target self-intersection (4n+2)")->required();
  beau->add_option("--bound", bound, "Coordinate box bound")->required();

  std::vector<std::string> pair_x, pair_y;
  auto* pair = app.add_subcommand("pair", "Lattice pairing x^T G y");
  pair->add_option("--gram", gram_rows, "Gram matrix rows, e.g. --gram 0,1 --gram 1,0")->required();
  pair->add_option("--x", pair_x, "First vector, comma-separated")->required();
  pair->add_option("--y", pair_y, "Second vector, comma-separated")->required();

  long mk_r = 2;
  std::string mk_n;
  std::vector<std::string> mk_c1;
  auto* mk = app.add_subcommand("markman-check", "Intersection-matrix check for the class lists");
  mk->add_option("--r", mk_r, "Rank of the Mukai vector")->required();
  mk->add_option("--n", mk_n, "Degree-4 part of the Mukai vector")->required();
  mk->add_option("--c1", mk_c1, "c1 coordinates in the U^3+E8(-1)^2 basis (22 entries)");

  double iso_tol = 1e-9;
  auto* iso = app.add_subcommand("isometry", "Construct the numeric isometry for the class lists");
  iso->add_option("--r", mk_r, "Rank of the Mukai vector")->required();
  iso->add_option("--n", mk_n, "Degree-4 part of the Mukai vector")->required();
  iso->add_option("--c1", mk_c1, "c1 coordinates in the U^3+E8(-1)^2 basis (22 entries)");
  iso->add_option("--tol", iso_tol, "Relative tolerance (default 1e-9)");

  std::vector<long> ft_dims, ft_traces;
  long ft_order = 10;
  auto* ft = app.add_subcommand("fock-trace", "Trace series of an involution on Hilbert schemes");
  ft->add_option("--dims", ft_dims, "Cohomology dimensions per degree")->required();
  ft->add_option("--traces", ft_traces, "Involution traces per degree")->required();
  ft->add_option("--order", ft_order, "Truncation order")->required();

  CLI11_PARSE(app, argc, argv);

  json job;
  if (!job_file.empty()) {
    std::ifstream in(job_file);
    if (!in) {
      std::cout << json{{"error", {{"kind", "validation"}, {"message", "cannot open job file"}}}}.dump(2)
                << "\n";
      return 2;
    }
    try {
      in >> job;
    } catch (const std::exception& e) {
      std::cout << json{{"error", {{"kind", "validation"}, {"message", e.what()}}}}.dump(2) << "\n";
      return 2;
    }
  } else {
    json params = json::object();
    std::string command;
    if (vdim->parsed() || evir->parsed()) {
      command = vdim->parsed() ? "vdim" : "evir";
      params["c1sq"] = c1sq;
      params["ch2"] = ch2;
      params["lsq"] = lsq;
    } else if (goe->parsed()) {
      command = "goettsche";
      params["euler"] = euler;
      params["terms"] = terms;
    } else if (fix->parsed()) {
      command = "fix-euler";
      params["n"] = fix_n;
    } else if (beau->parsed()) {
      command = "beauville-search";
      params["norm"] = norm;
      params["bound"] = bound;
    } else if (pair->parsed()) {
      command = "pair";
      json rows = json::array();
      for (const auto& row : gram_rows) rows.push_back(vector_param({row}));
      params["gram"] = rows;
      params["x"] = vector_param(pair_x);
      params["y"] = vector_param(pair_y);
    } else if (mk->parsed() || iso->parsed()) {
      command = mk->parsed() ? "markman-check" : "isometry";
      params["r"] = mk_r;
      params["n"] = mk_n;
      if (!mk_c1.empty()) params["c1"] = vector_param(mk_c1);
      if (iso->parsed()) params["tol"] = iso_tol;
    } else if (ft->parsed()) {
      command = "fock-trace";
      params["dims"] = ft_dims;
      params["traces"] = ft_traces;
      params["order"] = ft_order;
    } else {
      std::cout << app.help() << "\n";
      return 0;
    }
    job = json{{"command", command}, {"params", params}, {"output", output}};
  }

  return enrq::run_job(job, std::cout);
}
