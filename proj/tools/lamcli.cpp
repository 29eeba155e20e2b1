#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lam/pullback.hpp"
#include "lam/render.hpp"
#include "lam/tags.hpp"

namespace fs = std::filesystem;
using namespace lam;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::invalid_argument("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

// Marked-lamination file: a lamination dump followed by
// "c1=<polygon>" and "c2=<polygon>" lines.
MarkedLamination parse_marked(const std::string& text) {
  std::istringstream in(text);
  std::string line, body;
  std::optional<Polygon> c1, c2;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    try {
      if (line.rfind("c1=", 0) == 0) {
        c1 = Polygon::parse(line.substr(3));
      } else if (line.rfind("c2=", 0) == 0) {
        c2 = Polygon::parse(line.substr(3));
      } else {
        body += line + "\n";
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!c1 || !c2) throw std::invalid_argument("missing c1= or c2= line");
  return MarkedLamination(Lamination::parse_string(body), *c1, *c2);
}

std::string dump_marked(const MarkedLamination& m) {
  return m.lamination().dump() + "c1=" + m.c1().str() + "\nc2=" + m.c2().str() + "\n";
}

// Corpus input: a directory of marked_*.txt files, or a single marked file.
std::vector<MarkedLamination> load_family(const fs::path& input) {
  std::vector<MarkedLamination> family;
  if (fs::is_directory(input)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(input)) {
      if (e.path().filename().string().rfind("marked_", 0) == 0) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) family.push_back(parse_marked(slurp(f)));
  } else {
    family.push_back(parse_marked(slurp(input)));
  }
  return family;
}

GeodesicStyle parse_style(const std::string& s) {
  if (s == "straight-chord") return GeodesicStyle::straight_chord;
  if (s == "hyperbolic-arc") return GeodesicStyle::hyperbolic_arc;
  throw std::invalid_argument("style must be straight-chord or hyperbolic-arc");
}

int run(int argc, char** argv) {
  CLI::App app{"Invariant geodesic laminations: pullback generation, mixed tags, rendering"};
  app.require_subcommand(1);

  std::string in_path, out_path = "-";
  int depth = 8, degree = 3, max_period = 3, max_preperiod = 3, count = 100, size = 800;
  std::uint64_t seed = 0;
  std::string style = "hyperbolic-arc";

  auto* cmd_pullback = app.add_subcommand("pullback", "Generate a lamination from a portrait");
  cmd_pullback->add_option("input", in_path, "portrait file")->required();
  cmd_pullback->add_option("--depth", depth);
  cmd_pullback->add_option("--out", out_path);

  auto* cmd_enum = app.add_subcommand("enumerate", "Generate a dendritic marked corpus");
  cmd_enum->add_option("--max-preperiod", max_preperiod);
  cmd_enum->add_option("--max-period", max_period);
  cmd_enum->add_option("--count", count);
  cmd_enum->add_option("--seed", seed);
  cmd_enum->add_option("--depth", depth);
  cmd_enum->add_option("--out", out_path, "output directory")->required();

  auto* cmd_tags = app.add_subcommand("tags", "Mixed tags and disjoint-or-equal report");
  cmd_tags->add_option("input", in_path, "corpus directory or marked file")->required();
  cmd_tags->add_option("--out", out_path, "output directory");

  auto* cmd_qml = app.add_subcommand("qml", "Quadratic minor chords up to a period");
  cmd_qml->add_option("--max-period", max_period);
  cmd_qml->add_option("--out", out_path);

  auto* cmd_check = app.add_subcommand("check", "Verify the invariance of a lamination dump");
  cmd_check->add_option("input", in_path, "lamination dump")->required();

  auto* cmd_render = app.add_subcommand("render", "Render a lamination dump to SVG");
  cmd_render->add_option("input", in_path, "lamination dump")->required();
  cmd_render->add_option("--out", out_path)->required();
  cmd_render->add_option("--style", style);
  cmd_render->add_option("--size", size);

  auto* cmd_rtag = app.add_subcommand("render-tag", "Render mixed tags to SVG");
  cmd_rtag->add_option("input", in_path, "corpus directory or marked file")->required();
  cmd_rtag->add_option("--out", out_path)->required();
  cmd_rtag->add_option("--style", style);
  cmd_rtag->add_option("--size", size);

  // unused by some subcommands but part of the stable flag surface
  app.add_option("--degree", degree);

  CLI11_PARSE(app, argc, argv);

  auto emit = [&](const std::string& text) {
    if (out_path == "-") {
      std::cout << text;
    } else {
      spit(out_path, text);
    }
  };

  if (cmd_pullback->parsed()) {
    CriticalPortrait P = CriticalPortrait::parse_string(slurp(in_path));
    emit(pullback_generate(P, depth).dump());
    return kOk;
  }

  if (cmd_enum->parsed()) {
    auto corpus = enumerate_dendritic_portraits(max_preperiod, max_period, count, seed, depth);
    fs::create_directories(out_path);
    for (size_t i = 0; i < corpus.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "marked_%04zu.txt", i);
      spit(fs::path(out_path) / name, dump_marked(corpus[i].marked));
      std::snprintf(name, sizeof name, "portrait_%04zu.txt", i);
      spit(fs::path(out_path) / name, corpus[i].portrait.dump());
    }
    std::cout << "wrote " << corpus.size() << " marked laminations to " << out_path << "\n";
    return kOk;
  }

  if (cmd_tags->parsed()) {
    auto family = load_family(in_path);
    std::vector<MixedTag> tags;
    for (const auto& m : family) tags.push_back(mixed_tag(m));
    FamilyReport rep = family_relation(tags);
    std::string report = rep.text(tags);
    if (out_path != "-") {
      fs::create_directories(out_path);
      for (size_t i = 0; i < tags.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "tag_%04zu.txt", i);
        spit(fs::path(out_path) / name, tags[i].str());
      }
      spit(fs::path(out_path) / "report.txt", report);
    }
    std::cout << report;
    return rep.pass() ? kOk : kCheckFailed;
  }

  if (cmd_qml->parsed()) {
    emit(lavaurs_qml(max_period).dump());
    return kOk;
  }

  if (cmd_check->parsed()) {
    Lamination L = Lamination::parse_string(slurp(in_path));
    SiblingCheckReport rep = check_sibling_invariant(L);
    std::cout << rep.summary();
    return rep.pass ? kOk : kCheckFailed;
  }

  if (cmd_render->parsed()) {
    Lamination L = Lamination::parse_string(slurp(in_path));
    RenderSpec spec;
    spec.size = size;
    spec.style = parse_style(style);
    spit(out_path, render_lamination_svg(L, spec));
    return kOk;
  }

  if (cmd_rtag->parsed()) {
    auto family = load_family(in_path);
    std::vector<MixedTag> tags;
    for (const auto& m : family) tags.push_back(mixed_tag(m));
    RenderSpec spec;
    spec.size = size;
    spec.style = parse_style(style);
    spit(out_path, render_tag_svg(tags, spec));
    return kOk;
  }

  return kBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
