#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  fs::path tmp = fs::temp_directory_path() / "lamcli_test_out.txt";
  std::string cmd = std::string(LAMCLI_PATH) + " " + args + " > " + tmp.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::ostringstream ss;
  ss << in.rdbuf();
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, ss.str()};
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("qml writes a lamination dump") {
  RunResult r = run("qml --max-period 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("degree=2") == 0);
  CHECK(r.out.find("1/3-2/3") != std::string::npos);
  CHECK(r.out.find("1/7-2/7") != std::string::npos);
}

TEST_CASE("pullback, check, render pipeline") {
  fs::path portrait = write_file("cli_portrait.txt", "degree=3\n[0,0,1/3,1/3]\n[1/2,1/2,5/6,5/6]\n");
  fs::path dump = fs::temp_directory_path() / "cli_dump.txt";
  RunResult gen = run("pullback " + portrait.string() + " --depth 3 --out " + dump.string());
  REQUIRE(gen.exit_code == 0);

  RunResult chk = run("check " + dump.string());
  CHECK(chk.exit_code == 0);
  CHECK(chk.out.find("pass") != std::string::npos);

  fs::path svg = fs::temp_directory_path() / "cli_render.svg";
  RunResult ren = run("render " + dump.string() + " --out " + svg.string() + " --size 400");
  CHECK(ren.exit_code == 0);
  std::ifstream in(svg);
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("<svg") == 0);

  RunResult bad_style =
      run("render " + dump.string() + " --out " + svg.string() + " --style wiggly");
  CHECK(bad_style.exit_code == 2);
}

TEST_CASE("check fails on a non-invariant dump") {
  fs::path bad = write_file("cli_bad.txt", "degree=2 depth=1\n0-1/2\n");
  CHECK(run("check " + bad.string()).exit_code == 1);
}

TEST_CASE("malformed input exits 2 with a line-numbered message") {
  fs::path bad = write_file("cli_malformed.txt", "degree=2 depth=0\nnot-a-chord\n");
  CHECK(run("check " + bad.string()).exit_code == 2);
  CHECK(run("check /nonexistent/file").exit_code == 2);
}

TEST_CASE("enumerate then tags on a tiny corpus") {
  fs::path dir = fs::temp_directory_path() / "cli_corpus";
  fs::remove_all(dir);
  RunResult en = run("enumerate --max-preperiod 2 --max-period 2 --count 4 --depth 5 --seed 3 --out " +
                     dir.string());
  REQUIRE(en.exit_code == 0);
  int marked = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    marked += e.path().filename().string().rfind("marked_", 0) == 0;
  }
  CHECK(marked == 4);

  fs::path tag_dir = fs::temp_directory_path() / "cli_tags";
  fs::remove_all(tag_dir);
  RunResult tg = run("tags " + dir.string() + " --out " + tag_dir.string());
  CHECK(tg.exit_code == 0);
  CHECK(tg.out.find("overlap=0") != std::string::npos);
  CHECK(fs::exists(tag_dir / "report.txt"));
  CHECK(fs::exists(tag_dir / "tag_0000.txt"));

  // a 2-copy family of one lamination: one equal pair, still exit 0
  fs::path dup_dir = fs::temp_directory_path() / "cli_dup";
  fs::remove_all(dup_dir);
  fs::create_directories(dup_dir);
  fs::copy_file(dir / "marked_0000.txt", dup_dir / "marked_0000.txt");
  fs::copy_file(dir / "marked_0000.txt", dup_dir / "marked_0001.txt");
  RunResult dup = run("tags " + dup_dir.string());
  CHECK(dup.exit_code == 0);
  CHECK(dup.out.find("pair 0 1: equal") != std::string::npos);

  fs::path tag_svg = fs::temp_directory_path() / "cli_tags.svg";
  RunResult rt = run("render-tag " + dir.string() + " --out " + tag_svg.string());
  CHECK(rt.exit_code == 0);
  CHECK(fs::file_size(tag_svg) > 0);
}
