#include <filesystem>

#include "doctest.h"
#include "helpers.hpp"
#include "negsets/io.hpp"

using namespace negsets;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_sg(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("canonical text round trips bit-exactly") {
  const std::string text = "p sg 4 3\ne 0 1 -\ne 0 3 +\ne 2 3 -\n";
  auto g = parse_sg(text);
  CHECK(g.vertex_count() == 4);
  CHECK(g.negative_edges().size() == 2);
  CHECK(to_sg(g) == text);
  CHECK(parse_sg(to_sg(g)) == g);
}

TEST_CASE("comments, blank lines and reversed pairs are accepted") {
  auto g = parse_sg("c a triangle\np sg 3 3\n\ne 1 0 -\nc mid\ne 2 1 +\ne 0 2 +\n");
  CHECK(to_sg(g) == "p sg 3 3\ne 0 1 -\ne 0 2 +\ne 1 2 +\n");
}

TEST_CASE("empty graph") {
  auto g = parse_sg("p sg 0 0\n");
  CHECK(g.vertex_count() == 0);
  CHECK(to_sg(g) == "p sg 0 0\n");
}

TEST_CASE("malformed input reports the line") {
  CHECK(error_line("p sg 3 2\ne 0 1 +\ne 1 0 -\n") == 3);
  CHECK(error_line("p sg 3 1\ne 1 1 +\n") == 2);
  CHECK(error_line("p sg 3 1\ne 0 3 +\n") == 2);
  CHECK(error_line("p sg 3 1\ne 0 1 *\n") == 2);
  CHECK(error_line("p sg 3 1\nx 0 1 +\n") == 2);
  CHECK(error_line("e 0 1 +\np sg 3 1\n") == 1);
  CHECK(error_line("p sg 3 1\np sg 3 1\ne 0 1 +\n") == 2);
  CHECK(error_line("p sg 3 2\ne 0 1 +\n") == 0);
  CHECK(error_line("c nothing\n") == 0);
}

TEST_CASE("files") {
  auto path = std::filesystem::temp_directory_path() / "negsets_io_test.sg";
  auto g = testing::cycle_one_negative(5);
  write_sg_file(g, path);
  CHECK(read_sg_file(path) == g);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_sg_file(path), Error);
}
