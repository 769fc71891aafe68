#include "sparsefw/model_io.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.h"

namespace sparsefw {
namespace {

TEST_CASE("model text format") {
  const SavedModel m{{0.0, 1.5, 0.0, -0.25}, 50.0, "fast"};
  const std::string text = FormatModel(m);
  CHECK(text == "# n_features=4 lambda=50 algo=fast\n2:1.5 4:-0.25\n");
  const SavedModel back = ParseModel(text);
  CHECK(back.weights == m.weights);
  CHECK(back.lambda == 50.0);
  CHECK(back.algo == "fast");
}

TEST_CASE("all-zero model and exact round trip") {
  const SavedModel zero{std::vector<double>(3, 0.0), 1.0, "baseline"};
  CHECK(ParseModel(FormatModel(zero)).weights == zero.weights);

  const SavedModel m{
      {1.0 / 3.0, -2.0e-300, 0.0, 7.123456789012345}, 0.5, "baseline"};
  const auto dir = testing::ScratchDir("model");
  WriteModel(m, dir / "m.txt");
  const SavedModel back = ReadModel(dir / "m.txt");
  CHECK(back.weights == m.weights);
  CHECK(back.lambda == m.lambda);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed model files") {
  CHECK_THROWS(ParseModel(""));
  CHECK_THROWS(ParseModel("1:2\n"));
  CHECK_THROWS(ParseModel("# lambda=1 algo=fast\n1:2\n"));
  CHECK_THROWS(ParseModel("# n_features=2 lambda=1 algo=fast\n3:1\n"));
  CHECK_THROWS(ParseModel("# n_features=2 lambda=1 algo=fast\n0:1\n"));
  CHECK_THROWS(ParseModel("# n_features=2 lambda=1 algo=fast\n1-1\n"));
  CHECK_THROWS(ReadModel("/nonexistent/model.txt"));
}

}  // namespace
}  // namespace sparsefw
