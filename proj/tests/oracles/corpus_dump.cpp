// Dumps the certificate cases (three worked constructions, then the first
// 20 corpus members) as JSON for floors.py: intervals, the built spectrum
// on [-64, 64], and the values this library computes for comparison.

#include <iostream>
#include <json.hpp>

#include "corpus.hpp"
#include "riesz/build.hpp"
#include "riesz/verify.hpp"

int main() {
  using Json = nlohmann::ordered_json;
  std::vector<std::pair<std::string, riesz::IntervalUnion>> cases = {
      {"half", riesz::testing::half_interval()},
      {"three_quarters", riesz::testing::three_quarters()},
      {"two_intervals", riesz::testing::two_intervals()},
  };
  const auto members = riesz::testing::corpus(200);
  for (std::size_t i = 0; i < 20; ++i) {
    cases.emplace_back("corpus_" + std::to_string(i), members[i].set);
  }

  Json out = Json::array();
  const std::vector<std::int64_t> window{64};
  for (const auto& [name, set] : cases) {
    const auto built = riesz::build_spectrum(set);
    const auto lams = riesz::enumerate(built.spectrum, 64);
    Json arcs = Json::array();
    for (const auto& a : set.arcs()) {
      arcs.push_back({riesz::to_string(a.left), riesz::to_string(a.right)});
    }
    out.push_back({{"name", name},
                   {"arcs", arcs},
                   {"spectrum", riesz::to_text(built.spectrum)},
                   {"elements", lams},
                   {"gram_min", riesz::riesz_bounds_profile(lams, set, window)[0].min_eig},
                   {"frame", riesz::frame_lower_test(lams, set, 8, 64)},
                   {"frame_tail", riesz::frame_tail_test(lams, set, 8, 64)}});
  }
  std::cout << out.dump(1) << '\n';
}
