#include "ordalg/verdict.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordalg {

  bool AxiomReport::all_hold() const noexcept {
    return std::none_of(verdicts.begin(), verdicts.end(), [](Verdict const& v) {
      return v.status == Status::Fails;
    });
  }

  Verdict const& AxiomReport::at(std::string_view name) const {
    for (auto const& v : verdicts) {
      if (v.name == name) {
        return v;
      }
    }
    throw std::out_of_range("no verdict named " + std::string(name));
  }

  void AxiomReport::add(std::string name, std::optional<Witness> failure) {
    if (failure) {
      verdicts.push_back({std::move(name), Status::Fails, std::move(*failure), {}});
    } else {
      verdicts.push_back({std::move(name), Status::Holds, {}, {}});
    }
  }

  void AxiomReport::add_sets(std::string name, std::optional<std::vector<ElemSet>> failure) {
    if (failure) {
      verdicts.push_back({std::move(name), Status::Fails, {}, std::move(*failure)});
    } else {
      verdicts.push_back({std::move(name), Status::Holds, {}, {}});
    }
  }

  void AxiomReport::skip(std::string name) {
    verdicts.push_back({std::move(name), Status::Skipped, {}, {}});
  }

}  // namespace ordalg
