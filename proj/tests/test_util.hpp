#pragma once

#include <random>
#include <string>
#include <vector>

#include "quandle/free_quandle.hpp"
#include "quandle/presentation.hpp"

namespace test {

inline std::string data(const std::string& name) { return std::string(QUANDLE_TEST_DATA) + "/" + name; }

inline quandle::FreeWord random_word(std::mt19937& rng, const std::vector<std::string>& gens, std::size_t max_len) {
  const std::size_t len = rng() % (max_len + 1);
  std::vector<quandle::Letter> letters;
  for (std::size_t i = 0; i < len; ++i) letters.push_back({gens[rng() % gens.size()], rng() % 2 ? 1 : -1});
  return quandle::FreeWord(std::move(letters));
}

inline quandle::FreeQuandleElement random_element(std::mt19937& rng, const std::vector<std::string>& gens,
                                                  std::size_t max_len) {
  return {gens[rng() % gens.size()], random_word(rng, gens, max_len)};
}

inline quandle::QuandlePresentation random_presentation(std::mt19937& rng, std::size_t n_gens, std::size_t n_rels,
                                                        std::size_t max_len) {
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < n_gens; ++i) gens.push_back("g" + std::to_string(i));
  quandle::QuandlePresentation p;
  for (const auto& g : gens) p.add_generator(g);
  for (std::size_t i = 0; i < n_rels; ++i) p.add_relation(random_element(rng, gens, max_len), random_element(rng, gens, max_len));
  return p;
}

}  // namespace test
