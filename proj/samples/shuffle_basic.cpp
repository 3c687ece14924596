// Shuffles a small array three ways and prints the two-round network.

#include <iostream>
#include <string>
#include <vector>

#include "shuffleworks/shuffleworks.hpp"

int main() {
  namespace sw = shuffleworks;

  std::vector<std::string> deck = {"a", "b", "c", "d", "e", "f", "1", "2", "3", "4", "5", "6"};

  auto by_modinv = deck;
  sw::shuffle_modinv(by_modinv, 2);

  auto by_rotation = deck;
  sw::shuffle_general_k2(by_rotation);

  const auto pair = sw::factor_permutation(sw::in_shuffle_permutation(deck.size(), 2));
  auto by_factor = deck;
  sw::apply_pair_in_place(by_factor, pair.s, pair.t);

  for (const auto* v : {&by_modinv, &by_rotation, &by_factor}) {
    for (const auto& s : *v) std::cout << s << ' ';
    std::cout << '\n';
  }

  std::cout << sw::emit_text(sw::build_network(sw::NetworkMethod::kBitrev, 27, 3));
}
