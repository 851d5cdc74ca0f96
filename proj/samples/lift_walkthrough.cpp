// Walkthrough: lift prescribed rows to SL_2(Z) and Sp_2(Z), print the
// certificates, and decompose the result into elementary matrices.
#include "conglift/conglift.hpp"
#include "conglift/io/json.hpp"

#include <iostream>

using namespace conglift;

int main() {
  const IntegerRing z;

  // Rows of the target: row 0 mod 2, row 1 mod 3; the lift is Id mod 5.
  const std::vector<std::vector<Int>> rows{{1, 1}, {1, 2}};
  const std::vector<Int> ideals{2, 3};
  const auto cert = omega_lift(rows, ideals, Int(5));
  std::cout << "SL lift:\n" << io::certificate_json(cert).dump(2) << "\n";
  if (!verify_certificate(cert)) return 1;

  const auto word = elementary_decompose(z, cert.b);
  std::cout << "elementary factors: " << word.factors.size() << "\n";
  if (word_to_matrix(z, word) != cert.b) return 1;

  // Same targets through the symplectic construction, level 7.
  const auto sp = sigma_lift(rows, ideals, Int(7));
  std::cout << "SP lift verifies: " << std::boolalpha << verify_certificate(sp) << "\n";

  // Classes of the projective line over Z/6.
  const Ideal<IntegerRing> six(z, Int(6));
  std::cout << "|P^1(Z/6)| = " << enumerate_pf(six, WeightVector::ones(2)).size() << "\n";
  return verify_certificate(sp) ? 0 : 1;
}
