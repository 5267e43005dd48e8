#include "f4/albert.hpp"

#include <stdexcept>

namespace f4 {

BasisElement BasisElement::E(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("E index must be 1..3");
  return BasisElement(i - 1);
}

BasisElement BasisElement::X(int k, int j) {
  if (k < 1 || k > 3 || j < 1 || j > 8) throw std::out_of_range("X index out of range");
  return BasisElement(3 + 8 * (k - 1) + (j - 1));
}

BasisElement BasisElement::from_index(int index) {
  if (index < 0 || index >= kAlbertDim) throw std::out_of_range("basis index must be 0..26");
  return BasisElement(index);
}

BasisElement BasisElement::parse(std::string_view name) {
  auto bad = [&] { return std::invalid_argument("unknown basis element '" + std::string(name) + "'"); };
  if (name.size() == 5 && name[0] == 'E' && name.substr(2) == "[1]") {
    int i = name[1] - '0';
    if (i < 1 || i > 3) throw bad();
    return E(i);
  }
  if (name.size() == 6 && name[0] == 'X' && name.substr(2, 2) == "[e" && name[5] == ']') {
    int k = name[1] - '0';
    int j = name[4] - '0';
    if (k < 1 || k > 3 || j < 1 || j > 8) throw bad();
    return X(k, j);
  }
  throw bad();
}

std::vector<BasisElement> BasisElement::all() {
  std::vector<BasisElement> out;
  for (int i = 0; i < kAlbertDim; ++i) out.push_back(BasisElement(i));
  return out;
}

std::string BasisElement::name() const {
  if (index_ < 3) return "E" + std::to_string(index_ + 1) + "[1]";
  int k = (index_ - 3) / 8 + 1;
  int j = (index_ - 3) % 8 + 1;
  return "X" + std::to_string(k) + "[e" + std::to_string(j) + "]";
}

Coord27 coor(const AlbertElement& x) {
  Coord27 c;
  for (int k = 0; k < kAlbertDim; ++k) c[k] = x.coord(k);
  return c;
}

AlbertElement invcoor(const Coord27& c) {
  AlbertElement x = AlbertElement::zero(c[0].field());
  for (int k = 0; k < kAlbertDim; ++k) x.coord(k) = c[k];
  return x;
}

const StructureTensors& StructureTensors::get() {
  static const StructureTensors tensors;
  return tensors;
}

StructureTensors::StructureTensors() {
  using Z = BasicAlbert<std::int64_t>;
  constexpr int n = kAlbertDim;
  std::vector<Z> e;
  for (auto b : BasisElement::all()) e.push_back(basis_element<std::int64_t>({}, b));

  u_.assign(n * n * n, 0);
  std::vector<Z> uij(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      uij[i * n + j] = u_op(e[i], e[j]);
      for (int c = 0; c < n; ++c) u_[(i * n + j) * n + c] = uij[i * n + j].coord(c);
    }
  }
  t_.assign(n * n * n * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = i; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        Z t = triple(e[i], e[j], e[k]);
        for (int c = 0; c < n; ++c) {
          t_[((i * n + j) * n + k) * n + c] = t.coord(c);
          t_[((k * n + j) * n + i) * n + c] = t.coord(c);
        }
      }
    }
  }
}

}  // namespace f4
