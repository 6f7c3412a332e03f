#include "qcx/irreps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qcx {

namespace {

// ---------------------------------------------------------------------------
// Standard Young tableaux
//
// A tableau of shape λ (n cells) is stored as row_of[k] = row of entry k+1.
// Within a row entries increase left to right, so the row assignment vector
// determines the tableau.
// ---------------------------------------------------------------------------

struct TableauSet {
  std::vector<int> shape;                   // parts of λ
  std::vector<std::vector<int>> row_of;     // one vector per tableau
  std::map<std::vector<int>, int> index_of; // row_of -> tableau index
};

void fill_tableaux(const std::vector<int>& shape, std::vector<int>& fill_count,
                   std::vector<int>& row_of, int next, int n,
                   std::vector<std::vector<int>>& out) {
  if (next > n) {
    out.push_back(row_of);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    bool row_open = fill_count[r] < shape[r];
    bool column_ok = (r == 0) || (fill_count[r - 1] > fill_count[r]);
    if (row_open && column_ok) {
      ++fill_count[r];
      row_of[static_cast<std::size_t>(next - 1)] = static_cast<int>(r);
      fill_tableaux(shape, fill_count, row_of, next + 1, n, out);
      --fill_count[r];
    }
  }
}

// Last-letter order: compare by the largest entry placed differently; the
// tableau holding it in the later row comes first.
bool last_letter_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

TableauSet standard_tableaux(const Partition& p) {
  TableauSet t;
  t.shape = p.parts;
  const int n = p.n();
  std::vector<int> fill_count(p.parts.size(), 0);
  std::vector<int> row_of(static_cast<std::size_t>(n), 0);
  fill_tableaux(t.shape, fill_count, row_of, 1, n, t.row_of);
  std::sort(t.row_of.begin(), t.row_of.end(), last_letter_less);
  for (std::size_t i = 0; i < t.row_of.size(); ++i) t.index_of[t.row_of[i]] = static_cast<int>(i);
  return t;
}

// Content (column − row) of the cell holding entry k+1, reconstructed from the
// row assignment: the column of k+1 is how many of 1..k share its row.
int content_of(const std::vector<int>& row_of, int k) {
  int row = row_of[static_cast<std::size_t>(k)];
  int col = 0;
  for (int j = 0; j < k; ++j) {
    if (row_of[static_cast<std::size_t>(j)] == row) ++col;
  }
  return col - row;
}

// Young's orthogonal form for the adjacent transposition (i, i+1), 1-based i.
Eigen::MatrixXd yor_adjacent(const TableauSet& t, int i) {
  const auto d = static_cast<Eigen::Index>(t.row_of.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index idx = 0; idx < d; ++idx) {
    const auto& row_of = t.row_of[static_cast<std::size_t>(idx)];
    int axial = content_of(row_of, i) - content_of(row_of, i - 1);  // c(i+1) − c(i)
    double inv = 1.0 / static_cast<double>(axial);
    m(idx, idx) = inv;
    if (std::abs(axial) >= 2) {
      auto swapped = row_of;
      std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
      Eigen::Index other = t.index_of.at(swapped);
      m(idx, other) = std::sqrt(1.0 - inv * inv);
    }
  }
  return m;
}

// Factors a permutation (one-line payload) into adjacent transpositions by
// bubble sort. Sorting applies p·t_1·…·t_m = e, so p = t_m · … · t_1; the
// list is returned in chronological order t_1 … t_m.
std::vector<int> adjacent_factorization(std::vector<std::int64_t> oneline) {
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < oneline.size(); ++i) {
      if (oneline[i] > oneline[i + 1]) {
        std::swap(oneline[i], oneline[i + 1]);
        swaps.push_back(static_cast<int>(i + 1));  // transposition (i+1, i+2), 1-based
        changed = true;
      }
    }
  }
  return swaps;
}

Eigen::MatrixXcd dihedral_matrix(const DihedralLabel& label, std::int64_t n, std::int64_t reflect,
                                 std::int64_t rot) {
  switch (label.kind) {
    case DihedralLabel::Kind::Trivial:
      return Eigen::MatrixXcd::Identity(1, 1);
    case DihedralLabel::Kind::ReflectSign:
      return Eigen::MatrixXcd::Constant(1, 1, reflect ? -1.0 : 1.0);
    case DihedralLabel::Kind::RotateSign:
      return Eigen::MatrixXcd::Constant(1, 1, (rot % 2) ? -1.0 : 1.0);
    case DihedralLabel::Kind::BothSign: {
      double v = ((rot % 2) ? -1.0 : 1.0) * (reflect ? -1.0 : 1.0);
      return Eigen::MatrixXcd::Constant(1, 1, v);
    }
    case DihedralLabel::Kind::Rotation2D: {
      double theta = 2.0 * std::numbers::pi * static_cast<double>(label.h) *
                     static_cast<double>(rot) / static_cast<double>(n);
      Eigen::Matrix2d r;
      r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
      if (reflect) {
        Eigen::Matrix2d s;
        s << 1.0, 0.0, 0.0, -1.0;
        r = s * r;
      }
      return r.cast<std::complex<double>>();
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::string label_to_string(const IrrepLabel& label) {
  if (const auto* p = std::get_if<Partition>(&label)) return p->to_string();
  if (const auto* k = std::get_if<std::int64_t>(&label)) return std::to_string(*k);
  const auto& d = std::get<DihedralLabel>(label);
  switch (d.kind) {
    case DihedralLabel::Kind::Trivial:
      return "triv";
    case DihedralLabel::Kind::ReflectSign:
      return "sgn";
    case DihedralLabel::Kind::RotateSign:
      return "rsgn";
    case DihedralLabel::Kind::BothSign:
      return "rssgn";
    case DihedralLabel::Kind::Rotation2D:
      return "rot" + std::to_string(d.h);
  }
  throw std::logic_error("unreachable");
}

IrrepLabel parse_irrep_label(const GroupSpec& group, const std::string& text) {
  switch (group.family) {
    case GroupFamily::Symmetric: {
      Partition p = Partition::parse(text);
      if (p.n() != group.n)
        throw std::invalid_argument("partition " + text + " is not a partition of " +
                                    std::to_string(group.n));
      return p;
    }
    case GroupFamily::Cyclic: {
      std::int64_t k = std::stoll(text);
      if (k < 0 || k >= group.n) throw std::invalid_argument("character index out of range: " + text);
      return k;
    }
    case GroupFamily::Dihedral: {
      if (text == "triv") return DihedralLabel{DihedralLabel::Kind::Trivial, 0};
      if (text == "sgn") return DihedralLabel{DihedralLabel::Kind::ReflectSign, 0};
      if (text == "rsgn" || text == "rssgn") {
        if (group.n % 2 != 0)
          throw std::invalid_argument("label " + text + " exists only for even n");
        return DihedralLabel{text == "rsgn" ? DihedralLabel::Kind::RotateSign
                                            : DihedralLabel::Kind::BothSign,
                             0};
      }
      if (text.rfind("rot", 0) == 0) {
        int h = std::stoi(text.substr(3));
        if (h < 1 || 2 * h >= group.n)
          throw std::invalid_argument("rotation irrep index out of range: " + text);
        return DihedralLabel{DihedralLabel::Kind::Rotation2D, h};
      }
      throw std::invalid_argument("unknown dihedral irrep label: " + text);
    }
    case GroupFamily::Product:
      throw std::invalid_argument("irreps of product groups are not supported");
  }
  throw std::logic_error("unreachable");
}

bool label_equal(const IrrepLabel& a, const IrrepLabel& b) {
  return label_to_string(a) == label_to_string(b);
}

IrrepHandle IrrepHandle::make(const GroupSpec& group, const IrrepLabel& label) {
  IrrepHandle h;
  h.group_ = group;
  h.label_ = label;
  switch (group.family) {
    case GroupFamily::Symmetric: {
      const auto& p = std::get<Partition>(label);
      if (p.n() != group.n) throw std::invalid_argument("partition does not match group");
      TableauSet t = standard_tableaux(p);
      h.dim_ = static_cast<Eigen::Index>(t.row_of.size());
      auto adj = std::make_shared<std::vector<Eigen::MatrixXd>>();
      for (int i = 1; i < group.n; ++i) adj->push_back(yor_adjacent(t, i));
      h.adjacent_ = std::move(adj);
      if (h.dim_ != static_cast<Eigen::Index>(irrep_dimension(p)))
        throw std::logic_error("tableau count disagrees with dimension formula");
      break;
    }
    case GroupFamily::Cyclic: {
      std::int64_t k = std::get<std::int64_t>(label);
      if (k < 0 || k >= group.n) throw std::invalid_argument("character index out of range");
      h.dim_ = 1;
      break;
    }
    case GroupFamily::Dihedral: {
      const auto& d = std::get<DihedralLabel>(label);
      if ((d.kind == DihedralLabel::Kind::RotateSign || d.kind == DihedralLabel::Kind::BothSign) &&
          group.n % 2 != 0)
        throw std::invalid_argument("rotation-sign labels exist only for even n");
      if (d.kind == DihedralLabel::Kind::Rotation2D && (d.h < 1 || 2 * d.h >= group.n))
        throw std::invalid_argument("rotation irrep index out of range");
      h.dim_ = d.kind == DihedralLabel::Kind::Rotation2D ? 2 : 1;
      break;
    }
    case GroupFamily::Product:
      throw std::invalid_argument("irreps of product groups are not supported");
  }
  return h;
}

bool IrrepHandle::is_trivial() const {
  if (const auto* p = std::get_if<Partition>(&label_)) return p->parts.size() == 1;
  if (const auto* k = std::get_if<std::int64_t>(&label_)) return *k == 0;
  return std::get<DihedralLabel>(label_).kind == DihedralLabel::Kind::Trivial;
}

Eigen::MatrixXcd IrrepHandle::matrix(const GroupElement& g) const {
  if (g.group != group_) throw std::invalid_argument("element does not belong to the irrep's group");
  switch (group_.family) {
    case GroupFamily::Symmetric: {
      Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim_, dim_);
      // r(p) = r(t_m)···r(t_1) for the bubble-sort factorization p = t_m···t_1.
      for (int t : adjacent_factorization(g.payload))
        m = (*adjacent_)[static_cast<std::size_t>(t - 1)] * m;
      return m.cast<std::complex<double>>();
    }
    case GroupFamily::Cyclic: {
      std::int64_t k = std::get<std::int64_t>(label_);
      double theta = 2.0 * std::numbers::pi * static_cast<double>(k) *
                     static_cast<double>(g.payload[0]) / static_cast<double>(group_.n);
      return Eigen::MatrixXcd::Constant(1, 1, std::polar(1.0, theta));
    }
    case GroupFamily::Dihedral:
      return dihedral_matrix(std::get<DihedralLabel>(label_), group_.n, g.payload[0], g.payload[1]);
    case GroupFamily::Product:
      break;
  }
  throw std::logic_error("unreachable");
}

std::complex<double> IrrepHandle::character(const GroupElement& g) const { return matrix(g).trace(); }

std::vector<IrrepHandle> list_irreps(const GroupSpec& group, std::uint64_t cap) {
  std::vector<IrrepHandle> out;
  switch (group.family) {
    case GroupFamily::Symmetric: {
      if (BigUint(cap) < group.order())
        throw std::runtime_error("group too large to verify irrep completeness");
      for (const auto& p : partitions_of(static_cast<int>(group.n)))
        out.push_back(IrrepHandle::make(group, p));
      break;
    }
    case GroupFamily::Cyclic:
      for (std::int64_t k = 0; k < group.n; ++k) out.push_back(IrrepHandle::make(group, k));
      break;
    case GroupFamily::Dihedral: {
      out.push_back(IrrepHandle::make(group, DihedralLabel{DihedralLabel::Kind::Trivial, 0}));
      out.push_back(IrrepHandle::make(group, DihedralLabel{DihedralLabel::Kind::ReflectSign, 0}));
      if (group.n % 2 == 0) {
        out.push_back(IrrepHandle::make(group, DihedralLabel{DihedralLabel::Kind::RotateSign, 0}));
        out.push_back(IrrepHandle::make(group, DihedralLabel{DihedralLabel::Kind::BothSign, 0}));
      }
      for (int h = 1; 2 * h < group.n; ++h)
        out.push_back(IrrepHandle::make(group, DihedralLabel{DihedralLabel::Kind::Rotation2D, h}));
      break;
    }
    case GroupFamily::Product:
      throw std::invalid_argument("irreps of product groups are not supported");
  }
  return out;
}

Eigen::MatrixXcd character_table(const std::vector<IrrepHandle>& irreps,
                                 const std::vector<GroupElement>& elements) {
  Eigen::MatrixXcd table(static_cast<Eigen::Index>(irreps.size()),
                         static_cast<Eigen::Index>(elements.size()));
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      table(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          irreps[i].character(elements[j]);
    }
  }
  return table;
}

long MultiplicityTable::of(const IrrepLabel& label) const {
  for (const auto& [l, m] : entries) {
    if (label_equal(l, label)) return m;
  }
  throw std::invalid_argument("label not in multiplicity table: " + label_to_string(label));
}

MultiplicityTable tensor_multiplicities(const IrrepHandle& h, const std::vector<IrrepHandle>& all_irreps,
                                        const Eigen::MatrixXcd& char_table, Eigen::Index h_row) {
  const Eigen::Index n_elems = char_table.cols();
  Eigen::ArrayXd chi_sq = char_table.row(h_row).array().abs2();  // χ_λ χ_λ*
  MultiplicityTable table;
  std::uint64_t weighted_sum = 0;
  for (std::size_t i = 0; i < all_irreps.size(); ++i) {
    std::complex<double> acc = 0.0;
    for (Eigen::Index j = 0; j < n_elems; ++j)
      acc += std::conj(char_table(static_cast<Eigen::Index>(i), j)) * chi_sq(j);
    acc /= static_cast<double>(n_elems);
    double rounded = std::round(acc.real());
    if (std::abs(acc.real() - rounded) > 1e-8 || std::abs(acc.imag()) > 1e-8 || rounded < 0.0)
      throw std::runtime_error("non-integer tensor multiplicity for " +
                               all_irreps[i].label_string() + ": " + std::to_string(acc.real()));
    long m = static_cast<long>(rounded);
    table.entries.emplace_back(all_irreps[i].label(), m);
    if (all_irreps[i].is_trivial()) table.trivial = m;
    weighted_sum += static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(all_irreps[i].dim());
  }
  if (weighted_sum != static_cast<std::uint64_t>(h.dim()) * static_cast<std::uint64_t>(h.dim()))
    throw std::runtime_error("tensor multiplicities do not resolve V⊗V*: Σ m_ν d_ν = " +
                             std::to_string(weighted_sum));
  return table;
}

MultiplicityTable tensor_multiplicities(const IrrepHandle& h, std::uint64_t cap) {
  auto irreps = list_irreps(h.group(), cap);
  auto elements = enumerate_elements(h.group(), cap);
  auto table = character_table(irreps, elements);
  Eigen::Index row = -1;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (label_equal(irreps[i].label(), h.label())) row = static_cast<Eigen::Index>(i);
  }
  if (row < 0) throw std::logic_error("irrep not found in its own group's list");
  return tensor_multiplicities(h, irreps, table, row);
}

BigUint sum_squared_dims(const std::vector<IrrepHandle>& irreps) {
  BigUint sum{0};
  for (const auto& h : irreps) {
    BigUint sq(static_cast<std::uint64_t>(h.dim()));
    sq = sq * BigUint(static_cast<std::uint64_t>(h.dim()));
    sum.add(sq);
  }
  return sum;
}

bool irrep_completeness_check(const GroupSpec& group, std::uint64_t cap) {
  auto irreps = list_irreps(group, cap);
  return sum_squared_dims(irreps) == group.order();
}

}  // namespace qcx
