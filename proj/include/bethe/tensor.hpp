#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bethe/rat.hpp"

namespace bethe {

// Kind of a single tensor factor.
//   Full    : V = C^N, labels 1,2,...,(0),...,2bar,1bar  (codes 0..N-1)
//   Reduced : the subspace without 1 and 1bar, dim N-2 (codes 0..N-3 map to
//             full codes 1..N-2)
//   SU2     : C^2 with labels up, down
enum class SiteKind : uint8_t { Full, Reduced, SU2 };

struct Site {
  SiteKind kind = SiteKind::Full;
  uint8_t N = 0;  // model N; unused for SU2

  int dim() const;
  bool operator==(const Site& o) const { return kind == o.kind && (kind == SiteKind::SU2 || N == o.N); }
  bool operator!=(const Site& o) const { return !(*this == o); }
  std::string str() const;
};

Site full_site(int N);
Site reduced_site(int N);
Site su2_site();

using Signature = std::vector<Site>;

// Label helpers. Codes are plain ints; conj is code -> dim-1-code.
int conj(const Site& s, int code);
std::string label_str(const Site& s, int code);
int parse_label(const Site& s, const std::string& text);  // throws InvalidLabel
// For reduced sites, the full-space code the label embeds to.
inline int embed_code(int reduced_code) { return reduced_code + 1; }

// Multi-index packed four bits per slot, slot 0 in the most significant
// position, so that numeric key order is lexicographic label order.
namespace key {
using Key = uint64_t;
constexpr int kMaxRank = 15;
inline int shift(int rank, int slot) { return 4 * (rank - 1 - slot); }
inline int get(Key k, int rank, int slot) { return int((k >> shift(rank, slot)) & 0xF); }
inline Key set(Key k, int rank, int slot, int lab) {
  int s = shift(rank, slot);
  return (k & ~(Key(0xF) << s)) | (Key(lab) << s);
}
inline Key low_mask(int bits) { return bits == 0 ? 0 : ((Key(1) << bits) - 1); }
// Insert a new slot at position pos (0..rank); result has rank+1 slots.
inline Key insert(Key k, int rank, int pos, int lab) {
  int lowbits = 4 * (rank - pos);
  Key high = lowbits >= 64 ? 0 : (k >> lowbits);
  return (((high << 4) | Key(lab)) << lowbits) | (k & low_mask(lowbits));
}
// Remove slot pos; result has rank-1 slots.
inline Key remove(Key k, int rank, int pos) {
  int lowbits = 4 * (rank - 1 - pos);
  Key high = k >> (lowbits + 4);
  return (high << lowbits) | (k & low_mask(lowbits));
}
inline Key swap(Key k, int rank, int i, int j) {
  int a = get(k, rank, i), b = get(k, rank, j);
  return set(set(k, rank, i, b), rank, j, a);
}
Key pack(const std::vector<int>& labels);
std::vector<int> unpack(Key k, int rank);
}  // namespace key

// Sparse co-vector on a tensor product of sites. Entries are kept sorted by
// key, with no stored zeros, so equality is structural.
class Covector {
 public:
  using Key = key::Key;
  using Entry = std::pair<Key, Rat>;

  Covector() = default;  // zero on the empty signature
  explicit Covector(Signature sig);
  // Sums duplicates, drops zeros.
  Covector(Signature sig, std::vector<Entry> raw);

  static Covector from_labels(const Signature& sig, const std::vector<int>& labels, const Rat& c = Rat(1));
  static Covector from_key(const Signature& sig, Key k, const Rat& c = Rat(1));
  // Scalar on the empty signature.
  static Covector scalar(const Rat& c);

  const Signature& sig() const { return sig_; }
  int rank() const { return int(sig_.size()); }
  const std::vector<Entry>& entries() const { return e_; }
  size_t size() const { return e_.size(); }
  bool is_zero() const { return e_.empty(); }

  Rat coeff(Key k) const;
  Rat coeff(const std::vector<int>& labels) const { return coeff(key::pack(labels)); }
  int label(Key k, int slot) const { return key::get(k, rank(), slot); }

  Covector& operator+=(const Covector& o);
  Covector& operator-=(const Covector& o);
  friend Covector operator+(Covector a, const Covector& b) { return a += b; }
  friend Covector operator-(Covector a, const Covector& b) { return a -= b; }
  friend Covector operator*(const Rat& s, const Covector& x);
  Covector operator-() const { return Rat(-1) * *this; }
  friend bool operator==(const Covector& a, const Covector& b) { return a.sig_ == b.sig_ && a.e_ == b.e_; }
  friend bool operator!=(const Covector& a, const Covector& b) { return !(a == b); }

  // Human-readable form, e.g. "3/2<1,2bar| + ...".
  std::string str() const;

 private:
  void check_sig_compatible(const Covector& o) const;
  Signature sig_;
  std::vector<Entry> e_;
};

bool operator==(const std::pair<key::Key, Rat>& a, const std::pair<key::Key, Rat>& b);

// Iterate all basis keys of a signature, in increasing key order.
void for_each_basis_key(const Signature& sig, const std::function<void(key::Key)>& fn);
size_t basis_size(const Signature& sig);

// Slot manipulations (all exact, all return new covectors).
Covector add_slot(const Covector& x, const Site& s, int label);  // append at end
Covector insert_slot(const Covector& x, int pos, const Site& s, int label);
Covector select_slot(const Covector& x, int pos, int label);  // keep label, drop slot
Covector swap_slots(const Covector& x, int i, int j);          // P_ij
Covector permute_slots(const Covector& x, const std::vector<int>& perm);  // new slot s = old perm[s]
// id*1 + p*P + k*K acting on slots i, j (same site kind).
Covector apply_pk(const Covector& x, int i, int j, const Rat& id, const Rat& p, const Rat& k);
// Lower C pairing on slots i, j: sums entries with label_i = conj(label_j),
// removing both slots.
Covector contract_c(const Covector& x, int i, int j);
// Upper C: tensor with sum_g <g, gbar| inserted at positions (i, i+1) of the
// result.
Covector insert_c_upper(const Covector& x, int pos, const Site& s);
// Projector pi: Full -> Reduced (drops labels 1 and 1bar); embed is the
// inclusion Reduced -> Full.
Covector project_site(const Covector& x, int slot);
Covector embed_site(const Covector& x, int slot);

// Sparse linear operator with right action x -> x.A.
class LinOp {
 public:
  using Key = key::Key;
  LinOp() = default;
  LinOp(Signature in, Signature out) : in_(std::move(in)), out_(std::move(out)) {}

  static LinOp identity(const Signature& sig);
  // Materialize a linear map given by its action on basis covectors.
  static LinOp from_function(const Signature& in, const Signature& out,
                             const std::function<Covector(const Covector&)>& fn);

  const Signature& in() const { return in_; }
  const Signature& out() const { return out_; }
  const std::map<Key, std::vector<Covector::Entry>>& rows() const { return rows_; }
  void set_row(Key in_key, const Covector& image);
  Covector row(Key in_key) const;

  Covector apply(const Covector& x) const;
  // (A.then(B)) acts as x -> (x.A).B
  LinOp then(const LinOp& b) const;
  LinOp operator-(const LinOp& b) const;
  LinOp scaled(const Rat& s) const;
  bool is_zero() const { return rows_.empty(); }
  friend bool operator==(const LinOp& a, const LinOp& b) {
    return a.in_ == b.in_ && a.out_ == b.out_ && a.rows_ == b.rows_;
  }

 private:
  Signature in_, out_;
  std::map<Key, std::vector<Covector::Entry>> rows_;  // only nonzero rows
};

// Acts as op (x) identity with op's k sites placed at `slots` of x. The
// operator must preserve rank; site kinds at those slots become op.out().
Covector apply_at_slots(const LinOp& op, const std::vector<int>& slots, const Covector& x);

enum class TwoSite { P, K, Identity };
LinOp two_site_op(TwoSite kind, const Site& s);

// C^{ab} = delta^{a, bbar} as an element of V(x)V, and C_{ab} as a functional
// V(x)V -> scalars.
struct CPairing {
  Covector upper;
  LinOp lower;
};
CPairing c_pairing(const Site& s);

nlohmann::json to_json(const Covector& x);
Covector covector_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LinOp& op);

// Weight of a basis multi-index: w_k = #(label k) - #(label kbar) for
// k = 1..[N/2], reduced labels counted through their full embedding.
std::vector<int> weight_of(const Signature& sig, key::Key k, int N);

}  // namespace bethe
