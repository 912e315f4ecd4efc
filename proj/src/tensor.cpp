#include "bethe/tensor.hpp"

#include <algorithm>
#include <sstream>

#include "bethe/errors.hpp"

namespace bethe {

int Site::dim() const {
  switch (kind) {
    case SiteKind::Full: return N;
    case SiteKind::Reduced: return N - 2;
    case SiteKind::SU2: return 2;
  }
  return 0;
}

std::string Site::str() const {
  switch (kind) {
    case SiteKind::Full: return "V(" + std::to_string(N) + ")";
    case SiteKind::Reduced: return "Vr(" + std::to_string(N) + ")";
    case SiteKind::SU2: return "SU2";
  }
  return "?";
}

namespace {
void check_model_n(int N) {
  if (N < 3 || N > key::kMaxRank) throw UnsupportedN("N must lie in [3, 15], got " + std::to_string(N));
}
}  // namespace

Site full_site(int N) {
  check_model_n(N);
  return Site{SiteKind::Full, uint8_t(N)};
}
Site reduced_site(int N) {
  check_model_n(N);
  return Site{SiteKind::Reduced, uint8_t(N)};
}
Site su2_site() { return Site{SiteKind::SU2, 0}; }

int conj(const Site& s, int code) {
  if (code < 0 || code >= s.dim()) throw InvalidLabel("label code out of range");
  return s.dim() - 1 - code;
}

namespace {
std::string full_label(int N, int code) {
  static const std::string bar = "\xcc\x84";  // combining macron
  if (N % 2 == 1 && code == (N - 1) / 2) return "0";
  if (code < N / 2) return std::to_string(code + 1);
  return std::to_string(N - code) + bar;
}
}  // namespace

std::string label_str(const Site& s, int code) {
  if (code < 0 || code >= s.dim()) throw InvalidLabel("label code out of range");
  switch (s.kind) {
    case SiteKind::Full: return full_label(s.N, code);
    case SiteKind::Reduced: return full_label(s.N, code + 1);
    case SiteKind::SU2: return code == 0 ? "\xe2\x86\x91" : "\xe2\x86\x93";
  }
  return "?";
}

int parse_label(const Site& s, const std::string& text) {
  for (int c = 0; c < s.dim(); ++c)
    if (label_str(s, c) == text) return c;
  // ASCII fallbacks: "2b" for 2bar, "u"/"d" for SU(2)
  if (s.kind == SiteKind::SU2) {
    if (text == "u" || text == "up") return 0;
    if (text == "d" || text == "down") return 1;
  } else if (text.size() > 1 && text.back() == 'b') {
    std::string t = text.substr(0, text.size() - 1) + "\xcc\x84";
    for (int c = 0; c < s.dim(); ++c)
      if (label_str(s, c) == t) return c;
  }
  throw InvalidLabel("unknown label '" + text + "' for site " + s.str());
}

namespace key {
Key pack(const std::vector<int>& labels) {
  if (int(labels.size()) > kMaxRank) throw DimensionMismatch("too many slots");
  Key k = 0;
  for (int l : labels) k = (k << 4) | Key(l);
  return k;
}
std::vector<int> unpack(Key k, int rank) {
  std::vector<int> out(rank);
  for (int s = 0; s < rank; ++s) out[s] = get(k, rank, s);
  return out;
}
}  // namespace key

bool operator==(const std::pair<key::Key, Rat>& a, const std::pair<key::Key, Rat>& b) {
  return a.first == b.first && a.second == b.second;
}

namespace {
void normalize(std::vector<Covector::Entry>& e) {
  std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t w = 0;
  for (size_t r = 0; r < e.size();) {
    key::Key k = e[r].first;
    Rat s = std::move(e[r].second);
    size_t q = r + 1;
    for (; q < e.size() && e[q].first == k; ++q) s += e[q].second;
    if (!s.is_zero()) e[w++] = {k, std::move(s)};
    r = q;
  }
  e.resize(w);
}

void check_rank(size_t r) {
  if (r > size_t(key::kMaxRank)) throw DimensionMismatch("covector rank exceeds 15 slots");
}

void check_slot(const Covector& x, int s) {
  if (s < 0 || s >= x.rank()) throw InvalidSlot("slot " + std::to_string(s) + " out of range");
}
}  // namespace

Covector::Covector(Signature sig) : sig_(std::move(sig)) { check_rank(sig_.size()); }

Covector::Covector(Signature sig, std::vector<Entry> raw) : sig_(std::move(sig)), e_(std::move(raw)) {
  check_rank(sig_.size());
  normalize(e_);
}

Covector Covector::from_labels(const Signature& sig, const std::vector<int>& labels, const Rat& c) {
  if (labels.size() != sig.size()) throw DimensionMismatch("label count does not match signature");
  for (size_t s = 0; s < sig.size(); ++s)
    if (labels[s] < 0 || labels[s] >= sig[s].dim()) throw InvalidLabel("label code out of range");
  return from_key(sig, key::pack(labels), c);
}

Covector Covector::from_key(const Signature& sig, Key k, const Rat& c) {
  Covector x(sig);
  if (!c.is_zero()) x.e_.push_back({k, c});
  return x;
}

Covector Covector::scalar(const Rat& c) { return from_key({}, 0, c); }

Rat Covector::coeff(Key k) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), k, [](const Entry& a, Key b) { return a.first < b; });
  if (it != e_.end() && it->first == k) return it->second;
  return Rat(0);
}

void Covector::check_sig_compatible(const Covector& o) const {
  if (sig_ != o.sig_) throw DimensionMismatch("covector signatures differ");
}

Covector& Covector::operator+=(const Covector& o) {
  check_sig_compatible(o);
  std::vector<Entry> out;
  out.reserve(e_.size() + o.e_.size());
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      out.push_back(std::move(e_[i++]));
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      out.push_back(o.e_[j++]);
    } else {
      Rat s = e_[i].second + o.e_[j].second;
      if (!s.is_zero()) out.push_back({e_[i].first, std::move(s)});
      ++i, ++j;
    }
  }
  e_ = std::move(out);
  return *this;
}

Covector& Covector::operator-=(const Covector& o) { return *this += -o; }

Covector operator*(const Rat& s, const Covector& x) {
  Covector r(x.sig_);
  if (s.is_zero()) return r;
  r.e_.reserve(x.e_.size());
  for (const auto& [k, v] : x.e_) r.e_.push_back({k, s * v});
  return r;
}

std::string Covector::str() const {
  if (e_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : e_) {
    if (!first) os << " + ";
    first = false;
    os << v.str() << "<";
    for (int s = 0; s < rank(); ++s) os << (s ? "," : "") << label_str(sig_[s], label(k, s));
    os << "|";
  }
  return os.str();
}

size_t basis_size(const Signature& sig) {
  size_t n = 1;
  for (const auto& s : sig) n *= size_t(s.dim());
  return n;
}

void for_each_basis_key(const Signature& sig, const std::function<void(key::Key)>& fn) {
  int r = int(sig.size());
  std::vector<int> lab(r, 0);
  if (basis_size(sig) == 0) return;
  while (true) {
    fn(key::pack(lab));
    int s = r - 1;
    while (s >= 0 && ++lab[s] == sig[s].dim()) lab[s--] = 0;
    if (s < 0) break;
  }
}

Covector add_slot(const Covector& x, const Site& s, int label) { return insert_slot(x, x.rank(), s, label); }

Covector insert_slot(const Covector& x, int pos, const Site& s, int label) {
  if (pos < 0 || pos > x.rank()) throw InvalidSlot("insert position out of range");
  if (label < 0 || label >= s.dim()) throw InvalidLabel("label code out of range");
  Signature sig = x.sig();
  sig.insert(sig.begin() + pos, s);
  check_rank(sig.size());
  std::vector<Covector::Entry> out;
  out.reserve(x.size());
  for (const auto& [k, v] : x.entries()) out.push_back({key::insert(k, x.rank(), pos, label), v});
  return Covector(std::move(sig), std::move(out));
}

Covector select_slot(const Covector& x, int pos, int label) {
  check_slot(x, pos);
  Signature sig = x.sig();
  sig.erase(sig.begin() + pos);
  std::vector<Covector::Entry> out;
  for (const auto& [k, v] : x.entries())
    if (key::get(k, x.rank(), pos) == label) out.push_back({key::remove(k, x.rank(), pos), v});
  return Covector(std::move(sig), std::move(out));
}

Covector swap_slots(const Covector& x, int i, int j) {
  check_slot(x, i);
  check_slot(x, j);
  if (x.sig()[i] != x.sig()[j]) throw DimensionMismatch("swap of slots with different site kinds");
  std::vector<Covector::Entry> out;
  out.reserve(x.size());
  for (const auto& [k, v] : x.entries()) out.push_back({key::swap(k, x.rank(), i, j), v});
  return Covector(x.sig(), std::move(out));
}

Covector permute_slots(const Covector& x, const std::vector<int>& perm) {
  int r = x.rank();
  if (int(perm.size()) != r) throw DimensionMismatch("permutation length");
  Signature sig(r);
  for (int s = 0; s < r; ++s) {
    check_slot(x, perm[s]);
    sig[s] = x.sig()[perm[s]];
  }
  std::vector<Covector::Entry> out;
  out.reserve(x.size());
  for (const auto& [k, v] : x.entries()) {
    key::Key nk = 0;
    for (int s = 0; s < r; ++s) nk = (nk << 4) | key::Key(key::get(k, r, perm[s]));
    out.push_back({nk, v});
  }
  return Covector(std::move(sig), std::move(out));
}

Covector apply_pk(const Covector& x, int i, int j, const Rat& id, const Rat& p, const Rat& kc) {
  check_slot(x, i);
  check_slot(x, j);
  if (i == j) throw InvalidSlot("two-site operator needs distinct slots");
  const Site& s = x.sig()[i];
  if (s != x.sig()[j]) throw DimensionMismatch("two-site operator on different site kinds");
  int d = s.dim(), r = x.rank();
  bool has_id = !id.is_zero(), has_p = !p.is_zero(), has_k = !kc.is_zero();
  std::vector<Covector::Entry> out;
  out.reserve(x.size() * 3);
  for (const auto& [k, v] : x.entries()) {
    int a = key::get(k, r, i), b = key::get(k, r, j);
    if (has_id) out.push_back({k, v * id});
    if (has_p) out.push_back({key::swap(k, r, i, j), v * p});
    if (has_k && a == d - 1 - b) {
      Rat w = v * kc;
      for (int g = 0; g < d; ++g) out.push_back({key::set(key::set(k, r, i, g), r, j, d - 1 - g), w});
    }
  }
  return Covector(x.sig(), std::move(out));
}

Covector contract_c(const Covector& x, int i, int j) {
  check_slot(x, i);
  check_slot(x, j);
  if (i == j) throw InvalidSlot("pairing needs distinct slots");
  const Site& s = x.sig()[i];
  if (s != x.sig()[j]) throw DimensionMismatch("pairing of different site kinds");
  int d = s.dim(), r = x.rank();
  int hi = std::max(i, j), lo = std::min(i, j);
  Signature sig = x.sig();
  sig.erase(sig.begin() + hi);
  sig.erase(sig.begin() + lo);
  std::vector<Covector::Entry> out;
  for (const auto& [k, v] : x.entries()) {
    if (key::get(k, r, i) != d - 1 - key::get(k, r, j)) continue;
    out.push_back({key::remove(key::remove(k, r, hi), r - 1, lo), v});
  }
  return Covector(std::move(sig), std::move(out));
}

Covector insert_c_upper(const Covector& x, int pos, const Site& s) {
  if (pos < 0 || pos > x.rank()) throw InvalidSlot("insert position out of range");
  Signature sig = x.sig();
  sig.insert(sig.begin() + pos, s);
  sig.insert(sig.begin() + pos, s);
  check_rank(sig.size());
  int d = s.dim(), r = x.rank();
  std::vector<Covector::Entry> out;
  for (const auto& [k, v] : x.entries())
    for (int g = 0; g < d; ++g) out.push_back({key::insert(key::insert(k, r, pos, d - 1 - g), r + 1, pos, g), v});
  return Covector(std::move(sig), std::move(out));
}

Covector project_site(const Covector& x, int slot) {
  check_slot(x, slot);
  const Site& s = x.sig()[slot];
  if (s.kind != SiteKind::Full) throw DimensionMismatch("projection needs a full site");
  Signature sig = x.sig();
  sig[slot] = reduced_site(s.N);
  int r = x.rank();
  std::vector<Covector::Entry> out;
  for (const auto& [k, v] : x.entries()) {
    int l = key::get(k, r, slot);
    if (l == 0 || l == s.N - 1) continue;
    out.push_back({key::set(k, r, slot, l - 1), v});
  }
  return Covector(std::move(sig), std::move(out));
}

Covector embed_site(const Covector& x, int slot) {
  check_slot(x, slot);
  const Site& s = x.sig()[slot];
  if (s.kind != SiteKind::Reduced) throw DimensionMismatch("embedding needs a reduced site");
  Signature sig = x.sig();
  sig[slot] = full_site(s.N);
  int r = x.rank();
  std::vector<Covector::Entry> out;
  out.reserve(x.size());
  for (const auto& [k, v] : x.entries()) out.push_back({key::set(k, r, slot, key::get(k, r, slot) + 1), v});
  return Covector(std::move(sig), std::move(out));
}

LinOp LinOp::identity(const Signature& sig) {
  LinOp op(sig, sig);
  for_each_basis_key(sig, [&](key::Key k) { op.rows_[k] = {{k, Rat(1)}}; });
  return op;
}

LinOp LinOp::from_function(const Signature& in, const Signature& out,
                           const std::function<Covector(const Covector&)>& fn) {
  LinOp op(in, out);
  for_each_basis_key(in, [&](key::Key k) { op.set_row(k, fn(Covector::from_key(in, k))); });
  return op;
}

void LinOp::set_row(Key in_key, const Covector& image) {
  if (image.sig() != out_) throw DimensionMismatch("operator row has the wrong signature");
  if (image.is_zero())
    rows_.erase(in_key);
  else
    rows_[in_key] = image.entries();
}

Covector LinOp::row(Key in_key) const {
  auto it = rows_.find(in_key);
  if (it == rows_.end()) return Covector(out_);
  return Covector(out_, it->second);
}

Covector LinOp::apply(const Covector& x) const {
  if (x.sig() != in_) throw DimensionMismatch("operator input signature mismatch");
  std::vector<Covector::Entry> out;
  for (const auto& [k, v] : x.entries()) {
    auto it = rows_.find(k);
    if (it == rows_.end()) continue;
    for (const auto& [k2, w] : it->second) out.push_back({k2, v * w});
  }
  return Covector(out_, std::move(out));
}

LinOp LinOp::then(const LinOp& b) const {
  if (out_ != b.in_) throw DimensionMismatch("operator composition signature mismatch");
  LinOp r(in_, b.out_);
  for (const auto& [k, row] : rows_) r.set_row(k, b.apply(Covector(out_, row)));
  return r;
}

LinOp LinOp::operator-(const LinOp& b) const {
  if (in_ != b.in_ || out_ != b.out_) throw DimensionMismatch("operator difference signature mismatch");
  LinOp r(in_, out_);
  std::vector<Key> keys;
  for (const auto& kv : rows_) keys.push_back(kv.first);
  for (const auto& kv : b.rows_) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (Key k : keys) r.set_row(k, row(k) - b.row(k));
  return r;
}

LinOp LinOp::scaled(const Rat& s) const {
  LinOp r(in_, out_);
  for (const auto& [k, row] : rows_) r.set_row(k, s * Covector(out_, row));
  return r;
}

Covector apply_at_slots(const LinOp& op, const std::vector<int>& slots, const Covector& x) {
  int k = int(slots.size());
  if (int(op.in().size()) != k || int(op.out().size()) != k)
    throw DimensionMismatch("operator arity does not match slot list");
  int r = x.rank();
  for (int a = 0; a < k; ++a) {
    check_slot(x, slots[a]);
    for (int b = 0; b < a; ++b)
      if (slots[a] == slots[b]) throw InvalidSlot("repeated slot");
    if (x.sig()[slots[a]] != op.in()[a]) throw DimensionMismatch("site kind mismatch at slot");
  }
  Signature sig = x.sig();
  for (int a = 0; a < k; ++a) sig[slots[a]] = op.out()[a];
  std::vector<Covector::Entry> out;
  for (const auto& [key_, v] : x.entries()) {
    key::Key sub = 0;
    for (int a = 0; a < k; ++a) sub = (sub << 4) | key::Key(key::get(key_, r, slots[a]));
    auto it = op.rows().find(sub);
    if (it == op.rows().end()) continue;
    for (const auto& [sub2, w] : it->second) {
      key::Key nk = key_;
      for (int a = 0; a < k; ++a) nk = key::set(nk, r, slots[a], key::get(sub2, k, a));
      out.push_back({nk, v * w});
    }
  }
  return Covector(std::move(sig), std::move(out));
}

LinOp two_site_op(TwoSite kind, const Site& s) {
  Signature sig{s, s};
  Rat id = kind == TwoSite::Identity ? 1 : 0;
  Rat p = kind == TwoSite::P ? 1 : 0;
  Rat kk = kind == TwoSite::K ? 1 : 0;
  return LinOp::from_function(sig, sig, [&](const Covector& b) { return apply_pk(b, 0, 1, id, p, kk); });
}

CPairing c_pairing(const Site& s) {
  CPairing c;
  c.upper = insert_c_upper(Covector::scalar(1), 0, s);
  c.lower = LinOp::from_function({s, s}, {}, [](const Covector& b) { return contract_c(b, 0, 1); });
  return c;
}

nlohmann::json to_json(const Covector& x) {
  nlohmann::json j;
  j["signature"] = nlohmann::json::array();
  for (const auto& s : x.sig()) j["signature"].push_back(s.str());
  j["entries"] = nlohmann::json::array();
  for (const auto& [k, v] : x.entries()) {
    nlohmann::json idx = nlohmann::json::array();
    for (int s = 0; s < x.rank(); ++s) idx.push_back(label_str(x.sig()[s], x.label(k, s)));
    j["entries"].push_back({{"idx", idx}, {"val", v.str()}});
  }
  return j;
}

namespace {
Site parse_site(const std::string& t) {
  if (t == "SU2") return su2_site();
  auto open = t.find('('), close = t.find(')');
  if (open == std::string::npos || close == std::string::npos) throw ConfigError("bad site '" + t + "'");
  int N = std::stoi(t.substr(open + 1, close - open - 1));
  std::string head = t.substr(0, open);
  if (head == "V") return full_site(N);
  if (head == "Vr") return reduced_site(N);
  throw ConfigError("bad site '" + t + "'");
}
}  // namespace

Covector covector_from_json(const nlohmann::json& j) {
  Signature sig;
  for (const auto& s : j.at("signature")) sig.push_back(parse_site(s.get<std::string>()));
  std::vector<Covector::Entry> raw;
  for (const auto& e : j.at("entries")) {
    std::vector<int> lab;
    const auto& idx = e.at("idx");
    if (idx.size() != sig.size()) throw DimensionMismatch("entry index length");
    for (size_t s = 0; s < sig.size(); ++s) lab.push_back(parse_label(sig[s], idx[s].get<std::string>()));
    raw.push_back({key::pack(lab), Rat::parse(e.at("val").get<std::string>())});
  }
  return Covector(std::move(sig), std::move(raw));
}

nlohmann::json to_json(const LinOp& op) {
  nlohmann::json j;
  j["in"] = nlohmann::json::array();
  j["out"] = nlohmann::json::array();
  for (const auto& s : op.in()) j["in"].push_back(s.str());
  for (const auto& s : op.out()) j["out"].push_back(s.str());
  j["rows"] = nlohmann::json::array();
  int rin = int(op.in().size());
  for (const auto& [k, row] : op.rows()) {
    nlohmann::json idx = nlohmann::json::array();
    for (int s = 0; s < rin; ++s) idx.push_back(label_str(op.in()[s], key::get(k, rin, s)));
    j["rows"].push_back({{"idx", idx}, {"image", to_json(Covector(op.out(), row))}});
  }
  return j;
}

std::vector<int> weight_of(const Signature& sig, key::Key k, int N) {
  std::vector<int> w(N / 2, 0);
  int r = int(sig.size());
  for (int s = 0; s < r; ++s) {
    int code = key::get(k, r, s);
    if (sig[s].kind == SiteKind::Reduced) code = embed_code(code);
    if (sig[s].kind == SiteKind::SU2) throw DimensionMismatch("weights are defined for O(N) sites");
    if (code < N / 2)
      w[code] += 1;
    else if (N - 1 - code < N / 2 && !(N % 2 == 1 && code == (N - 1) / 2))
      w[N - 1 - code] -= 1;
  }
  return w;
}

}  // namespace bethe
