#include <doctest.h>

#include "bethe/errors.hpp"
#include "bethe/tensor.hpp"

using namespace bethe;

namespace {
int lab(int N, const char* s) { return parse_label(full_site(N), s); }
}  // namespace

TEST_CASE("labels and conjugation") {
  Site v5 = full_site(5), v3 = full_site(3);
  CHECK(conj(v5, lab(5, "1")) == lab(5, "1b"));
  CHECK(label_str(v5, conj(v5, lab(5, "1"))) == "1\xcc\x84");
  CHECK(conj(v3, lab(3, "0")) == lab(3, "0"));
  CHECK(label_str(v5, 2) == "0");
  CHECK(label_str(full_site(6), 3) == "3\xcc\x84");
  CHECK(label_str(reduced_site(5), 0) == "2");
  CHECK_THROWS_AS(parse_label(v5, "7"), InvalidLabel);
  CHECK_THROWS_AS(conj(v5, 5), InvalidLabel);
}

TEST_CASE("key packing") {
  using namespace key;
  Key k = pack({1, 2, 3});
  CHECK(unpack(k, 3) == std::vector<int>{1, 2, 3});
  CHECK(get(k, 3, 0) == 1);
  CHECK(unpack(insert(k, 3, 1, 7), 4) == std::vector<int>{1, 7, 2, 3});
  CHECK(unpack(remove(k, 3, 0), 2) == std::vector<int>{2, 3});
  CHECK(unpack(swap(k, 3, 0, 2), 3) == std::vector<int>{3, 2, 1});
}

TEST_CASE("two-site P, K and identity") {
  Site v5 = full_site(5);
  Signature s2{v5, v5};
  Covector x12 = Covector::from_labels(s2, {0, 1});
  CHECK(two_site_op(TwoSite::P, v5).apply(x12) == Covector::from_labels(s2, {1, 0}));
  CHECK(two_site_op(TwoSite::K, v5).apply(x12).is_zero());
  CHECK(two_site_op(TwoSite::Identity, v5).apply(x12) == x12);
  // K on <1, 1bar| gives sum_g <g, gbar|
  Site v3 = full_site(3);
  Signature t2{v3, v3};
  Covector k = two_site_op(TwoSite::K, v3).apply(Covector::from_labels(t2, {0, 2}));
  CHECK(k.size() == 3);
  for (int g = 0; g < 3; ++g) CHECK(k.coeff({g, 2 - g}) == Rat(1));
}

TEST_CASE("operators at slots") {
  Site v5 = full_site(5);
  Signature s3(3, v5);
  Covector x = Covector::from_labels(s3, {0, 1, 2});
  CHECK(apply_at_slots(two_site_op(TwoSite::P, v5), {1, 2}, x) == Covector::from_labels(s3, {0, 2, 1}));
  CHECK(apply_at_slots(two_site_op(TwoSite::Identity, v5), {0, 2}, x) == x);
  CHECK(apply_at_slots(two_site_op(TwoSite::P, v5), {2, 0}, x) == Covector::from_labels(s3, {2, 1, 0}));
  CHECK_THROWS_AS(apply_at_slots(two_site_op(TwoSite::P, v5), {0, 3}, x), InvalidSlot);
  CHECK(swap_slots(x, 0, 2) == Covector::from_labels(s3, {2, 1, 0}));
  // id + 2P + 3K on <1, 1bar|
  Signature s2{v5, v5};
  Covector y = apply_pk(Covector::from_labels(s2, {0, 4}), 0, 1, 1, 2, 3);
  CHECK(y.coeff({0, 4}) == Rat(4));
  CHECK(y.coeff({4, 0}) == Rat(5));
  CHECK(y.coeff({2, 2}) == Rat(3));
}

TEST_CASE("projection and embedding") {
  Site v5 = full_site(5);
  CHECK(project_site(Covector::from_labels({v5}, {0}), 0).is_zero());
  Covector p = project_site(Covector::from_labels({v5}, {1}), 0);
  CHECK(p.sig()[0] == reduced_site(5));
  CHECK(p == Covector::from_labels({reduced_site(5)}, {0}));
  CHECK(embed_site(p, 0) == Covector::from_labels({v5}, {1}));
}

TEST_CASE("charge conjugation pairing") {
  Site v5 = full_site(5);
  CPairing c = c_pairing(v5);
  Signature s2{v5, v5};
  CHECK(c.lower.apply(Covector::from_labels(s2, {0, 4})).coeff(key::Key(0)) == Rat(1));
  CHECK(c.lower.apply(Covector::from_labels(s2, {0, 1})).is_zero());
  // full contraction of upper with lower is the trace of the identity
  CHECK(c.lower.apply(c.upper).coeff(key::Key(0)) == Rat(5));
  CHECK(contract_c(c.upper, 0, 1) == Covector::scalar(Rat(5)));
  Covector ins = insert_c_upper(Covector::from_labels({v5}, {3}), 0, v5);
  CHECK(ins.size() == 5);
  CHECK(ins.coeff({0, 4, 3}) == Rat(1));
}

TEST_CASE("covector arithmetic and slot edits") {
  Site v5 = full_site(5);
  Signature s2{v5, v5};
  Covector a = Covector::from_labels(s2, {0, 1}, Rat(2, 3));
  Covector b = Covector::from_labels(s2, {0, 1}, Rat(-2, 3));
  CHECK((a + b).is_zero());
  CHECK_THROWS_AS(a + Covector::from_labels({v5}, {0}), DimensionMismatch);
  Covector c = add_slot(a, v5, 4);
  CHECK(c.coeff({0, 1, 4}) == Rat(2, 3));
  CHECK(select_slot(c, 2, 4) == a);
  CHECK(select_slot(c, 2, 3).is_zero());
  CHECK(insert_slot(a, 1, v5, 2).coeff({0, 2, 1}) == Rat(2, 3));
  CHECK(permute_slots(c, {2, 0, 1}).coeff({4, 0, 1}) == Rat(2, 3));
}

TEST_CASE("linear operators") {
  Site v3 = full_site(3);
  Signature s2{v3, v3};
  LinOp p = two_site_op(TwoSite::P, v3);
  CHECK(p.then(p) == LinOp::identity(s2));
  LinOp k = two_site_op(TwoSite::K, v3);
  // K K = N K
  CHECK(k.then(k) == k.scaled(Rat(3)));
  CHECK((p - p).is_zero());
}

TEST_CASE("weights of basis multi-indices") {
  Signature s{full_site(5), full_site(5), reduced_site(5)};
  // labels 1, 2bar, reduced 2
  CHECK(weight_of(s, key::pack({0, 3, 0}), 5) == std::vector<int>{1, 0});
  CHECK(weight_of({full_site(4)}, key::pack({1}), 4) == std::vector<int>{0, 1});
  CHECK(weight_of({full_site(4)}, key::pack({2}), 4) == std::vector<int>{0, -1});
}

TEST_CASE("json round trip") {
  Signature s{full_site(5), reduced_site(5)};
  Covector x = Covector::from_labels(s, {4, 2}, Rat(-7, 9)) + Covector::from_labels(s, {0, 1}, Rat(1, 2));
  CHECK(covector_from_json(to_json(x)) == x);
}
