#include <doctest.h>

#include <map>

#include "novik/kunneth.hpp"
#include "novik/random_complexes.hpp"
#include "support.hpp"

using namespace novik;

namespace {

NovikovScalar S(const char* text) { return NovikovScalar::parse(text); }

RandomComplexOptions small() {
    RandomComplexOptions o;
    o.max_generators = 3;
    o.max_degree = 2;
    return o;
}

// Canonical form of a complex after renaming labels.
std::map<std::string, std::pair<std::string, int>> shape(const FilteredComplex& c,
                                                         const std::map<std::string, std::string>& rename) {
    std::map<std::string, std::pair<std::string, int>> out;
    for (const auto& g : c.generators()) out[rename.at(g.label)] = {g.level.str(), g.degree};
    return out;
}

std::map<std::pair<std::string, std::string>, std::string> arrows(const FilteredComplex& c,
                                                                  const std::map<std::string, std::string>& rename) {
    std::map<std::pair<std::string, std::string>, std::string> out;
    for (const auto& e : c.entries()) out[{rename.at(e.from), rename.at(e.to)}] = e.coefficient.str();
    return out;
}

}  // namespace

TEST_CASE("tensor of two elementary complexes") {
    const FilteredComplex a({{"x", Exponent(3), 1}, {"y", Exponent(1), 0}}, {{"x", "y", S("1")}});
    const FilteredComplex b({{"u", Exponent(1, 2), 0}}, {});
    const FilteredComplex t = tensor(a, b);
    CHECK(t.size() == 2);
    CHECK(t.generator("(x|u)").level == Exponent(7, 2));
    CHECK(t.generator("(y|u)").degree == 0);
    CHECK(t.d("(x|u)") == Chain{{"(y|u)", S("1")}});
    CHECK(validate(t).ok());
    CHECK(tensor_chain(Chain{{"y", S("t^{1}")}}, Chain{{"u", S("1+t^{2}")}}) ==
          Chain{{"(y|u)", S("t^{1}+t^{3}")}});
}

TEST_CASE("tensor products are valid complexes and associative up to relabelling") {
    Rng rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_complex(rng, small()).complex;
        const auto b = random_complex(rng, small()).complex;
        const auto c = random_complex(rng, small()).complex;
        const auto left = tensor(tensor(a, b), c);
        const auto right = tensor(a, tensor(b, c));
        CHECK(validate(left).ok());
        CHECK(validate(right).ok());
        std::map<std::string, std::string> rl;
        std::map<std::string, std::string> rr;
        for (const auto& x : a.generators()) {
            for (const auto& y : b.generators()) {
                for (const auto& z : c.generators()) {
                    const std::string key = x.label + "," + y.label + "," + z.label;
                    rl[pair_label(pair_label(x.label, y.label), z.label)] = key;
                    rr[pair_label(x.label, pair_label(y.label, z.label))] = key;
                }
            }
        }
        CHECK(shape(left, rl) == shape(right, rr));
        CHECK(arrows(left, rl) == arrows(right, rr));
    }
}

TEST_CASE("product formula on small examples") {
    // Single cycles: c is the level.
    const FilteredComplex a({{"p", Exponent(1), 0}}, {});
    const FilteredComplex b({{"q", Exponent(-3, 4), 0}}, {});
    const auto r = verify_product_formula(a, Chain{{"p", S("1")}}, b, Chain{{"q", S("t^{1}")}});
    CHECK(r.holds);
    CHECK(r.c_product == ExtendedRational(Rational(-3, 4)));
    // An exact factor makes the product exact.
    const FilteredComplex e({{"x", Exponent(3), 1}, {"y", Exponent(1), 0}}, {{"x", "y", S("1")}});
    const auto r2 = verify_product_formula(e, Chain{{"y", S("1")}}, b, Chain{{"q", S("1")}});
    CHECK(r2.holds);
    CHECK(r2.c_product.is_neg_inf());
}

TEST_CASE("direct sums: labels, chains and the max formula") {
    const FilteredComplex a({{"x", Exponent(3), 1}, {"y", Exponent(1), 0}}, {{"x", "y", S("1")}});
    const FilteredComplex b({{"x", Exponent(5), 1}, {"y", Exponent(0), 0}}, {{"x", "y", S("t^{1/2}")}});
    const auto s = direct_sum(a, b);
    CHECK(s.has("1:x"));
    CHECK(s.has("2:y"));
    CHECK(summand_chain(Chain{{"y", S("1")}}, 2) == Chain{{"2:y", S("1")}});
    const auto m = verify_max_formula(a, b);
    CHECK(m.holds);
    CHECK(m.barcode_union);
    CHECK(m.beta_sum == Exponent(11, 2));
    Rng rng(10);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = random_complex(rng).complex;
        const auto y = random_complex(rng).complex;
        const auto v = verify_max_formula(x, y);
        CHECK(v.holds);
        CHECK(v.barcode_union);
    }
}
