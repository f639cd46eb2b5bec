#include <algorithm>

#include "brieskorn/families.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace brieskorn;

namespace {

std::int64_t oracle_d(const Triple& t) {
    if (!t.odd_p()) return (t.q() + t.r()) / 4;
    return oracle::brute_d({t.p(), t.q(), t.r()}).value;
}

void expect_triple(const Triple& t, std::int64_t p, std::int64_t q, std::int64_t r) {
    EXPECT_EQ(t.p(), p);
    EXPECT_EQ(t.q(), q);
    EXPECT_EQ(t.r(), r);
}

}  // namespace

TEST(Families, RegistryNames) {
    std::vector<std::string> names;
    for (const auto& f : families()) names.push_back(f.name);
    const std::vector<std::string> want{"ks20-1", "ks20-2", "ks20-3", "ks20-4",     "ks20-5",    "alpha0",
                                        "su",     "exm1",   "exm2",   "fib",        "pretzel-a", "pretzel-b",
                                        "pretzel-c1", "pretzel-c2"};
    EXPECT_EQ(names, want);
    EXPECT_EQ(family("fib").params.front().min, 2);
    EXPECT_EQ(family("exm1").kind, PredictionKind::lower_bound);
    EXPECT_TRUE(family("pretzel-a").odd_entries);
    EXPECT_EQ(code_of([] { family("nope"); }), Errc::invalid_input);
}

TEST(Families, InstanceExamples) {
    auto check = [](const char* name, const Params& p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        const FamilyInstance inst = family_instance(name, p);
        expect_triple(inst.triple, a, b, c);
        EXPECT_EQ(inst.prediction.value, d) << name;
    };
    check("ks20-1", {{"n", 1}}, 3, 5, 7, 2);
    check("ks20-1", {{"n", 2}}, 5, 9, 11, 4);
    check("ks20-4", {{"n", 1}}, 7, 9, 31, 8);
    check("ks20-5", {{"n", 1}}, 3, 4, 11, 2);
    check("alpha0", {{"k1", 1}, {"k2", 1}}, 3, 4, 11, 2);
    check("su", {{"u", 1}, {"v", 1}}, 5, 7, 17, 4);
    check("pretzel-a", {{"k", 1}, {"l", 1}}, 5, 7, 17, 4);
    check("fib", {{"k", 2}}, 5, 8, 13, 4);
    check("fib", {{"k", 4}}, 34, 55, 89, 36);
    check("fib", {{"k", 5}}, 89, 144, 233, 90);

    const FamilyInstance e1 = family_instance("exm1", {{"t", 1}, {"k", 1}});
    expect_triple(e1.triple, 17, 29, 41);
    EXPECT_EQ(e1.prediction.kind, PredictionKind::lower_bound);
    EXPECT_EQ(e1.prediction.strict_over, 16);
    EXPECT_EQ(e1.prediction.f34_closed, 12);
    EXPECT_EQ(e1.prediction.f34, 12);
}

TEST(Families, DomainAndParameterErrors) {
    EXPECT_EQ(code_of([] { family_instance("ks20-1", {{"n", 0}}); }), Errc::domain);
    EXPECT_EQ(code_of([] { family_instance("exm1", {{"t", 2}, {"k", 1}}); }), Errc::domain);
    EXPECT_EQ(code_of([] { family_instance("exm2", {{"t", 3}, {"k", 1}}); }), Errc::domain);
    EXPECT_EQ(code_of([] { family_instance("exm2", {{"t", 4}, {"k", 1}}); }), Errc::domain);
    EXPECT_EQ(code_of([] { family_instance("fib", {{"k", 1}}); }), Errc::domain);
    EXPECT_EQ(code_of([] { family_instance("ks20-1", {}); }), Errc::invalid_input);
    EXPECT_EQ(code_of([] { family_instance("ks20-1", {{"n", 1}, {"m", 1}}); }), Errc::invalid_input);
    EXPECT_EQ(code_of([] { family_instance("ks20-1", {{"n", 3'000'000'000'000'000'000}}); }), Errc::overflow);
}

TEST(Families, ExceptionalPoints) {
    ASSERT_EQ(exceptional_cases().size(), 3u);
    for (const auto& c : exceptional_cases()) {
        const FamilyInstance inst = exceptional_instance(c.family, c.params);
        EXPECT_EQ(inst.prediction.value, oracle_d(inst.triple)) << c.family;
        EXPECT_EQ(inst.prediction.value, inst.triple.p() - 1);
    }
    EXPECT_EQ(code_of([] { exceptional_instance("exm1", {{"t", 1}, {"k", 1}}); }), Errc::domain);
}

TEST(Families, ExactPredictionsMatchOracle) {
    for (const auto& f : families()) {
        if (f.kind != PredictionKind::exact) continue;
        for (std::int64_t a = f.params[0].min; a <= 12; ++a)
            for (std::int64_t b = 1; b <= (f.params.size() > 1 ? 12 : 1); ++b) {
                Params p{{f.params[0].name, a}};
                if (f.params.size() > 1) p[f.params[1].name] = b;
                const FamilyInstance inst = family_instance(f.name, p);
                if (inst.triple.p() > 500) continue;
                if (inst.prediction.strict_over) {
                    EXPECT_GT(oracle_d(inst.triple), *inst.prediction.strict_over);
                }
                ASSERT_EQ(inst.prediction.value, oracle_d(inst.triple)) << f.name << " " << inst.triple;
            }
    }
}

TEST(Families, TriplesGrowInEachParameter) {
    for (const auto& f : families()) {
        if (f.name == "fib") continue;
        for (std::size_t which = 0; which < f.params.size(); ++which)
            for (std::int64_t base = 1; base <= 6; ++base) {
                Params lo, hi;
                for (const auto& s : f.params) lo[s.name] = hi[s.name] = std::max<std::int64_t>(s.min, 2) * 2;
                lo[f.params[which].name] = base * 2;
                hi[f.params[which].name] = base * 2 + 2;
                const Triple a = family_instance(f.name, lo).triple;
                const Triple b = family_instance(f.name, hi).triple;
                EXPECT_LT(a.p(), b.p()) << f.name;
                EXPECT_LT(a.q(), b.q()) << f.name;
                EXPECT_LT(a.r(), b.r()) << f.name;
            }
    }
}

TEST(Families, F34ClosedFormsHold) {
    for (const char* name : {"exm1", "exm2", "pretzel-c1", "pretzel-c2"})
        for (std::int64_t t = 1; t <= 12; ++t)
            for (std::int64_t k = 0; k <= 12; ++k) {
                const Params p{{"t", t}, {"k", k}};
                FamilyInstance inst{make_triple(2, 3), {}};
                try {
                    inst = family_instance(name, p);
                } catch (const Error& e) {
                    ASSERT_EQ(e.code(), Errc::domain);
                    continue;
                }
                const Triple& tr = inst.triple;
                const auto f4 = oracle::scaled_F({tr.p(), tr.q(), tr.r()}, 3, 4);
                ASSERT_EQ(f4 % (4 * (tr.q() - tr.p())), 0);
                EXPECT_EQ(*inst.prediction.f34_closed, static_cast<std::int64_t>(f4 / (4 * (tr.q() - tr.p()))))
                    << name << " " << tr;
            }
}

TEST(Families, ExmStrictGapOpensAtLargerT) {
    // t = 1 (exm1) and t <= 2 (exm2) only reach the bound p - 1
    for (std::int64_t k = 1; k <= 5; ++k) {
        const Triple a = family_instance("exm1", {{"t", 1}, {"k", k}}).triple;
        EXPECT_EQ(oracle_d(a), a.p() - 1);
        const Triple b = family_instance("exm2", {{"t", 2}, {"k", k}}).triple;
        EXPECT_EQ(oracle_d(b), b.p() - 1);
    }
    for (std::int64_t t = 3; t <= 6; ++t)
        for (std::int64_t k = 1; k <= 4; ++k) {
            const Triple a = family_instance("exm1", {{"t", t}, {"k", k}}).triple;
            if (a.p() <= 400) {
                EXPECT_GT(oracle_d(a), a.p() - 1) << a;
            }
        }
}

TEST(VerifyFamily, ExactFamiliesPass) {
    const VerificationReport r = verify_family("ks20-4", {{"n", {1, 20}}});
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.passed, 20u);
    EXPECT_EQ(r.records.size(), 20u);
    const VerificationReport su = verify_family("su", {{"u", {1, 5}}, {"v", {1, 5}}}, {2000, 4});
    EXPECT_TRUE(su.ok());
    EXPECT_EQ(su.passed, 25u);
    EXPECT_EQ(su.range, "u in [1, 5], v in [1, 5]");
}

TEST(VerifyFamily, SkipsDomainViolations) {
    const VerificationReport r = verify_family("exm2", {{"t", {3, 4}}, {"k", {1, 2}}});
    EXPECT_EQ(r.records.size(), 1u);
    EXPECT_EQ(r.skipped.size(), 3u);
    EXPECT_EQ(r.records.front().label, "t=4,k=2");
    EXPECT_EQ(code_of([] { verify_family("exm2", {{"z", {1, 2}}}); }), Errc::invalid_input);
    EXPECT_EQ(code_of([] { verify_family("exm2", {{"t", {3, 2}}}); }), Errc::invalid_input);
}

TEST(VerifyFamily, ReportsCounterexamples) {
    const VerificationReport r = verify_family("exm1", {{"t", {1, 1}}, {"k", {1, 3}}});
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.counterexamples.size(), 3u);
}

TEST(VerifyFamily, RefinedOnlyAboveBudget) {
    const VerificationReport r = verify_family("ks20-1", {{"n", {1, 30}}}, {21, 1});
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.refined_only, 20u);
}

TEST(VerifyFamily, TruncatesOnOverflow) {
    const VerificationReport r = verify_family("fib", {{"k", {80, 95}}});
    EXPECT_TRUE(r.truncated);
    EXPECT_FALSE(r.truncation.empty());
}

TEST(VerifyTheorem, SuitesPassOnSmallRange) {
    for (const auto& s : theorem_suites()) {
        const VerificationReport r = verify_theorem(s, 120, {2000, 4});
        EXPECT_TRUE(r.ok()) << s;
        EXPECT_FALSE(r.records.empty()) << s;
    }
    EXPECT_EQ(code_of([] { verify_theorem("nope", 10); }), Errc::invalid_input);
}

TEST(VerifyTheorem, ClampsToOracleBudget) {
    const VerificationReport r = verify_theorem("thm-1-19", 200, {101, 1});
    EXPECT_TRUE(r.truncated);
    for (const auto& rec : r.records) EXPECT_LE(rec.triple->p(), 101);
}

TEST(Fibonacci, Cases) {
    const FibonacciCase k2 = fibonacci_case(2);
    EXPECT_EQ(k2.d.value, 4);
    EXPECT_EQ(k2.expectation, "d=D");
    EXPECT_TRUE(k2.verdict);
    const FibonacciCase k4 = fibonacci_case(4);
    EXPECT_EQ(k4.d.value, 36);
    EXPECT_EQ(k4.expectation, "d=F/4");
    const FibonacciCase k5 = fibonacci_case(5);
    EXPECT_EQ(k5.d.value, 90);
    EXPECT_EQ(k5.D, 88);
    EXPECT_EQ(k5.expectation, "d>D");
    EXPECT_TRUE(k5.verdict);
    for (int k = 2; k <= 9; ++k) {
        const FibonacciCase c = fibonacci_case(k);
        EXPECT_TRUE(c.verdict) << k;
        EXPECT_EQ(c.d.value, oracle_d(c.triple)) << k;
    }
    EXPECT_EQ(code_of([] { fibonacci_case(1); }), Errc::domain);
}

TEST(Cobordism, DistinguishesByD) {
    const CobordismVerdict v = compare_cobordism(make_triple(89, 144), make_triple(89, 133));
    EXPECT_EQ(v.d_a, 90);
    EXPECT_EQ(v.d_b, oracle_d(make_triple(89, 133)));
    EXPECT_EQ(v.distinguished(), v.d_a != v.d_b);
    const CobordismVerdict same = compare_cobordism(make_triple(3, 4), make_triple(3, 4));
    EXPECT_EQ(same.verdict(), "inconclusive");
}

TEST(Pretzel, AlexanderCondition) {
    EXPECT_TRUE(pretzel_alexander_trivial(3, 5, 7));
    EXPECT_TRUE(pretzel_alexander_trivial(make_triple(5, 9)));
    EXPECT_FALSE(pretzel_alexander_trivial(3, 5, 9));
    EXPECT_EQ(code_of([] { pretzel_alexander_trivial(make_triple(89, 144)); }), Errc::parity);
    for (const char* name : {"pretzel-a", "pretzel-b"})
        for (std::int64_t a = 1; a <= 6; ++a)
            for (std::int64_t b = 1; b <= 6; ++b) {
                const auto& f = family(name);
                const Triple t = family_instance(name, {{f.params[0].name, a}, {f.params[1].name, b}}).triple;
                EXPECT_EQ(t.p() % 2 * t.q() % 2 * t.r() % 2, 1) << t;
                EXPECT_TRUE(pretzel_alexander_trivial(t));
            }
}
