#include "lef/systems.hpp"

#include <string>

#include "lef/error.hpp"

namespace lef {

  Alphabet const& acebx() {
    static Alphabet const A("acebx");
    return A;
  }

  namespace {
    std::vector<RuleSchema> commutations() {
      return {RuleSchema::parse("1a", "x b", "c x", ""),
              RuleSchema::parse("1b", "c a", "a c", ""),
              RuleSchema::parse("1c", "e a", "a e", ""),
              RuleSchema::parse("1d", "e c", "c e", "")};
    }
  }  // namespace

  RewriteSystem const& q_system() {
    static RewriteSystem const Q = [] {
      auto s = commutations();
      s.push_back(RuleSchema::parse("2",
                                    "x a^alpha c^beta",
                                    "x a^(alpha-beta) e^beta",
                                    "0<beta<=alpha"));
      s.push_back(RuleSchema::parse("3",
                                    "x a^alpha c^beta",
                                    "x c^(beta-alpha) e^alpha",
                                    "0<alpha<beta"));
      s.push_back(RuleSchema::parse("4",
                                    "a^alpha c^beta e^gamma x",
                                    "a^alpha c^beta x",
                                    "alpha>0; beta>=0; gamma>0"));
      s.push_back(RuleSchema::parse("5", "x e^gamma x", "x e x", "gamma>1"));
      s.push_back(RuleSchema::parse("6",
                                    "x c^beta e^gamma x",
                                    "x c^beta e x",
                                    "beta>0; gamma>1"));
      s.push_back(RuleSchema::parse("7",
                                    "x a^alpha c^beta e^gamma x",
                                    "x a^(alpha-beta) x",
                                    "0<=beta<alpha; gamma>=0; beta+gamma>0"));
      s.push_back(RuleSchema::parse("8",
                                    "x a^alpha c^beta e^gamma x",
                                    "x e x",
                                    "0<alpha=beta; gamma>=0"));
      s.push_back(RuleSchema::parse("9",
                                    "x a^alpha c^beta e^gamma x",
                                    "x c^(beta-alpha) e x",
                                    "0<alpha<beta; gamma>=0"));
      return RewriteSystem("Q", acebx(), std::move(s));
    }();
    return Q;
  }

  RewriteSystem fn_system(long n) {
    if (n < 1) {
      throw Error("F_n requires n >= 1, got " + std::to_string(n));
    }
    auto s = commutations();
    s.push_back(RuleSchema::parse("2a", "a^(2n+1)", "a", ""));
    s.push_back(RuleSchema::parse("2b", "b^(2n+1)", "b", ""));
    s.push_back(RuleSchema::parse("2c", "c^(2n+1)", "c", ""));
    s.push_back(RuleSchema::parse("2d", "e^(2n+1)", "e", ""));
    s.push_back(RuleSchema::parse("3",
                                  "x a^alpha c^beta",
                                  "x a^(alpha-beta) e^beta",
                                  "0<beta<=alpha<=2n"));
    s.push_back(RuleSchema::parse("4",
                                  "x a^alpha c^beta",
                                  "x c^(beta-alpha) e^alpha",
                                  "0<alpha<beta<=2n"));
    s.push_back(RuleSchema::parse("5",
                                  "x a^alpha c^beta e^gamma",
                                  "x c^(2n+beta-alpha) e^(alpha+gamma-2n)",
                                  "0<alpha<=2n; 0<gamma<=2n; 0<=beta<=2n; "
                                  "alpha+gamma>2n; gamma+beta<=2n"));
    s.push_back(RuleSchema::parse("6",
                                  "x a^alpha c^beta e^gamma",
                                  "x a^(2n+alpha-beta) e^(beta+gamma-2n)",
                                  "0<beta<=2n; 0<gamma<=2n; 0<=alpha<=2n; "
                                  "alpha+gamma<=2n; gamma+beta>2n"));
    char const* big = "0<alpha<=2n; 0<beta<=2n; 0<gamma<=2n; alpha+gamma>2n; gamma+beta>2n; ";
    s.push_back(RuleSchema::parse("7",
                                  "x a^alpha c^beta e^gamma",
                                  "x a^(alpha-beta) e^(beta+gamma-2n)",
                                  std::string(big) + "alpha>beta"));
    s.push_back(RuleSchema::parse("8",
                                  "x a^alpha c^beta e^gamma",
                                  "x e^(beta+gamma-2n)",
                                  std::string(big) + "alpha=beta"));
    s.push_back(RuleSchema::parse("9",
                                  "x a^alpha c^beta e^gamma",
                                  "x c^(beta-alpha) e^(alpha+gamma-2n)",
                                  std::string(big) + "beta>alpha"));
    s.push_back(RuleSchema::parse("10",
                                  "a^alpha c^beta e^gamma x",
                                  "a^alpha c^beta x",
                                  "0<alpha<=2n; 0<gamma<=2n; 0<=beta<=2n"));
    s.push_back(RuleSchema::parse("11", "x e^gamma x", "x e x", "1<gamma<=2n"));
    s.push_back(RuleSchema::parse("12",
                                  "x c^beta e^gamma x",
                                  "x c^beta e x",
                                  "0<beta<n; 1<gamma<=2n"));
    s.push_back(RuleSchema::parse("13a",
                                  "x c^beta e^gamma x",
                                  "x a^(2n-beta) x",
                                  "n<=beta<2n; 0<gamma<=2n"));
    s.push_back(RuleSchema::parse("13b",
                                  "x c^(2n) e^gamma x",
                                  "x e x",
                                  "0<gamma<=2n"));
    s.push_back(RuleSchema::parse("14",
                                  "x a^alpha c^beta e^gamma x",
                                  "x a^(alpha-beta) x",
                                  "0<alpha-beta<=n; 0<alpha<=2n; 0<=beta<=2n; "
                                  "0<=gamma<=2n; beta+gamma>0"));
    s.push_back(RuleSchema::parse("15",
                                  "x a^alpha c^beta e^gamma x",
                                  "x c^(2n-alpha+beta) e x",
                                  "n<alpha-beta<=2n; 0<alpha<=2n; 0<=beta<=2n; 0<=gamma<=2n"));
    s.push_back(RuleSchema::parse("16",
                                  "x a^alpha c^beta e^gamma x",
                                  "x e x",
                                  "0<alpha=beta<=2n; 0<=gamma<=2n"));
    s.push_back(RuleSchema::parse("17",
                                  "x a^alpha c^beta e^gamma x",
                                  "x c^(beta-alpha) e x",
                                  "0<beta-alpha<n; 0<alpha<=2n; 0<beta<=2n; 0<=gamma<=2n"));
    s.push_back(RuleSchema::parse("18",
                                  "x a^alpha c^beta e^gamma x",
                                  "x a^(2n-beta+alpha) x",
                                  "n<=beta-alpha<2n; 0<alpha<=2n; 0<beta<=2n; 0<=gamma<=2n"));
    return RewriteSystem("F_" + std::to_string(n), acebx(), std::move(s), n);
  }

  RewriteSystem sm_system(long m) {
    if (m < 2) {
      throw Error("S_m requires m >= 2, got " + std::to_string(m));
    }
    std::vector<RuleSchema> s{
        RuleSchema::parse("em", "e^" + std::to_string(m), "e", "")};
    return RewriteSystem("S_" + std::to_string(m), acebx(), std::move(s));
  }

}  // namespace lef
