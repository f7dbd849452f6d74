#include "lef/appendix.hpp"

#include <algorithm>
#include <mutex>

#include "lef/error.hpp"
#include "lef/parallel.hpp"
#include "lef/systems.hpp"

namespace lef {

  namespace {

    // clang-format off
    std::vector<AppendixRow> const TABLE_A = {
      // first rule xb -> cx
      {"A01", "1a", "4", "-", "alpha>0; beta>=0; gamma>0",
       "a^alpha c^beta e^gamma x b", "a^alpha c^beta e^gamma c x", "a^alpha c^beta x b", "a^alpha c^(beta+1) x", ""},
      {"A02", "1a", "5", "-", "gamma>1",
       "x e^gamma x b", "x e^gamma c x", "x e x b", "x c e x", ""},
      {"A03", "1a", "6", "-", "beta>0; gamma>1",
       "x c^beta e^gamma x b", "x c^beta e^gamma c x", "x c^beta e x b", "x c^(beta+1) e x",
       "t1 tabulated as x c^beta e^gamma x c x"},
      {"A04", "1a", "7", "alpha>beta+1", "beta>=0; alpha>beta+1; gamma>=0; beta+gamma>0",
       "x a^alpha c^beta e^gamma x b", "x a^alpha c^beta e^gamma c x", "x a^(alpha-beta) x b", "x a^(alpha-beta-1) x", ""},
      {"A05", "1a", "7", "alpha=beta+1", "beta>=0; alpha=beta+1; gamma>=0; beta+gamma>0",
       "x a^alpha c^beta e^gamma x b", "x a^alpha c^beta e^gamma c x", "x a x b", "x e x", ""},
      {"A06", "1a", "8", "alpha=beta", "0<alpha=beta; gamma>=0",
       "x a^alpha c^beta e^gamma x b", "x a^alpha c^beta e^gamma c x", "x e x b", "x c e x", ""},
      {"A07", "1a", "9", "alpha<beta", "0<alpha<beta; gamma>=0",
       "x a^alpha c^beta e^gamma x b", "x a^alpha c^beta e^gamma c x", "x c^(beta-alpha) e x b", "x c^(beta-alpha+1) e x", ""},
      // first rule ca -> ac
      {"A08", "1b", "1d", "-", "",
       "e c a", "e a c", "c e a", "a c e", ""},
      {"A09", "1b", "2", "alpha>=beta", "0<beta<=alpha",
       "x a^alpha c^beta a", "x a^alpha c^(beta-1) a c", "x a^(alpha-beta) e^beta a", "x a^(alpha-beta+1) e^beta", ""},
      {"A10", "1b", "3", "alpha<beta", "0<alpha<beta",
       "x a^alpha c^beta a", "x a^alpha c^(beta-1) a c", "x c^(beta-alpha) e^alpha a", "x c^(beta-alpha-1) e^(alpha+1)", ""},
      {"A11", "1b", "4", "-", "alpha>0; beta>=0; gamma>0",
       "c a^alpha c^beta e^gamma x", "a c a^(alpha-1) c^beta e^gamma x", "c a^alpha c^beta x", "a^alpha c^(beta+1) x", ""},
      // first rule ea -> ae
      {"A12", "1c", "4", "-", "alpha>0; beta>=0; gamma>0",
       "e a^alpha c^beta e^gamma x", "a e a^(alpha-1) c^beta e^gamma x", "e a^alpha c^beta x", "a^alpha c^beta x", ""},
      // first rule x a^alpha c^beta -> x a^(alpha-beta) e^beta
      {"A13", "2", "2", "-", "0<beta2<beta<=alpha",
       "x a^alpha c^beta", "x a^(alpha-beta) e^beta", "x a^(alpha-beta2) e^beta2 c^(beta-beta2)", "x a^(alpha-beta) e^beta", ""},
      {"A14", "2", "3", "-", "0<beta<=alpha<beta2",
       "x a^alpha c^beta2", "x a^(alpha-beta) e^beta c^(beta2-beta)", "x c^(beta2-alpha) e^alpha", "x c^(beta2-alpha) e^alpha", ""},
      {"A15", "2", "4", "alpha>beta", "0<beta<alpha; gamma>0",
       "x a^alpha c^beta e^gamma x", "x a^(alpha-beta) e^(beta+gamma) x", "x a^alpha c^beta x", "x a^(alpha-beta) x", ""},
      {"A16", "2", "4", "alpha=beta", "0<beta=alpha; gamma>0",
       "x a^alpha c^beta e^gamma x", "x a^(alpha-beta) e^(beta+gamma) x", "x a^alpha c^beta x", "x e x", ""},
      {"A17", "2", "7", "-", "0<beta<=beta2<alpha; gamma>=0",
       "x a^alpha c^beta2 e^gamma x", "x a^(alpha-beta) e^beta c^(beta2-beta) e^gamma x", "x a^(alpha-beta2) x", "x a^(alpha-beta2) x", ""},
      {"A18", "2", "8", "-", "0<beta<=beta2; beta2=alpha; gamma>=0",
       "x a^alpha c^beta2 e^gamma x", "x a^(alpha-beta) e^beta c^(beta2-beta) e^gamma x", "x e x", "x e x", ""},
      {"A19", "2", "9", "-", "0<beta<=alpha<beta2; gamma>=0",
       "x a^alpha c^beta2 e^gamma x", "x a^(alpha-beta) e^beta c^(beta2-beta) e^gamma x", "x c^(beta2-alpha) e x", "x c^(beta2-alpha) e x", ""},
      // first rule x a^alpha c^beta -> x c^(beta-alpha) e^alpha
      {"A20", "3", "3", "-", "0<alpha<beta<beta2",
       "x a^alpha c^beta2", "x c^(beta-alpha) e^alpha c^(beta2-beta)", "x c^(beta2-alpha) e^alpha", "x c^(beta2-alpha) e^alpha", ""},
      {"A21", "3", "4", "-", "0<alpha<beta; gamma>0",
       "x a^alpha c^beta e^gamma x", "x c^(beta-alpha) e^(alpha+gamma) x", "x a^alpha c^beta x", "x c^(beta-alpha) e x", ""},
      {"A22", "3", "9", "-", "0<alpha<beta<=beta2; gamma>=0",
       "x a^alpha c^beta2 e^gamma x", "x c^(beta-alpha) e^alpha c^(beta2-beta) e^gamma x", "x c^(beta2-alpha) e x", "x c^(beta2-alpha) e x", ""},
      // first rule a^alpha c^beta e^gamma x -> a^alpha c^beta x
      {"A23", "4", "4", "-", "0<alpha<alpha2; beta>=0; gamma>0",
       "a^alpha2 c^beta e^gamma x", "a^alpha2 c^beta x", "a^alpha2 c^beta x", "a^alpha2 c^beta x", ""},
      {"A24", "4", "7", "-", "0<alpha<=alpha2; 0<=beta<alpha2; gamma>0",
       "x a^alpha2 c^beta e^gamma x", "x a^alpha2 c^beta x", "x a^(alpha2-beta) x", "x a^(alpha2-beta) x", ""},
      {"A25", "4", "8", "-", "0<alpha<=alpha2; alpha2=beta; gamma>0",
       "x a^alpha2 c^beta e^gamma x", "x a^alpha2 c^beta x", "x e x", "x e x", ""},
      {"A26", "4", "9", "-", "0<alpha<=alpha2<beta; gamma>0",
       "x a^alpha2 c^beta e^gamma x", "x a^alpha2 c^beta x", "x c^(beta-alpha2) e x", "x c^(beta-alpha2) e x", ""},
    };

    std::string const R5 = "0<alpha<=2n; 0<gamma<=2n; 0<=beta<=2n; alpha+gamma>2n; gamma+beta<=2n; ";
    std::string const R6 = "0<beta<=2n; 0<gamma<=2n; 0<=alpha<=2n; alpha+gamma<=2n; gamma+beta>2n; ";
    std::string const RB = "0<alpha<=2n; 0<beta<=2n; 0<gamma<=2n; alpha+gamma>2n; gamma+beta>2n; ";
    std::string const R14 = "0<alpha<=2n; 0<=beta<=2n; 0<=gamma<=2n; ";
    std::string const R17 = "0<alpha<=2n; 0<beta<=2n; 0<=gamma<=2n; ";

    std::string const XACEA  = "x a^alpha c^beta e^gamma a";
    std::string const XACEA1 = "x a^alpha c^beta e^(gamma-1) a e";
    std::string const XACEC  = "x a^alpha c^beta e^gamma c";
    std::string const XACEC1 = "x a^alpha c^beta e^(gamma-1) c e";
    std::string const XACEXB = "x a^alpha c^beta e^gamma x b";
    std::string const XACECX = "x a^alpha c^beta e^gamma c x";

    std::vector<AppendixRow> const TABLE_B = {
      // first rule xb -> cx
      {"B01", "1a", "2b", "-", "", "x b^(2n+1)", "c x b^(2n)", "x b", "c x", ""},
      {"B02", "1a", "10", "beta<2n", "0<alpha<=2n; 0<gamma<=2n; 0<=beta<2n",
       "a^alpha c^beta e^gamma x b", "a^alpha c^beta e^gamma c x", "a^alpha c^beta x b", "a^alpha c^(beta+1) x", ""},
      {"B03", "1a", "10", "beta=2n", "0<alpha<=2n; 0<gamma<=2n; beta=2n",
       "a^alpha c^beta e^gamma x b", "a^alpha c^beta e^gamma c x", "a^alpha c^beta x b", "a^alpha c x", ""},
      {"B04", "1a", "11", "-", "1<gamma<=2n", "x e^gamma x b", "x e^gamma c x", "x e x b", "x c e x", ""},
      {"B05", "1a", "12", "beta<n-1", "0<beta<n-1; 1<gamma<=2n",
       "x c^beta e^gamma x b", "x c^beta e^gamma c x", "x c^beta e x b", "x c^(beta+1) e x", ""},
      {"B06", "1a", "12", "beta=n-1", "0<beta=n-1; 1<gamma<=2n",
       "x c^beta e^gamma x b", "x c^beta e^gamma c x", "x c^beta e x b", "x a^n x", ""},
      {"B07", "1a", "13a", "n<=beta<2n-1", "n<=beta<2n-1; 0<gamma<=2n",
       "x c^beta e^gamma x b", "x c^beta e^gamma c x", "x a^(2n-beta) x b", "x a^(2n-beta-1) x", ""},
      {"B08", "1a", "13a", "beta=2n-1", "n<=beta=2n-1; 0<gamma<=2n",
       "x c^beta e^gamma x b", "x c^beta e^gamma c x", "x a x b", "x e x", ""},
      {"B09", "1a", "13b", "beta=2n", "beta=2n; 0<gamma<=2n",
       "x c^beta e^gamma x b", "x c^beta e^gamma c x", "x e x b", "x c e x", ""},
      {"B10", "1a", "14", "1<alpha-beta<=n", R14 + "1<alpha-beta<=n; beta+gamma>0",
       XACEXB, XACECX, "x a^(alpha-beta) x b", "x a^(alpha-beta-1) x", ""},
      {"B11", "1a", "14", "1=alpha-beta", R14 + "alpha-beta=1; beta+gamma>0",
       XACEXB, XACECX, "x a x b", "x e x", ""},
      {"B12", "1a", "15", "n+1=alpha-beta", R14 + "alpha-beta=n+1",
       XACEXB, XACECX, "x c^(n-1) e x b", "x a^n x", ""},
      {"B13", "1a", "15", "n+1<alpha-beta<=2n", R14 + "n+1<alpha-beta<=2n",
       XACEXB, XACECX, "x c^(2n-alpha+beta) e x b", "x c^(2n-alpha+beta+1) e x", ""},
      {"B14", "1a", "16", "alpha=beta", "0<alpha=beta<=2n; 0<=gamma<=2n",
       XACEXB, XACECX, "x e x b", "x c e x", ""},
      {"B15", "1a", "17", "0<beta-alpha<n-1", R17 + "0<beta-alpha<n-1",
       XACEXB, XACECX, "x c^(beta-alpha) e x b", "x c^(beta-alpha+1) e x", ""},
      {"B16", "1a", "17", "beta-alpha=n-1", R17 + "0<beta-alpha=n-1",
       XACEXB, XACECX, "x c^(beta-alpha) e x b", "x a^n x", ""},
      {"B17", "1a", "18", "n<=beta-alpha<2n-1", R17 + "n<=beta-alpha<2n-1",
       XACEXB, XACECX, "x a^(2n-beta+alpha) x b", "x a^(2n-beta+alpha-1) x", ""},
      {"B18", "1a", "18", "beta-alpha=2n-1", R17 + "n<=beta-alpha=2n-1",
       XACEXB, XACECX, "x a x b", "x e x", ""},
      // first rule ca -> ac
      {"B19", "1b", "1d", "-", "", "e c a", "e a c", "c e a", "a c e", ""},
      {"B20", "1b", "2a", "-", "", "c a^(2n+1)", "a c a^(2n)", "c a", "a c", ""},
      {"B21", "1b", "2c", "-", "", "c^(2n+1) a", "c^(2n) a c", "c a", "a c", ""},
      {"B22", "1b", "3", "beta<=alpha<2n", "0<beta<=alpha<2n",
       "x a^alpha c^beta a", "x a^alpha c^(beta-1) a c", "x a^(alpha-beta) e^beta a", "x a^(alpha-beta+1) e^beta", ""},
      {"B23", "1b", "3", "1<beta, alpha=2n", "alpha=2n; 1<beta<=2n",
       "x a^alpha c^beta a", "x a^alpha c^(beta-1) a c", "x a^(2n-beta) e^beta a", "x a^(2n-beta+1) e^beta", ""},
      {"B24", "1b", "3", "1=beta, alpha=2n", "alpha=2n; beta=1",
       "x a^alpha c^beta a", "x a^(2n+1) c", "x a^(2n-1) e a", "x e", ""},
      {"B25", "1b", "4", "alpha<beta", "0<alpha<beta<=2n",
       "x a^alpha c^beta a", "x a^alpha c^(beta-1) a c", "x c^(beta-alpha) e^alpha a", "x c^(beta-alpha-1) e^(alpha+1)", ""},
      {"B26", "1b", "10", "beta<2n", "0<alpha<=2n; 0<=beta<2n; 0<gamma<=2n",
       "c a^alpha c^beta e^gamma x", "a c a^(alpha-1) c^beta e^gamma x", "c a^alpha c^beta x", "a^alpha c^(beta+1) x",
       "t1 tabulated as a c a^(alpha-1) c^beta e^gamma c x"},
      {"B27", "1b", "10", "beta=2n", "0<alpha<=2n; beta=2n; 0<gamma<=2n",
       "c a^alpha c^beta e^gamma x", "a c a^(alpha-1) c^beta e^gamma x", "c a^alpha c^beta x", "a^alpha c x",
       "t1 tabulated as a c a^(alpha-1) c^beta e^gamma c x"},
      // first rule ea -> ae
      {"B28", "1c", "2a", "-", "", "e a^(2n+1)", "a e a^(2n)", "e a", "a e", ""},
      {"B29", "1c", "2d", "-", "", "e^(2n+1) a", "e^(2n) a e", "e a", "a e", ""},
      {"B30", "1c", "10", "-", "0<alpha<=2n; 0<=beta<=2n; 0<gamma<=2n",
       "e a^alpha c^beta e^gamma x", "a e a^(alpha-1) c^beta e^gamma x", "e a^alpha c^beta x", "a^alpha c^beta x", ""},
      {"B31", "1c", "5", "alpha=2n", R5 + "alpha=2n",
       XACEA, XACEA1, "x c^beta e^gamma a", "x a c^beta e^gamma", ""},
      {"B32", "1c", "5", "alpha<2n", R5 + "alpha<2n",
       XACEA, XACEA1, "x c^(2n-alpha+beta) e^(alpha+gamma-2n) a", "x c^(2n-alpha+beta-1) e^(alpha+gamma+1-2n)", ""},
      {"B33", "1c", "6", "beta-alpha=1, alpha+gamma=2n", R6 + "beta-alpha=1; alpha+gamma=2n",
       XACEA, XACEA1, "x a^(2n-1) e a", "x e", ""},
      {"B34", "1c", "6", "beta-alpha>1, alpha+gamma=2n", R6 + "beta-alpha>1; alpha+gamma=2n",
       XACEA, XACEA1, "x a^(2n+alpha-beta) e^(beta+gamma-2n) a", "x c^(beta-alpha-1) e", ""},
      {"B35", "1c", "6", "beta-alpha>1, alpha+gamma<2n", R6 + "beta-alpha>1; alpha+gamma<2n",
       XACEA, XACEA1, "x a^(2n+alpha-beta) e^(beta+gamma-2n) a", "x a^(2n+alpha-beta+1) e^(beta+gamma-2n)", ""},
      {"B36", "1c", "7", "alpha=2n, gamma<2n", RB + "alpha>beta; alpha=2n; gamma<2n",
       XACEA, XACEA1, "x a^(2n-beta) e^(gamma+beta-2n) a", "x a^(2n-beta+1) e^(gamma+beta-2n)", ""},
      {"B37", "1c", "7", "alpha=2n, gamma=2n", RB + "alpha>beta; alpha=2n; gamma=2n",
       XACEA, XACEA1, "x a^(2n-beta) e^beta a", "x c^(beta-1) e", ""},
      {"B38", "1c", "7", "alpha<2n", RB + "alpha>beta; alpha<2n",
       XACEA, XACEA1, "x a^(alpha-beta) e^(gamma+beta-2n) a", "x a^(alpha-beta+1) e^(gamma+beta-2n)", ""},
      {"B39", "1c", "8", "alpha=2n, gamma=2n", RB + "alpha=beta; alpha=2n; gamma=2n",
       XACEA, XACEA1, "x e^(2n) a", "x c^(2n-1) e", ""},
      {"B40", "1c", "8", "alpha=2n, gamma<2n", RB + "alpha=beta; alpha=2n; gamma<2n",
       XACEA, XACEA1, "x e^gamma a", "x a e^gamma", ""},
      {"B41", "1c", "8", "alpha<2n", RB + "alpha=beta; alpha<2n",
       XACEA, XACEA1, "x e^(beta+gamma-2n) a", "x a e^(beta+gamma-2n)", ""},
      {"B42", "1c", "9", "beta-alpha=1", RB + "beta>alpha; beta-alpha=1",
       XACEA, XACEA1, "x c e^(alpha+gamma-2n) a", "x e^(alpha+1+gamma-2n)", ""},
      {"B43", "1c", "9", "beta-alpha>1", RB + "beta>alpha; beta-alpha>1",
       XACEA, XACEA1, "x c^(beta-alpha) e^(alpha+gamma-2n) a", "x c^(beta-alpha-1) e^(alpha+1+gamma-2n)", ""},
      // first rule ec -> ce
      {"B44", "1d", "2c", "-", "", "e c^(2n+1)", "c e c^(2n)", "e c", "c e", ""},
      {"B45", "1d", "2d", "-", "", "e^(2n+1) c", "e^(2n) c e", "e c", "c e", ""},
      {"B46", "1d", "5", "alpha-beta=1, beta+gamma=2n", R5 + "alpha-beta=1; beta+gamma=2n",
       XACEC, XACEC1, "x c^(2n-1) e c", "x e", ""},
      {"B47", "1d", "5", "alpha-beta>1, beta+gamma=2n", R5 + "alpha-beta>1; beta+gamma=2n",
       XACEC, XACEC1, "x c^(2n-alpha+beta) e^(alpha+gamma-2n) c", "x a^(alpha-beta-1) e", ""},
      {"B48", "1d", "5", "alpha-beta>1, beta+gamma<2n", R5 + "alpha-beta>1; beta+gamma<2n",
       XACEC, XACEC1, "x c^(2n-alpha+beta) e^(alpha+gamma-2n) c", "x c^(2n-alpha+beta+1) e^(alpha+gamma-2n)", ""},
      {"B49", "1d", "6", "beta=2n", R6 + "beta=2n",
       XACEC, XACEC1, "x a^alpha e^gamma c", "x a^alpha c e^gamma", ""},
      {"B50", "1d", "6", "beta<2n", R6 + "beta<2n",
       XACEC, XACEC1, "x a^(2n+alpha-beta) e^(beta+gamma-2n) c", "x a^(2n+alpha-beta-1) e^(beta+gamma+1-2n)", ""},
      {"B51", "1d", "7", "alpha-beta=1", RB + "alpha>beta; alpha-beta=1",
       XACEC, XACEC1, "x a e^(beta+gamma-2n) c", "x e^(beta+gamma-2n+1)", ""},
      {"B52", "1d", "7", "alpha-beta>1", RB + "alpha>beta; alpha-beta>1",
       XACEC, XACEC1, "x a^(alpha-beta) e^(beta+gamma-2n) c", "x a^(alpha-beta-1) e^(beta+gamma-2n+1)", ""},
      {"B53", "1d", "8", "beta=2n, gamma=2n", RB + "alpha=beta; beta=2n; gamma=2n",
       XACEC, XACEC1, "x e^(2n) c", "x a^(2n-1) e", ""},
      {"B54", "1d", "8", "beta=2n, gamma<2n", RB + "alpha=beta; beta=2n; gamma<2n",
       XACEC, XACEC1, "x e^gamma c", "x c e^gamma", ""},
      {"B55", "1d", "8", "beta<2n", RB + "alpha=beta; beta<2n",
       XACEC, XACEC1, "x e^(gamma+beta-2n) c", "x c e^(gamma+beta-2n)", ""},
      {"B56", "1d", "9", "beta=2n, gamma=2n", RB + "beta>alpha; beta=2n; gamma=2n",
       XACEC, XACEC1, "x c^(2n-alpha) e^alpha c", "x a^(alpha-1) e", ""},
      {"B57", "1d", "9", "beta=2n, gamma<2n", RB + "beta>alpha; beta=2n; gamma<2n",
       XACEC, XACEC1, "x c^(2n-alpha) e^(alpha+gamma-2n) c", "x c^(2n-alpha+1) e^(alpha+gamma-2n)", ""},
      {"B58", "1d", "9", "beta<2n", RB + "beta>alpha; beta<2n",
       XACEC, XACEC1, "x c^(beta-alpha) e^(gamma+alpha-2n) c", "x c^(beta-alpha+1) e^(alpha+gamma-2n)", ""},
      // first rule a^(2n+1) -> a
      {"B59", "2a", "10", "0<alpha2<=alpha", "0<alpha2<=alpha<=2n; 0<=beta<=2n; 0<gamma<=2n",
       "a^(2n+alpha2) c^beta e^gamma x", "a^alpha2 c^beta e^gamma x", "a^(2n+alpha2) c^beta x", "a^alpha2 c^beta x", ""},
      // first rule c^(2n+1) -> c
      {"B60", "2c", "3", "0<beta2<=beta", "0<beta<=alpha<=2n; 0<beta2<=beta",
       "x a^alpha c^(beta2+2n)", "x a^alpha c^beta2", "x a^(alpha-beta) e^beta c^(beta2+2n-beta)", "x a^(alpha-beta2) e^beta2", ""},
      {"B61", "2c", "4", "0<beta2<=alpha", "0<alpha<beta<=2n; 0<beta2<=alpha",
       "x a^alpha c^(beta2+2n)", "x a^alpha c^beta2", "x c^(beta-alpha) e^alpha c^(beta2+2n-beta)", "x a^(alpha-beta2) e^beta2", ""},
      {"B62", "2c", "4", "alpha<beta2<=beta", "0<alpha<beta<=2n; alpha<beta2<=beta",
       "x a^alpha c^(beta2+2n)", "x a^alpha c^beta2", "x c^(beta-alpha) e^alpha c^(beta2+2n-beta)", "x c^(beta2-alpha) e^alpha", ""},
    };
    // clang-format on

    struct CompiledRow {
      std::vector<std::string> vars;
      Pattern                  t, t1, t2, t0;
      std::vector<Constraint>  domain;
    };

    CompiledRow compile(AppendixRow const& row) {
      CompiledRow c;
      c.t      = parse_pattern(row.t, c.vars);
      c.t1     = parse_pattern(row.t1, c.vars);
      c.t2     = parse_pattern(row.t2, c.vars);
      c.t0     = parse_pattern(row.t0, c.vars);
      c.domain = parse_constraints(row.domain, c.vars);
      return c;
    }

    bool one_step_gives(RewriteSystem const& sys,
                        std::size_t          schema,
                        Word const&          from,
                        Word const&          to) {
      for (auto const& r : redexes(sys, from, schema)) {
        if (apply(sys, from, r) == to) {
          return true;
        }
      }
      return false;
    }

    RowResult check_row(RewriteSystem const& sys, AppendixRow const& row, long max_exp) {
      RowResult res;
      res.row     = &row;
      auto   c    = compile(row);
      auto   s1   = sys.schema_index(row.rule1);
      auto   s2   = sys.schema_index(row.rule2);
      long   n    = sys.n();
      auto   note = [&res](std::string msg) {
        if (res.messages.size() < 4) {
          res.messages.push_back(std::move(msg));
        }
      };
      for_each_assignment(c.vars.size(), max_exp, [&](std::span<long const> v) {
        for (auto const& k : c.domain) {
          if (!k.holds(v, n)) {
            return;
          }
        }
        Word t, t1, t2, t0;
        if (!try_instantiate_pattern(c.t, v, n, t) || !try_instantiate_pattern(c.t1, v, n, t1)
            || !try_instantiate_pattern(c.t2, v, n, t2)
            || !try_instantiate_pattern(c.t0, v, n, t0)) {
          ++res.instances;
          ++res.failures;
          note("negative exponent inside the row domain");
          return;
        }
        ++res.instances;
        bool ok = true;
        if (!one_step_gives(sys, s1, t, t1)) {
          ok = false;
          note("t=" + t + ": rule " + row.rule1 + " does not give t1=" + t1);
        }
        if (!one_step_gives(sys, s2, t, t2)) {
          ok = false;
          note("t=" + t + ": rule " + row.rule2 + " does not give t2=" + t2);
        }
        auto n0 = normal_form(sys, t0);
        auto n1 = normal_form(sys, t1);
        auto n2 = normal_form(sys, t2);
        if (n1 != n0 || n2 != n0) {
          ok = false;
          note("t=" + t + ": normal forms " + n1 + ", " + n2 + ", " + n0 + " differ");
        }
        if (!ok) {
          ++res.failures;
        }
      });
      return res;
    }
  }  // namespace

  std::span<AppendixRow const> appendix_rows(AppendixTable which) {
    return which == AppendixTable::a ? std::span<AppendixRow const>(TABLE_A)
                                     : std::span<AppendixRow const>(TABLE_B);
  }

  std::size_t AppendixReport::instantiable_rows() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto const& r) {
      return r.instantiable();
    }));
  }

  std::size_t AppendixReport::confirmed_rows() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto const& r) {
      return r.instantiable() && r.confirmed();
    }));
  }

  AppendixReport verify_appendix(AppendixTable which, long max_exp, long n, Execution exec) {
    if (max_exp < 0) {
      throw Error("max_exp must be non-negative");
    }
    std::optional<RewriteSystem> fn;
    if (which == AppendixTable::b) {
      fn.emplace(fn_system(n));
    }
    RewriteSystem const& sys  = fn ? *fn : q_system();
    auto                 rows = appendix_rows(which);
    AppendixReport       rep;
    rep.table   = which;
    rep.n       = which == AppendixTable::b ? n : 0;
    rep.max_exp = max_exp;
    rep.rows.resize(rows.size());
    for_each_index(rows.size(), exec, [&](std::size_t i) {
      rep.rows[i] = check_row(sys, rows[i], max_exp);
    });
    return rep;
  }

}  // namespace lef
