#include <gtest/gtest.h>

#include "eqbif/bifurcation_index.hpp"
#include "eqbif/degree.hpp"
#include "eqbif/error.hpp"

using eqbif::Cone;
using eqbif::EulerElement;
using eqbif::IndexRequest;
using eqbif::Sign;

TEST(IndexProduct, FirstEigenvalue) {
  const auto records = eqbif::hemisphere_spectrum(2, 2);
  for (unsigned p = 1; p <= 5; ++p) {
    const EulerElement pos = eqbif::index_product({records, 1, Sign::positive, p, 0});
    EXPECT_EQ(pos, EulerElement::dense({(p % 2 == 0) ? 0 : -2}));
    const EulerElement neg = eqbif::index_product({records, 1, Sign::negative, 1, p});
    EXPECT_EQ(neg, EulerElement::dense({(p % 2 == 0 ? 1 : -1) - 1}));
  }
}

TEST(IndexProduct, SecondEigenvalueOfS2) {
  const auto records = eqbif::hemisphere_spectrum(2, 3);
  EXPECT_EQ(eqbif::index_product({records, 2, Sign::positive, 1, 0}), EulerElement::dense({0, 1}));
  EXPECT_EQ(eqbif::index_product({records, 2, Sign::negative, 0, 1}), EulerElement::dense({0, 1}));
  // Even exponents give elements of U_- with -p at the top coordinate.
  EXPECT_EQ(eqbif::index_product({records, 2, Sign::positive, 2, 0}), EulerElement::dense({0, -2}));
}

TEST(IndexProduct, NegativeBranchUsesInverse) {
  const auto records = eqbif::hemisphere_spectrum(3, 4);
  const IndexRequest req{records, 3, Sign::negative, 0, 3};
  const EulerElement lower = eqbif::deg_neg_id(eqbif::lower_eigenspaces(req));
  const EulerElement eigen = eqbif::deg_neg_id(records[2].eigenspace);
  EXPECT_EQ(eqbif::index_product(req) * pow(lower, 3), pow(eigen, 3) - EulerElement::unit());
}

TEST(IndexProduct, Validation) {
  const auto records = eqbif::hemisphere_spectrum(2, 3);
  try {
    (void)eqbif::index_product({records, 4, Sign::positive, 1, 0});
    FAIL();
  } catch (const eqbif::Error& e) {
    EXPECT_EQ(e.code(), eqbif::ErrorCode::out_of_range);
  }
  try {
    (void)eqbif::index_product({records, 2, Sign::negative, 1, 0});
    FAIL();
  } catch (const eqbif::Error& e) {
    EXPECT_EQ(e.code(), eqbif::ErrorCode::signature_violation);
  }
}

TEST(ClosedForm, AgreesWithProductOnHemisphere) {
  for (int n = 2; n <= 4; ++n) {
    const auto records = eqbif::hemisphere_spectrum(n, 8);
    for (std::size_t m0 = 1; m0 <= 8; ++m0) {
      for (unsigned p = 1; p <= 4; ++p) {
        for (Sign s : {Sign::positive, Sign::negative}) {
          const IndexRequest req{records, m0, s, p, p + 1};
          const auto cf = eqbif::index_closed_form(req);
          const auto index = eqbif::index_product(req);
          ASSERT_TRUE(cf.agrees_with(index)) << n << " " << m0 << " " << p << " " << index.to_string();
          ASSERT_TRUE(cf.exact_spectrum);
          if (m0 == 1) {
            ASSERT_FALSE(cf.top.has_value());
          } else {
            ASSERT_EQ(cf.top->first, m0 - 1);
          }
        }
      }
    }
  }
}

TEST(ClosedForm, RefusesOverlappingWeights) {
  // Below lambda_2 sits weight 3, above the top weight 1 of its eigenspace.
  std::vector<eqbif::EigenvalueRecord> records(2);
  records[0].gamma_set = {3};
  records[0].eigenspace = eqbif::so2_decompose(2, 3);
  records[0].mu = records[0].nu = 2;
  records[1].gamma_set = {1};
  records[1].eigenspace = eqbif::so2_decompose(2, 1);
  records[1].mu = 2;
  records[1].nu = 4;
  try {
    (void)eqbif::index_closed_form({records, 2, Sign::positive, 1, 0});
    FAIL();
  } catch (const eqbif::Error& e) {
    EXPECT_EQ(e.code(), eqbif::ErrorCode::closed_form_regime);
  }
  EXPECT_NO_THROW((void)eqbif::index_product({records, 2, Sign::positive, 1, 0}));
}

TEST(ConePredicates, ConsistentOnHemisphere) {
  for (int n = 2; n <= 5; ++n) {
    const auto records = eqbif::hemisphere_spectrum(n, 10);
    for (std::size_t m0 = 1; m0 <= 10; ++m0) {
      for (unsigned p = 1; p <= 5; ++p) {
        for (Sign s : {Sign::positive, Sign::negative}) {
          const auto r = eqbif::cone_predicates({records, m0, s, p, p});
          ASSERT_TRUE(r.consistent) << n << " " << m0 << " " << p;
          if (p % 2 == 0) {
            ASSERT_EQ(r.implied, Cone::minus_cone);
          }
        }
      }
    }
  }
}

TEST(ConePredicates, Items) {
  const auto records = eqbif::hemisphere_spectrum(2, 3);
  // lambda_2 of S^2: dim V0 = 2, dim V- = 1.
  const auto odd = eqbif::cone_predicates({records, 2, Sign::positive, 1, 0});
  EXPECT_TRUE(odd.dim_even_and_product_odd);
  EXPECT_EQ(odd.implied, Cone::plus_cone);
  EXPECT_EQ(odd.actual, Cone::plus_cone);
  const auto even = eqbif::cone_predicates({records, 2, Sign::positive, 2, 0});
  EXPECT_TRUE(even.exponent_even);
  EXPECT_TRUE(even.dim_even_and_product_even);
  EXPECT_EQ(even.implied, Cone::minus_cone);
  const auto none = eqbif::cone_predicates({records, 3, Sign::positive, 1, 0});
  EXPECT_FALSE(none.implied.has_value());
}
