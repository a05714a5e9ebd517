#include <gtest/gtest.h>

#include <memory>
#include <string>

#include "splitg2/splitg2.h"

namespace {

struct Text {
  char* p = nullptr;
  ~Text() { sg2_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

sg2_field* field(const char* spec) {
  sg2_field* f = nullptr;
  EXPECT_EQ(sg2_field_parse(spec, &f), SG2_OK) << sg2_last_error();
  return f;
}

std::string corrupted_golden() {
  std::string g = sg2_golden_builtin();
  const auto at = g.find("\n1 2 14 -2\n");
  EXPECT_NE(at, std::string::npos);
  g.replace(at, 11, "\n1 2 14 -3\n");
  return g;
}

TEST(CApi, StatusNames) {
  EXPECT_STREQ(sg2_status_name(SG2_OK), "OK");
  EXPECT_STREQ(sg2_status_name(SG2_ERR_NOT_IN_SPAN), "NotInSpan");
  EXPECT_STREQ(sg2_status_name(SG2_ERR_INVALID_MODULUS), "InvalidModulus");
}

TEST(CApi, NullArgumentsAreRejected) {
  sg2_field* f = nullptr;
  EXPECT_EQ(sg2_field_parse(nullptr, &f), SG2_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(sg2_last_error()).find("null"), std::string::npos);
  EXPECT_EQ(sg2_field_parse("q", nullptr), SG2_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sg2_recon(nullptr, SG2_FORMAT_TEXT, nullptr), SG2_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sg2_table_equal(nullptr, nullptr), 0);
  EXPECT_EQ(sg2_space_is_pinned(nullptr), 0);
  sg2_field_free(nullptr);
  sg2_table_free(nullptr);
}

TEST(CApi, FieldParsing) {
  sg2_field* f = nullptr;
  EXPECT_EQ(sg2_field_parse("fp:4", &f), SG2_ERR_INVALID_MODULUS);
  EXPECT_EQ(f, nullptr);
  EXPECT_EQ(sg2_field_parse("real", &f), SG2_ERR_PARSE);
  sg2_field* g = field("fp:13");
  Text t;
  ASSERT_EQ(sg2_field_describe(g, &t.p), SG2_OK);
  EXPECT_EQ(t.str(), "fp:13");
  EXPECT_STREQ(sg2_last_error(), "");
  sg2_field_free(g);
}

TEST(CApi, Multiply) {
  sg2_field* f = field("q");
  sg2_octonion *a = nullptr, *b = nullptr, *p = nullptr;
  ASSERT_EQ(sg2_octonion_parse(f, "C1", &a), SG2_OK);
  ASSERT_EQ(sg2_octonion_parse(f, "C2", &b), SG2_OK);
  ASSERT_EQ(sg2_octonion_mul(a, b, &p), SG2_OK);
  Text t;
  ASSERT_EQ(sg2_octonion_render(p, SG2_FORMAT_TEXT, &t.p), SG2_OK);
  EXPECT_EQ(t.str(), "D3 = (0, [0, 0, 0]; [0, 0, 1], 0)\n");
  sg2_octonion* bad = nullptr;
  EXPECT_EQ(sg2_octonion_parse(f, "E1", &bad), SG2_ERR_PARSE);
  sg2_octonion_free(a);
  sg2_octonion_free(b);
  sg2_octonion_free(p);
  sg2_field_free(f);
}

TEST(CApi, SpaceReconAndBracket) {
  sg2_field* f = field("q");
  sg2_space* s = nullptr;
  ASSERT_EQ(sg2_space_solve(f, &s), SG2_OK);
  size_t dim = 0;
  ASSERT_EQ(sg2_space_dim(s, &dim), SG2_OK);
  EXPECT_EQ(dim, 14u);
  EXPECT_EQ(sg2_space_is_pinned(s), 1);

  sg2_matrix *x1 = nullptr, *x2 = nullptr, *br = nullptr, *oob = nullptr;
  ASSERT_EQ(sg2_space_basis_element(s, 0, &x1), SG2_OK);
  ASSERT_EQ(sg2_space_basis_element(s, 1, &x2), SG2_OK);
  EXPECT_EQ(sg2_space_basis_element(s, 14, &oob), SG2_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(sg2_bracket(x1, x2, &br), SG2_OK);
  Text t;
  ASSERT_EQ(sg2_recon(br, SG2_FORMAT_TEXT, &t.p), SG2_OK);
  EXPECT_NE(t.str().find("v13 = -2\n"), std::string::npos);
  EXPECT_NE(t.str().find("u11 = 0\n"), std::string::npos);

  sg2_matrix* id = nullptr;
  std::string json = R"({"rows":8,"cols":8,"entries":[)";
  for (int r = 0; r < 8; ++r) {
    json += r ? "," : "";
    json += "[";
    for (int c = 0; c < 8; ++c) json += std::string(c ? "," : "") + (r == c ? "1" : "0");
    json += "]";
  }
  json += "]}";
  ASSERT_EQ(sg2_matrix_parse_json(f, json.c_str(), &id), SG2_OK);
  Text u;
  EXPECT_EQ(sg2_recon(id, SG2_FORMAT_TEXT, &u.p), SG2_ERR_NOT_IN_SPAN);
  EXPECT_EQ(u.p, nullptr);
  EXPECT_NE(std::string(sg2_last_error()).size(), 0u);

  sg2_matrix* small = nullptr;
  ASSERT_EQ(sg2_matrix_parse_json(f, R"({"rows":1,"cols":1,"entries":[["1"]]})", &small), SG2_OK);
  Text v;
  EXPECT_EQ(sg2_recon(small, SG2_FORMAT_TEXT, &v.p), SG2_ERR_SHAPE_MISMATCH);

  for (sg2_matrix* m : {x1, x2, br, id, small}) sg2_matrix_free(m);
  sg2_space_free(s);
  sg2_field_free(f);
}

TEST(CApi, TableJsonRoundTrip) {
  sg2_field* f = field("q");
  sg2_space* s = nullptr;
  ASSERT_EQ(sg2_space_solve(f, &s), SG2_OK);
  sg2_table* t = nullptr;
  ASSERT_EQ(sg2_table_compute(s, &t), SG2_OK);
  Text json;
  ASSERT_EQ(sg2_table_render(t, SG2_FORMAT_JSON, &json.p), SG2_OK);
  sg2_table* back = nullptr;
  ASSERT_EQ(sg2_table_parse_json(f, json.p, &back), SG2_OK);
  EXPECT_EQ(sg2_table_equal(t, back), 1);
  Text again;
  ASSERT_EQ(sg2_table_render(back, SG2_FORMAT_JSON, &again.p), SG2_OK);
  EXPECT_EQ(json.str(), again.str());
  sg2_table* broken = nullptr;
  EXPECT_EQ(sg2_table_parse_json(f, "{\"n\": 14,", &broken), SG2_ERR_PARSE);
  sg2_table_free(t);
  sg2_table_free(back);
  sg2_space_free(s);
  sg2_field_free(f);
}

TEST(CApi, VerifyBuiltinAndCorrupted) {
  sg2_field* f = field("q");
  sg2_report* r = nullptr;
  ASSERT_EQ(sg2_verify(f, nullptr, &r), SG2_OK);
  EXPECT_EQ(sg2_report_ok(r), 1);
  size_t passed = 0, total = 0;
  ASSERT_EQ(sg2_report_counts(r, &passed, &total), SG2_OK);
  EXPECT_EQ(passed, total);
  EXPECT_EQ(total, 5u);
  sg2_report_free(r);

  const std::string bad = corrupted_golden();
  ASSERT_EQ(sg2_verify(f, bad.c_str(), &r), SG2_OK);
  EXPECT_EQ(sg2_report_ok(r), 0);
  Text t;
  ASSERT_EQ(sg2_report_render(r, SG2_FORMAT_TEXT, &t.p), SG2_OK);
  EXPECT_NE(t.str().find("cell (1, 2)"), std::string::npos) << t.str();
  EXPECT_NE(t.str().find("4/5 checks passed"), std::string::npos) << t.str();
  sg2_report_free(r);

  EXPECT_EQ(sg2_verify(f, "1 2 14", &r), SG2_ERR_PARSE);
  sg2_field_free(f);
}

TEST(CApi, VerifyOverPrimeField) {
  sg2_field* f = field("fp:7");
  sg2_report* r = nullptr;
  ASSERT_EQ(sg2_verify(f, nullptr, &r), SG2_OK);
  EXPECT_EQ(sg2_report_ok(r), 1);
  Text t;
  ASSERT_EQ(sg2_report_render(r, SG2_FORMAT_JSON, &t.p), SG2_OK);
  EXPECT_NE(t.str().find("\"field\": \"fp:7\""), std::string::npos);
  sg2_report_free(r);
  sg2_field_free(f);
}

}  // namespace
