// Copyright 2026 The mtsca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include "gtest/gtest.h"
#include "mtsca/java/parser.h"
#include "mtsca/java/printer.h"
#include "mtsca/java/walk.h"
#include "support/corpus.h"
#include "support/program_gen.h"

namespace mtsca::java {
namespace {

TEST(ParseTest, EmptyClass) {
  CompilationUnit unit = Parse("class A { }");
  ASSERT_EQ(unit.types.size(), 1u);
  EXPECT_EQ(unit.types[0].kind, TypeKind::kClass);
  EXPECT_EQ(unit.types[0].name, "A");
  EXPECT_TRUE(unit.types[0].members.empty());
}

TEST(ParseTest, ParenIsKept) {
  CompilationUnit unit = Parse("class C { public final int BAR = (42); }");
  const auto* field = unit.types[0].members[0].As<FieldDecl>();
  ASSERT_NE(field, nullptr);
  const auto* paren = field->init->As<Paren>();
  ASSERT_NE(paren, nullptr);
  EXPECT_EQ(paren->inner->As<IntLit>()->text, "42");
  EXPECT_FALSE(*field->init == MakeExpr(IntLit{"42"}));
}

TEST(PrintTest, ParenPrints) {
  EXPECT_EQ(PrintExpr(MakeExpr(Paren{Box<Expr>(MakeExpr(IntLit{"42"}))})), "(42)");
}

TEST(RoundTripTest, Trivial) {
  CompilationUnit unit = Parse("class A { }");
  EXPECT_EQ(Parse(Print(unit)), unit);
  EXPECT_EQ(Print(unit), "class A {\n}\n");
}

constexpr const char* kBusy = R"(package p.q;

import java.util.List;
import static java.lang.Math.*;

@SuppressWarnings({"a", "b"})
public class Busy<T> extends Base implements Runnable, Comparable<Busy> {
    private static final int N = 3;
    protected volatile String s;

    static {
        int z = 1;
    }

    public Busy(int[] xs) throws Exception {
        this.xs = xs;
    }

    @Override
    public void run() {
        for (int i = 0; i < N; i++) {
            if (i == 1)
                continue;
            else if (i > 2) {
                break;
            } else
                i += 2;
        }
        for (;;) {
        }
        try (Connection c = open(); Statement st = c.create()) {
            c.use((int) 3, -x, !flag, - -y);
        } catch (final IOException | RuntimeException e) {
            throw new IllegalStateException("x\"y", e);
        } finally {
            done = true;
        }
        List<String> xs = new ArrayList<>();
        Runnable r = () -> {
            System.out.println('c');
        };
        Function<Integer, Integer> f = (Integer a) -> a + 1;
        Comparator<String> cmp = new Comparator<String>() {
            public int compare(String a, String b) {
                return 0;
            }
        };
        int[][] grid = new int[3][];
        int[] init = new int[] {1, 2, 0x1F};
        long big = 10L;
        this.<String>generic(x -> x);
        while (a && (b || c))
            a = false;
    }

    abstract int m();

    interface I {
        default int k() {
            return 1;
        }
    }

    enum E {
        A, B;

        int v;
    }
}
)";

TEST(RoundTripTest, BusyProgramIsStable) {
  CompilationUnit unit = Parse(kBusy);
  std::string printed = Print(unit);
  EXPECT_EQ(printed, kBusy);
  EXPECT_EQ(Parse(printed), unit);
}

TEST(RoundTripTest, EveryCorpusFile) {
  auto files = testing::CorpusFiles();
  ASSERT_GE(files.size(), 31u);
  for (const auto& path : files) {
    CompilationUnit unit = Parse(testing::ReadFile(path), path);
    std::string printed = Print(unit);
    CompilationUnit again = Parse(printed, path);
    EXPECT_EQ(again, unit) << path;
    EXPECT_EQ(Print(again), printed) << path;
  }
}

TEST(RoundTripTest, GeneratedPrograms) {
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    std::string src = testing::ProgramGen(seed).Generate();
    CompilationUnit unit = Parse(src);
    std::string printed = Print(unit);
    EXPECT_EQ(Parse(printed), unit) << src;
    EXPECT_EQ(Print(Parse(printed)), printed);
  }
}

// Printing is canonical: reformatting the source leaves the tree unchanged.
TEST(RoundTripTest, LayoutInsensitive) {
  for (const auto& path : testing::CorpusFiles()) {
    std::string src = testing::ReadFile(path);
    std::string squeezed;
    bool in_string = false;
    for (size_t i = 0; i < src.size(); ++i) {
      char c = src[i];
      if ((c == '"' || c == '\'') && (i == 0 || src[i - 1] != '\\')) in_string = !in_string;
      if (!in_string && c == '\n') c = ' ';
      squeezed.push_back(c);
    }
    if (squeezed.find("//") != std::string::npos) continue;
    EXPECT_EQ(Parse(squeezed), Parse(src)) << path;
  }
}

TEST(SpanTest, ChildrenInsideParents) {
  CompilationUnit unit = Parse(kBusy);
  int checked = 0;
  Walk(unit, [&](NodeRef node, const std::vector<NodeRef>& ancestors) {
    Span s = node.span();
    EXPECT_TRUE(s.valid());
    if (!ancestors.empty()) {
      EXPECT_TRUE(ancestors.back().span().Contains(s));
    }
    ++checked;
    return true;
  });
  EXPECT_GT(checked, 100);
}

TEST(PathTest, ResolveInvertsPathOf) {
  CompilationUnit unit = Parse(kBusy);
  Walk(unit, [&](NodeRef node, const std::vector<NodeRef>&) {
    auto path = PathOf(unit, node);
    EXPECT_TRUE(path.has_value());
    auto back = Resolve(unit, *path);
    EXPECT_TRUE(back.has_value() && *back == node);
    EXPECT_EQ(PathFromString(PathToString(*path)), *path);
    return true;
  });
}

struct BadInput {
  const char* text;
  int line;
};

class SyntaxErrorTest : public ::testing::TestWithParam<BadInput> {};

TEST_P(SyntaxErrorTest, Rejected) {
  try {
    Parse(GetParam().text);
    FAIL() << "accepted: " << GetParam().text;
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), GetParam().line) << e.what();
    EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Subset, SyntaxErrorTest,
    ::testing::Values(BadInput{"", 1}, BadInput{"class A { void f() { switch (x) {} } }", 1},
                      BadInput{"class A {\n public private int x; }", 2},
                      BadInput{"class A { void f() { x + 1; } }", 1},
                      BadInput{"class A { int x = a ? b : c; }", 1},
                      BadInput{"class A {\n\n void f(int a, int a) {} }", 3},
                      BadInput{"class A { void f() { for (String s : xs) {} } }", 1},
                      BadInput{"class A { List<? extends T> x; }", 1},
                      BadInput{"class A { void f() { l: while (true) {} } }", 1},
                      BadInput{"class A { void f() {\n try { } } }", 2},
                      BadInput{"class A {", 1}));

}  // namespace
}  // namespace mtsca::java
