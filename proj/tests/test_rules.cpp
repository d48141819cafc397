#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cpctaxo/ingest.hpp"
#include "cpctaxo/rules.hpp"
#include "support/fixtures.hpp"
#include "support/tree_text.hpp"

using namespace cpctaxo;
using testing::outline;
using testing::tree_from_outline;

namespace {

const CodePattern& codes() {
  static const CodePattern p;
  return p;
}

std::string strip(std::string_view s) { return strip_code_references(s, codes()); }

}  // namespace

TEST_SUITE("code_pattern") {
  TEST_CASE("accepts every cited code form") {
    for (const char* c : {"B60", "G05D", "G05D1/00", "A01B1/00", "G06N3/0635", "G01N2021/5903",
                          "A01B1/00-A01B3/00", "A01B 1/00", "H04L 9/32 - H04L 9/38"})
      CHECK_MESSAGE(codes().matches_whole(c), c);
  }
  TEST_CASE("ignores ordinary words") {
    for (const char* s : {"Vitamin A", "type B vehicles", "C-clamps", "G-force", "A4 paper", "MP3 players"})
      CHECK_FALSE_MESSAGE(codes().found_in(s), s);
  }
}

TEST_SUITE("strip_code_references") {
  TEST_CASE("examples") {
    CHECK(strip("Control of position (vehicles B60, G05D1/00)") == "Control of position");
    CHECK(strip("Heating (by combustion)") == "Heating (by combustion)");
    CHECK(strip("X (A01B1/00) and Y (C07K14/00)") == "X and Y");
  }
  TEST_CASE("ranges and nesting") {
    CHECK(strip("Ploughs (A01B1/00-A01B3/00)") == "Ploughs");
    CHECK(strip("Ploughs (soil working (see A01B1/00))") == "Ploughs");
    CHECK(strip("Ploughs (hand-operated) (A01B1/00)") == "Ploughs (hand-operated)");
  }
  TEST_CASE("unbalanced input is kept and reported") {
    Warnings w;
    CHECK(strip_code_references("Ploughs (A01B1/00", codes(), &w) == "Ploughs (A01B1/00");
    CHECK(w.size() == 1);
  }
}

TEST_SUITE("remove_braces") {
  TEST_CASE("examples") {
    CHECK(remove_braces("{using analogue means}") == "using analogue means");
    CHECK(remove_braces("no braces here") == "no braces here");
    CHECK(remove_braces("a {b} c {d}") == "a b c d");
    CHECK(remove_braces("{ spaced }") == "spaced");
  }
}

TEST_SUITE("prune_code_containing_nodes") {
  TEST_CASE("node and subtree removed") {
    auto t = tree_from_outline("PHYSICS\n  Keep\n  arrangements covered by G06F1/00\n    c1\n    c2\n  Other\n");
    CHECK(outline(prune_code_containing_nodes(t, codes())) == "PHYSICS\n  Keep\n  Other\n");
  }
  TEST_CASE("no codes is a no-op") {
    auto t = tree_from_outline("PHYSICS\n  A\n    b\n  C\n");
    CHECK(prune_code_containing_nodes(t, codes()).rows() == t.rows());
  }
  TEST_CASE("only child pruned leaves the root") {
    auto t = tree_from_outline("PHYSICS\n  see G06F1/00\n    x\n");
    auto r = prune_code_containing_nodes(t, codes());
    CHECK(r.size() == 1);
    CHECK(outline(r) == "PHYSICS\n");
  }
}

TEST_SUITE("split_semicolon") {
  TEST_CASE("class heading") {
    auto t = build_title_tree(parse_title_file(
        "G\t\tPHYSICS\nG06\t\tCOMPUTING; CALCULATING; COUNTING\n", 'G'));
    auto r = split_semicolon(t);
    CHECK(outline(r) == "PHYSICS\n  COMPUTING\n  CALCULATING\n  COUNTING\n");
    for (NodeId id : r.node(r.root()).children) CHECK(r.node(id).code.to_string() == "G06");
  }
  TEST_CASE("no semicolon is a no-op") {
    auto t = tree_from_outline("PHYSICS\n  A, B\n");
    CHECK(split_semicolon(t).rows() == t.rows());
  }
  TEST_CASE("children are inherited") {
    auto t = tree_from_outline("PHYSICS\n  Before\n  A; B\n    c1\n    c2\n  After\n");
    auto r = split_semicolon(t);
    CHECK(outline(r) == "PHYSICS\n  Before\n  A\n    c1\n    c2\n  B\n    c1\n    c2\n  After\n");
    CHECK(r.size() == t.size() + 3);
    CHECK_FALSE(r.structural_error());
  }
  TEST_CASE("empty parts are dropped and parens protect") {
    auto t = tree_from_outline("PHYSICS\n  A;; B (x; y);\n");
    CHECK(outline(split_semicolon(t)) == "PHYSICS\n  A\n  B (x; y)\n");
  }
  TEST_CASE("the root keeps its heading") {
    auto t = tree_from_outline("TEXTILES; PAPER\n  A\n");
    CHECK(outline(split_semicolon(t)) == "TEXTILES; PAPER\n  A\n");
  }
}

TEST_SUITE("split_examples") {
  TEST_CASE("e.g. with two examples") {
    auto t = tree_from_outline("PHYSICS\n  Digital stores, e.g. magnetic memories, optical memories\n");
    CHECK(outline(split_examples(t)) ==
          "PHYSICS\n  Digital stores\n    magnetic memories\n    optical memories\n");
  }
  TEST_CASE("no marker is a no-op") {
    auto t = tree_from_outline("PHYSICS\n  Digital stores\n    x\n");
    CHECK(split_examples(t).rows() == t.rows());
  }
  TEST_CASE("such as goes before existing children") {
    auto t = tree_from_outline("PHYSICS\n  filters such as band-pass filters\n    X\n");
    CHECK(outline(split_examples(t)) == "PHYSICS\n  filters\n    band-pass filters\n    X\n");
  }
  TEST_CASE("marker variants") {
    auto t = tree_from_outline(
        "PHYSICS\n  Pumps, E.g., piston pumps\n  Valves, eg. ball valves\n  Lenses e.g. zoom lenses\n");
    CHECK(outline(split_examples(t)) ==
          "PHYSICS\n  Pumps\n    piston pumps\n  Valves\n    ball valves\n  Lenses\n    zoom lenses\n");
  }
  TEST_CASE("commas inside parentheses do not split") {
    auto t = tree_from_outline("PHYSICS\n  Stores, e.g. memories (magnetic, optical), tapes\n");
    CHECK(outline(split_examples(t)) ==
          "PHYSICS\n  Stores\n    memories (magnetic, optical)\n    tapes\n");
  }
  TEST_CASE("examples become complete terms") {
    auto t = tree_from_outline("PHYSICS\n  Stores, e.g. tapes\n");
    auto r = split_examples(t);
    NodeId child = r.node(r.node(r.root()).children[0]).children[0];
    CHECK_FALSE(r.node(child).complements_parent);
  }
}

TEST_SUITE("resolve_such") {
  TEST_CASE("examples") {
    CHECK(resolve_such("control of such pumps", "Rotary pumps") == "control of rotary pumps");
    CHECK(resolve_such("Valves", "Rotary pumps") == "Valves");
    CHECK(resolve_such("such as X", "Rotary pumps") == "such as X");
  }
  TEST_CASE("head phrase is the last comma segment") {
    CHECK(resolve_such("Control of such devices", "Engines, hydraulic motors") ==
          "Control of hydraulic motors devices");
    CHECK(resolve_such("Control of such a pump", "Piston pumps") == "Control of piston pump");
  }
  TEST_CASE("no referent leaves the label and warns") {
    Warnings w;
    CHECK(resolve_such("Control of such pumps", "", &w) == "Control of such pumps");
    CHECK(w.size() == 1);
  }
  TEST_CASE("such that is not a reference") {
    CHECK(resolve_such("arranged such that it rotates", "Pumps") == "arranged such that it rotates");
  }
  TEST_CASE("tree pass uses the preceding sibling, else the parent") {
    auto t = tree_from_outline("PHYSICS\n  Pumps\n    Rotary pumps\n    Control of such pumps\n    "
                               "Such pumps with seals\n  Valves\n    Such valves in series\n");
    CHECK(outline(resolve_such(t)) ==
          "PHYSICS\n  Pumps\n    Rotary pumps\n    Control of rotary pumps\n    "
          "Control of rotary pumps with seals\n  Valves\n    Valves in series\n");
  }
}

TEST_SUITE("resolve_adverbs") {
  TEST_CASE("examples") {
    CHECK(resolve_adverbs("Manufacture thereof", "Semiconductor devices") ==
          "Manufacture of semiconductor devices");
    CHECK(resolve_adverbs("Apparatus therefor", "Soldering") == "Apparatus for soldering");
    CHECK(resolve_adverbs("Apparatus", "Soldering") == "Apparatus");
  }
  TEST_CASE("therewith and acronyms") {
    CHECK(resolve_adverbs("Tools used therewith", "Lathes") == "Tools used with lathes");
    CHECK(resolve_adverbs("Testing thereof", "LED lamps") == "Testing of LED lamps");
    CHECK(resolve_adverbs("Parts thereof", "ENGINES") == "Parts of engines");
  }
  TEST_CASE("referent uses the earlier coordinate") {
    auto t = tree_from_outline("PHYSICS\n  Semiconductor devices; manufacture thereof\n");
    CHECK(outline(resolve_adverbs(split_semicolon(t))) ==
          "PHYSICS\n  Semiconductor devices\n  manufacture of semiconductor devices\n");
  }
  TEST_CASE("referent falls back to the parent") {
    auto t = tree_from_outline("PHYSICS\n  Soldering\n    Apparatus therefor\n");
    CHECK(outline(resolve_adverbs(t)) == "PHYSICS\n  Soldering\n    Apparatus for soldering\n");
  }
}

TEST_SUITE("attach_lowercase") {
  TEST_CASE("neural network models") {
    auto t = tree_from_outline(
        "PHYSICS\n  Computing arrangements based on biological models\n    using neural network models\n");
    CHECK(outline(attach_lowercase(t)) ==
          "PHYSICS\n  Computing arrangements based on biological models\n    computing arrangements based "
          "on biological models using neural network models\n");
  }
  TEST_CASE("uppercase child unchanged") {
    auto t = tree_from_outline("PHYSICS\n  Pumps\n    Valves\n");
    CHECK(attach_lowercase(t).rows() == t.rows());
  }
  TEST_CASE("chain of two") {
    auto t = tree_from_outline("PHYSICS\n  Pumps\n    with seals\n      made of rubber\n");
    auto r = attach_lowercase(t);
    CHECK(outline(r) == "PHYSICS\n  Pumps\n    pumps with seals\n      pumps with seals made of rubber\n");
    std::string leaf = r.node(r.preorder().back()).label;
    CHECK(leaf.find("pumps") == leaf.rfind("pumps"));
    CHECK(leaf.find("with seals") == leaf.rfind("with seals"));
  }
  TEST_CASE("all-caps parent is not re-cased") {
    auto t = tree_from_outline("PHYSICS\n  PUMPS\n    with seals\n");
    CHECK(outline(attach_lowercase(t)) == "PHYSICS\n  PUMPS\n    PUMPS with seals\n");
  }
}

TEST_SUITE("collapse_details") {
  TEST_CASE("children move up in place") {
    auto t = tree_from_outline("PHYSICS\n  P\n    a1\n    Details\n      c1\n      c2\n    a2\n");
    CHECK(outline(collapse_details(t)) == "PHYSICS\n  P\n    a1\n    c1\n    c2\n    a2\n");
  }
  TEST_CASE("no detail nodes is a no-op") {
    auto t = tree_from_outline("PHYSICS\n  P\n    Detailed pumps\n");
    CHECK(collapse_details(t).rows() == t.rows());
  }
  TEST_CASE("nested details") {
    auto t = tree_from_outline("PHYSICS\n  P\n    Details of pumps\n      DETAILS\n        g1\n        g2\n");
    CHECK(outline(collapse_details(t)) == "PHYSICS\n  P\n    g1\n    g2\n");
  }
  TEST_CASE("referential titles") {
    auto t = tree_from_outline(
        "PHYSICS\n  P\n    Subject matter not provided for in other groups of this subclass\n      x\n");
    CHECK(outline(collapse_details(t)) == "PHYSICS\n  P\n    x\n");
  }
}

TEST_SUITE("extract_synonyms") {
  const CpcCode code = CpcCode::parse("G01N21/55");

  TEST_CASE("abbreviation in brackets") {
    auto r = extract_synonyms("using surface plasmon resonance [SPR]", code);
    CHECK(r.label == "using surface plasmon resonance");
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].canonical == "surface plasmon resonance");
    CHECK(r.entries[0].synonyms == std::vector<std::string>{"SPR"});
    CHECK(r.entries[0].source_code == code);
  }
  TEST_CASE("i.e. gloss") {
    auto r = extract_synonyms(
        "Rendez-vous, i.e. searching a destination where several users can meet, and the routes to "
        "this destination for these users",
        code);
    CHECK(r.label == "Rendez-vous");
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].canonical == "Rendez-vous");
    CHECK(r.entries[0].synonyms ==
          std::vector<std::string>{
              "searching a destination where several users can meet, and the routes to this "
              "destination for these users"});
  }
  TEST_CASE("no marker") {
    auto r = extract_synonyms("Digital stores", code);
    CHECK(r.label == "Digital stores");
    CHECK(r.entries.empty());
  }
  TEST_CASE("gloss ends at a semicolon") {
    auto r = extract_synonyms("Rotors, i.e. rotating parts; stators", code);
    CHECK(r.label == "Rotors; stators");
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].synonyms == std::vector<std::string>{"rotating parts"});
  }
  TEST_CASE("physical realisation gloss") {
    auto r = extract_synonyms(
        "Physical realisation, i.e. hardware implementation of neural networks, neurons or parts of "
        "neurons",
        code);
    CHECK(r.label == "Physical realisation");
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].synonyms ==
          std::vector<std::string>{"hardware implementation of neural networks, neurons or parts of neurons"});
  }
  TEST_CASE("canonical is never among the synonyms") {
    auto r = extract_synonyms("SPR [SPR]", code);
    for (const auto& e : r.entries)
      for (const auto& s : e.synonyms) CHECK(s != e.canonical);
  }
}

TEST_SUITE("run_pipeline") {
  TEST_CASE("G06N excerpt") {
    auto tree = restrict_depth(build_title_tree(parse_title_file(testing::kG06NExcerpt, 'G')), 2);
    auto r = run_pipeline(tree);
    const std::string sub =
        "computing arrangements based on specific computational models\n"
        "      Computing arrangements based on biological models\n"
        "        computing arrangements based on biological models using neural network models\n"
        "          Physical realisation\n";
    CHECK(outline(r.tree) == "physics\n  computing\n    " + sub + "  calculating\n    " + sub +
                                 "  counting\n    " + sub);
    CHECK(r.tree.size() == 16);
    REQUIRE(r.synonyms.size() == 1);
    CHECK(r.synonyms[0].canonical == "Physical realisation");
    CHECK(r.diagnostics.empty());
  }
  TEST_CASE("clean tree is a fixed point") {
    auto t = tree_from_outline("physics\n  Pumps\n    Rotary pumps\n  Valves\n");
    auto r = run_pipeline(t);
    CHECK(r.tree.rows() == t.rows());
    CHECK(r.synonyms.empty());
  }
  TEST_CASE("rules can be switched off") {
    auto t = tree_from_outline("physics\n  A; B\n    {c}\n");
    RuleConfig off;
    off.split_semicolon = false;
    off.remove_braces = false;
    off.attach_lowercase = false;
    CHECK(outline(run_pipeline(t, off).tree) == "physics\n  A; B\n    {c}\n");
  }
  TEST_CASE("diagnostics name the node and rule") {
    auto t = tree_from_outline("physics\n  Ploughs (A01B1/00\n");
    auto r = run_pipeline(t);
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].to_line().rfind("WARN\tG06N3/10\t", 0) == 0);
  }
}

TEST_SUITE("reference interplay") {
  TEST_CASE("second i.e. starts a new gloss") {
    auto r = extract_synonyms("Motors, i.e. drives, i.e. actuators", CpcCode::parse("H02K1/00"));
    CHECK(r.label == "Motors");
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].synonyms == std::vector<std::string>{"drives", "actuators"});
  }
  TEST_CASE("adverb referent has its own such resolved") {
    auto t = tree_from_outline("PHYSICS\n  Rotary pumps\n  Control of such pumps\n    Parts thereof\n");
    CHECK(outline(resolve_such(resolve_adverbs(t))) ==
          "PHYSICS\n  Rotary pumps\n  Control of rotary pumps\n    Parts of control of rotary pumps\n");
  }
}

TEST_SUITE("example markers in brackets") {
  TEST_CASE("marker right after the opening parenthesis") {
    auto t = tree_from_outline("PHYSICS\n  Stores (e.g. tapes)\n  Pumps (rotary, such as gear pumps)\n");
    CHECK(outline(split_examples(t)) == "PHYSICS\n  Stores\n    tapes\n  Pumps (rotary)\n    gear pumps\n");
  }
  TEST_CASE("words containing the marker letters are left alone") {
    auto t = tree_from_outline("PHYSICS\n  Peg. boards\n  Nonesuch assemblies\n");
    CHECK(split_examples(t).rows() == t.rows());
  }
}
