// Writes the corpus of input documents used by the CLI tests and shipped as
// worked examples.  Golden output documents are produced by running the gcoh
// binary on these inputs (see tests).

#include <filesystem>
#include <fstream>
#include <iostream>

#include "gcoh/cocycle.hpp"
#include "gcoh/extension.hpp"
#include "gcoh/grothendieck.hpp"
#include "gcoh/json_io.hpp"

using namespace gcoh;

namespace {

std::filesystem::path g_dir;

void put(const std::string& name, const std::string& text) {
  std::ofstream out(g_dir / name, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << (g_dir / name) << "\n";
    std::exit(1);
  }
  out << text;
}

void put_doc(const std::string& name, const Document& doc) {
  put(name, write_document(doc));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gcoh_corpus <output-dir>\n";
    return 1;
  }
  g_dir = argv[1];
  std::filesystem::create_directories(g_dir);

  // Groups.
  put_doc("group_z2.json", {"group", group_to_json(make_cyclic(2, "Z2"))});
  put_doc("group_z3.json", {"group", group_to_json(make_cyclic(3, "Z3"))});
  put_doc("group_s3.json", {"group", group_to_json(make_symmetric3())});

  // Base groupoids.
  FiniteGroupoid gz2 = groupoid_from_group(make_cyclic(2, "Z2"));
  FiniteGroupoid gz3 = groupoid_from_group(make_cyclic(3, "Z3"));
  FiniteGroupoid interval = interval_groupoid();
  FiniteGroupoid disconnected = disjoint_union(
      groupoid_from_group(make_cyclic(2, "Z2")),
      groupoid_from_group(make_cyclic(3, "Z3")));
  put_doc("groupoid_z2.json", {"groupoid", groupoid_to_json(gz2)});
  put_doc("groupoid_z3.json", {"groupoid", groupoid_to_json(gz3)});
  put_doc("groupoid_interval.json", {"groupoid", groupoid_to_json(interval)});
  put_doc("groupoid_disconnected.json",
          {"groupoid", groupoid_to_json(disconnected)});

  // Coefficient families (kernel groups named after their base object, which
  // keeps fiber extraction byte-stable on round trips).
  GroupFamily fz2 = make_family({make_cyclic(2, "K0")});
  GroupFamily fz3 = make_family({make_cyclic(3, "K0")});
  GroupFamily f_interval_22 =
      make_family({make_cyclic(2, "K0"), make_cyclic(2, "K1")});
  GroupFamily f_interval_23 =
      make_family({make_cyclic(2, "K0"), make_cyclic(3, "K1")});
  GroupFamily f_mixed =
      make_family({make_cyclic(3, "K0"), make_cyclic(2, "K1")});
  put_doc("family_z2.json", {"family", family_to_json(fz2)});
  put_doc("family_z3.json", {"family", family_to_json(fz3)});
  put_doc("family_interval_z2_z2.json",
          {"family", family_to_json(f_interval_22)});
  put_doc("family_interval_z2_z3.json",
          {"family", family_to_json(f_interval_23)});
  put_doc("family_mixed.json", {"family", family_to_json(f_mixed)});

  // The two cohomology classes of (Z2, Z2) and the split/non-split order-6
  // extensions of (Z2, Z3), written as cocycles and as packaged extensions.
  {
    Budget budget;
    H2Result r = h2(gz2, fz2, budget);
    const WeakAction& split = r.cocycles[r.representatives[0]];
    const WeakAction& nonsplit = r.cocycles[r.representatives[1]];
    put_doc("cocycle_z2_z2_split.json", {"cocycle", cocycle_to_json(split)});
    put_doc("cocycle_z2_z2_nonsplit.json",
            {"cocycle", cocycle_to_json(nonsplit)});
    Extension k4 = package_extension(twist(split), fz2);
    Extension z4 = package_extension(twist(nonsplit), fz2);
    put_doc("extension_k4_to_z2.json", {"extension", extension_to_json(k4)});
    put_doc("extension_z4_to_z2.json", {"extension", extension_to_json(z4)});
    put_doc("cleavage_z4_canonical.json",
            {"map", cleavage_to_json(canonical_cleavage(z4.projection))});
  }
  {
    Budget budget;
    H2Result r = h2(gz2, fz3, budget);
    // Class 0 twists to Z6, the other class to S3.
    const WeakAction& s3like = r.cocycles[r.representatives[1]];
    Extension s3 = package_extension(twist(s3like), fz3);
    put_doc("extension_s3_to_z2.json", {"extension", extension_to_json(s3)});
  }

  // A parseable cocycle violating the composition 2-cocycle condition:
  // trivial action of Z3 on Z3 with a single non-zero factor.
  {
    WeakAction w = make_trivial_action(gz3, fz3);
    w.factor[{1, 1}] = 1;
    put_doc("invalid_cocycle.json", {"cocycle", cocycle_to_json(w)});
  }

  put("malformed.json", "{ this is not json\n");

  return 0;
}
