#include "filtra/scenario.hpp"

namespace filtra {

namespace {

// Keep in sync with data/detective.json; a unit test compares the two.
constexpr std::string_view kDetective = R"json({
  "comments": "Three suspects. State a: Ann did it. State b: Bob did it. State c: neither of them (Carla). The detective starts out sure of Ann's innocence, so f of the whole space is {b,c}. A later tip naming Ann is allowable: it is not dismissed, but it is not taken as proof either, so revising by it gives {a,b,c} and the detective stops holding any view on Ann. The preorder ranks a below b and c and is one basic AGM revision behind the story.",
  "atoms": [
    "ann",
    "bob"
  ],
  "states": [
    {
      "id": "a",
      "true_atoms": [
        "ann"
      ]
    },
    {
      "id": "b",
      "true_atoms": [
        "bob"
      ]
    },
    {
      "id": "c",
      "true_atoms": []
    }
  ],
  "gcs": {
    "credible": [
      [
        "a",
        "b",
        "c"
      ]
    ],
    "allowable": [
      [
        "a"
      ]
    ],
    "rejected": [
      []
    ],
    "f": {
      "": [
        "b",
        "c"
      ],
      "a": [
        "a",
        "b",
        "c"
      ],
      "a,b,c": [
        "b",
        "c"
      ]
    }
  },
  "preorder": {
    "a": 1,
    "b": 0,
    "c": 0
  }
}
)json";

}  // namespace

std::string_view detective_scenario_json() { return kDetective; }

}  // namespace filtra
