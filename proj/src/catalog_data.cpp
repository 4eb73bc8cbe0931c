#include "catalog_data.hpp"

namespace brauerlab::detail {

// Embedded catalog entries, in the same schema as catalog override files.
const std::vector<EmbeddedEntry>& embedded_entries() {
  static const std::vector<EmbeddedEntry> entries = {
      {"perlis8", R"json(
{
  "entry":"perlis8",
  "equivalence":"arithmetic",
  "source":{
    "name":"perlis8.K",
    "degree":8,
    "signature":{"real":2,"complex":3},
    "primes":[
      {"q":2,"places":[{"e":2,"f":1},{"e":2,"f":1},{"e":2,"f":1},{"e":2,"f":1}]},
      {"q":7,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2}]},
      {"q":17,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1}]}
    ],
    "cebotarev_classes":[
      {"label":"all-f-even","infinite":true,"splitting_type":[{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2}],"primes":[3,11,19,43]},
      {"label":"mixed","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2},{"e":1,"f":4}],"primes":[5,13,23,29,31,37,47]},
      {"label":"split","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1}],"primes":[41]}
    ],
    "signature_verified":false
  },
  "target":{
    "name":"perlis8.Kp",
    "degree":8,
    "signature":{"real":2,"complex":3},
    "primes":[
      {"q":2,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":2,"f":1},{"e":4,"f":1}]},
      {"q":7,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2}]},
      {"q":17,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1}]}
    ],
    "cebotarev_classes":[
      {"label":"all-f-even","infinite":true,"splitting_type":[{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2}],"primes":[3,11,19,43]},
      {"label":"mixed","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2},{"e":1,"f":4}],"primes":[5,13,23,29,31,37,47]},
      {"label":"split","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1}],"primes":[41]}
    ],
    "signature_verified":false
  },
  "bijection":{"source":"perlis8.K","target":"perlis8.Kp","pairs":[{"q":2,"map":[0,1,2,3]},{"q":7,"map":[0,1,2,3,4]},{"q":17,"map":[0,1,2,3,4,5,6,7]}]},
  "notes":["degree-8 arithmetically equivalent, not locally equivalent pair; only the decomposition of 2 is sourced","unramified primes 7 and 17 and the Cebotarev classes are synthetic working data","archimedean signature (2,3) is a declared default"]
})json"},
      {"twin4", R"json(
{
  "entry":"twin4",
  "equivalence":"local",
  "source":{
    "name":"twin4.K",
    "degree":4,
    "signature":{"real":4,"complex":0},
    "primes":[
      {"q":5,"places":[{"e":1,"f":1},{"e":1,"f":3}]},
      {"q":13,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2}]}
    ],
    "cebotarev_classes":[
      {"label":"totally-split","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1}],"primes":[3,19,29,37]},
      {"label":"one-three","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":3}],"primes":[2,11,31,47]},
      {"label":"two-one-one","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2}],"primes":[7,23,41]},
      {"label":"inert","infinite":true,"splitting_type":[{"e":1,"f":4}],"primes":[17,43,53,59,61,67,71,73,79,83,89]}
    ]
  },
  "target":{
    "name":"twin4.Kp",
    "degree":4,
    "signature":{"real":4,"complex":0},
    "primes":[
      {"q":5,"places":[{"e":1,"f":1},{"e":1,"f":3}]},
      {"q":13,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2}]}
    ],
    "cebotarev_classes":[
      {"label":"totally-split","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1}],"primes":[3,19,29,37]},
      {"label":"one-three","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":3}],"primes":[2,11,31,47]},
      {"label":"two-one-one","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2}],"primes":[7,23,41]},
      {"label":"inert","infinite":true,"splitting_type":[{"e":1,"f":4}],"primes":[17,43,53,59,61,67,71,73,79,83,89]}
    ]
  },
  "bijection":{"source":"twin4.K","target":"twin4.Kp","pairs":[{"q":5,"map":[0,1]},{"q":13,"map":[0,1,2]}]},
  "notes":["synthetic locally equivalent twins: identical decomposition data under renaming"]
})json"},
      {"twin8", R"json(
{
  "entry":"twin8",
  "equivalence":"local",
  "source":{
    "name":"twin8.K",
    "degree":8,
    "signature":{"real":2,"complex":3},
    "primes":[
      {"q":2,"places":[{"e":2,"f":1},{"e":2,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2}]},
      {"q":3,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2},{"e":1,"f":4}]},
      {"q":5,"places":[{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":4}]},
      {"q":7,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1}]},
      {"q":11,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2}]},
      {"q":19,"places":[{"e":1,"f":1},{"e":1,"f":3},{"e":1,"f":4}]},
      {"q":23,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":4}]},
      {"q":29,"places":[{"e":1,"f":1},{"e":1,"f":7}]},
      {"q":31,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":3},{"e":1,"f":3}]},
      {"q":41,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2},{"e":1,"f":2}]}
    ],
    "cebotarev_classes":[
      {"label":"all-f-even","infinite":true,"splitting_type":[{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2}],"primes":[13,47,53,59]},
      {"label":"inert","infinite":true,"splitting_type":[{"e":1,"f":8}],"primes":[17,61]},
      {"label":"split","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1}],"primes":[37,43]}
    ]
  },
  "target":{
    "name":"twin8.Kp",
    "degree":8,
    "signature":{"real":2,"complex":3},
    "primes":[
      {"q":2,"places":[{"e":2,"f":1},{"e":2,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2}]},
      {"q":3,"places":[{"e":1,"f":4},{"e":1,"f":2},{"e":1,"f":1},{"e":1,"f":1}]},
      {"q":5,"places":[{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":4}]},
      {"q":7,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1}]},
      {"q":11,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2}]},
      {"q":19,"places":[{"e":1,"f":4},{"e":1,"f":3},{"e":1,"f":1}]},
      {"q":23,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":4}]},
      {"q":29,"places":[{"e":1,"f":1},{"e":1,"f":7}]},
      {"q":31,"places":[{"e":1,"f":3},{"e":1,"f":3},{"e":1,"f":1},{"e":1,"f":1}]},
      {"q":41,"places":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":2},{"e":1,"f":2}]}
    ],
    "cebotarev_classes":[
      {"label":"all-f-even","infinite":true,"splitting_type":[{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2},{"e":1,"f":2}],"primes":[13,47,53,59]},
      {"label":"inert","infinite":true,"splitting_type":[{"e":1,"f":8}],"primes":[17,61]},
      {"label":"split","infinite":true,"splitting_type":[{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1},{"e":1,"f":1}],"primes":[37,43]}
    ]
  },
  "bijection":{"source":"twin8.K","target":"twin8.Kp","pairs":[{"q":2,"map":[0,1,2,3,4]},{"q":3,"map":[3,2,1,0]},{"q":5,"map":[0,1,2]},{"q":7,"map":[0,1,2,3,4,5,6,7]},{"q":11,"map":[0,1,2,3,4]},{"q":19,"map":[2,1,0]},{"q":23,"map":[0,1,2,3,4]},{"q":29,"map":[0,1]},{"q":31,"map":[3,2,1,0]},{"q":41,"map":[0,1,2,3,4,5]}]},
  "notes":["synthetic locally equivalent twins; the target lists the places over 3, 19 and 31 in reverse order"]
})json"},
  };
  return entries;
}

}  // namespace brauerlab::detail
