#pragma once

#include <map>
#include <string>

namespace ratcells {

// Frozen corpus reports. Regenerated only on reviewed behavior changes;
// selftest compares byte-for-byte against these.
inline const std::map<std::string, std::string>& corpus_goldens() {
    static const std::map<std::string, std::string> goldens = {
        {"p1",
         R"GOLD({
  "kind": "fan",
  "rank": 1,
  "rays": [
    [
      1
    ],
    [
      -1
    ]
  ],
  "max_cones": [
    [
      0
    ],
    [
      1
    ]
  ],
  "validation": {
    "label": "complete (certified)",
    "complete": true,
    "simplicial": true,
    "defects": []
  },
  "lambda": [
    1
  ],
  "cells": [
    {
      "fixed_point": 0,
      "cell_dim": 1,
      "dense_cone_rays": [],
      "closure": "V({})",
      "attracting_weights": [
        [
          1
        ]
      ]
    },
    {
      "fixed_point": 1,
      "cell_dim": 0,
      "dense_cone_rays": [
        1
      ],
      "closure": "V({1})",
      "attracting_weights": []
    }
  ],
  "h_polynomial": [
    1,
    1
  ],
  "filtration_order": [
    1,
    0
  ],
  "basis_matrix": {
    "order": [
      1,
      0
    ],
    "classes": [
      {
        "closure_rays": [
          1
        ],
        "class_dim": 0,
        "entries": [
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0
                  ]
                ]
              ],
              "den": [],
              "string": "1"
            }
          }
        ]
      },
      {
        "closure_rays": [],
        "class_dim": 1,
        "entries": [
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1
                  ],
                  1
                ]
              ],
              "string": "-1/x"
            }
          },
          {
            "fixed_point": 0,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1
                  ],
                  1
                ]
              ],
              "string": "1/x"
            }
          }
        ]
      }
    ]
  },
  "ranks": {
    "per_degree": [
      1,
      1
    ],
    "total": 2,
    "fixed_points": 2,
    "free": true,
    "step_ranks": [
      1,
      2
    ]
  }
})GOLD"},
        {"p2",
         R"GOLD({
  "kind": "fan",
  "rank": 2,
  "rays": [
    [
      1,
      0
    ],
    [
      0,
      1
    ],
    [
      -1,
      -1
    ]
  ],
  "max_cones": [
    [
      0,
      1
    ],
    [
      1,
      2
    ],
    [
      0,
      2
    ]
  ],
  "validation": {
    "label": "complete (certified)",
    "complete": true,
    "simplicial": true,
    "defects": []
  },
  "lambda": [
    1,
    2
  ],
  "cells": [
    {
      "fixed_point": 0,
      "cell_dim": 2,
      "dense_cone_rays": [],
      "closure": "V({})",
      "attracting_weights": [
        [
          1,
          0
        ],
        [
          0,
          1
        ]
      ]
    },
    {
      "fixed_point": 1,
      "cell_dim": 1,
      "dense_cone_rays": [
        2
      ],
      "closure": "V({2})",
      "attracting_weights": [
        [
          -1,
          1
        ]
      ]
    },
    {
      "fixed_point": 2,
      "cell_dim": 0,
      "dense_cone_rays": [
        0,
        2
      ],
      "closure": "V({0,2})",
      "attracting_weights": []
    }
  ],
  "h_polynomial": [
    1,
    1,
    1
  ],
  "filtration_order": [
    2,
    1,
    0
  ],
  "basis_matrix": {
    "order": [
      2,
      1,
      0
    ],
    "classes": [
      {
        "closure_rays": [
          0,
          2
        ],
        "class_dim": 0,
        "entries": [
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [],
              "string": "1"
            }
          }
        ]
      },
      {
        "closure_rays": [
          2
        ],
        "class_dim": 1,
        "entries": [
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    -1
                  ],
                  1
                ]
              ],
              "string": "1/(x - y)"
            }
          },
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    -1
                  ],
                  1
                ]
              ],
              "string": "-1/(x - y)"
            }
          }
        ]
      },
      {
        "closure_rays": [],
        "class_dim": 2,
        "entries": [
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    1,
                    -1
                  ],
                  1
                ]
              ],
              "string": "-1/(y*(x - y))"
            }
          },
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    -1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "1/((x - y)*x)"
            }
          },
          {
            "fixed_point": 0,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "1/(y*x)"
            }
          }
        ]
      }
    ]
  },
  "ranks": {
    "per_degree": [
      1,
      1,
      1
    ],
    "total": 3,
    "fixed_points": 3,
    "free": true,
    "step_ranks": [
      1,
      2,
      3
    ]
  }
})GOLD"},
        {"p1xp1",
         R"GOLD({
  "kind": "fan",
  "rank": 2,
  "rays": [
    [
      1,
      0
    ],
    [
      0,
      1
    ],
    [
      -1,
      0
    ],
    [
      0,
      -1
    ]
  ],
  "max_cones": [
    [
      0,
      1
    ],
    [
      1,
      2
    ],
    [
      2,
      3
    ],
    [
      0,
      3
    ]
  ],
  "validation": {
    "label": "complete (certified)",
    "complete": true,
    "simplicial": true,
    "defects": []
  },
  "lambda": [
    1,
    2
  ],
  "cells": [
    {
      "fixed_point": 0,
      "cell_dim": 2,
      "dense_cone_rays": [],
      "closure": "V({})",
      "attracting_weights": [
        [
          1,
          0
        ],
        [
          0,
          1
        ]
      ]
    },
    {
      "fixed_point": 1,
      "cell_dim": 1,
      "dense_cone_rays": [
        2
      ],
      "closure": "V({2})",
      "attracting_weights": [
        [
          0,
          1
        ]
      ]
    },
    {
      "fixed_point": 2,
      "cell_dim": 0,
      "dense_cone_rays": [
        2,
        3
      ],
      "closure": "V({2,3})",
      "attracting_weights": []
    },
    {
      "fixed_point": 3,
      "cell_dim": 1,
      "dense_cone_rays": [
        3
      ],
      "closure": "V({3})",
      "attracting_weights": [
        [
          1,
          0
        ]
      ]
    }
  ],
  "h_polynomial": [
    1,
    2,
    1
  ],
  "filtration_order": [
    2,
    1,
    3,
    0
  ],
  "basis_matrix": {
    "order": [
      2,
      1,
      3,
      0
    ],
    "classes": [
      {
        "closure_rays": [
          2,
          3
        ],
        "class_dim": 0,
        "entries": [
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [],
              "string": "1"
            }
          }
        ]
      },
      {
        "closure_rays": [
          2
        ],
        "class_dim": 1,
        "entries": [
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ]
              ],
              "string": "-1/y"
            }
          },
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ]
              ],
              "string": "1/y"
            }
          }
        ]
      },
      {
        "closure_rays": [
          3
        ],
        "class_dim": 1,
        "entries": [
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "-1/x"
            }
          },
          {
            "fixed_point": 3,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "1/x"
            }
          }
        ]
      },
      {
        "closure_rays": [],
        "class_dim": 2,
        "entries": [
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "1/(y*x)"
            }
          },
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "-1/(y*x)"
            }
          },
          {
            "fixed_point": 3,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "-1/(y*x)"
            }
          },
          {
            "fixed_point": 0,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "1/(y*x)"
            }
          }
        ]
      }
    ]
  },
  "ranks": {
    "per_degree": [
      1,
      2,
      1
    ],
    "total": 4,
    "fixed_points": 4,
    "free": true,
    "step_ranks": [
      1,
      2,
      3,
      4
    ]
  }
})GOLD"},
        {"hirzebruch1",
         R"GOLD({
  "kind": "fan",
  "rank": 2,
  "rays": [
    [
      1,
      0
    ],
    [
      0,
      1
    ],
    [
      -1,
      1
    ],
    [
      0,
      -1
    ]
  ],
  "max_cones": [
    [
      0,
      1
    ],
    [
      1,
      2
    ],
    [
      2,
      3
    ],
    [
      0,
      3
    ]
  ],
  "validation": {
    "label": "complete (certified)",
    "complete": true,
    "simplicial": true,
    "defects": []
  },
  "lambda": [
    1,
    2
  ],
  "cells": [
    {
      "fixed_point": 0,
      "cell_dim": 2,
      "dense_cone_rays": [],
      "closure": "V({})",
      "attracting_weights": [
        [
          1,
          0
        ],
        [
          0,
          1
        ]
      ]
    },
    {
      "fixed_point": 1,
      "cell_dim": 1,
      "dense_cone_rays": [
        2
      ],
      "closure": "V({2})",
      "attracting_weights": [
        [
          1,
          1
        ]
      ]
    },
    {
      "fixed_point": 2,
      "cell_dim": 0,
      "dense_cone_rays": [
        2,
        3
      ],
      "closure": "V({2,3})",
      "attracting_weights": []
    },
    {
      "fixed_point": 3,
      "cell_dim": 1,
      "dense_cone_rays": [
        3
      ],
      "closure": "V({3})",
      "attracting_weights": [
        [
          1,
          0
        ]
      ]
    }
  ],
  "h_polynomial": [
    1,
    2,
    1
  ],
  "filtration_order": [
    2,
    1,
    3,
    0
  ],
  "basis_matrix": {
    "order": [
      2,
      1,
      3,
      0
    ],
    "classes": [
      {
        "closure_rays": [
          2,
          3
        ],
        "class_dim": 0,
        "entries": [
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [],
              "string": "1"
            }
          }
        ]
      },
      {
        "closure_rays": [
          2
        ],
        "class_dim": 1,
        "entries": [
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    1
                  ],
                  1
                ]
              ],
              "string": "-1/(x + y)"
            }
          },
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    1
                  ],
                  1
                ]
              ],
              "string": "1/(x + y)"
            }
          }
        ]
      },
      {
        "closure_rays": [
          3
        ],
        "class_dim": 1,
        "entries": [
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "-1/x"
            }
          },
          {
            "fixed_point": 3,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "1/x"
            }
          }
        ]
      },
      {
        "closure_rays": [],
        "class_dim": 2,
        "entries": [
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    0
                  ],
                  1
                ],
                [
                  [
                    1,
                    1
                  ],
                  1
                ]
              ],
              "string": "1/(x*(x + y))"
            }
          },
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    0
                  ],
                  1
                ],
                [
                  [
                    1,
                    1
                  ],
                  1
                ]
              ],
              "string": "-1/(x*(x + y))"
            }
          },
          {
            "fixed_point": 3,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "-1/(y*x)"
            }
          },
          {
            "fixed_point": 0,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "1/(y*x)"
            }
          }
        ]
      }
    ]
  },
  "ranks": {
    "per_degree": [
      1,
      2,
      1
    ],
    "total": 4,
    "fixed_points": 4,
    "free": true,
    "step_ranks": [
      1,
      2,
      3,
      4
    ]
  }
})GOLD"},
        {"p112",
         R"GOLD({
  "kind": "fan",
  "rank": 2,
  "rays": [
    [
      1,
      0
    ],
    [
      0,
      1
    ],
    [
      -1,
      -2
    ]
  ],
  "max_cones": [
    [
      0,
      1
    ],
    [
      1,
      2
    ],
    [
      0,
      2
    ]
  ],
  "validation": {
    "label": "complete (certified)",
    "complete": true,
    "simplicial": true,
    "defects": []
  },
  "lambda": [
    1,
    1
  ],
  "cells": [
    {
      "fixed_point": 0,
      "cell_dim": 2,
      "dense_cone_rays": [],
      "closure": "V({})",
      "attracting_weights": [
        [
          1,
          0
        ],
        [
          0,
          1
        ]
      ]
    },
    {
      "fixed_point": 1,
      "cell_dim": 0,
      "dense_cone_rays": [
        1,
        2
      ],
      "closure": "V({1,2})",
      "attracting_weights": []
    },
    {
      "fixed_point": 2,
      "cell_dim": 1,
      "dense_cone_rays": [
        2
      ],
      "closure": "V({2})",
      "attracting_weights": [
        [
          2,
          -1
        ]
      ]
    }
  ],
  "h_polynomial": [
    1,
    1,
    1
  ],
  "filtration_order": [
    1,
    2,
    0
  ],
  "basis_matrix": {
    "order": [
      1,
      2,
      0
    ],
    "classes": [
      {
        "closure_rays": [
          1,
          2
        ],
        "class_dim": 0,
        "entries": [
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [],
              "string": "1"
            }
          }
        ]
      },
      {
        "closure_rays": [
          2
        ],
        "class_dim": 1,
        "entries": [
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    2,
                    -1
                  ],
                  1
                ]
              ],
              "string": "-1/(2x - y)"
            }
          },
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    2,
                    -1
                  ],
                  1
                ]
              ],
              "string": "1/(2x - y)"
            }
          }
        ]
      },
      {
        "closure_rays": [],
        "class_dim": 2,
        "entries": [
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    0
                  ],
                  1
                ],
                [
                  [
                    2,
                    -1
                  ],
                  1
                ]
              ],
              "string": "1/(x*(2x - y))"
            }
          },
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  -2,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    2,
                    -1
                  ],
                  1
                ]
              ],
              "string": "-2/(y*(2x - y))"
            }
          },
          {
            "fixed_point": 0,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0
                  ],
                  1
                ]
              ],
              "string": "1/(y*x)"
            }
          }
        ]
      }
    ]
  },
  "ranks": {
    "per_degree": [
      1,
      1,
      1
    ],
    "total": 3,
    "fixed_points": 3,
    "free": true,
    "step_ranks": [
      1,
      2,
      3
    ]
  }
})GOLD"},
        {"p3",
         R"GOLD({
  "kind": "fan",
  "rank": 3,
  "rays": [
    [
      1,
      0,
      0
    ],
    [
      0,
      1,
      0
    ],
    [
      0,
      0,
      1
    ],
    [
      -1,
      -1,
      -1
    ]
  ],
  "max_cones": [
    [
      0,
      1,
      2
    ],
    [
      0,
      1,
      3
    ],
    [
      0,
      2,
      3
    ],
    [
      1,
      2,
      3
    ]
  ],
  "validation": {
    "label": "complete (certified)",
    "complete": true,
    "simplicial": true,
    "defects": []
  },
  "lambda": [
    1,
    2,
    4
  ],
  "cells": [
    {
      "fixed_point": 0,
      "cell_dim": 3,
      "dense_cone_rays": [],
      "closure": "V({})",
      "attracting_weights": [
        [
          1,
          0,
          0
        ],
        [
          0,
          1,
          0
        ],
        [
          0,
          0,
          1
        ]
      ]
    },
    {
      "fixed_point": 1,
      "cell_dim": 0,
      "dense_cone_rays": [
        0,
        1,
        3
      ],
      "closure": "V({0,1,3})",
      "attracting_weights": []
    },
    {
      "fixed_point": 2,
      "cell_dim": 1,
      "dense_cone_rays": [
        0,
        3
      ],
      "closure": "V({0,3})",
      "attracting_weights": [
        [
          0,
          -1,
          1
        ]
      ]
    },
    {
      "fixed_point": 3,
      "cell_dim": 2,
      "dense_cone_rays": [
        3
      ],
      "closure": "V({3})",
      "attracting_weights": [
        [
          -1,
          1,
          0
        ],
        [
          -1,
          0,
          1
        ]
      ]
    }
  ],
  "h_polynomial": [
    1,
    1,
    1,
    1
  ],
  "filtration_order": [
    1,
    2,
    3,
    0
  ],
  "basis_matrix": {
    "order": [
      1,
      2,
      3,
      0
    ],
    "classes": [
      {
        "closure_rays": [
          0,
          1,
          3
        ],
        "class_dim": 0,
        "entries": [
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0,
                    0
                  ]
                ]
              ],
              "den": [],
              "string": "1"
            }
          }
        ]
      },
      {
        "closure_rays": [
          0,
          3
        ],
        "class_dim": 1,
        "entries": [
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1,
                    -1
                  ],
                  1
                ]
              ],
              "string": "1/(y - z)"
            }
          },
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1,
                    -1
                  ],
                  1
                ]
              ],
              "string": "-1/(y - z)"
            }
          }
        ]
      },
      {
        "closure_rays": [
          3
        ],
        "class_dim": 2,
        "entries": [
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1,
                    -1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0,
                    -1
                  ],
                  1
                ]
              ],
              "string": "1/((y - z)*(x - z))"
            }
          },
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1,
                    -1
                  ],
                  1
                ],
                [
                  [
                    1,
                    -1,
                    0
                  ],
                  1
                ]
              ],
              "string": "-1/((y - z)*(x - y))"
            }
          },
          {
            "fixed_point": 3,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    -1,
                    0
                  ],
                  1
                ],
                [
                  [
                    1,
                    0,
                    -1
                  ],
                  1
                ]
              ],
              "string": "1/((x - y)*(x - z))"
            }
          }
        ]
      },
      {
        "closure_rays": [],
        "class_dim": 3,
        "entries": [
          {
            "fixed_point": 1,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    0,
                    1,
                    -1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0,
                    -1
                  ],
                  1
                ]
              ],
              "string": "-1/(z*(y - z)*(x - z))"
            }
          },
          {
            "fixed_point": 2,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    1,
                    -1
                  ],
                  1
                ],
                [
                  [
                    0,
                    1,
                    0
                  ],
                  1
                ],
                [
                  [
                    1,
                    -1,
                    0
                  ],
                  1
                ]
              ],
              "string": "1/((y - z)*y*(x - y))"
            }
          },
          {
            "fixed_point": 3,
            "value": {
              "num": [
                [
                  -1,
                  1,
                  [
                    0,
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    1,
                    -1,
                    0
                  ],
                  1
                ],
                [
                  [
                    1,
                    0,
                    -1
                  ],
                  1
                ],
                [
                  [
                    1,
                    0,
                    0
                  ],
                  1
                ]
              ],
              "string": "-1/((x - y)*(x - z)*x)"
            }
          },
          {
            "fixed_point": 0,
            "value": {
              "num": [
                [
                  1,
                  1,
                  [
                    0,
                    0,
                    0
                  ]
                ]
              ],
              "den": [
                [
                  [
                    0,
                    0,
                    1
                  ],
                  1
                ],
                [
                  [
                    0,
                    1,
                    0
                  ],
                  1
                ],
                [
                  [
                    1,
                    0,
                    0
                  ],
                  1
                ]
              ],
              "string": "1/(z*y*x)"
            }
          }
        ]
      }
    ]
  },
  "ranks": {
    "per_degree": [
      1,
      1,
      1,
      1
    ],
    "total": 4,
    "fixed_points": 4,
    "free": true,
    "step_ranks": [
      1,
      2,
      3,
      4
    ]
  }
})GOLD"},
        {"smooth2",
         R"GOLD({
  "kind": "cone",
  "rank": 2,
  "rays": [
    [
      1,
      0
    ],
    [
      0,
      1
    ]
  ],
  "dimension": 2,
  "simplicial": true,
  "multiplicity": 1,
  "e0": {
    "num": [
      [
        1,
        1,
        [
          0,
          0
        ]
      ]
    ],
    "den": [
      [
        [
          0,
          1
        ],
        1
      ],
      [
        [
          1,
          0
        ],
        1
      ]
    ],
    "string": "1/(y*x)"
  },
  "e0_degree": -2,
  "rational_cell": {
    "verdict": true,
    "ray_count": 2,
    "dimension": 2,
    "cover_degree": 1,
    "cover_weights": [
      [
        0,
        1
      ],
      [
        1,
        0
      ]
    ],
    "curve_characters": [
      [
        0,
        1
      ],
      [
        1,
        0
      ]
    ]
  }
})GOLD"},
        {"singular2",
         R"GOLD({
  "kind": "cone",
  "rank": 2,
  "rays": [
    [
      1,
      0
    ],
    [
      1,
      2
    ]
  ],
  "dimension": 2,
  "simplicial": true,
  "multiplicity": 2,
  "e0": {
    "num": [
      [
        2,
        1,
        [
          0,
          0
        ]
      ]
    ],
    "den": [
      [
        [
          0,
          1
        ],
        1
      ],
      [
        [
          2,
          -1
        ],
        1
      ]
    ],
    "string": "2/(y*(2x - y))"
  },
  "e0_degree": -2,
  "rational_cell": {
    "verdict": true,
    "ray_count": 2,
    "dimension": 2,
    "cover_degree": 2,
    "cover_weights": [
      [
        0,
        1
      ],
      [
        2,
        -1
      ]
    ],
    "curve_characters": [
      [
        0,
        1
      ],
      [
        2,
        -1
      ]
    ]
  }
})GOLD"},
        {"singular3",
         R"GOLD({
  "kind": "cone",
  "rank": 2,
  "rays": [
    [
      1,
      0
    ],
    [
      1,
      3
    ]
  ],
  "dimension": 2,
  "simplicial": true,
  "multiplicity": 3,
  "e0": {
    "num": [
      [
        3,
        1,
        [
          0,
          0
        ]
      ]
    ],
    "den": [
      [
        [
          0,
          1
        ],
        1
      ],
      [
        [
          3,
          -1
        ],
        1
      ]
    ],
    "string": "3/(y*(3x - y))"
  },
  "e0_degree": -2,
  "rational_cell": {
    "verdict": true,
    "ray_count": 2,
    "dimension": 2,
    "cover_degree": 3,
    "cover_weights": [
      [
        0,
        1
      ],
      [
        3,
        -1
      ]
    ],
    "curve_characters": [
      [
        0,
        1
      ],
      [
        3,
        -1
      ]
    ]
  }
})GOLD"},
        {"cone_over_square",
         R"GOLD({
  "kind": "cone",
  "rank": 3,
  "rays": [
    [
      1,
      0,
      0
    ],
    [
      0,
      1,
      0
    ],
    [
      1,
      0,
      1
    ],
    [
      0,
      1,
      1
    ]
  ],
  "dimension": 3,
  "simplicial": false,
  "e0": {
    "num": [
      [
        1,
        1,
        [
          1,
          0,
          0
        ]
      ],
      [
        1,
        1,
        [
          0,
          1,
          0
        ]
      ]
    ],
    "den": [
      [
        [
          0,
          0,
          1
        ],
        1
      ],
      [
        [
          0,
          1,
          0
        ],
        1
      ],
      [
        [
          1,
          0,
          0
        ],
        1
      ],
      [
        [
          1,
          1,
          -1
        ],
        1
      ]
    ],
    "string": "(x + y)/(z*y*x*(x + y - z))"
  },
  "e0_degree": -3,
  "rational_cell": {
    "verdict": false,
    "ray_count": 4,
    "dimension": 3,
    "curve_characters": [
      [
        0,
        0,
        1
      ],
      [
        0,
        1,
        0
      ],
      [
        1,
        0,
        0
      ],
      [
        1,
        1,
        -1
      ]
    ],
    "failure_reason": "curve count l(x) = 4 exceeds dim X = 3"
  }
})GOLD"},
        {"dual_of_cone_over_square",
         R"GOLD({
  "kind": "cone",
  "rank": 3,
  "rays": [
    [
      0,
      0,
      1
    ],
    [
      1,
      0,
      0
    ],
    [
      0,
      1,
      0
    ],
    [
      1,
      1,
      -1
    ]
  ],
  "dimension": 3,
  "simplicial": false,
  "e0": {
    "num": [
      [
        1,
        1,
        [
          1,
          0,
          0
        ]
      ],
      [
        1,
        1,
        [
          0,
          1,
          0
        ]
      ],
      [
        1,
        1,
        [
          0,
          0,
          1
        ]
      ]
    ],
    "den": [
      [
        [
          0,
          1,
          0
        ],
        1
      ],
      [
        [
          0,
          1,
          1
        ],
        1
      ],
      [
        [
          1,
          0,
          0
        ],
        1
      ],
      [
        [
          1,
          0,
          1
        ],
        1
      ]
    ],
    "string": "(x + y + z)/(y*(y + z)*x*(x + z))"
  },
  "e0_degree": -3,
  "rational_cell": {
    "verdict": false,
    "ray_count": 4,
    "dimension": 3,
    "curve_characters": [
      [
        0,
        1,
        0
      ],
      [
        0,
        1,
        1
      ],
      [
        1,
        0,
        0
      ],
      [
        1,
        0,
        1
      ]
    ],
    "failure_reason": "curve count l(x) = 4 exceeds dim X = 3"
  }
})GOLD"},
        {"m2",
         R"GOLD({
  "kind": "monoid",
  "weyl": {
    "family": "A",
    "rank": 1,
    "order": 2
  },
  "dominant_points": [
    [
      1,
      0
    ]
  ],
  "dim_T": 2,
  "E1": 2,
  "R1": 4,
  "dim_M": 4,
  "rational_cell_b": true,
  "rational_cell_f": true,
  "equivalence_ok": true,
  "polytope": {
    "rank": 2,
    "dim": 1,
    "vertices": [
      [
        0,
        1
      ],
      [
        1,
        0
      ]
    ]
  },
  "vertex_orbit_sizes": [
    2
  ],
  "quasismooth": true,
  "per_vertex_edge_counts": [
    1,
    1
  ],
  "polytope_dim": 1,
  "lambda": [
    {
      "rank": 0,
      "rays": [],
      "centralizer_order": 2
    },
    {
      "rank": 1,
      "rays": [
        [
          1,
          0
        ]
      ],
      "centralizer_order": 1
    },
    {
      "rank": 2,
      "rays": [
        [
          0,
          1
        ],
        [
          1,
          0
        ]
      ],
      "centralizer_order": 2
    }
  ],
  "lambda_rank_counts": [
    1,
    1,
    1
  ],
  "embedding_chow_rank": 4
})GOLD"},
        {"m3",
         R"GOLD({
  "kind": "monoid",
  "weyl": {
    "family": "A",
    "rank": 2,
    "order": 6
  },
  "dominant_points": [
    [
      1,
      0,
      0
    ]
  ],
  "dim_T": 3,
  "E1": 3,
  "R1": 9,
  "dim_M": 9,
  "rational_cell_b": true,
  "rational_cell_f": true,
  "equivalence_ok": true,
  "polytope": {
    "rank": 3,
    "dim": 2,
    "vertices": [
      [
        0,
        0,
        1
      ],
      [
        0,
        1,
        0
      ],
      [
        1,
        0,
        0
      ]
    ]
  },
  "vertex_orbit_sizes": [
    3
  ],
  "quasismooth": true,
  "per_vertex_edge_counts": [
    2,
    2,
    2
  ],
  "polytope_dim": 2,
  "lambda": [
    {
      "rank": 0,
      "rays": [],
      "centralizer_order": 6
    },
    {
      "rank": 1,
      "rays": [
        [
          1,
          0,
          0
        ]
      ],
      "centralizer_order": 2
    },
    {
      "rank": 2,
      "rays": [
        [
          0,
          1,
          0
        ],
        [
          1,
          0,
          0
        ]
      ],
      "centralizer_order": 2
    },
    {
      "rank": 3,
      "rays": [
        [
          0,
          0,
          1
        ],
        [
          0,
          1,
          0
        ],
        [
          1,
          0,
          0
        ]
      ],
      "centralizer_order": 6
    }
  ],
  "lambda_rank_counts": [
    1,
    1,
    1,
    1
  ],
  "embedding_chow_rank": 9
})GOLD"},
        {"m4",
         R"GOLD({
  "kind": "monoid",
  "weyl": {
    "family": "A",
    "rank": 3,
    "order": 24
  },
  "dominant_points": [
    [
      1,
      0,
      0,
      0
    ]
  ],
  "dim_T": 4,
  "E1": 4,
  "R1": 16,
  "dim_M": 16,
  "rational_cell_b": true,
  "rational_cell_f": true,
  "equivalence_ok": true,
  "polytope": {
    "rank": 4,
    "dim": 3,
    "vertices": [
      [
        0,
        0,
        0,
        1
      ],
      [
        0,
        0,
        1,
        0
      ],
      [
        0,
        1,
        0,
        0
      ],
      [
        1,
        0,
        0,
        0
      ]
    ]
  },
  "vertex_orbit_sizes": [
    4
  ],
  "quasismooth": true,
  "per_vertex_edge_counts": [
    3,
    3,
    3,
    3
  ],
  "polytope_dim": 3,
  "lambda": [
    {
      "rank": 0,
      "rays": [],
      "centralizer_order": 24
    },
    {
      "rank": 1,
      "rays": [
        [
          1,
          0,
          0,
          0
        ]
      ],
      "centralizer_order": 6
    },
    {
      "rank": 2,
      "rays": [
        [
          0,
          1,
          0,
          0
        ],
        [
          1,
          0,
          0,
          0
        ]
      ],
      "centralizer_order": 4
    },
    {
      "rank": 3,
      "rays": [
        [
          0,
          0,
          1,
          0
        ],
        [
          0,
          1,
          0,
          0
        ],
        [
          1,
          0,
          0,
          0
        ]
      ],
      "centralizer_order": 6
    },
    {
      "rank": 4,
      "rays": [
        [
          0,
          0,
          0,
          1
        ],
        [
          0,
          0,
          1,
          0
        ],
        [
          0,
          1,
          0,
          0
        ],
        [
          1,
          0,
          0,
          0
        ]
      ],
      "centralizer_order": 24
    }
  ],
  "lambda_rank_counts": [
    1,
    1,
    1,
    1,
    1
  ],
  "embedding_chow_rank": 16
})GOLD"},
        {"b3_octahedron",
         R"GOLD({
  "kind": "monoid",
  "weyl": {
    "family": "B",
    "rank": 3,
    "order": 48
  },
  "dominant_points": [
    [
      1,
      0,
      0
    ]
  ],
  "dim_T": 4,
  "E1": 6,
  "R1": 36,
  "dim_M": 22,
  "rational_cell_b": false,
  "rational_cell_f": false,
  "equivalence_ok": true,
  "polytope": {
    "rank": 3,
    "dim": 3,
    "vertices": [
      [
        -1,
        0,
        0
      ],
      [
        0,
        -1,
        0
      ],
      [
        0,
        0,
        -1
      ],
      [
        0,
        0,
        1
      ],
      [
        0,
        1,
        0
      ],
      [
        1,
        0,
        0
      ]
    ]
  },
  "vertex_orbit_sizes": [
    6
  ],
  "quasismooth": false,
  "per_vertex_edge_counts": [
    4,
    4,
    4,
    4,
    4,
    4
  ],
  "polytope_dim": 3,
  "lambda": [
    {
      "rank": 0,
      "rays": [],
      "centralizer_order": 48
    },
    {
      "rank": 1,
      "rays": [
        [
          1,
          0,
          0,
          1
        ]
      ],
      "centralizer_order": 8
    },
    {
      "rank": 2,
      "rays": [
        [
          0,
          1,
          0,
          1
        ],
        [
          1,
          0,
          0,
          1
        ]
      ],
      "centralizer_order": 4
    },
    {
      "rank": 3,
      "rays": [
        [
          0,
          0,
          1,
          1
        ],
        [
          0,
          1,
          0,
          1
        ],
        [
          1,
          0,
          0,
          1
        ]
      ],
      "centralizer_order": 6
    },
    {
      "rank": 4,
      "rays": [
        [
          -1,
          0,
          0,
          1
        ],
        [
          0,
          -1,
          0,
          1
        ],
        [
          0,
          0,
          -1,
          1
        ],
        [
          0,
          0,
          1,
          1
        ],
        [
          0,
          1,
          0,
          1
        ],
        [
          1,
          0,
          0,
          1
        ]
      ],
      "centralizer_order": 48
    }
  ],
  "lambda_rank_counts": [
    1,
    1,
    1,
    1,
    1
  ],
  "embedding_chow_rank": null,
  "embedding_chow_rank_error": "not quasismooth: the projective embedding need not be filtrable by rational cells"
})GOLD"},
        {"b3_cube",
         R"GOLD({
  "kind": "monoid",
  "weyl": {
    "family": "B",
    "rank": 3,
    "order": 48
  },
  "dominant_points": [
    [
      1,
      1,
      1
    ]
  ],
  "dim_T": 4,
  "E1": 8,
  "R1": 64,
  "dim_M": 22,
  "rational_cell_b": false,
  "rational_cell_f": false,
  "equivalence_ok": true,
  "polytope": {
    "rank": 3,
    "dim": 3,
    "vertices": [
      [
        -1,
        -1,
        -1
      ],
      [
        -1,
        -1,
        1
      ],
      [
        -1,
        1,
        -1
      ],
      [
        -1,
        1,
        1
      ],
      [
        1,
        -1,
        -1
      ],
      [
        1,
        -1,
        1
      ],
      [
        1,
        1,
        -1
      ],
      [
        1,
        1,
        1
      ]
    ]
  },
  "vertex_orbit_sizes": [
    8
  ],
  "quasismooth": true,
  "per_vertex_edge_counts": [
    3,
    3,
    3,
    3,
    3,
    3,
    3,
    3
  ],
  "polytope_dim": 3,
  "lambda": [
    {
      "rank": 0,
      "rays": [],
      "centralizer_order": 48
    },
    {
      "rank": 1,
      "rays": [
        [
          1,
          1,
          1,
          1
        ]
      ],
      "centralizer_order": 6
    },
    {
      "rank": 2,
      "rays": [
        [
          1,
          1,
          -1,
          1
        ],
        [
          1,
          1,
          1,
          1
        ]
      ],
      "centralizer_order": 4
    },
    {
      "rank": 3,
      "rays": [
        [
          1,
          -1,
          -1,
          1
        ],
        [
          1,
          -1,
          1,
          1
        ],
        [
          1,
          1,
          -1,
          1
        ],
        [
          1,
          1,
          1,
          1
        ]
      ],
      "centralizer_order": 8
    },
    {
      "rank": 4,
      "rays": [
        [
          -1,
          -1,
          -1,
          1
        ],
        [
          -1,
          -1,
          1,
          1
        ],
        [
          -1,
          1,
          -1,
          1
        ],
        [
          -1,
          1,
          1,
          1
        ],
        [
          1,
          -1,
          -1,
          1
        ],
        [
          1,
          -1,
          1,
          1
        ],
        [
          1,
          1,
          -1,
          1
        ],
        [
          1,
          1,
          1,
          1
        ]
      ],
      "centralizer_order": 48
    }
  ],
  "lambda_rank_counts": [
    1,
    1,
    1,
    1,
    1
  ],
  "embedding_chow_rank": 64
})GOLD"},
        {"c2_square",
         R"GOLD({
  "kind": "monoid",
  "weyl": {
    "family": "C",
    "rank": 2,
    "order": 8
  },
  "dominant_points": [
    [
      1,
      1
    ]
  ],
  "dim_T": 3,
  "E1": 4,
  "R1": 16,
  "dim_M": 11,
  "rational_cell_b": false,
  "rational_cell_f": false,
  "equivalence_ok": true,
  "polytope": {
    "rank": 2,
    "dim": 2,
    "vertices": [
      [
        -1,
        -1
      ],
      [
        -1,
        1
      ],
      [
        1,
        -1
      ],
      [
        1,
        1
      ]
    ]
  },
  "vertex_orbit_sizes": [
    4
  ],
  "quasismooth": true,
  "per_vertex_edge_counts": [
    2,
    2,
    2,
    2
  ],
  "polytope_dim": 2,
  "lambda": [
    {
      "rank": 0,
      "rays": [],
      "centralizer_order": 8
    },
    {
      "rank": 1,
      "rays": [
        [
          1,
          1,
          1
        ]
      ],
      "centralizer_order": 2
    },
    {
      "rank": 2,
      "rays": [
        [
          1,
          -1,
          1
        ],
        [
          1,
          1,
          1
        ]
      ],
      "centralizer_order": 2
    },
    {
      "rank": 3,
      "rays": [
        [
          -1,
          -1,
          1
        ],
        [
          -1,
          1,
          1
        ],
        [
          1,
          -1,
          1
        ],
        [
          1,
          1,
          1
        ]
      ],
      "centralizer_order": 8
    }
  ],
  "lambda_rank_counts": [
    1,
    1,
    1,
    1
  ],
  "embedding_chow_rank": 16
})GOLD"},
        {"d2_diamond",
         R"GOLD({
  "kind": "monoid",
  "weyl": {
    "family": "D",
    "rank": 2,
    "order": 4
  },
  "dominant_points": [
    [
      1,
      0
    ]
  ],
  "dim_T": 3,
  "E1": 4,
  "R1": 16,
  "dim_M": 7,
  "rational_cell_b": false,
  "rational_cell_f": false,
  "equivalence_ok": true,
  "polytope": {
    "rank": 2,
    "dim": 2,
    "vertices": [
      [
        -1,
        0
      ],
      [
        0,
        -1
      ],
      [
        0,
        1
      ],
      [
        1,
        0
      ]
    ]
  },
  "vertex_orbit_sizes": [
    4
  ],
  "quasismooth": true,
  "per_vertex_edge_counts": [
    2,
    2,
    2,
    2
  ],
  "polytope_dim": 2,
  "lambda": [
    {
      "rank": 0,
      "rays": [],
      "centralizer_order": 4
    },
    {
      "rank": 1,
      "rays": [
        [
          1,
          0,
          1
        ]
      ],
      "centralizer_order": 1
    },
    {
      "rank": 2,
      "rays": [
        [
          0,
          -1,
          1
        ],
        [
          1,
          0,
          1
        ]
      ],
      "centralizer_order": 2
    },
    {
      "rank": 2,
      "rays": [
        [
          0,
          1,
          1
        ],
        [
          1,
          0,
          1
        ]
      ],
      "centralizer_order": 2
    },
    {
      "rank": 3,
      "rays": [
        [
          -1,
          0,
          1
        ],
        [
          0,
          -1,
          1
        ],
        [
          0,
          1,
          1
        ],
        [
          1,
          0,
          1
        ]
      ],
      "centralizer_order": 4
    }
  ],
  "lambda_rank_counts": [
    1,
    1,
    2,
    1
  ],
  "embedding_chow_rank": 16
})GOLD"},
    };
    return goldens;
}

} // namespace ratcells
