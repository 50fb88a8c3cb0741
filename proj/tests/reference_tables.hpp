#pragma once

#include <array>
#include <vector>

// Reference cells, row-major: pure rows for each epsilon, fiducial-Bayes rows,
// then the mixture row. The last column is the limit.
struct ReferenceTable {
  int id;
  std::vector<std::vector<double>> rows;
};

inline const std::array<ReferenceTable, 5>& reference_tables() {
  static const std::array<ReferenceTable, 5> tables{{
      {1,
       {
           {0.1522, 0.0949, 0.1080, 0.2005, 0.3779, 0.7073, 0.9602, 1},
           {0.1449, 0.0923, 0.1067, 0.2003, 0.3786, 0.7084, 0.9605, 1},
           {0.1387, 0.0904, 0.1061, 0.2011, 0.3808, 0.7108, 0.9609, 1},
           {0.0489, 0.0337, 0.0327, 0.0330, 0.0330, 0.0330, 0.0330, 0.0330},
           {0.0489, 0.0340, 0.0330, 0.0333, 0.0333, 0.0333, 0.0333, 0.0333},
           {0.0520, 0.0356, 0.0344, 0.0346, 0.0346, 0.0346, 0.0346, 0.0346},
           {0.0696, 0.0459, 0.0478, 0.0665, 0.1020, 0.1679, 0.2185, 0.2264},
       }},
      {2,
       {
           {0.4422, 0.5305, 0.6648, 0.8262, 0.9219, 0.9792, 0.9979, 1},
           {0.4462, 0.5377, 0.6739, 0.8333, 0.9257, 0.9804, 0.9980, 1},
           {0.4508, 0.5456, 0.6834, 0.8406, 0.9296, 0.9815, 0.9981, 1},
           {0.3795, 0.3893, 0.3966, 0.3994, 0.3999, 0.4000, 0.4000, 0.4000},
           {0.3777, 0.3887, 0.3966, 0.3996, 0.4001, 0.4002, 0.4002, 0.4002},
           {0.3764, 0.3887, 0.3971, 0.4003, 0.4009, 0.4010, 0.4010, 0.4010},
           {0.3921, 0.4175, 0.4502, 0.4848, 0.5043, 0.5158, 0.5196, 0.5200},
       }},
      {3,
       {
           {0.4853, 0.5985, 0.7332, 0.8701, 0.9434, 0.9852, 0.9985, 1},
           {0.4942, 0.6109, 0.7457, 0.8784, 0.9475, 0.9864, 0.9986, 1},
           {0.5042, 0.6244, 0.7588, 0.8867, 0.9516, 0.9875, 0.9987, 1},
           {0.4495, 0.4721, 0.4816, 0.4847, 0.4852, 0.4853, 0.4853, 0.4853},
           {0.4564, 0.4804, 0.4903, 0.4935, 0.4941, 0.4942, 0.4942, 0.4942},
           {0.4645, 0.4899, 0.5003, 0.5037, 0.5042, 0.5043, 0.5044, 0.5044},
           {0.4566, 0.4974, 0.5319, 0.5618, 0.5768, 0.5853, 0.5879, 0.5882},
       }},
      {4,
       {
           {0.1522, 0.0949, 0.0977, 0.1148, 0.1556, 0.2582, 0.4340, 0.6309, 1},
           {0.1512, 0.0942, 0.0970, 0.1140, 0.1548, 0.2593, 0.4469, 0.6902, 1},
           {0.1503, 0.0935, 0.0964, 0.1135, 0.1549, 0.2645, 0.4859, 0.8160, 1},
           {0.0489, 0.0337, 0.0327, 0.0327, 0.0329, 0.0330, 0.0330, 0.0330, 0.0330},
           {0.0488, 0.0337, 0.0328, 0.0328, 0.0331, 0.0342, 0.0411, 0.0840, 1},
           {0.0487, 0.0337, 0.0329, 0.0332, 0.0341, 0.0392, 0.0729, 0.2461, 1},
           {0.0696, 0.0459, 0.0457, 0.0492, 0.0574, 0.0780, 0.1132, 0.1526, 0.2264},
       }},
      {5,
       {
           {0.1957, 0.0930, 0.0529, 0.0416, 0.0468, 0.1047, 0.2750, 0.5162, 1},
           {0.1945, 0.0921, 0.0523, 0.0412, 0.0465, 0.1050, 0.2859, 0.5839, 1},
           {0.1933, 0.0914, 0.0519, 0.0410, 0.0465, 0.1081, 0.3226, 0.7410, 1},
           {0.1586, 0.0605, 0.0357, 0.0307, 0.0310, 0.0328, 0.0331, 0.0331, 0.0330},
           {0.1582, 0.0604, 0.0358, 0.0309, 0.0313, 0.0340, 0.0406, 0.0821, 1},
           {0.1580, 0.0606, 0.0360, 0.0313, 0.0323, 0.0385, 0.0699, 0.2420, 1},
           {0.1661, 0.0670, 0.0391, 0.0329, 0.0342, 0.0471, 0.0815, 0.1297, 0.2264},
       }},
  }};
  return tables;
}
