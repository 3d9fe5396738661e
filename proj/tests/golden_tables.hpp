#pragma once

// Printed character grids for the weighting cases, keyed by the row order of
// character_grid().  Rows: the 9 shapes [n]..[n-4,1^4], then (k >= 4) the five
// [n-4,*]/[n-5,*] shapes, then (k = 5) the seven [n-5,*]/[n-6,*] shapes.

#include <vector>

namespace golden {

// columns (n-5,5), (n-6,2^3), (n-6,4,1^2)
inline const std::vector<std::vector<int>> k3_even = {
    {1, 1, 1},
    {-1, -1, 1},
    {0, 3, -1},
    {1, -2, 0},
    {0, -3, -1},
    {0, 0, 0},
    {-1, 2, 0},
    {0, 3, 1},
    {1, 1, -1},
};

// columns (n-1,1), (n-2,2), (n-3,3), (n-3,1^3), (n-7,5,1^2)
inline const std::vector<std::vector<int>> k4_even = {
    {1, 1, 1, 1, 1},
    {0, -1, -1, 2, 1},
    {-1, 1, 0, 0, -1},
    {0, 0, 1, 1, 0},
    {0, -1, 1, -2, -1},
    {1, 0, -1, -1, 0},
    {0, 0, 0, 0, 0},
    {0, 0, -1, -1, 0},
    {0, 0, 0, 0, 0},
    {0, 1, 0, 0, 1},
    {0, -1, 1, 1, 1},
    {-1, 0, 0, 0, 0},
    {0, 0, 0, 0, 1},
    {0, 0, 0, 0, 1},
};

// columns (n), (n-2,1^2), (n-3,2,1), (n-6,3^2), (n-7,6,1), (n-9,6,1^3)
inline const std::vector<std::vector<int>> k4_odd = {
    {1, 1, 1, 1, 1, 1},
    {-1, 1, 0, -1, 0, 2},
    {0, -1, 0, 0, -1, 0},
    {1, 0, -1, 1, 0, 1},
    {0, -1, 0, 2, 0, -2},
    {0, 0, 1, -2, 1, -1},
    {-1, 0, 0, 1, 0, 0},
    {0, 0, -1, -2, 0, -1},
    {1, 0, 0, -1, 0, 0},
    {0, 1, 0, 0, 0, 0},
    {0, 1, -1, 2, 0, 1},
    {0, 0, 0, 0, -1, 0},
    {0, 0, 0, 0, 0, 0},
    {-1, 0, 0, 1, 0, 0},
};

// columns (n-1,1), (n-2,2), (n-3,1^3), (n-4,4), (n-4,2,1^2), (n-6,6),
//         (n-6,2^3), (n-7,3^2,1), (n-8,6,1^2), (n-10,6,1^4)
inline const std::vector<std::vector<int>> k5_even = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, -1, 2, -1, 1, -1, -1, 0, 1, 3},
    {-1, 1, 0, 0, 0, 0, 3, -1, -1, 2},
    {0, 0, 1, 1, -1, 1, -2, 0, 0, 3},
    {0, -1, -2, 0, 0, 0, -3, 2, -1, -2},
    {1, 0, -1, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, -1, -1, -1, 2, 2, 0, 1},
    {0, 0, -1, 1, -1, 0, 3, 0, 0, -3},
    {0, 0, 0, 0, 0, 1, 1, 0, 0, 0},
    {0, 1, 0, -1, 1, 0, 0, 0, 1, -3},
    {0, -1, 1, 0, 0, 0, 3, 0, 1, 0},
    {-1, 0, 0, 1, 1, 0, -3, -1, 0, -1},
    {0, 0, 0, -1, -1, 0, -3, -2, 0, -1},
    {0, 0, 0, 0, 0, -1, -1, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 2, 1, -1, 0, -3, 0, 0, 3},
    {0, -1, 0, 0, 0, 0, 3, 0, -1, 0},
    {0, 1, 0, -1, -1, 0, 0, 2, -1, 1},
    {1, 0, 0, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 1, -1, -1},
};

// columns (n), (n-2,1^2), (n-3,2,1), (n-4,2^2), (n-4,1^4), (n-4,3,1),
//         (n-7,6,1), (n-8,4^2), (n-9,6,1^3)
inline const std::vector<std::vector<int>> k5_odd = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1},
    {-1, 1, 0, -1, 3, 0, 0, -1, 2},
    {0, -1, 0, 2, 2, -1, -1, 0, 0},
    {1, 0, -1, -1, 3, 0, 0, 1, 1},
    {0, -1, 0, -2, -2, 1, 0, 0, -2},
    {0, 0, 1, 0, 0, 0, 1, 0, -1},
    {-1, 0, 0, 1, 1, 1, 0, -1, 0},
    {0, 0, -1, 1, -3, 0, 0, 2, -1},
    {1, 0, 0, 0, 0, 0, 0, -1, 0},
    {0, 1, 0, 1, -3, 0, 0, -2, 0},
    {0, 1, -1, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, -1, -1, -1, -1, 2, 0},
    {0, 0, 0, -1, -1, -1, 0, -2, 0},
    {-1, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, -1, 3, 0, 0, 2, 2},
    {0, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, -1, 0, 1, 1, 1, 0, -2, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 1},
    {1, 0, 0, 0, 0, 0, -1, -1, -1},
};

}  // namespace golden
