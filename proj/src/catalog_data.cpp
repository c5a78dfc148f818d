#include "catalog_data.hpp"

namespace nutgraph::detail {

// Twelve 12-regular nut graphs of odd order with their published kernel
// eigenvectors, kept verbatim in the adjacency-dictionary source format
// and parsed at load time.
const RawCatalogEntry appendix_raw[12] = {
    {17,
     R"raw({0: [1, 2, 3, 4, 5, 8, 9, 10, 11, 12, 15, 16], 1: [0, 2, 3, 4, 6, 7, 8, 9, 10, 11, 15, 16], 2: [0, 1, 4, 5, 6, 7, 8, 9, 10, 11, 13, 15], 3: [0, 1, 4, 6, 7, 8, 9, 11, 12, 14, 15, 16], 4: [0, 1, 2, 3, 5, 6, 8, 9, 10, 11, 13, 16], 5: [0, 2, 4, 6, 7, 8, 9, 10, 12, 13, 14, 15], 6: [1, 2, 3, 4, 5, 7, 8, 9, 12, 13, 14, 15], 7: [1, 2, 3, 5, 6, 8, 10, 11, 12, 13, 14, 16], 8: [0, 1, 2, 3, 4, 5, 6, 7, 10, 11, 13, 14], 9: [0, 1, 2, 3, 4, 5, 6, 10, 12, 13, 14, 16], 10: [0, 1, 2, 4, 5, 7, 8, 9, 12, 14, 15, 16], 11: [0, 1, 2, 3, 4, 7, 8, 12, 13, 14, 15, 16], 12: [0, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15, 16], 13: [2, 4, 5, 6, 7, 8, 9, 11, 12, 14, 15, 16], 14: [3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16], 15: [0, 1, 2, 3, 5, 6, 10, 11, 12, 13, 14, 16], 16: [0, 1, 3, 4, 7, 9, 10, 11, 12, 13, 14, 15]})raw",
     "3,-3,-2,2,1,2,-1,-2,3,-1,-1,1,1,-1,1,-1,-2"},
    {19,
     R"raw({0: [1, 2, 5, 7, 9, 10, 11, 12, 13, 14, 16, 18], 1: [0, 3, 5, 6, 7, 10, 12, 13, 14, 15, 17, 18], 2: [0, 4, 6, 7, 8, 9, 10, 11, 12, 16, 17, 18], 3: [1, 6, 7, 8, 10, 11, 12, 13, 14, 16, 17, 18], 4: [2, 5, 6, 7, 8, 11, 12, 13, 14, 15, 17, 18], 5: [0, 1, 4, 7, 8, 9, 11, 12, 13, 14, 15, 17], 6: [1, 2, 3, 4, 7, 8, 9, 10, 14, 15, 16, 17], 7: [0, 1, 2, 3, 4, 5, 6, 8, 9, 11, 15, 16], 8: [2, 3, 4, 5, 6, 7, 9, 11, 14, 15, 17, 18], 9: [0, 2, 5, 6, 7, 8, 10, 11, 12, 13, 16, 17], 10: [0, 1, 2, 3, 6, 9, 11, 12, 13, 14, 16, 18], 11: [0, 2, 3, 4, 5, 7, 8, 9, 10, 16, 17, 18], 12: [0, 1, 2, 3, 4, 5, 9, 10, 13, 14, 15, 16], 13: [0, 1, 3, 4, 5, 9, 10, 12, 14, 15, 16, 17], 14: [0, 1, 3, 4, 5, 6, 8, 10, 12, 13, 15, 18], 15: [1, 4, 5, 6, 7, 8, 12, 13, 14, 16, 17, 18], 16: [0, 2, 3, 6, 7, 9, 10, 11, 12, 13, 15, 18], 17: [1, 2, 3, 4, 5, 6, 8, 9, 11, 13, 15, 18], 18: [0, 1, 2, 3, 4, 8, 10, 11, 14, 15, 16, 17]})raw",
     "5,10,6,-10,-3,-1,4,-1,-5,1,1,-5,-4,-3,-4,2,-4,7,4"},
    {21,
     R"raw({0: [1, 2, 3, 4, 5, 6, 7, 15, 17, 18, 19, 20], 1: [0, 2, 3, 4, 5, 6, 7, 16, 17, 18, 19, 20], 2: [0, 1, 3, 4, 5, 6, 8, 16, 17, 18, 19, 20], 3: [0, 1, 2, 4, 5, 6, 7, 8, 9, 18, 19, 20], 4: [0, 1, 2, 3, 5, 6, 7, 8, 9, 10, 19, 20], 5: [0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 20], 6: [0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12], 7: [0, 1, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13], 8: [2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14], 9: [3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15], 10: [4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16], 11: [5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 17], 12: [6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 18], 13: [7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 18, 19], 14: [8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20], 15: [0, 9, 10, 11, 12, 13, 14, 16, 17, 18, 19, 20], 16: [1, 2, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20], 17: [0, 1, 2, 11, 12, 13, 14, 15, 16, 18, 19, 20], 18: [0, 1, 2, 3, 12, 13, 14, 15, 16, 17, 19, 20], 19: [0, 1, 2, 3, 4, 13, 14, 15, 16, 17, 18, 20], 20: [0, 1, 2, 3, 4, 5, 14, 15, 16, 17, 18, 19]})raw",
     "1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1"},
    {23,
     R"raw({0: [1, 2, 4, 6, 7, 8, 10, 11, 13, 19, 20, 21], 1: [0, 4, 5, 6, 7, 9, 11, 13, 16, 17, 20, 22], 2: [0, 3, 4, 6, 8, 11, 12, 13, 16, 19, 20, 21], 3: [2, 4, 5, 8, 9, 10, 12, 13, 14, 16, 17, 18], 4: [0, 1, 2, 3, 6, 7, 8, 14, 15, 16, 21, 22], 5: [1, 3, 7, 10, 11, 12, 14, 15, 17, 18, 19, 20], 6: [0, 1, 2, 4, 11, 12, 14, 17, 18, 19, 20, 22], 7: [0, 1, 4, 5, 10, 11, 12, 16, 18, 19, 21, 22], 8: [0, 2, 3, 4, 9, 10, 12, 13, 15, 16, 21, 22], 9: [1, 3, 8, 10, 11, 13, 14, 15, 18, 19, 21, 22], 10: [0, 3, 5, 7, 8, 9, 11, 13, 17, 18, 19, 21], 11: [0, 1, 2, 5, 6, 7, 9, 10, 13, 14, 15, 20], 12: [2, 3, 5, 6, 7, 8, 13, 14, 17, 19, 20, 22], 13: [0, 1, 2, 3, 8, 9, 10, 11, 12, 14, 15, 19], 14: [3, 4, 5, 6, 9, 11, 12, 13, 15, 16, 17, 20], 15: [4, 5, 8, 9, 11, 13, 14, 17, 18, 20, 21, 22], 16: [1, 2, 3, 4, 7, 8, 14, 17, 18, 20, 21, 22], 17: [1, 3, 5, 6, 10, 12, 14, 15, 16, 19, 20, 21], 18: [3, 5, 6, 7, 9, 10, 15, 16, 19, 20, 21, 22], 19: [0, 2, 5, 6, 7, 9, 10, 12, 13, 17, 18, 22], 20: [0, 1, 2, 5, 6, 11, 12, 14, 15, 16, 17, 18], 21: [0, 2, 4, 7, 8, 9, 10, 15, 16, 17, 18, 22], 22: [1, 4, 6, 7, 8, 9, 12, 15, 16, 18, 19, 21]})raw",
     "6,-24,-7,13,39,1,27,4,-18,-4,10,3,-14,-14,28,1,-22,-2,3,6,-28,2,-10"},
    {25,
     R"raw({0: [3, 4, 5, 7, 9, 10, 12, 13, 17, 19, 22, 23], 1: [2, 3, 5, 11, 12, 15, 16, 18, 19, 20, 21, 23], 2: [1, 3, 4, 5, 10, 13, 14, 17, 20, 21, 23, 24], 3: [0, 1, 2, 5, 8, 10, 14, 16, 20, 21, 23, 24], 4: [0, 2, 6, 8, 9, 10, 11, 13, 18, 21, 23, 24], 5: [0, 1, 2, 3, 10, 13, 14, 17, 18, 19, 20, 24], 6: [4, 8, 9, 10, 11, 12, 14, 17, 19, 20, 21, 22], 7: [0, 8, 9, 11, 12, 15, 16, 18, 19, 22, 23, 24], 8: [3, 4, 6, 7, 9, 10, 11, 13, 17, 18, 22, 23], 9: [0, 4, 6, 7, 8, 10, 11, 12, 14, 15, 18, 21], 10: [0, 2, 3, 4, 5, 6, 8, 9, 15, 16, 17, 18], 11: [1, 4, 6, 7, 8, 9, 12, 13, 14, 17, 19, 20], 12: [0, 1, 6, 7, 9, 11, 13, 14, 15, 18, 21, 22], 13: [0, 2, 4, 5, 8, 11, 12, 16, 20, 21, 22, 23], 14: [2, 3, 5, 6, 9, 11, 12, 15, 16, 17, 19, 22], 15: [1, 7, 9, 10, 12, 14, 16, 17, 19, 20, 22, 24], 16: [1, 3, 7, 10, 13, 14, 15, 17, 18, 19, 20, 24], 17: [0, 2, 5, 6, 8, 10, 11, 14, 15, 16, 21, 23], 18: [1, 4, 5, 7, 8, 9, 10, 12, 16, 21, 22, 24], 19: [0, 1, 5, 6, 7, 11, 14, 15, 16, 21, 22, 24], 20: [1, 2, 3, 5, 6, 11, 13, 15, 16, 22, 23, 24], 21: [1, 2, 3, 4, 6, 9, 12, 13, 17, 18, 19, 23], 22: [0, 6, 7, 8, 12, 13, 14, 15, 18, 19, 20, 24], 23: [0, 1, 2, 3, 4, 7, 8, 13, 17, 20, 21, 24], 24: [2, 3, 4, 5, 7, 15, 16, 18, 19, 20, 22, 23]})raw",
     "29,20,-31,7,5,-13,32,-19,-12,1,31,-12,-8,-6,-49,17,3,-17,-21,20,33,7,1,-2,-16"},
    {27,
     R"raw({0: [2, 3, 4, 5, 6, 7, 21, 22, 23, 24, 25, 26], 1: [2, 3, 4, 5, 6, 7, 8, 22, 23, 24, 25, 26], 2: [0, 1, 3, 4, 5, 6, 7, 8, 23, 24, 25, 26], 3: [0, 1, 2, 4, 5, 6, 7, 8, 9, 24, 25, 26], 4: [0, 1, 2, 3, 5, 6, 7, 8, 9, 10, 25, 26], 5: [0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 26], 6: [0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12], 7: [0, 1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 13], 8: [1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 13, 14], 9: [3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15], 10: [4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16], 11: [5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 17], 12: [6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 18], 13: [7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 18, 19], 14: [8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20], 15: [9, 10, 11, 12, 13, 14, 16, 17, 18, 19, 20, 21], 16: [10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22], 17: [11, 12, 13, 14, 15, 16, 18, 19, 20, 21, 22, 23], 18: [12, 13, 14, 15, 16, 17, 19, 20, 21, 22, 23, 24], 19: [13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 25], 20: [14, 15, 16, 17, 18, 19, 21, 22, 23, 24, 25, 26], 21: [0, 15, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26], 22: [0, 1, 16, 17, 18, 19, 20, 21, 23, 24, 25, 26], 23: [0, 1, 2, 17, 18, 19, 20, 21, 22, 24, 25, 26], 24: [0, 1, 2, 3, 18, 19, 20, 21, 22, 23, 25, 26], 25: [0, 1, 2, 3, 4, 19, 20, 21, 22, 23, 24, 26], 26: [0, 1, 2, 3, 4, 5, 20, 21, 22, 23, 24, 25]})raw",
     "1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1"},
    {29,
     R"raw({0: [1, 3, 5, 6, 9, 10, 11, 13, 14, 19, 26, 28], 1: [0, 2, 4, 5, 11, 16, 17, 18, 19, 21, 26, 27], 2: [1, 3, 8, 9, 10, 11, 13, 24, 25, 26, 27, 28], 3: [0, 2, 12, 13, 17, 20, 21, 23, 24, 25, 26, 27], 4: [1, 5, 6, 9, 11, 15, 16, 17, 20, 22, 23, 28], 5: [0, 1, 4, 7, 12, 15, 16, 19, 20, 22, 24, 25], 6: [0, 4, 7, 8, 9, 11, 15, 17, 18, 19, 21, 22], 7: [5, 6, 8, 11, 12, 13, 15, 16, 18, 20, 22, 24], 8: [2, 6, 7, 10, 12, 15, 19, 20, 21, 24, 26, 27], 9: [0, 2, 4, 6, 12, 14, 15, 20, 22, 23, 24, 27], 10: [0, 2, 8, 13, 16, 17, 18, 20, 21, 23, 25, 26], 11: [0, 1, 2, 4, 6, 7, 12, 16, 17, 19, 20, 23], 12: [3, 5, 7, 8, 9, 11, 14, 15, 18, 19, 21, 25], 13: [0, 2, 3, 7, 10, 14, 15, 21, 23, 25, 27, 28], 14: [0, 9, 12, 13, 15, 18, 22, 23, 24, 26, 27, 28], 15: [4, 5, 6, 7, 8, 9, 12, 13, 14, 18, 22, 27], 16: [1, 4, 5, 7, 10, 11, 18, 20, 21, 25, 27, 28], 17: [1, 3, 4, 6, 10, 11, 18, 19, 22, 24, 27, 28], 18: [1, 6, 7, 10, 12, 14, 15, 16, 17, 19, 23, 24], 19: [0, 1, 5, 6, 8, 11, 12, 17, 18, 23, 26, 27], 20: [3, 4, 5, 7, 8, 9, 10, 11, 16, 25, 26, 28], 21: [1, 3, 6, 8, 10, 12, 13, 16, 22, 23, 25, 26], 22: [4, 5, 6, 7, 9, 14, 15, 17, 21, 24, 25, 27], 23: [3, 4, 9, 10, 11, 13, 14, 18, 19, 21, 24, 28], 24: [2, 3, 5, 7, 8, 9, 14, 17, 18, 22, 23, 28], 25: [2, 3, 5, 10, 12, 13, 16, 20, 21, 22, 26, 28], 26: [0, 1, 2, 3, 8, 10, 14, 19, 20, 21, 25, 28], 27: [1, 2, 3, 8, 9, 13, 14, 15, 16, 17, 19, 22], 28: [0, 2, 4, 13, 14, 16, 17, 20, 23, 24, 25, 26]})raw",
     "1,1,37,-13,-20,-42,21,-5,-36,25,5,30,41,-25,21,-6,6,17,34,-34,-14,-13,7,-51,-16,39,5,-21,6"},
    {31,
     R"raw({0: [5, 10, 12, 13, 17, 18, 21, 22, 24, 26, 27, 29], 1: [3, 6, 7, 8, 10, 14, 17, 20, 23, 25, 27, 30], 2: [4, 7, 9, 10, 18, 21, 22, 23, 24, 25, 27, 28], 3: [1, 4, 5, 11, 13, 16, 17, 18, 19, 24, 25, 29], 4: [2, 3, 5, 11, 12, 13, 18, 21, 25, 26, 28, 29], 5: [0, 3, 4, 6, 7, 9, 11, 14, 17, 25, 27, 29], 6: [1, 5, 8, 9, 11, 13, 18, 20, 22, 26, 29, 30], 7: [1, 2, 5, 9, 10, 12, 20, 24, 25, 26, 27, 30], 8: [1, 6, 9, 14, 15, 17, 18, 20, 21, 22, 23, 30], 9: [2, 5, 6, 7, 8, 12, 14, 15, 19, 24, 27, 28], 10: [0, 1, 2, 7, 12, 13, 15, 18, 19, 21, 24, 28], 11: [3, 4, 5, 6, 12, 15, 17, 20, 22, 23, 29, 30], 12: [0, 4, 7, 9, 10, 11, 14, 16, 18, 21, 27, 30], 13: [0, 3, 4, 6, 10, 16, 20, 23, 24, 25, 26, 27], 14: [1, 5, 8, 9, 12, 15, 17, 18, 19, 20, 22, 23], 15: [8, 9, 10, 11, 14, 17, 19, 20, 21, 27, 28, 30], 16: [3, 12, 13, 18, 19, 21, 22, 23, 24, 26, 28, 29], 17: [0, 1, 3, 5, 8, 11, 14, 15, 20, 22, 23, 29], 18: [0, 2, 3, 4, 6, 8, 10, 12, 14, 16, 24, 25], 19: [3, 9, 10, 14, 15, 16, 20, 21, 22, 23, 26, 28], 20: [1, 6, 7, 8, 11, 13, 14, 15, 17, 19, 24, 25], 21: [0, 2, 4, 8, 10, 12, 15, 16, 19, 25, 27, 29], 22: [0, 2, 6, 8, 11, 14, 16, 17, 19, 23, 28, 30], 23: [1, 2, 8, 11, 13, 14, 16, 17, 19, 22, 26, 28], 24: [0, 2, 3, 7, 9, 10, 13, 16, 18, 20, 28, 30], 25: [1, 2, 3, 4, 5, 7, 13, 18, 20, 21, 26, 29], 26: [0, 4, 6, 7, 13, 16, 19, 23, 25, 27, 29, 30], 27: [0, 1, 2, 5, 7, 9, 12, 13, 15, 21, 26, 30], 28: [2, 4, 9, 10, 15, 16, 19, 22, 23, 24, 29, 30], 29: [0, 3, 4, 5, 6, 11, 16, 17, 21, 25, 26, 28], 30: [1, 6, 7, 8, 11, 12, 15, 22, 24, 26, 27, 28]})raw",
     "1,91,-39,14,39,33,75,-48,-37,2,146,-14,-13,23,20,6,-84,-32,27,38,-93,-66,-43,21,-79,-43,18,-15,59,1,-8"},
    {33,
     R"raw({0: [1, 2, 3, 4, 5, 6, 27, 28, 29, 30, 31, 32], 1: [0, 2, 3, 4, 5, 6, 7, 11, 28, 29, 31, 32], 2: [0, 1, 3, 4, 5, 6, 7, 8, 29, 30, 31, 32], 3: [0, 1, 2, 4, 5, 6, 7, 8, 9, 30, 31, 32], 4: [0, 1, 2, 3, 5, 6, 7, 8, 9, 10, 31, 32], 5: [0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 32], 6: [0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12], 7: [1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13], 8: [2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14], 9: [3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15], 10: [4, 5, 6, 7, 8, 9, 12, 13, 14, 15, 16, 30], 11: [1, 5, 6, 7, 8, 9, 12, 13, 14, 15, 16, 17], 12: [6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 18], 13: [7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 18, 19], 14: [8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20], 15: [9, 10, 11, 12, 13, 14, 16, 17, 18, 19, 20, 21], 16: [10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22], 17: [11, 12, 13, 14, 15, 16, 18, 19, 20, 21, 22, 23], 18: [12, 13, 14, 15, 16, 17, 19, 20, 21, 22, 23, 24], 19: [13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 25], 20: [14, 15, 16, 17, 18, 19, 21, 22, 23, 24, 25, 26], 21: [15, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26, 27], 22: [16, 17, 18, 19, 20, 21, 23, 24, 25, 26, 27, 28], 23: [17, 18, 19, 20, 21, 22, 24, 25, 26, 27, 28, 29], 24: [18, 19, 20, 21, 22, 23, 25, 26, 27, 28, 29, 30], 25: [19, 20, 21, 22, 23, 24, 26, 27, 28, 29, 30, 31], 26: [20, 21, 22, 23, 24, 25, 27, 28, 29, 30, 31, 32], 27: [0, 21, 22, 23, 24, 25, 26, 28, 29, 30, 31, 32], 28: [0, 1, 22, 23, 24, 25, 26, 27, 29, 30, 31, 32], 29: [0, 1, 2, 23, 24, 25, 26, 27, 28, 30, 31, 32], 30: [0, 2, 3, 10, 24, 25, 26, 27, 28, 29, 31, 32], 31: [0, 1, 2, 3, 4, 25, 26, 27, 28, 29, 30, 32], 32: [0, 1, 2, 3, 4, 5, 26, 27, 28, 29, 30, 31]})raw",
     "1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1"},
    {35,
     R"raw({0: [1, 2, 3, 4, 5, 6, 29, 30, 31, 32, 33, 34], 1: [0, 2, 3, 4, 5, 6, 7, 30, 31, 32, 33, 34], 2: [0, 1, 3, 4, 5, 6, 7, 8, 15, 31, 32, 33], 3: [0, 1, 2, 4, 5, 6, 8, 9, 15, 32, 33, 34], 4: [0, 1, 2, 3, 5, 6, 7, 8, 9, 31, 33, 34], 5: [0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 34], 6: [0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12], 7: [1, 2, 4, 5, 6, 8, 9, 10, 11, 12, 13, 21], 8: [2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14], 9: [3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15], 10: [5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16, 25], 11: [5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 17], 12: [6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 18], 13: [7, 8, 9, 10, 11, 12, 14, 16, 17, 18, 19, 34], 14: [8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20], 15: [2, 3, 9, 10, 11, 12, 14, 16, 17, 18, 19, 20], 16: [10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22], 17: [11, 12, 13, 14, 15, 16, 18, 19, 20, 21, 22, 23], 18: [12, 13, 14, 15, 16, 17, 19, 20, 21, 22, 23, 24], 19: [13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 25], 20: [14, 15, 16, 17, 18, 19, 21, 22, 23, 24, 25, 26], 21: [7, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26, 27], 22: [16, 17, 18, 19, 20, 21, 23, 24, 25, 26, 27, 28], 23: [17, 18, 19, 20, 21, 22, 24, 25, 26, 27, 28, 29], 24: [18, 19, 20, 21, 22, 23, 25, 26, 27, 28, 29, 30], 25: [10, 19, 20, 21, 22, 23, 24, 26, 27, 28, 29, 30], 26: [20, 21, 22, 23, 24, 25, 27, 28, 29, 30, 31, 32], 27: [21, 22, 23, 24, 25, 26, 28, 29, 30, 31, 32, 33], 28: [22, 23, 24, 25, 26, 27, 29, 30, 31, 32, 33, 34], 29: [0, 23, 24, 25, 26, 27, 28, 30, 31, 32, 33, 34], 30: [0, 1, 24, 25, 26, 27, 28, 29, 31, 32, 33, 34], 31: [0, 1, 2, 4, 26, 27, 28, 29, 30, 32, 33, 34], 32: [0, 1, 2, 3, 26, 27, 28, 29, 30, 31, 33, 34], 33: [0, 1, 2, 3, 4, 27, 28, 29, 30, 31, 32, 34], 34: [0, 1, 3, 4, 5, 13, 28, 29, 30, 31, 32, 33]})raw",
     "1,-1,-1,-3,3,2,-1,-1,1,1,-2,2,-2,-1,3,-1,-1,2,-2,-2,5,-1,-1,1,-2,-2,6,-3,-1,1,-1,5,-1,-4,1"},
    {37,
     R"raw({0: [1, 2, 3, 4, 5, 6, 31, 32, 33, 34, 35, 36], 1: [0, 2, 3, 4, 5, 6, 7, 18, 22, 32, 33, 35], 2: [0, 1, 3, 4, 5, 6, 7, 8, 33, 34, 35, 36], 3: [0, 1, 2, 4, 5, 6, 7, 8, 9, 34, 35, 36], 4: [0, 1, 2, 3, 5, 6, 7, 8, 9, 10, 35, 36], 5: [0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 36], 6: [0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12], 7: [1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13], 8: [2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14], 9: [3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 15, 32], 10: [4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16], 11: [5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 17], 12: [6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 18], 13: [7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 19, 36], 14: [8, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20, 35], 15: [9, 10, 11, 12, 13, 14, 16, 17, 18, 19, 20, 21], 16: [10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22], 17: [11, 12, 13, 14, 15, 16, 18, 19, 20, 21, 22, 23], 18: [1, 12, 14, 15, 16, 17, 19, 20, 21, 22, 23, 24], 19: [13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 25], 20: [14, 15, 16, 17, 18, 19, 21, 22, 23, 24, 25, 26], 21: [15, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26, 27], 22: [1, 16, 17, 18, 19, 20, 21, 23, 24, 26, 27, 28], 23: [17, 18, 19, 20, 21, 22, 24, 25, 26, 27, 28, 29], 24: [18, 19, 20, 21, 22, 23, 25, 26, 27, 28, 29, 30], 25: [19, 20, 21, 23, 24, 26, 27, 28, 29, 30, 31, 34], 26: [20, 21, 22, 23, 24, 25, 27, 28, 29, 30, 31, 32], 27: [21, 22, 23, 24, 25, 26, 28, 29, 30, 31, 32, 33], 28: [22, 23, 24, 25, 26, 27, 29, 30, 31, 32, 33, 34], 29: [23, 24, 25, 26, 27, 28, 30, 31, 32, 33, 34, 35], 30: [24, 25, 26, 27, 28, 29, 31, 32, 33, 34, 35, 36], 31: [0, 25, 26, 27, 28, 29, 30, 32, 33, 34, 35, 36], 32: [0, 1, 9, 26, 27, 28, 29, 30, 31, 33, 34, 36], 33: [0, 1, 2, 27, 28, 29, 30, 31, 32, 34, 35, 36], 34: [0, 2, 3, 25, 28, 29, 30, 31, 32, 33, 35, 36], 35: [0, 1, 2, 3, 4, 14, 29, 30, 31, 33, 34, 36], 36: [0, 2, 3, 4, 5, 13, 30, 31, 32, 33, 34, 35]})raw",
     "2,-3,-4,5,1,-1,-1,-4,5,2,-5,1,1,-1,6,-5,-4,7,-1,-5,4,-5,3,6,-5,-5,8,-3,1,1,-4,3,4,-7,-1,3,1"},
    {39,
     R"raw({0: [1, 2, 3, 4, 5, 6, 15, 33, 34, 36, 37, 38], 1: [0, 2, 3, 4, 5, 6, 7, 34, 35, 36, 37, 38], 2: [0, 1, 3, 4, 5, 6, 7, 8, 35, 36, 37, 38], 3: [0, 1, 2, 4, 5, 6, 7, 8, 9, 36, 37, 38], 4: [0, 1, 2, 3, 5, 6, 7, 8, 9, 10, 37, 38], 5: [0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 38], 6: [0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12], 7: [1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13], 8: [2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14], 9: [3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15], 10: [4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16], 11: [5, 6, 7, 8, 9, 10, 12, 13, 14, 16, 17, 35], 12: [6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 18], 13: [7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 18, 19], 14: [8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20], 15: [0, 9, 10, 12, 13, 14, 16, 17, 18, 19, 20, 21], 16: [10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22], 17: [11, 12, 13, 14, 15, 16, 18, 19, 20, 21, 22, 23], 18: [12, 13, 14, 15, 16, 17, 19, 20, 21, 22, 23, 24], 19: [13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 25], 20: [14, 15, 16, 17, 18, 19, 21, 22, 23, 24, 25, 26], 21: [15, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26, 27], 22: [16, 17, 18, 19, 20, 21, 23, 24, 25, 26, 27, 28], 23: [17, 18, 19, 20, 21, 22, 24, 25, 26, 27, 28, 29], 24: [18, 19, 20, 21, 22, 23, 25, 26, 27, 28, 29, 30], 25: [19, 20, 21, 22, 23, 24, 26, 27, 28, 29, 30, 31], 26: [20, 21, 22, 23, 24, 25, 27, 28, 29, 30, 31, 32], 27: [21, 22, 23, 24, 25, 26, 28, 29, 30, 31, 32, 33], 28: [22, 23, 24, 25, 26, 27, 29, 30, 31, 32, 33, 34], 29: [23, 24, 25, 26, 27, 28, 30, 31, 32, 33, 34, 35], 30: [24, 25, 26, 27, 28, 29, 31, 32, 33, 34, 35, 36], 31: [25, 26, 27, 28, 29, 30, 32, 33, 34, 35, 36, 37], 32: [26, 27, 28, 29, 30, 31, 33, 34, 35, 36, 37, 38], 33: [0, 27, 28, 29, 30, 31, 32, 34, 35, 36, 37, 38], 34: [0, 1, 28, 29, 30, 31, 32, 33, 35, 36, 37, 38], 35: [1, 2, 11, 29, 30, 31, 32, 33, 34, 36, 37, 38], 36: [0, 1, 2, 3, 30, 31, 32, 33, 34, 35, 37, 38], 37: [0, 1, 2, 3, 4, 31, 32, 33, 34, 35, 36, 38], 38: [0, 1, 2, 3, 4, 5, 32, 33, 34, 35, 36, 37]})raw",
     "1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1,1,-2,1"},
};

}  // namespace nutgraph::detail
