#ifndef SPECTRA_REFERENCE_VALUES_HPP
#define SPECTRA_REFERENCE_VALUES_HPP

// Reference values used by the table checks and the acceptance checks.

#include <array>

namespace spectra::reference {

struct CircleRow {
    int N;
    double e0, e12, e34;
};

inline constexpr std::array<CircleRow, 6> kCircleCmm{{
    {10, 5.7831903186, 14.682015349, 26.374703996},
    {20, 5.7831860077, 14.681971199, 26.374617574},
    {30, 5.7831859657, 14.681970679, 26.374616505},
    {40, 5.7831859633, 14.681970647, 26.374616438},
    {50, 5.7831859630, 14.681970643, 26.374616430},
    {60, 5.7831859630, 14.681970642, 26.374616428},
}};

inline constexpr std::array<CircleRow, 5> kCircleCcm{{
    {20, 5.7833478471, 14.683030231, 26.376321659},
    {40, 5.7831962133, 14.682036989, 26.374723431},
    {60, 5.7831879924, 14.681983747, 26.374637569},
    {80, 5.7831866056, 14.681974789, 26.374623117},
    {100, 5.7831862262, 14.681972340, 26.374619167},
}};

inline constexpr CircleRow kCircleExact{0, 5.7831859629, 14.681970642, 26.374616427};

struct CirclePtRow {
    int nx, ny;
    int d;  // 0 on the second row of a pair
    double pt0, pt1, pt2, pt3, exact;
};

inline constexpr std::array<CirclePtRow, 20> kCirclePt{{
    {1, 1, 1, 4.93480, 5.66472, 5.76740, 5.78118, 5.78319},
    {1, 2, 2, 12.3370, 14.4197, 14.6695, 14.6844, 14.68197},
    {2, 1, 0, 12.3370, 14.4197, 14.6695, 14.6844, 14.68197},
    {2, 2, 1, 19.7392, 25.0228, 26.1714, 26.3593, 26.37462},
    {1, 3, 2, 24.6740, 26.4137, 26.4007, 26.3785, 26.37462},
    {3, 1, 0, 24.6740, 30.2612, 30.7573, 30.5467, 30.47126},
    {2, 3, 2, 32.0762, 40.3174, 41.4936, 41.1156, 40.70647},
    {3, 2, 0, 32.0762, 40.3174, 41.4936, 41.1156, 40.70647},
    {1, 4, 2, 41.9458, 47.7922, 48.5522, 48.9791, 49.21846},
    {4, 1, 0, 41.9458, 47.7922, 48.5522, 48.9791, 49.21846},
    {3, 3, 1, 44.4132, 55.1980, 57.6642, 57.9679, 57.58294},
    {2, 4, 2, 49.3480, 57.1883, 57.7144, 57.6217, 57.58294},
    {4, 2, 0, 49.3480, 66.4508, 71.4408, 72.0826, 70.85000},
    {3, 4, 2, 61.6850, 76.3544, 77.2464, 76.2107, 76.93893},
    {4, 3, 0, 61.6850, 76.3544, 77.2464, 76.2107, 76.93893},
    {1, 5, 2, 64.1524, 72.9892, 71.1717, 70.3712, 70.85000},
    {5, 1, 0, 64.1524, 72.5674, 73.5746, 74.6076, 74.88701},
    {5, 2, 2, 71.5546, 89.4650, 96.8822, 99.3590, 95.27757},
    {2, 5, 0, 71.5546, 89.4650, 96.8822, 99.3590, 95.27757},
    {4, 4, 1, 78.9568, 97.3221, 97.4219, 96.4281, 98.72627},
}};

inline constexpr std::array<double, 6> kDeformedAlphaInv{25, 50, 100, 200, 400, 800};

struct DeformedRow {
    int n;
    std::array<double, 6> ccm;  // (E - E_box)/alpha^2 at alpha = 1/25 .. 1/800
    double pt;
};

inline constexpr std::array<DeformedRow, 50> kDeformedSquare{{
    {1, {-11.9314, -11.9828, -11.9957, -11.9989, -11.9997, -11.9999}, -12},
    {2, {-62.2270, -62.9170, -63.0930, -63.1372, -63.1482, -63.1510}, -63.15197799},
    {3, {-7.74588, -7.6738, -7.6556, -7.6510, -7.6498, -7.6495}, -7.649505501},
    {4, {-12.8722, -12.2228, -12.0560, -12.0139, -12.0034, -12.0007}, -12},
    {5, {-207.2669, -212.6755, -214.1045, -214.4669, -214.5578, -214.5805}, -214.5883271},
    {6, {-13.27723, -13.2145, -13.1989, -13.1950, -13.1940, -13.1938}, -13.19388958},
    {7, {-25.0501, -24.8644, -24.8184, -24.8069, -24.8040, -24.8033}, -24.80336862},
    {8, {3.2132, 8.2394, 9.5815, 9.9228, 10.0085, 10.0299}, 10.03674606},
    {9, {-529.3273, -558.6905, -567.0588, -569.2278, -569.7751, -569.9123}, -569.9586259},
    {10, {-22.0706, -21.9810, -21.9587, -21.9531, -21.9517, -21.9513}, -21.95180463},
    {11, {-12.8590, -12.2085, -12.0512, -12.0123, -12.0026, -12.0002}, -12},
    {12, {-44.8505, -44.7072, -44.6716, -44.6627, -44.6605, -44.6599}, -44.66052201},
    {13, {46.7717, 74.1811, 82.1277, 84.1959, 84.7183, 84.8492}, 84.89208802},
    {14, {-39.7638, -39.5706, -39.5237, -39.5120, -39.5091, -39.5084}, -39.50940841},
    {15, {30.6629, 33.2746, 33.8759, 34.0227, 34.0591, 34.0682}, 34.0699668},
    {16, {-1109.8341, -1223.2138, -1259.7952, -1269.6749, -1272.1960, -1272.8294}, -1273.042285},
    {17, {-33.6433, -33.4920, -33.4543, -33.4449, -33.4425, -33.4419}, -33.44310862},
    {18, {-70.2925, -70.1087, -70.0628, -70.0513, -70.0484, -70.0477}, -70.04918774},
    {19, {102.5451, 207.3338, 242.1806, 251.6572, 254.0794, 254.6883}, 254.8899234},
    {20, {-12.5604, -12.1285, -12.0299, -12.0059, -11.9999, -11.9984}, -12},
    {21, {-70.6796, -70.5877, -70.5651, -70.5595, -70.5581, -70.5577}, -70.55997503},
    {22, {124.8295, 134.9087, 137.0858, 137.6039, 137.7317, 137.7635}, 137.7717825},
    {23, {-2007.8189, -2335.7052, -2460.1854, -2496.0792, -2505.4160, -2507.7742}, -2508.565211},
    {24, {-47.9136, -47.6534, -47.5887, -47.5725, -47.5685, -47.5675}, -47.56994783},
    {25, {-101.2945, -101.0139, -100.9438, -100.9262, -100.9219, -100.9208}, -100.9237065},
    {26, {115.2123, 410.2533, 528.4606, 562.9517, 571.9490, 574.2230}, 574.980025},
    {27, {-53.7499, -53.6334, -53.6067, -53.6002, -53.5986, -53.5981}, -53.60145365},
    {28, {50.1431, 51.1784, 51.3848, 51.4331, 51.4450, 51.4480}, 51.44555258},
    {29, {-106.3989, -106.3559, -106.3450, -106.3423, -106.3416, -106.3414}, -106.3455495},
    {30, {286.6324, 322.1690, 329.4268, 331.0946, 331.5016, 331.6027}, 331.632198},
    {31, {-3256.1580, -4011.4680, -4354.9098, -4463.3391, -4492.3946, -4499.7924}, -4502.275663},
    {32, {-64.8743, -64.4402, -64.3324, -64.3055, -64.2988, -64.2971}, -64.30174616},
    {33, {-12.0909, -12.0078, -11.9974, -11.9955, -11.9950, -11.9949}, -12},
    {34, {-96.1084, -96.0849, -96.0799, -96.0787, -96.0784, -96.0783}, -96.08384485},
    {35, {167.0112, 169.8399, 170.2940, 170.3920, 170.4156, 170.4214}, 170.4178176},
    {36, {-137.8993, -137.4572, -137.3467, -137.3190, -137.3121, -137.3104}, -137.3156766},
    {37, {-0.2977, 647.4859, 970.7556, 1074.8721, 1102.9016, 1110.0463}, 1112.43464},
    {38, {-147.5040, -147.5073, -147.5074, -147.5074, -147.5073, -147.5073}, -147.5143637},
    {39, {516.9942, 627.1522, 649.2405, 654.1087, 655.2782, 655.5675}, 655.6568115},
    {40, {-67.3226, -67.3763, -67.3928, -67.3972, -67.3982, -67.3985}, -67.40630759},
    {41, {67.0772, 66.9190, 66.8387, 66.8163, 66.8105, 66.8091}, 66.8009496},
    {42, {-4871.0690, -6337.4062, -7134.0401, -7415.2895, -7493.8895, -7514.1430}, -7520.958743},
    {43, {-141.9693, -142.0124, -142.0235, -142.0262, -142.0270, -142.0271}, -142.0360122},
    {44, {-84.5423, -83.8471, -83.6747, -83.6317, -83.6210, -83.6183}, -83.62637707},
    {45, {359.2556, 367.9325, 369.0389, 369.2503, 369.2992, 369.3111}, 369.3064766},
    {46, {-330.0113, -179.4676, -179.2960, -179.2531, -179.2424, -179.2397}, -179.2486248},
    {47, {-180.1538, 837.1280, 1575.4900, 1844.8179, 1920.6443, 1940.2181}, 1946.790496},
    {48, {-11.4814, -11.8521, -11.9544, -11.9805, -11.9871, -11.9887}, -12},
    {49, {-194.2969, -194.3597, -194.3737, -194.3770, -194.3779, -194.3781}, -194.3894759},
    {50, {785.2942, 1078.8172, 1140.1836, 1153.1570, 1156.2105, 1156.9613}, 1157.199583},
}};

struct RobnikRow {
    int k, n;
    bool lifted;
    double pt0, pt2, ccm;        // lambda = 1/100
    double pt0_b, pt2_b, ccm_b;  // lambda = 1/20
};

inline constexpr std::array<RobnikRow, 40> kRobnik{{
    {0, 1, false, 5.78434, 5.78319, 5.78319, 5.81210, 5.78304, 5.78325},
    {1, 1, true, 14.6849, 14.6805, 14.6805, 14.7554, 14.6447, 14.646},
    {1, 1, true, 14.6849, 14.6834, 14.6834, 14.7554, 14.7185, 14.7183},
    {2, 1, false, 26.3799, 26.3746, 26.3746, 26.5065, 26.3740, 26.3734},
    {2, 1, false, 26.3799, 26.3746, 26.3746, 26.5065, 26.3740, 26.3741},
    {0, 2, false, 30.4774, 30.4713, 30.4713, 30.6236, 30.4705, 30.4739},
    {3, 1, false, 40.7146, 40.7065, 40.7065, 40.9100, 40.7054, 40.7056},
    {3, 1, false, 40.7146, 40.7065, 40.7065, 40.9100, 40.7054, 40.7056},
    {1, 2, false, 49.2283, 49.2135, 49.2136, 49.4645, 49.0936, 49.0991},
    {1, 2, false, 49.2283, 49.2234, 49.2234, 49.4645, 49.3409, 49.3415},
    {4, 1, false, 57.5945, 57.5829, 57.5830, 57.8709, 57.5815, 57.582},
    {4, 1, false, 57.5945, 57.5829, 57.5830, 57.8709, 57.5815, 57.582},
    {2, 2, false, 70.8642, 70.8500, 70.8500, 71.2042, 70.8482, 70.8389},
    {2, 2, false, 70.8642, 70.8500, 70.8500, 71.2042, 70.8482, 70.8501},
    {0, 3, false, 74.9020, 74.8870, 74.8871, 75.2614, 74.8851, 74.9035},
    {5, 1, false, 76.9543, 76.9389, 76.9390, 77.3236, 76.9370, 76.9378},
    {5, 1, false, 76.9543, 76.9389, 76.9390, 77.3236, 76.9370, 76.9378},
    {3, 2, false, 95.2966, 95.2776, 95.2776, 95.7540, 95.2752, 95.2734},
    {3, 2, false, 95.2966, 95.2776, 95.2776, 95.7540, 95.2752, 95.2736},
    {6, 1, false, 98.7460, 98.7263, 98.7263, 99.2199, 98.7238, 98.7251},
    {6, 1, false, 98.7460, 98.7263, 98.7263, 99.2199, 98.7238, 98.7251},
    {1, 3, true, 103.520, 103.489, 103.489, 104.017, 103.237, 103.253},
    {1, 3, true, 103.520, 103.510, 103.510, 104.017, 103.757, 103.763},
    {4, 2, false, 122.452, 122.428, 122.428, 123.040, 122.425, 122.422},
    {4, 2, false, 122.452, 122.428, 122.428, 123.040, 122.425, 122.422},
    {7, 1, false, 122.932, 122.908, 122.908, 123.522, 122.904, 122.908},
    {7, 1, false, 122.932, 122.908, 122.908, 123.522, 122.904, 122.908},
    {2, 3, false, 135.048, 135.021, 135.021, 135.696, 135.017, 134.978},
    {2, 3, false, 135.048, 135.021, 135.021, 135.696, 135.017, 135.025},
    {0, 4, false, 139.068, 139.040, 139.041, 139.735, 139.037, 139.098},
    {8, 1, false, 149.483, 149.453, 149.453, 150.200, 149.449, 149.451},
    {8, 1, false, 149.483, 149.453, 149.453, 150.200, 149.449, 149.451},
    {5, 2, false, 152.272, 152.241, 152.241, 153.002, 152.237, 152.238},
    {5, 2, false, 152.272, 152.241, 152.241, 153.002, 152.237, 152.238},
    {3, 3, false, 169.429, 169.395, 169.396, 170.242, 169.391, 169.383},
    {3, 3, false, 169.429, 169.395, 169.396, 170.242, 169.391, 169.384},
    {1, 4, true, 177.556, 177.503, 177.503, 178.408, 177.070, 177.108},
    {1, 4, true, 177.556, 177.539, 177.539, 178.408, 177.962, 177.982},
    {9, 1, false, 178.373, 178.337, 178.338, 179.229, 178.333, 178.335},
    {9, 1, false, 178.373, 178.337, 178.338, 179.229, 178.333, 178.335},
}};

struct PolygonCell {
    double pt0, pt1, ccm;
    bool lifted;
};

struct PolygonRow {
    int k, n;
    std::array<PolygonCell, 3> by_sides;  // 8, 9, 10 sides
};

inline constexpr std::array<PolygonRow, 40> kPolygons{{
    {0, 1, {{{6.48669, 6.48505, 6.48493, false}, {6.32407, 6.32314, 6.32309, false}, {6.21258, 6.21202, 6.21200, false}}}},
    {1, 1, {{{16.468, 16.4581, 16.4561, false}, {16.0551, 16.0495, 16.0486, false}, {15.7721, 15.7687, 15.7682, false}}}},
    {1, 1, {{{16.468, 16.4581, 16.4561, false}, {16.0551, 16.0495, 16.0486, false}, {15.7721, 15.7687, 15.7682, false}}}},
    {2, 1, {{{29.583, 29.5530, 29.5406, false}, {28.8413, 28.8241, 28.8185, false}, {28.3329, 28.3224, 28.3197, false}}}},
    {2, 1, {{{29.583, 29.5530, 29.5406, false}, {28.8413, 28.8241, 28.8186, false}, {28.3329, 28.3224, 28.3197, false}}}},
    {0, 2, {{{34.178, 34.1407, 34.1245, false}, {33.3211, 33.2994, 33.2920, false}, {32.7337, 32.7204, 32.7166, false}}}},
    {3, 1, {{{45.6583, 45.5912, 45.5298, false}, {44.5136, 44.4747, 44.4501, false}, {43.7289, 43.7050, 43.6936, false}}}},
    {3, 1, {{{45.6583, 45.5912, 45.5298, false}, {44.5136, 44.4747, 44.4501, false}, {43.7289, 43.7050, 43.6937, false}}}},
    {1, 2, {{{55.2057, 55.1197, 55.0498, false}, {53.8217, 53.7708, 53.7391, false}, {52.8729, 52.8412, 52.8254, false}}}},
    {1, 2, {{{55.2057, 55.1197, 55.0498, false}, {53.8217, 53.7708, 53.7391, false}, {52.8729, 52.8412, 52.8255, false}}}},
    {4, 1, {{{64.5877, 62.6348, 62.5959, true}, {62.9685, 62.8946, 62.7662, false}, {61.8584, 61.8128, 61.7682, false}}}},
    {4, 1, {{{64.5877, 66.2878, 66.2775, true}, {62.9685, 62.8946, 62.7662, false}, {61.8584, 61.8128, 61.7682, false}}}},
    {2, 2, {{{79.4687, 79.3097, 79.0194, false}, {77.4763, 77.3810, 77.2694, false}, {76.1106, 76.0505, 75.9987, false}}}},
    {2, 2, {{{79.4687, 79.3097, 79.0199, false}, {77.4763, 77.3810, 77.2696, false}, {76.1106, 76.0505, 75.9988, false}}}},
    {0, 3, {{{83.9968, 83.8282, 83.5906, false}, {81.8909, 81.7892, 81.6829, false}, {80.4473, 80.3828, 80.3302, false}}}},
    {5, 1, {{{86.2983, 86.0854, 85.8297, false}, {84.1347, 84.0094, 84.0635, false}, {82.6516, 81.0526, 81.0237, true}}}},
    {5, 1, {{{86.2983, 86.0854, 85.8297, false}, {84.1347, 84.0094, 84.0635, false}, {82.6516, 84.0950, 84.0826, true}}}},
    {3, 2, {{{106.868, 106.609, 106.713, false}, {104.189, 104.032, 102.757, false}, {102.352, 102.252, 102.055, false}}}},
    {3, 2, {{{106.868, 106.609, 106.713, false}, {104.189, 104.032, 102.757, false}, {102.352, 102.252, 102.055, false}}}},
    {6, 1, {{{110.736, 110.405, 110.452, false}, {107.960, 107.763, 108.953, false}, {106.057, 105.934, 105.808, false}}}},
    {6, 1, {{{110.736, 110.405, 110.452, false}, {107.960, 107.763, 108.953, false}, {106.057, 105.934, 105.808, false}}}},
    {1, 3, {{{116.090, 115.812, 114.883, false}, {113.179, 113.009, 112.684, false}, {111.184, 111.075, 110.926, false}}}},
    {1, 3, {{{116.090, 115.812, 114.883, false}, {113.179, 113.009, 112.684, false}, {111.184, 111.075, 110.927, false}}}},
    {4, 2, {{{137.321, 133.003, 132.733, true}, {133.878, 133.641, 133.313, false}, {131.518, 131.366, 131.401, false}}}},
    {4, 2, {{{137.321, 137.373, 137.954, true}, {133.878, 133.641, 133.313, false}, {131.518, 131.366, 131.401, false}}}},
    {7, 1, {{{137.859, 137.373, 137.954, false}, {134.403, 134.113, 133.485, false}, {132.033, 131.851, 131.925, false}}}},
    {7, 1, {{{137.859, 140.865, 140.802, false}, {134.403, 134.113, 133.485, false}, {132.033, 131.851, 131.926, false}}}},
    {2, 3, {{{151.446, 151.031, 150.459, false}, {147.649, 147.391, 147.814, false}, {145.046, 144.879, 144.205, false}}}},
    {2, 3, {{{151.446, 151.031, 150.461, false}, {147.649, 147.391, 147.815, false}, {145.046, 144.879, 144.205, false}}}},
    {0, 4, {{{155.954, 155.530, 151.944, false}, {152.044, 151.780, 150.877, false}, {149.364, 149.192, 148.819, false}}}},
    {8, 1, {{{167.633, 165.334, 168.290, true}, {163.431, 163.022, 162.822, false}, {160.550, 160.292, 160.168, false}}}},
    {8, 1, {{{167.633, 168.569, 168.776, true}, {163.431, 163.022, 162.822, false}, {160.550, 160.292, 160.817, false}}}},
    {5, 2, {{{170.761, 170.216, 168.776, false}, {166.480, 166.143, 166.165, false}, {163.545, 160.293, 160.817, true}}}},
    {5, 2, {{{170.761, 170.216, 169.209, false}, {166.480, 166.143, 166.165, false}, {163.545, 166.360, 166.328, true}}}},
    {3, 3, {{{190.002, 189.422, 189.910, false}, {185.238, 184.875, 183.416, false}, {181.973, 181.735, 181.436, false}}}},
    {3, 3, {{{190.002, 189.422, 189.910, false}, {185.238, 184.875, 183.416, false}, {181.973, 181.735, 181.437, false}}}},
    {1, 4, {{{199.116, 198.519, 192.516, false}, {194.124, 193.008, 193.117, false}, {190.702, 190.454, 186.961, false}}}},
    {1, 4, {{{199.116, 198.519, 192.516, false}, {194.124, 193.748, 193.117, false}, {190.702, 190.454, 186.961, false}}}},
    {9, 1, {{{200.032, 199.109, 204.554, false}, {195.017, 193.748, 193.659, true}, {191.579, 191.226, 194.384, false}}}},
    {9, 1, {{{200.032, 199.109, 204.554, false}, {195.017, 195.913, 195.691, true}, {191.579, 191.226, 194.384, false}}}},
}};

}  // namespace spectra::reference

#endif
