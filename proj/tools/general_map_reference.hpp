#ifndef SPECTRA_GENERAL_MAP_REFERENCE_HPP
#define SPECTRA_GENERAL_MAP_REFERENCE_HPP

// Reference closed forms of -E^(1)/eps as coefficients of rho_j for the first twenty square levels.

#include <numbers>
#include <utility>
#include <vector>

namespace spectra::reference {

struct GeneralMapRow {
    int nx, ny;  // the label the printed diagonal expression belongs to
    bool lifted;
    int top;  // highest rho index printed
    std::vector<std::pair<int, long double>> diag;
    std::vector<std::pair<int, long double>> offdiag;  // lifted rows only, up to sign
};

inline std::vector<GeneralMapRow> general_map_rows() {
    const long double p = std::numbers::pi_v<long double>;
    auto pw = [p](int k) {
        long double r = 1.0L;
        for (int i = 0; i < k; ++i) r *= p;
        return r;
    };
    const long double p2 = pw(2), p4 = pw(4), p6 = pw(6), p8 = pw(8), p10 = pw(10), p12 = pw(12), p14 = pw(14),
                      p16 = pw(16), p18 = pw(18);
    std::vector<GeneralMapRow> rows;

    rows.push_back({1, 1, false, 17,
                    {{1, 2.0L},
                     {5, 48 / p4 - 8.0L / 15},
                     {9, 32.0L / 45 + 80640 / p8 - 896 / p4},
                     {13, -128.0L / 91 + 958003200 / p12 - 10644480 / p8 + 8448 / p4},
                     {17, 512.0L / 153 + 41845579776000.0L / p16 - 464950886400.0L / p12 + 369008640 / p8 - 61440 / p4}},
                    {}});

    rows.push_back({1, 2, false, 19,
                    {{1, 2.0L},
                     {3, -3 / p2},
                     {5, 39 / p4 - 8.0L / 15},
                     {7, 3 * (8 * p4 - 765) / (2 * p6)},
                     {9, 32.0L / 45 + 64575 / p8 - 728 / p4},
                     {11, -3 * (3869775 - 42840 * p4 + 32 * p8) / (2 * p10)},
                     {13, -128.0L / 91 + 1532898675 / (2 * p12) - 8523900 / p8 + 6864 / p4},
                     {15, 3 * (-185977516725.0L + 2065943880.0L * p4 - 1633632 * p8 + 256 * p12) / (4 * p14)},
                     {17, 512.0L / 153 + 33476591523375.0L / p16 - 371983411800.0L / p12 + 295495200 / p8 - 49920 / p4},
                     {19, -3 * (6829192106611875.0L - 75878826823800.0L * p4 + 60207507360.0L * p8 - 9987840 * p12 + 512 * p16) /
                              (2 * p18)}},
                    {}});

    rows.push_back({2, 2, false, 17,
                    {{1, 2.0L},
                     {5, 3 / p4 - 8.0L / 15},
                     {9, 32.0L / 45 + 315 / p8 - 56 / p4},
                     {13, -128.0L / 91 + 467775 / (2 * p12) - 41580 / p8 + 528 / p4},
                     {17, 512.0L / 153 + 638512875 / p16 - 113513400 / p12 + 1441440 / p8 - 3840 / p4}},
                    {}});

    rows.push_back({1, 3, true, 9,
                    {{1, 2.0L},
                     {3, -32 / (9 * p2)},
                     {5, 8.0L / 135 * (730 / p4 - 9)},
                     {7, 128 * (9 * p4 - 820) / (81 * p6)},
                     {9, 32 * (8267000 - 91980 * p4 + 81 * p8) / (3645 * p8)}},
                    {{5, 27 / p4}, {9, -63 * (8 * p4 - 765) / p8}}});

    rows.push_back({2, 3, false, 19,
                    {{1, 2.0L},
                     {3, -5 / (9 * p2)},
                     {5, 61 / (27 * p4) - 8.0L / 15},
                     {7, 5 * (72 * p4 - 485) / (162 * p6)},
                     {9, 32.0L / 45 + 161735 / (729 * p8) - 3416 / (81 * p4)},
                     {11, -5 * (1419775 - 244440 * p4 + 2592 * p8) / (1458 * p10)},
                     {13, -128.0L / 91 + 710673425 / (4374 * p12) - 7116340 / (243 * p8) + 10736 / (27 * p4)},
                     {15, 5 * (-115834293575.0L + 20465204760.0L * p4 - 251675424 * p8 + 559872 * p12) / (78732 * p14)},
                     {17, 512.0L / 153 + 26120117398375.0L / (59049 * p16) - 517370253400.0L / (6561 * p12) +
                              740099360 / (729 * p8) - 78080 / (27 * p4)},
                     {19, -5 *
                              (798494934111875.0L - 141781175335800.0L * p4 + 1789243616160.0L * p8 - 4616144640.0L * p12 +
                               3359232 * p16) /
                              (118098 * p18)}},
                    {}});

    rows.push_back({1, 4, false, 19,
                    {{1, 2.0L},
                     {3, -15 / (4 * p2)},
                     {5, 723 / (16 * p4) - 8.0L / 15},
                     {7, 15 / p2 - 173475 / (128 * p6)},
                     {9, 32.0L / 45 + 19429515 / (256 * p8) - 1687 / (2 * p4)},
                     {11, -15 * (932615775 - 10362240 * p4 + 8192 * p8) / (2048 * p10)},
                     {13, -128.0L / 91 + 7386317405775.0L / (8192 * p12) - 641173995 / (64 * p8) + 7953 / p4},
                     {15, 15 * (-716965206682725.0L + 7966279601280.0L * p4 - 6322348032.0L * p8 + 1048576 * p12) /
                              (65536 * p14)},
                     {17, 512.0L / 153 + 2581074744696322875.0L / (65536 * p16) - 224051627975175.0L / (512 * p12) +
                              2778420645.0L / (8 * p8) - 57840 / p4},
                     {19, -6318470974918905928125.0L / (524288 * p18) + 548478383112284625.0L / (4096 * p14) -
                              6801566847075.0L / (64 * p10) + 17694450 / p6 - 960 / p2}},
                    {}});

    rows.push_back({3, 3, false, 17,
                    {{1, 2.0L},
                     {5, 16 / (27 * p4) - 8.0L / 15},
                     {9, 32 * (81 + 1400 / p8 - 1260 / p4) / 3645},
                     {13, -128.0L / 91 + 3942400 / (2187 * p12) - 394240 / (243 * p8) + 2816 / (27 * p4)},
                     {17, 512 * (1905904000.0L - 1715313600.0L * p4 + 110270160 * p8 - 1487160 * p12 + 6561 * p16) /
                              (1003833 * p16)}},
                    {}});

    rows.push_back({2, 4, true, 9,
                    {{1, 2.0L},
                     {3, -3 / (4 * p2)},
                     {5, 39 / (16 * p4) - 8.0L / 15},
                     {7, 3 / p2 - 2295 / (128 * p6)},
                     {9, 32.0L / 45 + 64575 / (256 * p8) - 91 / (2 * p4)}},
                    {{5, 1024 / (27 * p4)}, {9, -57344 * (9 * p4 - 820) / (729 * p8)}}});

    rows.push_back({3, 4, false, 19,
                    {{1, 2.0L},
                     {3, -7 / (36 * p2)},
                     {5, 193 / (432 * p4) - 8.0L / 15},
                     {7, 7 * (1152 * p4 - 1685) / (10368 * p6)},
                     {9, 32.0L / 45 + 1550675 / (186624 * p8) - 1351 / (162 * p4)},
                     {11, -7 * (16245775 - 13587840 * p4 + 663552 * p8) / (1492992 * p10)},
                     {13, -128.0L / 91 + 21037818725.0L / (17915904 * p12) - 17057425 / (15552 * p8) + 2123 / (27 * p4)},
                     {15, 7 * (-4256172495575.0L + 3746769586560.0L * p4 - 223840641024.0L * p8 + 2293235712.0L * p12) /
                              (1289945088.0L * p14)},
                     {17, 512.0L / 153 + 2421160144277875.0L / (3869835264.0L * p16) - 1914441503975.0L / (3359232 * p12) +
                              221746525 / (5832 * p8) - 15440 / (27 * p4)},
                     {19, -7 *
                              (93255273798561875.0L - 83352882153340800.0L * p4 + 5241195398799360.0L * p8 -
                               65689736970240.0L * p12 + 220150628352.0L * p16) /
                              (30958682112.0L * p18)}},
                    {}});

    rows.push_back({1, 5, true, 9,
                    {{1, 2.0L},
                     {3, -96 / (25 * p2)},
                     {5, 28848 / (625 * p4) - 8.0L / 15},
                     {7, 384 * (125 * p4 - 11268) / (3125 * p6)},
                     {9, 32.0L / 45 + 6057692928.0L / (78125 * p8) - 538496 / (625 * p4)}},
                    {{5, 25 / (27 * p4)}, {9, -175 * (72 * p4 - 485) / (729 * p8)}}});

    rows.push_back({2, 5, false, 19,
                    {{1, 2.0L},
                     {3, -21 / (25 * p2)},
                     {5, 1623 / (625 * p4) - 8.0L / 15},
                     {7, 21 * (1000 * p4 - 5769) / (6250 * p6)},
                     {9, 32.0L / 45 + 21217203 / (78125 * p8) - 30296 / (625 * p4)},
                     {11, -21 * (227299527 - 40383000 * p4 + 500000 * p8) / (781250 * p10)},
                     {13, -128.0L / 91 + 3938040945531.0L / (19531250 * p12) - 2800670796.0L / (78125 * p8) +
                              285648 / (625 * p4)},
                     {15, 21 * (-426619774001421.0L + 75842275509000.0L * p4 - 962461500000.0L * p8 + 2500000000.0L * p12) /
                              (976562500 * p14)},
                     {17, 512.0L / 153 + 671926478816876283.0L / (1220703125 * p16) - 955631269448856.0L / (9765625 * p12) +
                              97089920928.0L / (78125 * p8) - 415488 / (125 * p4)},
                     {19, -21 *
                              (122386598885647295199.0L - 21757608474072471000.0L * p4 + 276282575068500000.0L * p8 -
                               735547500000000.0L * p12 + 625000000000.0L * p16) /
                              (61035156250.0L * p18)}},
                    {}});

    rows.push_back({4, 4, false, 17,
                    {{1, 2.0L},
                     {5, 3 / (16 * p4) - 8.0L / 15},
                     {9, 32.0L / 45 + 315 / (256 * p8) - 7 / (2 * p4)},
                     {13, -128.0L / 91 + 467775 / (8192 * p12) - 10395 / (64 * p8) + 33 / p4},
                     {17, 512.0L / 153 + 638512875 / (65536 * p16) - 14189175 / (512 * p12) + 45045 / (8 * p8) - 240 / p4}},
                    {}});
    return rows;
}

}  // namespace spectra::reference

#endif
