"""Small closed 3-manifold triangulations found by scripts/find_census.py.

Each entry records the expected first homology, orientability and vertex count.
"""

CENSUS = {
    "t1_S3_o_v1": (
        """tri 1
0:1230 0:3012 0:0132 0:0132
""",
        "0", True, 1,
    ),
    "t1_S3_o_v2": (
        """tri 1
0:1023 0:1023 0:0132 0:0132
""",
        "0", True, 2,
    ),
    "t1_Z4_o_v1": (
        """tri 1
0:3012 0:1230 0:3012 0:1230
""",
        "Z/4", True, 1,
    ),
    "t1_Z5_o_v1": (
        """tri 1
0:1302 0:2031 0:1230 0:3012
""",
        "Z/5", True, 1,
    ),
    "t2_S3_o_v1": (
        """tri 2
0:2103 1:1230 0:2103 1:2031
1:3120 0:1302 0:3012 1:3120
""",
        "0", True, 1,
    ),
    "t2_S3_o_v2": (
        """tri 2
0:2103 1:1320 0:2103 1:3210
0:3210 1:0213 1:0213 0:3021
""",
        "0", True, 2,
    ),
    "t2_S3_o_v4": (
        """tri 2
1:0132 1:0132 1:0132 1:0132
0:0132 0:0132 0:0132 0:0132
""",
        "0", True, 4,
    ),
    "t2_Z_n_v1": (
        """tri 2
1:0321 1:3102 1:0321 1:2013
0:0321 0:2130 0:0321 0:1203
""",
        "Z", False, 1,
    ),
    "t2_Z_o_v1": (
        """tri 2
0:3201 1:2310 1:2310 0:2310
1:2310 0:3201 1:3201 0:3201
""",
        "Z", True, 1,
    ),
    "t2_Z2_Z2_o_v1": (
        """tri 2
1:0123 1:2301 1:3210 1:1032
0:0123 0:3210 0:1032 0:2301
""",
        "Z/2 + Z/2", True, 1,
    ),
    "t2_Z2_o_v1": (
        """tri 2
1:0132 0:1230 0:3012 1:1023
0:0132 1:0213 1:0213 0:1023
""",
        "Z/2", True, 1,
    ),
    "t2_Z2_o_v2": (
        """tri 2
1:2103 1:0321 1:2103 1:0321
0:2103 0:0321 0:2103 0:0321
""",
        "Z/2", True, 2,
    ),
    "t2_Z3_o_v1": (
        """tri 2
1:1023 1:1023 0:1230 0:3012
0:1023 0:1023 1:1230 1:3012
""",
        "Z/3", True, 1,
    ),
    "t2_Z3_o_v2": (
        """tri 2
1:3021 1:3021 1:3021 1:0231
0:1320 0:0312 0:1320 0:1320
""",
        "Z/3", True, 2,
    ),
    "t2_Z5_o_v1": (
        """tri 2
0:1302 0:2031 1:2013 1:1320
0:3021 0:1203 1:1230 1:3012
""",
        "Z/5", True, 1,
    ),
    "t2_Z7_o_v1": (
        """tri 2
0:1230 0:3012 1:2103 1:3012
0:2103 1:2310 0:1230 1:3201
""",
        "Z/7", True, 1,
    ),
    "t2_Z8_o_v1": (
        """tri 2
0:2031 1:0321 0:1302 1:1230
0:3012 1:3201 1:2310 0:0321
""",
        "Z/8", True, 1,
    ),
    "t3_S3_o_v1": (
        """tri 3
0:1023 0:1023 1:2130 1:3021
2:0231 0:1320 2:0231 0:3102
1:0312 2:1230 2:3012 1:0312
""",
        "0", True, 1,
    ),
    "t3_S3_o_v2": (
        """tri 3
1:0213 2:1320 1:0213 2:1032
0:0213 0:0213 1:0132 1:0132
2:1023 2:1023 0:1032 0:3021
""",
        "0", True, 2,
    ),
    "t3_S3_o_v3": (
        """tri 3
2:2310 1:2031 0:0132 0:0132
0:1302 1:0321 2:2103 1:0321
1:2103 2:0321 0:3201 2:0321
""",
        "0", True, 3,
    ),
    "t3_Z_n_v1": (
        """tri 3
1:2103 2:2103 1:0312 2:0312
2:3210 0:0231 0:2103 2:1320
1:3021 0:2103 0:0231 1:3210
""",
        "Z", False, 1,
    ),
    "t3_Z10_o_v1": (
        """tri 3
2:2301 0:1302 2:3210 0:2031
2:0321 1:3201 1:2310 2:2103
1:0321 0:3210 0:2301 1:2103
""",
        "Z/10", True, 1,
    ),
    "t3_Z2_o_v1": (
        """tri 3
1:0123 2:3120 2:2103 2:0132
0:0123 1:0213 1:0213 2:1203
0:2103 0:3120 0:0132 1:2013
""",
        "Z/2", True, 1,
    ),
    "t3_Z3_o_v1": (
        """tri 3
2:3201 0:0321 2:2310 0:0321
1:1302 1:2031 2:3021 2:2130
1:3102 0:3201 1:1320 0:2310
""",
        "Z/3", True, 1,
    ),
    "t3_Z4_o_v1": (
        """tri 3
2:1203 0:3201 0:2310 2:0123
1:3120 2:1023 2:1023 1:3120
1:1023 0:2013 1:1023 0:0123
""",
        "Z/4", True, 1,
    ),
    "t3_Z5_o_v1": (
        """tri 3
2:2013 2:2013 0:1230 0:3012
2:3012 1:1230 1:3012 2:0321
0:1203 1:0321 0:1203 1:1230
""",
        "Z/5", True, 1,
    ),
    "t3_Z7_o_v1": (
        """tri 3
1:2301 2:3102 1:2130 2:0123
2:2310 2:2031 0:2301 0:3102
1:1302 0:2130 1:3201 0:0123
""",
        "Z/7", True, 1,
    ),
    "t3_Z9_o_v1": (
        """tri 3
0:1230 0:3012 2:1032 2:3210
1:3201 2:2103 2:0321 1:2310
0:3210 1:2103 1:0321 0:1032
""",
        "Z/9", True, 1,
    ),
}
