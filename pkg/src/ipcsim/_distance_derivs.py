"""Autogenerated squared-distance derivatives (tools/gen_distance_derivatives.py).

Do not edit by hand.  Each function takes a flat float64 array of stacked
point coordinates and returns (gradient, hessian) of the squared distance
of the corresponding unclamped primitive pair.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def point_line_grad_hess(x):
    x0 = x[0]
    x1 = x[1]
    x2 = x[2]
    x3 = x[3]
    x4 = x[4]
    x5 = x[5]
    x6 = x[6]
    x7 = x[7]
    x8 = x[8]
    x9 = -x6
    x10 = x3 + x9
    x11 = -x10
    x12 = -x7
    x13 = x12 + x4
    x14 = -x13
    x15 = -x8
    x16 = x15 + x5
    x17 = -x16
    x18 = x11**2 + x14**2 + x17**2
    x19 = 1/x18
    x20 = -2*x7
    x21 = 2*x4
    x22 = x20 + x21
    x23 = -x22
    x24 = x0 - x3
    x25 = x14*x24
    x26 = x1 - x4
    x27 = x11*x26
    x28 = x25 - x27
    x29 = -2*x8
    x30 = 2*x5
    x31 = x29 + x30
    x32 = x17*x24
    x33 = x2 - x5
    x34 = x11*x33 - x32
    x35 = x23*x28 + x31*x34
    x36 = -x31
    x37 = x17*x26
    x38 = x14*x33
    x39 = x37 - x38
    x40 = -2*x6
    x41 = 2*x3
    x42 = x40 + x41
    x43 = x28*x42 + x36*x39
    x44 = -x42
    x45 = x22*x39 + x34*x44
    x46 = 2*x2
    x47 = x29 + x46
    x48 = -x47
    x49 = 2*x1
    x50 = x20 + x49
    x51 = x28*x50 + x34*x48
    x52 = x18**(-2)
    x53 = x28**2 + x34**2 + x39**2
    x54 = x52*x53
    x55 = 2*x0
    x56 = x40 + x55
    x57 = -x56
    x58 = x28*x57 + x39*x47
    x59 = -x50
    x60 = x34*x56 + x39*x59
    x61 = -x21 + x49
    x62 = -x61
    x63 = -x30 + x46
    x64 = x28*x62 + x34*x63
    x65 = -x63
    x66 = -x41 + x55
    x67 = x28*x66 + x39*x65
    x68 = -x66
    x69 = x34*x68 + x39*x61
    x70 = x1 + x12
    x71 = x15 + x2
    x72 = -x71
    x73 = x35*x52
    x74 = x0 + x9
    x75 = -x74
    x76 = 2*x25
    x77 = 2*x27
    x78 = -x76 + x77
    x79 = 2*x32
    x80 = 2*x11*x33
    x81 = -x79 + x80
    x82 = -x26
    x83 = x76 - x77
    x84 = -x24
    x85 = x79 - x80
    x86 = x43*x52
    x87 = -x70
    x88 = 2*x37
    x89 = 2*x38
    x90 = -x88 + x89
    x91 = -x33
    x92 = x88 - x89
    x93 = x45*x52
    x94 = 2*x54
    x95 = -x94
    x96 = x44*x52
    x97 = 4*x3 - 4*x6
    x98 = x53/x18**3
    x99 = x44*x98
    x100 = x51*x52
    x101 = 4*x4 - 4*x7
    x102 = -x101
    x103 = 4*x5 - 4*x8
    x104 = -x103
    x105 = x23*x52
    x106 = x23*x98
    x107 = x52*x58
    x108 = x36*x52
    x109 = x36*x98
    x110 = x52*x60
    x111 = x42*x52
    x112 = x42*x98
    x113 = x52*x64
    x114 = x22*x52
    x115 = x22*x98
    x116 = x31*x52
    g = np.empty(9)
    g[0] = x19*x35
    g[1] = x19*x43
    g[2] = x19*x45
    g[3] = x19*x51 + x44*x54
    g[4] = x19*x58 + x23*x54
    g[5] = x19*x60 + x36*x54
    g[6] = x19*x64 + x42*x54
    g[7] = x19*x67 + x22*x54
    g[8] = x19*x69 + x31*x54
    H = np.empty((9, 9))
    H[0, 0] = x19*(x14*x23 + x16*x31)
    H[0, 1] = x10*x19*x23
    H[1, 0] = H[0, 1]
    H[0, 2] = x11*x19*x31
    H[2, 0] = H[0, 2]
    H[0, 3] = x19*(x23*x70 + x31*x72) + x44*x73
    H[3, 0] = H[0, 3]
    H[0, 4] = x19*(x23*x75 + x78) + x23*x73
    H[4, 0] = H[0, 4]
    H[0, 5] = x19*(x31*x74 + x81) + x36*x73
    H[5, 0] = H[0, 5]
    H[0, 6] = x19*(x23*x82 + x31*x33) + x42*x73
    H[6, 0] = H[0, 6]
    H[0, 7] = x19*(x23*x24 + x83) + x22*x73
    H[7, 0] = H[0, 7]
    H[0, 8] = x19*(x31*x84 + x85) + x31*x73
    H[8, 0] = H[0, 8]
    H[1, 1] = x19*(x10*x42 + x17*x36)
    H[1, 2] = x13*x19*x36
    H[2, 1] = H[1, 2]
    H[1, 3] = x19*(x42*x70 + x83) + x44*x86
    H[3, 1] = H[1, 3]
    H[1, 4] = x19*(x36*x71 + x42*x75) + x23*x86
    H[4, 1] = H[1, 4]
    H[1, 5] = x19*(x36*x87 + x90) + x36*x86
    H[5, 1] = H[1, 5]
    H[1, 6] = x19*(x42*x82 + x78) + x42*x86
    H[6, 1] = H[1, 6]
    H[1, 7] = x19*(x24*x42 + x36*x91) + x22*x86
    H[7, 1] = H[1, 7]
    H[1, 8] = x19*(x26*x36 + x92) + x31*x86
    H[8, 1] = H[1, 8]
    H[2, 2] = x19*(x11*x44 + x13*x22)
    H[2, 3] = x19*(x44*x72 + x85) + x44*x93
    H[3, 2] = H[2, 3]
    H[2, 4] = x19*(x22*x71 + x92) + x23*x93
    H[4, 2] = H[2, 4]
    H[2, 5] = x19*(x22*x87 + x44*x74) + x36*x93
    H[5, 2] = H[2, 5]
    H[2, 6] = x19*(x33*x44 + x81) + x42*x93
    H[6, 2] = H[2, 6]
    H[2, 7] = x19*(x22*x91 + x90) + x22*x93
    H[7, 2] = H[2, 7]
    H[2, 8] = x19*(x22*x26 + x44*x84) + x31*x93
    H[8, 2] = H[2, 8]
    H[3, 3] = x19*(x48*x72 + x50*x70) + 2*x51*x96 + x95 - x97*x99
    H[3, 4] = x100*x23 + x102*x99 + x19*x50*x75 + x58*x96
    H[4, 3] = H[3, 4]
    H[3, 5] = x100*x36 + x104*x99 + x19*x48*x74 + x60*x96
    H[5, 3] = H[3, 5]
    H[3, 6] = x100*x42 + x19*(x33*x48 + x50*x82) + x64*x96 + x94 + x97*x99
    H[6, 3] = H[3, 6]
    H[3, 7] = x100*x22 + x101*x99 + x19*(x24*x50 + x78) + x67*x96
    H[7, 3] = H[3, 7]
    H[3, 8] = x100*x31 + x103*x99 + x19*(x48*x84 + x81) + x69*x96
    H[8, 3] = H[3, 8]
    H[4, 4] = x102*x106 + 2*x105*x58 + x19*(x47*x71 + x57*x75) + x95
    H[4, 5] = x104*x106 + x105*x60 + x107*x36 + x19*x47*x87
    H[5, 4] = H[4, 5]
    H[4, 6] = x105*x64 + x106*x97 + x107*x42 + x19*(x57*x82 + x83)
    H[6, 4] = H[4, 6]
    H[4, 7] = x101*x106 + x105*x67 + x107*x22 + x19*(x24*x57 + x47*x91) + x94
    H[7, 4] = H[4, 7]
    H[4, 8] = x103*x106 + x105*x69 + x107*x31 + x19*(x26*x47 + x90)
    H[8, 4] = H[4, 8]
    H[5, 5] = x104*x109 + 2*x108*x60 + x19*(x56*x74 + x59*x87) + x95
    H[5, 6] = x108*x64 + x109*x97 + x110*x42 + x19*(x33*x56 + x85)
    H[6, 5] = H[5, 6]
    H[5, 7] = x101*x109 + x108*x67 + x110*x22 + x19*(x59*x91 + x92)
    H[7, 5] = H[5, 7]
    H[5, 8] = x103*x109 + x108*x69 + x110*x31 + x19*(x26*x59 + x56*x84) + x94
    H[8, 5] = H[5, 8]
    H[6, 6] = 2*x111*x64 + x112*x97 + x19*(x33*x63 + x62*x82) + x95
    H[6, 7] = x101*x112 + x111*x67 + x113*x22 + x19*x24*x62
    H[7, 6] = H[6, 7]
    H[6, 8] = x103*x112 + x111*x69 + x113*x31 + x19*x63*x84
    H[8, 6] = H[6, 8]
    H[7, 7] = x101*x115 + 2*x114*x67 + x19*(x24*x66 + x65*x91) + x95
    H[7, 8] = x103*x115 + x114*x69 + x116*x67 + x19*x26*x65
    H[8, 7] = H[7, 8]
    H[8, 8] = x103*x31*x98 + 2*x116*x69 + x19*(x26*x61 + x68*x84) + x95
    return g, H

@njit(cache=True)
def point_plane_grad_hess(x):
    x0 = x[0]
    x1 = x[1]
    x2 = x[2]
    x3 = x[3]
    x4 = x[4]
    x5 = x[5]
    x6 = x[6]
    x7 = x[7]
    x8 = x[8]
    x9 = x[9]
    x10 = x[10]
    x11 = x[11]
    x12 = -x5
    x13 = x11 + x12
    x14 = -x7
    x15 = x14 + x4
    x16 = -x15
    x17 = x13*x16
    x18 = 2*x17
    x19 = -x4
    x20 = x10 + x19
    x21 = -x8
    x22 = x21 + x5
    x23 = -x22
    x24 = x20*x23
    x25 = 2*x24
    x26 = -x18 + x25
    x27 = -x26
    x28 = x3 - x6
    x29 = -x28
    x30 = x20*x29
    x31 = -x9
    x32 = x3 + x31
    x33 = -x32
    x34 = x16*x33
    x35 = x30 - x34
    x36 = -x17 + x24
    x37 = -x36
    x38 = x13*x29
    x39 = x23*x33
    x40 = x38 - x39
    x41 = -x40
    x42 = x35**2 + x37**2 + x41**2
    x43 = 1/x42
    x44 = x0 - x3
    x45 = x1 + x19
    x46 = x12 + x2
    x47 = x35*x46 + x37*x44 + x41*x45
    x48 = x43*x47
    x49 = 2*x39
    x50 = 2*x38
    x51 = -x49 + x50
    x52 = -x51
    x53 = 2*x34
    x54 = 2*x30
    x55 = -x53 + x54
    x56 = x11 + x21
    x57 = x45*x56
    x58 = x10 + x14
    x59 = -x58
    x60 = x46*x59
    x61 = x26 + 2*x57 + 2*x60
    x62 = -2*x7
    x63 = 2*x10
    x64 = x62 + x63
    x65 = -x64
    x66 = x35*x65
    x67 = -2*x8
    x68 = 2*x11
    x69 = x67 + x68
    x70 = x41*x69
    x71 = -x66 - x70
    x72 = x42**(-2)
    x73 = x47**2
    x74 = x72*x73
    x75 = -x56
    x76 = x44*x75
    x77 = x31 + x6
    x78 = -x77
    x79 = x46*x78
    x80 = x51 + 2*x76 + 2*x79
    x81 = -x69
    x82 = x37*x81
    x83 = -2*x9
    x84 = 2*x6
    x85 = x83 + x84
    x86 = -x85
    x87 = x35*x86
    x88 = -x82 - x87
    x89 = x44*x58
    x90 = x45*x77
    x91 = x53 - x54
    x92 = 2*x89 + 2*x90 + x91
    x93 = x37*x64
    x94 = x41*x85
    x95 = -x93 - x94
    x96 = -x13
    x97 = x45*x96
    x98 = x20*x46
    x99 = 2*x97 + 2*x98
    x100 = 2*x5
    x101 = -x100
    x102 = x101 + x68
    x103 = -x102
    x104 = x103*x41
    x105 = 2*x4
    x106 = -x105
    x107 = x106 + x63
    x108 = x107*x35
    x109 = -x104 - x108
    x110 = x13*x44
    x111 = x32*x46
    x112 = 2*x110 + 2*x111
    x113 = x102*x37
    x114 = 2*x3
    x115 = x114 + x83
    x116 = x115*x35
    x117 = -x113 - x116
    x118 = -x20
    x119 = x118*x44
    x120 = x33*x45
    x121 = 2*x119 + 2*x120
    x122 = -x107
    x123 = x122*x37
    x124 = -x115
    x125 = x124*x41
    x126 = -x123 - x125
    x127 = x23*x45
    x128 = x15*x46
    x129 = 2*x127 + 2*x128
    x130 = x100 + x67
    x131 = -x130
    x132 = x131*x41
    x133 = x105 + x62
    x134 = x133*x35
    x135 = -x132 - x134
    x136 = x22*x44
    x137 = x29*x46
    x138 = 2*x136 + 2*x137
    x139 = -x84
    x140 = x114 + x139
    x141 = -x140
    x142 = x141*x35
    x143 = x130*x37
    x144 = -x142 - x143
    x145 = x16*x44
    x146 = x28*x45
    x147 = 2*x145 + 2*x146
    x148 = -x133
    x149 = x148*x37
    x150 = x140*x41
    x151 = -x149 - x150
    x152 = x27*x43
    x153 = x36 + x57 + x60
    x154 = x47*x72
    x155 = x154*x27
    x156 = x40 + x76 + x79
    x157 = -x30 + x34 + x89 + x90
    x158 = x97 + x98
    x159 = x110 + x111
    x160 = x119 + x120
    x161 = x127 + x128
    x162 = x136 + x137
    x163 = x145 + x146
    x164 = x43*x52
    x165 = x154*x52
    x166 = x43*x55
    x167 = x154*x55
    x168 = x43*x61
    x169 = x73/x42**3
    x170 = x169*x71
    x171 = x154*x71
    x172 = -2*x82 - 2*x87
    x173 = x154*x61
    x174 = -2*x93 - 2*x94
    x175 = -2*x104 - 2*x108
    x176 = 2*x2
    x177 = -x176 + x68
    x178 = -2*x113 - 2*x116
    x179 = 2*x1
    x180 = x179 - x63
    x181 = -2*x123 - 2*x125
    x182 = -2*x132 - 2*x134
    x183 = x176 + x67
    x184 = -2*x142 - 2*x143
    x185 = x179 + x62
    x186 = x49 - x50
    x187 = -2*x149 - 2*x150
    x188 = x43*x80
    x189 = x169*x88
    x190 = x154*x88
    x191 = x154*x80
    x192 = 2*x0
    x193 = x192 + x83
    x194 = x18 - x25
    x195 = x139 + x192
    x196 = x43*x92
    x197 = x169*x95
    x198 = x154*x92
    x199 = x154*x95
    x200 = x43*x99
    x201 = x109*x169
    x202 = x109*x154
    x203 = x154*x99
    x204 = x101 + x176
    x205 = x106 + x179
    x206 = x112*x43
    x207 = x117*x169
    x208 = x112*x154
    x209 = x117*x154
    x210 = -x114 + x192
    x211 = x121*x43
    x212 = x126*x169
    x213 = x126*x154
    x214 = x121*x154
    x215 = x129*x43
    x216 = x135*x169
    x217 = x129*x154
    x218 = x135*x154
    x219 = x138*x43
    x220 = x144*x169
    x221 = x144*x154
    x222 = x151*x154
    g = np.empty(12)
    g[0] = x27*x48
    g[1] = x48*x52
    g[2] = x48*x55
    g[3] = x48*x61 + x71*x74
    g[4] = x48*x80 + x74*x88
    g[5] = x48*x92 + x74*x95
    g[6] = x109*x74 + x48*x99
    g[7] = x112*x48 + x117*x74
    g[8] = x121*x48 + x126*x74
    g[9] = x129*x48 + x135*x74
    g[10] = x138*x48 + x144*x74
    g[11] = x147*x48 + x151*x74
    H = np.empty((12, 12))
    H[0, 0] = x152*x37
    H[0, 1] = x152*x41
    H[1, 0] = H[0, 1]
    H[0, 2] = x152*x35
    H[2, 0] = H[0, 2]
    H[0, 3] = x152*x153 + x155*x71
    H[3, 0] = H[0, 3]
    H[0, 4] = x152*x156 + x155*x88 + x48*x81
    H[4, 0] = H[0, 4]
    H[0, 5] = x152*x157 + x155*x95 + x48*x64
    H[5, 0] = H[0, 5]
    H[0, 6] = x109*x155 + x152*x158
    H[6, 0] = H[0, 6]
    H[0, 7] = x102*x48 + x117*x155 + x152*x159
    H[7, 0] = H[0, 7]
    H[0, 8] = x122*x48 + x126*x155 + x152*x160
    H[8, 0] = H[0, 8]
    H[0, 9] = x135*x155 + x152*x161
    H[9, 0] = H[0, 9]
    H[0, 10] = x130*x48 + x144*x155 + x152*x162
    H[10, 0] = H[0, 10]
    H[0, 11] = x148*x48 + x151*x155 + x152*x163
    H[11, 0] = H[0, 11]
    H[1, 1] = x164*x41
    H[1, 2] = x164*x35
    H[2, 1] = H[1, 2]
    H[1, 3] = x153*x164 + x165*x71 + x48*x69
    H[3, 1] = H[1, 3]
    H[1, 4] = x156*x164 + x165*x88
    H[4, 1] = H[1, 4]
    H[1, 5] = x157*x164 + x165*x95 + x48*x85
    H[5, 1] = H[1, 5]
    H[1, 6] = x103*x48 + x109*x165 + x158*x164
    H[6, 1] = H[1, 6]
    H[1, 7] = x117*x165 + x159*x164
    H[7, 1] = H[1, 7]
    H[1, 8] = x124*x48 + x126*x165 + x160*x164
    H[8, 1] = H[1, 8]
    H[1, 9] = x131*x48 + x135*x165 + x161*x164
    H[9, 1] = H[1, 9]
    H[1, 10] = x144*x165 + x162*x164
    H[10, 1] = H[1, 10]
    H[1, 11] = x140*x48 + x151*x165 + x163*x164
    H[11, 1] = H[1, 11]
    H[2, 2] = x166*x35
    H[2, 3] = x153*x166 + x167*x71 + x48*x65
    H[3, 2] = H[2, 3]
    H[2, 4] = x156*x166 + x167*x88 + x48*x86
    H[4, 2] = H[2, 4]
    H[2, 5] = x157*x166 + x167*x95
    H[5, 2] = H[2, 5]
    H[2, 6] = x107*x48 + x109*x167 + x158*x166
    H[6, 2] = H[2, 6]
    H[2, 7] = x115*x48 + x117*x167 + x159*x166
    H[7, 2] = H[2, 7]
    H[2, 8] = x126*x167 + x160*x166
    H[8, 2] = H[2, 8]
    H[2, 9] = x133*x48 + x135*x167 + x161*x166
    H[9, 2] = H[2, 9]
    H[2, 10] = x141*x48 + x144*x167 + x162*x166
    H[10, 2] = H[2, 10]
    H[2, 11] = x151*x167 + x163*x166
    H[11, 2] = H[2, 11]
    H[3, 3] = x153*x168 + x170*(-2*x66 - 2*x70) + 2*x171*x61 + x74*(-x56*x69 - x59*x65)
    H[3, 4] = x156*x168 + x170*x172 + x171*x80 + x173*x88 - x65*x74*x78
    H[4, 3] = H[3, 4]
    H[3, 5] = x157*x168 + x170*x174 + x171*x92 + x173*x95 - x69*x74*x77
    H[5, 3] = H[3, 5]
    H[3, 6] = x109*x173 + x158*x168 + x170*x175 + x171*x99 + x74*(-x20*x65 - x69*x96)
    H[6, 3] = H[3, 6]
    H[3, 7] = x112*x171 + x117*x173 + x159*x168 + x170*x178 - x177*x48 + x74*(-x32*x65 - x55)
    H[7, 3] = H[3, 7]
    H[3, 8] = x121*x171 + x126*x173 + x160*x168 + x170*x181 - x180*x48 + x74*(-x33*x69 - x51)
    H[8, 3] = H[3, 8]
    H[3, 9] = x129*x171 + x135*x173 + x161*x168 + x170*x182 + x74*(-x15*x65 - x23*x69)
    H[9, 3] = H[3, 9]
    H[3, 10] = x138*x171 + x144*x173 + x162*x168 + x170*x184 - x183*x48 + x74*(-x29*x65 - x91)
    H[10, 3] = H[3, 10]
    H[3, 11] = x147*x171 + x151*x173 + x163*x168 + x170*x187 + x185*x48 + x74*(-x186 - x28*x69)
    H[11, 3] = H[3, 11]
    H[4, 4] = x156*x188 + x172*x189 + 2*x190*x80 + x74*(-x75*x81 - x78*x86)
    H[4, 5] = x157*x188 + x174*x189 + x190*x92 + x191*x95 - x58*x74*x81
    H[5, 4] = H[4, 5]
    H[4, 6] = x109*x191 + x158*x188 + x175*x189 + x177*x48 + x190*x99 + x74*(-x20*x86 - x91)
    H[6, 4] = H[4, 6]
    H[4, 7] = x112*x190 + x117*x191 + x159*x188 + x178*x189 + x74*(-x13*x81 - x32*x86)
    H[7, 4] = H[4, 7]
    H[4, 8] = x121*x190 + x126*x191 + x160*x188 + x181*x189 + x193*x48 + x74*(-x118*x81 - x194)
    H[8, 4] = H[4, 8]
    H[4, 9] = x129*x190 + x135*x191 + x161*x188 + x182*x189 + x183*x48 + x74*(-x15*x86 - x55)
    H[9, 4] = H[4, 9]
    H[4, 10] = x138*x190 + x144*x191 + x162*x188 + x184*x189 + x74*(-x22*x81 - x29*x86)
    H[10, 4] = H[4, 10]
    H[4, 11] = x147*x190 + x151*x191 + x163*x188 + x187*x189 - x195*x48 + x74*(-x16*x81 - x26)
    H[11, 4] = H[4, 11]
    H[5, 5] = x157*x196 + x174*x197 + 2*x198*x95 + x74*(-x58*x64 - x77*x85)
    H[5, 6] = x109*x198 + x158*x196 + x175*x197 + x180*x48 + x199*x99 + x74*(-x186 - x85*x96)
    H[6, 5] = H[5, 6]
    H[5, 7] = x112*x199 + x117*x198 + x159*x196 + x178*x197 - x193*x48 + x74*(-x13*x64 - x26)
    H[7, 5] = H[5, 7]
    H[5, 8] = x121*x199 + x126*x198 + x160*x196 + x181*x197 + x74*(-x118*x64 - x33*x85)
    H[8, 5] = H[5, 8]
    H[5, 9] = x129*x199 + x135*x198 + x161*x196 + x182*x197 - x185*x48 + x74*(-x23*x85 - x51)
    H[9, 5] = H[5, 9]
    H[5, 10] = x138*x199 + x144*x198 + x162*x196 + x184*x197 + x195*x48 + x74*(-x194 - x22*x64)
    H[10, 5] = H[5, 10]
    H[5, 11] = x147*x199 + x151*x198 + x163*x196 + x187*x197 + x74*(-x16*x64 - x28*x85)
    H[11, 5] = H[5, 11]
    H[6, 6] = x158*x200 + x175*x201 + 2*x202*x99 + x74*(-x103*x96 - x107*x20)
    H[6, 7] = -x107*x32*x74 + x112*x202 + x117*x203 + x159*x200 + x178*x201
    H[7, 6] = H[6, 7]
    H[6, 8] = -x103*x33*x74 + x121*x202 + x126*x203 + x160*x200 + x181*x201
    H[8, 6] = H[6, 8]
    H[6, 9] = x129*x202 + x135*x203 + x161*x200 + x182*x201 + x74*(-x103*x23 - x107*x15)
    H[9, 6] = H[6, 9]
    H[6, 10] = x138*x202 + x144*x203 + x162*x200 + x184*x201 + x204*x48 + x74*(-x107*x29 - x55)
    H[10, 6] = H[6, 10]
    H[6, 11] = x147*x202 + x151*x203 + x163*x200 + x187*x201 - x205*x48 + x74*(-x103*x28 - x51)
    H[11, 6] = H[6, 11]
    H[7, 7] = 2*x117*x208 + x159*x206 + x178*x207 + x74*(-x102*x13 - x115*x32)
    H[7, 8] = -x102*x118*x74 + x121*x209 + x126*x208 + x160*x206 + x181*x207
    H[8, 7] = H[7, 8]
    H[7, 9] = x129*x209 + x135*x208 + x161*x206 + x182*x207 - x204*x48 + x74*(-x115*x15 - x91)
    H[9, 7] = H[7, 9]
    H[7, 10] = x138*x209 + x144*x208 + x162*x206 + x184*x207 + x74*(-x102*x22 - x115*x29)
    H[10, 7] = H[7, 10]
    H[7, 11] = x147*x209 + x151*x208 + x163*x206 + x187*x207 + x210*x48 + x74*(-x102*x16 - x194)
    H[11, 7] = H[7, 11]
    H[8, 8] = 2*x121*x213 + x160*x211 + x181*x212 + x74*(-x118*x122 - x124*x33)
    H[8, 9] = x129*x213 + x135*x214 + x161*x211 + x182*x212 + x205*x48 + x74*(-x124*x23 - x186)
    H[9, 8] = H[8, 9]
    H[8, 10] = x138*x213 + x144*x214 + x162*x211 + x184*x212 - x210*x48 + x74*(-x122*x22 - x26)
    H[10, 8] = H[8, 10]
    H[8, 11] = x147*x213 + x151*x214 + x163*x211 + x187*x212 + x74*(-x122*x16 - x124*x28)
    H[11, 8] = H[8, 11]
    H[9, 9] = 2*x135*x217 + x161*x215 + x182*x216 + x74*(-x131*x23 - x133*x15)
    H[9, 10] = -x133*x29*x74 + x138*x218 + x144*x217 + x162*x215 + x184*x216
    H[10, 9] = H[9, 10]
    H[9, 11] = -x131*x28*x74 + x147*x218 + x151*x217 + x163*x215 + x187*x216
    H[11, 9] = H[9, 11]
    H[10, 10] = 2*x138*x221 + x162*x219 + x184*x220 + x74*(-x130*x22 - x141*x29)
    H[10, 11] = -x130*x16*x74 + x138*x222 + x147*x221 + x163*x219 + x187*x220
    H[11, 10] = H[10, 11]
    H[11, 11] = x147*x163*x43 + 2*x147*x222 + x151*x169*x187 + x74*(-x140*x28 - x148*x16)
    return g, H

@njit(cache=True)
def line_line_grad_hess(x):
    x0 = x[0]
    x1 = x[1]
    x2 = x[2]
    x3 = x[3]
    x4 = x[4]
    x5 = x[5]
    x6 = x[6]
    x7 = x[7]
    x8 = x[8]
    x9 = x[9]
    x10 = x[10]
    x11 = x[11]
    x12 = -x8
    x13 = x11 + x12
    x14 = -x7
    x15 = -x1 - x14
    x16 = x13*x15
    x17 = x10 + x14
    x18 = -x17
    x19 = -x12 - x2
    x20 = x18*x19
    x21 = x1 - x4
    x22 = -x21
    x23 = x13*x22
    x24 = 2*x23
    x25 = x2 - x5
    x26 = -x25
    x27 = x17*x26
    x28 = 2*x27
    x29 = -x24 + x28
    x30 = 2*x16 + 2*x20 + x29
    x31 = x0 - x3
    x32 = -x31
    x33 = x17*x32
    x34 = x6 - x9
    x35 = -x34
    x36 = x22*x35
    x37 = x33 - x36
    x38 = x23 - x27
    x39 = x13*x32
    x40 = x26*x35
    x41 = x39 - x40
    x42 = -x41
    x43 = x37**2 + x38**2 + x42**2
    x44 = 1/x43
    x45 = -x0 + x6
    x46 = x15*x42 + x19*x37 + x38*x45
    x47 = x44*x46
    x48 = -2*x7
    x49 = 2*x10
    x50 = x48 + x49
    x51 = -x50
    x52 = x37*x51
    x53 = -2*x8
    x54 = 2*x11
    x55 = x53 + x54
    x56 = x42*x55
    x57 = -x52 - x56
    x58 = x43**(-2)
    x59 = x46**2
    x60 = x58*x59
    x61 = -x13
    x62 = x45*x61
    x63 = x19*x35
    x64 = 2*x40
    x65 = 2*x39
    x66 = -x64 + x65
    x67 = 2*x62 + 2*x63 + x66
    x68 = -x55
    x69 = x38*x68
    x70 = -2*x9
    x71 = 2*x6
    x72 = x70 + x71
    x73 = -x72
    x74 = x37*x73
    x75 = -x69 - x74
    x76 = x17*x45
    x77 = x15*x34
    x78 = 2*x33
    x79 = 2*x36
    x80 = -x78 + x79
    x81 = 2*x76 + 2*x77 + x80
    x82 = x38*x50
    x83 = x42*x72
    x84 = -x82 - x83
    x85 = x17*x19
    x86 = x15*x61
    x87 = 2*x85 + 2*x86
    x88 = x42*x68
    x89 = x37*x50
    x90 = -x88 - x89
    x91 = x13*x45
    x92 = x19*x34
    x93 = 2*x91 + 2*x92
    x94 = x38*x55
    x95 = x37*x72
    x96 = -x94 - x95
    x97 = x18*x45
    x98 = x15*x35
    x99 = 2*x97 + 2*x98
    x100 = x38*x51
    x101 = x42*x73
    x102 = -x100 - x101
    x103 = x15*x25
    x104 = x19*x22
    x105 = x24 - x28
    x106 = 2*x103 + 2*x104 + x105
    x107 = 2*x4
    x108 = -x107
    x109 = 2*x1
    x110 = x108 + x109
    x111 = -x110
    x112 = x111*x37
    x113 = 2*x5
    x114 = -x113
    x115 = 2*x2
    x116 = x114 + x115
    x117 = x116*x42
    x118 = -x112 - x117
    x119 = x19*x31
    x120 = x26*x45
    x121 = x64 - x65
    x122 = 2*x119 + 2*x120 + x121
    x123 = -x116
    x124 = x123*x38
    x125 = 2*x3
    x126 = 2*x0
    x127 = -x125 + x126
    x128 = x127*x37
    x129 = -x124 - x128
    x130 = x21*x45
    x131 = x15*x32
    x132 = x78 - x79
    x133 = 2*x130 + 2*x131 + x132
    x134 = -x127
    x135 = x134*x42
    x136 = x110*x38
    x137 = -x135 - x136
    x138 = x19*x21
    x139 = x15*x26
    x140 = 2*x138 + 2*x139
    x141 = x123*x42
    x142 = x110*x37
    x143 = -x141 - x142
    x144 = x25*x45
    x145 = x19*x32
    x146 = 2*x144 + 2*x145
    x147 = x134*x37
    x148 = x116*x38
    x149 = -x147 - x148
    x150 = x15*x31
    x151 = x22*x45
    x152 = 2*x150 + 2*x151
    x153 = x111*x38
    x154 = x127*x42
    x155 = -x153 - x154
    x156 = x30*x44
    x157 = x13*x55
    x158 = x18*x51
    x159 = x59/x43**3
    x160 = x159*x57
    x161 = x46*x58
    x162 = x161*x57
    x163 = x41 + x62 + x63
    x164 = -2*x69 - 2*x74
    x165 = x161*x30
    x166 = x51*x60
    x167 = -x33 + x36 + x76 + x77
    x168 = -2*x82 - 2*x83
    x169 = x55*x60
    x170 = x85 + x86
    x171 = -2*x88 - 2*x89
    x172 = x91 + x92
    x173 = -2*x94 - 2*x95
    x174 = x97 + x98
    x175 = -2*x100 - 2*x101
    x176 = x103 + x104 + x38
    x177 = x25*x55
    x178 = x22*x51
    x179 = -2*x112 - 2*x117
    x180 = x114 + x54
    x181 = x119 + x120 - x39 + x40
    x182 = -2*x124 - 2*x128
    x183 = x108 + x49
    x184 = x130 + x131 + x37
    x185 = -2*x135 - 2*x136
    x186 = x138 + x139
    x187 = x21*x51
    x188 = x26*x55
    x189 = -2*x141 - 2*x142
    x190 = x113 + x53
    x191 = x144 + x145
    x192 = -2*x147 - 2*x148
    x193 = x107 + x48
    x194 = x150 + x151
    x195 = -2*x153 - 2*x154
    x196 = x44*x67
    x197 = x61*x68
    x198 = x35*x73
    x199 = x159*x75
    x200 = x161*x75
    x201 = x161*x67
    x202 = x17*x60
    x203 = x60*x68
    x204 = x31*x73
    x205 = x26*x68
    x206 = x125 + x70
    x207 = x25*x68
    x208 = x32*x73
    x209 = -x71
    x210 = x125 + x209
    x211 = x44*x81
    x212 = x17*x50
    x213 = x34*x72
    x214 = x159*x84
    x215 = x161*x81
    x216 = x161*x84
    x217 = x50*x60
    x218 = x21*x50
    x219 = x32*x72
    x220 = x31*x72
    x221 = x22*x50
    x222 = x44*x87
    x223 = x159*x90
    x224 = x161*x90
    x225 = x161*x87
    x226 = -x115 + x54
    x227 = x109 - x49
    x228 = x115 + x53
    x229 = x109 + x48
    x230 = x44*x93
    x231 = x159*x96
    x232 = x161*x93
    x233 = x161*x96
    x234 = x126 + x70
    x235 = x126 + x209
    x236 = x44*x99
    x237 = x102*x159
    x238 = x161*x99
    x239 = x102*x161
    x240 = x106*x44
    x241 = x116*x25
    x242 = x111*x22
    x243 = x118*x159
    x244 = x118*x161
    x245 = x106*x161
    x246 = x111*x60
    x247 = x116*x60
    x248 = x122*x44
    x249 = x127*x31
    x250 = x123*x26
    x251 = x129*x159
    x252 = x122*x161
    x253 = x129*x161
    x254 = x21*x60
    x255 = x123*x60
    x256 = x133*x44
    x257 = x110*x21
    x258 = x134*x32
    x259 = x137*x159
    x260 = x137*x161
    x261 = x133*x161
    x262 = x110*x60
    x263 = x140*x44
    x264 = x143*x159
    x265 = x140*x161
    x266 = x143*x161
    x267 = x146*x44
    x268 = x149*x159
    x269 = x149*x161
    x270 = x155*x161
    g = np.empty(12)
    g[0] = x30*x47 + x57*x60
    g[1] = x47*x67 + x60*x75
    g[2] = x47*x81 + x60*x84
    g[3] = x47*x87 + x60*x90
    g[4] = x47*x93 + x60*x96
    g[5] = x102*x60 + x47*x99
    g[6] = x106*x47 + x118*x60
    g[7] = x122*x47 + x129*x60
    g[8] = x133*x47 + x137*x60
    g[9] = x140*x47 + x143*x60
    g[10] = x146*x47 + x149*x60
    g[11] = x152*x47 + x155*x60
    H = np.empty((12, 12))
    H[0, 0] = x156*(x16 + x20 - x23 + x27) + x160*(-2*x52 - 2*x56) + 2*x162*x30 + x60*(-x157 - x158)
    H[0, 1] = x156*x163 + x160*x164 + x162*x67 + x165*x75 - x166*x35
    H[1, 0] = H[0, 1]
    H[0, 2] = x156*x167 + x160*x168 + x162*x81 + x165*x84 - x169*x34
    H[2, 0] = H[0, 2]
    H[0, 3] = x156*x170 + x160*x171 + x162*x87 + x165*x90 + x60*(-x17*x51 - x55*x61)
    H[3, 0] = H[0, 3]
    H[0, 4] = x156*x172 + x160*x173 + x162*x93 + x165*x96 - x166*x34 + x47*x68
    H[4, 0] = H[0, 4]
    H[0, 5] = x102*x165 + x156*x174 + x160*x175 + x162*x99 - x169*x35 + x47*x50
    H[5, 0] = H[0, 5]
    H[0, 6] = x106*x162 + x118*x165 + x156*x176 + x160*x179 + x60*(-x177 - x178)
    H[6, 0] = H[0, 6]
    H[0, 7] = x122*x162 + x129*x165 + x156*x181 + x160*x182 + x180*x47 + x60*(-x132 - x31*x51)
    H[7, 0] = H[0, 7]
    H[0, 8] = x133*x162 + x137*x165 + x156*x184 + x160*x185 - x183*x47 + x60*(-x32*x55 - x66)
    H[8, 0] = H[0, 8]
    H[0, 9] = x140*x162 + x143*x165 + x156*x186 + x160*x189 + x60*(-x187 - x188)
    H[9, 0] = H[0, 9]
    H[0, 10] = x146*x162 + x149*x165 + x156*x191 + x160*x192 + x190*x47 + x60*(-x32*x51 - x80)
    H[10, 0] = H[0, 10]
    H[0, 11] = x152*x162 + x155*x165 + x156*x194 + x160*x195 - x193*x47 + x60*(-x121 - x31*x55)
    H[11, 0] = H[0, 11]
    H[1, 1] = x163*x196 + x164*x199 + 2*x200*x67 + x60*(-x197 - x198)
    H[1, 2] = x167*x196 + x168*x199 + x200*x81 + x201*x84 - x202*x68
    H[2, 1] = H[1, 2]
    H[1, 3] = x170*x196 + x171*x199 + x200*x87 + x201*x90 - x202*x73 + x47*x55
    H[3, 1] = H[1, 3]
    H[1, 4] = x172*x196 + x173*x199 + x200*x93 + x201*x96 + x60*(-x13*x68 - x34*x73)
    H[4, 1] = H[1, 4]
    H[1, 5] = x102*x201 + x174*x196 + x175*x199 - x18*x203 + x200*x99 + x47*x72
    H[5, 1] = H[1, 5]
    H[1, 6] = x106*x200 + x118*x201 + x176*x196 + x179*x199 - x180*x47 + x60*(-x22*x73 - x80)
    H[6, 1] = H[1, 6]
    H[1, 7] = x122*x200 + x129*x201 + x181*x196 + x182*x199 + x60*(-x204 - x205)
    H[7, 1] = H[1, 7]
    H[1, 8] = x133*x200 + x137*x201 + x184*x196 + x185*x199 - x206*x47 + x60*(-x105 - x21*x68)
    H[8, 1] = H[1, 8]
    H[1, 9] = x140*x200 + x143*x201 + x186*x196 + x189*x199 - x190*x47 + x60*(-x132 - x21*x73)
    H[9, 1] = H[1, 9]
    H[1, 10] = x146*x200 + x149*x201 + x191*x196 + x192*x199 + x60*(-x207 - x208)
    H[10, 1] = H[1, 10]
    H[1, 11] = x152*x200 + x155*x201 + x194*x196 + x195*x199 + x210*x47 + x60*(-x22*x68 - x29)
    H[11, 1] = H[1, 11]
    H[2, 2] = x167*x211 + x168*x214 + 2*x215*x84 + x60*(-x212 - x213)
    H[2, 3] = x170*x211 + x171*x214 + x215*x90 + x216*x87 + x47*x51 - x60*x61*x72
    H[3, 2] = H[2, 3]
    H[2, 4] = -x13*x217 + x172*x211 + x173*x214 + x215*x96 + x216*x93 + x47*x73
    H[4, 2] = H[2, 4]
    H[2, 5] = x102*x215 + x174*x211 + x175*x214 + x216*x99 + x60*(-x18*x50 - x35*x72)
    H[5, 2] = H[2, 5]
    H[2, 6] = x106*x216 + x118*x215 + x176*x211 + x179*x214 + x183*x47 + x60*(-x121 - x25*x72)
    H[6, 2] = H[2, 6]
    H[2, 7] = x122*x216 + x129*x215 + x181*x211 + x182*x214 + x206*x47 + x60*(-x26*x50 - x29)
    H[7, 2] = H[2, 7]
    H[2, 8] = x133*x216 + x137*x215 + x184*x211 + x185*x214 + x60*(-x218 - x219)
    H[8, 2] = H[2, 8]
    H[2, 9] = x140*x216 + x143*x215 + x186*x211 + x189*x214 + x193*x47 + x60*(-x26*x72 - x66)
    H[9, 2] = H[2, 9]
    H[2, 10] = x146*x216 + x149*x215 + x191*x211 + x192*x214 - x210*x47 + x60*(-x105 - x25*x50)
    H[10, 2] = H[2, 10]
    H[2, 11] = x152*x216 + x155*x215 + x194*x211 + x195*x214 + x60*(-x220 - x221)
    H[11, 2] = H[2, 11]
    H[3, 3] = x170*x222 + x171*x223 + 2*x224*x87 + x60*(-x197 - x212)
    H[3, 4] = x172*x222 + x173*x223 - x217*x34 + x224*x93 + x225*x96
    H[4, 3] = H[3, 4]
    H[3, 5] = x102*x225 + x174*x222 + x175*x223 - x203*x35 + x224*x99
    H[5, 3] = H[3, 5]
    H[3, 6] = x106*x224 + x118*x225 + x176*x222 + x179*x223 + x60*(-x207 - x221)
    H[6, 3] = H[3, 6]
    H[3, 7] = x122*x224 + x129*x225 + x181*x222 + x182*x223 - x226*x47 + x60*(-x31*x50 - x80)
    H[7, 3] = H[3, 7]
    H[3, 8] = x133*x224 + x137*x225 + x184*x222 + x185*x223 - x227*x47 + x60*(-x121 - x32*x68)
    H[8, 3] = H[3, 8]
    H[3, 9] = x140*x224 + x143*x225 + x186*x222 + x189*x223 + x60*(-x205 - x218)
    H[9, 3] = H[3, 9]
    H[3, 10] = x146*x224 + x149*x225 + x191*x222 + x192*x223 - x228*x47 + x60*(-x132 - x32*x50)
    H[10, 3] = H[3, 10]
    H[3, 11] = x152*x224 + x155*x225 + x194*x222 + x195*x223 + x229*x47 + x60*(-x31*x68 - x66)
    H[11, 3] = H[3, 11]
    H[4, 4] = x172*x230 + x173*x231 + 2*x232*x96 + x60*(-x157 - x213)
    H[4, 5] = x102*x232 - x169*x18 + x174*x230 + x175*x231 + x233*x99
    H[5, 4] = H[4, 5]
    H[4, 6] = x106*x233 + x118*x232 + x176*x230 + x179*x231 + x226*x47 + x60*(-x132 - x22*x72)
    H[6, 4] = H[4, 6]
    H[4, 7] = x122*x233 + x129*x232 + x181*x230 + x182*x231 + x60*(-x188 - x220)
    H[7, 4] = H[4, 7]
    H[4, 8] = x133*x233 + x137*x232 + x184*x230 + x185*x231 + x234*x47 + x60*(-x21*x55 - x29)
    H[8, 4] = H[4, 8]
    H[4, 9] = x140*x233 + x143*x232 + x186*x230 + x189*x231 + x228*x47 + x60*(-x21*x72 - x80)
    H[9, 4] = H[4, 9]
    H[4, 10] = x146*x233 + x149*x232 + x191*x230 + x192*x231 + x60*(-x177 - x219)
    H[10, 4] = H[4, 10]
    H[4, 11] = x152*x233 + x155*x232 + x194*x230 + x195*x231 - x235*x47 + x60*(-x105 - x22*x55)
    H[11, 4] = H[4, 11]
    H[5, 5] = 2*x102*x238 + x174*x236 + x175*x237 + x60*(-x158 - x198)
    H[5, 6] = x106*x239 + x118*x238 + x176*x236 + x179*x237 + x227*x47 + x60*(-x25*x73 - x66)
    H[6, 5] = H[5, 6]
    H[5, 7] = x122*x239 + x129*x238 + x181*x236 + x182*x237 - x234*x47 + x60*(-x105 - x26*x51)
    H[7, 5] = H[5, 7]
    H[5, 8] = x133*x239 + x137*x238 + x184*x236 + x185*x237 + x60*(-x187 - x208)
    H[8, 5] = H[5, 8]
    H[5, 9] = x140*x239 + x143*x238 + x186*x236 + x189*x237 - x229*x47 + x60*(-x121 - x26*x73)
    H[9, 5] = H[5, 9]
    H[5, 10] = x146*x239 + x149*x238 + x191*x236 + x192*x237 + x235*x47 + x60*(-x25*x51 - x29)
    H[10, 5] = H[5, 10]
    H[5, 11] = x152*x239 + x155*x238 + x194*x236 + x195*x237 + x60*(-x178 - x204)
    H[11, 5] = H[5, 11]
    H[6, 6] = 2*x106*x244 + x176*x240 + x179*x243 + x60*(-x241 - x242)
    H[6, 7] = x122*x244 + x129*x245 + x181*x240 + x182*x243 - x246*x31
    H[7, 6] = H[6, 7]
    H[6, 8] = x133*x244 + x137*x245 + x184*x240 + x185*x243 - x247*x32
    H[8, 6] = H[6, 8]
    H[6, 9] = x140*x244 + x143*x245 + x186*x240 + x189*x243 + x60*(-x111*x21 - x116*x26)
    H[9, 6] = H[6, 9]
    H[6, 10] = x116*x47 + x146*x244 + x149*x245 + x191*x240 + x192*x243 - x246*x32
    H[10, 6] = H[6, 10]
    H[6, 11] = x111*x47 + x152*x244 + x155*x245 + x194*x240 + x195*x243 - x247*x31
    H[11, 6] = H[6, 11]
    H[7, 7] = 2*x129*x252 + x181*x248 + x182*x251 + x60*(-x249 - x250)
    H[7, 8] = -x123*x254 + x133*x253 + x137*x252 + x184*x248 + x185*x251
    H[8, 7] = H[7, 8]
    H[7, 9] = x123*x47 - x127*x254 + x140*x253 + x143*x252 + x186*x248 + x189*x251
    H[9, 7] = H[7, 9]
    H[7, 10] = x146*x253 + x149*x252 + x191*x248 + x192*x251 + x60*(-x123*x25 - x127*x32)
    H[10, 7] = H[7, 10]
    H[7, 11] = x127*x47 + x152*x253 + x155*x252 + x194*x248 + x195*x251 - x22*x255
    H[11, 7] = H[7, 11]
    H[8, 8] = 2*x133*x260 + x184*x256 + x185*x259 + x60*(-x257 - x258)
    H[8, 9] = x110*x47 - x134*x26*x60 + x140*x260 + x143*x261 + x186*x256 + x189*x259
    H[9, 8] = H[8, 9]
    H[8, 10] = x134*x47 + x146*x260 + x149*x261 + x191*x256 + x192*x259 - x25*x262
    H[10, 8] = H[8, 10]
    H[8, 11] = x152*x260 + x155*x261 + x194*x256 + x195*x259 + x60*(-x110*x22 - x134*x31)
    H[11, 8] = H[8, 11]
    H[9, 9] = 2*x143*x265 + x186*x263 + x189*x264 + x60*(-x250 - x257)
    H[9, 10] = x146*x266 + x149*x265 + x191*x263 + x192*x264 - x262*x32
    H[10, 9] = H[9, 10]
    H[9, 11] = x152*x266 + x155*x265 + x194*x263 + x195*x264 - x255*x31
    H[11, 9] = H[9, 11]
    H[10, 10] = 2*x146*x269 + x191*x267 + x192*x268 + x60*(-x241 - x258)
    H[10, 11] = x146*x270 + x152*x269 + x194*x267 + x195*x268 - x22*x247
    H[11, 10] = H[10, 11]
    H[11, 11] = x152*x194*x44 + 2*x152*x270 + x155*x159*x195 + x60*(-x242 - x249)
    return g, H
